"""
Unit tests for data models
"""

import math

import numpy as np
import pytest

# Mark all tests in this module as unit tests
pytestmark = pytest.mark.unit


class TestGateOp:
    """Test suite for GateOp"""

    def test_rotation_requires_angle(self):
        """Test that Ry and Rx refuse a missing angle"""
        from qaa.models.gate import GateKind, GateOp
        from qaa.utils.errors import CircuitError

        with pytest.raises(CircuitError):
            GateOp(GateKind.RY, 0)
        with pytest.raises(CircuitError):
            GateOp(GateKind.H, 0, 0.5)

    def test_ry_convention(self):
        """Test Ry(2t)|0> = cos t|0> + sin t|1>"""
        from qaa.models.gate import ry_matrix

        column = ry_matrix(2 * math.pi / 3)[:, 0]
        np.testing.assert_allclose(column, [0.5, math.sqrt(3) / 2], atol=1e-15)

    def test_validate_rejects_overlap_and_range(self):
        """Test validation of qubit indices"""
        from qaa.models.gate import GateKind, GateOp
        from qaa.utils.errors import CircuitError

        with pytest.raises(CircuitError):
            GateOp(GateKind.X, 1, controls=((1, 1),)).validate(2)
        with pytest.raises(CircuitError):
            GateOp(GateKind.X, 2).validate(2)
        with pytest.raises(CircuitError):
            GateOp(GateKind.X, 0, controls=((1, 2),)).validate(2)

    def test_inverse(self):
        """Test inverse of rotations and phase gates"""
        from qaa.models.gate import GateKind, GateOp

        op = GateOp(GateKind.RY, 0, 0.7, ((1, 0),))
        assert op.inverse().angle == -0.7
        assert op.inverse().controls == ((1, 0),)
        assert GateOp(GateKind.S, 0).inverse().kind is GateKind.SDG

    def test_dict_form(self):
        """Test to_dict/from_dict"""
        from qaa.models.gate import GateKind, GateOp

        op = GateOp(GateKind.RX, 2, 1.25, ((0, 1), (1, 0)))
        assert GateOp.from_dict(op.to_dict()) == op


class TestRegisterLayout:
    """Test suite for RegisterLayout"""

    def test_offsets_and_extra_qubits(self):
        """Test register placement and the extra-qubit count"""
        from qaa.models.layout import RegisterKind, RegisterLayout

        layout = RegisterLayout.of(('data', 3, RegisterKind.DATA), ('control', 2, RegisterKind.CONTROL),
                                   ('empty', 0, RegisterKind.WORK), ('work', 1, RegisterKind.WORK))
        assert layout.names == ['data', 'control', 'work']
        assert layout.qubits('control') == [3, 4]
        assert layout.num_qubits == 6
        assert layout.extra_qubits == 3

    def test_encode_is_most_significant_first(self):
        """Test that the first qubit of a register holds its top bit"""
        from qaa.models.layout import RegisterKind, RegisterLayout

        layout = RegisterLayout.of(('data', 3, RegisterKind.DATA), ('work', 1, RegisterKind.WORK))
        assert layout.encode({'data': 5}) == '1010'
        assert layout.decode('0111') == {'data': 3, 'work': 1}

    def test_duplicate_names_rejected(self):
        """Test duplicate register names"""
        from qaa.models.layout import RegisterKind, RegisterLayout
        from qaa.utils.errors import CircuitError

        with pytest.raises(CircuitError):
            RegisterLayout.of(('a', 1, RegisterKind.WORK), ('a', 2, RegisterKind.WORK))

    def test_value_must_fit(self):
        """Test pattern rejects values wider than the register"""
        from qaa.models.layout import RegisterKind, RegisterLayout
        from qaa.utils.errors import CircuitError

        layout = RegisterLayout.of(('data', 2, RegisterKind.DATA))
        with pytest.raises(CircuitError):
            layout.pattern({'data': 4})


class TestFlagPredicate:
    """Test suite for FlagPredicate"""

    def test_merge_overlap(self):
        """Test that merging overlapping predicates fails"""
        from qaa.models.circuit import FlagPredicate
        from qaa.utils.errors import FlagError

        a = FlagPredicate(((0, 1),))
        assert a.merged(FlagPredicate(((1, 0),))).as_dict() == {0: 1, 1: 0}
        with pytest.raises(FlagError):
            a.merged(FlagPredicate(((0, 0),)))

    def test_invalid_bits(self):
        """Test that repeated qubits and non-binary bits are rejected"""
        from qaa.models.circuit import FlagPredicate
        from qaa.utils.errors import FlagError

        with pytest.raises(FlagError):
            FlagPredicate(((0, 1), (0, 0)))
        with pytest.raises(FlagError):
            FlagPredicate(((0, 2),))


class TestCircuit:
    """Test suite for Circuit"""

    def test_dict_form(self):
        """Test that a built circuit survives to_dict/from_dict"""
        from qaa.builders.primitives import add_block
        from qaa.models.circuit import Circuit

        circuit = add_block(0.3, 0.4)
        restored = Circuit.from_dict(circuit.to_dict())
        assert restored.ops == circuit.ops
        assert restored.flag == circuit.flag
        assert restored.layout == circuit.layout


class TestStateVector:
    """Test suite for StateVector"""

    def test_shape_mismatch(self):
        """Test that amplitude length must match the qubit count"""
        from qaa.models.state import StateVector
        from qaa.utils.errors import SimulationError

        with pytest.raises(SimulationError):
            StateVector(2, np.zeros(3))

    def test_to_dict_lists_nonzero_amplitudes(self):
        """Test the JSON form of a state"""
        from qaa.models.state import StateVector

        state = StateVector(2, [0.6, 0, 0, 0.8j])
        data = state.to_dict()
        assert data['amplitudes'] == [{'re': 0.6, 'im': 0.0, 'basis': '00'},
                                      {'re': 0.0, 'im': 0.8, 'basis': '11'}]

    def test_register_values(self):
        """Test support entries split into register values"""
        from qaa.models.layout import RegisterKind, RegisterLayout
        from qaa.models.state import StateVector

        layout = RegisterLayout.of(('data', 1, RegisterKind.DATA), ('work', 1, RegisterKind.WORK))
        state = StateVector(2, [0.6, 0, 0, 0.8j])
        assert state.support() == ['00', '11']
        assert state.register_values(layout) == [{'data': 0, 'work': 0}, {'data': 1, 'work': 1}]
        assert state.to_dict(layout=layout)['amplitudes'][1]['registers'] == {'data': 1, 'work': 1}


class TestPlans:
    """Test suite for construction parameter models"""

    def test_prep_spec_control_width(self):
        """Test m per variant"""
        from qaa.models.plans import PrepSpec

        assert PrepSpec(5, 'basic').m == 3
        assert PrepSpec(5, 'alternative').m == 5
        assert PrepSpec(4, 'improved').m == 2

    def test_prep_spec_rejects_small_n(self):
        """Test n >= 2"""
        from qaa.models.plans import PrepSpec
        from qaa.utils.errors import ValidationError

        with pytest.raises(ValidationError):
            PrepSpec(1)

    def test_poisson_case_rejected(self):
        """Test that y = 1 is refused with a message naming the case"""
        from qaa.models.plans import ToeplitzSystem
        from qaa.utils.errors import ValidationError

        with pytest.raises(ValidationError, match='Poisson'):
            ToeplitzSystem(2, 1)
        with pytest.raises(ValidationError):
            ToeplitzSystem(2, 1.5)

    def test_reciprocal_plan_for_system(self):
        """Test m = ceil(log2(4n + 6 + log2 y))"""
        from qaa.models.plans import ReciprocalPlan, ToeplitzSystem

        plan = ReciprocalPlan.for_system(ToeplitzSystem(2, 2))
        assert plan.m == 4
        assert plan.k == 16
        assert plan.eps_bound == 2.0 ** -15
        assert ReciprocalPlan.for_system(ToeplitzSystem(3, 3)).m == 5

    def test_angle_factor_range(self):
        """Test that angle factors lie in [0, pi]"""
        from qaa.models.plans import AngleFactor
        from qaa.utils.errors import ValidationError

        assert AngleFactor.from_cosine(0.5).theta == pytest.approx(math.pi / 3)
        with pytest.raises(ValidationError):
            AngleFactor(4.0)


class TestPiecewisePolynomial:
    """Test suite for PiecewisePolynomial and QramStub"""

    def test_subdomain_is_left_closed(self):
        """Test breakpoint ownership"""
        from qaa.models.polynomial import PiecewisePolynomial
        from qaa.utils.errors import FitError

        poly = PiecewisePolynomial((0.0, 0.5, 1.0), 0, ((1,), (2,)), 4)
        assert poly.subdomain(0.0) == 0
        assert poly.subdomain(0.5) == 1
        with pytest.raises(FitError):
            poly.subdomain(1.0)

    def test_coefficient_magnitude_limit(self):
        """Test |q| < 2^n_bits"""
        from qaa.models.polynomial import PiecewisePolynomial
        from qaa.utils.errors import FitError

        with pytest.raises(FitError):
            PiecewisePolynomial((0.0, 1.0), 0, ((16,),), 4)

    def test_qram_missing_row(self):
        """Test that a missing row raises QramError"""
        from qaa.models.polynomial import QramStub
        from qaa.utils.errors import QramError

        with pytest.raises(QramError):
            QramStub({}, 4).row(0)

    def test_dict_form(self):
        """Test to_dict/from_dict keeps integer coefficients"""
        from qaa.models.polynomial import PiecewisePolynomial

        poly = PiecewisePolynomial((0.0, 0.5, 1.0), 1, ((3, -5), (7, 0)), 4, 2.0, 'tanh')
        assert PiecewisePolynomial.from_dict(poly.to_dict()) == poly


class TestResourceReport:
    """Test suite for ResourceReport"""

    def test_dict_form(self):
        """Test string keys for controlled rotations"""
        from qaa.models.resources import ResourceReport

        report = ResourceReport(5, 2, {'1q': 1, '2q': 2, 'toffoli': 0, 'multi_controlled': 3}, {1: 2, 3: 3}, 12)
        data = report.to_dict()
        assert data['controlled_rotations'] == {'1': 2, '3': 3}
        assert data['multi_controlled_rotations'] == 3
        assert ResourceReport.from_dict(data) == report

"""
Unit tests for the cost model and resource counting
"""

import math

import numpy as np
import pytest

# Mark all tests in this module as unit tests
pytestmark = pytest.mark.unit


class TestCostModel:
    """Test suite for CostModel"""

    def test_three_controlled_rotation(self):
        """Test the Toffoli ladder of a 3-controlled Ry"""
        from qaa.models.gate import GateKind, GateOp
        from qaa.sim.cost_model import CostModel, gate_class

        op = GateOp(GateKind.RY, 3, 0.4, ((0, 1), (1, 0), (2, 1)))
        model = CostModel.default()
        ops = model.decompose(op, [4, 5])
        classes = [gate_class(o) for o in ops]
        assert classes.count('toffoli') == 4
        assert classes.count('2q') == 1
        assert len(ops) == 5
        assert model.toffoli_cost(op) == 4
        assert model.ancillas_needed(op) == 2

    def test_native_model(self):
        """Test that the native model keeps multi-controlled gates whole"""
        from qaa.models.gate import GateKind, GateOp
        from qaa.sim.cost_model import CostModel

        op = GateOp(GateKind.RY, 3, 0.4, ((0, 1), (1, 1), (2, 1)))
        model = CostModel.native()
        assert model.decompose(op, []) == [op]
        assert model.toffoli_cost(op) == 1

    def test_too_few_ancillas(self):
        """Test that decomposition needs c - 1 ancillas"""
        from qaa.models.gate import GateKind, GateOp
        from qaa.sim.cost_model import CostModel
        from qaa.utils.errors import CircuitError

        op = GateOp(GateKind.X, 3, controls=((0, 1), (1, 1), (2, 1)))
        with pytest.raises(CircuitError):
            CostModel.default().decompose(op, [4])

    def test_unknown_model(self):
        """Test by_name with an unknown name"""
        from qaa.sim.cost_model import CostModel
        from qaa.utils.errors import CircuitError

        with pytest.raises(CircuitError):
            CostModel.by_name('magic')


class TestDecomposeCircuit:
    """Test suite for decompose_circuit"""

    def test_flag_amplitude_unchanged(self, simulator):
        """Test that the lowered circuit keeps the flag amplitude with ancillas at |0>"""
        from qaa.builders.stateprep import build_improved
        from qaa.sim.cost_model import decompose_circuit
        from qaa.sim.simulator import simulate_flag

        circuit = build_improved(4)
        lowered = decompose_circuit(circuit)
        assert lowered.num_qubits > circuit.num_qubits
        assert simulate_flag(lowered, {'data': 9}, simulator).real == pytest.approx(0.28125, abs=1e-10)

    def test_no_ancillas_when_elementary(self):
        """Test that an elementary circuit is returned unchanged"""
        from qaa.builders.primitives import add_block
        from qaa.sim.cost_model import decompose_circuit

        circuit = add_block(0.1, 0.2)
        assert decompose_circuit(circuit).layout == circuit.layout

    @pytest.mark.parametrize('controls', [2, 3, 4])
    @pytest.mark.parametrize('kind', ['ry', 'rx', 'x', 'z', 'h'])
    def test_single_gate_statevector(self, simulator, kind, controls):
        """Test the lowered gate reproduces the full statevector on every basis input"""
        from qaa.models.circuit import Circuit
        from qaa.models.gate import GateKind, GateOp
        from qaa.models.layout import RegisterKind, RegisterLayout
        from qaa.sim.cost_model import decompose_circuit

        kind = GateKind(kind)
        layout = RegisterLayout.of(('c', controls, RegisterKind.CONTROL), ('t', 1, RegisterKind.WORK))
        polarities = tuple((q, (q + 1) % 2) for q in range(controls))
        ops = [GateOp(GateKind.RY, controls, 0.9),
               GateOp(kind, controls, 0.7 if kind.is_rotation else None, polarities)]
        self._assert_same_statevectors(simulator, Circuit(layout, ops), decompose_circuit(Circuit(layout, ops)))

    @pytest.mark.parametrize('name', ['improved', 'constant', 'reciprocal'])
    def test_builder_statevector(self, simulator, name):
        """Test whole builder circuits with up to four controls per gate"""
        from qaa.builders.linsys import build_reciprocal_circuit
        from qaa.builders.stateprep import build_improved, load_constant
        from qaa.models.plans import ReciprocalPlan, ToeplitzSystem
        from qaa.sim.cost_model import decompose_circuit

        circuit = {
            'improved': lambda: build_improved(3),
            'constant': lambda: load_constant(3, 5),
            'reciprocal': lambda: build_reciprocal_circuit(ToeplitzSystem(2, 3), ReciprocalPlan(2, 2, 3)),
        }[name]()
        assert max(op.num_controls for op in circuit.ops) <= 4
        self._assert_same_statevectors(simulator, circuit, decompose_circuit(circuit))

    @staticmethod
    def _assert_same_statevectors(simulator, circuit, lowered):
        n = circuit.num_qubits
        extra = lowered.num_qubits - n
        for index in range(2 ** n):
            bits = format(index, f'0{n}b')
            native = simulator.run(circuit, bits).amplitudes
            split = simulator.run(lowered, bits + '0' * extra).amplitudes.reshape(2 ** n, 2 ** extra)
            np.testing.assert_allclose(split[:, 0], native, atol=1e-10)
            np.testing.assert_allclose(split[:, 1:], 0.0, atol=1e-10)


class TestCountResources:
    """Test suite for count_resources"""

    def test_empty_circuit(self):
        """Test that an empty circuit counts nothing"""
        from qaa.models.circuit import Circuit
        from qaa.models.layout import RegisterKind, RegisterLayout
        from qaa.sim.cost_model import count_resources

        report = count_resources(Circuit(RegisterLayout.of(('q', 2, RegisterKind.WORK))))
        assert report.total_gates == 0
        assert report.toffoli_equivalent == 0
        assert report.rotations_by_controls == {}

    def test_basic_extra_qubits(self):
        """Test extra qubits of the basic preparation at n=4"""
        from qaa.builders.stateprep import build_basic
        from qaa.sim.cost_model import count_resources

        assert count_resources(build_basic(4)).extra_qubits == 3

    def test_improved_multi_controlled_rotations(self):
        """Test that the improved preparation uses exactly n multi-controlled rotations"""
        from qaa.builders.stateprep import build_improved
        from qaa.sim.cost_model import count_resources

        for n in (4, 8):
            assert count_resources(build_improved(n)).multi_controlled_rotations == n

    def test_improved_toffoli_counts(self):
        """Test m^2 + 3m + 2(m+1)(n-m) Toffoli-equivalents"""
        from qaa.builders.stateprep import build_improved
        from qaa.sim.cost_model import count_resources

        counts = {n: count_resources(build_improved(n)).toffoli_equivalent for n in (4, 8, 16, 32, 64)}
        assert counts == {4: 22, 8: 58, 16: 148, 32: 364, 64: 866}

    def test_improved_shared_hadamards(self):
        """Test the control-register Hadamards sit outside the lcu selection"""
        from qaa.builders.stateprep import build_improved
        from qaa.models.gate import GateKind

        circuit = build_improved(8)
        hadamards = [op for op in circuit.ops if op.kind is GateKind.H]
        control = set(circuit.layout.qubits('control'))
        assert sum(1 for op in hadamards if op.target in control) == 2 * len(control)
        assert all(op.num_controls == 0 for op in hadamards)

    @pytest.mark.parametrize('n', [8, 16, 32])
    def test_scaling_ratios(self, n):
        """Test doubling n grows the improved count by at most 2.6 and the alternative by at least 3.4"""
        from qaa.builders.stateprep import build_alternative, build_improved
        from qaa.sim.cost_model import count_resources

        improved = [count_resources(build_improved(k)).toffoli_equivalent for k in (n, 2 * n)]
        alternative = [count_resources(build_alternative(k)).toffoli_equivalent for k in (n, 2 * n)]
        assert improved[1] / improved[0] <= 2.6
        assert alternative[1] / alternative[0] >= 3.4

    def test_scaling_from_four(self):
        """Test n=4 to 8, where m steps from 2 to 3: improved stays within 2(1 + 1/m) and alternative reaches 3.4"""
        from qaa.builders.stateprep import build_alternative, build_improved
        from qaa.sim.cost_model import count_resources

        improved = [count_resources(build_improved(k)).toffoli_equivalent for k in (4, 8)]
        alternative = [count_resources(build_alternative(k)).toffoli_equivalent for k in (4, 8)]
        assert improved[1] / improved[0] <= 2 * (1 + 1 / 2)
        assert improved[1] / improved[0] < alternative[1] / alternative[0]
        assert alternative[1] / alternative[0] >= 3.4

    def test_alternative_quadratic_count(self):
        """Test n(n+1) Toffoli-equivalents for the alternative preparation"""
        from qaa.builders.stateprep import build_alternative
        from qaa.sim.cost_model import count_resources

        assert count_resources(build_alternative(8)).toffoli_equivalent == 72

    def test_native_counts_one_per_gate(self):
        """Test the native model prices each multi-controlled gate once"""
        from qaa.builders.stateprep import build_improved
        from qaa.sim.cost_model import CostModel, count_resources

        report = count_resources(build_improved(8), CostModel.native())
        assert report.toffoli_equivalent == report.counts['multi_controlled'] + report.counts['toffoli']
        assert report.cost_model == 'native'

    def test_cascade_gate_count(self):
        """Test one controlled rotation per data bit"""
        from qaa.builders.primitives import binary_controlled_ry
        from qaa.sim.cost_model import count_resources

        report = count_resources(binary_controlled_ry(5))
        assert report.rotations_by_controls == {1: 5}
        assert report.total_gates == 5
        assert math.isclose(binary_controlled_ry(5).meta['scale'], math.pi / 16)

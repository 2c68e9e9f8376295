"""
Integration tests for OpenQASM export and re-import
"""

import math

import pytest

# Mark all tests in this module as integration tests
pytestmark = pytest.mark.integration


class TestExport:
    """Test suite for export_qasm"""

    def test_single_hadamard(self):
        """Test header, register and statement of a one-gate circuit"""
        from qaa.models.circuit import Circuit, FlagPredicate
        from qaa.models.gate import GateKind, GateOp
        from qaa.models.layout import RegisterKind, RegisterLayout
        from qaa.sim.qasm import export_qasm

        circuit = Circuit(RegisterLayout.of(('q', 1, RegisterKind.DATA)), [GateOp(GateKind.H, 0)],
                          FlagPredicate(), {})
        text = export_qasm(circuit)
        assert text.startswith('OPENQASM 2.0;\ninclude "qelib1.inc";')
        assert 'qreg q[1];' in text
        assert 'h q[0];' in text

    def test_multi_controlled_gates_are_lowered(self):
        """Test an extra ancilla register appears for a 3-controlled rotation"""
        from qaa.models.circuit import Circuit, FlagPredicate
        from qaa.models.gate import GateKind, GateOp
        from qaa.models.layout import RegisterKind, RegisterLayout
        from qaa.sim.qasm import export_qasm

        layout = RegisterLayout.of(('c', 3, RegisterKind.CONTROL), ('t', 1, RegisterKind.WORK))
        op = GateOp(GateKind.RY, 3, 0.5, ((0, 1), (1, 0), (2, 1)))
        text = export_qasm(Circuit(layout, [op], FlagPredicate(), {}))
        assert 'qreg mcx_anc[2];' in text
        assert text.count('ccx') == 4

    def test_invalid_text(self):
        """Test unparsable QASM"""
        from qaa.sim.qasm import import_qasm
        from qaa.utils.errors import QasmError

        with pytest.raises(QasmError):
            import_qasm('OPENQASM 2.0;\nqreg q[1];\nfoo q[0];\n')


def _circuits():
    from qaa.builders.linsys import build_reciprocal_circuit
    from qaa.builders.polyeval import build_eval_circuit
    from qaa.builders.primitives import (add_block, binary_controlled_ry, lcu_combine, multiply_block,
                                         rotation_fragment)
    from qaa.builders.stateprep import load_constant, prepare
    from qaa.models.plans import ReciprocalPlan, ToeplitzSystem
    from qaa.models.polynomial import PiecewisePolynomial, QramStub

    poly = PiecewisePolynomial((0.0, 1.0), 1, ((5, -9),), 4)
    return [
        ('add', add_block(math.pi / 3, math.pi / 5), {}),
        ('multiply', multiply_block([0.4, 1.1, 2.0]), {}),
        ('basic', prepare('basic', 3), {'data': 5}),
        ('improved', prepare('improved', 4), {'data': 9}),
        ('alternative', prepare('alternative', 3), {'data': 6}),
        ('complex', prepare('complex', 2), {'data_re': 1, 'data_im': 3}),
        ('reciprocal', build_reciprocal_circuit(ToeplitzSystem(2, 2)), {'data': 1}),
        ('polyeval', build_eval_circuit(poly, QramStub.from_polynomial(poly), 0, 0.6), {}),
        ('cascade', binary_controlled_ry(3), {'data': 5}),
        ('constant', load_constant(5, 27), {}),
        ('weighted_lcu', lcu_combine([(1.0, rotation_fragment(0.3)), (2.0, rotation_fragment(1.1)),
                                      (0.5, rotation_fragment(2.0), True)], m=2), {}),
        ('reciprocal_product', build_reciprocal_circuit(ToeplitzSystem(2, 2), ReciprocalPlan(2, 2, 2),
                                                        variant='product'), {'data': 1}),
    ]


class TestRoundtrip:
    """Test suite for roundtrip_flag_amplitude"""

    @pytest.mark.parametrize('index', range(12))
    def test_flag_amplitude_survives(self, simulator, index):
        """Test direct and re-imported flag amplitudes agree within 1e-9"""
        from qaa.sim.qasm import roundtrip_flag_amplitude

        _, circuit, inputs = _circuits()[index]
        direct, reimported = roundtrip_flag_amplitude(circuit, inputs, simulator)
        assert abs(direct - reimported) <= 1e-9

    def test_register_kinds_restored(self):
        """Test import keeps register names and the given kinds"""
        from qaa.builders.stateprep import prepare
        from qaa.models.layout import RegisterKind
        from qaa.sim.qasm import export_qasm, import_qasm

        circuit = prepare('improved', 4)
        imported = import_qasm(export_qasm(circuit), {reg.name: reg.kind for reg in circuit.layout.registers})
        assert imported.layout.names[:len(circuit.layout.names)] == circuit.layout.names
        assert imported.layout.registers[0].kind == circuit.layout.registers[0].kind
        assert imported.layout.registers[-1].kind == RegisterKind.ANCILLA

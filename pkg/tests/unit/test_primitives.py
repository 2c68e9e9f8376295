"""
Unit tests for the amplitude arithmetic primitives
"""

import math

import numpy as np
import pytest

# Mark all tests in this module as unit tests
pytestmark = pytest.mark.unit


class TestMultiplyBlock:
    """Test suite for multiply_block"""

    @pytest.mark.parametrize('thetas,expected', [
        ((0.0, 0.0), 1.0),
        ((math.pi / 3, math.pi / 3), 0.25),
        ((math.pi / 3, math.pi / 4, math.pi / 6), 0.5 * math.sqrt(0.5) * math.sqrt(3) / 2),
    ])
    def test_product_of_cosines(self, simulator, thetas, expected):
        """Test flag amplitude equals the product of cosines"""
        from qaa.builders.primitives import multiply_block
        from qaa.sim.simulator import simulate_flag

        circuit = multiply_block(thetas)
        assert simulate_flag(circuit, {}, simulator).real == pytest.approx(expected, abs=1e-12)
        assert circuit.meta['closed_form'] == pytest.approx(expected, abs=1e-12)

    def test_random_angles(self, simulator, rng):
        """Test random angles in [0, pi] for k = 1..6 factors"""
        from qaa.builders.primitives import multiply_block
        from qaa.sim.simulator import simulate_flag

        for k in range(1, 7):
            for _ in range(3):
                thetas = rng.uniform(0.0, math.pi, size=k)
                amplitude = simulate_flag(multiply_block(thetas.tolist()), {}, simulator)
                assert abs(amplitude - float(np.prod(np.cos(thetas)))) <= 1e-10

    def test_empty(self):
        """Test that at least one angle is required"""
        from qaa.builders.primitives import multiply_block
        from qaa.utils.errors import ValidationError

        with pytest.raises(ValidationError):
            multiply_block([])


class TestAddBlock:
    """Test suite for add_block"""

    @pytest.mark.parametrize('theta1,theta2,expected', [
        (0.0, 0.0, 1.0),
        (0.0, math.pi / 2, 0.5),
        (math.pi / 3, math.pi / 4, (0.5 + math.sqrt(0.5)) / 2),
    ])
    def test_average_of_cosines(self, simulator, theta1, theta2, expected):
        """Test flag amplitude (cos t1 + cos t2)/2"""
        from qaa.builders.primitives import add_block
        from qaa.sim.simulator import simulate_flag

        assert simulate_flag(add_block(theta1, theta2), {}, simulator).real == pytest.approx(expected, abs=1e-12)

    def test_all_four_components(self, simulator, rng):
        """Test the full two-qubit output against the closed form"""
        from qaa.builders.primitives import add_block

        for theta1, theta2 in rng.uniform(0, math.pi, size=(200, 2)):
            state = simulator.run(add_block(theta1, theta2), '00')
            c1, s1, c2, s2 = math.cos(theta1), math.sin(theta1), math.cos(theta2), math.sin(theta2)
            expected = [(c1 + c2) / 2, (s1 + s2) / 2, (c1 - c2) / 2, (s1 - s2) / 2]
            np.testing.assert_allclose(state.amplitudes, expected, atol=1e-12)


class TestLcuCombine:
    """Test suite for lcu_combine"""

    def test_single_branch_leaves_identity(self, simulator):
        """Test that the unused Hadamard branch contributes the identity"""
        from qaa.builders.primitives import lcu_combine, rotation_fragment
        from qaa.sim.simulator import simulate_flag

        circuit = lcu_combine([(1.0, rotation_fragment(math.pi / 3))], m=1)
        assert simulate_flag(circuit, {}, simulator).real == pytest.approx((1 + 0.5) / 2, abs=1e-12)

    def test_four_identity_branches(self, simulator):
        """Test four unit branches on two combiner qubits"""
        from qaa.builders.primitives import lcu_combine, rotation_fragment
        from qaa.sim.simulator import simulate_flag

        circuit = lcu_combine([(1.0, rotation_fragment(0.0))] * 4, m=2)
        assert simulate_flag(circuit, {}, simulator).real == pytest.approx(1.0, abs=1e-12)

    def test_weighted_branches(self, simulator):
        """Test weights p_i/p with the rotation-tree preparer"""
        from qaa.builders.primitives import lcu_combine, rotation_fragment
        from qaa.sim.simulator import simulate_flag

        theta1, theta2 = 0.4, 1.1
        circuit = lcu_combine([(1.0, rotation_fragment(theta1)), (3.0, rotation_fragment(theta2))], m=1)
        expected = (math.cos(theta1) + 3 * math.cos(theta2)) / 4
        assert circuit.meta['normalization'] == 'weighted'
        assert circuit.meta['denominator'] == 4.0
        assert simulate_flag(circuit, {}, simulator).real == pytest.approx(expected, abs=1e-12)

    def test_negated_branch(self, simulator):
        """Test subtraction through a negated branch"""
        from qaa.builders.primitives import LcuBranch, lcu_combine, rotation_fragment
        from qaa.sim.simulator import simulate_flag

        circuit = lcu_combine([LcuBranch(1.0, rotation_fragment(0.3)),
                               LcuBranch(1.0, rotation_fragment(0.9), negate=True)], m=1)
        expected = (math.cos(0.3) - math.cos(0.9)) / 2
        assert simulate_flag(circuit, {}, simulator).real == pytest.approx(expected, abs=1e-12)

    def test_combiner_name_is_unique(self):
        """Test that the combiner register avoids fragment register names"""
        from qaa.builders.primitives import lcu_combine, rotation_fragment

        inner = lcu_combine([(1.0, rotation_fragment(0.2))] * 2, m=1)
        outer = lcu_combine([(1.0, inner)] * 2, m=1)
        assert outer.meta['combiner'] == 'combine1'
        assert outer.layout.names[:2] == ['combine1', 'combine']

    @pytest.mark.parametrize('branches,m,preparer', [
        ([], 1, 'auto'),
        ([(1.0, 0.1), (1.0, 0.2), (1.0, 0.3)], 1, 'auto'),
        ([(0.0, 0.1)], 1, 'auto'),
        ([(1.0, 0.1), (2.0, 0.2)], 1, 'hadamard'),
    ])
    def test_invalid(self, branches, m, preparer):
        """Test branch count, weights and preparer validation"""
        from qaa.builders.primitives import lcu_combine, rotation_fragment
        from qaa.utils.errors import ValidationError

        items = [(w, rotation_fragment(t)) for w, t in branches]
        with pytest.raises(ValidationError):
            lcu_combine(items, m, preparer)

    def test_add_block_is_an_lcu(self):
        """Test that add_block is the uniform two-branch combiner"""
        from qaa.builders.primitives import add_block, lcu_combine, rotation_fragment

        lcu = lcu_combine([(1.0, rotation_fragment(0.5)), (1.0, rotation_fragment(0.8))], m=1)
        assert add_block(0.5, 0.8).ops == lcu.ops


class TestWeightedPreparer:
    """Test suite for weighted_preparer"""

    def test_amplitudes(self, simulator):
        """Test |0^m> -> sum sqrt(w_i / sum w)|i>"""
        from qaa.builders.primitives import weighted_preparer

        weights = [1.0, 0.0, 2.0, 5.0]
        state = simulator.run(weighted_preparer(weights), '00')
        np.testing.assert_allclose(state.amplitudes, np.sqrt(np.array(weights) / 8.0), atol=1e-12)

    def test_length_must_be_power_of_two(self):
        """Test weight count validation"""
        from qaa.builders.primitives import weighted_preparer
        from qaa.utils.errors import ValidationError

        with pytest.raises(ValidationError):
            weighted_preparer([1.0, 2.0, 3.0])


class TestBinaryControlledRy:
    """Test suite for binary_controlled_ry"""

    @pytest.mark.parametrize('j,expected', [(0, 1.0), (5, math.cos(5 * math.pi / 8)), (4, 0.0)])
    def test_examples(self, simulator, j, expected):
        """Test flag cos(j pi / 2^n) at n=3"""
        from qaa.builders.primitives import binary_controlled_ry
        from qaa.sim.simulator import simulate_flag

        amplitude = simulate_flag(binary_controlled_ry(3), {'data': j}, simulator)
        assert amplitude.real == pytest.approx(expected, abs=1e-12)

    def test_matches_single_rotation(self, simulator):
        """Test the cascade equals Ry(j pi / 2^(n-1)) for every j, n <= 6"""
        from qaa.builders.primitives import binary_controlled_ry
        from qaa.models.gate import ry_matrix

        for n in range(1, 7):
            circuit = binary_controlled_ry(n)
            assert len(circuit.ops) == n
            for j in range(2 ** n):
                state = simulator.run(circuit, circuit.layout.encode({'data': j}))
                expected = ry_matrix(j * math.pi / 2 ** (n - 1))[:, 0]
                np.testing.assert_allclose(state.amplitudes[2 * j:2 * j + 2], expected, atol=1e-12)

    def test_zero_scale_keeps_gate_count(self, simulator):
        """Test scale 0 still emits n zero-angle rotations and acts as identity"""
        from qaa.builders.primitives import binary_controlled_ry
        from qaa.sim.simulator import simulate_flag

        circuit = binary_controlled_ry(4, scale=0.0)
        assert len(circuit.ops) == 4
        assert all(op.angle == 0.0 for op in circuit.ops)
        for j in (0, 7, 15):
            assert simulate_flag(circuit, {'data': j}, simulator).real == pytest.approx(1.0, abs=1e-12)

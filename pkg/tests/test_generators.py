from math import factorial

import numpy as np
import pytest

from base_model.errors          import BudgetExceeded, InvalidDescriptor, WrongFamily
from config.setup               import Budgets
from generators.descriptor      import GeneratorDescriptor, GeneratorKind, Representation
from generators.enumeration     import (enumerate_generators, epsilon_block_structures, realize,
                                        slot_order_permutation, trace_cycle_structures)
from generators.epsilon_chain   import epsilon_chain_tensor, pfaffian, pfaffian_polynomial, polarized_pfaffian
from generators.traces          import (chevalley_polynomial, pi_chain, symmetrized_trace, trace_power_polynomial,
                                        trace_tensor)
from invariant_space.action     import action_operator, exact_membership
from tensor_core.adjoint_tensor import AdjointTensor, evaluate, permute, symmetrize
from tensor_core.permutation    import Permutation


class TestTraces:
    def test_degree_two_trace_is_the_trace_form(self, a2):
        assert trace_tensor(a2, 2) == AdjointTensor(a2.dim_g, a2.trace_form)

    def test_traces_are_cyclic(self, a2):
        cubic = trace_tensor(a2, 3)
        cycle = Permutation.from_cycles(3, [(1, 2, 3)])
        assert permute(cycle, cubic) == cubic
        assert permute(Permutation.from_cycles(3, [(1, 2)]), cubic) != cubic

    def test_chain_entries_multiply_in_slot_order(self, b2):
        chain = pi_chain(b2, 2)
        product = b2.basis[3].dot(b2.basis[7])
        for b, a in [(0, 1), (2, 4), (4, 0)]:
            assert chain.entry(b, a).entry((3, 7)) == product[b, a]
        assert chain.trace() == trace_tensor(b2, 2)

    def test_adjoint_trace_is_the_killing_form(self, c2):
        assert trace_tensor(c2, 2, Representation.ADJOINT) == c2.killing_tensor()

    def test_budget_is_enforced(self, a2):
        with pytest.raises(BudgetExceeded):
            trace_tensor(a2, 4, budgets=Budgets.uniform(1000))

    def test_chevalley_polynomial_matches_symmetrized_trace(self, a1):
        point = [1, -2, 3]
        for k in (2, 3, 4):
            assert chevalley_polynomial(a1, k, point) == evaluate(symmetrized_trace(a1, k), point)

    def test_odd_defining_traces_vanish_for_orthogonal_and_symplectic(self, b2, c2, a2):
        assert not trace_power_polynomial(b2, 3)
        assert not trace_power_polynomial(c2, 3)
        assert trace_power_polynomial(b2, 2)
        assert trace_power_polynomial(c2, 4)
        assert trace_power_polynomial(a2, 3)

    def test_symmetrized_odd_trace_tensor_vanishes(self, b2):
        assert symmetrized_trace(b2, 3).is_zero()

    @pytest.mark.parametrize("label", ["B2", "C2"])
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_reversal_picks_up_a_sign(self, label, k, algebra):
        trace = trace_tensor(algebra(label), k)
        reversal = Permutation(tuple(range(k, 0, -1)))
        assert not trace.is_zero()
        assert permute(reversal, trace) == trace * (-1) ** k

    def test_reversal_sign_fails_for_a(self, a2):
        trace = trace_tensor(a2, 3)
        assert permute(Permutation((3, 2, 1)), trace) != -trace


class TestEnumeration:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_one_trace_descriptor_per_permutation(self, k, a1):
        assert len(trace_cycle_structures(k)) == factorial(k)
        assert len(enumerate_generators(a1, k)) == factorial(k)

    def test_descriptor_ids(self, a1):
        assert [d.id for d in enumerate_generators(a1, 2)] == ["tr(1 2)", "tr(1)(2)"]
        adjoint = enumerate_generators(a1, 2, rep=Representation.ADJOINT)
        assert adjoint[0].id == "tr_ad(1 2)"

    def test_traceless_factors_realize_to_zero(self, a1):
        assert realize(a1, GeneratorDescriptor.trace_product([(1,), (2,)])).is_zero()
        assert realize(a1, GeneratorDescriptor.trace_product([(1, 2)])) == trace_tensor(a1, 2)

    def test_realize_places_cycles_on_their_slots(self, a2):
        descriptor = GeneratorDescriptor.trace_product([(1, 3), (2, 4)])
        tensor = realize(a2, descriptor)
        quadratic = a2.trace_form
        for index in [(0, 1, 7, 6), (6, 2, 7, 5), (3, 3, 3, 3)]:
            a, b, c, d = index
            assert tensor.entry(index) == quadratic[a, c] * quadratic[b, d]

    def test_epsilon_chains_only_for_d(self, d3, b2):
        assert len(enumerate_generators(d3, 3)) == 6 + 1
        assert len(enumerate_generators(d3, 3, include_epsilon=False)) == 6
        assert len(enumerate_generators(d3, 2)) == 2
        assert len(enumerate_generators(b2, 3)) == 6
        assert len(epsilon_block_structures(4, 3)) == 6

    def test_slot_order_permutation(self):
        tensor = AdjointTensor(2, np.arange(8, dtype=object).reshape(2, 2, 2))
        moved = permute(slot_order_permutation((2, 3, 1)), tensor)
        # moved(X_1, X_2, X_3) = tensor(X_2, X_3, X_1)
        assert moved.entry((0, 1, 0)) == tensor.entry((1, 0, 0))


class TestDescriptors:
    def test_cycles_must_partition_the_slots(self):
        with pytest.raises(InvalidDescriptor):
            GeneratorDescriptor(GeneratorKind.TRACE_PRODUCT, 3, cycles=((1, 2), (2, 3)))

    def test_chain_lengths_must_add_up(self):
        with pytest.raises(InvalidDescriptor):
            GeneratorDescriptor(GeneratorKind.EPSILON_CHAIN, 4, chain_lengths=(1, 1, 1))

    def test_epsilon_chains_need_family_d(self, b2):
        with pytest.raises(WrongFamily):
            realize(b2, GeneratorDescriptor.epsilon_chain((1, 1)))

    def test_perm_shows_in_the_id(self):
        descriptor = GeneratorDescriptor.trace_product([(1, 2, 3)], perm=Permutation.from_cycles(3, [(1, 3)]))
        assert descriptor.id == "tr(1 2 3)*(1 3)"


class TestEpsilonChains:
    def test_wrong_family_and_length(self, a2, d3):
        with pytest.raises(WrongFamily):
            epsilon_chain_tensor(a2, (1, 1))
        with pytest.raises(InvalidDescriptor):
            epsilon_chain_tensor(d3, (1, 1))

    def test_single_slot_chains_are_symmetric(self, d3):
        chain = epsilon_chain_tensor(d3, (1, 1, 1))
        assert not chain.is_zero()
        assert symmetrize(chain) == chain

    def test_swapping_chains(self, d3):
        long_first = epsilon_chain_tensor(d3, (2, 1, 1))
        long_second = epsilon_chain_tensor(d3, (1, 2, 1))
        # E(1,2,1)(X1, X2, X3, X4) = E(2,1,1)(X2, X3, X1, X4)
        assert permute(slot_order_permutation((2, 3, 1, 4)), long_first) == long_second

    def test_reversing_a_chain_of_length_two_flips_the_sign(self, d3):
        chain = epsilon_chain_tensor(d3, (2, 1, 1))
        assert permute(slot_order_permutation((2, 1, 3, 4)), chain) == -chain

    def test_chain_of_lengths_two_one_one_is_invariant(self, d3):
        chain = epsilon_chain_tensor(d3, (2, 1, 1))
        assert not chain.is_zero()
        assert exact_membership(action_operator(d3, 4), chain)

    def test_polarized_pfaffian_is_nonzero(self, d3):
        polarized = polarized_pfaffian(d3)
        assert not polarized.is_zero()
        assert pfaffian_polynomial(d3)


class TestPfaffian:
    def test_two_by_two(self):
        assert pfaffian(np.array([[0, 5], [-5, 0]], dtype=object)) == 5

    def test_four_by_four(self):
        m = np.zeros((4, 4), dtype=object)
        values = {(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 2): 4, (1, 3): 5, (2, 3): 6}
        for (i, j), value in values.items():
            m[i, j], m[j, i] = value, -value
        assert pfaffian(m) == 1 * 6 - 2 * 5 + 3 * 4

    def test_odd_size_is_zero(self):
        assert pfaffian(np.zeros((3, 3), dtype=object)) == 0

import numpy as np
import pytest

from base_model.errors                    import BudgetExceeded, PrimeDisagreement, WrongFamily
from classical_lie.algebra_spec           import AlgebraSpec
from config.setup                         import DEFAULT_PRIMES, ESCALATION_PRIME, Budgets
from generators.descriptor                import Representation
from generators.enumeration               import enumerate_generators, realize
from generators.traces                    import trace_tensor
from invariant_space.action               import action_operator, exact_membership, generating_root_vectors
from invariant_space.automorphism         import outer_automorphism_check, outer_reflection
from invariant_space.elimination          import SparseSystem, agreed_rank, dense_rank_mod_p, sparse_rank_mod_p
from invariant_space.symmetric_invariants import products_of_primitives, symmetric_invariant_dimension
from invariant_space.verification         import VerificationReport, kernel_dimension, span_rank, verify_theorem
from tensor_core.adjoint_tensor           import AdjointTensor
from tensor_core.prime_field              import residue, to_prime_vector


class TestElimination:
    def test_dense_rank(self):
        assert dense_rank_mod_p(np.array([[1, 2], [2, 4]]), 7) == 1
        assert dense_rank_mod_p(np.array([[1, 2, 3], [0, 1, 1]]), 7) == 2
        assert dense_rank_mod_p(np.array([[3, 0], [0, 7]]), 7) == 1
        assert dense_rank_mod_p(np.zeros((0, 3), dtype=np.int64), 7) == 0

    def test_sparse_rank(self):
        system = SparseSystem(3, [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}])
        assert sparse_rank_mod_p(system, 101) == 2
        assert system.nnz == 6

    def test_sparse_rank_with_fractions(self):
        from fractions import Fraction
        system = SparseSystem(2, [{0: Fraction(1, 2), 1: 1}, {0: 1, 1: 2}])
        assert sparse_rank_mod_p(system, 101) == 1

    def test_agreement(self):
        assert agreed_rank(lambda prime: 4, DEFAULT_PRIMES, "constant") == (4, DEFAULT_PRIMES)

    def test_disagreement_raises(self):
        ranks = {DEFAULT_PRIMES[0]: 3, DEFAULT_PRIMES[1]: 2}
        with pytest.raises(PrimeDisagreement):
            agreed_rank(lambda prime: ranks[prime], DEFAULT_PRIMES, "unlucky")

    def test_escalation_takes_the_shared_maximum(self):
        ranks = {DEFAULT_PRIMES[0]: 3, DEFAULT_PRIMES[1]: 2, ESCALATION_PRIME: 3}
        rank, used = agreed_rank(lambda prime: ranks[prime], DEFAULT_PRIMES, "unlucky", escalate=True)
        assert rank == 3
        assert set(used) == {DEFAULT_PRIMES[0], ESCALATION_PRIME}


class TestActionOperator:
    def test_generating_root_vectors_are_roots(self, c2):
        generators = generating_root_vectors(c2)
        assert generators
        assert set(generators) <= set(c2.root_indices)

    def test_killing_form_is_invariant(self, b2):
        operator = action_operator(b2, 2)
        assert exact_membership(operator, b2.killing_tensor())

    def test_unit_tensor_is_not_invariant(self, a2):
        operator = action_operator(a2, 2)
        unit = np.zeros((8, 8), dtype=object)
        unit[0, 0] = 1
        assert not exact_membership(operator, AdjointTensor(8, unit))

    def test_budget(self, a2):
        with pytest.raises(BudgetExceeded):
            action_operator(a2, 4, Budgets.uniform(100))


@pytest.mark.parametrize("label, kernels", [
    ("A1", {1: 0, 2: 1, 3: 1, 4: 3, 5: 6, 6: 15}),
    ("A2", {2: 1, 3: 2, 4: 8}),
    ("B2", {2: 1, 3: 1, 4: 6}),
    ("C2", {2: 1, 3: 1, 4: 6}),
    ("D3", {2: 1, 3: 2}),
])
def test_kernel_dimensions(label, kernels, algebra):
    alg = algebra(label)
    for k, expected in kernels.items():
        assert kernel_dimension(action_operator(alg, k)) == expected


def test_span_rank_counts_independent_tensors(a2):
    quadratic = trace_tensor(a2, 2)
    assert span_rank([quadratic, quadratic * 2, quadratic - quadratic]) == 1
    assert span_rank([]) == 0


@pytest.mark.parametrize("label, k", [("A2", 3), ("D3", 3)])
def test_span_rank_grows_with_the_generator_list(label, k, algebra):
    alg = algebra(label)
    tensors = [realize(alg, descriptor) for descriptor in enumerate_generators(alg, k)]
    ranks = [span_rank(tensors[:count]) for count in range(len(tensors) + 1)]
    assert all(0 <= later - earlier <= 1 for earlier, later in zip(ranks, ranks[1:]))
    assert ranks[-1] == kernel_dimension(action_operator(alg, k))


@pytest.mark.parametrize("label, k", [("A1", 3), ("A2", 3), ("B2", 3), ("D3", 3)])
def test_exact_members_lie_in_the_modular_kernel(label, k, algebra):
    alg = algebra(label)
    operator = action_operator(alg, k)
    system = operator.reduced_system()
    positions = [np.ravel_multi_index(index, (alg.dim_g,) * k) for index in operator.columns]
    for descriptor in enumerate_generators(alg, k):
        tensor = realize(alg, descriptor)
        assert exact_membership(operator, tensor)
        for prime in DEFAULT_PRIMES:
            coords = to_prime_vector(tensor, prime).coords
            values = [int(coords[position]) for position in positions]
            for row in system.rows:
                assert sum(residue(coefficient, prime) * values[column] for column, coefficient in row.items()) % prime == 0


class TestVerifyTheorem:
    @pytest.mark.parametrize("k, kernel", [(1, 0), (2, 1), (3, 1), (4, 3)])
    def test_a1(self, k, kernel, a1):
        report = verify_theorem(a1, k)
        assert report.agreement
        assert report.kernel_dim == kernel
        assert report.certified_kernel_dim == kernel
        assert not report.membership_failures

    @pytest.mark.slow
    @pytest.mark.parametrize("k, kernel", [(5, 6), (6, 15)])
    def test_a1_high_degree(self, k, kernel, a1):
        report = verify_theorem(a1, k)
        assert report.agreement and report.kernel_dim == kernel

    @pytest.mark.parametrize("label, k", [("A2", 2), ("A2", 3), ("B2", 2), ("B2", 3), ("C2", 2), ("C2", 3)])
    def test_low_degrees(self, label, k, algebra):
        assert verify_theorem(algebra(label), k).agreement

    @pytest.mark.slow
    @pytest.mark.parametrize("label, kernel", [("A2", 8), ("B2", 6), ("C2", 6)])
    def test_degree_four(self, label, kernel, algebra):
        report = verify_theorem(algebra(label), 4)
        assert report.agreement and report.kernel_dim == kernel

    def test_d3_needs_epsilon_chains(self, d3):
        without = verify_theorem(d3, 3, include_epsilon=False)
        assert not without.agreement
        assert (without.span_rank, without.kernel_dim) == (1, 2)
        with_chains = verify_theorem(d3, 3)
        assert with_chains.agreement
        assert with_chains.span_rank == 2

    def test_d3_degree_two(self, d3):
        assert verify_theorem(d3, 2).agreement

    @pytest.mark.parametrize("label", ["B2", "C2"])
    def test_adjoint_traces_suffice_for_b_and_c(self, label, algebra):
        for k in (2, 3):
            report = verify_theorem(algebra(label), k, rep=Representation.ADJOINT)
            assert report.agreement
            assert report.representation == "adjoint"

    def test_timings_only_when_requested(self, a1):
        assert verify_theorem(a1, 2).timings is None
        assert set(verify_theorem(a1, 2, with_timings=True).timings) == {"generators", "kernel", "span"}

    def test_reports_are_deterministic(self, a2):
        assert verify_theorem(a2, 3).model_dump_json() == verify_theorem(a2, 3).model_dump_json()

    def test_generator_count_counts_against_the_entry_budget(self, a1):
        with pytest.raises(BudgetExceeded) as error:
            verify_theorem(a1, 6, budgets=Budgets(entries=100000))
        assert error.value.needed == 720 * 3 ** 6
        assert "generator tensors" in error.value.what

    def test_report_rejects_span_above_kernel(self):
        with pytest.raises(ValueError):
            VerificationReport(family="A", rank=1, degree=2, kernel_dim=1, generator_count=2, span_rank=2,
                               primes=[7], agreement=False)

    def test_generators_are_invariant(self, c2):
        operator = action_operator(c2, 3)
        for descriptor in enumerate_generators(c2, 3):
            assert exact_membership(operator, realize(c2, descriptor))


class TestSymmetricInvariants:
    def test_products_of_primitives(self):
        assert products_of_primitives([2], 4) == 1
        assert products_of_primitives([2, 3], 6) == 2
        assert products_of_primitives([2, 4, 4], 4) == 3

    @pytest.mark.parametrize("label, dimensions", [
        ("A1", {1: 0, 2: 1, 3: 0, 4: 1}),
        ("A2", {2: 1, 3: 1}),
        ("B2", {2: 1, 3: 0, 4: 2}),
        ("D3", {2: 1, 3: 1}),
    ])
    def test_symmetric_invariant_dimensions(self, label, dimensions, algebra):
        alg = algebra(label)
        for d, expected in dimensions.items():
            assert symmetric_invariant_dimension(alg, d) == expected


class TestOuterAutomorphism:
    def test_reflection_reverses_orientation(self, d3):
        reflection = outer_reflection(d3.spec)
        assert (reflection.T.dot(d3.form).dot(reflection) == d3.form).all()

    def test_only_for_d(self):
        with pytest.raises(WrongFamily):
            outer_reflection(AlgebraSpec.parse("B2"))

    def test_traces_fixed_and_chains_negated(self, d3):
        check = outer_automorphism_check(d3, max_degree=3)
        assert check.passed
        assert check.determinant == -1
        assert check.signs["3:eps[1,1,1]"] == -1
        assert check.signs["2:tr(1 2)"] == 1
        for key, sign in check.signs.items():
            assert sign == (-1 if "eps" in key else 1)

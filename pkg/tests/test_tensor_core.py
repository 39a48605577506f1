from fractions import Fraction

import numpy as np
import pytest
from sympy.combinatorics import Permutation as SymPermutation

from base_model.errors          import BadPrime, ConfigError, DegreeMismatch, DimMismatch
from tensor_core.adjoint_tensor import (AdjointTensor, antisymmetrize, contract, evaluate, exact, format_rational,
                                        permute, symmetrize, symmetrize_slots, tensor_product)
from tensor_core.permutation    import Permutation, all_permutations
from tensor_core.prime_field    import PrimeVector, check_prime, to_prime_vector
from tensor_core.row_echelon    import RationalEchelon, solve_rational


def counting_tensor(dim: int, degree: int) -> AdjointTensor:
    """Distinct entries, so any slot mix-up shows."""
    return AdjointTensor(dim, np.arange(dim ** degree, dtype=object).reshape((dim,) * degree))


class TestPermutation:
    def test_composition_is_left_to_right(self):
        sigma = Permutation.from_cycles(3, [(1, 2)])
        tau = Permutation.from_cycles(3, [(2, 3)])
        assert (sigma * tau).images == (3, 1, 2)
        assert (tau * sigma).images == (2, 3, 1)

    def test_inverse_and_sign(self):
        cycle = Permutation.from_cycles(4, [(1, 2, 3)])
        assert (cycle * cycle.inverse()).is_identity()
        assert cycle.sign() == 1
        assert Permutation.from_cycles(4, [(2, 4)]).sign() == -1
        assert sum(p.sign() for p in all_permutations(4)) == 0

    def test_cycles_and_str(self):
        perm = Permutation((2, 1, 4, 3, 5))
        assert perm.cycles() == [(1, 2), (3, 4), (5,)]
        assert str(perm) == "(1 2)(3 4)"
        assert str(Permutation.identity(3)) == "()"

    def test_rejects_non_bijections(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 3))

    @pytest.mark.parametrize("images", [(1,), (2, 3, 1), (4, 1, 3, 2), (2, 1, 4, 5, 3), (3, 5, 1, 2, 4)])
    def test_matches_sympy(self, images):
        perm = Permutation(images)
        reference = SymPermutation([i - 1 for i in images])
        assert perm.sign() == reference.signature()
        assert perm.inverse().zero_based() == tuple((~reference).array_form)
        assert str(perm) == ("()" if reference.is_Identity else
                             "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in reference.cyclic_form))
        assert sum(len(cycle) for cycle in perm.cycles()) == len(images)

    def test_composition_matches_sympy(self):
        sigma, tau = Permutation((2, 3, 1, 4)), Permutation((4, 1, 2, 3))
        product = SymPermutation([1, 2, 0, 3]) * SymPermutation([3, 0, 1, 2])
        assert (sigma * tau).zero_based() == tuple(product.array_form)
        assert all((sigma * tau)(i) == tau(sigma(i)) for i in range(1, 5))

    def test_mixed_degrees_do_not_compose(self):
        with pytest.raises(DegreeMismatch):
            Permutation.identity(2) * Permutation.identity(3)

    def test_from_cycles_fills_fixed_points(self):
        assert Permutation.from_cycles(4, []).is_identity()
        assert Permutation.from_cycles(5, [(2, 4), (1, 5, 3)]).images == (5, 4, 1, 2, 3)


class TestAdjointTensor:
    def test_permute_swaps_slots(self):
        tensor = AdjointTensor(2, [[1, 2], [3, 4]])
        swapped = permute(Permutation.from_cycles(2, [(1, 2)]), tensor)
        assert swapped.entry((0, 1)) == 3
        assert swapped.entry((1, 0)) == 2

    def test_permute_entry_rule(self):
        tensor = counting_tensor(3, 3)
        sigma = Permutation.from_cycles(3, [(1, 2, 3)])
        moved = permute(sigma, tensor)
        inverse = sigma.inverse()
        for index in [(0, 1, 2), (2, 0, 1), (1, 1, 0)]:
            source = tuple(index[inverse(slot) - 1] for slot in range(1, 4))
            assert moved.entry(index) == tensor.entry(source)

    def test_permute_is_a_left_action(self):
        tensor = counting_tensor(2, 4)
        for sigma in [Permutation.from_cycles(4, [(1, 2, 3)]), Permutation.from_cycles(4, [(1, 4), (2, 3)])]:
            for tau in [Permutation.from_cycles(4, [(2, 4)]), Permutation.from_cycles(4, [(1, 3, 4, 2)])]:
                assert permute(sigma * tau, tensor) == permute(sigma, permute(tau, tensor))

    @pytest.mark.parametrize("degree", [2, 3, 4, 5])
    def test_permute_is_a_left_action_for_random_pairs(self, degree):
        rng = np.random.default_rng(degree)
        tensor = counting_tensor(2, degree)
        for _ in range(6):
            sigma = Permutation(tuple(rng.permutation(degree) + 1))
            tau = Permutation(tuple(rng.permutation(degree) + 1))
            assert permute(sigma * tau, tensor) == permute(sigma, permute(tau, tensor))
            assert permute(sigma.inverse(), permute(sigma, tensor)) == tensor

    def test_permute_checks_degree(self):
        with pytest.raises(DegreeMismatch):
            permute(Permutation.identity(3), counting_tensor(2, 2))

    def test_symmetrize_is_exact(self):
        tensor = AdjointTensor(2, [[0, 1], [0, 0]])
        symmetric = symmetrize(tensor)
        assert symmetric.entry((0, 1)) == Fraction(1, 2)
        assert symmetric.entry((1, 0)) == Fraction(1, 2)
        assert symmetrize(symmetric) == symmetric

    def test_symmetrize_kills_antisymmetric_tensors(self):
        tensor = counting_tensor(3, 3)
        assert symmetrize(antisymmetrize(tensor)).is_zero()
        assert antisymmetrize(symmetrize(tensor)).is_zero()

    def test_partial_symmetrization(self):
        tensor = counting_tensor(2, 3)
        partial = symmetrize_slots(tensor, (0, 1))
        swap12 = Permutation.from_cycles(3, [(1, 2)])
        assert permute(swap12, partial) == partial
        assert permute(Permutation.from_cycles(3, [(2, 3)]), partial) != partial

    def test_tensor_product_and_contract(self):
        vector = AdjointTensor(2, [1, 2])
        product = tensor_product(vector, vector)
        assert product.degree == 2
        assert product.entry((1, 1)) == 4
        identity = np.identity(2, dtype=object)
        assert contract(product, identity, 0) == product
        swapped = contract(product, np.array([[0, 1], [1, 0]], dtype=object), 1)
        assert swapped.entry((0, 0)) == 2

    def test_tensor_product_is_associative(self):
        rng = np.random.default_rng(7)
        first, second, third = (AdjointTensor(2, rng.integers(-5, 5, size=(2,) * degree)) for degree in (1, 2, 1))
        assert tensor_product(tensor_product(first, second), third) == tensor_product(first, tensor_product(second, third))
        assert tensor_product(first, second).degree == 3

    def test_symmetrized_product(self):
        left, right = counting_tensor(2, 2), AdjointTensor(2, [[1, -2], [5, 3]])
        full = symmetrize(tensor_product(left, right))
        assert full == symmetrize(tensor_product(symmetrize(left), symmetrize(right)))
        assert full == symmetrize(tensor_product(right, left))
        assert symmetrize(full) == full

    def test_evaluate(self):
        tensor = AdjointTensor(2, [[1, 2], [2, 3]])
        assert evaluate(tensor, [1, 1]) == 8
        assert evaluate(tensor, [Fraction(1, 2), 0]) == Fraction(1, 4)

    def test_arithmetic_and_equality(self):
        tensor = counting_tensor(2, 2)
        assert tensor + tensor == tensor * 2
        assert (tensor - tensor).is_zero()
        assert -tensor == tensor * -1
        assert tensor.first_nonzero() == (0, 1)
        assert tensor.max_abs() == 3
        with pytest.raises(DimMismatch):
            tensor + counting_tensor(3, 2)

    def test_entries_are_read_only(self):
        tensor = counting_tensor(2, 2)
        with pytest.raises(ValueError):
            tensor.entries[0, 0] = 7

    def test_exact_helpers(self):
        assert exact(Fraction(4, 2)) == 2 and isinstance(exact(Fraction(4, 2)), int)
        assert format_rational(Fraction(3, 6)) == "1/2"
        assert format_rational(-5) == "-5"


class TestPrimeField:
    def test_reduction_inverts_denominators(self):
        tensor = AdjointTensor(2, [Fraction(1, 2), 3])
        vector = to_prime_vector(tensor, 7)
        assert list(vector.coords) == [4, 3]
        assert vector.inverted_denominators == frozenset({2})

    def test_bad_prime(self):
        with pytest.raises(BadPrime):
            to_prime_vector(AdjointTensor(2, [Fraction(1, 7), 0]), 7)

    def test_check_prime(self):
        assert check_prime(2147483647) == 2147483647
        with pytest.raises(ConfigError):
            check_prime(15)
        with pytest.raises(ConfigError):
            check_prime(2147483659)

    @pytest.mark.parametrize("prime", [2 ** 61 - 1, 2 ** 89 - 1])
    def test_wide_primes_are_rejected(self, prime):
        with pytest.raises(ConfigError):
            to_prime_vector(AdjointTensor(2, [-1, 1]), prime)
        with pytest.raises(ConfigError):
            PrimeVector(prime, np.array([1, 2]))

    def test_products_stay_exact_below_the_cap(self):
        prime = 2147483647
        vector = to_prime_vector(AdjointTensor(2, [-1, 1]), prime).scale(-1)
        assert list(vector.coords) == [1, prime - 1]

    def test_vector_arithmetic(self):
        vector = to_prime_vector(AdjointTensor(3, [1, 2, 3]), 5)
        assert (vector + vector.scale(4)).is_zero()


class TestRowEchelon:
    def test_solve(self):
        assert solve_rational([[1, 1], [1, -1]], [3, 1]) == [2, 1]
        assert solve_rational([[1, 1], [2, 2]], [1, 3]) is None
        solution = solve_rational([[2, 4]], [1])
        assert 2 * solution[0] + 4 * solution[1] == 1

    def test_incremental_basis(self):
        echelon = RationalEchelon(3)
        assert echelon.add([1, 2, 3])
        assert echelon.add([0, 1, 1])
        assert not echelon.add([1, 3, 4])
        assert echelon.contains([2, 5, 7])
        assert not echelon.contains([0, 0, 1])
        assert echelon.rank == 2

import pytest

from base_model.errors                    import BudgetExceeded
from config.setup                         import Budgets
from invariant_space.symmetric_invariants import primitive_degrees, weight_zero_monomials


@pytest.mark.parametrize("label, exponents", [
    ("A1", [1]),
    ("A2", [1, 2]),
    ("B2", [1, 3]),
    ("C2", [1, 3]),
    ("D3", [1, 2, 3]),
])
def test_computed_exponents(label, exponents, algebra):
    assert algebra(label).exponents == exponents


@pytest.mark.slow
@pytest.mark.parametrize("label, exponents", [
    ("A3", [1, 2, 3]),
    ("B3", [1, 3, 5]),
    ("C3", [1, 3, 5]),
    ("D4", [1, 3, 3, 5]),
])
def test_computed_exponents_rank_three_and_four(label, exponents, algebra):
    assert algebra(label).exponents == exponents


def test_b2_and_c2_share_their_degrees(b2, c2):
    assert primitive_degrees(b2) == primitive_degrees(c2) == [2, 4]


def test_weight_zero_monomials(a1):
    # sl2: one Cartan element h and two root vectors e, f of weights +-2
    assert len(weight_zero_monomials(a1, 1)) == 1
    assert len(weight_zero_monomials(a1, 2)) == 2
    assert all(list(monomial) == sorted(monomial) for monomial in weight_zero_monomials(a1, 4))


def test_oracle_degree_budget(a2):
    with pytest.raises(BudgetExceeded):
        primitive_degrees(a2, budgets=Budgets(symmetric_degree=2))

from classical_lie.algebra_spec import AlgebraSpec, Family


def tabulated_exponents(spec: AlgebraSpec) -> list[int]:
    """
    Closed-form exponents, kept only to cross-check the computed ones.

    A_r: 1..r; B_r, C_r: 1, 3, .., 2r-1; D_r: 1, 3, .., 2r-3 and r-1.
    """
    r = spec.rank
    if spec.family is Family.A:
        exponents = list(range(1, r + 1))
    elif spec.family in (Family.B, Family.C):
        exponents = list(range(1, 2 * r, 2))
    else:
        exponents = list(range(1, 2 * r - 2, 2)) + [r - 1]
    return sorted(exponents)


def primitive_degrees_from_exponents(exponents: list[int]) -> list[int]:
    return sorted(e + 1 for e in exponents)

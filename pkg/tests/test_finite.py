from fractions import Fraction
from itertools import combinations

import pytest

from superalg import (
    SuperPoly,
    bosonize,
    check_finite_hopf_axioms,
    dual_hopf,
    dual_iso_check,
    exterior_finite,
    exterior_hopf,
    exterior_pairing,
    finite_from_presentation,
    integral_space,
    pairing_on_sequences,
)
from superalg.core import SuperMonomial
from superalg.finite import compose_with_antipode, is_left_integral, is_right_integral


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_blade_tables_match_presentation_route(n):
    # two independent constructions of the same Hopf algebra
    blades = exterior_finite(n)
    from_pres = finite_from_presentation(exterior_hopf(n))
    assert blades.parity == from_pres.parity
    assert blades.unit == from_pres.unit
    assert blades.mult == from_pres.mult
    assert blades.delta == from_pres.delta
    assert blades.counit == from_pres.counit
    assert blades.antipode == from_pres.antipode


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exterior_tables_satisfy_super_axioms(n):
    assert check_finite_hopf_axioms(exterior_finite(n)).ok


def test_pairing_dual_basis_examples():
    gens = exterior_hopf(2).gens
    f12 = SuperPoly.monomial(gens, SuperMonomial((), (0, 1)))
    v12 = SuperPoly.monomial(gens, SuperMonomial((), (0, 1)))
    f1 = SuperPoly.monomial(gens, SuperMonomial((), (0,)))
    v2 = SuperPoly.monomial(gens, SuperMonomial((), (1,)))
    assert exterior_pairing(f12, v12) == 1
    assert exterior_pairing(f1, v2) == 0


def test_pairing_odd_permutation_sign():
    # <f1 ^ f2, v2 ^ v1> via the displayed permutation sum
    assert pairing_on_sequences([0, 1], [1, 0]) == -1
    assert pairing_on_sequences([0, 1], [0, 1]) == 1
    assert pairing_on_sequences([0], [1]) == 0
    # and through normal forms: v2 ^ v1 normalises to -v1v2
    gens = exterior_hopf(2).gens
    v1 = SuperPoly.generator(gens, "v1")
    v2 = SuperPoly.generator(gens, "v2")
    f12 = SuperPoly.monomial(gens, SuperMonomial((), (0, 1)))
    assert exterior_pairing(f12, v2 * v1) == -1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pairing_agrees_with_permutation_oracle(n):
    gens = exterior_hopf(n).gens
    for size in range(n + 1):
        for left in combinations(range(n), size):
            for right in combinations(range(n), size):
                f = SuperPoly.monomial(gens, SuperMonomial((), left))
                w = SuperPoly.monomial(gens, SuperMonomial((), right))
                assert exterior_pairing(f, w) == pairing_on_sequences(list(left), list(right))


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_dual_iso(n):
    ok, report = dual_iso_check(n)
    assert ok, [c.name for c in report.failures()]


def test_dual_of_dual_tables_are_consistent():
    hopf = exterior_finite(2)
    double = dual_hopf(dual_hopf(hopf))
    assert double.mult == hopf.mult
    assert double.delta == hopf.delta


def test_bosonize_trivial_is_group_algebra():
    result = bosonize(exterior_finite(0))
    assert result.dimension == 2
    g = result.labels.index("g")
    assert result.mult[(g, g)] == {0: Fraction(1)}  # g^2 = 1
    assert check_finite_hopf_axioms(result).ok


def test_bosonize_smash_coproduct_on_primitive():
    base = exterior_finite(1)
    result = bosonize(base)
    v = base.labels.index("v1")
    g = result.labels.index("g")
    unit = base.labels.index("1")
    expected = {(v, base.dimension + unit): Fraction(1), (unit, v): Fraction(1)}
    assert result.delta[v] == expected
    assert result.labels[base.dimension + unit] == "g"
    assert result.delta[v][(v, g)] == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bosonize_ordinary_hopf_axioms(n):
    result = bosonize(exterior_finite(n))
    assert result.dimension == 2 ** (n + 1)
    assert result.antipode is not None
    assert check_finite_hopf_axioms(result).ok


def test_integrals_lambda_one():
    hopf = exterior_finite(1)
    space = integral_space(hopf)
    assert space.dimension == 1
    assert space.basis[0] == {1: Fraction(1)}  # vanishes on 1, takes 1 on v
    assert space.parity == 1


def test_integrals_lambda_two_is_top_dual():
    hopf = exterior_finite(2)
    space = integral_space(hopf)
    assert space.dimension == 1
    top = hopf.labels.index("v1v2")
    assert space.basis[0] == {top: Fraction(1)}
    assert space.parity == 0


def test_trivial_hopf_integral_is_counit():
    space = integral_space(exterior_finite(0))
    assert space.dimension == 1
    assert space.basis[0].get(0) == 1  # integral of 1 is nonzero: linear reductivity


def test_bosonization_integral_space_is_one_dimensional():
    result = bosonize(exterior_finite(2))
    space = integral_space(result)
    assert space.dimension == 1
    assert len(space.right_basis) == 1


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_integral_dimension_parity_and_antipode(n):
    hopf = exterior_finite(n)
    space = integral_space(hopf)
    assert space.dimension == 1
    assert space.parity == n % 2
    assert len(space.right_basis) == 1
    assert is_left_integral(hopf, space.basis[0])
    composed = compose_with_antipode(hopf, space.basis[0])
    assert is_right_integral(hopf, composed)

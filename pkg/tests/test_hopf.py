from fractions import Fraction

import pytest

from superalg import (
    GeneratorSet,
    HopfPresentation,
    PointSampler,
    PresentationError,
    SuperPoly,
    TensorPoly,
    additive_presentation,
    check_hopf_axioms,
    compute_W,
    even_quotient,
    exterior_hopf,
    glmn_presentation,
)


def test_exterior_trivial():
    pres = exterior_hopf(0)
    assert not pres.gens.names
    assert check_hopf_axioms(pres).ok


def test_exterior_one_generator():
    pres = exterior_hopf(1)
    v = pres.generator_poly("v1")
    one = SuperPoly.one(pres.gens)
    assert pres.delta["v1"] == TensorPoly.of(v, one) + TensorPoly.of(one, v)
    assert pres.counit["v1"] == 0
    assert pres.antipode["v1"] == -v
    assert (v * v).is_zero()


def test_exterior_coproduct_of_blade():
    pres = exterior_hopf(2)
    v1, v2 = pres.generator_poly("v1"), pres.generator_poly("v2")
    one = SuperPoly.one(pres.gens)
    expected = (
        TensorPoly.of(v1 * v2, one)
        + TensorPoly.of(v1, v2)
        - TensorPoly.of(v2, v1)
        + TensorPoly.of(one, v1 * v2)
    )
    assert pres.delta_of(v1 * v2) == expected


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_exterior_axioms_symbolic(n):
    assert check_hopf_axioms(exterior_hopf(n)).ok


def test_corrupted_coproduct_reports_counit_failure():
    pres = exterior_hopf(2)
    bad_delta = dict(pres.delta)
    v1 = pres.generator_poly("v1")
    one = SuperPoly.one(pres.gens)
    bad_delta["v1"] = TensorPoly.of(one, v1)
    corrupted = HopfPresentation(pres.gens, bad_delta, pres.counit, pres.antipode)
    report = check_hopf_axioms(corrupted)
    assert not report.ok
    assert any("v1" in c.name and "counit" in c.name for c in report.failures())


def test_glmn_counit_vanishes_on_shifted_generators():
    pres = glmn_presentation(2, 1)
    assert all(value == 0 for value in pres.counit.values())


def test_glmn_1_1_coproduct_of_p():
    pres = glmn_presentation(1, 1)
    p = pres.generator_poly("p11")
    x = pres.generator_poly("x11")
    y = pres.generator_poly("y11")
    one = SuperPoly.one(pres.gens)
    expected = (
        TensorPoly.of(p, one) + TensorPoly.of(one, p)
        + TensorPoly.of(x, p) + TensorPoly.of(p, y)
    )
    assert pres.delta["p11"] == expected


def test_glmn_1_0_is_shifted_gl1():
    pres = glmn_presentation(1, 0)
    assert pres.gens.names == ("x11",)
    x = pres.generator_poly("x11")
    one = SuperPoly.one(pres.gens)
    assert pres.delta["x11"] == (
        TensorPoly.of(x, one) + TensorPoly.of(one, x) + TensorPoly.of(x, x)
    )
    assert check_hopf_axioms(pres, sampler=PointSampler(1, 0, 2, seed=1), points=5).ok


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_glmn_axioms_pointwise(m, n):
    sampler = PointSampler(m, n, 4, seed=11)
    assert check_hopf_axioms(glmn_presentation(m, n), sampler=sampler, points=50).ok


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2)])
def test_glmn_coproduct_dualizes_matrix_product(m, n):
    # convolving two points through the coproduct equals multiplying matrices
    from superalg.decomposition import evaluate_at_point

    pres = glmn_presentation(m, n)
    sampler = PointSampler(m, n, 4, seed=19)
    for idx in range(5):
        a, b = sampler.sample(2 * idx), sampler.sample(2 * idx + 1)
        product = a * b
        for name in pres.gens.names:
            total = sampler.alg.zero()
            for (m1, m2), coeff in pres.delta[name].terms.items():
                left = evaluate_at_point(pres, SuperPoly.monomial(pres.gens, m1), a)
                right = evaluate_at_point(pres, SuperPoly.monomial(pres.gens, m2), b)
                total = total + (left * right).scale(coeff)
            direct = evaluate_at_point(pres, pres.generator_poly(name), product)
            assert total == direct, name


def test_glmn_antipode_is_pointwise_only():
    pres = glmn_presentation(1, 1)
    assert not pres.has_symbolic_antipode
    with pytest.raises(PresentationError):
        pres.antipode_of(pres.generator_poly("x11"))


def test_even_quotient_of_exterior_is_base_field():
    quotient = even_quotient(exterior_hopf(3))
    assert not quotient.gens.names


def test_even_quotient_of_glmn():
    quotient = even_quotient(glmn_presentation(1, 1))
    assert quotient.gens.names == ("x11", "y11")
    x = quotient.generator_poly("x11")
    one = SuperPoly.one(quotient.gens)
    assert quotient.delta["x11"] == (
        TensorPoly.of(x, one) + TensorPoly.of(one, x) + TensorPoly.of(x, x)
    )
    assert check_hopf_axioms(quotient, sampler=PointSampler(1, 1, 2, seed=2), points=3).ok


def test_even_quotient_of_even_presentation_unchanged():
    pres = additive_presentation(2, 0)
    assert even_quotient(pres) == pres


def test_compute_W_exterior():
    assert compute_W(exterior_hopf(2)).basis == ["v1", "v2"]


def test_compute_W_purely_even():
    assert compute_W(additive_presentation(2, 0)).basis == []


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2)])
def test_compute_W_glmn_dimension(m, n):
    cotangent = compute_W(glmn_presentation(m, n))
    assert cotangent.dimension == 2 * m * n
    assert set(cotangent.basis) == set(glmn_presentation(m, n).gens.odds)


def test_odd_counit_must_vanish():
    gens = GeneratorSet(odds=["v"])
    v = SuperPoly.generator(gens, "v")
    one = SuperPoly.one(gens)
    delta = {"v": TensorPoly.of(v, one) + TensorPoly.of(one, v)}
    with pytest.raises(PresentationError):
        HopfPresentation(gens, delta, {"v": Fraction(1)}, {"v": -v})


def test_parity_inconsistent_coproduct_rejected():
    gens = GeneratorSet(evens=["a"], odds=["v"])
    v = SuperPoly.generator(gens, "v")
    a = SuperPoly.generator(gens, "a")
    one = SuperPoly.one(gens)
    delta = {
        "v": TensorPoly.of(a, one),  # even image of an odd generator
        "a": TensorPoly.of(a, one) + TensorPoly.of(one, a),
    }
    with pytest.raises(PresentationError):
        HopfPresentation(gens, delta, {"v": Fraction(0), "a": Fraction(0)}, None)

from fractions import Fraction

import pytest

from superalg import (
    GrassmannAlgebra,
    NotAPoint,
    NotInvertible,
    PointSampler,
    SuperMatrix,
    invert_element,
)

ALG = GrassmannAlgebra(4)


def point_1_1(x, y, p, q, alg=ALG):
    return SuperMatrix.from_blocks([[x]], [[p]], [[q]], [[y]], alg)


def test_invert_scalar():
    assert invert_element(ALG.scalar(2)) == ALG.scalar(Fraction(1, 2))


def test_invert_one_plus_blade():
    el = ALG.one() + ALG.theta(1) * ALG.theta(2)
    inv = invert_element(el)
    assert inv == ALG.one() - ALG.theta(1) * ALG.theta(2)
    assert el * inv == ALG.one()


def test_invert_zero_body_raises():
    with pytest.raises(NotInvertible):
        invert_element(ALG.theta(1))


def test_invert_sampled_elements():
    sampler = PointSampler(1, 1, 4, seed=99)
    for i in range(40):
        entry = sampler.sample(i).block_x()[0][0]
        assert invert_element(entry) * entry == ALG.one()


def test_identity_multiplication():
    sampler = PointSampler(2, 2, 4, seed=5)
    ident = SuperMatrix.identity(2, 2, sampler.alg)
    a = sampler.sample(0)
    assert ident * a == a
    assert a * ident == a


def test_1_1_square_has_x_block_one_plus_theta_theta():
    pt = point_1_1(ALG.one(), ALG.one(), ALG.theta(1), ALG.theta(2))
    square = pt * pt
    assert square.block_x()[0][0] == ALG.one() + ALG.theta(1) * ALG.theta(2)


def test_matrix_product_associative_on_points():
    sampler = PointSampler(2, 1, 5, seed=17)
    a, b, c = (sampler.sample(i) for i in range(3))
    assert (a * b) * c == a * (b * c)


def test_inverse_of_identity():
    ident = SuperMatrix.identity(2, 1, ALG)
    assert ident.inv() == ident


def test_1_1_inverse_x_block():
    pt = point_1_1(ALG.one(), ALG.one(), ALG.theta(1), ALG.theta(2))
    inv = pt.inv()
    assert inv.block_x()[0][0] == ALG.one() + ALG.theta(1) * ALG.theta(2)
    ident = SuperMatrix.identity(1, 1, ALG)
    assert pt * inv == ident
    assert inv * pt == ident


def test_inverse_on_samples():
    for (m, n) in ((1, 1), (2, 1), (2, 2), (3, 2)):
        sampler = PointSampler(m, n, 5, seed=10 * m + n)
        ident = SuperMatrix.identity(m, n, sampler.alg)
        for i in range(10):
            a = sampler.sample(i)
            assert a * a.inv() == ident
            assert a.inv() * a == ident


def test_group_axioms_all_shapes_up_to_three():
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            sampler = PointSampler(m, n, 6, seed=7 * m + n)
            ident = SuperMatrix.identity(m, n, sampler.alg)
            a, b, c = (sampler.sample(i) for i in range(3))
            product = a * b
            assert product.is_gl_point()
            assert (product * c) == (a * (b * c))
            assert ident * a == a and a * ident == a
            assert a * a.inv() == ident


def test_is_gl_point():
    ident = SuperMatrix.identity(1, 1, ALG)
    assert ident.is_gl_point()
    bad_parity = point_1_1(ALG.theta(1), ALG.one(), ALG.zero(), ALG.zero())
    assert not bad_parity.is_gl_point()
    singular = point_1_1(ALG.zero(), ALG.one(), ALG.zero(), ALG.zero())
    assert not singular.is_gl_point()
    with pytest.raises(NotAPoint):
        singular.inv()


def test_antipode_blocks_diagonal_case():
    x = ALG.scalar(2) + ALG.theta(1) * ALG.theta(2)
    y = ALG.scalar(Fraction(1, 3))
    pt = point_1_1(x, y, ALG.zero(), ALG.zero())
    s = pt.antipode_blocks()
    assert s.block_x()[0][0] == invert_element(x)
    assert s.block_y()[0][0] == invert_element(y)
    assert s.block_p()[0][0].is_zero() and s.block_q()[0][0].is_zero()


def test_antipode_blocks_equal_inverse_on_samples():
    # the module's central oracle: Hopf antipode formulas against the group inverse
    sampler = PointSampler(2, 1, 4, seed=7)
    for i in range(25):
        a = sampler.sample(i)
        assert a.antipode_blocks() == a.inv()


def test_antipode_identity_point():
    ident = SuperMatrix.identity(2, 2, ALG)
    assert ident.antipode_blocks() == ident


def test_decomposition_identity_and_diagonal():
    ident = SuperMatrix.identity(2, 1, ALG)
    x, y, pp, qp = ident.decomposition_coords()
    assert all(e.is_zero() for row in pp for e in row)
    assert all(e.is_zero() for row in qp for e in row)
    assert SuperMatrix.from_decomposition(x, y, pp, qp, ALG) == ident


def test_decomposition_scalar_division():
    pt = point_1_1(ALG.scalar(2), ALG.one(), ALG.theta(1), ALG.zero())
    _, _, pp, _ = pt.decomposition_coords()
    assert pp[0][0] == ALG.theta(1).scale(Fraction(1, 2))


def test_decomposition_round_trip_and_parity():
    sampler = PointSampler(2, 2, 5, seed=23)
    for i in range(15):
        a = sampler.sample(i)
        x, y, pp, qp = a.decomposition_coords()
        assert SuperMatrix.from_decomposition(x, y, pp, qp, sampler.alg) == a
        for block in (pp, qp):
            for row in block:
                for e in row:
                    assert e.is_zero() or e.parity_of() == "odd"


def test_even_subgroup_closed():
    sampler = PointSampler(2, 1, 4, seed=31)
    for i in range(8):
        g = sampler.sample_even(2 * i)
        h = sampler.sample_even(2 * i + 1)
        for result in (g * h, g.inv()):
            assert all(e.is_zero() for row in result.block_p() for e in row)
            assert all(e.is_zero() for row in result.block_q() for e in row)
    # blockwise: the even subgroup multiplies like GL_m x GL_n
    g, h = sampler.sample_even(100), sampler.sample_even(101)
    gh = g * h
    from superalg.grassmann import _poly_mat_mul

    assert gh.block_x() == _poly_mat_mul(g.block_x(), h.block_x(), sampler.alg)
    assert gh.block_y() == _poly_mat_mul(g.block_y(), h.block_y(), sampler.alg)


def test_json_round_trip_and_determinism():
    sampler1 = PointSampler(2, 1, 4, seed=77)
    sampler2 = PointSampler(2, 1, 4, seed=77)
    a, b = sampler1.sample(3), sampler2.sample(3)
    assert a == b
    assert a.to_json() == b.to_json()
    assert SuperMatrix.from_json(a.to_json()) == a


def test_shape_mismatch_rejected():
    a = PointSampler(1, 1, 3, seed=1).sample(0)
    b = PointSampler(2, 1, 3, seed=1).sample(0)
    with pytest.raises(ValueError):
        a * b


def test_purely_even_shape_degenerates():
    # n = 0: no odd coordinates at all, the split is the point itself
    sampler = PointSampler(2, 0, 3, seed=4)
    a = sampler.sample(0)
    x, y, pp, qp = a.decomposition_coords()
    assert y == [] and pp == [[], []] and qp == []
    assert SuperMatrix.from_decomposition(x, y, pp, qp, sampler.alg) == a
    assert a.antipode_blocks() == a.inv()

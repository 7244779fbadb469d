from fractions import Fraction

import pytest

from superalg import (
    GeneratorSet,
    HopfPresentation,
    PresentationError,
    SuperPoly,
    TensorPoly,
    additive_presentation,
    check_lie_even,
    exterior_hopf,
    glmn_presentation,
    pbw_dim_check,
    primitives,
    super_pbw_count,
    truncated_dual,
)
GA11 = additive_presentation(1, 1)
GL11 = glmn_presentation(1, 1)


# --- independent oracle: elementary matrices of gl(m|n) with the super bracket


def elementary(size, a, b):
    return [[Fraction(1) if (i, j) == (a, b) else Fraction(0) for j in range(size)]
            for i in range(size)]


def mat_mul(x, y):
    size = len(x)
    return [[sum((x[i][k] * y[k][j] for k in range(size)), Fraction(0))
             for j in range(size)] for i in range(size)]


def super_bracket(x, y, px, py):
    sign = -1 if px and py else 1
    xy, yx = mat_mul(x, y), mat_mul(y, x)
    return [[xy[i][j] - sign * yx[i][j] for j in range(len(x))] for i in range(len(x))]


def glmn_oracle(m, n):
    """Bracket table of gl(m|n) on elementary matrices, keyed by entry name."""
    from superalg.hopf import glmn_entry_name

    size = m + n
    entries = {}
    for a in range(size):
        for b in range(size):
            name = glmn_entry_name(m, n, a + 1, b + 1)
            parity = (a >= m) ^ (b >= m)
            entries[name] = (elementary(size, a, b), parity)

    def bracket(name1, name2):
        x, px = entries[name1]
        y, py = entries[name2]
        value = super_bracket(x, y, px, py)
        out = {}
        for name, (e, _) in entries.items():
            coeff = sum(
                value[i][j] for i in range(size) for j in range(size)
                if e[i][j]
            )
            if coeff:
                out[name] = coeff
        return out

    return bracket


# --- truncated duals


def test_additive_order3_basis_and_square():
    dual = truncated_dual(GA11, 3)
    assert dual.labels == ["D[1]", "D[tau1]", "D[t1]", "D[t1*tau1]", "D[t1^2]"]
    dt = dual.labels.index("D[t1]")
    dt2 = dual.labels.index("D[t1^2]")
    # dual of the binomial coefficient in Delta(t^2)
    assert dual.product[(dt, dt)] == {dt2: Fraction(2)}


def test_order_one_is_base_field():
    dual = truncated_dual(GA11, 1)
    assert dual.dimension == 1
    assert dual.labels == ["D[1]"]


def test_order_zero_rejected():
    with pytest.raises(ValueError):
        truncated_dual(GA11, 0)


def test_non_shifted_presentation_rejected():
    gens = GeneratorSet(evens=["g"])
    g = SuperPoly.generator(gens, "g")
    pres = HopfPresentation(
        gens,
        {"g": TensorPoly.of(g, g)},
        {"g": Fraction(1)},
        None,
    )
    with pytest.raises(PresentationError):
        truncated_dual(pres, 2)


def test_gl11_order2_dimension():
    assert truncated_dual(GL11, 2).dimension == 5  # counit plus four generator duals


def test_primitives_need_order_three():
    with pytest.raises(ValueError):
        primitives(truncated_dual(GA11, 2))


@pytest.mark.parametrize("pres", [GA11, GL11])
def test_product_tables_associative_unital(pres):
    truncated_dual(pres, 4).check_associative_unital()


@pytest.mark.parametrize("pres", [GA11, GL11])
def test_unique_group_like(pres):
    assert truncated_dual(pres, 4).counit_is_unique_group_like()


def test_embedding_chain():
    for pres in (GA11, GL11):
        duals = {k: truncated_dual(pres, k) for k in range(1, 5)}
        for k in range(1, 4):
            assert duals[k].embeds_in(duals[k + 1])


# --- primitives and Lie structure


def test_additive_primitives_abelian():
    lie, _ = primitives(truncated_dual(GA11, 3))
    assert sorted(lie.labels) == ["D[t1]", "D[tau1]"]
    assert sorted(lie.parity) == [0, 1]
    assert lie.bracket == {}


def test_exterior_as_odd_additive_group():
    lie, _ = primitives(truncated_dual(exterior_hopf(1), 3))
    assert lie.labels == ["D[v1]"]
    assert lie.parity == [1]
    assert lie.bracket == {}


def test_gl11_primitives_match_matrix_oracle():
    lie, _ = primitives(truncated_dual(GL11, 3))
    assert sorted(lie.labels) == ["D[p11]", "D[q11]", "D[x11]", "D[y11]"]
    oracle = glmn_oracle(1, 1)
    for i in range(lie.dimension):
        for j in range(lie.dimension):
            got = {lie.labels[k]: c for k, c in lie.bracket_basis(i, j).items()}
            want = {
                f"D[{name}]": coeff
                for name, coeff in oracle(lie.labels[i][2:-1], lie.labels[j][2:-1]).items()
            }
            assert got == want, (lie.labels[i], lie.labels[j])


def test_gl21_primitives_match_matrix_oracle():
    lie, _ = primitives(truncated_dual(glmn_presentation(2, 1), 3))
    assert lie.dimension == 9
    oracle = glmn_oracle(2, 1)
    for i in range(lie.dimension):
        for j in range(lie.dimension):
            got = {lie.labels[k]: c for k, c in lie.bracket_basis(i, j).items()}
            want = {
                f"D[{name}]": coeff
                for name, coeff in oracle(lie.labels[i][2:-1], lie.labels[j][2:-1]).items()
            }
            assert got == want


def test_lie_even_additive():
    assert check_lie_even(GA11)


def test_lie_even_exterior_trivial():
    # odd additive group: even part of the Lie algebra is zero
    assert check_lie_even(exterior_hopf(2))


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_lie_even_glmn(m, n):
    assert check_lie_even(glmn_presentation(m, n))


# --- PBW counting


def test_pbw_count_additive_order4():
    # monomials t^i tau^e with i + e < 4: seven of them
    dual = truncated_dual(GA11, 4)
    expected = {(i, e) for e in (0, 1) for i in range(4) if i + e < 4}
    assert dual.dimension == len(expected) == 7
    assert super_pbw_count(1, 1, 4) == 7
    assert pbw_dim_check(GA11, 4)


def test_pbw_trivial_order():
    assert pbw_dim_check(GA11, 1)
    assert pbw_dim_check(GL11, 1)


def test_pbw_gl11_order3():
    dual = truncated_dual(GL11, 3)
    # (2|2) variables: 1 + 4 + (3 + 4 + 1) of degree < 3
    assert dual.dimension == 13
    assert super_pbw_count(2, 2, 3) == 13
    assert pbw_dim_check(GL11, 3)


@pytest.mark.parametrize("order", [1, 2, 3, 4, 5])
def test_pbw_checks_through_order_five(order):
    assert pbw_dim_check(GA11, order)
    assert pbw_dim_check(GL11, order)

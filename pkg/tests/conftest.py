from fractions import Fraction

import hypothesis.strategies as st

from superalg import GeneratorSet, SuperPoly
from superalg.core import SuperMonomial

GENS = GeneratorSet(evens=["x", "y"], odds=["t1", "t2", "t3"])

coefficients = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=4
).filter(lambda c: c != 0)


@st.composite
def monomials(draw, gens=GENS, max_exp=2):
    evens = tuple(draw(st.integers(min_value=0, max_value=max_exp)) for _ in gens.evens)
    size = draw(st.integers(min_value=0, max_value=len(gens.odds)))
    odds = tuple(sorted(draw(
        st.lists(st.integers(min_value=0, max_value=len(gens.odds) - 1),
                 min_size=size, max_size=size, unique=True)
    )))
    return SuperMonomial(evens, odds)


@st.composite
def polys(draw, gens=GENS, max_terms=4):
    terms = draw(st.dictionaries(monomials(gens), coefficients, max_size=max_terms))
    return SuperPoly(gens, terms)


@st.composite
def homogeneous_polys(draw, gens=GENS, max_terms=3):
    parity = draw(st.integers(min_value=0, max_value=1))
    terms = draw(st.dictionaries(
        monomials(gens).filter(lambda m: m.parity == parity),
        coefficients, min_size=1, max_size=max_terms,
    ))
    return SuperPoly(gens, terms)

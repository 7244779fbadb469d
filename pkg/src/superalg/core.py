"""Free super-commutative algebras over exact rationals.

Elements are kept in Koszul normal form: even generators carry exponent
vectors, odd generators appear as a strictly increasing support list, and
every reordering sign is materialised into the coefficient.  All arithmetic
is exact (`fractions.Fraction`); values are immutable after construction and
safe to share.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple, TypeVar

Scalar = Fraction

EVEN = 0
ODD = 1

PARITY_EVEN = "even"
PARITY_ODD = "odd"
PARITY_MIXED = "mixed"

F0 = Fraction(0)
F1 = Fraction(1)


class GeneratorSetMismatch(ValueError):
    """Raised when two elements of different free algebras are combined."""


class UnknownGenerator(KeyError):
    """Raised for a symbol that does not belong to the generator set."""


class ParityViolation(ValueError):
    """Raised when a map sends a generator to an element of the wrong parity."""


class GeneratorSet:
    """Ordered even and odd generator names, fixed for the algebra's lifetime.

    Generator order is part of the identity of the algebra: normal forms,
    printing and serialisation all refer to it.  An optional N-degree may be
    attached per generator (defaults to 1).
    """

    __slots__ = ("evens", "odds", "degrees", "_info", "_key", "_one")

    def __init__(
        self,
        evens: Iterable[str] = (),
        odds: Iterable[str] = (),
        degrees: Mapping[str, int] | None = None,
    ):
        self.evens = tuple(evens)
        self.odds = tuple(odds)
        names = self.evens + self.odds
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        deg = dict(degrees or {})
        for name, d in deg.items():
            if name not in names:
                raise UnknownGenerator(name)
            if d < 1:
                raise ValueError(f"degree of {name} must be positive")
        self.degrees = {name: deg.get(name, 1) for name in names}
        self._info: dict[str, tuple[int, int]] = {}
        for i, name in enumerate(self.evens):
            self._info[name] = (EVEN, i)
        for i, name in enumerate(self.odds):
            self._info[name] = (ODD, i)
        self._key = (self.evens, self.odds, tuple(self.degrees.items()))
        self._one = SuperMonomial((0,) * len(self.evens), ())

    def parity(self, name: str) -> int:
        try:
            return self._info[name][0]
        except KeyError:
            raise UnknownGenerator(name) from None

    def position(self, name: str) -> int:
        try:
            return self._info[name][1]
        except KeyError:
            raise UnknownGenerator(name) from None

    def degree(self, name: str) -> int:
        return self.degrees[name]

    def __contains__(self, name: str) -> bool:
        return name in self._info

    @property
    def names(self) -> tuple[str, ...]:
        return self.evens + self.odds

    def __eq__(self, other) -> bool:
        return isinstance(other, GeneratorSet) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"GeneratorSet(evens={list(self.evens)}, odds={list(self.odds)})"


class SuperMonomial(NamedTuple):
    """Normal-form monomial: even exponents plus increasing odd support."""

    evens: tuple[int, ...]
    odds: tuple[int, ...]

    @property
    def parity(self) -> int:
        return len(self.odds) & 1

    def degree(self, gens: GeneratorSet) -> int:
        total = 0
        for e, name in zip(self.evens, gens.evens):
            if e:
                total += e * gens.degrees[name]
        for i in self.odds:
            total += gens.degrees[gens.odds[i]]
        return total

    def is_one(self) -> bool:
        return not self.odds and not any(self.evens)


def one_monomial(gens: GeneratorSet) -> SuperMonomial:
    return gens._one


def merge_odds(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """Merge two increasing odd supports; sign counts crossings, None on a repeat."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    merged: list[int] = []
    inversions = 0
    i = j = 0
    la = len(a)
    while i < la and j < len(b):
        x, y = a[i], b[j]
        if x == y:
            return None
        if x < y:
            merged.append(x)
            i += 1
        else:
            merged.append(y)
            inversions += la - i
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return (-1 if inversions & 1 else 1), tuple(merged)


_MUL_CACHE: dict[tuple[SuperMonomial, SuperMonomial], tuple[int, SuperMonomial] | None] = {}


def mul_monomials(m1: SuperMonomial, m2: SuperMonomial) -> tuple[int, SuperMonomial] | None:
    # products recur constantly inside matrix arithmetic; the result depends
    # only on the two normal forms, so it is safe to cache globally
    key = (m1, m2)
    cached = _MUL_CACHE.get(key, _MUL_CACHE)
    if cached is not _MUL_CACHE:
        return cached
    odds = merge_odds(m1.odds, m2.odds)
    if odds is None:
        result = None
    else:
        sign, merged = odds
        if any(m1.evens):
            evens = tuple(a + b for a, b in zip(m1.evens, m2.evens)) if any(m2.evens) else m1.evens
        else:
            evens = m2.evens
        result = (sign, SuperMonomial(evens, merged))
    if len(_MUL_CACHE) > 1_000_000:
        _MUL_CACHE.clear()
    _MUL_CACHE[key] = result
    return result


def monomial_sort_key(gens: GeneratorSet):
    def key(m: SuperMonomial):
        return (m.degree(gens), m.odds, m.evens)

    return key


class SuperPoly:
    """Exact-coefficient element of a free super-commutative algebra.

    ``terms`` maps normal-form monomials to nonzero rational coefficients;
    equality is term-map equality.  Operations return new values.
    """

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GeneratorSet, terms: Mapping[SuperMonomial, Fraction] | None = None):
        self.gens = gens
        self.terms: dict[SuperMonomial, Fraction] = {
            m: c for m, c in (terms or {}).items() if c
        }

    @classmethod
    def zero(cls, gens: GeneratorSet) -> SuperPoly:
        return cls(gens)

    @classmethod
    def one(cls, gens: GeneratorSet) -> SuperPoly:
        return cls(gens, {one_monomial(gens): F1})

    @classmethod
    def scalar(cls, gens: GeneratorSet, value) -> SuperPoly:
        return cls(gens, {one_monomial(gens): Fraction(value)})

    @classmethod
    def generator(cls, gens: GeneratorSet, name: str) -> SuperPoly:
        parity, pos = gens.parity(name), gens.position(name)
        if parity == EVEN:
            exps = [0] * len(gens.evens)
            exps[pos] = 1
            mono = SuperMonomial(tuple(exps), ())
        else:
            mono = SuperMonomial((0,) * len(gens.evens), (pos,))
        return cls(gens, {mono: F1})

    @classmethod
    def monomial(cls, gens: GeneratorSet, mono: SuperMonomial, coeff=F1) -> SuperPoly:
        return cls(gens, {mono: Fraction(coeff)})

    def _check(self, other: SuperPoly) -> None:
        if self.gens is not other.gens and self.gens != other.gens:
            raise GeneratorSetMismatch(f"{self.gens!r} vs {other.gens!r}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: SuperPoly) -> SuperPoly:
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, F0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = SuperPoly.__new__(SuperPoly)
        out.gens, out.terms = self.gens, terms
        return out

    def __neg__(self) -> SuperPoly:
        out = SuperPoly.__new__(SuperPoly)
        out.gens = self.gens
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: SuperPoly) -> SuperPoly:
        return self + (-other)

    def scale(self, value) -> SuperPoly:
        c = Fraction(value)
        out = SuperPoly.__new__(SuperPoly)
        out.gens = self.gens
        out.terms = {m: c * v for m, v in self.terms.items()} if c else {}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms: dict[SuperMonomial, Fraction] = {}
        get = terms.get
        cache_get = _MUL_CACHE.get
        other_items = list(other.terms.items())
        for m1, c1 in self.terms.items():
            for m2, c2 in other_items:
                prod = cache_get((m1, m2), _MUL_CACHE)
                if prod is _MUL_CACHE:
                    prod = mul_monomials(m1, m2)
                if prod is None:
                    continue
                sign, mono = prod
                c = c1 * c2 if sign > 0 else -(c1 * c2)
                s = get(mono)
                if s is None:
                    terms[mono] = c
                else:
                    s = s + c
                    if s:
                        terms[mono] = s
                    else:
                        del terms[mono]
        out = SuperPoly.__new__(SuperPoly)
        out.gens, out.terms = self.gens, terms
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> SuperPoly:
        if exponent < 0:
            raise ValueError("negative powers are not defined in the free algebra")
        result = SuperPoly.one(self.gens)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SuperPoly)
            and self.gens == other.gens
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def parity_of(self) -> str:
        """Return "even", "odd" or "mixed"; the zero element counts as even."""
        parities = {m.parity for m in self.terms}
        if not parities:
            return PARITY_EVEN
        if parities == {EVEN}:
            return PARITY_EVEN
        if parities == {ODD}:
            return PARITY_ODD
        return PARITY_MIXED

    def homogeneous_components(self) -> dict[int, SuperPoly]:
        parts: dict[int, dict[SuperMonomial, Fraction]] = {}
        for m, c in self.terms.items():
            parts.setdefault(m.parity, {})[m] = c
        return {p: SuperPoly(self.gens, t) for p, t in parts.items()}

    def body(self) -> Fraction:
        """Coefficient of the empty monomial."""
        return self.terms.get(one_monomial(self.gens), F0)

    def soul(self) -> SuperPoly:
        """The element minus its body; nilpotent over a Grassmann algebra."""
        unit = one_monomial(self.gens)
        return SuperPoly(self.gens, {m: c for m, c in self.terms.items() if m != unit})

    def coefficient(self, mono: SuperMonomial) -> Fraction:
        return self.terms.get(mono, F0)

    def max_degree(self) -> int:
        return max((m.degree(self.gens) for m in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[SuperMonomial, Fraction]]:
        key = monomial_sort_key(self.gens)
        return sorted(self.terms.items(), key=lambda item: key(item[0]))

    def __str__(self) -> str:
        from .parsing import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"SuperPoly({self})"


def normalize_product(
    gens: GeneratorSet, factors: Iterable[str]
) -> tuple[Fraction, SuperMonomial | None]:
    """Reorder a product of generator symbols into normal form.

    Returns ``(sign, monomial)`` with sign in {+1, -1, 0}; the sign is the
    parity of the permutation restricted to the odd factors, and 0 signals a
    repeated odd generator (odd squares vanish).
    """
    exps = [0] * len(gens.evens)
    odd_positions: list[int] = []
    inversions = 0
    for symbol in factors:
        parity, pos = gens._info.get(symbol, (None, None))
        if parity is None:
            raise UnknownGenerator(symbol)
        if parity == EVEN:
            exps[pos] += 1
            continue
        # insertion into the increasing support, counting crossed odd factors
        insert_at = len(odd_positions)
        while insert_at > 0 and odd_positions[insert_at - 1] > pos:
            insert_at -= 1
        if insert_at > 0 and odd_positions[insert_at - 1] == pos:
            return F0, None
        inversions += len(odd_positions) - insert_at
        odd_positions.insert(insert_at, pos)
    sign = -F1 if inversions & 1 else F1
    return sign, SuperMonomial(tuple(exps), tuple(odd_positions))


T = TypeVar("T")


def evaluate_hom(
    poly: SuperPoly,
    images: Mapping[str, T],
    one: T,
    parity_check: Callable[[str, T], bool] | None = None,
) -> T:
    """Apply the super-algebra morphism sending each generator to its image.

    ``one`` is the unit of the target; images must support ``+`` and ``*`` and
    scalar multiplication by Fraction.  If ``parity_check`` is given it is
    called per generator and must confirm the image has the right parity.
    """
    for name in poly.gens.names:
        if name not in images:
            raise UnknownGenerator(name)
    if parity_check is not None:
        for name, image in images.items():
            if name in poly.gens and not parity_check(name, image):
                raise ParityViolation(f"image of {name} has wrong parity")
    result = None
    for mono, coeff in poly.terms.items():
        value = one
        for pos, exp in enumerate(mono.evens):
            if exp:
                img = images[poly.gens.evens[pos]]
                for _ in range(exp):
                    value = value * img
        for pos in mono.odds:
            value = value * images[poly.gens.odds[pos]]
        value = coeff * value
        result = value if result is None else result + value
    if result is None:
        return 0 * one
    return result


def parity_preserving(gens: GeneratorSet):
    """Parity check for targets with a ``parity_of`` method (zero always passes)."""

    def check(name: str, image) -> bool:
        p = image.parity_of()
        if p == PARITY_MIXED:
            return False
        expected = PARITY_EVEN if gens.parity(name) == EVEN else PARITY_ODD
        return p == expected or image.is_zero()

    return check

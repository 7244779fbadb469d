"""Super Hopf algebra presentations and symbolic axiom checking.

A presentation lists generators with parities and the generator images of
the structure maps; because the underlying algebra is free super-commutative,
every structure map extends uniquely as a super-algebra morphism (the
antipode included, thanks to super-commutativity).  GL(m|n) is presented in
identity-shifted coordinates so that all coproduct and counit data stays
polynomial; its antipode is marked pointwise-only and verified on Grassmann
points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .core import (
    F0,
    F1,
    EVEN,
    ODD,
    GeneratorSet,
    SuperMonomial,
    SuperPoly,
)
from .tensor import TensorPoly


class PresentationError(ValueError):
    """Inconsistent structure data for a Hopf presentation."""


class HopfPresentation:
    """Generators with parities plus generator images of the structure maps.

    ``antipode`` may be None, marking the antipode as pointwise-only (used
    for GL(m|n), whose antipode needs inverses that do not live in the
    polynomial coordinate ring).
    """

    def __init__(
        self,
        gens: GeneratorSet,
        delta: dict[str, TensorPoly],
        counit: dict[str, Fraction],
        antipode: dict[str, SuperPoly] | None,
        name: str = "",
        shape: tuple[int, int] | None = None,
    ):
        self.gens = gens
        self.delta = dict(delta)
        self.counit = {k: Fraction(v) for k, v in counit.items()}
        self.antipode = dict(antipode) if antipode is not None else None
        self.name = name
        self.shape = shape
        self._delta_cache: dict[SuperMonomial, TensorPoly] = {}
        self._validate()

    def _validate(self) -> None:
        for name in self.gens.names:
            if name not in self.delta:
                raise PresentationError(f"missing coproduct image for {name}")
            if name not in self.counit:
                raise PresentationError(f"missing counit image for {name}")
        for name, image in self.delta.items():
            if image.gens != (self.gens, self.gens):
                raise PresentationError(f"coproduct image of {name} lives in the wrong tensor square")
            expected = self.gens.parity(name)
            for key in image.terms:
                if (key[0].parity + key[1].parity) & 1 != expected:
                    raise PresentationError(f"coproduct image of {name} is parity-inconsistent")
        for name, value in self.counit.items():
            if self.gens.parity(name) == ODD and value != 0:
                raise PresentationError(f"counit of odd generator {name} must vanish")
        if self.antipode is not None:
            for name, image in self.antipode.items():
                expected = "odd" if self.gens.parity(name) == ODD else "even"
                if not image.is_zero() and image.parity_of() != expected:
                    raise PresentationError(f"antipode image of {name} has wrong parity")

    @property
    def has_symbolic_antipode(self) -> bool:
        return self.antipode is not None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HopfPresentation)
            and self.gens == other.gens
            and self.delta == other.delta
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    # --- morphism extensions -------------------------------------------------

    def delta_monomial(self, mono: SuperMonomial, leg_degree_bound: int | None = None) -> TensorPoly:
        """Coproduct of a normal monomial, extended multiplicatively.

        ``leg_degree_bound`` drops tensor terms as soon as either leg exceeds
        the bound; sound because multiplying by further generator images never
        lowers a leg degree.
        """
        cached = self._delta_cache.get(mono) if leg_degree_bound is None else None
        if cached is not None:
            return cached
        result = TensorPoly.unit((self.gens, self.gens))
        for pos, exp in enumerate(mono.evens):
            for _ in range(exp):
                result = result * self.delta[self.gens.evens[pos]]
                if leg_degree_bound is not None:
                    result = self._truncate_legs(result, leg_degree_bound)
        for pos in mono.odds:
            result = result * self.delta[self.gens.odds[pos]]
            if leg_degree_bound is not None:
                result = self._truncate_legs(result, leg_degree_bound)
        if leg_degree_bound is None:
            self._delta_cache[mono] = result
        return result

    def _truncate_legs(self, tensor: TensorPoly, bound: int) -> TensorPoly:
        terms = {
            key: c
            for key, c in tensor.terms.items()
            if all(m.degree(g) <= bound for m, g in zip(key, tensor.gens))
        }
        return TensorPoly(tensor.gens, terms)

    def delta_of(self, poly: SuperPoly) -> TensorPoly:
        out = TensorPoly.zero((self.gens, self.gens))
        for mono, coeff in poly.terms.items():
            out = out + self.delta_monomial(mono).scale(coeff)
        return out

    def counit_monomial(self, mono: SuperMonomial) -> Fraction:
        if mono.odds:
            return F0
        value = F1
        for pos, exp in enumerate(mono.evens):
            if exp:
                base = self.counit[self.gens.evens[pos]]
                if not base:
                    return F0
                value *= base ** exp
        return value

    def counit_of(self, poly: SuperPoly) -> Fraction:
        return sum((c * self.counit_monomial(m) for m, c in poly.terms.items()), F0)

    def antipode_of(self, poly: SuperPoly) -> SuperPoly:
        if self.antipode is None:
            raise PresentationError("antipode is pointwise-only for this presentation")
        out = SuperPoly.zero(self.gens)
        for mono, coeff in poly.terms.items():
            value = SuperPoly.one(self.gens)
            for pos, exp in enumerate(mono.evens):
                for _ in range(exp):
                    value = value * self.antipode[self.gens.evens[pos]]
            for pos in mono.odds:
                value = value * self.antipode[self.gens.odds[pos]]
            out = out + value.scale(coeff)
        return out

    def generator_poly(self, name: str) -> SuperPoly:
        return SuperPoly.generator(self.gens, name)

    def __repr__(self):
        return f"HopfPresentation({self.name or self.gens!r})"


# --- constructions -----------------------------------------------------------


def primitive_presentation(evens: list[str], odds: list[str], name: str = "") -> HopfPresentation:
    """Free super-commutative Hopf algebra with all generators primitive."""
    gens = GeneratorSet(evens, odds)
    delta = {}
    counit = {}
    antipode = {}
    for g in gens.names:
        gp = SuperPoly.generator(gens, g)
        unit = SuperPoly.one(gens)
        delta[g] = TensorPoly.of(gp, unit) + TensorPoly.of(unit, gp)
        counit[g] = F0
        antipode[g] = -gp
    return HopfPresentation(gens, delta, counit, antipode, name=name)


def exterior_hopf(n: int) -> HopfPresentation:
    """The exterior Hopf algebra on n odd primitive generators v1..vn."""
    if n < 0:
        raise ValueError("need n >= 0")
    return primitive_presentation([], [f"v{i}" for i in range(1, n + 1)], name=f"exterior({n})")


def additive_presentation(num_even: int, num_odd: int) -> HopfPresentation:
    """Coordinate Hopf algebra of the additive supergroup G_a^{even|odd}."""
    return primitive_presentation(
        [f"t{i}" for i in range(1, num_even + 1)],
        [f"tau{i}" for i in range(1, num_odd + 1)],
        name=f"additive({num_even}|{num_odd})",
    )


def glmn_entry_name(m: int, n: int, a: int, b: int) -> str:
    """Name of the (identity-shifted) matrix entry at 1-based position (a, b)."""
    if a <= m and b <= m:
        return f"x{a}{b}"
    if a <= m < b:
        return f"p{a}{b - m}"
    if a > m >= b:
        return f"q{a - m}{b}"
    return f"y{a - m}{b - m}"


def glmn_presentation(m: int, n: int) -> HopfPresentation:
    """O(GL(m|n)) in identity-shifted coordinates.

    Generators are the shifted matrix entries (vanishing at the counit); the
    coproduct is the matrix coproduct rewritten in shifted form,
    D(g_ab) = g_ab @ 1 + 1 @ g_ab + sum_c g_ac @ g_cb.  The antipode is
    pointwise-only.
    """
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    size = m + n
    evens = [f"x{i}{j}" for i in range(1, m + 1) for j in range(1, m + 1)]
    evens += [f"y{k}{l}" for k in range(1, n + 1) for l in range(1, n + 1)]
    odds = [f"p{i}{l}" for i in range(1, m + 1) for l in range(1, n + 1)]
    odds += [f"q{k}{j}" for k in range(1, n + 1) for j in range(1, m + 1)]
    gens = GeneratorSet(evens, odds)
    unit = SuperPoly.one(gens)
    delta = {}
    counit = {}
    for a in range(1, size + 1):
        for b in range(1, size + 1):
            name = glmn_entry_name(m, n, a, b)
            gp = SuperPoly.generator(gens, name)
            image = TensorPoly.of(gp, unit) + TensorPoly.of(unit, gp)
            for c in range(1, size + 1):
                left = SuperPoly.generator(gens, glmn_entry_name(m, n, a, c))
                right = SuperPoly.generator(gens, glmn_entry_name(m, n, c, b))
                image = image + TensorPoly.of(left, right)
            delta[name] = image
            counit[name] = F0
    return HopfPresentation(gens, delta, counit, antipode=None, name=f"gl({m}|{n})", shape=(m, n))


def even_quotient(pres: HopfPresentation) -> HopfPresentation:
    """Quotient by the ideal generated by the odd part: all odd generators -> 0."""
    gens = GeneratorSet(pres.gens.evens, ())

    def remap_poly(poly: SuperPoly) -> SuperPoly:
        terms = {}
        for mono, coeff in poly.terms.items():
            if mono.odds:
                continue
            terms[SuperMonomial(mono.evens, ())] = coeff
        return SuperPoly(gens, terms)

    def remap_tensor(tensor: TensorPoly) -> TensorPoly:
        terms = {}
        for (m1, m2), coeff in tensor.terms.items():
            if m1.odds or m2.odds:
                continue
            key = (SuperMonomial(m1.evens, ()), SuperMonomial(m2.evens, ()))
            terms[key] = terms.get(key, F0) + coeff
        return TensorPoly((gens, gens), terms)

    delta = {g: remap_tensor(pres.delta[g]) for g in gens.names}
    counit = {g: pres.counit[g] for g in gens.names}
    antipode = None
    if pres.antipode is not None:
        antipode = {g: remap_poly(pres.antipode[g]) for g in gens.names}
    return HopfPresentation(
        gens, delta, counit, antipode,
        name=f"{pres.name}_ev" if pres.name else "even quotient",
        shape=pres.shape,
    )


# --- axiom checking ----------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str = ""

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness:
            out["witness"] = self.witness
        return out


@dataclass
class AxiomReport:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "") -> None:
        self.checks.append(CheckResult(name, passed, witness if not passed else ""))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def check_hopf_axioms(pres: HopfPresentation, sampler=None, points: int = 0) -> AxiomReport:
    """Verify coassociativity, the counit laws and the antipode identity.

    Structure maps extend multiplicatively, so checking on generators checks
    the whole algebra.  The antipode identity is checked symbolically when
    antipode images exist; otherwise (GL(m|n)) it is checked pointwise on
    sampled Grassmann points, where it reads: the matrix assembled from the
    antipode blocks is the group inverse.
    """
    report = AxiomReport()
    gens = pres.gens
    triple = (gens, gens, gens)
    for g in gens.names:
        image = pres.delta[g]
        left = image.expand_slot(0, lambda m: pres.delta_monomial(m), (gens, gens))
        right = image.expand_slot(1, lambda m: pres.delta_monomial(m), (gens, gens))
        ok = left == right
        report.add(f"coassociativity[{g}]", ok, "" if ok else f"(D@id)D - (id@D)D = {left - right}")

        gp = pres.generator_poly(g)
        lcounit = image.contract_slot(0, pres.counit_monomial).to_single()
        rcounit = image.contract_slot(1, pres.counit_monomial).to_single()
        report.add(f"counit-left[{g}]", lcounit == gp, "" if lcounit == gp else f"(eps@id)D = {lcounit}")
        report.add(f"counit-right[{g}]", rcounit == gp, "" if rcounit == gp else f"(id@eps)D = {rcounit}")

    if pres.has_symbolic_antipode:
        for g in gens.names:
            image = pres.delta[g]
            target = SuperPoly.scalar(gens, pres.counit[g])
            conv_l = image.expand_slot(
                0, lambda m: pres.antipode_of(SuperPoly.monomial(gens, m)), (gens,)
            ).multiply_slots()
            conv_r = image.expand_slot(
                1, lambda m: pres.antipode_of(SuperPoly.monomial(gens, m)), (gens,)
            ).multiply_slots()
            report.add(
                f"antipode-left[{g}]", conv_l == target,
                "" if conv_l == target else f"m(S@id)D = {conv_l}",
            )
            report.add(
                f"antipode-right[{g}]", conv_r == target,
                "" if conv_r == target else f"m(id@S)D = {conv_r}",
            )
    elif sampler is not None and points > 0:
        from .grassmann import SuperMatrix

        failures = 0
        witness = ""
        for idx in range(points):
            point = sampler.sample(idx)
            ident = SuperMatrix.identity(point.m, point.n, point.alg)
            s_matrix = point.antipode_blocks()
            if s_matrix * point != ident or point * s_matrix != ident or s_matrix != point.inv():
                failures += 1
                if not witness:
                    witness = f"point #{idx}: {point.to_json()}"
        report.add(
            f"antipode-pointwise[{points} points]", failures == 0,
            witness if failures else "",
        )
    else:
        report.add("antipode", False, "no symbolic antipode and no point sampler provided")
    return report


# --- the odd cotangent space W^A ----------------------------------------------


@dataclass
class OddCotangent:
    """Basis of the odd cotangent space at the identity, with its certificate."""

    basis: list[str]
    degree_bound: int
    checked_dimension: int

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _monomials_up_to(gens: GeneratorSet, bound: int) -> list[SuperMonomial]:
    from itertools import combinations

    evens: list[tuple[int, ...]] = [()]
    out: list[SuperMonomial] = []
    n_even = len(gens.evens)

    def even_vectors(prefix: list[int], pos: int, remaining: int):
        if pos == n_even:
            yield tuple(prefix)
            return
        step = gens.degrees[gens.evens[pos]]
        for e in range(remaining // step + 1):
            yield from even_vectors(prefix + [e], pos + 1, remaining - e * step)

    odd_degrees = [gens.degrees[name] for name in gens.odds]
    for size in range(len(gens.odds) + 1):
        for support in combinations(range(len(gens.odds)), size):
            odd_deg = sum(odd_degrees[i] for i in support)
            if odd_deg > bound:
                continue
            for vec in even_vectors([], 0, bound - odd_deg):
                out.append(SuperMonomial(vec, support))
    return out


def compute_W(pres: HopfPresentation, degree_bound: int | None = None) -> OddCotangent:
    """Basis of A_1 / A_0^+ A_1, certified by truncated row reduction.

    For a free presentation the products of a nonconstant even-parity
    monomial with an odd-parity monomial span everything except the single
    odd generators, and the row reduction certifies exactly that.
    """
    gens = pres.gens
    if degree_bound is None:
        degree_bound = max((gens.degrees[g] for g in gens.names), default=1) + 2
    monos = _monomials_up_to(gens, degree_bound)
    odd_monos = [m for m in monos if m.parity == ODD]
    index = {m: i for i, m in enumerate(odd_monos)}
    even_nonconstant = [m for m in monos if m.parity == EVEN and not m.is_one()]

    from .core import mul_monomials

    rows = []
    for u in even_nonconstant:
        du = u.degree(gens)
        for w in odd_monos:
            if du + w.degree(gens) > degree_bound:
                continue
            prod = mul_monomials(u, w)
            if prod is None:
                continue
            sign, mono = prod
            row = [F0] * len(odd_monos)
            row[index[mono]] = F1 if sign > 0 else -F1
            rows.append(row)
    _, pivots = linalg.rref(rows) if rows else ([], [])
    pivot_set = set(pivots)
    basis_monos = [m for i, m in enumerate(odd_monos) if i not in pivot_set]
    names = []
    for mono in basis_monos:
        if any(mono.evens) or len(mono.odds) != 1:
            raise PresentationError(f"unexpected odd cotangent representative {mono}")
        names.append(gens.odds[mono.odds[0]])
    return OddCotangent(basis=names, degree_bound=degree_bound, checked_dimension=len(odd_monos))

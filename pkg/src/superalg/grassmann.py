"""Grassmann algebras, parity-patterned super matrices and GL(m|n) points.

A point of the general linear supergroup over a Grassmann algebra R is a
block matrix (X P; Q Y) with X, Y even-entried and P, Q odd-entried, whose
diagonal blocks have invertible rational body.  Inversion is exact: invert
the body over the rationals, then run the terminating nilpotent correction
series on the soul.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction

from . import linalg
from .core import (
    F1,
    GeneratorSet,
    PARITY_EVEN,
    PARITY_ODD,
    SuperMonomial,
    SuperPoly,
    evaluate_hom,
)


class NotInvertible(ValueError):
    """Grassmann element with zero body has no inverse."""


class NotAPoint(ValueError):
    """Matrix violates the GL(m|n) parity pattern or has a singular body."""


class GrassmannAlgebra:
    """The exterior algebra on k odd generators t1..tk (dimension 2^k)."""

    def __init__(self, k: int, prefix: str = "t"):
        if k < 0:
            raise ValueError("need k >= 0")
        self.k = k
        self.prefix = prefix
        self.gens = GeneratorSet(odds=[f"{prefix}{i}" for i in range(1, k + 1)])

    @property
    def dimension(self) -> int:
        return 1 << self.k

    def zero(self) -> SuperPoly:
        return SuperPoly.zero(self.gens)

    def one(self) -> SuperPoly:
        return SuperPoly.one(self.gens)

    def scalar(self, value) -> SuperPoly:
        return SuperPoly.scalar(self.gens, value)

    def theta(self, i: int) -> SuperPoly:
        """The i-th odd generator (1-based)."""
        return SuperPoly.generator(self.gens, f"{self.prefix}{i}")

    def blade(self, support: tuple[int, ...], coeff=F1) -> SuperPoly:
        """Monomial with the given increasing 0-based support."""
        return SuperPoly.monomial(self.gens, SuperMonomial((), tuple(support)), coeff)

    def basis(self):
        from itertools import combinations

        for size in range(self.k + 1):
            for support in combinations(range(self.k), size):
                yield SuperMonomial((), support)

    def __eq__(self, other):
        return isinstance(other, GrassmannAlgebra) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"GrassmannAlgebra(k={self.k})"


def invert_element(r: SuperPoly) -> SuperPoly:
    """Exact inverse of a Grassmann element with nonzero body.

    Computed as body^-1 * sum_i (-soul/body)^i; the series terminates because
    the soul is nilpotent.
    """
    body = r.body()
    if not body:
        raise NotInvertible("element has zero body")
    nilpotent = r.soul().scale(-1 / body)
    result = SuperPoly.one(r.gens)
    power = SuperPoly.one(r.gens)
    while True:
        power = power * nilpotent
        if power.is_zero():
            break
        result = result + power
    return result.scale(1 / body)


def _matrix_body(rows) -> linalg.Matrix:
    return [[entry.body() for entry in row] for row in rows]


def grassmann_matrix_inv(rows, alg: GrassmannAlgebra):
    """Inverse of a square matrix over a Grassmann algebra.

    Requires the rational body matrix to be invertible; the remaining soul
    part is nilpotent, so the Neumann series terminates.
    """
    n = len(rows)
    body = _matrix_body(rows)
    body_inv = linalg.invert(body)
    if body_inv is None:
        raise NotAPoint("matrix body is singular")
    one = alg.one()
    binv = [[one.scale(body_inv[i][j]) if body_inv[i][j] else alg.zero() for j in range(n)] for i in range(n)]
    # N = body_inv * soul;  inverse = (sum (-N)^i) * body_inv
    soul = [[rows[i][j].soul() for j in range(n)] for i in range(n)]
    nil = _poly_mat_mul(binv, soul, alg)
    neg = [[-nil[i][j] for j in range(n)] for i in range(n)]
    total = [[one if i == j else alg.zero() for j in range(n)] for i in range(n)]
    power = total
    while True:
        power = _poly_mat_mul(power, neg, alg)
        if all(entry.is_zero() for row in power for entry in row):
            break
        total = [[total[i][j] + power[i][j] for j in range(n)] for i in range(n)]
    return _poly_mat_mul(total, binv, alg)


def _poly_mat_mul(a, b, alg: GrassmannAlgebra):
    from .core import _MUL_CACHE, mul_monomials

    rows, inner = len(a), len(b)
    cols = len(b[0]) if inner else 0
    gens = alg.gens
    cache_get = _MUL_CACHE.get
    out = []
    for i in range(rows):
        row = []
        ai = a[i]
        for j in range(cols):
            acc: dict = {}
            get = acc.get
            for k in range(inner):
                left = ai[k].terms
                if not left:
                    continue
                right = b[k][j].terms
                if not right:
                    continue
                for m1, c1 in left.items():
                    for m2, c2 in right.items():
                        prod = cache_get((m1, m2), _MUL_CACHE)
                        if prod is _MUL_CACHE:
                            prod = mul_monomials(m1, m2)
                        if prod is None:
                            continue
                        sign, mono = prod
                        c = c1 * c2 if sign > 0 else -(c1 * c2)
                        s = get(mono)
                        if s is None:
                            acc[mono] = c
                        else:
                            s = s + c
                            if s:
                                acc[mono] = s
                            else:
                                del acc[mono]
            entry = SuperPoly.__new__(SuperPoly)
            entry.gens, entry.terms = gens, acc
            row.append(entry)
        out.append(row)
    return out


class SuperMatrix:
    """(m|n)-patterned block matrix over a Grassmann algebra."""

    __slots__ = ("m", "n", "alg", "rows")

    def __init__(self, m: int, n: int, alg: GrassmannAlgebra, rows):
        self.m = m
        self.n = n
        self.alg = alg
        size = m + n
        if len(rows) != size or any(len(r) != size for r in rows):
            raise ValueError("matrix has the wrong shape")
        self.rows = tuple(tuple(row) for row in rows)

    @classmethod
    def identity(cls, m: int, n: int, alg: GrassmannAlgebra) -> SuperMatrix:
        size = m + n
        return cls(
            m, n, alg,
            [[alg.one() if i == j else alg.zero() for j in range(size)] for i in range(size)],
        )

    @classmethod
    def from_blocks(cls, x, p, q, y, alg: GrassmannAlgebra) -> SuperMatrix:
        m, n = len(x), len(y)
        rows = [list(x[i]) + list(p[i]) for i in range(m)]
        rows += [list(q[k]) + list(y[k]) for k in range(n)]
        return cls(m, n, alg, rows)

    @property
    def size(self) -> int:
        return self.m + self.n

    def block_x(self):
        return [list(self.rows[i][: self.m]) for i in range(self.m)]

    def block_p(self):
        return [list(self.rows[i][self.m :]) for i in range(self.m)]

    def block_q(self):
        return [list(self.rows[self.m + k][: self.m]) for k in range(self.n)]

    def block_y(self):
        return [list(self.rows[self.m + k][self.m :]) for k in range(self.n)]

    def entry_parity(self, i: int, j: int) -> int:
        return (i >= self.m) ^ (j >= self.m)

    def __mul__(self, other: SuperMatrix) -> SuperMatrix:
        if (self.m, self.n) != (other.m, other.n) or self.alg != other.alg:
            raise ValueError("shape or base algebra mismatch")
        rows = _poly_mat_mul([list(r) for r in self.rows], [list(r) for r in other.rows], self.alg)
        return SuperMatrix(self.m, self.n, self.alg, rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SuperMatrix)
            and (self.m, self.n) == (other.m, other.n)
            and self.alg == other.alg
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.m, self.n, self.rows))

    def map_entries(self, fn, alg: GrassmannAlgebra | None = None) -> SuperMatrix:
        return SuperMatrix(self.m, self.n, alg or self.alg, [[fn(e) for e in row] for row in self.rows])

    def parity_pattern_ok(self) -> bool:
        for i in range(self.size):
            for j in range(self.size):
                entry = self.rows[i][j]
                if entry.is_zero():
                    continue
                expected = PARITY_ODD if self.entry_parity(i, j) else PARITY_EVEN
                if entry.parity_of() != expected:
                    return False
        return True

    def body_matrix(self) -> linalg.Matrix:
        return _matrix_body(self.rows)

    def is_gl_point(self) -> bool:
        """Parity pattern holds and both diagonal body blocks are invertible."""
        if not self.parity_pattern_ok():
            return False
        xb = _matrix_body(self.block_x())
        yb = _matrix_body(self.block_y())
        if self.m and linalg.invert(xb) is None:
            return False
        if self.n and linalg.invert(yb) is None:
            return False
        return True

    def inv(self) -> SuperMatrix:
        """Exact two-sided inverse (body inversion plus nilpotent series)."""
        if not self.is_gl_point():
            raise NotAPoint("not a GL(m|n) point")
        rows = grassmann_matrix_inv([list(r) for r in self.rows], self.alg)
        return SuperMatrix(self.m, self.n, self.alg, rows)

    def antipode_blocks(self) -> SuperMatrix:
        """Matrix assembled from the closed-form antipode blocks.

        S(X) = (X - P Y^-1 Q)^-1,   S(Y) = (Y - Q X^-1 P)^-1,
        S(P) = -X^-1 P S(Y),        S(Q) = -Y^-1 Q S(X).
        Must equal ``inv()`` exactly.
        """
        if not self.is_gl_point():
            raise NotAPoint("not a GL(m|n) point")
        alg = self.alg
        x, p, q, y = self.block_x(), self.block_p(), self.block_q(), self.block_y()
        x_inv = grassmann_matrix_inv(x, alg) if self.m else []
        y_inv = grassmann_matrix_inv(y, alg) if self.n else []

        def mm(*mats):
            out = mats[0]
            for mat in mats[1:]:
                out = _poly_mat_mul(out, mat, alg)
            return out

        def msub(a, b):
            return [[a[i][j] - b[i][j] for j in range(len(a[0]))] for i in range(len(a))]

        def mneg(a):
            return [[-e for e in row] for row in a]

        if self.m and self.n:
            s_x = grassmann_matrix_inv(msub(x, mm(p, y_inv, q)), alg)
            s_y = grassmann_matrix_inv(msub(y, mm(q, x_inv, p)), alg)
            s_p = mneg(mm(x_inv, p, s_y))
            s_q = mneg(mm(y_inv, q, s_x))
        else:
            s_x, s_y = x_inv, y_inv
            s_p = [[alg.zero()] * self.n for _ in range(self.m)]
            s_q = [[alg.zero()] * self.m for _ in range(self.n)]
        return SuperMatrix.from_blocks(s_x, s_p, s_q, s_y, alg)

    def decomposition_coords(self):
        """Split a point into (X, Y, p', q') with p' = X^-1 P and q' = Y^-1 Q.

        All entries of p', q' are odd and the point is recovered exactly via
        P = X p', Q = Y q'; the identity decomposes as (identity, 0, 0).
        """
        if not self.is_gl_point():
            raise NotAPoint("not a GL(m|n) point")
        alg = self.alg
        x, p, q, y = self.block_x(), self.block_p(), self.block_q(), self.block_y()
        x_inv = grassmann_matrix_inv(x, alg) if self.m else []
        y_inv = grassmann_matrix_inv(y, alg) if self.n else []
        pprime = _poly_mat_mul(x_inv, p, alg) if self.m and self.n else [[alg.zero()] * self.n for _ in range(self.m)]
        qprime = _poly_mat_mul(y_inv, q, alg) if self.m and self.n else [[alg.zero()] * self.m for _ in range(self.n)]
        return x, y, pprime, qprime

    @classmethod
    def from_decomposition(cls, x, y, pprime, qprime, alg: GrassmannAlgebra) -> SuperMatrix:
        """Rebuild the point: P = X p', Q = Y q'."""
        m, n = len(x), len(y)
        p = _poly_mat_mul(x, pprime, alg) if m and n else [[alg.zero()] * n for _ in range(m)]
        q = _poly_mat_mul(y, qprime, alg) if m and n else [[alg.zero()] * m for _ in range(n)]
        return cls.from_blocks(x, p, q, y, alg)

    def to_json(self) -> str:
        """Deterministic JSON: shape plus (odd-support, rational) term lists."""
        entries = []
        for row in self.rows:
            out_row = []
            for entry in row:
                items = sorted(entry.terms.items(), key=lambda kv: kv[0].odds)
                out_row.append(
                    [[list(m.odds), [c.numerator, c.denominator]] for m, c in items]
                )
            entries.append(out_row)
        return json.dumps(
            {"shape": [self.m, self.n, self.alg.k], "entries": entries},
            sort_keys=True,
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> SuperMatrix:
        data = json.loads(text)
        m, n, k = data["shape"]
        alg = GrassmannAlgebra(k)
        rows = []
        for row in data["entries"]:
            out_row = []
            for entry in row:
                terms = {
                    SuperMonomial((), tuple(support)): Fraction(num, den)
                    for support, (num, den) in entry
                }
                out_row.append(SuperPoly(alg.gens, terms))
            rows.append(out_row)
        return cls(m, n, alg, rows)

    def __repr__(self):
        return f"SuperMatrix(m={self.m}, n={self.n}, k={self.alg.k})"


class PointSampler:
    """Seeded sampler of GL(m|n) points over a Grassmann algebra.

    Diagonal body blocks are built invertible by construction (unit lower
    times diagonal of nonzero small rationals times unit upper); souls draw a
    bounded number of monomials with small integer coefficients.
    """

    _BODY_POOL = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(3)]
    _COEFF_POOL = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(-1, 2)]

    def __init__(self, m: int, n: int, k: int, seed: int):
        self.m = m
        self.n = n
        self.alg = GrassmannAlgebra(k)
        self.seed = seed
        self._rng = random.Random(seed)

    def _support(self, rng: random.Random, size: int) -> tuple[int, ...]:
        return tuple(sorted(rng.sample(range(self.alg.k), size)))

    def _even_soul(self, rng: random.Random) -> SuperPoly:
        terms = {}
        if self.alg.k >= 2 and rng.random() < 0.8:
            terms[SuperMonomial((), self._support(rng, 2))] = rng.choice(self._COEFF_POOL)
        if self.alg.k >= 4 and rng.random() < 0.2:
            terms[SuperMonomial((), self._support(rng, 4))] = rng.choice(self._COEFF_POOL)
        return SuperPoly(self.alg.gens, terms)

    def _odd_entry(self, rng: random.Random) -> SuperPoly:
        terms = {}
        if self.alg.k >= 1 and rng.random() < 0.9:
            terms[SuperMonomial((), self._support(rng, 1))] = rng.choice(self._COEFF_POOL)
        if self.alg.k >= 3 and rng.random() < 0.2:
            terms[SuperMonomial((), self._support(rng, 3))] = rng.choice(self._COEFF_POOL)
        return SuperPoly(self.alg.gens, terms)

    def _invertible_body(self, rng: random.Random, size: int) -> linalg.Matrix:
        lower = linalg.identity(size)
        upper = linalg.identity(size)
        for i in range(size):
            for j in range(i):
                if rng.random() < 0.5:
                    lower[i][j] = rng.choice(self._COEFF_POOL)
                if rng.random() < 0.5:
                    upper[j][i] = rng.choice(self._COEFF_POOL)
        diag = linalg.zeros(size, size)
        for i in range(size):
            diag[i][i] = rng.choice(self._BODY_POOL)
        return linalg.mat_mul(linalg.mat_mul(lower, diag), upper)

    def sample(self, index: int | None = None) -> SuperMatrix:
        """One point; with ``index`` given, drawn from a derived per-case seed."""
        rng = self._rng if index is None else random.Random(self.seed * 1_000_003 + index)
        m, n, alg = self.m, self.n, self.alg
        xb = self._invertible_body(rng, m)
        yb = self._invertible_body(rng, n)
        x = [[alg.scalar(xb[i][j]) + self._even_soul(rng) for j in range(m)] for i in range(m)]
        y = [[alg.scalar(yb[i][j]) + self._even_soul(rng) for j in range(n)] for i in range(n)]
        p = [[self._odd_entry(rng) for _ in range(n)] for _ in range(m)]
        q = [[self._odd_entry(rng) for _ in range(m)] for _ in range(n)]
        return SuperMatrix.from_blocks(x, p, q, y, alg)

    def sample_even(self, index: int | None = None) -> SuperMatrix:
        """A point of the even subgroup: P = Q = 0, entries in the even part."""
        point = self.sample(index)
        zero = self.alg.zero()
        m, n = self.m, self.n
        p = [[zero] * n for _ in range(m)]
        q = [[zero] * m for _ in range(n)]
        return SuperMatrix.from_blocks(point.block_x(), p, q, point.block_y(), self.alg)


def truncate_map(source: GrassmannAlgebra, target: GrassmannAlgebra):
    """Algebra map Λ(t1..tk) -> Λ(t1..tk') sending surplus generators to 0."""
    images = {}
    for i in range(1, source.k + 1):
        if i <= target.k:
            images[f"{source.prefix}{i}"] = target.theta(i)
        else:
            images[f"{source.prefix}{i}"] = target.zero()

    def apply(p: SuperPoly) -> SuperPoly:
        return evaluate_hom(p, images, target.one())

    return apply

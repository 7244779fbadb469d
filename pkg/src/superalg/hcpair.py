"""Harish-Chandra pairs, the symplectic-odd construction, and envelopes.

A pair consists of an even Lie algebra with a right module of odd vectors
and a symmetric bracket from pairs of odd vectors back into the even part.
The flagship instance takes the symplectic Lie algebra (matrices X with XJ
symmetric) acting on row vectors, with bracket J(tv w + tw v)/2.  The
assembled super Lie algebra and the truncated PBW envelope are verified
exhaustively and exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .core import F0, F1, GeneratorSet, SuperPoly
from .liealg import StructureError, SuperLieAlgebraData

Vec = dict[int, Fraction]
Matrix = list[list[Fraction]]


@dataclass
class SymplecticData:
    """Basis of the symplectic Lie algebra for a fixed antisymmetric J."""

    r: int
    J: Matrix
    basis: list[Matrix]
    labels: list[str]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def standard_J(r: int) -> Matrix:
    """Block form (0 I; -I 0); any invertible antisymmetric choice is isomorphic."""
    size = 2 * r
    J = linalg.zeros(size, size)
    for i in range(r):
        J[i][r + i] = F1
        J[r + i][i] = -F1
    return J


def sp_basis(r: int) -> SymplecticData:
    """Solve the linear condition 'XJ symmetric' for a basis of sp_2r."""
    if r < 1:
        raise ValueError("need r >= 1")
    size = 2 * r
    J = standard_J(r)
    # unknowns: entries of X, row-major; constraints: XJ - t(XJ) = 0
    rows = []
    for a in range(size):
        for b in range(a + 1, size):
            row = [F0] * (size * size)
            for k in range(size):
                row[a * size + k] += J[k][b]
                row[b * size + k] -= J[k][a]
            rows.append(row)
    basis_vectors = linalg.nullspace(rows)
    basis = []
    for vec in basis_vectors:
        lead = next(c for c in vec if c)
        vec = [c / lead for c in vec]
        basis.append([[vec[i * size + j] for j in range(size)] for i in range(size)])
    labels = [f"X{i + 1}" for i in range(len(basis))]
    return SymplecticData(r=r, J=J, basis=basis, labels=labels)


def _flatten(matrix: Matrix) -> list[Fraction]:
    return [entry for row in matrix for entry in row]


def _coords_in(basis: list[Matrix], matrix: Matrix) -> Vec | None:
    columns = [_flatten(b) for b in basis]
    span = [[columns[j][i] for j in range(len(basis))] for i in range(len(columns[0]))]
    coords = linalg.solve(span, _flatten(matrix))
    if coords is None:
        return None
    return {i: c for i, c in enumerate(coords) if c}


def _commutator(a: Matrix, b: Matrix) -> Matrix:
    return [
        [x - y for x, y in zip(ra, rb)]
        for ra, rb in zip(linalg.mat_mul(a, b), linalg.mat_mul(b, a))
    ]


@dataclass
class HCPair:
    """Even Lie data, a right module of odd row vectors, and a symmetric bracket.

    ``action[k]`` is the matrix of the right action of the k-th even basis
    element (v acts as v @ action[k]); ``vbracket[(i, j)]`` expands the
    bracket of odd basis vectors in even coordinates.
    """

    g0_labels: list[str]
    g0_bracket: dict[tuple[int, int], Vec]
    action: list[Matrix]
    v_dim: int
    vbracket: dict[tuple[int, int], Vec]
    v_labels: list[str] = field(default_factory=list)
    g0_matrices: list[Matrix] | None = None
    J: Matrix | None = None

    def __post_init__(self):
        if not self.v_labels:
            self.v_labels = [f"e{i + 1}" for i in range(self.v_dim)]

    @property
    def g0_dim(self) -> int:
        return len(self.g0_labels)

    def act(self, v: list[Fraction], k: int) -> list[Fraction]:
        row = [F0] * self.v_dim
        for a in range(self.v_dim):
            if v[a]:
                for b in range(self.v_dim):
                    row[b] += v[a] * self.action[k][a][b]
        return row


def validate_hcpair(pair: HCPair) -> list[str]:
    """Check symmetry, v <| [v,v] = 0, and equivariance; returns failures.

    Symmetry and equivariance are multilinear, so basis tuples suffice; the
    cubic condition v <| [v,v] = 0 is checked symbolically in polynomial
    coordinates, which covers every vector at once.
    """
    failures: list[str] = []
    vd, gd = pair.v_dim, pair.g0_dim

    for i in range(vd):
        for j in range(vd):
            if pair.vbracket.get((i, j), {}) != pair.vbracket.get((j, i), {}):
                failures.append(f"symmetry fails at ({pair.v_labels[i]}, {pair.v_labels[j]})")

    # v <| [v,v] with v = sum c_i e_i, c_i commuting indeterminates
    coords = GeneratorSet(evens=[f"c{i + 1}" for i in range(vd)])
    c = [SuperPoly.generator(coords, f"c{i + 1}") for i in range(vd)]
    zero = SuperPoly.zero(coords)
    # entries of the even matrix [v,v] as polynomials
    acted = [zero for _ in range(vd)]
    for i in range(vd):
        for j in range(vd):
            coeff_poly = c[i] * c[j]
            for k, ck in pair.vbracket.get((i, j), {}).items():
                mat = pair.action[k]
                # contribution of c_i c_j ck * (v . M_k)
                for a in range(vd):
                    for b in range(vd):
                        if mat[a][b]:
                            acted[b] = acted[b] + coeff_poly * c[a] * (ck * mat[a][b])
    if any(not entry.is_zero() for entry in acted):
        failures.append("v <| [v,v] does not vanish identically")

    for a in range(vd):
        for b in range(vd):
            for k in range(gd):
                lhs: Vec = {}
                for l in range(vd):
                    coeff = pair.action[k][a][l]
                    if coeff:
                        for t, ct in pair.vbracket.get((l, b), {}).items():
                            lhs[t] = lhs.get(t, F0) + coeff * ct
                for l in range(vd):
                    coeff = pair.action[k][b][l]
                    if coeff:
                        for t, ct in pair.vbracket.get((a, l), {}).items():
                            lhs[t] = lhs.get(t, F0) + coeff * ct
                rhs: Vec = {}
                for t, ct in pair.vbracket.get((a, b), {}).items():
                    for s, cs in pair.g0_bracket.get((t, k), {}).items():
                        rhs[s] = rhs.get(s, F0) + ct * cs
                lhs = {t: v for t, v in lhs.items() if v}
                rhs = {s: v for s, v in rhs.items() if v}
                if lhs != rhs:
                    failures.append(
                        f"equivariance fails at ({pair.v_labels[a]}, {pair.v_labels[b]}, {pair.g0_labels[k]})"
                    )
    return failures


def spo_pair(r: int, half: bool = True) -> HCPair:
    """The pair behind the ortho-symplectic supergroup of type (1|2r).

    V is the space of row vectors of length 2r with the right matrix action;
    the bracket is J(tv w + tw v)/2.  Passing ``half=False`` drops the 1/2
    normalisation (a negative-control variant).
    """
    data = sp_basis(r)
    size = 2 * r
    g0_bracket: dict[tuple[int, int], Vec] = {}
    for i in range(data.dimension):
        for j in range(data.dimension):
            coords = _coords_in(data.basis, _commutator(data.basis[i], data.basis[j]))
            if coords is None:
                raise StructureError("sp basis is not closed under commutators")
            if coords:
                g0_bracket[(i, j)] = coords
    scale = Fraction(1, 2) if half else F1
    vbracket: dict[tuple[int, int], Vec] = {}
    for a in range(size):
        for b in range(size):
            # J (t e_a e_b + t e_b e_a): entry (i, j) = J[i][a] [b==j] + J[i][b] [a==j]
            matrix = linalg.zeros(size, size)
            for i in range(size):
                matrix[i][b] += scale * data.J[i][a]
                matrix[i][a] += scale * data.J[i][b]
            coords = _coords_in(data.basis, matrix)
            if coords is None:
                raise StructureError("odd bracket does not land in sp")
            if coords:
                vbracket[(a, b)] = coords
    return HCPair(
        g0_labels=list(data.labels),
        g0_bracket=g0_bracket,
        action=list(data.basis),
        v_dim=size,
        vbracket=vbracket,
        g0_matrices=data.basis,
        J=data.J,
    )


def abelian_pair(g0_dim: int, v_dim: int) -> HCPair:
    """All brackets zero and trivial action; the semi-direct degenerate case."""
    return HCPair(
        g0_labels=[f"X{i + 1}" for i in range(g0_dim)],
        g0_bracket={},
        action=[linalg.zeros(v_dim, v_dim) for _ in range(g0_dim)],
        v_dim=v_dim,
        vbracket={},
    )


def build_super_lie(pair: HCPair, check: bool = True) -> SuperLieAlgebraData:
    """Assemble g = g_0 (+) V with the pair's bracket and verify all axioms.

    Brackets: even-even from the g_0 structure constants, [v, X] = v <| X,
    [X, v] = -v <| X, and odd-odd from the pair.  ``check`` runs grading,
    super antisymmetry and the exhaustive super Jacobi scan, raising
    StructureError with the offending tuple on failure.
    """
    gd, vd = pair.g0_dim, pair.v_dim
    labels = list(pair.g0_labels) + list(pair.v_labels)
    parity = [0] * gd + [1] * vd
    bracket: dict[tuple[int, int], Vec] = {}
    for (i, j), vec in pair.g0_bracket.items():
        bracket[(i, j)] = dict(vec)
    for k in range(gd):
        for a in range(vd):
            row = {gd + b: pair.action[k][a][b] for b in range(vd) if pair.action[k][a][b]}
            if row:
                bracket[(gd + a, k)] = row
                bracket[(k, gd + a)] = {key: -c for key, c in row.items()}
    for (a, b), vec in pair.vbracket.items():
        if vec:
            bracket[(gd + a, gd + b)] = dict(vec)
    data = SuperLieAlgebraData(labels=labels, parity=parity, bracket=bracket)
    if check:
        data.validate()
    return data


# --- truncated PBW envelope -----------------------------------------------------


@dataclass
class TruncatedEnvelope:
    """Degree-bounded piece of the smash envelope modulo the pair's relations."""

    degree_bound: int
    words: list[tuple[int, ...]]
    labels: list[str]
    dims_by_degree: list[int]
    product: dict[tuple[int, int], Vec]
    lie: SuperLieAlgebraData

    @property
    def dimension(self) -> int:
        return len(self.words)


def _normal_words(g0_dim: int, v_dim: int, degree: int) -> list[tuple[int, ...]]:
    """Non-decreasing words, odd letters (>= g0_dim) strictly increasing."""
    out: list[tuple[int, ...]] = []

    def extend(word: tuple[int, ...], last: int, remaining: int):
        out.append(word)
        if remaining == 0:
            return
        for letter in range(last, g0_dim + v_dim):
            if letter >= g0_dim and word and word[-1] == letter:
                continue  # odd squares rewrite away
            extend(word + (letter,), letter, remaining - 1)

    extend((), 0, degree)
    return sorted(set(out), key=lambda w: (len(w), w))


class _Rewriter:
    """Leftmost rewriting to the ordered PBW normal form, with memoisation."""

    def __init__(self, lie: SuperLieAlgebraData):
        self.lie = lie
        self.cache: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}

    def rewrite(self, word: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        cached = self.cache.get(word)
        if cached is not None:
            return cached
        parity = self.lie.parity
        spot = None
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a > b or (a == b and parity[a]):
                spot = i
                break
        if spot is None:
            result = {word: F1}
            self.cache[word] = result
            return result
        a, b = word[spot], word[spot + 1]
        head, tail = word[:spot], word[spot + 2 :]
        result: dict[tuple[int, ...], Fraction] = {}
        if a == b:
            # odd square: a a = [a,a] / 2
            for k, c in self.lie.bracket_basis(a, a).items():
                for w, cw in self.rewrite(head + (k,) + tail).items():
                    s = result.get(w, F0) + Fraction(c, 2) * cw
                    if s:
                        result[w] = s
                    else:
                        result.pop(w, None)
        else:
            sign = -F1 if parity[a] and parity[b] else F1
            for w, cw in self.rewrite(head + (b, a) + tail).items():
                s = result.get(w, F0) + sign * cw
                if s:
                    result[w] = s
                else:
                    result.pop(w, None)
            for k, c in self.lie.bracket_basis(a, b).items():
                for w, cw in self.rewrite(head + (k,) + tail).items():
                    s = result.get(w, F0) + c * cw
                    if s:
                        result[w] = s
                    else:
                        result.pop(w, None)
        self.cache[word] = result
        return result


def truncated_envelope(pair: HCPair, degree_bound: int) -> TruncatedEnvelope:
    """Rewrite the tensor algebra on g_0 (+) V modulo the PBW relations.

    Products of normal words are rewritten to the ordered normal form; the
    resulting table is checked associative on every triple whose degrees fit
    inside the bound (non-confluence would surface here and raises with the
    witness triple).
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    lie = build_super_lie(pair, check=True)
    gd, vd = pair.g0_dim, pair.v_dim
    words = _normal_words(gd, vd, degree_bound)
    index = {w: i for i, w in enumerate(words)}
    labels = []
    all_labels = lie.labels
    for w in words:
        labels.append("1" if not w else "*".join(all_labels[letter] for letter in w))
    dims = [0] * (degree_bound + 1)
    for w in words:
        dims[len(w)] += 1

    rewriter = _Rewriter(lie)
    product: dict[tuple[int, int], Vec] = {}
    for i, w1 in enumerate(words):
        for j, w2 in enumerate(words):
            if len(w1) + len(w2) > degree_bound:
                continue
            expansion = rewriter.rewrite(w1 + w2)
            product[(i, j)] = {index[w]: c for w, c in expansion.items()}

    def table_mul(u: Vec, v_idx: int) -> Vec | None:
        out: Vec = {}
        for wi, c in u.items():
            cell = product.get((wi, v_idx))
            if cell is None:
                return None
            for k, ck in cell.items():
                s = out.get(k, F0) + c * ck
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    for i, w1 in enumerate(words):
        for j, w2 in enumerate(words):
            for k, w3 in enumerate(words):
                if len(w1) + len(w2) + len(w3) > degree_bound:
                    continue
                left = table_mul(product[(i, j)], k)
                right_inner = product[(j, k)]
                right: Vec = {}
                for t, c in right_inner.items():
                    cell = product.get((i, t))
                    for s, cs in cell.items():
                        val = right.get(s, F0) + c * cs
                        if val:
                            right[s] = val
                        else:
                            right.pop(s, None)
                if left != right:
                    raise StructureError(
                        f"rewriting is not confluent at words ({labels[i]}, {labels[j]}, {labels[k]})"
                    )
    return TruncatedEnvelope(
        degree_bound=degree_bound, words=words, labels=labels,
        dims_by_degree=dims, product=product, lie=lie,
    )


def envelope_pbw_count(g0_dim: int, v_dim: int, degree_bound: int) -> int:
    """Sum over degrees of (multisets over g_0 basis) x (subsets of V basis)."""
    total = 0
    for degree in range(degree_bound + 1):
        for odd_size in range(min(v_dim, degree) + 1):
            choose = 1
            for i in range(odd_size):
                choose = choose * (v_dim - i) // (i + 1)
            even_size = degree - odd_size
            multi = 1
            if even_size:
                if g0_dim == 0:
                    continue
                for i in range(even_size):
                    multi = multi * (g0_dim + even_size - 1 - i) // (i + 1)
            total += choose * multi
    return total


# --- group-level symplectic checks ------------------------------------------------


def is_symplectic(g: Matrix, J: Matrix) -> bool:
    """Exact membership test g J tg = J."""
    return linalg.mat_mul(linalg.mat_mul(g, J), linalg.transpose(g)) == J


def sample_transvections(r: int, count: int, seed: int) -> list[Matrix]:
    """Exact unipotent symplectic elements I + c J tu u (squares to zero)."""
    rng = random.Random(seed)
    size = 2 * r
    J = standard_J(r)
    out = []
    pool = [F1, -F1, Fraction(2), Fraction(1, 2), Fraction(-1, 2)]
    for _ in range(count):
        u = [Fraction(rng.randint(-2, 2)) for _ in range(size)]
        if not any(u):
            u[rng.randrange(size)] = F1
        c = rng.choice(pool)
        # N = c J tu u lies in sp, N^2 = 0 and (I + N) J t(I + N) = J
        ju = [sum((J[i][a] * u[a] for a in range(size)), F0) for i in range(size)]
        N = [[c * ju[i] * u[j] for j in range(size)] for i in range(size)]
        g = [[(F1 if i == j else F0) + N[i][j] for j in range(size)] for i in range(size)]
        out.append(g)
    return out


def group_bracket_equivariance(pair: HCPair, g: Matrix) -> bool:
    """[u g, v g] = g^-1 [u, v] g for the pair's bracket, exactly."""
    size = pair.v_dim
    ginv = linalg.invert(g)
    if ginv is None:
        return False
    basis = [[F1 if i == j else F0 for j in range(size)] for i in range(size)]
    mats = pair.g0_matrices
    if mats is None:
        raise ValueError("pair carries no matrix realisation")

    def bracket_matrix(u: list[Fraction], v: list[Fraction]) -> Matrix:
        out = linalg.zeros(size, size)
        for a in range(size):
            for b in range(size):
                cc = u[a] * v[b]
                if not cc:
                    continue
                vec = pair.vbracket.get((a, b), {})
                for k, ck in vec.items():
                    m = mats[k]
                    for i in range(size):
                        for j in range(size):
                            if m[i][j]:
                                out[i][j] += cc * ck * m[i][j]
        return out

    for a in range(size):
        for b in range(size):
            ua = [g[a][j] for j in range(size)]  # e_a . g is row a of g
            vb = [g[b][j] for j in range(size)]
            lhs = bracket_matrix(ua, vb)
            rhs = linalg.mat_mul(linalg.mat_mul(ginv, bracket_matrix(basis[a], basis[b])), g)
            if lhs != rhs:
                return False
    return True

"""Truncated duals (A/(A+)^n)* and the super Lie algebra of primitives.

The hyperalgebra of a supergroup is materialised to finite order: for a
presentation in identity-shifted coordinates the quotient A/(A+)^n has the
normal monomials of total degree < n as a basis, and the dual carries the
convolution product (truncated back to the basis) and the coproduct dual to
multiplication.  Products of functionals whose degrees sum below the order
are exact; the chain of truncations represents the union.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from . import linalg
from .core import F0, F1, EVEN, ODD, SuperMonomial, mul_monomials
from .hopf import HopfPresentation, PresentationError, _monomials_up_to
from .liealg import StructureError, SuperLieAlgebraData

Vec = dict[int, Fraction]


@dataclass
class TruncatedDual:
    """The finite-dimensional algebra/coalgebra (A/(A+)^n)* on dual monomials."""

    order: int
    presentation: HopfPresentation
    basis: list[SuperMonomial]
    labels: list[str]
    parity: list[int]
    degree: list[int]
    product: dict[tuple[int, int], Vec]
    coproduct: dict[int, Vec2]
    unit_index: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def index_of(self, mono: SuperMonomial) -> int:
        return self._index[mono]

    def __post_init__(self):
        self._index = {m: i for i, m in enumerate(self.basis)}

    def vec_product(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, ci in u.items():
            for j, cj in v.items():
                for k, ck in self.product.get((i, j), {}).items():
                    s = out.get(k, F0) + ci * cj * ck
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def check_associative_unital(self) -> None:
        """Full table check; exact because degrees only add."""
        dim = self.dimension
        unit = {self.unit_index: F1}
        for i in range(dim):
            if self.vec_product(unit, {i: F1}) != {i: F1}:
                raise StructureError(f"unit law fails at {self.labels[i]}")
            if self.vec_product({i: F1}, unit) != {i: F1}:
                raise StructureError(f"unit law fails at {self.labels[i]}")
        for i in range(dim):
            for j in range(dim):
                ij = self.product.get((i, j), {})
                for k in range(dim):
                    lhs = self.vec_product(ij, {k: F1})
                    rhs = self.vec_product({i: F1}, self.product.get((j, k), {}))
                    if lhs != rhs:
                        raise StructureError(
                            f"associativity fails at ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                        )

    def counit_is_unique_group_like(self) -> bool:
        """Certify that the counit functional is the only group-like element.

        A group-like u is an algebra map on the quotient, hence determined by
        its generator values c_g; since g^k vanishes in the quotient for some
        k (k = order for even g, 2 for odd g), c_g^k = 0 forces every c_g = 0
        over the rationals, and u = counit on all monomials.  The direct
        group-like property of the counit is checked from the tables.
        """
        eps = {self.unit_index: F1}
        # coproduct of eps must be eps (x) eps, and eps(1) = 1
        image = self.coproduct.get(self.unit_index, {})
        if image != {(self.unit_index, self.unit_index): F1}:
            return False
        gens = self.presentation.gens
        for name in gens.names:
            if gens.parity(name) == ODD:
                continue  # odd squares vanish identically, forcing c_g = 0
            exps = [0] * len(gens.evens)
            exps[gens.position(name)] = self.order
            if self._reduce(SuperMonomial(tuple(exps), ())):
                return False  # power survives the truncation: no certificate
        return True

    def _reduce(self, mono: SuperMonomial) -> Vec:
        if mono in self._index:
            return {self._index[mono]: F1}
        return {}

    def embeds_in(self, larger: TruncatedDual) -> bool:
        """Compatibility of the inclusion into the next-order dual.

        Coproducts agree exactly on the common basis; products agree exactly
        when the degrees sum below this order, and after truncation otherwise
        (the union carries the full product).
        """
        if larger.order < self.order:
            return False
        mapping = {i: larger.index_of(m) for i, m in enumerate(self.basis)}
        for i in range(self.dimension):
            img = {
                (mapping[j], mapping[k]): c
                for (j, k), c in self.coproduct.get(i, {}).items()
            }
            if img != larger.coproduct.get(mapping[i], {}):
                return False
        for i in range(self.dimension):
            for j in range(self.dimension):
                small = {mapping[k]: c for k, c in self.product.get((i, j), {}).items()}
                big = larger.product.get((mapping[i], mapping[j]), {})
                truncated = {
                    k: c for k, c in big.items()
                    if larger.degree[k] < self.order
                }
                if small != truncated:
                    return False
                if self.degree[i] + self.degree[j] < self.order and small != big:
                    return False
        return True


Vec2 = dict[tuple[int, int], Fraction]


def truncated_dual(pres: HopfPresentation, order: int) -> TruncatedDual:
    """Build (A/(A+)^n)* on the dual monomial basis of degree < n."""
    if order <= 0:
        raise ValueError("order must be positive")
    gens = pres.gens
    for name in gens.names:
        if pres.counit[name] != 0:
            raise PresentationError(
                "truncated duals need identity-shifted coordinates (generators in A+)"
            )
    basis = sorted(
        (m for m in _monomials_up_to(gens, order - 1)),
        key=lambda m: (m.degree(gens), m.evens, m.odds),
    )
    index = {m: i for i, m in enumerate(basis)}
    labels = []
    for m in basis:
        parts = []
        for pos, exp in enumerate(m.evens):
            if exp == 1:
                parts.append(gens.evens[pos])
            elif exp > 1:
                parts.append(f"{gens.evens[pos]}^{exp}")
        parts.extend(gens.odds[i] for i in m.odds)
        labels.append("D[" + ("*".join(parts) or "1") + "]")
    parity = [m.parity for m in basis]
    degree = [m.degree(gens) for m in basis]

    # product: one pass over each Delta(m); (u * v)(m) = coefficient of u (x) v
    product: dict[tuple[int, int], Vec] = {}
    for target, mono in enumerate(basis):
        image = pres.delta_monomial(mono, leg_degree_bound=order - 1)
        for (m1, m2), coeff in image.terms.items():
            i = index.get(m1)
            j = index.get(m2)
            if i is None or j is None:
                continue
            product.setdefault((i, j), {})[target] = (
                product.get((i, j), {}).get(target, F0) + coeff
            )
    product = {key: {k: c for k, c in vec.items() if c} for key, vec in product.items()}
    product = {key: vec for key, vec in product.items() if vec}

    # coproduct: dual of multiplication restricted to the quotient
    coproduct: dict[int, Vec2] = {i: {} for i in range(len(basis))}
    for i, m1 in enumerate(basis):
        for j, m2 in enumerate(basis):
            prod = mul_monomials(m1, m2)
            if prod is None:
                continue
            sign, mono = prod
            target = index.get(mono)
            if target is None:
                continue
            coproduct[target][(i, j)] = coproduct[target].get((i, j), F0) + (
                F1 if sign > 0 else -F1
            )
    coproduct = {
        i: {key: c for key, c in vec.items() if c} for i, vec in coproduct.items()
    }

    unit_index = index[basis[0]]
    if not basis[0].is_one():
        raise PresentationError("basis ordering must start at the empty monomial")
    return TruncatedDual(
        order=order, presentation=pres, basis=basis, labels=labels, parity=parity,
        degree=degree, product=product, coproduct=coproduct, unit_index=unit_index,
    )


def primitives(dual: TruncatedDual) -> tuple[SuperLieAlgebraData, list[Vec]]:
    """Primitive functionals with the super commutator bracket.

    Solves D(u) = 1 (x) u + u (x) 1 parity by parity, forms
    [u, v] = u*v - (-1)^{|u||v|} v*u, certifies closure, and returns the
    structure constants together with the primitive vectors inside the dual.
    """
    if dual.order < 3:
        raise ValueError("order must be at least 3 for faithful brackets")
    dim = dual.dimension
    eps = dual.unit_index

    vectors: list[Vec] = []
    for wanted in (EVEN, ODD):
        idxs = [i for i in range(dim) if dual.parity[i] == wanted]
        cols = {i: c for c, i in enumerate(idxs)}
        rows: dict[tuple[int, int], list[Fraction]] = {}
        for i in idxs:
            for (j, k), c in dual.coproduct.get(i, {}).items():
                rows.setdefault((j, k), [F0] * len(idxs))[cols[i]] += c
        # subtract the primitive pattern u (x) eps + eps (x) u
        for i in idxs:
            rows.setdefault((i, eps), [F0] * len(idxs))[cols[i]] -= F1
            rows.setdefault((eps, i), [F0] * len(idxs))[cols[i]] -= F1
        matrix = [row for row in rows.values()]
        for vec in linalg.nullspace(matrix):
            lead = next((c for c in vec if c), None)
            vec = [c / lead for c in vec]
            vectors.append({idxs[c]: v for c, v in enumerate(vec) if v})

    # order primitives deterministically by their leading basis index
    vectors.sort(key=lambda v: min(v))
    labels = []
    parity = []
    for vec in vectors:
        lead = min(vec)
        labels.append(dual.labels[lead])
        parity.append(dual.parity[lead])

    # bracket in the dual, re-expressed in the primitive basis
    span_matrix = [[vec.get(i, F0) for vec in vectors] for i in range(dim)]
    bracket: dict[tuple[int, int], Vec] = {}
    for a, u in enumerate(vectors):
        for b, v in enumerate(vectors):
            uv = dual.vec_product(u, v)
            vu = dual.vec_product(v, u)
            sign = -F1 if not (parity[a] and parity[b]) else F1
            comm: Vec = dict(uv)
            for k, c in vu.items():
                s = comm.get(k, F0) + sign * c
                if s:
                    comm[k] = s
                else:
                    comm.pop(k, None)
            coords = linalg.solve(span_matrix, [comm.get(i, F0) for i in range(dim)])
            if coords is None:
                raise StructureError(
                    f"bracket [{labels[a]}, {labels[b]}] escapes the primitive subspace"
                )
            entry = {k: c for k, c in enumerate(coords) if c}
            if entry:
                bracket[(a, b)] = entry
    data = SuperLieAlgebraData(labels=labels, parity=parity, bracket=bracket)
    data.validate()
    return data, vectors


def check_lie_even(pres: HopfPresentation, order: int = 3) -> bool:
    """Lie(G)_0 = Lie(G_ev): equal structure constants on even generator duals."""
    from .hopf import even_quotient

    full, _ = primitives(truncated_dual(pres, order))
    even, _ = primitives(truncated_dual(even_quotient(pres), order))

    even_idx = full.even_indices()
    if [full.labels[i] for i in even_idx] != even.labels:
        return False
    if not full.even_part_closed():
        return False
    relabel = {i: c for c, i in enumerate(even_idx)}
    for a in even_idx:
        for b in even_idx:
            lhs = {relabel[k]: c for k, c in full.bracket_basis(a, b).items()}
            if lhs != even.bracket_basis(relabel[a], relabel[b]):
                return False
    return True


def super_pbw_count(even_dim: int, odd_dim: int, order: int) -> int:
    """Monomials of total degree < order in even_dim commuting and odd_dim
    anticommuting variables."""
    total = 0
    for odd_size in range(min(odd_dim, order) + 1):
        choose = 1
        for i in range(odd_size):
            choose = choose * (odd_dim - i) // (i + 1)
        remaining = order - 1 - odd_size
        if remaining < 0:
            continue
        # weak compositions of degree <= remaining into even_dim parts
        count = 1
        if even_dim:
            # sum_{d=0}^{remaining} C(d + even_dim - 1, even_dim - 1) = C(remaining + even_dim, even_dim)
            count = 1
            for i in range(even_dim):
                count = count * (remaining + even_dim - i) // (i + 1)
        total += choose * count
    return total


def pbw_dim_check(pres: HopfPresentation, order: int) -> bool:
    """dim (A/(A+)^n)* equals the super-PBW count for the primitive Lie algebra."""
    dual = truncated_dual(pres, order)
    lie, _ = primitives(truncated_dual(pres, max(order, 3)))
    even_dim = len(lie.even_indices())
    odd_dim = len(lie.odd_indices())
    return dual.dimension == super_pbw_count(even_dim, odd_dim, order)


def export_structure(dual: TruncatedDual) -> dict:
    """JSON-ready structure constants (basis labels, parity, tables)."""

    def vec_out(vec: Vec) -> list:
        return [[k, [c.numerator, c.denominator]] for k, c in sorted(vec.items())]

    return {
        "order": dual.order,
        "labels": dual.labels,
        "parity": dual.parity,
        "product": {
            f"{i},{j}": vec_out(vec) for (i, j), vec in sorted(dual.product.items())
        },
        "coproduct": {
            str(i): [[list(key), [c.numerator, c.denominator]] for key, c in sorted(vec.items())]
            for i, vec in sorted(dual.coproduct.items())
        },
    }

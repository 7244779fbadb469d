"""Command-line verification driver.

Subcommands: ``verify gl|exterior|bosonize|integrals``, ``hy``, ``hcpair``,
``envelope``, ``decompose``.  Every randomized suite takes a mandatory seed;
rerunning with the same config and seed reproduces the report byte for byte
(timings aside).  Exit codes: 0 all checks pass, 1 a check failed, 2 usage
or input-file errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .core import SuperPoly
from .decomposition import decomposition_check
from .finite import (
    bosonize,
    check_finite_hopf_axioms,
    compose_with_antipode,
    dual_iso_check,
    exterior_finite,
    exterior_pairing,
    integral_space,
    is_right_integral,
    pairing_on_sequences,
)
from .grassmann import PointSampler, SuperMatrix
from .hcpair import (
    build_super_lie,
    envelope_pbw_count,
    group_bracket_equivariance,
    is_symplectic,
    sample_transvections,
    sp_basis,
    spo_pair,
    truncated_envelope,
    validate_hcpair,
)
from .hopf import (
    PresentationError,
    additive_presentation,
    check_hopf_axioms,
    compute_W,
    exterior_hopf,
    glmn_presentation,
)
from .hyper import check_lie_even, primitives, super_pbw_count, truncated_dual
from .liealg import StructureError
from .parsing import ParseError
from .presfile import load_presentation, parse_presentation, print_presentation
from .report import Report


def _worker_count() -> int:
    value = os.environ.get("SUPERALG_WORKERS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def run_gl_suite(m: int, n: int, thetas: int, points: int, seed: int) -> Report:
    report = Report(
        suite="verify-gl",
        config={"m": m, "n": n, "thetas": thetas, "points": points, "seed": seed},
    )
    sampler = PointSampler(m, n, thetas, seed)
    ident = SuperMatrix.identity(m, n, sampler.alg)

    def check_point(idx: int):
        point = sampler.sample(idx)
        if not point.is_gl_point():
            return idx, "sampled matrix is not a point"
        inverse = point.inv()
        antipode = point.antipode_blocks()
        if antipode != inverse:
            return idx, "antipode blocks differ from the inverse"
        if point * inverse != ident or inverse * point != ident:
            return idx, "inverse fails the group law"
        return idx, None

    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check_point, range(points)))
    else:
        results = [check_point(idx) for idx in range(points)]
    bad = [(idx, msg) for idx, msg in results if msg]
    witness = ""
    if bad:
        idx, msg = bad[0]
        witness = f"point #{idx}: {msg}: {sampler.sample(idx).to_json()}"
    report.add_check(f"antipode-equals-inverse[{points} points]", not bad, witness)

    closure_ok = True
    assoc_ok = True
    witness = ""
    for idx in range(0, min(points, 30), 3):
        a, b, c = (sampler.sample(idx + d) for d in range(3))
        ab = a * b
        if not ab.is_gl_point():
            closure_ok = False
            witness = f"product of points #{idx}, #{idx + 1} is not a point"
            break
        if (ab * c) != (a * (b * c)):
            assoc_ok = False
            witness = f"associativity fails at points #{idx}..#{idx + 2}"
            break
    report.add_check("closure-under-product", closure_ok, witness)
    report.add_check("associativity", assoc_ok, witness)
    report.add_check(
        "identity-laws",
        ident * sampler.sample(0) == sampler.sample(0)
        and sampler.sample(0) * ident == sampler.sample(0),
    )
    return report


def run_exterior_suite(dim: int, path: str | None, max_dual: int) -> Report:
    config = {"dim": dim, "file": path or "", "max_dual": max_dual}
    report = Report(suite="verify-exterior", config=config)
    if path:
        pres = load_presentation(path)
        reparsed = parse_presentation(print_presentation(pres), name=pres.name)
        report.add_check("file-round-trip", reparsed == pres)
    else:
        pres = exterior_hopf(dim)
        text = print_presentation(pres)
        report.add_check("print-parse-round-trip", parse_presentation(text) == pres)
    report.extend(check_hopf_axioms(pres), prefix="axioms")

    cotangent = compute_W(pres)
    report.add_check(
        "odd-cotangent-basis",
        cotangent.basis == list(pres.gens.odds),
        f"got {cotangent.basis}",
    )

    n = len(pres.gens.odds) if path else dim
    if not pres.gens.evens and n <= max_dual:
        ok, detail = dual_iso_check(n)
        report.extend(detail, prefix=f"duality[n={n}]")
        report.add_check("pairing-oracle", _pairing_oracle_agrees(n))
    return report


def _pairing_oracle_agrees(n: int) -> bool:
    from itertools import combinations

    gens = exterior_hopf(n).gens
    from .core import SuperMonomial

    for size in range(min(n, 3) + 1):
        for left in combinations(range(n), size):
            for right in combinations(range(n), size):
                f = SuperPoly.monomial(gens, SuperMonomial((), left))
                w = SuperPoly.monomial(gens, SuperMonomial((), right))
                if exterior_pairing(f, w) != pairing_on_sequences(list(left), list(right)):
                    return False
    return True


def run_bosonize_suite(dim: int) -> Report:
    report = Report(suite="verify-bosonize", config={"dim": dim})
    base = exterior_finite(dim)
    result = bosonize(base)
    report.add_check("dimension", result.dimension == 2 * base.dimension)
    report.add_check("antipode-solvable", result.antipode is not None)
    report.extend(check_finite_hopf_axioms(result), prefix="ordinary-axioms")

    # smash coproduct on primitives: D(1 x v) = (1 x v)(x)(g x 1) + (1 x 1)(x)(1 x v)
    ok = True
    witness = ""
    for i in range(dim):
        blade = base.labels.index(f"v{i + 1}")
        got = result.delta[blade]
        expected = {
            (blade, base.dimension + base.labels.index("1")): 1,
            (base.labels.index("1"), blade): 1,
        }
        if {k: int(v) for k, v in got.items()} != expected:
            ok, witness = False, f"primitive v{i + 1}"
            break
    report.add_check("smash-coproduct-on-primitives", ok, witness)
    return report


def run_integrals_suite(dim: int) -> Report:
    report = Report(suite="verify-integrals", config={"dim": dim})
    hopf = exterior_finite(dim)
    space = integral_space(hopf)
    report.add_check("dimension-at-most-1", space.dimension <= 1)
    report.add_check("dimension-equals-1", space.dimension == 1)
    report.add_check("parity-is-dim-mod-2", space.parity == dim % 2,
                     f"got parity {space.parity}")
    if space.dimension == 1:
        top = hopf.dimension - 1
        report.add_check("integral-is-top-blade-dual", space.basis[0] == {top: 1}
                         if dim > 0 else space.basis[0] == {0: 1})
        composed = compose_with_antipode(hopf, space.basis[0])
        report.add_check("antipode-maps-left-to-right", is_right_integral(hopf, composed))
    report.add_check("right-space-dimension", len(space.right_basis) == 1)
    if dim == 0:
        report.add_check("trivial-group-integral-of-1-nonzero",
                         space.basis[0].get(0, 0) != 0)
    return report


_HY_TARGETS = {
    "ga11": lambda: additive_presentation(1, 1),
    "gl11": lambda: glmn_presentation(1, 1),
    "gl21": lambda: glmn_presentation(2, 1),
}


def _matrix_oracle_brackets(m: int, n: int):
    """Structure constants of gl(m|n) on elementary matrices, by generator name."""
    from .hopf import glmn_entry_name

    size = m + n

    def par(a: int) -> int:
        return 0 if a <= m else 1

    names = {}
    for a in range(1, size + 1):
        for b in range(1, size + 1):
            names[(a, b)] = glmn_entry_name(m, n, a, b)

    def bracket(ab, cd):
        (a, b), (c, d) = ab, cd
        sign = -1 if (par(a) + par(b)) % 2 and (par(c) + par(d)) % 2 else 1
        out = {}
        if b == c:
            out[(a, d)] = out.get((a, d), 0) + 1
        if d == a:
            out[(c, b)] = out.get((c, b), 0) - sign * 1
        return {k: v for k, v in out.items() if v}

    return names, bracket


def run_hy_suite(target: str, order: int) -> Report:
    report = Report(suite="hy", config={"target": target, "order": order})
    pres = _HY_TARGETS[target]()
    duals = {}
    for k in range(1, order + 1):
        duals[k] = truncated_dual(pres, k)
    dual = duals[order]

    try:
        dual.check_associative_unital()
        report.add_check("product-associative-unital", True)
    except StructureError as exc:
        report.add_check("product-associative-unital", False, str(exc))

    report.add_check("unique-group-like-counit", dual.counit_is_unique_group_like())

    try:
        lie, _ = primitives(duals[max(order, 3)] if order >= 3 else truncated_dual(pres, 3))
        report.add_check("primitive-lie-axioms", True)
    except StructureError as exc:
        report.add_check("primitive-lie-axioms", False, str(exc))
        lie = None

    if lie is not None:
        if target == "ga11":
            ok = (
                len(lie.even_indices()) == 1
                and len(lie.odd_indices()) == 1
                and not lie.bracket
            )
            report.add_check("oracle-abelian-(1|1)", ok)
        else:
            m, n = pres.shape
            names, oracle = _matrix_oracle_brackets(m, n)
            label_for = {f"D[{name}]": pos for pos, name in names.items()}
            ok = True
            witness = ""
            for i in range(lie.dimension):
                for j in range(lie.dimension):
                    got = {
                        lie.labels[k]: c for k, c in lie.bracket_basis(i, j).items()
                    }
                    want = {
                        f"D[{names[pos]}]": c
                        for pos, c in oracle(label_for[lie.labels[i]], label_for[lie.labels[j]]).items()
                    }
                    if {k: v for k, v in got.items() if v} != {
                        k: Fraction(v) for k, v in want.items() if v
                    }:
                        ok = False
                        witness = f"[{lie.labels[i]}, {lie.labels[j]}] = {got}, oracle {want}"
                        break
                if not ok:
                    break
            report.add_check("oracle-matrix-super-bracket", ok, witness)

    if target in ("gl11", "gl21"):
        report.add_check("lie-even-matches-even-quotient", check_lie_even(pres))

    pbw_ok = True
    witness = ""
    if lie is not None:
        for k in range(1, order + 1):
            expected = super_pbw_count(len(lie.even_indices()), len(lie.odd_indices()), k)
            if duals[k].dimension != expected:
                pbw_ok = False
                witness = f"order {k}: dim {duals[k].dimension} vs count {expected}"
                break
    report.add_check("pbw-dimension-counts", pbw_ok, witness)

    chain_ok = all(duals[k].embeds_in(duals[k + 1]) for k in range(1, order))
    report.add_check("embedding-chain", chain_ok)

    from .hyper import export_structure

    report.add_check("structure-export", True)
    report.checks[-1]["structure"] = export_structure(duals[min(order, 3)])
    return report


def run_hcpair_suite(r: int, no_half: bool, transvections: int, seed: int) -> Report:
    report = Report(
        suite="hcpair",
        config={"r": r, "no_half": no_half, "transvections": transvections, "seed": seed},
    )
    data = sp_basis(r)
    report.add_check("sp-dimension", data.dimension == r * (2 * r + 1),
                     f"got {data.dimension}")
    pair = spo_pair(r, half=not no_half)
    failures = validate_hcpair(pair)
    report.add_check("pair-axioms", not failures, "; ".join(failures[:3]))
    try:
        build_super_lie(pair)
        report.add_check("super-jacobi", True)
    except StructureError as exc:
        report.add_check("super-jacobi", False, str(exc))

    membership_ok = True
    equivariance_ok = True
    witness = ""
    for g in sample_transvections(r, transvections, seed):
        if not is_symplectic(g, pair.J):
            membership_ok = False
            witness = "transvection failed g J tg = J"
            break
        if not group_bracket_equivariance(pair, g):
            equivariance_ok = False
            witness = "bracket not equivariant under group translation"
            break
    report.add_check("group-membership", membership_ok, witness)
    report.add_check("group-bracket-equivariance", equivariance_ok, witness)

    try:
        lie = build_super_lie(pair, check=False)
        report.add_check("structure-export", True)
        report.checks[-1]["structure"] = {
            "labels": lie.labels,
            "parity": lie.parity,
            "bracket": {
                f"{i},{j}": [[k, [c.numerator, c.denominator]] for k, c in sorted(vec.items())]
                for (i, j), vec in sorted(lie.bracket.items())
            },
        }
    except StructureError:
        pass
    return report


def run_envelope_suite(r: int | None, degree: int, abelian: tuple[int, int] | None) -> Report:
    config = {"r": r, "d": degree, "abelian": list(abelian) if abelian else None}
    report = Report(suite="envelope", config=config)
    if abelian:
        from .hcpair import abelian_pair

        pair = abelian_pair(*abelian)
    else:
        pair = spo_pair(r or 1)
    try:
        env = truncated_envelope(pair, degree)
        report.add_check("rewriting-confluent", True)
    except StructureError as exc:
        report.add_check("rewriting-confluent", False, str(exc))
        return report
    expected = envelope_pbw_count(pair.g0_dim, pair.v_dim, degree)
    report.add_check(
        "pbw-dimension", env.dimension == expected,
        f"got {env.dimension}, expected {expected}",
    )
    report.add_check("degreewise-dims", True, "")
    report.checks[-1]["dims_by_degree"] = env.dims_by_degree
    return report


def run_decompose_suite(m: int, n: int, thetas: int, points: int, seed: int) -> Report:
    report = Report(
        suite="decompose",
        config={"m": m, "n": n, "thetas": thetas, "points": points, "seed": seed},
    )
    report.extend(decomposition_check(m, n, thetas, points, seed))
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superalg", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=["json", "text"], default="text")
    common.add_argument("--out", help="write the JSON report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="verification suites")
    vsub = verify.add_subparsers(dest="target", required=True)

    gl = vsub.add_parser("gl", parents=[common])
    gl.add_argument("--m", type=int, default=1)
    gl.add_argument("--n", type=int, default=1)
    gl.add_argument("--thetas", type=int, default=4)
    gl.add_argument("--points", type=int, default=50)
    gl.add_argument("--seed", type=int, required=True)

    exterior = vsub.add_parser("exterior", parents=[common])
    exterior.add_argument("--dim", type=int, default=2)
    exterior.add_argument("--file", help="presentation file (.shp) to check instead")
    exterior.add_argument("--max-dual", type=int, default=6)

    bos = vsub.add_parser("bosonize", parents=[common])
    bos.add_argument("--dim", type=int, default=2)

    integrals = vsub.add_parser("integrals", parents=[common])
    integrals.add_argument("--dim", type=int, default=2)

    hy = sub.add_parser("hy", help="truncated hyperalgebra suite", parents=[common])
    hy.add_argument("--target", choices=sorted(_HY_TARGETS), default="gl11")
    hy.add_argument("--order", type=int, default=4)

    hc = sub.add_parser("hcpair", help="Harish-Chandra pair suite", parents=[common])
    hc.add_argument("--r", type=int, default=1)
    hc.add_argument("--no-half", action="store_true",
                    help="negative control: drop the 1/2 in the odd bracket")
    hc.add_argument("--transvections", type=int, default=10)
    hc.add_argument("--seed", type=int, default=1)

    env = sub.add_parser("envelope", help="truncated PBW envelope suite", parents=[common])
    env.add_argument("--r", type=int, default=1)
    env.add_argument("--d", type=int, default=2)
    env.add_argument("--abelian", type=int, nargs=2, metavar=("G0", "V"),
                     help="use the abelian pair with these dimensions")

    dec = sub.add_parser("decompose", help="decomposition round-trip suite", parents=[common])
    dec.add_argument("--m", type=int, default=1)
    dec.add_argument("--n", type=int, default=1)
    dec.add_argument("--thetas", type=int, default=4)
    dec.add_argument("--points", type=int, default=50)
    dec.add_argument("--seed", type=int, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        if args.command == "verify" and args.target == "gl":
            report = run_gl_suite(args.m, args.n, args.thetas, args.points, args.seed)
        elif args.command == "verify" and args.target == "exterior":
            report = run_exterior_suite(args.dim, args.file, args.max_dual)
        elif args.command == "verify" and args.target == "bosonize":
            report = run_bosonize_suite(args.dim)
        elif args.command == "verify" and args.target == "integrals":
            report = run_integrals_suite(args.dim)
        elif args.command == "hy":
            report = run_hy_suite(args.target, args.order)
        elif args.command == "hcpair":
            report = run_hcpair_suite(args.r, args.no_half, args.transvections, args.seed)
        elif args.command == "envelope":
            report = run_envelope_suite(args.r, args.d, tuple(args.abelian) if args.abelian else None)
        elif args.command == "decompose":
            report = run_decompose_suite(args.m, args.n, args.thetas, args.points, args.seed)
        else:  # pragma: no cover
            parser.error("unknown command")
            return 2
    except (ParseError, PresentationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.timings["seconds"] = round(time.perf_counter() - started, 6)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(report.to_json() + "\n")
    if args.emit == "json":
        print(report.to_json())
    else:
        print("\n".join(report.summary_lines()))
    return 0 if report.ok else 1


def entrypoint() -> None:  # pragma: no cover
    sys.exit(main())

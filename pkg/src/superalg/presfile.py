"""Presentation files (.shp): parse and print Hopf presentations.

Format, one statement per ``;``, ``#`` starts a line comment:

    even x;  odd v1, v2;
    delta v1 = v1 @ 1 + 1 @ v1;
    eps v1 = 0;
    antipode v1 = -v1;        # or a single line:  antipode pointwise;
"""

from __future__ import annotations

from fractions import Fraction

from .core import GeneratorSet, SuperPoly
from .hopf import HopfPresentation, PresentationError
from .parsing import (
    ParseError,
    format_generator_set,
    format_poly,
    format_tensor,
    parse_poly,
    parse_tensor,
)


def _strip_comments(text: str) -> str:
    lines = []
    for line in text.splitlines():
        hash_pos = line.find("#")
        lines.append(line if hash_pos < 0 else line[:hash_pos])
    return "\n".join(lines)


def parse_presentation(text: str, name: str = "") -> HopfPresentation:
    """Parse the documented presentation syntax into a HopfPresentation.

    Diagnostics name the offending generator (parity-inconsistent coproduct,
    nonvanishing odd counit) or carry the position of an unknown symbol.
    """
    statements = [s.strip() for s in _strip_comments(text).split(";") if s.strip()]
    evens: list[str] = []
    odds: list[str] = []
    body: list[tuple[str, str, str]] = []
    pointwise = False
    for stmt in statements:
        head, _, rest = stmt.partition(" ")
        rest = rest.strip()
        if head in ("even", "odd"):
            names = [n.strip() for n in rest.split(",") if n.strip()]
            (evens if head == "even" else odds).extend(names)
        elif head in ("delta", "eps", "antipode"):
            if head == "antipode" and rest == "pointwise":
                pointwise = True
                continue
            target, eq, expr = rest.partition("=")
            if not eq:
                raise ParseError(f"malformed {head} statement {stmt!r}", 0)
            body.append((head, target.strip(), expr.strip()))
        else:
            raise ParseError(f"unknown statement {head!r}", 0)

    gens = GeneratorSet(evens, odds)
    delta: dict[str, object] = {}
    counit: dict[str, Fraction] = {}
    antipode: dict[str, SuperPoly] = {}
    for kind, target, expr in body:
        if target not in gens:
            raise ParseError(f"unknown generator {target!r} in {kind} statement", 0)
        if kind == "delta":
            delta[target] = parse_tensor(gens, expr, slots=2)
        elif kind == "eps":
            value = parse_poly(gens, expr)
            if value.soul():
                raise PresentationError(f"counit of {target} must be a scalar")
            counit[target] = value.body()
        else:
            antipode[target] = parse_poly(gens, expr)

    if pointwise and antipode:
        raise PresentationError("antipode is marked pointwise but images were given")
    try:
        return HopfPresentation(
            gens, delta, counit,
            None if pointwise else antipode,
            name=name,
        )
    except KeyError as exc:
        raise PresentationError(f"incomplete presentation: missing data for {exc}") from exc


def load_presentation(path: str) -> HopfPresentation:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return parse_presentation(text, name=path)


def print_presentation(pres: HopfPresentation) -> str:
    """Canonical text; reparsing yields an equal presentation."""
    lines = [format_generator_set(pres.gens)]
    for g in pres.gens.names:
        lines.append(f"delta {g} = {format_tensor(pres.delta[g])};")
    for g in pres.gens.names:
        lines.append(f"eps {g} = {pres.counit[g]};")
    if pres.antipode is None:
        lines.append("antipode pointwise;")
    else:
        for g in pres.gens.names:
            lines.append(f"antipode {g} = {format_poly(pres.antipode[g])};")
    return "\n".join(lines) + "\n"


def builtin_presentation_path(filename: str) -> str:
    from importlib import resources

    return str(resources.files("superalg").joinpath("presentations", filename))

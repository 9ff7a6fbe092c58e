"""Text format for extended Gauss codes, and the JSON invariant report.

One component per line, tokens separated by whitespace::

    O1+ O2+ V1 # U1+ U2+ V1 #

``O<id>±`` / ``U<id>±`` are classical passages, ``V<id>`` virtual
passages, ``#`` a cut point in the slot after the preceding passage and
``()`` a component without passages.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import CodeSyntaxError, InvalidCode
from .gauss import ExtendedGaussCode, Passage, validate

_CLASSICAL = re.compile(r"([OU])([^\s+\-#()]+)([+-])\Z")
_VIRTUAL = re.compile(r"V([^\s+\-#()]+)\Z")
_TOKEN = re.compile(r"\S+")


def _parse_token(tok, line, col):
    m = _CLASSICAL.match(tok)
    if m:
        kind, ident, sign = m.groups()
        return Passage(kind, ident, 1 if sign == "+" else -1)
    m = _VIRTUAL.match(tok)
    if m:
        return Passage.virtual(m.group(1))
    if tok[0] in "OU" and re.match(r"[OU][^\s+\-#()]+\Z", tok):
        raise CodeSyntaxError(f"missing sign in {tok!r}", line, col)
    raise CodeSyntaxError(f"bad token {tok!r}", line, col)


def _parse_line(text, line, k):
    passages, cuts = [], []
    blank = False
    for m in _TOKEN.finditer(text):
        tok, col = m.group(), m.start() + 1
        if tok == "()":
            if passages or blank or cuts:
                raise CodeSyntaxError("'()' must be the only passage token", line, col)
            blank = True
        elif tok == "#":
            if not passages and not blank:
                raise CodeSyntaxError("'#' needs a preceding passage", line, col)
            cuts.append((k, len(passages) - 1 if passages else 0))
        else:
            if blank:
                raise CodeSyntaxError("'()' component cannot hold passages", line, col)
            passages.append(_parse_token(tok, line, col))
    return tuple(passages), cuts


def parse_component_tokens(text: str) -> tuple:
    passages, cuts = _parse_line(text, 1, 0)
    if cuts:
        raise CodeSyntaxError("cut points not allowed here", 1, text.index("#") + 1)
    return passages


def parse(text: str) -> ExtendedGaussCode:
    """Parse a code document; raises :class:`CodeSyntaxError` or :class:`InvalidCode`."""
    components, cuts = [], []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if not raw.strip():
            continue
        passages, line_cuts = _parse_line(raw, lineno, len(components))
        if not passages and not line_cuts and raw.split() != ["()"]:
            raise CodeSyntaxError("empty component", lineno, 1)
        components.append(passages)
        cuts.extend(line_cuts)
    if not components:
        raise CodeSyntaxError("no components", 1, 1)
    code = ExtendedGaussCode(tuple(components), tuple(cuts))
    violations = validate(code)
    if violations:
        raise InvalidCode(violations)
    return code


def serialize(code: ExtendedGaussCode) -> str:
    violations = validate(code)
    if violations:
        raise InvalidCode(violations)
    counts = code.cut_counts()
    lines = []
    for k, comp in enumerate(code.components):
        if not comp:
            toks = ["()"] + ["#"] * counts[k].get(0, 0)
        else:
            toks = []
            for i, p in enumerate(comp):
                toks.append(str(p))
                toks.extend("#" * counts[k].get(i, 0))
        lines.append(" ".join(toks))
    return "\n".join(lines)


def format_doubled(doubled: int) -> str:
    """Render a doubled linking number as ``"2"``, ``"-3/2"`` and so on."""
    return str(Fraction(doubled, 2))


def format_laurent(poly: dict) -> str:
    """Render ``{exponent: coefficient}`` in the variable ``A``, ascending exponents."""
    terms = [(e, c) for e, c in sorted(poly.items()) if c]
    if not terms:
        return "0"
    parts = []
    for e, c in terms:
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "A" if e == 1 else f"A^{e}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def parse_laurent(text: str) -> dict:
    """Inverse of :func:`format_laurent`."""
    poly = {}
    if text.strip() == "0":
        return poly
    for m in re.finditer(r"([+-]?)\s*(?:(\d+)\*?)?(A(?:\^(-?\d+))?)?", text.replace(" ", "")):
        sign, mag, var, exp = m.groups()
        if not mag and not var:
            continue
        c = int(mag) if mag else 1
        e = (int(exp) if exp else 1) if var else 0
        poly[e] = poly.get(e, 0) + (-c if sign == "-" else c)
    return {e: c for e, c in poly.items() if c}


def _pair_key(pair):
    return ",".join(str(x) for x in pair)


def report_to_dict(report) -> dict:
    """Plain-JSON view of an :class:`~virtcover.invariants.InvariantReport`."""
    linking = {_pair_key(k): format_doubled(v) for k, v in sorted(report.doubled_linking.items())}
    cover = None
    if report.cover is not None:
        cover = {
            "components": report.cover.components,
            "labels": list(report.cover.labels),
            "normal": report.cover.normal,
            "linking": {
                _pair_key(k): format_doubled(v) for k, v in sorted(report.cover.doubled_linking.items())
            },
        }

    def opt_map(m, fmt=lambda v: v):
        if m is None:
            return None
        return {_pair_key(k): fmt(v) for k, v in sorted(m.items())}

    return {
        "components": report.components,
        "even": report.even,
        "normal": report.normal,
        "cut_system": report.cut_system,
        "is_cut_system": report.is_cut_system,
        "writhe": report.writhe,
        "odd_writhe": report.odd_writhe,
        "lk_N": report.lk_n,
        "linking": linking,
        "cover": cover,
        "lambda_abs": opt_map(report.lambda_abs),
        "nu_abs": opt_map(report.nu_abs),
        "q_sets": opt_map(report.q_sets, lambda qs: [format_doubled(q) for q in qs]),
        "self_pair_link": None
        if report.self_pair_link is None
        else {str(k): format_doubled(v) for k, v in sorted(report.self_pair_link.items())},
        "f_polynomial": None if report.f_polynomial is None else format_laurent(report.f_polynomial),
    }


def emit_report(report) -> str:
    return json.dumps(report_to_dict(report), indent=2)

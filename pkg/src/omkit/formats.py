"""Text formats: .chi sign-map files, .hls JSON files, .vec CSV files,
and an SVG rendering of rank 2 sequences.

Serializers emit one canonical byte string per object (fixed ordering,
fixed separators, trailing newline), so equal objects serialize equal and
convert runs are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import json
import math
import re
from fractions import Fraction

from .chirotope import SignMap, VectorConfig
from .core import signed_sort_key
from .errors import ParseError
from .hyperline import HLHigher, HLRank1, HLRank2, Hyperline, ordered_hyperlines

_SIGN_CHAR = {1: "+", 0: "0", -1: "-"}
_CHAR_SIGN = {"+": 1, "0": 0, "-": -1}


def _content_lines(text):
    """(line_number, line) pairs with blank and # comment lines dropped."""
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((i, line))
    return out


# -------------------------------------------------------------------- .chi

def parse_chi(text: str) -> SignMap:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be 'rank n'", line=header_no)
    try:
        rank, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must be two integers", line=header_no) from None
    if rank < 1 or n < 1:
        raise ParseError("rank and n must be positive", line=header_no)
    if n < rank:
        raise ParseError(f"n={n} is smaller than rank={rank}", line=header_no)

    supports = list(itertools.combinations(range(1, n + 1), rank))
    body = []
    for line_no, line in lines[1:]:
        for col, ch in enumerate(line.strip(), start=1):
            if ch not in _CHAR_SIGN:
                raise ParseError(
                    f"unexpected character {ch!r}", line=line_no, column=col
                )
            body.append(_CHAR_SIGN[ch])
    if len(body) != len(supports):
        raise ParseError(
            f"body has {len(body)} signs, expected {len(supports)} "
            f"(one per {rank}-subset of 1..{n})"
        )
    return SignMap(rank, n, dict(zip(supports, body)))


def serialize_chi(m: SignMap) -> str:
    body = "".join(_SIGN_CHAR[m.value(s)] for s in m.supports())
    return f"{m.rank} {m.n}\n{body}\n"


# -------------------------------------------------------------------- .hls

_ELEMENT_RE = re.compile(r"~?[1-9][0-9]*\Z")


def _element_str(s: int) -> str:
    return str(s) if s > 0 else f"~{-s}"


def _parse_element(tok, path):
    if not isinstance(tok, str) or not _ELEMENT_RE.match(tok):
        raise ParseError(f"{path}: bad element {tok!r} (want '5' or '~5')")
    return -int(tok[1:]) if tok.startswith("~") else int(tok)


def _hls_obj(x):
    if isinstance(x, HLRank1):
        elems = sorted(x.chosen, key=signed_sort_key)
        return {"rank": 1, "elements": [_element_str(s) for s in elems]}
    if isinstance(x, HLRank2):
        return {
            "rank": 2,
            "atoms": [
                [_element_str(s) for s in sorted(a, key=signed_sort_key)]
                for a in x.atoms
            ],
        }
    return {
        "rank": x.rank,
        "hyperlines": [
            {"Y": _hls_obj(h.y), "Z": _hls_obj(h.z)}
            for h in ordered_hyperlines(x)
        ],
    }


def serialize_hls(x) -> str:
    return json.dumps(_hls_obj(x), separators=(",", ":"), sort_keys=True) + "\n"


def _hls_from_obj(obj, path):
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected an object")
    rank = obj.get("rank")
    if not isinstance(rank, int) or rank < 1:
        raise ParseError(f"{path}: 'rank' must be a positive integer")
    if rank == 1:
        elems = obj.get("elements")
        if not isinstance(elems, list) or not elems:
            raise ParseError(f"{path}: rank 1 needs a nonempty 'elements' list")
        return HLRank1(
            {_parse_element(t, f"{path}.elements[{i}]") for i, t in enumerate(elems)}
        )
    if rank == 2:
        atoms = obj.get("atoms")
        if not isinstance(atoms, list) or not atoms:
            raise ParseError(f"{path}: rank 2 needs a nonempty 'atoms' list")
        parsed = []
        for i, atom in enumerate(atoms):
            if not isinstance(atom, list) or not atom:
                raise ParseError(f"{path}.atoms[{i}]: atom must be a nonempty list")
            parsed.append(
                {_parse_element(t, f"{path}.atoms[{i}][{j}]")
                 for j, t in enumerate(atom)}
            )
        return HLRank2(parsed)
    hls = obj.get("hyperlines")
    if not isinstance(hls, list) or not hls:
        raise ParseError(f"{path}: rank {rank} needs a nonempty 'hyperlines' list")
    parsed = []
    for i, h in enumerate(hls):
        if not isinstance(h, dict) or "Y" not in h or "Z" not in h:
            raise ParseError(
                f"{path}.hyperlines[{i}]: expected an object with 'Y' and 'Z'"
            )
        y = _hls_from_obj(h["Y"], f"{path}.hyperlines[{i}].Y")
        z = _hls_from_obj(h["Z"], f"{path}.hyperlines[{i}].Z")
        if y.rank != rank - 2:
            raise ParseError(
                f"{path}.hyperlines[{i}].Y: rank {y.rank}, expected {rank - 2}"
            )
        if z.rank != 2:
            raise ParseError(f"{path}.hyperlines[{i}].Z: rank {z.rank}, expected 2")
        parsed.append(Hyperline(y, z))
    return HLHigher(rank, parsed)


def parse_hls(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from None
    return _hls_from_obj(obj, "$")


# -------------------------------------------------------------------- .vec

_INT_RE = re.compile(r"[+-]?[0-9]+\Z")
_FRAC_RE = re.compile(r"([+-]?[0-9]+)/([0-9]+)\Z")


def _parse_cell(tok, line_no, col):
    tok = tok.strip()
    if _INT_RE.match(tok):
        return Fraction(int(tok))
    m = _FRAC_RE.match(tok)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise ParseError("zero denominator", line=line_no, column=col)
        return Fraction(num, den)
    hint = ""
    if re.search(r"[.eE]", tok):
        hint = " (floats are not exact; use p/q)"
    raise ParseError(f"bad entry {tok!r}{hint}", line=line_no, column=col)


def parse_vec(text: str) -> VectorConfig:
    rows = []
    for line_no, line in _content_lines(text):
        row = []
        col = 1
        for tok in line.split(","):
            row.append(_parse_cell(tok, line_no, col))
            col += len(tok) + 1
        rows.append(row)
    if not rows:
        raise ParseError("empty input")
    return VectorConfig(rows)


def serialize_vec(vectors: VectorConfig) -> str:
    lines = []
    for row in vectors.rows:
        cells = [
            str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            for c in row
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------- svg

def render_rank2_svg(x: HLRank2) -> str:
    """Circle diagram of a rank 2 sequence: one tick per atom, placed
    counterclockwise, antipodal atoms opposite.  Output is deterministic."""
    cx = cy = 180.0
    radius = 130.0
    p = x.period
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="360" height="360" '
        'viewBox="0 0 360 360">',
        f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{radius:.2f}" '
        'fill="none" stroke="black"/>',
    ]
    for a, atom in enumerate(x.atoms):
        theta = 2.0 * math.pi * a / p
        ux, uy = math.cos(theta), -math.sin(theta)
        x1, y1 = cx + (radius - 7) * ux, cy + (radius - 7) * uy
        x2, y2 = cx + (radius + 7) * ux, cy + (radius + 7) * uy
        parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            'stroke="black"/>'
        )
        tx, ty = cx + (radius + 26) * ux, cy + (radius + 26) * uy
        spans = []
        for s in sorted(atom, key=signed_sort_key):
            if s > 0:
                spans.append(f"<tspan>{s}</tspan>")
            else:
                spans.append(
                    f'<tspan text-decoration="overline">{-s}</tspan>'
                )
        parts.append(
            f'<text x="{tx:.2f}" y="{ty:.2f}" font-size="14" '
            'text-anchor="middle" dominant-baseline="middle">'
            + "&#160;".join(spans)
            + "</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

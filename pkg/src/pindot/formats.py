"""Text formats for point sets and scalar sets.

Point set file::

    # comments start with '#'
    3,1
    0 0
    1 2

Scalar set file: first line ``p,k``, second line the element codes, strictly increasing.
"""

from __future__ import annotations

from pathlib import Path

from .ffield import parse_field
from .plane import Point, PointSet
from .sumsets import ScalarSet


class FormatError(ValueError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_point_set(text: str) -> PointSet:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty point set file: missing 'p,k' header") from None
    try:
        spec = parse_field(header)
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}") from None
    points: list[Point] = []
    seen: dict[Point, int] = {}
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two codes 'a b', got {line!r}")
        try:
            pt = Point(spec.check(int(parts[0])), spec.check(int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        if pt in seen:
            raise FormatError(f"line {lineno}: duplicate point {parts[0]} {parts[1]} (first on line {seen[pt]})")
        seen[pt] = lineno
        points.append(pt)
    return PointSet(spec, points)


def format_point_set(E: PointSet) -> str:
    rows = [str(E.spec)] + [f"{a} {b}" for a, b in E]
    return "\n".join(rows) + "\n"


def parse_scalar_set(text: str) -> ScalarSet:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty scalar set file: missing 'p,k' header")
    try:
        spec = parse_field(lines[0][1])
    except ValueError as exc:
        raise FormatError(f"line {lines[0][0]}: {exc}") from None
    if len(lines) > 2:
        raise FormatError(f"line {lines[2][0]}: scalar set files hold exactly two lines")
    codes: list[int] = []
    if len(lines) == 2:
        lineno, body = lines[1]
        try:
            codes = [spec.check(int(tok)) for tok in body.split()]
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        if any(a >= b for a, b in zip(codes, codes[1:])):
            raise FormatError(f"line {lineno}: codes must be strictly increasing")
    return ScalarSet(spec, codes)


def format_scalar_set(S: ScalarSet) -> str:
    return f"{S.spec}\n{' '.join(str(a) for a in S)}\n"


def read_point_set(path: str | Path) -> PointSet:
    return parse_point_set(Path(path).read_text())


def read_scalar_set(path: str | Path) -> ScalarSet:
    return parse_scalar_set(Path(path).read_text())

"""Points, directions and lines of the plane over a finite field.

A line is labelled ``(theta, t)`` and stands for ``{w : w . v_theta = t}`` where
``v_theta = (1, theta)`` for finite theta and ``(0, 1)`` for theta = infinity.
Every one of the q(q+1) lines of the plane gets exactly one label.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

from .ffield import Elem, FieldSpec


class Point(NamedTuple):
    x: Elem
    y: Elem


ORIGIN = Point(0, 0)


@functools.total_ordering
@dataclass(frozen=True)
class Direction:
    """An element of F ∪ {∞}; ``theta is None`` means infinity.

    Ordered with finite codes ascending and infinity last.
    """

    theta: Optional[Elem] = None

    @classmethod
    def finite(cls, theta: Elem) -> "Direction":
        return cls(theta)

    @property
    def is_infinite(self) -> bool:
        return self.theta is None

    def _key(self) -> tuple[int, int]:
        return (1, 0) if self.theta is None else (0, self.theta)

    def __lt__(self, other: "Direction") -> bool:
        if not isinstance(other, Direction):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self) -> str:
        return "inf" if self.theta is None else str(self.theta)

    def __repr__(self) -> str:
        return "Infinity" if self.theta is None else f"Finite({self.theta})"

    @classmethod
    def parse(cls, text: str) -> "Direction":
        return cls(None) if text == "inf" else cls(int(text))


INFINITY = Direction(None)


class Line(NamedTuple):
    theta: Direction
    t: Elem


class PointSet:
    """A duplicate-free set of points of one field plane.

    Members iterate in canonical order (x code, then y code).  Repeated input
    points are merged; use ``strict=True`` to reject them instead.
    """

    __slots__ = ("spec", "_members", "_lookup")

    def __init__(self, spec: FieldSpec, points: Iterable[tuple[int, int]] = (), strict: bool = False):
        seen = set()
        for pt in points:
            a, b = pt
            pt = Point(spec.check(a), spec.check(b))
            if strict and pt in seen:
                raise ValueError(f"duplicate point {tuple(pt)}")
            seen.add(pt)
        self.spec = spec
        self._members = tuple(sorted(seen))
        self._lookup = frozenset(seen)

    @classmethod
    def full_plane(cls, spec: FieldSpec) -> "PointSet":
        return cls(spec, (Point(a, b) for a in range(spec.q) for b in range(spec.q)))

    @classmethod
    def product(cls, spec: FieldSpec, xs: Iterable[Elem], ys: Iterable[Elem] | None = None) -> "PointSet":
        xs = list(xs)
        ys = xs if ys is None else list(ys)
        return cls(spec, (Point(a, b) for a in xs for b in ys))

    @property
    def members(self) -> tuple[Point, ...]:
        return self._members

    def __iter__(self) -> Iterator[Point]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, pt: object) -> bool:
        return pt in self._lookup

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.spec == other.spec and self._members == other._members

    def __hash__(self) -> int:
        return hash((self.spec, self._members))

    def __repr__(self) -> str:
        return f"PointSet(GF({self.spec.p}^{self.spec.k}), {[tuple(m) for m in self._members]})"


def _same_field(a: PointSet, b: PointSet) -> None:
    if a.spec != b.spec:
        raise ValueError("point sets live over different fields")


def _point(spec: FieldSpec, v: tuple[int, int]) -> Point:
    return Point(spec.check(v[0]), spec.check(v[1]))


def dot(spec: FieldSpec, u: tuple[int, int], v: tuple[int, int]) -> Elem:
    u, v = _point(spec, u), _point(spec, v)
    return spec.add(spec.mul(u[0], v[0]), spec.mul(u[1], v[1]))


def add_points(spec: FieldSpec, u: Point, v: Point) -> Point:
    return Point(spec.add(u[0], v[0]), spec.add(u[1], v[1]))


def sub_points(spec: FieldSpec, u: Point, v: Point) -> Point:
    return Point(spec.sub(u[0], v[0]), spec.sub(u[1], v[1]))


def scale(spec: FieldSpec, lam: Elem, v: Point) -> Point:
    return Point(spec.mul(lam, v[0]), spec.mul(lam, v[1]))


def all_directions(spec: FieldSpec) -> list[Direction]:
    """All q+1 directions in canonical order."""
    return [Direction(theta) for theta in range(spec.q)] + [INFINITY]


def direction_vector(theta: Direction) -> Point:
    return Point(0, 1) if theta.is_infinite else Point(1, theta.theta)


def normal_vector(spec: FieldSpec, theta: Direction) -> Point:
    """A nonzero vector orthogonal to v_theta: (theta, -1), or (1, 0) at infinity."""
    return Point(1, 0) if theta.is_infinite else Point(theta.theta, spec.neg(1))


def direction_of(spec: FieldSpec, v: tuple[int, int]) -> Direction:
    x, y = _point(spec, v)
    if x == 0 and y == 0:
        raise ValueError("the zero vector determines no direction")
    if x == 0:
        return INFINITY
    return Direction(spec.div(y, x))


def on_line(spec: FieldSpec, w: tuple[int, int], line: Line) -> bool:
    return dot(spec, w, direction_vector(line.theta)) == line.t


def line_through(spec: FieldSpec, u: tuple[int, int], w: tuple[int, int]) -> Line:
    """The unique line (theta, t) containing two distinct points."""
    u, w = _point(spec, u), _point(spec, w)
    if u == w:
        raise ValueError("a line needs two distinct points")
    a, b = sub_points(spec, u, w)
    # theta solves a + theta*b = 0; when b = 0 only infinity works.
    theta = INFINITY if b == 0 else Direction(spec.neg(spec.div(a, b)))
    return Line(theta, dot(spec, u, direction_vector(theta)))


def all_lines(spec: FieldSpec) -> list[Line]:
    return [Line(theta, t) for theta in all_directions(spec) for t in range(spec.q)]


def line_points(spec: FieldSpec, line: Line) -> list[Point]:
    """The q points of a line, in canonical order."""
    theta, t = line
    if theta.is_infinite:
        return [Point(a, t) for a in range(spec.q)]
    # x + theta*y = t
    return sorted(Point(spec.sub(t, spec.mul(theta.theta, b)), b) for b in range(spec.q))


def dot_set(E: PointSet, v: tuple[int, int]) -> frozenset[Elem]:
    spec = E.spec
    v = _point(spec, v)
    return frozenset(spec.add(spec.mul(u[0], v[0]), spec.mul(u[1], v[1])) for u in E)


def difference_set(E: PointSet) -> PointSet:
    spec = E.spec
    return PointSet(spec, (sub_points(spec, u, w) for u in E for w in E))


def sumset_points(E: PointSet, F: PointSet) -> PointSet:
    _same_field(E, F)
    spec = E.spec
    return PointSet(spec, (add_points(spec, u, w) for u in E for w in F))


def directions_determined(F: PointSet) -> frozenset[Direction]:
    spec = F.spec
    return frozenset(direction_of(spec, v) for v in F if v != ORIGIN)

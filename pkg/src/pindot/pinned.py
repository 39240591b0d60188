"""Finding a pinned pair x, y in E with |E . (y - x)| > q/2.

The search has two independent halves:

* a direction theta whose lines meet E as evenly as possible, chosen as the
  global minimiser of sum_t i(l_{theta,t})^2 (ties go to the smaller
  direction in canonical order);
* a pair of points of E whose difference points in direction theta, found
  by bucketing E on the lines of that direction.  With |E| > q points and only
  q lines some bucket must hold two points.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .errors import DirectionNotDetermined, NoQualifyingDirection, PreconditionError, VerificationError
from .ffield import Elem
from .incidence import directional_second_moment
from .plane import (
    Direction,
    Point,
    PointSet,
    all_directions,
    difference_set,
    direction_of,
    directions_determined,
    dot_set,
    normal_vector,
    sub_points,
)


@dataclass(frozen=True)
class PinnedWitness:
    x: Point
    y: Point
    direction: Direction
    dot_values: frozenset[Elem]
    moment: int

    @property
    def dot_count(self) -> int:
        return len(self.dot_values)

    def to_json(self) -> dict:
        return {
            "x": list(self.x),
            "y": list(self.y),
            "theta": str(self.direction),
            "moment": self.moment,
            "dot_count": self.dot_count,
            "dot_values": sorted(self.dot_values),
        }


def threshold(q: int) -> int:
    """Smallest integer strictly greater than q/2."""
    return q // 2 + 1


def _require_large(E: PointSet) -> None:
    if len(E) <= E.spec.q:
        raise PreconditionError(f"need |E| > q, got |E| = {len(E)} and q = {E.spec.q}")


def best_direction(E: PointSet) -> tuple[Direction, int]:
    if not len(E):
        raise PreconditionError("best_direction needs a nonempty set")
    best = None
    for theta in all_directions(E.spec):
        m = directional_second_moment(E, theta)
        if best is None or m < best[1]:
            best = (theta, m)
    return best


def good_vector(E: PointSet, F: PointSet) -> tuple[Point, frozenset[Elem]]:
    """A member v of F with |E . v| > q/2, assuming F determines every direction."""
    if E.spec != F.spec:
        raise ValueError("point sets live over different fields")
    _require_large(E)
    spec = E.spec
    realizer: dict[Direction, Point] = {}
    for v in F:
        if v != (0, 0):
            realizer.setdefault(direction_of(spec, v), v)
    best = None
    for theta in sorted(realizer):
        m = directional_second_moment(E, theta)
        if best is None or m < best[1]:
            best = (theta, m)
    n = len(E)
    if best is None or spec.q * best[1] >= 2 * n * n:
        raise NoQualifyingDirection("no direction determined by F has moment below 2|E|^2/q")
    v = realizer[best[0]]
    return v, dot_set(E, v)


def pair_with_direction(E: PointSet, theta: Direction) -> tuple[Point, Point]:
    """The first pair u != w of E on a common line of direction theta."""
    if not len(E):
        raise PreconditionError("pair_with_direction needs a nonempty set")
    spec = E.spec
    nx, ny = normal_vector(spec, theta)
    buckets: dict[Elem, list[Point]] = defaultdict(list)
    for u in E:
        buckets[spec.add(spec.mul(u[0], nx), spec.mul(u[1], ny))].append(u)
    for t in sorted(buckets):
        pts = buckets[t]
        if len(pts) >= 2:
            return pts[0], pts[1]
    raise DirectionNotDetermined(f"direction {theta} not determined by E - E")


def verify_imp(E: PointSet) -> tuple[bool, frozenset[Direction]]:
    """Check that E - E determines every direction; returns (ok, missing)."""
    found = directions_determined(difference_set(E))
    missing = frozenset(all_directions(E.spec)) - found
    return not missing, missing


def pinned_pair(E: PointSet) -> PinnedWitness:
    _require_large(E)
    spec = E.spec
    theta, moment = best_direction(E)
    x, y = pair_with_direction(E, theta)
    d = sub_points(spec, y, x)
    # y - x is a nonzero multiple of v_theta, and scaling does not change |E . v|
    if direction_of(spec, d) != theta:
        raise VerificationError(f"pair {x}, {y} does not point in direction {theta}")
    return PinnedWitness(x, y, theta, dot_set(E, d), moment)


def max_pinned_pair(E: PointSet) -> tuple[Point, Point, int] | None:
    """Brute force over all ordered pairs x != y: the pair maximising |E . (y - x)|.

    Exploratory only: no size hypothesis is assumed.  Returns None when |E| < 2.
    """
    spec = E.spec
    best = None
    for x, y in itertools.permutations(E, 2):
        c = len(dot_set(E, sub_points(spec, y, x)))
        if best is None or c > best[2]:
            best = (x, y, c)
    return best

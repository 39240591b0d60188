"""Incidence counts i(l) = |l ∩ E| and their first and second moments.

All moments are exact integers.  The production path buckets E by the value
of ``u . v_theta`` for each direction; each bucket is the intersection of E
with one line ``(theta, t)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .plane import Direction, Line, PointSet, all_directions, direction_vector, on_line


@dataclass(frozen=True)
class MomentProfile:
    per_direction: dict[Direction, int]
    total: int

    def to_json(self) -> list[dict]:
        return [{"theta": str(theta), "moment": m} for theta, m in sorted(self.per_direction.items())]


def incidence_count(E: PointSet, line: Line) -> int:
    return sum(1 for u in E if on_line(E.spec, u, line))


def line_buckets(E: PointSet, theta: Direction) -> Counter:
    """Map t -> i(l_{theta,t}) for the lines of direction theta that meet E."""
    spec = E.spec
    vx, vy = direction_vector(theta)
    add, mul = spec.add, spec.mul
    return Counter(add(mul(u[0], vx), mul(u[1], vy)) for u in E)


def directional_second_moment(E: PointSet, theta: Direction) -> int:
    return sum(c * c for c in line_buckets(E, theta).values())


def moment_profile(E: PointSet) -> MomentProfile:
    per = {theta: directional_second_moment(E, theta) for theta in all_directions(E.spec)}
    return MomentProfile(per, sum(per.values()))


def total_second_moment(E: PointSet) -> int:
    """Sum of i(l)^2 over every line of the plane; equals |E|^2 + q|E|."""
    return moment_profile(E).total


def second_moment_formula(E: PointSet) -> int:
    n = len(E)
    return n * n + E.spec.q * n


def first_moment(E: PointSet) -> int:
    return sum(sum(line_buckets(E, theta).values()) for theta in all_directions(E.spec))

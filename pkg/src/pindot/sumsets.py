"""Sumsets and product sets of field elements, and their consequences for pinned pairs."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import PreconditionError, VerificationError
from .ffield import Elem, FieldSpec, make_field, subfield_elements
from .pinned import pinned_pair
from .plane import Point, PointSet, dot_set, sub_points, sumset_points


class ScalarSet:
    """A set of elements of one field; iterates in increasing code order."""

    __slots__ = ("spec", "members")

    def __init__(self, spec: FieldSpec, members: Iterable[Elem] = ()):
        self.spec = spec
        self.members = frozenset(spec.check(a) for a in members)

    @classmethod
    def full(cls, spec: FieldSpec) -> "ScalarSet":
        return cls(spec, range(spec.q))

    def is_full(self) -> bool:
        return len(self.members) == self.spec.q

    def __iter__(self) -> Iterator[Elem]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a: object) -> bool:
        return a in self.members

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ScalarSet):
            return self.spec == other.spec and self.members == other.members
        if isinstance(other, (set, frozenset)):
            return self.members == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self.members))

    def __repr__(self) -> str:
        return f"ScalarSet(GF({self.spec.p}^{self.spec.k}), {sorted(self.members)})"


def _same_field(S: ScalarSet, T: ScalarSet) -> FieldSpec:
    if S.spec != T.spec:
        raise ValueError("scalar sets live over different fields")
    return S.spec


def sumset(S: ScalarSet, T: ScalarSet) -> ScalarSet:
    spec = _same_field(S, T)
    add = spec.add
    return ScalarSet(spec, {add(s, t) for s in S.members for t in T.members})


def productset(A: ScalarSet, B: ScalarSet) -> ScalarSet:
    spec = _same_field(A, B)
    mul = spec.mul
    return ScalarSet(spec, {mul(a, b) for a in A.members for b in B.members})


def negation(S: ScalarSet) -> ScalarSet:
    return ScalarSet(S.spec, (S.spec.neg(a) for a in S.members))


def is_symmetric(S: ScalarSet) -> bool:
    return negation(S) == S


def iterated_sumset(S: ScalarSet, n: int) -> ScalarSet:
    """S + S + ... + S with n summands."""
    if n < 1:
        raise ValueError("iterated sumset needs n >= 1")
    out = S
    for _ in range(n - 1):
        out = sumset(out, S)
        if out.is_full():
            break
    return out


def complete_pair_check(S: ScalarSet) -> bool:
    """True iff S + S is the whole field."""
    return sumset(S, S).is_full()


def full_field_pinned_sum(E: PointSet) -> tuple[Point, Point]:
    """A pair x, y in E with (E + E) . (y - x) equal to the whole field.

    Both S + S for S = E . (y - x) and the dot set of E + E against y - x are
    computed and checked before returning.
    """
    w = pinned_pair(E)
    spec = E.spec
    S = ScalarSet(spec, w.dot_values)
    if not complete_pair_check(S):
        raise VerificationError(f"S + S misses field elements for S = {sorted(S.members)}")
    direct = dot_set(sumset_points(E, E), sub_points(spec, w.y, w.x))
    if len(direct) != spec.q:
        raise VerificationError(f"(E+E).(y-x) misses field elements for pair {w.x}, {w.y}")
    return w.x, w.y


def subfield_example(p: int, k: int = 2) -> PointSet:
    """B x B for B the subfield of order p^(k/2) inside GF(p^k), so |E| = q.

    With the default k = 2 this is F_p x F_p inside GF(p^2).
    """
    if k % 2:
        raise ValueError("the subfield example needs an even extension degree")
    spec = make_field(p, k)
    B = sorted(subfield_elements(spec, k // 2))
    return PointSet.product(spec, B)


def pinned_dot_count_range(E: PointSet) -> tuple[int, int]:
    """(min, max) of |E . (y - x)| over all ordered pairs x != y of E."""
    spec = E.spec
    counts = [len(dot_set(E, sub_points(spec, y, x))) for x, y in itertools.permutations(E, 2)]
    return min(counts), max(counts)


def glibichuk_check(A: ScalarSet) -> bool:
    """For symmetric A with |A|^2 > q: check (E+E).(E-E) = F for E = A x A, and AA+...+AA (8 terms) = F."""
    spec = A.spec
    if not is_symmetric(A):
        raise PreconditionError("A must satisfy -A = A")
    if len(A) ** 2 <= spec.q:
        raise PreconditionError(f"need |A| > sqrt(q), got |A| = {len(A)} and q = {spec.q}")
    E = PointSet.product(spec, A)
    try:
        full_field_pinned_sum(E)
    except VerificationError:
        return False
    return iterated_sumset(productset(A, A), 8).is_full()


def mult_subgroup(spec: FieldSpec, m: int) -> ScalarSet:
    """The subgroup of F* of order m, {x : x^m = 1}."""
    if m < 1 or (spec.q - 1) % m:
        raise ValueError(f"{m} does not divide q - 1 = {spec.q - 1}")
    return ScalarSet(spec, (x for x in range(1, spec.q) if spec.pow(x, m) == 1))


@dataclass(frozen=True)
class AAStats:
    card_AA_AA: int
    hi_bound: int
    subgroup: bool

    def to_json(self) -> dict:
        return {"card_AA_AA": self.card_AA_AA, "hi_bound": self.hi_bound, "subgroup": self.subgroup}


def aa_plus_aa_stats(A: ScalarSet) -> AAStats:
    """|AA + AA| next to the reference curve min(q, |A|^3 // q).  Measurement only."""
    if not len(A):
        raise ValueError("A must be nonempty")
    q = A.spec.q
    AA = productset(A, A)
    return AAStats(len(sumset(AA, AA)), min(q, len(A) ** 3 // q), AA == A)


# -- symmetric sets ---------------------------------------------------------

def negation_orbits(spec: FieldSpec) -> list[tuple[Elem, ...]]:
    """Orbits {a, -a} of nonzero elements, each sorted, listed by smallest member."""
    orbits = {tuple(sorted({a, spec.neg(a)})) for a in range(1, spec.q)}
    return sorted(orbits)


def zero_options(spec: FieldSpec, m: int) -> list[bool]:
    orbit = 1 if spec.p == 2 else 2
    n_orbits = (spec.q - 1) // orbit
    opts = []
    for with_zero in (False, True):
        rest = m - with_zero
        if rest >= 0 and rest % orbit == 0 and rest // orbit <= n_orbits:
            opts.append(with_zero)
    return opts


def count_symmetric_sets(spec: FieldSpec, m: int) -> int:
    orbit = 1 if spec.p == 2 else 2
    n_orbits = (spec.q - 1) // orbit
    return sum(math.comb(n_orbits, (m - z) // orbit) for z in zero_options(spec, m))


def symmetric_sets(spec: FieldSpec, m: int) -> Iterator[ScalarSet]:
    """Every symmetric subset of size m, in a fixed order."""
    orbit = 1 if spec.p == 2 else 2
    orbits = negation_orbits(spec)
    for with_zero in zero_options(spec, m):
        for chosen in itertools.combinations(orbits, (m - with_zero) // orbit):
            members = [a for o in chosen for a in o]
            if with_zero:
                members.append(0)
            yield ScalarSet(spec, members)

"""Seeded, reproducible sampling of point sets and scalar sets.

Generator (fixed; changing it changes every report):

* state: numpy ``PCG64`` seeded from ``SeedSequence([seed, trial_index, p, k, stream])``,
  where ``stream`` separates the kinds of object drawn (points = 0,
  symmetric scalar sets = 1, plain scalar sets = 2);
* raw output: ``PCG64.random_raw()`` 64-bit words, whose stream numpy keeps stable;
* bounded draws in ``[0, n)``: reject words ``>= 2**64 - (2**64 % n)``, then take ``word % n``;
* sets of n cells: a Fisher-Yates pass over the canonical enumeration, stopped after
  n swaps, the first n cells taken.  Plane cells are ordered ``a * q + b`` for point (a, b).

Set digests are FNV-1a 64 over the sorted cell codes, each as 4 little-endian bytes.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .ffield import FieldSpec
from .plane import Point, PointSet
from .sumsets import ScalarSet, zero_options, negation_orbits

POINTS, SYMMETRIC, SCALARS = 0, 1, 2

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


class Stream:
    def __init__(self, seed: int, trial_index: int, spec: FieldSpec, stream: int):
        if not 0 <= seed <= _MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        ss = np.random.SeedSequence([seed, trial_index, spec.p, spec.k, stream])
        self._bits = np.random.PCG64(ss)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = int(self._bits.random_raw())
            if r < limit:
                return r % n

    def prefix_shuffle(self, items: Sequence, n: int) -> list:
        cells = list(items)
        for i in range(n):
            j = i + self.below(len(cells) - i)
            cells[i], cells[j] = cells[j], cells[i]
        return cells[:n]


def sample_point_set(spec: FieldSpec, n: int, seed: int, trial_index: int) -> PointSet:
    q = spec.q
    if not 0 <= n <= q * q:
        raise ValueError(f"cannot draw {n} distinct points from a plane of {q * q}")
    cells = Stream(seed, trial_index, spec, POINTS).prefix_shuffle(range(q * q), n)
    return PointSet(spec, (Point(*divmod(c, q)) for c in cells))


def sample_scalar_set(spec: FieldSpec, m: int, seed: int, trial_index: int) -> ScalarSet:
    if not 0 <= m <= spec.q:
        raise ValueError(f"cannot draw {m} distinct elements from a field of {spec.q}")
    return ScalarSet(spec, Stream(seed, trial_index, spec, SCALARS).prefix_shuffle(range(spec.q), m))


def sample_symmetric_set(spec: FieldSpec, m: int, seed: int, trial_index: int) -> ScalarSet:
    """A random symmetric (-A = A) set of size m, built from negation orbits.

    Whether 0 is included is drawn with probability 1/2 when both choices can
    reach size m (characteristic 2 only); otherwise parity decides.
    """
    options = zero_options(spec, m)
    if not options:
        raise ValueError(f"no symmetric set of size {m} in GF({spec.p}^{spec.k})")
    rng = Stream(seed, trial_index, spec, SYMMETRIC)
    with_zero = options[rng.below(2)] if len(options) == 2 else options[0]
    orbits = negation_orbits(spec)
    size = len(orbits[0]) if orbits else 1
    chosen = rng.prefix_shuffle(orbits, (m - with_zero) // size)
    members = [a for o in chosen for a in o] + ([0] if with_zero else [])
    return ScalarSet(spec, members)


def set_digest(E: PointSet) -> str:
    """FNV-1a 64 of the sorted cell codes, as 16 hex digits."""
    q = E.spec.q
    h = _FNV_OFFSET
    for a, b in E:
        for byte in (a * q + b).to_bytes(4, "little"):
            h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return f"{h:016x}"

"""Exact arithmetic in finite fields GF(p^k).

Elements are plain integers in ``0..q-1``.  The polynomial
``c_0 + c_1 X + ... + c_{k-1} X^{k-1}`` over GF(p) is encoded as
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``, so code 0 is zero and code 1 is one.

The modulus for GF(p^k) is the monic irreducible of degree k whose
coefficient tuple ``(c_{k-1}, ..., c_0)`` is lexicographically smallest.
Because that tuple order coincides with the numeric order of the encoded
lower part, the search simply walks ``X^k + code`` for ``code = 0, 1, ...``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Elem = int

Q_CAP = 1 << 20
# Log/antilog tables up to this size; larger fields reduce polynomials on the fly.
LOG_TABLE_LIMIT = 1 << 16
# Full q x q add/mul tables up to this size.
FULL_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists low degree first ------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo b over GF(p); b must have a nonzero leading coefficient."""
    r = _trim(list(a))
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p) if p > 2 else 1
    while len(r) - 1 >= db and r:
        c = (r[-1] * lead_inv) % p
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bc) % p
        _trim(r)
    return r


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] % p == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_rem(poly, list(low) + [1], p):
                return False
    return True


def _find_modulus(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    for code in range(p ** k):
        low = [(code // p ** i) % p for i in range(k)]
        candidate = low + [1]
        if is_irreducible(candidate, p):
            return tuple(candidate)
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    """A concrete finite field of order ``q = p**k`` with its canonical modulus.

    ``modulus`` lists the k+1 coefficients of the monic modulus, lowest degree
    first.  Use :func:`make_field` rather than constructing this directly.
    """

    p: int
    k: int
    q: int
    modulus: tuple[int, ...]
    _exp: tuple[int, ...] | None = field(default=None, init=False, repr=False, compare=False)
    _log: tuple[int, ...] | None = field(default=None, init=False, repr=False, compare=False)
    _add_tab: tuple[tuple[int, ...], ...] | None = field(default=None, init=False, repr=False, compare=False)
    _mul_tab: tuple[tuple[int, ...], ...] | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.q != self.p ** self.k:
            raise ValueError(f"q={self.q} is not {self.p}^{self.k}")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if self.k > 1 and self.q <= LOG_TABLE_LIMIT:
            exp, log = self._build_log_tables()
            object.__setattr__(self, "_exp", exp)
            object.__setattr__(self, "_log", log)
        if self.q <= FULL_TABLE_LIMIT:
            qs = range(self.q)
            object.__setattr__(self, "_add_tab", tuple(tuple(self._add_raw(a, b) for b in qs) for a in qs))
            object.__setattr__(self, "_mul_tab", tuple(tuple(self._mul_raw(a, b) for b in qs) for a in qs))

    # -- encoding ----------------------------------------------------------

    def digits(self, a: Elem) -> list[int]:
        """Coefficients of the polynomial for code ``a``, lowest degree first (length k)."""
        p = self.p
        out = []
        for _ in range(self.k):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_digits(self, coeffs: Iterable[int]) -> Elem:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (c % self.p)
        return code

    def check(self, a: Elem) -> Elem:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of GF({self.p}^{self.k})")
        return a

    # -- reference arithmetic (no tables) -----------------------------------

    def _add_raw(self, a: Elem, b: Elem) -> Elem:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def mul_reference(self, a: Elem, b: Elem) -> Elem:
        """Schoolbook product reduced modulo the modulus polynomial."""
        if self.k == 1:
            return (a * b) % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        rem = _poly_rem([c % self.p for c in prod], self.modulus, self.p)
        return self.from_digits(rem)

    def _build_log_tables(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        n = self.q - 1
        factors = _prime_factors(n)
        for g in range(2, self.q):
            if all(self._pow_reference(g, n // f) != 1 for f in factors):
                break
        else:  # pragma: no cover - a multiplicative group of order >= 3 is cyclic
            raise AssertionError("no primitive element found")
        exp = [1] * (2 * n)
        log = [0] * self.q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self.mul_reference(x, g)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        return tuple(exp), tuple(log)

    def _pow_reference(self, a: Elem, e: int) -> Elem:
        result = 1
        while e:
            if e & 1:
                result = self.mul_reference(result, a)
            a = self.mul_reference(a, a)
            e >>= 1
        return result

    def _mul_raw(self, a: Elem, b: Elem) -> Elem:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self.mul_reference(a, b)

    # -- public arithmetic ---------------------------------------------------

    def add(self, a: Elem, b: Elem) -> Elem:
        if self._add_tab is not None:
            return self._add_tab[a][b]
        return self._add_raw(a, b)

    def neg(self, a: Elem) -> Elem:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_digits(-c for c in self.digits(a))

    def sub(self, a: Elem, b: Elem) -> Elem:
        return self.add(a, self.neg(b))

    def mul(self, a: Elem, b: Elem) -> Elem:
        if self._mul_tab is not None:
            return self._mul_tab[a][b]
        return self._mul_raw(a, b)

    def inv(self, a: Elem) -> Elem:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: Elem, b: Elem) -> Elem:
        return self.mul(a, self.inv(b))

    def pow(self, a: Elem, e: int) -> Elem:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, e, self.p)
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._pow_reference(a, e)

    def elements(self) -> range:
        return range(self.q)

    def __str__(self) -> str:
        return f"{self.p},{self.k}"


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldSpec:
    """Return the canonical FieldSpec for GF(p^k); ``q`` is capped at 2**20."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p={p!r} is not prime")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k!r}")
    q = p ** k
    if q > Q_CAP:
        raise ValueError(f"q={p}^{k} exceeds the supported cap 2^20")
    return FieldSpec(p, k, q, _find_modulus(p, k))


def parse_field(text: str) -> FieldSpec:
    """Parse the ``"p,k"`` field designation."""
    try:
        p_txt, k_txt = text.split(",")
        p, k = int(p_txt), int(k_txt)
    except ValueError:
        raise ValueError(f"field must be given as 'p,k', got {text!r}") from None
    return make_field(p, k)


_OPS = {"add": 2, "sub": 2, "neg": 1, "mul": 2, "inv": 1}


def arith(spec: FieldSpec, op: str, *operands: int) -> Elem:
    """Dispatch a named field operation.  ``pow`` takes (element, exponent)."""
    if op == "pow":
        a, e = operands
        return spec.pow(spec.check(a), e)
    if op not in _OPS:
        raise ValueError(f"unknown operation {op!r}")
    if len(operands) != _OPS[op]:
        raise TypeError(f"{op} takes {_OPS[op]} operand(s)")
    return getattr(spec, op)(*(spec.check(a) for a in operands))


def elements(spec: FieldSpec) -> list[Elem]:
    return list(range(spec.q))


def subfield_elements(spec: FieldSpec, d: int) -> frozenset[Elem]:
    """The subfield GF(p^d): elements fixed by x -> x^(p^d)."""
    if d < 1 or spec.k % d:
        raise ValueError(f"{d} does not divide the extension degree {spec.k}")
    e = spec.p ** d
    return frozenset(x for x in range(spec.q) if spec.pow(x, e) == x)

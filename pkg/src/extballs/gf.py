"""Table-driven arithmetic in small finite fields GF(p^n).

Elements are plain ints ("codes"). The code of an element is the base-p
number whose digits are the coefficients of its polynomial representation,
lowest degree first, so addition is digit-wise mod p and multiplication goes
through log/antilog tables built from a primitive polynomial.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .errors import (
    DivisionByZero,
    DlogOfZero,
    NotPrime,
    NotPrimePower,
    PolynomialNotIrreducible,
    PolynomialNotPrimitive,
)

# Fields beyond this order are rejected outright.
MAX_ORDER = 1 << 16
# Addition tables are materialised only up to this order.
_ADD_TABLE_LIMIT = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p**n``; raise NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    n, r = 0, q
    while r % p == 0:
        r //= p
        n += 1
    if r != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, n


# -- polynomials over GF(p), coefficient lists lowest degree first ----------

def _trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(_trim(a)) - 1 >= dm and any(a):
        shift = len(a) - 1 - dm
        t = a[-1] * inv_lead % p
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - t * c) % p
    return a


def _monic_polys(degree: int, p: int):
    for k in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(k % p)
            k //= p
        yield coeffs + [1]


def _is_irreducible(poly: list[int], p: int) -> bool:
    n = len(poly) - 1
    for d in range(1, n // 2 + 1):
        for g in _monic_polys(d, p):
            if not any(_poly_mod(list(poly), g, p)):
                return False
    return True


def parse_poly(text: str, p: int) -> tuple[int, ...]:
    """Parse ``"x^3+x+1"`` or a comma list ``"1,1,0,1"`` (lowest degree first)."""
    text = text.replace(" ", "")
    if re.fullmatch(r"\d+(,\d+)*", text):
        return tuple(int(c) % p for c in text.split(","))
    coeffs: dict[int, int] = {}
    for sign, coef, var, exp in re.findall(r"([+-]?)(\d*)(x?)(?:\^(\d+))?", text):
        if not coef and not var:
            continue
        c = int(coef) if coef else 1
        e = (int(exp) if exp else 1) if var else 0
        coeffs[e] = (coeffs.get(e, 0) + (-c if sign == "-" else c)) % p
    if not coeffs:
        raise ValueError(f"cannot parse polynomial {text!r}")
    return tuple(coeffs.get(i, 0) for i in range(max(coeffs) + 1))


def format_poly(poly) -> str:
    terms = []
    for i in range(len(poly) - 1, -1, -1):
        c = poly[i]
        if c == 0:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"


@dataclass(frozen=True)
class FieldSpec:
    """A concrete finite field GF(p^n) with a designated primitive element.

    ``prim_poly`` is monic of degree n, lowest coefficient first; the
    designated generator ``xi`` is its root (the class of ``x``).
    """

    p: int
    n: int
    prim_poly: tuple[int, ...]
    antilog_table: tuple[int, ...] = field(repr=False, compare=False)
    log_table: tuple = field(repr=False, compare=False)
    _add: tuple = field(default=None, repr=False, compare=False)
    _neg: tuple = field(default=None, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def order(self) -> int:
        return self.q

    @property
    def xi(self) -> int:
        return self.antilog(1)

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.n):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, ds) -> int:
        a = 0
        for d in reversed(list(ds)):
            a = a * self.p + d % self.p
        return a

    def add(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        if self.n == 1:
            return (a + b) % self.p
        p = self.p
        out, place = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def neg(self, a: int) -> int:
        if self._neg is not None:
            return self._neg[a]
        return self.from_digits(-d for d in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.antilog_table[(-self.log_table[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if k == 0 else 0
        return self.antilog_table[(self.log_table[a] * k) % (self.q - 1)]

    def dlog(self, a: int) -> int:
        """Exponent k in Z_{q-1} with xi**k == a."""
        if a == 0:
            raise DlogOfZero("zero has no discrete logarithm")
        return self.log_table[a]

    def antilog(self, k: int) -> int:
        return self.antilog_table[k % (self.q - 1)]

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise DlogOfZero("zero has no multiplicative order")
        return (self.q - 1) // gcd(self.log_table[a], self.q - 1)

    def primitive_elements(self) -> list[int]:
        m = self.q - 1
        return sorted(self.antilog_table[k] for k in range(m) if gcd(k, m) == 1)

    def parse(self, text: str) -> int:
        """Parse ``"0"``, a decimal code, ``"x"`` or ``"x^k"`` (a power of xi)."""
        text = text.strip()
        m = re.fullmatch(r"x(?:\^(-?\d+))?", text)
        if m:
            return self.antilog(int(m.group(1)) if m.group(1) else 1)
        value = int(text)
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element code of GF({self.q})")
        return value

    def format(self, a: int) -> str:
        if self.n == 1 or a == 0:
            return str(a)
        k = self.log_table[a]
        return "1" if k == 0 else f"x^{k}"

    def __str__(self) -> str:
        return f"GF({self.q})"


def _smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    m = p - 1
    primes = [d for d in range(2, m + 1) if m % d == 0 and is_prime(d)]
    for g in range(2, p):
        if all(pow(g, m // r, p) != 1 for r in primes):
            return g
    raise AssertionError("unreachable")


def _powers_of_x(poly: tuple[int, ...], p: int) -> list[int]:
    """Codes of x^0, x^1, ... until the sequence returns to 1 or exceeds q-1 steps."""
    n = len(poly) - 1
    q = p**n
    digits = [1] + [0] * (n - 1)
    out = []

    def code(ds):
        c = 0
        for d in reversed(ds):
            c = c * p + d
        return c

    for _ in range(q):
        out.append(code(digits))
        top = digits[-1]
        digits = [0] + digits[:-1]
        if top:
            digits = [(d - top * c) % p for d, c in zip(digits, poly[:-1])]
        if code(digits) == 1:
            break
    return out


def _default_poly(p: int, n: int) -> tuple[int, ...]:
    if n == 1:
        return ((-_smallest_primitive_root(p)) % p, 1)
    q = p**n
    for poly in _monic_polys(n, p):
        if _is_irreducible(poly, p) and len(_powers_of_x(tuple(poly), p)) == q - 1:
            return tuple(poly)
    raise AssertionError("every finite field has a primitive polynomial")


@lru_cache(maxsize=None)
def _build(p: int, n: int, poly: tuple[int, ...]) -> FieldSpec:
    q = p**n
    if n >= 2 and not _is_irreducible(list(poly), p):
        raise PolynomialNotIrreducible(f"{format_poly(poly)} is reducible over GF({p})")
    powers = _powers_of_x(poly, p)
    if len(powers) != q - 1 or 0 in powers:
        raise PolynomialNotPrimitive(f"{format_poly(poly)} is not primitive over GF({p})")
    log = [None] * q
    for k, c in enumerate(powers):
        log[c] = k
    add = neg = None
    if q <= _ADD_TABLE_LIMIT:
        def dig(a):
            return [(a // p**i) % p for i in range(n)]

        def undig(ds):
            return sum((d % p) * p**i for i, d in enumerate(ds))

        add = tuple(
            tuple(undig([x + y for x, y in zip(dig(a), dig(b))]) for b in range(q))
            for a in range(q)
        )
        neg = tuple(undig([-x for x in dig(a)]) for a in range(q))
    return FieldSpec(p, n, poly, tuple(powers), tuple(log), add, neg)


def make_field(p: int, n: int = 1, prim_poly=None) -> FieldSpec:
    """Build GF(p^n).

    Without ``prim_poly`` the choice is deterministic: the smallest primitive
    root for prime fields, otherwise the first primitive monic polynomial when
    polynomials are ordered by their coefficients read from the top degree down.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if p**n > MAX_ORDER:
        raise ValueError(f"GF({p}^{n}) is larger than supported ({MAX_ORDER})")
    if prim_poly is None:
        poly = _default_poly(p, n)
    else:
        if isinstance(prim_poly, str):
            prim_poly = parse_poly(prim_poly, p)
        poly = tuple(int(c) % p for c in prim_poly)
        if len(poly) != n + 1 or poly[-1] != 1:
            raise ValueError(f"primitive polynomial must be monic of degree {n}")
    return _build(p, n, poly)


def field_of_order(q: int, prim_poly=None) -> FieldSpec:
    p, n = factor_prime_power(q)
    return make_field(p, n, prim_poly)


def parse_field(text: str, overrides: dict | None = None) -> FieldSpec:
    """Parse a ``q[:poly]`` field selector; ``overrides`` maps q to a polynomial."""
    q_text, _, poly_text = text.partition(":")
    q = int(q_text)
    poly = poly_text or (overrides or {}).get(q)
    return field_of_order(q, poly or None)


def load_field_config(path) -> dict[int, str]:
    """Read ``q = polynomial`` lines; ``#`` starts a comment."""
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"bad config line: {raw.rstrip()!r}")
            out[int(key.strip())] = value.strip()
    return out

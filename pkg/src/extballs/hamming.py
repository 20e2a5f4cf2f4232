"""Vectors of F_q^3, radius-1 Hamming balls and extended balls.

Point sets are dense bitsets stored in a Python int: bit ``i`` stands for the
vector whose coordinate codes ``(a, b, c)`` satisfy ``i = a*q*q + b*q + c``.
Index order is therefore lexicographic order on coordinate codes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Iterator

from .errors import FieldMismatch
from .gf import FieldSpec


@dataclass(frozen=True, slots=True)
class Vec3:
    field: FieldSpec
    coords: tuple[int, int, int]

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    @property
    def weight(self) -> int:
        return sum(1 for c in self.coords if c)

    @property
    def delta(self) -> int:
        """Number of distinct coordinate values."""
        return len(set(self.coords))

    @property
    def index(self) -> int:
        q = self.field.q
        a, b, c = self.coords
        return (a * q + b) * q + c

    def is_zero(self) -> bool:
        return not any(self.coords)

    def scale(self, lam: int) -> Vec3:
        f = self.field
        return Vec3(f, tuple(f.mul(lam, c) for c in self.coords))

    def __add__(self, other: Vec3) -> Vec3:
        _check_same(self, other)
        f = self.field
        return Vec3(f, tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __str__(self) -> str:
        return "(" + ",".join(self.field.format(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"Vec3{self}@{self.field}"


def vec(f: FieldSpec, *coords) -> Vec3:
    """``vec(f, 1, 2, 3)`` or ``vec(f, (1, 2, 3))``; strings go through ``f.parse``."""
    if len(coords) == 1:
        coords = tuple(coords[0])
    if len(coords) != 3:
        raise ValueError("a vector of F_q^3 needs exactly three coordinates")
    out = []
    for c in coords:
        c = f.parse(c) if isinstance(c, str) else int(c)
        if not 0 <= c < f.q:
            raise ValueError(f"{c} is not an element code of {f}")
        out.append(c)
    return Vec3(f, tuple(out))


def parse_vec(f: FieldSpec, text: str) -> Vec3:
    """Parse the ``"a,b,c"`` text form (components as accepted by ``f.parse``)."""
    parts = text.strip().strip("()").split(",")
    return vec(f, *parts)


def basis_vector(f: FieldSpec, j: int) -> Vec3:
    """e_j for j in {0, 1, 2}."""
    coords = [0, 0, 0]
    coords[j] = 1
    return Vec3(f, tuple(coords))


def _check_same(u: Vec3, v: Vec3) -> None:
    if u.field != v.field:
        raise FieldMismatch(f"{u.field} vs {v.field}")


class Space:
    """Precomputed index tables for F_q^3. Obtain instances through ``space(f)``."""

    def __init__(self, f: FieldSpec):
        self.field = f
        q = self.q = f.q
        self.size = q**3
        self.full = (1 << self.size) - 1
        self.coords = [(i // (q * q), (i // q) % q, i % q) for i in range(self.size)]
        # smul[lam][i]: index of lam * vector(i)
        mul = [[f.mul(a, b) for b in range(q)] for a in range(q)]
        self.smul = [
            [(m[a] * q + m[b]) * q + m[c] for (a, b, c) in self.coords]
            for m in mul
        ]
        base0 = sum(1 << (c * q * q) for c in range(q))
        base1 = sum(1 << (c * q) for c in range(q))
        base2 = (1 << q) - 1
        # line[j][i]: points agreeing with vector(i) off coordinate j
        self.line = (
            [base0 << (i % (q * q)) for i in range(self.size)],
            [base1 << (i - ((i // q) % q) * q) for i in range(self.size)],
            [base2 << (i - i % q) for i in range(self.size)],
        )
        self.ball_mask = [
            self.line[0][i] | self.line[1][i] | self.line[2][i] for i in range(self.size)
        ]
        self._ext: dict[int, int] = {}

    def index(self, coords) -> int:
        a, b, c = coords
        return (a * self.q + b) * self.q + c

    def vector(self, i: int) -> Vec3:
        return Vec3(self.field, self.coords[i])

    def ext_mask(self, i: int) -> int:
        m = self._ext.get(i)
        if m is None:
            m = 0
            for row in self.smul:
                m |= self.ball_mask[row[i]]
            self._ext[i] = m
        return m

    def mask_where(self, pred: Callable[[tuple[int, int, int]], bool]) -> int:
        m = 0
        for i, c in enumerate(self.coords):
            if pred(c):
                m |= 1 << i
        return m

    @cached_property
    def D_mask(self) -> int:
        return self.mask_where(lambda c: c[0] and c[1] and c[2] and len(set(c)) == 3)

    @cached_property
    def A_mask(self) -> int:
        return self.mask_where(lambda c: len(set(c)) == 3)

    def tilde_ball_mask(self, i: int) -> int:
        return self.ball_mask[i] & self.D_mask

    def tilde_ext_mask(self, i: int) -> int:
        return self.ext_mask(i) & self.D_mask

    def set(self, bits: int) -> VecSet:
        return VecSet(self, bits)

    def from_vectors(self, vs: Iterable[Vec3]) -> VecSet:
        bits = 0
        for v in vs:
            if v.field != self.field:
                raise FieldMismatch(f"{v.field} vs {self.field}")
            bits |= 1 << v.index
        return VecSet(self, bits)

    def all(self) -> VecSet:
        return VecSet(self, self.full)

    def empty(self) -> VecSet:
        return VecSet(self, 0)


@lru_cache(maxsize=None)
def space(f: FieldSpec) -> Space:
    return Space(f)


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class VecSet:
    """Duplicate-free subset of F_q^3 backed by a bitset."""

    space: Space
    bits: int

    @property
    def field(self) -> FieldSpec:
        return self.space.field

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, v) -> bool:
        i = v if isinstance(v, int) else v.index
        return (self.bits >> i) & 1 == 1

    def indices(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __iter__(self) -> Iterator[Vec3]:
        return (self.space.vector(i) for i in iter_bits(self.bits))

    def _other(self, other: VecSet) -> int:
        if other.space.field != self.space.field:
            raise FieldMismatch(f"{other.field} vs {self.field}")
        return other.bits

    def __or__(self, other: VecSet) -> VecSet:
        return VecSet(self.space, self.bits | self._other(other))

    def __and__(self, other: VecSet) -> VecSet:
        return VecSet(self.space, self.bits & self._other(other))

    def __sub__(self, other: VecSet) -> VecSet:
        return VecSet(self.space, self.bits & ~self._other(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, VecSet):
            return NotImplemented
        return self.space.field == other.space.field and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.space.field, self.bits))

    def issubset(self, other: VecSet) -> bool:
        return self.bits & ~self._other(other) == 0

    def restrict(self, pred: Callable[[Vec3], bool]) -> VecSet:
        bits = 0
        for i in iter_bits(self.bits):
            if pred(self.space.vector(i)):
                bits |= 1 << i
        return VecSet(self.space, bits)

    def complement(self) -> VecSet:
        return VecSet(self.space, self.space.full & ~self.bits)

    def scale(self, lam: int) -> VecSet:
        row = self.space.smul[lam]
        bits = 0
        for i in iter_bits(self.bits):
            bits |= 1 << row[i]
        return VecSet(self.space, bits)

    def __repr__(self) -> str:
        shown = ", ".join(str(v) for _, v in zip(range(8), self))
        more = ", ..." if len(self) > 8 else ""
        return f"VecSet[{len(self)}]{{{shown}{more}}}"


def all_vectors(f: FieldSpec) -> list[Vec3]:
    s = space(f)
    return [s.vector(i) for i in range(s.size)]


def hamming_distance(u: Vec3, v: Vec3) -> int:
    _check_same(u, v)
    return sum(1 for a, b in zip(u.coords, v.coords) if a != b)


def ball(u: Vec3) -> VecSet:
    s = space(u.field)
    return VecSet(s, s.ball_mask[u.index])


def extended_ball(u: Vec3) -> VecSet:
    """Union of the radius-1 balls around every scalar multiple of ``u`` (0 included)."""
    s = space(u.field)
    return VecSet(s, s.ext_mask(u.index))


def domain_Dq(f: FieldSpec) -> VecSet:
    """Vectors with three pairwise distinct non-zero coordinates."""
    s = space(f)
    return VecSet(s, s.D_mask)


def domain_Aq(f: FieldSpec) -> VecSet:
    """Vectors with three pairwise distinct coordinates."""
    s = space(f)
    return VecSet(s, s.A_mask)


def in_Dq(u: Vec3) -> bool:
    a, b, c = u.coords
    return a != 0 and b != 0 and c != 0 and a != b and b != c and a != c


def restricted_ball(u: Vec3) -> VecSet:
    s = space(u.field)
    return VecSet(s, s.tilde_ball_mask(u.index))


def restricted_extended_ball(u: Vec3) -> VecSet:
    s = space(u.field)
    return VecSet(s, s.tilde_ext_mask(u.index))


def tilde_E_cardinality_formula(u: Vec3) -> int:
    """Closed-form |E(u) ∩ D_q| selected by (weight, number of distinct coordinates).

    Negative values, which only arise for q = 3, are clamped to 0.
    """
    return _formula_by_type(u.field.q, u.weight, u.delta)


def _formula_by_type(q: int, weight: int, delta: int) -> int:
    if weight == 2 and delta == 3:
        value = (q - 1) * (q - 3)
    elif weight == 3 and delta == 2:
        value = (q - 1) * (2 * q - 6)
    elif weight == 3 and delta == 3:
        value = (q - 1) * (3 * q - 11)
    else:
        value = 0
    return max(value, 0)


def vector_type(u: Vec3) -> tuple[int, int]:
    return (u.weight, u.delta)

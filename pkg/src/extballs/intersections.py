"""Pairwise intersections of (restricted) extended balls and family parameters."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import DomainEmpty, DomainViolation, DuplicateLabel, FamilyTooSmall
from .gf import FieldSpec
from .hamming import (
    Vec3,
    VecSet,
    _check_same,
    all_vectors,
    ball,
    domain_Dq,
    extended_ball,
    in_Dq,
    restricted_extended_ball,
    space,
    tilde_E_cardinality_formula,
)


def _coords_in_D(c) -> bool:
    a, b, d = c
    return a != 0 and b != 0 and d != 0 and a != b and b != d and a != d


def _ball_intersection_coords(q: int, u: tuple, v: tuple) -> list[tuple]:
    """Points of B(u) ∩ B(v) obtained from the distance case analysis."""
    diff = [i for i in range(3) if u[i] != v[i]]
    if len(diff) == 3:
        return []
    if len(diff) == 2:
        out = []
        for j in diff:
            w = list(u)
            w[j] = v[j]
            out.append(tuple(w))
        return out
    if len(diff) == 1:
        j = diff[0]
        out = []
        for x in range(q):
            w = list(u)
            w[j] = x
            out.append(tuple(w))
        return out
    # u == v: the whole ball
    out = [u]
    for j in range(3):
        for x in range(q):
            if x != u[j]:
                w = list(u)
                w[j] = x
                out.append(tuple(w))
    return out


def ball_intersection(u: Vec3, v: Vec3) -> VecSet:
    """B(u) ∩ B(v), built from the case split on d(u, v) rather than by enumeration."""
    _check_same(u, v)
    s = space(u.field)
    bits = 0
    for c in _ball_intersection_coords(s.q, u.coords, v.coords):
        bits |= 1 << s.index(c)
    return VecSet(s, bits)


@dataclass(frozen=True)
class RhoValue:
    """Normalised intersection parameter with per-scalar evidence.

    ``witnesses`` maps each contributing scalar mu to B~(u) ∩ B~(mu v).
    """

    value: int
    witnesses: dict = field(default_factory=dict)
    path: str = "definition"

    def __int__(self) -> int:
        return self.value


def _scaled(f: FieldSpec, lam: int, c: tuple) -> tuple:
    return (f.mul(lam, c[0]), f.mul(lam, c[1]), f.mul(lam, c[2]))


def _rho_terms(u: Vec3, v: Vec3, scalars) -> tuple[int, dict]:
    f = u.field
    s = space(f)
    witnesses = {}
    total = 0
    for mu in scalars:
        mv = _scaled(f, mu, v.coords)
        if sum(1 for a, b in zip(u.coords, mv) if a != b) == 3:
            continue
        pts = [c for c in _ball_intersection_coords(f.q, u.coords, mv) if _coords_in_D(c)]
        if pts:
            bits = 0
            for c in pts:
                bits |= 1 << s.index(c)
            witnesses[mu] = VecSet(s, bits)
            total += len(pts)
    return total, witnesses


def rho_scalars(u: Vec3, v: Vec3) -> list[int]:
    """The (deduplicated) scalars xi^(a-d), xi^(b-e), xi^(c-f) for u, v in D_q."""
    f = u.field
    out = []
    for x, y in zip(u.coords, v.coords):
        mu = f.div(x, y)
        if mu not in out:
            out.append(mu)
    return out


def rho(u: Vec3, v: Vec3) -> RhoValue:
    """rho_q(u, v) = sum over mu != 0 of |B~(u) ∩ B~(mu v)|, or 0 when either E~ is empty.

    Pairs inside D_q only need the three scalars matching a coordinate of u
    with the corresponding coordinate of mu*v; other pairs use the full sum.
    """
    _check_same(u, v)
    if tilde_E_cardinality_formula(u) == 0 or tilde_E_cardinality_formula(v) == 0:
        return RhoValue(0, {}, "empty")
    if in_Dq(u) and in_Dq(v):
        total, wit = _rho_terms(u, v, rho_scalars(u, v))
        return RhoValue(total, wit, "three-scalar")
    total, wit = _rho_terms(u, v, u.field.nonzero())
    return RhoValue(total, wit, "definition")


def rho_full(u: Vec3, v: Vec3) -> RhoValue:
    """rho_q by the plain definition: every mu in F_q*, no distance filter, no shortcut."""
    _check_same(u, v)
    if len(restricted_extended_ball(u)) == 0 or len(restricted_extended_ball(v)) == 0:
        return RhoValue(0, {}, "empty")
    s = space(u.field)
    wit = {}
    for mu in u.field.nonzero():
        w = (ball(u) & ball(v.scale(mu))).bits & s.D_mask
        if w:
            wit[mu] = VecSet(s, w)
    return RhoValue(sum(len(w) for w in wit.values()), wit, "definition")


def tilde_E_intersection_size(u: Vec3, v: Vec3) -> int:
    return rho(u, v).value * (u.field.q - 1)


def rho_zero_characterization(u: Vec3, v: Vec3) -> bool:
    """True iff u ~ (1, xi^a, xi^b), v ~ (1, xi^b, xi^a) with 2a = b and 2b = a in Z_{q-1}."""
    _check_same(u, v)
    if not (in_Dq(u) and in_Dq(v)):
        raise DomainViolation("both vectors must lie in D_q")
    f = u.field
    m = f.q - 1
    a = f.dlog(f.div(u[1], u[0]))
    b = f.dlog(f.div(u[2], u[0]))
    c = f.dlog(f.div(v[1], v[0]))
    d = f.dlog(f.div(v[2], v[0]))
    return c == b and d == a and a != b and (2 * a - b) % m == 0 and (2 * b - a) % m == 0


def rho_min(f: FieldSpec, exhaustive: bool = False) -> int:
    """min rho_q(u, v) over D_q x D_q; closed form unless ``exhaustive``."""
    q = f.q
    if q <= 3:
        raise DomainEmpty(f"D_{q} is empty")
    if not exhaustive:
        return 0 if (q - 1) % 3 == 0 else 2
    # rho(lam*u, v) = rho(u, mu*v) = rho(u, v), so both sides may start with 1
    D = [u for u in domain_Dq(f) if u[0] == 1]
    best = None
    for u in D:
        for v in D:
            r = rho(u, v).value
            if best is None or r < best:
                best = r
                if best == 0:
                    return 0
    return best


def theta_E_formula(q: int) -> int:
    """Closed form of theta for {E~(u) : u in D_q}."""
    return 0 if (q - 1) % 3 == 0 else 2 * (q - 1)


@dataclass(frozen=True)
class Family:
    """An indexed family of point sets, optionally labelled by generating vectors."""

    members: tuple
    labels: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.members):
                raise ValueError("one label per member required")
            if len(set(self.labels)) != len(self.labels):
                raise DuplicateLabel("family labels must be distinct")

    def __len__(self) -> int:
        return len(self.members)

    def pairs(self):
        return combinations(range(len(self.members)), 2)


def _family(vectors: Sequence[Vec3], make) -> Family:
    return Family(tuple(make(u) for u in vectors), tuple(vectors))


def family_E(f: FieldSpec) -> Family:
    """{E~(u) : u in D_q}."""
    return _family(list(domain_Dq(f)), restricted_extended_ball)


def family_H(f: FieldSpec) -> Family:
    """{E~(u) : u != 0}."""
    return _family([u for u in all_vectors(f) if not u.is_zero()], restricted_extended_ball)


def family_G(f: FieldSpec) -> Family:
    """{E(u) : u in F_q^3}."""
    return _family(all_vectors(f), extended_ball)


FAMILIES = {"E": family_E, "H": family_H, "G": family_G}


def _require_pairs(fam: Family) -> None:
    if len(fam) < 2:
        raise FamilyTooSmall("need at least two members")


def theta(fam: Family) -> int:
    """Largest t such that the family is t-intersecting."""
    _require_pairs(fam)
    bits = [m.bits for m in fam.members]
    best = None
    for i in range(len(bits)):
        a = bits[i]
        for j in range(i + 1, len(bits)):
            k = (a & bits[j]).bit_count()
            if best is None or k < best:
                best = k
                if k == 0:
                    return 0
    return best


def theta_witness(fam: Family) -> tuple[int, int, int]:
    """(theta, i, j) with |A_i ∩ A_j| = theta."""
    _require_pairs(fam)
    bits = [m.bits for m in fam.members]
    best = None
    for i, j in fam.pairs():
        k = (bits[i] & bits[j]).bit_count()
        if best is None or k < best[0]:
            best = (k, i, j)
            if k == 0:
                break
    return best


def intersection_structure(fam: Family) -> set[VecSet]:
    _require_pairs(fam)
    return {fam.members[i] & fam.members[j] for i, j in fam.pairs()}


def is_weak_delta_system(fam: Family) -> int | None:
    """Common pairwise intersection size, or None when sizes differ."""
    _require_pairs(fam)
    bits = [m.bits for m in fam.members]
    common = None
    for i, j in fam.pairs():
        k = (bits[i] & bits[j]).bit_count()
        if common is None:
            common = k
        elif k != common:
            return None
    return common

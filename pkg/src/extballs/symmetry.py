"""Monomial group actions on F_q^3: coordinate permutations and nonzero scalings.

A permutation ``p`` sends ``u`` to ``(u[p[0]], u[p[1]], u[p[2]])``; a group
element ``(p, s)`` sends ``u`` to ``(s[0]*u[p[0]], s[1]*u[p[1]], s[2]*u[p[2]])``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product

from .certificate import CoveringCertificate
from .errors import FieldMismatch, InvariantViolation
from .gf import FieldSpec
from .hamming import (
    Vec3,
    VecSet,
    _check_same,
    domain_Aq,
    extended_ball,
    restricted_extended_ball,
    space,
)

IDENTITY = (0, 1, 2)
CYCLE = (1, 2, 0)  # (u1, u2, u3) -> (u2, u3, u1)

SUBGROUPS = {
    "triv": (IDENTITY,),
    "cyc3": (IDENTITY, CYCLE, (2, 0, 1)),
    "t01": (IDENTITY, (1, 0, 2)),
    "t02": (IDENTITY, (2, 1, 0)),
    "t12": (IDENTITY, (0, 2, 1)),
    "full": tuple(permutations(range(3))),
}


@dataclass(frozen=True)
class GroupElement:
    field: FieldSpec
    perm: tuple[int, int, int]
    scalars: tuple[int, int, int] = (1, 1, 1)

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"{self.perm} is not a permutation of (0, 1, 2)")
        if any(s == 0 for s in self.scalars):
            raise ValueError("scalars must be nonzero")

    def __mul__(self, other: GroupElement) -> GroupElement:
        """Composition with ``act(g * h, u) == act(g, act(h, u))``."""
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        p, s = self.perm, self.scalars
        r, t = other.perm, other.scalars
        f = self.field
        return GroupElement(
            f,
            tuple(r[p[i]] for i in range(3)),
            tuple(f.mul(s[i], t[p[i]]) for i in range(3)),
        )

    def inverse(self) -> GroupElement:
        f = self.field
        inv = [0, 0, 0]
        for i, pi in enumerate(self.perm):
            inv[pi] = i
        # (p, s)^-1 = (p^-1, s') with s'[k] = 1 / s[p^-1[k]]
        return GroupElement(f, tuple(inv), tuple(f.inv(self.scalars[inv[k]]) for k in range(3)))


def identity(f: FieldSpec) -> GroupElement:
    return GroupElement(f, IDENTITY)


def act(g: GroupElement, u: Vec3) -> Vec3:
    _check_same_field(g, u)
    f = u.field
    c = u.coords
    p, s = g.perm, g.scalars
    return Vec3(f, (f.mul(s[0], c[p[0]]), f.mul(s[1], c[p[1]]), f.mul(s[2], c[p[2]])))


def _check_same_field(g: GroupElement, u: Vec3) -> None:
    if g.field != u.field:
        raise FieldMismatch(f"{g.field} vs {u.field}")


@dataclass(frozen=True)
class Group:
    """A subgroup N of S_3 combined with no, uniform (K) or independent scalings."""

    field: FieldSpec
    perms: tuple
    scalings: str = "uniform"  # "none" | "uniform" | "independent"
    name: str = ""

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        f = self.field
        nz = list(f.nonzero())
        if self.scalings == "none":
            scal = [(1, 1, 1)]
        elif self.scalings == "uniform":
            scal = [(x, x, x) for x in nz]
        elif self.scalings == "independent":
            scal = list(product(nz, repeat=3))
        else:
            raise ValueError(f"unknown scaling mode {self.scalings!r}")
        return tuple(GroupElement(f, p, s) for p in self.perms for s in scal)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _mul(self) -> list[list[int]]:
        f = self.field
        return [[f.mul(a, b) for b in range(f.q)] for a in range(f.q)]

    def orbit_indices(self, i: int) -> set[int]:
        s = space(self.field)
        mul = self._mul
        c = s.coords[i]
        q = s.q
        out = set()
        for g in self.elements:
            p, sc = g.perm, g.scalars
            out.add((mul[sc[0]][c[p[0]]] * q + mul[sc[1]][c[p[1]]]) * q + mul[sc[2]][c[p[2]]])
        return out


GROUP_KINDS = {
    "s3": ("full", "none"),
    "k": ("triv", "uniform"),
    "s3k": ("full", "uniform"),
    "wreath": ("full", "independent"),
    "cyc3k": ("cyc3", "uniform"),
}


def make_group(f: FieldSpec, kind: str) -> Group:
    """``kind`` is one of GROUP_KINDS, or ``"<N>k"`` / ``"<N>"`` for N in SUBGROUPS."""
    if kind in GROUP_KINDS:
        sub, mode = GROUP_KINDS[kind]
    elif kind.endswith("k") and kind[:-1] in SUBGROUPS:
        sub, mode = kind[:-1], "uniform"
    elif kind in SUBGROUPS:
        sub, mode = kind, "none"
    else:
        raise ValueError(f"unknown group {kind!r}")
    return Group(f, SUBGROUPS[sub], mode, kind)


def n_times_k(f: FieldSpec, N) -> Group:
    perms = SUBGROUPS[N] if isinstance(N, str) else tuple(N)
    return Group(f, perms, "uniform", f"{N}k" if isinstance(N, str) else "Nk")


@dataclass(frozen=True)
class Orbit:
    representative: Vec3
    members: VecSet

    def __len__(self) -> int:
        return len(self.members)


def orbit(group: Group, u: Vec3) -> Orbit:
    _check_field(group, u)
    s = space(u.field)
    idx = group.orbit_indices(u.index)
    bits = 0
    for i in idx:
        bits |= 1 << i
    return Orbit(s.vector(min(idx)), VecSet(s, bits))


def _check_field(group: Group, u: Vec3) -> None:
    if group.field != u.field:
        raise FieldMismatch(f"{group.field} vs {u.field}")


def canonical_form(group: Group, u: Vec3) -> Vec3:
    """Orbit member with the smallest coordinate codes in lexicographic order."""
    _check_field(group, u)
    return space(u.field).vector(min(group.orbit_indices(u.index)))


def orbits(group: Group, domain: VecSet | None = None) -> list[Orbit]:
    """Orbits meeting ``domain`` (default: all of F_q^3), sorted by representative."""
    s = space(group.field)
    todo = s.full if domain is None else domain.bits
    out = []
    while todo:
        low = todo & -todo
        i = low.bit_length() - 1
        idx = group.orbit_indices(i)
        bits = 0
        for k in idx:
            bits |= 1 << k
        out.append(Orbit(s.vector(min(idx)), VecSet(s, bits)))
        todo &= ~bits
    out.sort(key=lambda o: o.representative.index)
    return out


def is_invariant_set(N, vectors) -> bool:
    """True iff every permutation in N maps the set of vectors onto itself."""
    perms = SUBGROUPS[N] if isinstance(N, str) else tuple(N)
    L = set(vectors)
    for p in perms:
        if {Vec3(v.field, (v[p[0]], v[p[1]], v[p[2]])) for v in L} != L:
            return False
    return True


@dataclass(frozen=True)
class InvarianceReport:
    same_wreath_orbit: bool
    same_s3k_orbit: bool
    E_sizes: tuple[int, int]
    tilde_E_sizes: tuple[int, int]
    ok: bool


def orbit_invariance_check(u: Vec3, v: Vec3) -> InvarianceReport:
    """Check that orbit-mates have equal |E| (wreath) and equal |E~| (S3 x K)."""
    _check_same(u, v)
    f = u.field
    wreath = make_group(f, "wreath")
    s3k = make_group(f, "s3k")
    same_w = v.index in wreath.orbit_indices(u.index)
    same_k = v.index in s3k.orbit_indices(u.index)
    e = (len(extended_ball(u)), len(extended_ball(v)))
    te = (len(restricted_extended_ball(u)), len(restricted_extended_ball(v)))
    ok = (not same_w or e[0] == e[1]) and (not same_k or te[0] == te[1])
    return InvarianceReport(same_w, same_k, e, te, ok)


def express(u: Vec3, h: Vec3) -> tuple[int, int, int] | None:
    """Find (lam, mu, j) with lam != 0 and u == lam*h + mu*e_j.

    j is scanned from the last coordinate down, then lam upward; this picks
    the same decompositions as the hand-worked q = 5 table.
    """
    f = u.field
    for j in (2, 1, 0):
        for lam in f.nonzero():
            if all(u[i] == f.mul(lam, h[i]) for i in range(3) if i != j):
                return lam, f.sub(u[j], f.mul(lam, h[j])), j
    return None


def metodo_certificate(f: FieldSpec, N, L) -> CoveringCertificate:
    """Certify that L ∪ {(1,1,1)} is a short covering via N x K orbits on A_q.

    Every orbit must contain a vector lam*h + mu*e_j with h in L; each witness
    is recorded. The resulting cover is also checked by direct enumeration.
    """
    from .covering import is_short_covering

    L = list(L)
    for h in L:
        if h.field != f:
            raise FieldMismatch(f"{h.field} vs {f}")
    if not is_invariant_set(N, L):
        raise InvariantViolation("L is not invariant under N")
    group = n_times_k(f, N)
    one = Vec3(f, (1, 1, 1))
    vectors = list(dict.fromkeys(L + [one]))
    evidence = []
    for orb in orbits(group, domain_Aq(f)):
        found = None
        candidates = [orb.representative] + [w for w in orb.members if w != orb.representative]
        for w in candidates:
            for h in L:
                sol = express(w, h)
                if sol is not None:
                    found = (w, h, sol)
                    break
            if found:
                break
        if found is None:
            evidence.append({
                "representative": str(orb.representative),
                "orbit_size": len(orb),
                "covered": False,
            })
            return CoveringCertificate("MetodoWitness", f, len(vectors), vectors, evidence, False)
        w, h, (lam, mu, j) = found
        evidence.append({
            "representative": str(orb.representative),
            "orbit_size": len(orb),
            "covered": True,
            "vector": str(w),
            "h": str(h),
            "lam": f.format(lam),
            "mu": f.format(mu),
            "j": j + 1,
        })
    ok = is_short_covering(vectors).is_cover
    return CoveringCertificate("MetodoWitness", f, len(vectors), vectors, evidence, ok)

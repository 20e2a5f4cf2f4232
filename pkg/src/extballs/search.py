"""Exhaustive computation of c(q), the minimum size of a short covering of F_q^3.

Reductions used without any appeal to the structure theorems:

* E(lam*u) = E(u) for lam != 0, so candidates are the projective points
  (first nonzero coordinate 1);
* E(0) is contained in every E(u), so 0 is never needed;
* monomial maps (permutation + independent nonzero scalings) send covers to
  covers, so some cover contains the canonical representative of the
  lowest-ranked orbit it meets, and every other member has rank >= it.

The search itself branches on the smallest uncovered point and bounds the
remaining picks by the best marginal gain still available.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from math import ceil

from .certificate import CoveringCertificate
from .errors import LimitExceeded
from .gf import FieldSpec, field_of_order
from .hamming import Vec3, space, tilde_E_cardinality_formula
from .symmetry import make_group, orbits

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 5
HARD_LIMIT = 9


def projective_points(f: FieldSpec) -> list[Vec3]:
    s = space(f)
    out = []
    for i, c in enumerate(s.coords):
        nz = next((x for x in c if x), 0)
        if nz == 1:
            out.append(s.vector(i))
    return out


class _Searcher:
    def __init__(self, f: FieldSpec):
        self.f = f
        self.s = space(f)
        cands = projective_points(f)
        # larger E~ first: D_q is the hardest part to cover
        cands.sort(key=lambda u: (-tilde_E_cardinality_formula(u), u.index))
        self.cands = cands
        self.masks = [self.s.ext_mask(u.index) for u in cands]
        self.full = self.s.full
        self.D = self.s.D_mask
        group = make_group(f, "wreath")
        self.rank = {}
        self.reps = []
        for r, orb in enumerate(orbits(group)):
            if orb.representative.is_zero():
                continue
            self.reps.append(orb.representative)
            for i in orb.members.indices():
                self.rank[i] = r
        self.nodes = 0

    def covering_idx(self, point: int, allowed: list[int]) -> list[int]:
        bit = 1 << point
        return [k for k in allowed if self.masks[k] & bit]

    def dfs(self, covered: int, picks: int, allowed: list[int], chosen: list[int]):
        self.nodes += 1
        if covered == self.full:
            return list(chosen)
        if picks == 0:
            return None
        unc = self.full & ~covered
        n_unc = unc.bit_count()
        gains = [(self.masks[k] & unc).bit_count() for k in allowed]
        if not gains or picks * max(gains) < n_unc:
            return None
        unc_D = unc & self.D
        if unc_D:
            best_D = max((self.masks[k] & unc_D).bit_count() for k in allowed)
            if picks * best_D < unc_D.bit_count():
                return None
        low = unc & -unc
        point = low.bit_length() - 1
        for k in self.covering_idx(point, allowed):
            chosen.append(k)
            found = self.dfs(covered | self.masks[k], picks - 1, allowed, chosen)
            chosen.pop()
            if found is not None:
                return found
        return None

    def search_from(self, rep: Vec3, m: int, any_rank: bool = False):
        rep_rank = self.rank[rep.index]
        allowed = [
            k for k, u in enumerate(self.cands)
            if u.index != rep.index and (any_rank or self.rank[u.index] >= rep_rank)
        ]
        found = self.dfs(self.s.ext_mask(rep.index), m - 1, allowed, [])
        if found is None:
            return None
        return [rep] + [self.cands[k] for k in found]


def _worker(args):
    p_n_poly, rep_coords, m, any_rank = args
    p, n, poly = p_n_poly
    from .gf import make_field

    f = make_field(p, n, poly)
    srch = _Searcher(f)
    found = srch.search_from(Vec3(f, rep_coords), m, any_rank)
    return (None if found is None else [u.coords for u in found]), srch.nodes


def exhaustive_c(q: int | FieldSpec, max_m: int | None = None, *, prune: bool = False,
                 limit: int = DEFAULT_LIMIT, workers: int = 1) -> CoveringCertificate:
    """Smallest m admitting a short covering of F_q^3, with the exhaustion record for m - 1.

    ``prune`` (only meaningful for q >= 7) seeds the search at
    m = ceil((q+1)/2) with (1,1,1) alone, relying on the theorem that a cover of
    that size contains a weight-3 vector.
    """
    f = q if isinstance(q, FieldSpec) else field_of_order(q)
    q = f.q
    if q > min(limit, HARD_LIMIT):
        raise LimitExceeded(f"exhaustive search is limited to q <= {min(limit, HARD_LIMIT)}")
    srch = _Searcher(f)
    evidence = []
    m = 1
    cap = max_m if max_m is not None else q**3
    while m <= cap:
        t0 = time.perf_counter()
        if prune and q >= 7 and m == ceil((q + 1) / 2):
            seeds, any_rank, mode = [Vec3(f, (1, 1, 1))], True, "weight-3 seed"
        else:
            seeds, any_rank, mode = srch.reps, False, "orbit seeds"
        found, nodes = _run(f, srch, seeds, m, any_rank, workers)
        step = {
            "m": m,
            "seeds": len(seeds),
            "mode": mode,
            "nodes": nodes,
            "result": "found" if found else "exhausted",
        }
        evidence.append(step)
        log.info("q=%d m=%d %s after %d nodes (%.2fs)", q, m, step["result"], nodes,
                 time.perf_counter() - t0)
        if found:
            return CoveringCertificate("ExhaustiveLowerBound", f, m, found, evidence, True)
        m += 1
    return CoveringCertificate("ExhaustiveLowerBound", f, cap + 1, [], evidence, True)


def _run(f, srch, seeds, m, any_rank, workers):
    if workers <= 1:
        srch.nodes = 0
        for rep in seeds:
            found = srch.search_from(rep, m, any_rank)
            if found:
                return found, srch.nodes
        return None, srch.nodes
    jobs = [((f.p, f.n, f.prim_poly), rep.coords, m, any_rank) for rep in seeds]
    total = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for found, nodes in pool.map(_worker, jobs):
            total += nodes
            if found is not None:
                return [Vec3(f, c) for c in found], total
    return None, total

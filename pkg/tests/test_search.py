from itertools import combinations

import pytest

from extballs.covering import is_short_covering
from extballs.errors import LimitExceeded
from extballs.gf import field_of_order
from extballs.hamming import all_vectors, space
from extballs.search import exhaustive_c, projective_points


@pytest.mark.parametrize("q,c", [(2, 1), (3, 3), (4, 3), (5, 4)])
def test_known_values(q, c):
    cert = exhaustive_c(q)
    assert cert.m == c
    assert len(cert.vectors) == c
    assert is_short_covering(cert.vectors).is_cover
    assert [s["result"] for s in cert.evidence] == ["exhausted"] * (c - 1) + ["found"]


@pytest.mark.parametrize("q", [2, 3, 4])
def test_against_plain_subset_enumeration(q):
    # no symmetry at all: try every subset of all q^3 vectors
    f = field_of_order(q)
    s = space(f)
    masks = [s.ext_mask(u.index) for u in all_vectors(f)]
    m = 1
    while not any(
        _union(masks, idx) == s.full for idx in combinations(range(len(masks)), m)
    ):
        m += 1
    assert exhaustive_c(q).m == m


def _union(masks, idx):
    out = 0
    for i in idx:
        out |= masks[i]
    return out


def test_projective_points():
    assert len(projective_points(field_of_order(5))) == 31


def test_q7_with_and_without_seed_pruning():
    a = exhaustive_c(7, limit=7, prune=True)
    b = exhaustive_c(7, limit=7, prune=False)
    assert a.m == b.m == 5
    assert a.evidence[3]["mode"] == "weight-3 seed"


def test_max_m_and_limit():
    cert = exhaustive_c(5, max_m=2)
    assert cert.m == 3 and cert.vectors == []
    with pytest.raises(LimitExceeded):
        exhaustive_c(7)


def test_parallel_matches_serial():
    assert exhaustive_c(5, workers=2).m == 4

import pytest
from hypothesis import given, strategies as st

from extballs.covering import is_short_covering, q5_construction
from extballs.errors import FieldMismatch, InvariantViolation
from extballs.gf import field_of_order
from extballs.hamming import (
    Vec3,
    all_vectors,
    domain_Aq,
    extended_ball,
    restricted_extended_ball,
    space,
    vec,
)
from extballs.symmetry import (
    CYCLE,
    GroupElement,
    act,
    canonical_form,
    identity,
    is_invariant_set,
    make_group,
    metodo_certificate,
    orbit,
    orbit_invariance_check,
    orbits,
)

F5 = field_of_order(5)


def test_action_examples():
    u = vec(F5, 0, 2, 3)
    assert act(identity(F5), u) == u
    assert act(GroupElement(F5, CYCLE), vec(F5, 1, 2, 3)) == vec(F5, 2, 3, 1)
    assert act(GroupElement(F5, (0, 1, 2), (3, 3, 3)), u) == vec(F5, 0, 1, 4)


perm = st.permutations([0, 1, 2]).map(tuple)
scal = st.tuples(*[st.integers(1, 4)] * 3)
coords = st.tuples(*[st.integers(0, 4)] * 3)


@given(perm, scal, perm, scal, coords)
def test_action_is_compatible_with_composition(p1, s1, p2, s2, c):
    g, h = GroupElement(F5, p1, s1), GroupElement(F5, p2, s2)
    u = Vec3(F5, c)
    assert act(g * h, u) == act(g, act(h, u))
    assert act(g.inverse(), act(g, u)) == u


@pytest.mark.parametrize("q", [3, 4, 5, 7])
@pytest.mark.parametrize("kind", ["s3k", "wreath", "cyc3k", "s3", "k"])
def test_orbits_partition(q, kind):
    f = field_of_order(q)
    g = make_group(f, kind)
    obs = orbits(g)
    s = space(f)
    union = 0
    for o in obs:
        assert union & o.members.bits == 0
        union |= o.members.bits
        assert len(g) % len(o) == 0
        assert canonical_form(g, o.representative) == o.representative
    assert union == s.full


def test_orbit_examples():
    s3k = make_group(F5, "s3k")
    assert orbit(s3k, vec(F5, 0, 0, 0)).members == space(F5).from_vectors([vec(F5, 0, 0, 0)])
    obs = orbits(make_group(F5, "cyc3k"), domain_Aq(F5))
    assert len(obs) == 5
    assert all(len(o) == 12 for o in obs)
    assert [o.representative.coords for o in obs] == [
        (0, 1, 2), (0, 1, 3), (0, 1, 4), (1, 2, 3), (1, 3, 2)
    ]


def test_canonical_form():
    s3k = make_group(F5, "s3k")
    c = canonical_form(s3k, vec(F5, 0, 3, 1))
    assert c == vec(F5, 0, 1, 2)
    assert next(x for x in c if x) == 1
    assert c.index in s3k.orbit_indices(vec(F5, 0, 3, 1).index)
    assert canonical_form(s3k, c) == c
    assert canonical_form(s3k, vec(F5, 0, 0, 0)) == vec(F5, 0, 0, 0)


@pytest.mark.parametrize("q", [4, 5, 7])
def test_invariance_of_cardinalities(q):
    f = field_of_order(q)
    for kind, size in (("wreath", lambda u: len(extended_ball(u))),
                       ("s3k", lambda u: len(restricted_extended_ball(u)))):
        for o in orbits(make_group(f, kind)):
            assert len({size(u) for u in o.members}) == 1


def test_orbit_invariance_check():
    r = orbit_invariance_check(vec(F5, 1, 2, 3), vec(F5, 3, 1, 2).scale(2))
    assert r.same_s3k_orbit and r.ok
    r = orbit_invariance_check(vec(F5, 1, 2, 3), vec(F5, 1, 1, 4))
    assert r.same_wreath_orbit and not r.same_s3k_orbit and r.ok
    assert r.E_sizes[0] == r.E_sizes[1]
    with pytest.raises(FieldMismatch):
        orbit_invariance_check(vec(F5, 1, 2, 3), vec(field_of_order(7), 1, 2, 3))


def test_invariant_sets():
    L = q5_construction(F5)
    assert is_invariant_set("cyc3", L)
    assert is_invariant_set("triv", [vec(F5, 0, 2, 3)])
    assert not is_invariant_set("cyc3", [vec(F5, 0, 2, 3)])


def test_metodo_q5():
    cert = metodo_certificate(F5, "cyc3", q5_construction(F5))
    assert cert.verified and cert.check()
    assert len(cert.evidence) == 5
    assert is_short_covering(cert.vectors).is_cover


def test_metodo_q2_empty_L():
    f2 = field_of_order(2)
    cert = metodo_certificate(f2, "triv", [])
    assert cert.verified and cert.evidence == []


def test_metodo_failure():
    cert = metodo_certificate(F5, "triv", [vec(F5, 0, 2, 3)])
    assert not cert.verified
    assert cert.evidence[-1]["covered"] is False
    with pytest.raises(InvariantViolation):
        metodo_certificate(F5, "cyc3", [vec(F5, 0, 2, 3)])


def test_metodo_success_implies_cover():
    # every cyc3-invariant L built from one orbit of a weight-2 vector
    f = F5
    for u in all_vectors(f):
        if u.weight != 2:
            continue
        L = list({Vec3(f, (u[p[0]], u[p[1]], u[p[2]])) for p in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]})
        cert = metodo_certificate(f, "cyc3", L)
        if cert.verified:
            assert is_short_covering(cert.vectors).is_cover

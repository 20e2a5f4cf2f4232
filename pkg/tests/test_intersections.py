import random

import pytest

from extballs.errors import DomainEmpty, DomainViolation, DuplicateLabel, FamilyTooSmall
from extballs.gf import field_of_order
from extballs.hamming import all_vectors, domain_Dq, restricted_extended_ball, space, vec
from extballs.intersections import (
    Family,
    ball_intersection,
    family_E,
    intersection_structure,
    is_weak_delta_system,
    rho,
    rho_full,
    rho_min,
    rho_zero_characterization,
    theta,
    theta_witness,
)


def test_rho_examples():
    f5 = field_of_order(5)
    assert rho(vec(f5, 1, 4, 2), vec(f5, 1, 3, 4)).value == 3
    assert rho(vec(f5, 1, 2, 4), vec(f5, 1, 4, 2)).value == 2
    assert rho(vec(f5, 1, 0, 2), vec(f5, 1, 2, 3)).value == 1
    f7 = field_of_order(7)
    assert rho(vec(f7, 1, 2, 4), vec(f7, 1, 4, 2)).value == 0


def test_rho_11_witnesses():
    f = field_of_order(11)
    r = rho(vec(f, 2, 0, 5), vec(f, 6, 7, 9))
    assert r.value == 2
    assert {mu: [w.coords for w in s] for mu, s in r.witnesses.items()} == {
        3: [(2, 10, 5)],
        4: [(2, 6, 5)],
    }


@pytest.mark.parametrize("q", [4, 5, 7])
def test_rho_paths_agree_with_definition(q):
    f = field_of_order(q)
    vs = [u for u in all_vectors(f) if not u.is_zero()]
    rng = random.Random(q)
    for _ in range(400):
        u, v = rng.choice(vs), rng.choice(vs)
        assert rho(u, v).value == rho_full(u, v).value


def test_ball_intersection_small_cases():
    f = field_of_order(5)
    u = vec(f, 1, 2, 3)
    assert len(ball_intersection(u, u)) == 13
    assert not ball_intersection(u, vec(f, 2, 3, 4))
    assert len(ball_intersection(u, vec(f, 1, 2, 4))) == 5
    assert len(ball_intersection(u, vec(f, 1, 3, 4))) == 2
    f11 = field_of_order(11)
    w = ball_intersection(vec(f11, 2, 0, 5), vec(f11, 6, 7, 9).scale(3))
    assert [x.coords for x in w if x in domain_Dq(f11)] == [(2, 10, 5)]


def test_rho_zero_characterization_examples():
    f7 = field_of_order(7)
    assert rho_zero_characterization(vec(f7, 1, 2, 4), vec(f7, 1, 4, 2))
    f5 = field_of_order(5)
    assert not rho_zero_characterization(vec(f5, 1, 4, 2), vec(f5, 1, 3, 4))
    with pytest.raises(DomainViolation):
        rho_zero_characterization(vec(f5, 0, 1, 2), vec(f5, 1, 2, 3))


@pytest.mark.parametrize("q", [4, 5, 7, 8])
def test_rho_zero_characterization_exhaustive(q):
    f = field_of_order(q)
    D = list(domain_Dq(f))
    for u in D:
        for v in D:
            assert rho_zero_characterization(u, v) == (rho(u, v).value == 0)


def test_rho_min():
    assert rho_min(field_of_order(4)) == 0
    assert rho_min(field_of_order(7)) == 0
    assert rho_min(field_of_order(5)) == 2
    for q in (4, 5, 7, 8):
        assert rho_min(field_of_order(q), exhaustive=True) == rho_min(field_of_order(q))
    with pytest.raises(DomainEmpty):
        rho_min(field_of_order(3))


def test_theta_small_families():
    s = space(field_of_order(3))
    a, b = s.set(0b011), s.set(0b100)
    assert theta(Family([a, b])) == 0
    assert intersection_structure(Family([a, b])) == {s.empty()}
    assert is_weak_delta_system(Family([a, b])) == 0
    c = s.set(0b110)
    assert is_weak_delta_system(Family([a, c])) == 1
    with pytest.raises(DuplicateLabel):
        Family([a, a], labels=["A", "A"])
    with pytest.raises(FamilyTooSmall):
        theta(Family([a]))


def test_theta_of_E():
    assert theta(family_E(field_of_order(5))) == 8
    assert theta(family_E(field_of_order(7))) == 0
    t, i, j = theta_witness(family_E(field_of_order(5)))
    fam = family_E(field_of_order(5))
    assert len(fam.members[i] & fam.members[j]) == t == 8


def test_E_structure_small_fields():
    f4 = field_of_order(4)
    assert space(f4).empty() in intersection_structure(family_E(f4))
    assert is_weak_delta_system(family_E(field_of_order(5))) is None


def test_intersection_size_relation_sample():
    f = field_of_order(11)
    D = list(domain_Dq(f))
    rng = random.Random(0)
    for _ in range(200):
        u, v = rng.choice(D), rng.choice(D)
        size = len(restricted_extended_ball(u) & restricted_extended_ball(v))
        assert size == rho(u, v).value * 10

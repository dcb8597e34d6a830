import random

import pytest

from periodic_homfly.diagram import BraidWord, add_axis_cable, braid_closure, linking_data, parse_braid
from periodic_homfly.homfly import homfly
from periodic_homfly.periodic import (
    FactorPresentation,
    PeriodicityError,
    component_orbits,
    make_extended,
    make_torus_extended,
    random_factor,
    skein_triple,
    torus_factor,
    validate_factor,
)


def test_validate_factor():
    assert validate_factor(parse_braid("3: 1 2"), 3).ok
    rep = validate_factor(parse_braid("2: 1"), 3)
    assert not rep.ok and rep.cycle_lengths == (2,)
    rep = validate_factor(BraidWord(3, ()), 3)
    assert not rep.ok and rep.cycle_lengths == (1, 1, 1)


@pytest.mark.parametrize("p", [2, 4, 9, 1])
def test_period_must_be_odd_prime(p):
    with pytest.raises(ValueError):
        FactorPresentation(parse_braid("3: 1 2"), p)


def test_make_extended():
    d = make_extended(FactorPresentation(parse_braid("3: 1 2"), 3, 1))
    assert d.n_components == 4 and d.axis_components == frozenset({3})
    assert homfly(d) == homfly(add_axis_cable(BraidWord(3, (1, 2) * 3), 1))
    d2 = make_extended(FactorPresentation(parse_braid("3: 1 2"), 3, 2))
    assert d2.n_components == 5
    with pytest.raises(PeriodicityError) as exc:
        make_extended(FactorPresentation(parse_braid("2: 1"), 3))
    assert exc.value.report.cycle_lengths == (2,)


def test_torus_extended():
    d = make_torus_extended(3, 1, 1)
    assert d.n_components == 4 and d.n_crossings == 12
    d = make_torus_extended(3, 2, 1)
    # (sigma_1 sigma_2)^6 has 12 crossings, the axis adds 2 per strand
    assert d.n_components == 4 and d.n_crossings == 12 + 6
    d = make_torus_extended(5, 1, 1)
    assert d.n_components == 6 and d.n_crossings == 20 + 10
    assert torus_factor(3, 2) == parse_braid("3: 1 2 1 2")


def test_presentation_text():
    f = FactorPresentation.parse("p=3 r=2 braid=3: 1 -2")
    assert f == FactorPresentation(BraidWord(3, (1, -2)), 3, 2)
    assert str(f) == "p=3 r=2 braid=3: 1 -2"
    assert FactorPresentation.parse("p=5 braid=5: 1 2 3 4").r == 1


def test_orbits_and_component_count():
    rng = random.Random(0)
    for _ in range(20):
        f = random_factor(rng, 3)
        d = make_extended(f)
        alpha = len(validate_factor(f).cycle_lengths)
        assert d.n_components == 3 * alpha + f.r
        orbits = component_orbits(f)
        assert len(orbits) == alpha
        assert sorted(i for o in orbits for i in o) == list(range(3 * alpha))
        # the rotation preserves linking with the axis and between orbit members
        ld = linking_data(d)
        axis = d.n_components - 1
        for o in orbits:
            assert len({ld.lk(i, axis) for i in o}) == 1
            assert len({ld.lk(o[k], o[(k + 1) % 3]) for k in range(3)}) == 1
        assert homfly(d).min_z() == 1 - d.n_components


def test_random_factor_respects_limits():
    rng = random.Random(1)
    for _ in range(50):
        f = random_factor(rng, 3, (3, 6), 6, 1, 24)
        assert f.factor.strands in (3, 6) and len(f.factor.letters) <= 6
        assert make_extended(f).n_crossings <= 24


def test_random_factor_infeasible():
    # five-periodic factors on 3 or 6 strands do not exist
    with pytest.raises(ValueError):
        random_factor(random.Random(0), 5, (3, 6))


def test_skein_triple_examples():
    t = skein_triple(parse_braid("3: 1 2"), 1, 3)
    assert t.plus == make_torus_extended(3, 1, 1)
    assert t.minus == add_axis_cable(BraidWord(3, (-1, 2) * 3), 1)
    assert t.zero == add_axis_cable(BraidWord(3, (2,) * 3), 1)
    assert t.strongly_periodic
    t = skein_triple(parse_braid("3: 1 1 2"), 2, 3)
    assert t.factors[2] == parse_braid("3: 1 2")
    assert not t.strongly_periodic
    with pytest.raises(IndexError):
        skein_triple(parse_braid("3: 1 2"), 3, 3)
    with pytest.raises(PeriodicityError):
        skein_triple(parse_braid("3: 1 1 2"), 2, 3, strict=True)


def test_triple_differs_in_one_orbit():
    t = skein_triple(parse_braid("3: 1 -2 2 1"), 2, 3)
    diff = [c for c, (a, b) in enumerate(zip(t.plus.signs, t.minus.signs)) if a != b]
    assert len(diff) == 3
    assert t.zero.n_crossings == t.plus.n_crossings - 3
    assert braid_closure(t.factors[0]).n_crossings == 4

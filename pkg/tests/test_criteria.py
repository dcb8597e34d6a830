import json
import random

import pytest

from periodic_homfly.corpus import bundled_corpus, ingest
from periodic_homfly.criteria import check_diagram, check_congruences, lowest_coefficient_formula, skein_residual
from periodic_homfly.diagram import (
    BraidWord,
    braid_closure,
    disjoint_union,
    mirror,
    parse_braid,
    reverse_component,
    unlink,
)
from periodic_homfly.homfly import homfly
from periodic_homfly.periodic import make_extended, make_torus_extended, random_factor, skein_triple
from periodic_homfly.polyring import VPoly, VZPoly, parse_poly, z_coefficient

U = VPoly({-1: 1, 1: -1})  # v^-1 - v


def test_unlink_passes():
    rep = check_congruences(homfly(unlink(4)), 4, 3)
    assert rep.passed and rep.applicable
    assert rep.condition1.coefficient == U ** 3
    assert rep.condition1.reduced == VPoly({-3: 1, 3: -1})
    assert rep.condition2[0].coefficient.is_zero()


def test_torus_link_with_axis_passes():
    rep = check_diagram(make_torus_extended(3, 1, 1), 3)
    assert rep.passed
    assert rep.condition1.reduced == VPoly({9: 1, 15: -1})
    assert rep.condition2[0].reduced.is_zero()
    assert not rep.condition1.witness and not rep.condition2[0].reduced


def test_hopf_plus_unlink_fails_condition1():
    d = disjoint_union(braid_closure(parse_braid("2: 1 1")), unlink(2))
    rep = check_diagram(d, 3)
    assert not rep.passed
    assert rep.condition1.failure == "subring"
    assert rep.condition1.coefficient == (U ** 3).shift(2)
    assert sorted(rep.condition1.witness.terms) == [-1, 5]


def test_census_record_l10n107():
    rec = next(r for r in ingest(bundled_corpus()) if r.name == "L10n107{0,0,0}")
    rep = check_congruences(parse_poly(rec.homfly), 4, 3, 1, rec.name)
    assert rep.condition2_passed
    assert rep.condition2[0].coefficient.is_zero()


def test_divisibility_failure_is_reported():
    # the trefoil's lowest coefficient 2*v^2 - v^4 has no factor v - v^-1
    P = homfly(braid_closure(parse_braid("2: 1 1 1")))
    rep = check_congruences(P, 1, 3, 2)
    assert not rep.passed and rep.condition1.failure == "divisibility"
    assert rep.condition1.witness
    assert not rep.applicable


def test_bad_arguments():
    P = homfly(unlink(1))
    for p in (2, 4, 1, 9):
        with pytest.raises(ValueError):
            check_congruences(P, 1, p)
    with pytest.raises(ValueError):
        check_congruences(P, 1, 3, 0)
    with pytest.raises(ValueError):
        check_congruences(homfly(unlink(3)), 1, 3)


def test_p5_has_two_condition2_indices():
    rep = check_congruences(homfly(unlink(6)), 6, 5)
    assert [e.i for e in rep.condition2] == [1, 2]
    assert [e.exponent for e in rep.condition2] == [-3, -1]


def test_report_json():
    rep = check_diagram(make_torus_extended(3, 1, 1), 3, link_id="T(3,3)+axis")
    data = json.loads(rep.to_json())
    assert data["link_id"] == "T(3,3)+axis"
    assert {"n", "p", "r", "applicable", "condition1", "condition2", "passed"} <= set(data)
    assert data["condition1"]["coefficient"] == "v^9 - 3*v^11 + 3*v^13 - v^15"
    assert data["condition1"]["reduced"] == "v^9 - v^15"
    assert data["condition2"][0]["reduced"] == "0"
    assert "verdict: no obstruction" in rep.summary()


def test_witnesses_nonempty_exactly_on_failure():
    rng = random.Random(9)
    for _ in range(30):
        d = braid_closure(BraidWord(4, tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(7))))
        rep = check_diagram(d, 3)
        assert bool(rep.condition1.witness) == (not rep.condition1.passed)
        for e in rep.condition2:
            assert bool(e.reduced) == (not e.passed)
        assert rep.passed == (rep.condition1.passed and all(e.passed for e in rep.condition2))


def test_lowest_formula_examples():
    assert lowest_coefficient_formula(braid_closure(parse_braid("2: 1 1"))) == VPoly({1: 1, 3: -1})
    for n in range(1, 5):
        assert lowest_coefficient_formula(unlink(n)) == U ** (n - 1)
    assert lowest_coefficient_formula(make_torus_extended(3, 1, 1)) == (U ** 3).shift(12)


def test_lowest_formula_on_small_corpus():
    for rec in ingest(bundled_corpus("small_le8")):
        d = rec.diagram()
        assert lowest_coefficient_formula(d) == z_coefficient(homfly(d), 1 - d.n_components), rec.name


def test_skein_residual_examples():
    assert skein_residual(skein_triple(parse_braid("3: 1 2"), 1, 3)) == VZPoly()
    assert skein_residual(skein_triple(parse_braid("3: 1 1 2"), 1, 3)) == VZPoly()


def test_skein_residual_negative_control():
    t = skein_triple(parse_braid("3: 1 2"), 1, 3)
    fake = type(t)(t.plus, t.plus, t.zero, t.factors, t.p, t.r)
    res = skein_residual(fake)
    assert res != VZPoly()


def test_generated_links_pass():
    rng = random.Random(21)
    for _ in range(10):
        f = random_factor(rng, 3)
        assert check_diagram(make_extended(f), 3).passed, str(f)


def test_mirror_and_reversed_axis_still_pass():
    # mirror image of an extended periodic link is extended periodic, as is any reorientation
    rng = random.Random(8)
    for _ in range(8):
        d = make_extended(random_factor(rng, 3))
        assert check_diagram(mirror(d), 3).passed
        assert check_diagram(reverse_component(d, d.n_components - 1), 3).passed

import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from periodic_homfly.diagram import (
    BraidWord,
    DiagramError,
    add_axis_cable,
    braid_closure,
    braid_permutation,
    braid_power,
    disjoint_union,
    format_braid,
    format_pd,
    linking_data,
    mirror,
    parse_braid,
    parse_pd,
    permutation_cycles,
    reverse_component,
    smooth_crossing,
    sublink,
    switch_crossing,
    unlink,
)

TREFOIL_PD = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"
HOPF_PD = "PD[X[4,1,3,2],X[2,3,1,4]]"


@st.composite
def braids(draw, max_strands=5, max_length=10):
    s = draw(st.integers(2, max_strands))
    letters = draw(st.lists(st.integers(1, s - 1).flatmap(lambda i: st.sampled_from([i, -i])),
                            max_size=max_length))
    return BraidWord(s, tuple(letters))


def test_parse_braid():
    b = parse_braid("3: 1 -2 1")
    assert b == BraidWord(3, (1, -2, 1))
    assert format_braid(b) == "3: 1 -2 1"
    assert parse_braid("2:") == BraidWord(2, ())


@pytest.mark.parametrize("bad", ["3 1 2", "2: 2", "3: 0", "x: 1"])
def test_parse_braid_errors(bad):
    with pytest.raises(DiagramError):
        parse_braid(bad)


def test_permutation_and_cycles():
    assert sorted(map(sorted, permutation_cycles(braid_permutation(parse_braid("3: 1 2"))))) == [[0, 1, 2]]
    assert len(permutation_cycles(braid_permutation(parse_braid("3:")))) == 3
    b = braid_power(parse_braid("3: 1 2"), 3)
    assert len(permutation_cycles(braid_permutation(b))) == 3


def test_trefoil_pd():
    d = parse_pd(TREFOIL_PD)
    assert d.n_components == 1 and d.n_crossings == 3
    # this PD code is the left-handed trefoil
    assert d.signs == (-1, -1, -1)


def test_hopf_pd():
    d = parse_pd(HOPF_PD)
    assert d.n_components == 2
    assert abs(linking_data(d).total) == 1


def test_pd_orientation_follows_under_strands():
    # any relabelling of the edges describes the same diagram, even when
    # labels no longer increase along the components
    rng = random.Random(7)
    for word in ["3: 1 -2 1 -2", "4: 1 2 3 1 2 -3", "3: 1 1 2 2 1"]:
        d = braid_closure(parse_braid(word))
        edges = sorted({e for x in d.crossings for e in x})
        shuffled = edges[:]
        rng.shuffle(shuffled)
        relabel = dict(zip(edges, shuffled))
        text = "PD[" + ",".join("X[" + ",".join(str(relabel[e]) for e in x) + "]" for x in d.crossings) + "]"
        e = parse_pd(text)
        assert e.n_components == d.n_components
        assert e.writhe() == d.writhe()
        assert sorted(linking_data(e).matrix) == sorted(linking_data(d).matrix)


@pytest.mark.parametrize("bad", ["PD[X[1,2,3]]", "PD[X[1,1,1,1],X[2,2,2,2]]", "hello", "PD[X[1,4,2,5]]"])
def test_pd_errors(bad):
    with pytest.raises(DiagramError):
        parse_pd(bad)


@settings(max_examples=200, deadline=None)
@given(braids())
def test_pd_round_trip(b):
    d = braid_closure(b)
    assert d.n_components == len(permutation_cycles(braid_permutation(b)))
    # PD text has no room for crossingless components
    assume(d.free_loops == 0 and d.n_crossings > 0)
    # a two-edge component that only passes over reads the same both ways round
    assume(not any(len(c) == 2 and all(o for _, o in c) for c in d.gauss))
    assert parse_pd(format_pd(d)) == d.with_axis(())


def test_closure_component_count():
    assert braid_closure(parse_braid("3: 1 2")).n_components == 1
    assert braid_closure(parse_braid("2: 1 1")).n_components == 2
    assert braid_closure(parse_braid("3:")).n_components == 3


def test_torus_link_with_axis():
    d = add_axis_cable(braid_power(parse_braid("3: 1 2"), 3), 1)
    assert d.n_components == 4 and d.n_crossings == 12
    assert d.axis_components == frozenset({3})
    ld = linking_data(d)
    assert ld.total == 6
    assert [ld.lk(i, 3) for i in range(3)] == [1, 1, 1]
    assert [ld.lk(0, 1), ld.lk(0, 2), ld.lk(1, 2)] == [1, 1, 1]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_axis_conventions_same_linking(r):
    b = braid_power(parse_braid("3: 1 -2"), 3)
    a = linking_data(add_axis_cable(b, r, "over_first"))
    c = linking_data(add_axis_cable(b, r, "under_first"))
    assert a.matrix == c.matrix
    n = 3 + r
    # axis copies do not link each other; each links every strand once
    for i in range(3, n):
        for j in range(3, n):
            if i != j:
                assert a.lk(i, j) == 0


def test_axis_cable_bad_convention():
    with pytest.raises(ValueError):
        add_axis_cable(parse_braid("2: 1"), 1, "sideways")


def test_sublink_and_reverse():
    d = add_axis_cable(braid_power(parse_braid("3: 1 2"), 3), 1)
    s = sublink(d, [0, 3])
    assert s.n_components == 2 and linking_data(s).total == 1
    assert s.axis_components == frozenset({1})
    rev = reverse_component(d, 3)
    assert linking_data(rev).total == 3 - 3
    assert reverse_component(reverse_component(d, 1), 1) == d


def test_mirror_negates_linking():
    d = braid_closure(parse_braid("2: 1 1 1 1"))
    assert linking_data(mirror(d)).total == -linking_data(d).total


def test_switch_and_smooth():
    d = braid_closure(parse_braid("2: 1 1"))
    s = switch_crossing(d, 0)
    assert s.signs == (-1, 1) and linking_data(s).total == 0
    m = smooth_crossing(d, 0)
    assert m.n_components == 1 and m.n_crossings == 1
    k = braid_closure(parse_braid("2: 1 1 1"))
    assert smooth_crossing(k, 0).n_components == 2


def test_disjoint_union_and_unlink():
    d = disjoint_union(braid_closure(parse_braid("2: 1 1")), unlink(2))
    assert d.n_components == 4 and d.free_loops == 2


def test_random_reversals_preserve_validity():
    rng = random.Random(3)
    for _ in range(30):
        b = BraidWord(4, tuple(rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(8)))
        d = braid_closure(b)
        k = rng.randrange(d.n_components)
        e = reverse_component(d, k)
        assert e.n_components == d.n_components
        assert abs(linking_data(e).total) <= d.n_crossings

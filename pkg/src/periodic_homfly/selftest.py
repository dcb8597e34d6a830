"""Randomised invariant suites for the engine and the periodic constructions.

Each ``check_*`` function returns a list of failure descriptions (empty on
success) so the same code serves the test suite and ``periodic-homfly
selftest``.
"""

from __future__ import annotations

import random

from .criteria import check_congruences, lowest_coefficient_formula, skein_residual
from .diagram import (
    BraidWord,
    add_axis_cable,
    braid_closure,
    disjoint_union,
    smooth_crossing,
    switch_crossing,
)
from .homfly import homfly
from .periodic import make_extended, random_factor, skein_triple
from .polyring import VZPoly, delta, z_coefficient


def random_braid(rng: random.Random, strands=(2, 3, 4), max_length: int = 8) -> BraidWord:
    s = rng.choice(strands)
    length = rng.randint(1, max_length)
    return BraidWord(s, tuple(rng.choice((1, -1)) * rng.randint(1, s - 1) for _ in range(length)))


def check_skein(rng, count=100):
    """``v^-1 P(L+) - v P(L-) = z P(L0)`` at a random crossing of random closures."""
    bad = []
    for _ in range(count):
        b = random_braid(rng, (2, 3, 4, 5), 9)
        d = braid_closure(b)
        c = rng.randrange(d.n_crossings)
        other = switch_crossing(d, c)
        plus, minus = (d, other) if d.signs[c] > 0 else (other, d)
        lhs = homfly(plus).scale(1, -1) - homfly(minus).scale(1, 1)
        rhs = homfly(smooth_crossing(d, c)).scale(1, 0, 1)
        if lhs != rhs:
            bad.append(f"skein at crossing {c} of {b}")
    return bad


def check_markov(rng, count=20):
    """Conjugation and stabilisation leave the polynomial unchanged."""
    bad = []
    for _ in range(count):
        b = random_braid(rng, (2, 3, 4), 8)
        P = homfly(braid_closure(b))
        g = BraidWord(b.strands, (rng.choice((1, -1)) * rng.randint(1, b.strands - 1),))
        if homfly(braid_closure(g * b * g.inverse())) != P:
            bad.append(f"conjugation of {b} by {g}")
        stab = BraidWord(b.strands + 1, b.letters + (rng.choice((1, -1)) * b.strands,))
        if homfly(braid_closure(stab)) != P:
            bad.append(f"stabilisation {stab}")
    return bad


def check_split_union(rng, count=10):
    """``P(A u B) = delta * P(A) * P(B)`` for split unions."""
    bad = []
    for _ in range(count):
        a = braid_closure(random_braid(rng, (2, 3), 6))
        b = braid_closure(random_braid(rng, (2, 3), 6))
        if homfly(disjoint_union(a, b)) != delta() * homfly(a) * homfly(b):
            bad.append("split union")
    return bad


def check_axis_conventions(rng, count=10):
    """Placing the axis block left or right of the braid gives the same link."""
    bad = []
    for _ in range(count):
        b = random_braid(rng, (2, 3), 6)
        r = rng.randint(1, 2)
        if homfly(add_axis_cable(b, r, "over_first")) != homfly(add_axis_cable(b, r, "under_first")):
            bad.append(f"axis convention {b} r={r}")
    return bad


def check_lowest_coefficient(diagrams):
    """The lowest coefficient equals the linking-number product formula."""
    bad = []
    for name, d in diagrams:
        if lowest_coefficient_formula(d) != z_coefficient(homfly(d), 1 - d.n_components):
            bad.append(f"lowest coefficient of {name}")
    return bad


def check_periodic_examples(rng, p=3, count=10, r=1, strands=(3, 6), max_length=6,
                            max_crossings=24):
    """Generated extended periodic links satisfy both congruences."""
    bad = []
    for _ in range(count):
        f = random_factor(rng, p, strands, max_length, r, max_crossings)
        d = make_extended(f)
        rep = check_congruences(homfly(d, max_crossings=max_crossings), d.n_components, p, r, str(f))
        if not rep.passed:
            bad.append(str(f))
    return bad


def check_triples(rng, p=3, count=5):
    """The equivariant skein congruence vanishes on generated triples."""
    bad = []
    for _ in range(count):
        f = random_factor(rng, p, (3,), 5, 1, 24)
        t = skein_triple(f.factor, rng.randint(1, len(f.factor.letters)), p)
        if skein_residual(t) != VZPoly():
            bad.append(f"triple from {f}")
    return bad


def run(seed: int = 0, quick: bool = True, log=print) -> bool:
    from .corpus import bundled_corpus, ingest

    rng = random.Random(seed)
    scale = 1 if quick else 5
    unknot = braid_closure(BraidWord(1, ()))
    suites = [
        ("unknot is 1", lambda: [] if homfly(unknot) == VZPoly.constant(1) else ["unknot"]),
        ("skein relation", lambda: check_skein(rng, 20 * scale)),
        ("Markov moves", lambda: check_markov(rng, 4 * scale)),
        ("split union", lambda: check_split_union(rng, 4 * scale)),
        ("axis conventions", lambda: check_axis_conventions(rng, 4 * scale)),
        ("lowest coefficient (small corpus)",
         lambda: check_lowest_coefficient((r.name, r.diagram()) for r in ingest(bundled_corpus("small_le8")))),
        ("periodic examples p=3", lambda: check_periodic_examples(rng, 3, 4 * scale)),
        ("periodic examples p=3, r=2", lambda: check_periodic_examples(rng, 3, 2 * scale, r=2, strands=(3,))),
        ("equivariant skein congruence", lambda: check_triples(rng, 3, 3 * scale)),
    ]
    ok = True
    for name, fn in suites:
        failures = fn()
        ok &= not failures
        log(f"{'PASS' if not failures else 'FAIL'}  {name}" + (f": {failures[:3]}" if failures else ""))
    return ok

"""Extended strongly periodic links from braid-presented factors.

A factor braid ``b`` on ``s`` strands and a period ``p`` give the
``p``-periodic link ``closure(b^p)``: rotating about the braid axis by
``2*pi/p`` shifts the word by one copy of ``b``.  The factor link is
``closure(b)``, and a factor component made of ``L`` strands links the axis
``L`` times, so the link is strongly periodic exactly when every cycle of
``b``'s permutation has length divisible by ``p``.  Adding ``r`` parallel
copies of the braid axis gives the extended link.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .diagram import (
    BraidWord,
    DiagramError,
    LinkDiagram,
    add_axis_cable,
    braid_permutation,
    braid_power,
    format_braid,
    parse_braid,
    permutation_cycles,
)
from .polyring import is_prime

__all__ = [
    "PeriodicityError",
    "FactorPresentation",
    "CycleReport",
    "EquivariantTriple",
    "validate_factor",
    "make_extended",
    "make_torus_extended",
    "torus_factor",
    "component_orbits",
    "skein_triple",
    "random_factor",
]


class PeriodicityError(ValueError):
    """The factor braid does not give a strongly periodic link."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def _check_period(p):
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise ValueError(f"period must be an odd prime, got {p!r}")


@dataclass(frozen=True)
class FactorPresentation:
    factor: BraidWord
    p: int
    r: int = 1

    def __post_init__(self):
        _check_period(self.p)
        if self.r < 1:
            raise ValueError("axis multiplicity r must be positive")

    def __str__(self):
        return f"p={self.p} r={self.r} braid={format_braid(self.factor)}"

    @classmethod
    def parse(cls, text: str) -> "FactorPresentation":
        """Parse ``p=3 r=1 braid=3: 1 2`` (``r`` may be omitted)."""
        m = re.match(r"^\s*p\s*=\s*(\d+)(?:\s+r\s*=\s*(\d+))?\s+braid\s*=\s*(.+)$", text)
        if not m:
            raise DiagramError(f"cannot parse factor presentation {text!r}")
        return cls(parse_braid(m.group(3)), int(m.group(1)), int(m.group(2) or 1))


@dataclass(frozen=True)
class CycleReport:
    ok: bool
    p: int
    cycle_lengths: tuple[int, ...]

    def __str__(self):
        lengths = ", ".join(map(str, self.cycle_lengths))
        verdict = "strongly periodic" if self.ok else "not strongly periodic"
        return f"cycle lengths [{lengths}] for p={self.p}: {verdict}"


def validate_factor(f: FactorPresentation | BraidWord, p: int | None = None) -> CycleReport:
    """Check that every cycle of the factor permutation has length divisible by ``p``."""
    if isinstance(f, FactorPresentation):
        b, p = f.factor, f.p
    else:
        b = f
        _check_period(p)
    lengths = tuple(len(c) for c in permutation_cycles(braid_permutation(b)))
    return CycleReport(all(L % p == 0 for L in lengths), p, lengths)


def make_extended(f: FactorPresentation, convention: str = "over_first") -> LinkDiagram:
    """``closure(factor^p)`` plus ``r`` axis copies (the last ``r`` components)."""
    report = validate_factor(f)
    if not report.ok:
        raise PeriodicityError(f"{f}: {report}", report)
    return add_axis_cable(braid_power(f.factor, f.p), f.r, convention)


def component_orbits(f: FactorPresentation) -> list[list[int]]:
    """Non-axis components of ``make_extended(f)`` grouped into rotation orbits.

    Each orbit lists ``p`` component indices in the order the rotation
    permutes them.
    """
    perm = braid_permutation(f.factor)
    big = braid_permutation(braid_power(f.factor, f.p))
    comps = permutation_cycles(big)
    comp_of = {}
    for k, cyc in enumerate(comps):
        for j in cyc:
            comp_of[j] = k
    orbits = []
    for cyc in permutation_cycles(perm):
        orbit = []
        j = cyc[0]
        for _ in range(f.p):
            orbit.append(comp_of[j])
            j = perm[j]
        orbits.append(orbit)
    return orbits


def torus_factor(p: int, k: int) -> BraidWord:
    """``(sigma_1 ... sigma_{p-1})^k`` on ``p`` strands."""
    return BraidWord(p, tuple(range(1, p)) * k)


def make_torus_extended(p: int, k: int, r: int = 1) -> LinkDiagram:
    """``T(p, pk)`` plus ``r`` copies of its braid axis."""
    return make_extended(FactorPresentation(torus_factor(p, k), p, r))


@dataclass(frozen=True)
class EquivariantTriple:
    """Extended diagrams whose marked orbit is positive, negative and smoothed."""

    plus: LinkDiagram
    minus: LinkDiagram
    zero: LinkDiagram
    factors: tuple[BraidWord, BraidWord, BraidWord]
    p: int
    r: int = 1
    strongly_periodic: bool = True


def skein_triple(factor: BraidWord, mark: int, p: int, r: int = 1,
                 convention: str = "over_first", strict: bool = False) -> EquivariantTriple:
    """Change or smooth letter ``mark`` (1-based) of the factor in every period.

    ``closure(b^p)`` is rotation-symmetric for any factor, which is all the
    congruence between the three polynomials needs, so by default the triple
    is built whatever the cycle structure and ``strongly_periodic`` records
    whether the plus factor validates.  With ``strict=True`` a factor that
    does not validate raises :class:`PeriodicityError`.  The zero factor is
    never checked (its components can merge or split).
    """
    _check_period(p)
    if not 1 <= mark <= len(factor.letters):
        raise IndexError(f"mark {mark} out of range for a word of length {len(factor.letters)}")
    letters = list(factor.letters)
    g = abs(letters[mark - 1])
    plus = BraidWord(factor.strands, tuple(letters[: mark - 1] + [g] + letters[mark:]))
    minus = BraidWord(factor.strands, tuple(letters[: mark - 1] + [-g] + letters[mark:]))
    zero = BraidWord(factor.strands, tuple(letters[: mark - 1] + letters[mark:]))
    report = validate_factor(plus, p)
    if strict and not report.ok:
        raise PeriodicityError(f"factor {format_braid(plus)}: {report}", report)

    def build(b):
        return add_axis_cable(braid_power(b, p), r, convention)

    return EquivariantTriple(build(plus), build(minus), build(zero), (plus, minus, zero), p, r, report.ok)


def random_factor(rng: random.Random, p: int, strands=(3, 6), max_length: int = 6,
                  r: int = 1, max_crossings: int = 24, max_tries: int = 100_000) -> FactorPresentation:
    """Rejection-sample a strongly periodic factor.

    Draws a strand count from ``strands``, a word length in
    ``1..max_length`` and uniform signed letters, and keeps the first word
    whose permutation passes :func:`validate_factor` and whose extended
    diagram has at most ``max_crossings`` crossings.
    """
    _check_period(p)
    feasible = [s for s in strands if s % p == 0 and s >= 2
                and p * (s - 1) + 2 * s * r <= max_crossings and s - 1 <= max_length]
    if not feasible:
        raise ValueError(
            f"no strongly {p}-periodic factor on {tuple(strands)} strands fits "
            f"{max_crossings} crossings with r={r}"
        )
    for _ in range(max_tries):
        s = rng.choice(strands)
        if s < 2:
            continue
        length = rng.randint(1, max_length)
        if p * length + 2 * s * r > max_crossings:
            continue
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, s - 1) for _ in range(length))
        b = BraidWord(s, letters)
        if validate_factor(b, p).ok:
            return FactorPresentation(b, p, r)
    raise RuntimeError("rejection sampling did not find a factor")

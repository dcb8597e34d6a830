"""Mod-p congruences that every extended strongly periodic link satisfies.

Let ``L'`` be an ``n``-component link, ``p`` an odd prime and ``r`` the
number of parallel axis copies (``n = p*alpha + r``).  Write
``P(L') = sum_i P_{1-n+2i}(v) z^{1-n+2i}``.  If ``L'`` is extended strongly
``p``-periodic then

1. ``(v - v^-1)^(1-r) P_{1-n}(v)`` reduced mod ``p`` only has exponents
   divisible by ``p``;
2. ``P_{1-n+2i}(v) = 0 mod p`` for ``1 <= i <= (p-1)/2``.

A failure of either condition is an obstruction to periodicity.  Passing
both proves nothing; the checker never claims that a link is periodic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .diagram import LinkDiagram, linking_data, sublink
from .homfly import homfly
from .periodic import EquivariantTriple
from .polyring import (
    NotDivisibleError,
    VPoly,
    VZPoly,
    exact_div_vv,
    in_vp_subring,
    is_prime,
    reduce_mod,
    z_coefficient,
)

__all__ = [
    "Condition1",
    "Condition2Entry",
    "CriterionReport",
    "check_congruences",
    "check_diagram",
    "lowest_coefficient_formula",
    "skein_residual",
]


@dataclass(frozen=True)
class Condition1:
    """Verdict on the lowest coefficient.

    ``failure`` is ``None`` on a pass, ``"divisibility"`` when
    ``(v - v^-1)^(r-1)`` does not divide the coefficient over the integers
    (``witness`` is then the remainder), and ``"subring"`` when the reduced
    quotient has exponents not divisible by ``p`` (``witness`` lists them).
    """

    passed: bool
    exponent: int
    coefficient: VPoly
    quotient: VPoly | None
    reduced: VPoly | None
    witness: VPoly
    failure: str | None = None

    def to_dict(self):
        return {
            "passed": self.passed,
            "failure": self.failure,
            "z_exponent": self.exponent,
            "coefficient": self.coefficient.format(),
            "quotient": None if self.quotient is None else self.quotient.format(),
            "reduced": None if self.reduced is None else self.reduced.format(),
            "witness": self.witness.format() if self.witness else None,
            "witness_exponents": sorted(self.witness.terms),
        }


@dataclass(frozen=True)
class Condition2Entry:
    i: int
    exponent: int
    coefficient: VPoly
    reduced: VPoly

    @property
    def passed(self) -> bool:
        return self.reduced.is_zero()

    def to_dict(self):
        return {
            "i": self.i,
            "z_exponent": self.exponent,
            "passed": self.passed,
            "coefficient": self.coefficient.format(),
            "reduced": self.reduced.format(),
        }


@dataclass(frozen=True)
class CriterionReport:
    link_id: str | None
    n: int
    p: int
    r: int
    applicable: bool
    condition1: Condition1
    condition2: tuple[Condition2Entry, ...] = field(default_factory=tuple)

    @property
    def condition2_passed(self) -> bool:
        return all(e.passed for e in self.condition2)

    @property
    def passed(self) -> bool:
        return self.condition1.passed and self.condition2_passed

    @property
    def verdict(self) -> str:
        return "no obstruction" if self.passed else "obstruction present"

    def to_dict(self):
        return {
            "link_id": self.link_id,
            "n": self.n,
            "p": self.p,
            "r": self.r,
            "applicable": self.applicable,
            "passed": self.passed,
            "verdict": self.verdict,
            "condition1": self.condition1.to_dict(),
            "condition2": [e.to_dict() for e in self.condition2],
        }

    def to_json(self, **kw) -> str:
        kw.setdefault("sort_keys", True)
        return json.dumps(self.to_dict(), **kw)

    def summary(self) -> str:
        name = self.link_id or "link"
        lines = [f"{name}: n={self.n} p={self.p} r={self.r}"
                 + ("" if self.applicable else f" (n != r mod {self.p}: not an extended {self.p}-periodic shape)")]
        c1 = self.condition1
        if c1.passed:
            lines.append(f"  condition 1: pass   P_{c1.exponent} = {c1.coefficient}  reduced: {c1.reduced}")
        elif c1.failure == "divisibility":
            lines.append(f"  condition 1: FAIL (not divisible by (v - v^-1)^{self.r - 1}, remainder {c1.witness})")
        else:
            lines.append(f"  condition 1: FAIL   reduced {c1.reduced}, bad terms {c1.witness}")
        for e in self.condition2:
            state = "pass" if e.passed else "FAIL"
            lines.append(f"  condition 2, i={e.i}: {state}   P_{e.exponent} = {e.coefficient}  mod {self.p}: {e.reduced}")
        lines.append(f"  verdict: {self.verdict}")
        return "\n".join(lines)


def _check_args(p, r):
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")


def check_congruences(P: VZPoly, n: int, p: int, r: int = 1, link_id: str | None = None) -> CriterionReport:
    """Test both congruences on the HOMFLYPT polynomial of an ``n``-component link."""
    _check_args(p, r)
    if n < 1:
        raise ValueError("n must be positive")
    if not P.is_zero() and P.min_z() < 1 - n:
        raise ValueError(f"z-exponent {P.min_z()} is below 1-n = {1 - n}")

    low = 1 - n
    coeff = z_coefficient(P, low)
    try:
        quotient = exact_div_vv(coeff, r - 1)
    except NotDivisibleError as exc:
        c1 = Condition1(False, low, coeff, None, None, exc.remainder, "divisibility")
    else:
        reduced = reduce_mod(quotient, p)
        ok, witness = in_vp_subring(reduced, p)
        c1 = Condition1(ok, low, coeff, quotient, reduced, witness, None if ok else "subring")

    entries = []
    for i in range(1, (p - 1) // 2 + 1):
        e = low + 2 * i
        c = z_coefficient(P, e)
        entries.append(Condition2Entry(i, e, c, reduce_mod(c, p)))
    return CriterionReport(link_id, n, p, r, (n - r) % p == 0, c1, tuple(entries))


def check_diagram(d: LinkDiagram, p: int, r: int = 1, link_id: str | None = None,
                  max_crossings: int | None = None) -> CriterionReport:
    return check_congruences(homfly(d, max_crossings=max_crossings), d.n_components, p, r, link_id)


def lowest_coefficient_formula(d: LinkDiagram, max_crossings: int | None = None) -> VPoly:
    """``v^(2*lk) (v^-1 - v)^(n-1) prod_i P_0(K_i)``.

    ``lk`` is the total linking number and ``P_0(K_i)`` the ``z^0``
    coefficient of component ``i`` on its own.  This equals the lowest
    coefficient of ``homfly(d)`` and is computed without touching the
    multi-component skein tree.
    """
    n = d.n_components
    lam = linking_data(d).total
    out = VPoly({-1: 1, 1: -1}) ** (n - 1)
    for i in range(n):
        out = out * z_coefficient(homfly(sublink(d, [i]), max_crossings=max_crossings), 0)
    return out.shift(2 * lam)


def skein_residual(t: EquivariantTriple, p: int | None = None, max_crossings: int | None = None) -> VZPoly:
    """``v^-p P(plus) - v^p P(minus) - z^p P(zero)`` reduced mod ``p``; zero for genuine triples."""
    p = t.p if p is None else p
    _check_args(p, 1)
    plus = homfly(t.plus, max_crossings=max_crossings)
    minus = homfly(t.minus, max_crossings=max_crossings)
    zero = homfly(t.zero, max_crossings=max_crossings)
    return reduce_mod(plus.scale(1, -p, 0) - minus.scale(1, p, 0) - zero.scale(1, 0, p), p)

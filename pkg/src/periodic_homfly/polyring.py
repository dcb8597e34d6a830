"""Sparse Laurent polynomials over the integers in ``v`` and ``(v, z)``.

Coefficients are Python ints, so nothing ever overflows.  Both classes are
immutable value types: every operation returns a new polynomial, and equal
polynomials hash equally.

Text form (shared by both classes)::

    -3*v^-7 + 6*v^-5 - 3*v^-3
    2*v^2 - v^4 + v^2*z^2

Terms are ordered by ``(z-exponent, v-exponent)``; unit coefficients and
zero exponents are omitted.  :func:`parse_poly` accepts this form with any
whitespace, ``^(-3)`` style exponents and explicit ``*1``/``^1`` factors.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = [
    "VPoly",
    "VZPoly",
    "NotDivisibleError",
    "PolyParseError",
    "is_prime",
    "reduce_mod",
    "z_coefficient",
    "in_vp_subring",
    "exact_div_vv",
    "parse_poly",
    "parse_vpoly",
    "parse_vzpoly",
    "delta",
]


class NotDivisibleError(ArithmeticError):
    """Raised by :func:`exact_div_vv` when the quotient is not a Laurent polynomial."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class PolyParseError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _check_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p!r}")


def _sym_residue(c, p):
    r = c % p
    if r > p // 2:
        r -= p
    return r


class _Laurent:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean = {}
        for k, c in items:
            k = self._key(k)
            c = int(c)
            if c:
                c = clean.get(k, 0) + c
                if c:
                    clean[k] = c
                else:
                    del clean[k]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        # trusted constructor: terms already has no zero coefficients
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self._raw({})
            return self._raw({k: c * other for k, c in self._terms.items()})
        if type(other) is not type(self):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        add = self._add_keys
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = add(ka, kb)
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return self._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = type(self).constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"{type(self).__name__}('{self.format()}')"

    def format(self) -> str:
        keys = sorted(self._terms, key=self._order)
        if not keys:
            return "0"
        parts = []
        for i, k in enumerate(keys):
            c = self._terms[k]
            mono = self._mono_text(k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)


def _power_text(var, e):
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


class VPoly(_Laurent):
    """Laurent polynomial in ``v``; ``terms`` maps exponent -> coefficient."""

    __slots__ = ()

    @staticmethod
    def _key(k):
        return int(k)

    @staticmethod
    def _add_keys(a, b):
        return a + b

    @staticmethod
    def _order(k):
        return k

    @staticmethod
    def _mono_text(k):
        return _power_text("v", k)

    @classmethod
    def constant(cls, c: int) -> "VPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "VPoly":
        return cls({e: c})

    def shift(self, e: int) -> "VPoly":
        """Multiply by ``v**e``."""
        return self._raw({k + e: c for k, c in self._terms.items()})

    def min_exp(self):
        return min(self._terms) if self._terms else None

    def max_exp(self):
        return max(self._terms) if self._terms else None

    def evaluate(self, v):
        return sum(c * v**e for e, c in self._terms.items())

    def to_vz(self, z_exp: int = 0) -> "VZPoly":
        return VZPoly._raw({(e, z_exp): c for e, c in self._terms.items()})


class VZPoly(_Laurent):
    """Laurent polynomial in ``v`` and ``z``; keys are ``(v_exp, z_exp)``."""

    __slots__ = ()

    @staticmethod
    def _key(k):
        a, b = k
        return (int(a), int(b))

    @staticmethod
    def _add_keys(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @staticmethod
    def _order(k):
        return (k[1], k[0])

    @staticmethod
    def _mono_text(k):
        return "*".join(t for t in (_power_text("v", k[0]), _power_text("z", k[1])) if t)

    @classmethod
    def constant(cls, c: int) -> "VZPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, v_exp: int = 0, z_exp: int = 0, c: int = 1) -> "VZPoly":
        return cls({(v_exp, z_exp): c})

    def scale(self, c: int, v_exp: int = 0, z_exp: int = 0) -> "VZPoly":
        """Multiply by the monomial ``c * v**v_exp * z**z_exp``."""
        if c == 0:
            return self._raw({})
        return self._raw({(a + v_exp, b + z_exp): x * c for (a, b), x in self._terms.items()})

    def z_exponents(self) -> list[int]:
        return sorted({b for _, b in self._terms})

    def min_z(self):
        return min(b for _, b in self._terms) if self._terms else None

    def evaluate(self, v, z):
        return sum(c * v**a * z**b for (a, b), c in self._terms.items())


def delta() -> VZPoly:
    """``(v^-1 - v) z^-1``, the value of a split unknot factor."""
    return VZPoly._raw({(-1, -1): 1, (1, -1): -1})


def reduce_mod(a, p: int):
    """Reduce coefficients to symmetric residues mod a prime ``p``.

    Residues live in ``{-(p//2), ..., p//2}``, so a polynomial is
    congruent to zero exactly when the result is empty.
    """
    _check_prime(p)
    out = {}
    for k, c in a.items():
        r = _sym_residue(c, p)
        if r:
            out[k] = r
    return type(a)._raw(out)


def z_coefficient(a: VZPoly, e: int) -> VPoly:
    return VPoly._raw({v: c for (v, z), c in a.items() if z == e})


def in_vp_subring(a: VPoly, p: int) -> tuple[bool, VPoly]:
    """Test whether every exponent of ``a`` is a multiple of ``p``.

    Returns ``(ok, witness)`` where ``witness`` holds the offending terms.
    The caller is expected to have reduced ``a`` mod ``p`` first.
    """
    bad = {e: c for e, c in a.items() if e % p}
    return (not bad, VPoly._raw(bad))


def exact_div_vv(a: VPoly, k: int) -> VPoly:
    """Divide ``a`` by ``(v - v^-1)**k`` exactly over the integers.

    Raises :class:`NotDivisibleError` on a nonzero remainder.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0 or a.is_zero():
        return a
    # (v - v^-1)^k = v^-k (v^2 - 1)^k: divide the shifted polynomial by (v^2 - 1) k times
    lo = a.min_exp()
    coeffs = [0] * (a.max_exp() - lo + 1)
    for e, c in a.items():
        coeffs[e - lo] = c
    for step in range(k):
        if len(coeffs) < 3:
            raise NotDivisibleError(
                f"not divisible by (v - v^-1)^{k} (degree too small at step {step + 1})",
                remainder=VPoly({lo + i: c for i, c in enumerate(coeffs)}),
            )
        # synthetic division by x^2 - 1, coefficients low -> high degree
        n = len(coeffs) - 1
        q = [0] * (n - 1)
        r = list(coeffs)
        for d in range(n, 1, -1):
            c = r[d]
            q[d - 2] = c
            r[d] = 0
            r[d - 2] += c
        if r[0] or r[1]:
            raise NotDivisibleError(
                f"not divisible by (v - v^-1)^{k}",
                remainder=VPoly({lo + 0: r[0], lo + 1: r[1]}),
            )
        coeffs = q
    return VPoly({lo + k + i: c for i, c in enumerate(coeffs)})


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
    |(?P<num>\d+)
    |(?P<var>[vz])(?:\^(?:\((?P<pexp>[+-]?\d+)\)|(?P<exp>[+-]?\d+)))?
    |(?P<op>[-+*])
    """,
    re.VERBOSE,
)


def _tokens(text):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolyParseError(f"unexpected character {text[pos]!r} at position {pos} in {text!r}")
        pos = m.end()
        if m.group("ws"):
            continue
        if m.group("num"):
            yield ("num", int(m.group("num")))
        elif m.group("var"):
            e = m.group("pexp") or m.group("exp") or "1"
            yield ("var", (m.group("var"), int(e)))
        else:
            yield ("op", m.group("op"))


def parse_poly(text: str) -> VZPoly:
    """Parse the canonical text form (or a whitespace variant) into a VZPoly."""
    terms: dict = {}
    toks = list(_tokens(text))
    if not toks:
        raise PolyParseError("empty polynomial text")
    i = 0
    first = True
    while i < len(toks):
        sign = 1
        kind, val = toks[i]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise PolyParseError(f"expected '+' or '-' between terms in {text!r}")
        first = False
        coeff, ve, ze = 1, 0, 0
        expect_factor = True
        seen = 0
        while i < len(toks):
            kind, val = toks[i]
            if expect_factor:
                if kind == "num":
                    coeff *= val
                elif kind == "var":
                    if val[0] == "v":
                        ve += val[1]
                    else:
                        ze += val[1]
                else:
                    break
                seen += 1
                expect_factor = False
                i += 1
            else:
                if kind == "op" and val == "*":
                    expect_factor = True
                    i += 1
                elif kind in ("num", "var"):
                    raise PolyParseError(f"missing '*' between factors in {text!r}")
                else:
                    break
        if not seen or expect_factor:
            raise PolyParseError(f"dangling operator in {text!r}")
        key = (ve, ze)
        terms[key] = terms.get(key, 0) + sign * coeff
    return VZPoly(terms)


def parse_vzpoly(text: str) -> VZPoly:
    return parse_poly(text)


def parse_vpoly(text: str) -> VPoly:
    p = parse_poly(text)
    if any(z for (_, z) in p._terms):
        raise PolyParseError(f"unexpected z in one-variable polynomial {text!r}")
    return VPoly({v: c for (v, _), c in p.items()})

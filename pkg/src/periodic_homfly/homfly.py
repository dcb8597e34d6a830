"""HOMFLYPT polynomial by skein recursion to descending diagrams.

Normalisation: ``P(unknot) = 1`` and ``v^-1 P(L+) - v P(L-) = z P(L0)``.

The engine works on signed Gauss codes.  A visit is encoded as the int
``2 * crossing + over``; a diagram is a list of components (lists of
visits) plus a ``{crossing: sign}`` map.  At every node it

1. removes Reidemeister I kinks and II bigons,
2. splits the diagram into connected pieces (each split piece contributes
   a factor ``(v^-1 - v) z^-1``),
3. looks each piece up by a canonical code, and otherwise
4. picks a component order and basepoints, walks the diagram and switches
   every crossing first met from below.  Each switch spawns the smoothed
   diagram (one crossing fewer); the fully switched diagram is descending,
   hence an unlink.

Crossing changes never feed back into the recursion, so the recursion depth
is bounded by the crossing count whatever the simplifier does.
"""

from __future__ import annotations

import os
import threading

from .diagram import LinkDiagram, _normalized
from .polyring import VPoly, VZPoly, delta, z_coefficient

__all__ = [
    "CrossingLimitError",
    "DEFAULT_MAX_CROSSINGS",
    "MAX_CROSSINGS_ENV",
    "homfly",
    "homfly_coeffs",
    "simplify",
    "canonical_key",
    "clear_cache",
    "cache_size",
    "Coefficients",
]

DEFAULT_MAX_CROSSINGS = 24
MAX_CROSSINGS_ENV = "PERIODIC_HOMFLY_MAX_CROSSINGS"


class CrossingLimitError(RuntimeError):
    """The diagram has more crossings than the configured limit."""

    def __init__(self, crossings, limit):
        super().__init__(
            f"diagram has {crossings} crossings, limit is {limit} "
            f"(raise it with max_crossings= or ${MAX_CROSSINGS_ENV})"
        )
        self.crossings = crossings
        self.limit = limit


_cache: dict = {}
_cache_lock = threading.Lock()


def clear_cache():
    with _cache_lock:
        _cache.clear()


def cache_size() -> int:
    return len(_cache)


def _limit(max_crossings):
    if max_crossings is not None:
        return max_crossings
    env = os.environ.get(MAX_CROSSINGS_ENV)
    if env:
        return int(env)
    return DEFAULT_MAX_CROSSINGS


# --------------------------------------------------------------------------
# Gauss-code helpers


def _to_codes(d: LinkDiagram):
    comps = [[2 * c + o for c, o in comp] for comp in d.gauss]
    signs = dict(enumerate(d.signs))
    return comps, signs


def _simplify_codes(comps, signs):
    """Drop R1 kinks and R2 bigons.  Returns (nonempty comps, number of free loops)."""
    free = sum(1 for c in comps if not c)
    comps = [list(c) for c in comps if c]
    while True:
        dead = set()
        # R1: a crossing visited twice in a row
        for comp in comps:
            m = len(comp)
            if m < 2:
                continue
            prev = comp[-1] >> 1
            for code in comp:
                cid = code >> 1
                if cid == prev:
                    dead.add(cid)
                prev = cid
        if not dead:
            # R2: two crossings joined by consecutive over-visits and consecutive under-visits
            over_pairs = {}
            under_pairs = set()
            for comp in comps:
                m = len(comp)
                if m < 2:
                    continue
                prev = comp[-1]
                for code in comp:
                    a, b = prev >> 1, code >> 1
                    if a != b and (prev & 1) == (code & 1):
                        key = (a, b) if a < b else (b, a)
                        if code & 1:
                            over_pairs[key] = True
                        else:
                            under_pairs.add(key)
                    prev = code
            for key in over_pairs:
                if key in under_pairs:
                    a, b = key
                    if signs[a] != signs[b] and a not in dead and b not in dead:
                        dead.add(a)
                        dead.add(b)
        if not dead:
            break
        new = []
        for comp in comps:
            kept = [c for c in comp if (c >> 1) not in dead]
            if kept:
                new.append(kept)
            else:
                free += 1
        comps = new
    return comps, free


def _split(comps):
    """Group components into connected pieces."""
    n = len(comps)
    if n == 1:
        return [comps]
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner = {}
    for k, comp in enumerate(comps):
        for code in comp:
            cid = code >> 1
            j = owner.get(cid)
            if j is None:
                owner[cid] = k
            else:
                ra, rb = find(j), find(k)
                if ra != rb:
                    parent[ra] = rb
    groups = {}
    for k in range(n):
        groups.setdefault(find(k), []).append(comps[k])
    return list(groups.values())


def _canonical(comps, signs):
    """Canonical code of a connected diagram.

    Minimum over starting visits of the relabelled Gauss code, where
    components after the first are entered at the first already-labelled
    crossing they pass through.  Only starts whose local signature is
    minimal are tried; the signature does not depend on labels, so the
    result is still canonical.
    """
    nc = len(comps)
    where = {}
    for k, comp in enumerate(comps):
        for i, code in enumerate(comp):
            where.setdefault(code >> 1, []).append((k, i))
    lens = [len(c) for c in comps]
    best_sig = None
    starts = []
    for k, comp in enumerate(comps):
        m = lens[k]
        for i, code in enumerate(comp):
            (ka, ia), (kb, ib) = where[code >> 1]
            if ka == kb:
                j = ib if ia == i else ia
                gap = (j - i) % m
            else:
                gap = m + lens[kb if ka == k else ka]
            # the next visit's crossing type refines ties cheaply
            nxt = comp[(i + 1) % m]
            sig = (m, code & 1, signs[code >> 1], gap, nxt & 1, signs[nxt >> 1])
            if best_sig is None or sig < best_sig:
                best_sig = sig
                starts = [(k, i)]
            elif sig == best_sig:
                starts.append((k, i))
    best = None
    for k0, i0 in starts:
        label = {}
        cids = []
        out = []
        done = [False] * nc
        k, i = k0, i0
        ptr = 0
        while True:
            comp = comps[k]
            m = lens[k]
            done[k] = True
            seq = []
            for t in range(m):
                code = comp[(i + t) % m]
                cid = code >> 1
                lab = label.get(cid)
                if lab is None:
                    lab = label[cid] = len(cids)
                    cids.append(cid)
                seq.append(2 * lab + (code & 1))
            out.append(tuple(seq))
            if len(out) == nc:
                break
            while True:
                nxt = None
                for kk, ii in where[cids[ptr]]:
                    if not done[kk]:
                        nxt = (kk, ii)
                        break
                if nxt is not None:
                    break
                ptr += 1
            k, i = nxt
        key = (tuple(out), tuple([signs[c] for c in cids]))
        if best is None or key < best:
            best = key
    return best


def _smooth_codes(comps, cid):
    where = []
    for k, comp in enumerate(comps):
        for i, code in enumerate(comp):
            if code >> 1 == cid:
                where.append((k, i))
    (ka, ia), (kb, ib) = where
    out = [c for j, c in enumerate(comps) if j != ka and j != kb]
    if ka == kb:
        s = comps[ka]
        out.append(s[ib + 1:] + s[:ia])
        out.append(s[ia + 1:ib])
    else:
        A, B = comps[ka], comps[kb]
        out.append(A[ia + 1:] + A[:ia] + B[ib + 1:] + B[:ib])
    return out


def _choose_order(comps):
    """Component order minimising crossings where an earlier component passes under."""
    nc = len(comps)
    if nc == 1:
        return [0]
    comp_of = {}
    for k, comp in enumerate(comps):
        for code in comp:
            comp_of.setdefault(code >> 1, []).append((k, code & 1))
    under = [[0] * nc for _ in range(nc)]
    for (a, oa), (b, ob) in comp_of.values():
        if a != b:
            if oa:
                under[b][a] += 1
            else:
                under[a][b] += 1
    if nc > 10:
        # greedy: repeatedly take the component that is under least against the rest
        left = set(range(nc))
        order = []
        while left:
            k = min(left, key=lambda x: (sum(under[x][y] for y in left), x))
            order.append(k)
            left.discard(k)
        return order
    full = (1 << nc) - 1
    INF = float("inf")
    best = [INF] * (1 << nc)
    choice = [0] * (1 << nc)
    best[0] = 0
    for mask in range(1 << nc):
        base = best[mask]
        if base == INF:
            continue
        for y in range(nc):
            if mask >> y & 1:
                continue
            # y placed after the complement of mask -> y is the earlier one against those
            cost = base
            for x in range(nc):
                if not (mask >> x & 1) and x != y:
                    cost += under[y][x]
            nm = mask | (1 << y)
            if cost < best[nm]:
                best[nm] = cost
                choice[nm] = y
    # choice[mask] is the last component of the best ordering of mask
    order = []
    mask = full
    while mask:
        y = choice[mask]
        order.append(y)
        mask &= ~(1 << y)
    order.reverse()
    return order


def _choose_basepoint(comp):
    """Start index minimising self-crossings first met from below."""
    m = len(comp)
    first = {}
    diff = [0] * (m + 1)
    for i, code in enumerate(comp):
        cid = code >> 1
        j = first.get(cid)
        if j is None:
            first[cid] = i
            continue
        # visits at j < i; the under visit decides which starts are bad
        if comp[j] & 1:
            # under at i: bad when starting in (j, i]
            diff[j + 1] += 1
            diff[i + 1] -= 1
        else:
            # under at j: bad when starting in [0, j] or (i, m)
            diff[0] += 1
            diff[j + 1] -= 1
            diff[i + 1] += 1
            diff[m] -= 1
    best_i, best_v, run = 0, None, 0
    for i in range(m):
        run += diff[i]
        if best_v is None or run < best_v:
            best_i, best_v = i, run
    return best_i


# --------------------------------------------------------------------------
# recursion

_DELTA = delta()


def _delta_pow(k):
    return _DELTA**k


def _general(comps, signs, cache):
    comps, free = _simplify_codes(comps, signs)
    parts = _split(comps) if comps else []
    result = _delta_pow(len(parts) + free - 1) if len(parts) + free > 1 else VZPoly.constant(1)
    for part in parts:
        result = result * _piece(part, signs, cache)
    return result


def _piece(comps, signs, cache):
    key = _canonical(comps, signs)
    hit = cache.get(key)
    if hit is not None:
        return hit
    value = _descend(comps, signs, cache)
    cache[key] = value
    return value


def _descend(comps, signs, cache):
    nc = len(comps)
    order = _choose_order(comps)
    bases = [_choose_basepoint(c) for c in comps]
    seen = set()
    bad = []
    for k in order:
        comp = comps[k]
        m = len(comp)
        b = bases[k]
        for t in range(m):
            code = comp[(b + t) % m]
            cid = code >> 1
            if cid not in seen:
                seen.add(cid)
                if not code & 1:
                    bad.append(cid)
    base_value = _delta_pow(nc - 1)
    if not bad:
        return base_value
    cur = [list(c) for c in comps]
    cur_signs = dict(signs)
    pos = {}
    for k, comp in enumerate(cur):
        for i, code in enumerate(comp):
            pos.setdefault(code >> 1, []).append((k, i))
    result = VZPoly()
    wexp = 0
    for cid in bad:
        eps = cur_signs[cid]
        child = _smooth_codes(cur, cid)
        pc = _general(child, cur_signs, cache)
        if eps > 0:
            # P+ = v^2 P- + v z P0
            result = result + pc.scale(1, wexp + 1, 1)
            wexp += 2
        else:
            # P- = v^-2 P+ - v^-1 z P0
            result = result + pc.scale(-1, wexp - 1, 1)
            wexp -= 2
        for k, i in pos[cid]:
            cur[k][i] ^= 1
        cur_signs[cid] = -eps
    return result + base_value.scale(1, wexp, 0)


# --------------------------------------------------------------------------
# public API


def homfly(d: LinkDiagram, max_crossings: int | None = None, cache: dict | None = None) -> VZPoly:
    """HOMFLYPT polynomial of an oriented diagram.

    ``max_crossings`` defaults to ``$PERIODIC_HOMFLY_MAX_CROSSINGS`` or 24;
    larger diagrams raise :class:`CrossingLimitError`.  ``cache`` may be any
    dict to use instead of the shared module cache.
    """
    limit = _limit(max_crossings)
    if d.n_crossings > limit:
        raise CrossingLimitError(d.n_crossings, limit)
    if d.n_components == 0:
        raise ValueError("empty diagram has no HOMFLYPT polynomial")
    comps, signs = _to_codes(d)
    if cache is None:
        cache = _cache
    P = _general(comps, signs, cache)
    n = d.n_components
    for (_, ze), _c in P.items():
        if ze < 1 - n or (ze - (1 - n)) % 2:
            raise AssertionError(f"z-exponent {ze} impossible for {n} components")
    return P


class Coefficients(dict):
    """``{i: P_{1-n+2i}(v)}``; absent indices read as zero."""

    def __init__(self, n, items=()):
        super().__init__(items)
        self.n = n

    def __missing__(self, key):
        return VPoly()

    def exponent(self, i: int) -> int:
        return 1 - self.n + 2 * i


def homfly_coeffs(d: LinkDiagram, max_crossings: int | None = None) -> Coefficients:
    P = homfly(d, max_crossings=max_crossings)
    n = d.n_components
    out = Coefficients(n)
    for e in P.z_exponents():
        out[(e - (1 - n)) // 2] = z_coefficient(P, e)
    return out


def simplify(d: LinkDiagram) -> LinkDiagram:
    """Remove R1 kinks and R2 bigons.  Components keep their indices."""
    comps, signs = _to_codes(d)
    reduced, _ = _simplify_codes(comps, signs)
    left = {code >> 1 for comp in reduced for code in comp}
    # components that empty out stay in place as free loops
    out = [tuple((code >> 1, bool(code & 1)) for code in comp if (code >> 1) in left) for comp in comps]
    return _normalized(out, d.signs, d.axis)


def canonical_key(d: LinkDiagram):
    """Key equal for diagrams that agree up to basepoints and component/crossing relabelling."""
    comps, signs = _to_codes(d)
    free = sum(1 for c in comps if not c)
    comps = [c for c in comps if c]
    parts = sorted(_canonical(p, signs) for p in _split(comps)) if comps else []
    return (tuple(parts), free)

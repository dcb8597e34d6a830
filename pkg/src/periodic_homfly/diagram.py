"""Oriented link diagrams, braid words and the combinatorics around them.

A :class:`LinkDiagram` is stored as a signed Gauss code: for each component
the cyclic sequence of crossings it meets, each flagged over or under, plus
one sign per crossing.  The planar-diagram (PD) view that most tables use is
derived from it:

* edges are numbered ``1..E`` consecutively along each component, in
  component order, so edge ``start + i`` runs into the ``i``-th visit;
* ``X[a, b, c, d]`` lists the four edges counterclockwise starting from the
  incoming under-edge, so the under-strand runs ``a -> c``; the over-strand
  runs ``d -> b`` on a positive crossing and ``b -> d`` on a negative one.

Components without crossings (free loops) are components with an empty
visit sequence.  They carry no edge labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "DiagramError",
    "BraidWord",
    "LinkDiagram",
    "LinkingData",
    "parse_pd",
    "format_pd",
    "parse_braid",
    "format_braid",
    "braid_closure",
    "braid_power",
    "braid_permutation",
    "permutation_cycles",
    "linking_data",
    "sublink",
    "reverse_component",
    "mirror",
    "disjoint_union",
    "switch_crossing",
    "smooth_crossing",
    "add_axis_cable",
    "axis_cable_word",
    "unlink",
]


class DiagramError(ValueError):
    """Malformed or inconsistent diagram or braid input."""


# --------------------------------------------------------------------------
# braids


@dataclass(frozen=True)
class BraidWord:
    """A braid word on ``strands`` strands.

    ``letters`` holds signed generator indices: ``i`` is sigma_i and ``-i``
    its inverse, ``1 <= i < strands``.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise DiagramError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0:
                raise DiagramError("generator index 0 is not allowed")
            if abs(x) >= self.strands:
                raise DiagramError(
                    f"generator {abs(x)} out of range for {self.strands} strands"
                )

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_braid(self)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise DiagramError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def shifted(self, k: int, strands: int | None = None) -> "BraidWord":
        """Move every generator ``k`` positions to the right."""
        s = self.strands + k if strands is None else strands
        return BraidWord(s, tuple(x + k if x > 0 else x - k for x in self.letters))


_BRAID_RE = re.compile(r"^\s*(\d+)\s*:\s*((?:[+-]?\d+[\s,]*)*)$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"s: i1 i2 ..."``; negative entries are inverse generators."""
    m = _BRAID_RE.match(text)
    if not m:
        raise DiagramError(f"cannot parse braid word {text!r}")
    strands = int(m.group(1))
    letters = [int(t) for t in re.split(r"[\s,]+", m.group(2).strip()) if t]
    return BraidWord(strands, tuple(letters))


def format_braid(b: BraidWord) -> str:
    return f"{b.strands}:" + "".join(f" {x}" for x in b.letters)


def braid_power(b: BraidWord, p: int) -> BraidWord:
    if p < 1:
        raise ValueError("power must be positive")
    return BraidWord(b.strands, b.letters * p)


def braid_permutation(b: BraidWord) -> tuple[int, ...]:
    """Where each strand (0-based bottom position) ends up at the top."""
    pos = list(range(b.strands))  # pos[strand] = current position
    at = list(range(b.strands))  # at[position] = strand
    for x in b.letters:
        i = abs(x) - 1
        s, t = at[i], at[i + 1]
        at[i], at[i + 1] = t, s
        pos[s], pos[t] = i + 1, i
    return tuple(pos)


def permutation_cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        cycles.append(cyc)
    return cycles


# --------------------------------------------------------------------------
# diagrams

Visit = tuple[int, bool]  # (crossing id, passes over)


@dataclass(frozen=True)
class LinkDiagram:
    """Oriented link diagram as a signed Gauss code.

    ``gauss[k]`` is the cyclic visit sequence of component ``k``;
    ``signs[c]`` is the sign of crossing ``c``; ``axis`` holds the indices
    of components that are copies of the rotation axis.
    """

    gauss: tuple[tuple[Visit, ...], ...]
    signs: tuple[int, ...]
    axis: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        gauss = tuple(tuple((int(c), bool(o)) for c, o in comp) for comp in self.gauss)
        object.__setattr__(self, "gauss", gauss)
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        object.__setattr__(self, "axis", frozenset(self.axis))
        self._validate()

    def _validate(self):
        n = len(self.signs)
        seen = [[0, 0] for _ in range(n)]
        for comp in self.gauss:
            for c, over in comp:
                if not 0 <= c < n:
                    raise DiagramError(f"crossing id {c} out of range")
                seen[c][over] += 1
        for c, (u, o) in enumerate(seen):
            if u != 1 or o != 1:
                raise DiagramError(f"crossing {c} must be visited once over and once under")
        if any(s not in (1, -1) for s in self.signs):
            raise DiagramError("crossing signs must be +1 or -1")
        for a in self.axis:
            if not 0 <= a < len(self.gauss):
                raise DiagramError(f"axis component {a} out of range")

    # ---- basic counts

    @property
    def n_components(self) -> int:
        return len(self.gauss)

    @property
    def n_crossings(self) -> int:
        return len(self.signs)

    @property
    def free_loops(self) -> int:
        return sum(1 for comp in self.gauss if not comp)

    @property
    def axis_components(self) -> frozenset:
        return self.axis

    def writhe(self) -> int:
        return sum(self.signs)

    # ---- PD view

    @property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Edge labels of each component in traversal order (``()`` for free loops)."""
        out = []
        start = 1
        for comp in self.gauss:
            out.append(tuple(range(start, start + len(comp))))
            start += len(comp)
        return tuple(out)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(range(1, sum(len(c) for c in self.gauss) + 1))

    def oriented_crossings(self) -> list[tuple[int, int, int, int]]:
        """Per crossing ``(under_in, under_out, over_in, over_out)`` edge labels."""
        slots = [[0, 0, 0, 0] for _ in self.signs]
        start = 1
        for comp in self.gauss:
            m = len(comp)
            for i, (c, over) in enumerate(comp):
                e_in = start + i
                e_out = start + (i + 1) % m
                base = 2 if over else 0
                slots[c][base] = e_in
                slots[c][base + 1] = e_out
            start += m
        return [tuple(s) for s in slots]

    @property
    def crossings(self) -> tuple[tuple[int, int, int, int], ...]:
        out = []
        for (ui, uo, oi, oo), s in zip(self.oriented_crossings(), self.signs):
            out.append((ui, oo, uo, oi) if s > 0 else (ui, oi, uo, oo))
        return tuple(out)

    def pd_code(self) -> str:
        return format_pd(self)

    def crossing_components(self) -> list[tuple[int, int]]:
        """``(under component, over component)`` for each crossing."""
        out = [[None, None] for _ in self.signs]
        for k, comp in enumerate(self.gauss):
            for c, over in comp:
                out[c][over] = k
        return [tuple(x) for x in out]

    def reorder(self, order: Sequence[int]) -> "LinkDiagram":
        """Renumber components so that new component ``i`` is old ``order[i]``."""
        if sorted(order) != list(range(self.n_components)):
            raise ValueError("order must be a permutation of the components")
        new_index = {old: new for new, old in enumerate(order)}
        return _normalized([self.gauss[k] for k in order], self.signs,
                           {new_index[a] for a in self.axis})

    def with_axis(self, axis: Iterable[int]) -> "LinkDiagram":
        return LinkDiagram(self.gauss, self.signs, frozenset(axis))

    def __str__(self):
        return format_pd(self)


def _normalized(gauss, signs, axis=()) -> LinkDiagram:
    """Renumber crossings by first appearance; keep component order and basepoints."""
    relabel = {}
    for comp in gauss:
        for c, _ in comp:
            if c not in relabel:
                relabel[c] = len(relabel)
    new_signs = [0] * len(relabel)
    for c, k in relabel.items():
        new_signs[k] = signs[c]
    new_gauss = tuple(tuple((relabel[c], o) for c, o in comp) for comp in gauss)
    return LinkDiagram(new_gauss, tuple(new_signs), frozenset(axis))


def unlink(n: int) -> LinkDiagram:
    """Crossingless diagram of the ``n``-component unlink."""
    return LinkDiagram(tuple(() for _ in range(n)), ())


# --------------------------------------------------------------------------
# PD text

_X_RE = re.compile(r"X\s*\[\s*([^\]]*?)\s*\]")
_PD_RE = re.compile(r"^\s*PD\s*\[(.*)\]\s*$", re.S)


def format_pd(d: LinkDiagram) -> str:
    body = ",".join("X[" + ",".join(str(e) for e in x) + "]" for x in d.crossings)
    return f"PD[{body}]"


def _parse_pd_tuples(text: str) -> list[tuple[int, int, int, int]]:
    m = _PD_RE.match(text)
    if not m:
        raise DiagramError(f"not a PD code: {text[:60]!r}")
    body = m.group(1)
    tuples = []
    for xm in _X_RE.finditer(body):
        try:
            vals = [int(t) for t in xm.group(1).split(",")]
        except ValueError:
            raise DiagramError(f"non-integer edge label in X[{xm.group(1)}]") from None
        if len(vals) != 4:
            raise DiagramError(f"crossing X[{xm.group(1)}] needs four edge labels")
        tuples.append(tuple(vals))
    leftover = _X_RE.sub("", body).replace(",", "").strip()
    if leftover:
        raise DiagramError(f"unexpected text in PD code: {leftover[:40]!r}")
    return tuples


def parse_pd(text: str, free_loops: int = 0) -> LinkDiagram:
    """Parse ``PD[X[a,b,c,d],...]`` into an oriented diagram.

    Orientation comes from the under-strands (``a -> c``).  A component that
    only ever passes over is oriented along increasing edge labels, which
    must then be consecutive.  Such a component with only two edges reads
    the same both ways round, so its orientation is a guess.  Edges are renumbered; components are ordered
    by their smallest original label, and each starts at that label.
    """
    xs = _parse_pd_tuples(text)
    occ: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(xs):
        for k, e in enumerate(x):
            occ.setdefault(e, []).append((i, k))
    for e, where in occ.items():
        if len(where) != 2:
            raise DiagramError(f"edge label {e} occurs {len(where)} times (expected 2)")

    # trace unoriented strands: arriving at slot (i, k), leave through (i, k+2)
    def other(e, slot):
        a, b = occ[e]
        return b if a == slot else a

    unused = set(occ)
    cycles = []
    for e0 in sorted(occ):
        if e0 not in unused:
            continue
        cyc = []  # (edge, head slot, tail slot) in walking direction
        e, head = e0, occ[e0][0]
        tail = other(e0, head)
        while True:
            if e not in unused:
                if e == e0 and cyc and head == cyc[0][1]:
                    break
                raise DiagramError("inconsistent traversal in PD code")
            unused.discard(e)
            cyc.append((e, head, tail))
            i, k = head
            tail = (i, (k + 2) % 4)
            e = xs[i][tail[1]]
            head = other(e, tail)
        cycles.append(cyc)

    oriented = []  # per component: [(edge, head slot)] starting at the smallest label
    for cyc in cycles:
        votes = {h[1] == 0 for _, h, _ in cyc if h[1] in (0, 2)}
        if votes == {True}:
            fwd = True
        elif votes == {False}:
            fwd = False
        elif not votes:
            fwd = _increasing_orientation([e for e, _, _ in cyc])
        else:
            raise DiagramError("under-strands disagree on the orientation of a component")
        if fwd:
            seq = [(e, h) for e, h, _ in cyc]
        else:
            seq = [(e, t) for e, _, t in reversed(cyc)]
        lo = min(range(len(seq)), key=lambda j: seq[j][0])
        oriented.append(seq[lo:] + seq[:lo])
    oriented.sort(key=lambda s: s[0][0])
    head_of = {e: h for seq in oriented for e, h in seq}

    signs = []
    for i, x in enumerate(xs):
        if head_of.get(x[0]) != (i, 0):
            raise DiagramError(f"crossing {i} under-strand does not enter at the first slot")
        if head_of.get(x[3]) == (i, 3):
            signs.append(1)
        elif head_of.get(x[1]) == (i, 1):
            signs.append(-1)
        else:
            raise DiagramError(f"cannot orient the over-strand of crossing {i}")
    gauss = []
    for seq in oriented:
        gauss.append(tuple((h[0], h[1] % 2 == 1) for _, h in seq))
    gauss.extend(() for _ in range(free_loops))
    return LinkDiagram(tuple(gauss), tuple(signs))


def _increasing_orientation(seq) -> bool:
    """True if walking ``seq`` forwards follows increasing consecutive labels."""
    m = len(seq)
    fwd = sum(1 for j in range(m) if seq[(j + 1) % m] == seq[j] + 1)
    bwd = sum(1 for j in range(m) if seq[(j + 1) % m] == seq[j] - 1)
    if fwd >= m - 1 and fwd >= bwd:
        return True
    if bwd >= m - 1:
        return False
    raise DiagramError("component passes over everywhere and its edge labels are not consecutive")


# --------------------------------------------------------------------------
# constructors


def braid_closure(b: BraidWord) -> LinkDiagram:
    """Standard closure; component ``k`` starts at the bottom of its lowest strand."""
    # σ_i: the strand entering at position i (left) goes over for +, under for -
    start_seen = [False] * b.strands
    gauss = []
    for start in range(b.strands):
        if start_seen[start]:
            continue
        visits = []
        pos = start
        while True:
            start_seen[pos] = True
            for t, x in enumerate(b.letters):
                i = abs(x) - 1
                if pos == i:
                    visits.append((t, x > 0))
                    pos = i + 1
                elif pos == i + 1:
                    visits.append((t, x < 0))
                    pos = i
            if pos == start:
                break
        gauss.append(tuple(visits))
    signs = tuple(1 if x > 0 else -1 for x in b.letters)
    return _normalized(gauss, signs)


def axis_cable_word(b: BraidWord, r: int = 1, convention: str = "over_first") -> tuple[BraidWord, list[int]]:
    """Braid on ``s + r`` strands whose closure is ``closure(b)`` plus ``r`` parallel axis loops.

    Returns the word and the starting positions of the axis strands.
    ``over_first``: the axis block sits left of ``b`` and sweeps right in
    front of every strand, then back behind them.  ``under_first``: the
    block sits on the right and first sweeps left behind the strands.
    Both give positive crossings, so each copy links each strand ``+1``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    s = b.strands
    word = []
    if convention == "over_first":
        # block at 0..r-1 (1-based positions 1..r); strands of b at r+1..r+s
        p = 1  # 1-based position of the block's left end
        for _ in range(s):
            # strand at p+r moves left under the block
            word.extend(range(p + r - 1, p - 1, -1))
            p += 1
        for _ in range(s):
            # strand at p-1 moves right over the block
            word.extend(range(p - 1, p + r - 1))
            p -= 1
        body = b.shifted(r, s + r)
        axis_pos = list(range(r))
    elif convention == "under_first":
        # block at s+1..s+r sweeps left behind the strands, then right in front
        p = s + 1
        for _ in range(s):
            # strand at p-1 moves right over the block
            word.extend(range(p - 1, p + r - 1))
            p -= 1
        for _ in range(s):
            # strand at p+r moves left under the block
            word.extend(range(p + r - 1, p - 1, -1))
            p += 1
        body = BraidWord(s + r, b.letters)
        axis_pos = list(range(s, s + r))
    else:
        raise ValueError(f"unknown axis convention {convention!r}")
    return BraidWord(s + r, tuple(word)) * body, axis_pos


def add_axis_cable(b: BraidWord, r: int = 1, convention: str = "over_first") -> LinkDiagram:
    """Closure of ``b`` together with ``r`` parallel copies of its braid axis.

    The closure's own components come first (numbered as in
    ``braid_closure(b)``); the ``r`` axis copies are the last components and
    are flagged in ``axis``.
    """
    word, axis_pos = axis_cable_word(b, r, convention)
    d = braid_closure(word)
    # components of the closure are ordered by lowest starting position; axis strands are pure
    perm = braid_permutation(word)
    cycles = permutation_cycles(perm)
    axis_idx = [k for k, cyc in enumerate(cycles) if cyc[0] in axis_pos]
    rest = [k for k in range(len(cycles)) if k not in axis_idx]
    n = len(rest)
    return d.reorder(rest + axis_idx).with_axis(range(n, n + r))


# --------------------------------------------------------------------------
# linking numbers


@dataclass(frozen=True)
class LinkingData:
    matrix: tuple[tuple[int, ...], ...]
    writhe: int
    total: int  # sum over pairs i < j

    def lk(self, i: int, j: int) -> int:
        return self.matrix[i][j]


def linking_data(d: LinkDiagram) -> LinkingData:
    n = d.n_components
    twice = [[0] * n for _ in range(n)]
    for c, (u, o) in enumerate(d.crossing_components()):
        if u != o:
            twice[u][o] += d.signs[c]
            twice[o][u] += d.signs[c]
    matrix = []
    for row in twice:
        out = []
        for x in row:
            if x % 2:
                raise DiagramError("odd signed crossing count between two components")
            out.append(x // 2)
        matrix.append(tuple(out))
    total = sum(matrix[i][j] for i in range(n) for j in range(i + 1, n))
    return LinkingData(tuple(matrix), d.writhe(), total)


# --------------------------------------------------------------------------
# transformers


def sublink(d: LinkDiagram, keep: Iterable[int]) -> LinkDiagram:
    """Delete every component not in ``keep``; the kept strands pass straight through."""
    keep = sorted(set(keep))
    if not keep:
        raise ValueError("sublink needs at least one component")
    for k in keep:
        if not 0 <= k < d.n_components:
            raise ValueError(f"component {k} out of range")
    owners = d.crossing_components()
    kept = set(keep)
    alive = {c for c, (u, o) in enumerate(owners) if u in kept and o in kept}
    gauss = [tuple(v for v in d.gauss[k] if v[0] in alive) for k in keep]
    axis = {i for i, k in enumerate(keep) if k in d.axis}
    return _normalized(gauss, d.signs, axis)


def reverse_component(d: LinkDiagram, k: int) -> LinkDiagram:
    if not 0 <= k < d.n_components:
        raise ValueError(f"component {k} out of range")
    comp = d.gauss[k]
    owners = d.crossing_components()
    signs = list(d.signs)
    for c, (u, o) in enumerate(owners):
        if (u == k) != (o == k):
            signs[c] = -signs[c]
    rev = (comp[0],) + tuple(reversed(comp[1:])) if comp else ()
    gauss = list(d.gauss)
    gauss[k] = rev
    return _normalized(gauss, signs, d.axis)


def mirror(d: LinkDiagram) -> LinkDiagram:
    gauss = [tuple((c, not o) for c, o in comp) for comp in d.gauss]
    return LinkDiagram(tuple(gauss), tuple(-s for s in d.signs), d.axis)


def disjoint_union(a: LinkDiagram, b: LinkDiagram) -> LinkDiagram:
    off = a.n_crossings
    gauss = list(a.gauss) + [tuple((c + off, o) for c, o in comp) for comp in b.gauss]
    axis = set(a.axis) | {k + a.n_components for k in b.axis}
    return LinkDiagram(tuple(gauss), a.signs + b.signs, frozenset(axis))


def switch_crossing(d: LinkDiagram, c: int) -> LinkDiagram:
    """Crossing change at ``c``: over and under swap, the sign flips."""
    if not 0 <= c < d.n_crossings:
        raise ValueError(f"crossing {c} out of range")
    gauss = [tuple((x, (not o) if x == c else o) for x, o in comp) for comp in d.gauss]
    signs = list(d.signs)
    signs[c] = -signs[c]
    return LinkDiagram(tuple(gauss), tuple(signs), d.axis)


def smooth_crossing(d: LinkDiagram, c: int) -> LinkDiagram:
    """Orientation-respecting smoothing at ``c``.

    Each incoming strand continues along the other strand's outgoing edge.
    Two components through ``c`` merge; a self-crossing splits its
    component in two.  The merged component takes the lower index; a split
    keeps the old index for the piece through the old basepoint and appends
    the other piece.  Axis flags survive only on untouched components.
    """
    if not 0 <= c < d.n_crossings:
        raise ValueError(f"crossing {c} out of range")
    where = []
    for k, comp in enumerate(d.gauss):
        for i, (x, _) in enumerate(comp):
            if x == c:
                where.append((k, i))
    (ka, ia), (kb, ib) = where
    gauss = [list(comp) for comp in d.gauss]
    axis = set(d.axis)
    if ka == kb:
        s = gauss[ka]
        first = s[ib + 1:] + s[:ia]
        second = s[ia + 1:ib]
        # keep the piece containing position 0 in place
        if ia == 0:
            first, second = second, first
        gauss[ka] = first
        gauss.append(second)
        axis.discard(ka)
    else:
        A, B = gauss[ka], gauss[kb]
        merged = A[ia + 1:] + A[:ia] + B[ib + 1:] + B[:ib]
        lo, hi = min(ka, kb), max(ka, kb)
        gauss[lo] = merged
        del gauss[hi]
        axis = {a if a < hi else a - 1 for a in axis if a not in (ka, kb)}
    signs = list(d.signs)
    return _normalized(gauss, signs, axis)

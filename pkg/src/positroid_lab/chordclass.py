"""Decorated permutations and the pattern classification of their chord diagrams.

Arcs are identified by their tail ``i``; the arc is ``i -> w(i)``.  Each arc
is lifted to an integer interval ``[i, f(i)]`` with ``i <= f(i) <= i + n``
(a bounded affine permutation).  Counterclockwise loops lift to ``[i, i]``
and clockwise loops to ``[i, i + n]``.  Two arcs are then compared by
placing one at its base ``i`` and lifting the other into ``(i, i + n)``:

* strict nesting in either placement is an alignment,
* otherwise, for two non-loops, interleaving ``j <= f(i) < f(j) <= i + n``
  is a crossing (arcs meeting head to tail cross),
* anything else is a misalignment.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import InvariantError, ParseError
from .permcore import Permutation, identity, inverse, perm

__all__ = [
    "DecoratedPermutation", "BoundedAffineArc", "PairRelation",
    "parse_decorated", "to_affine", "classify_pair", "relation_matrix",
    "alignments", "crossings", "misalignments", "crossed_alignments",
    "rotate", "reflect", "reverse_arcs", "remove_fixed_point",
    "crossing_components", "restrict_to", "spirograph_blocks", "is_spirograph_union",
    "arc_label",
]

CLOCKWISE = "+"
COUNTERCLOCKWISE = "-"


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation with every fixed point marked clockwise or counterclockwise.

    Fixed points not listed in ``clockwise`` are counterclockwise.
    """

    perm: Permutation
    clockwise: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "perm", perm(self.perm))
        object.__setattr__(self, "clockwise", frozenset(self.clockwise))
        bad = [i for i in self.clockwise if not (1 <= i <= self.n and self.perm[i - 1] == i)]
        if bad:
            raise InvariantError(f"clockwise marks on non-fixed points {sorted(bad)}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def k(self) -> int:
        """Number of anti-exceedances."""
        winv = inverse(self.perm)
        return sum(1 for i in range(1, self.n + 1)
                   if i < winv[i - 1] or i in self.clockwise)

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.perm, 1) if i == x]

    def is_derangement(self) -> bool:
        return not self.fixed_points()

    def __str__(self) -> str:
        parts = []
        for i, x in enumerate(self.perm, 1):
            if x == i:
                parts.append(f"{x}{CLOCKWISE if i in self.clockwise else COUNTERCLOCKWISE}")
            else:
                parts.append(str(x))
        return ",".join(parts)

    @classmethod
    def parse(cls, text: str) -> "DecoratedPermutation":
        return parse_decorated(text)

    @classmethod
    def from_perm(cls, w: Iterable[int], clockwise: Iterable[int] = ()) -> "DecoratedPermutation":
        return cls(perm(w), frozenset(clockwise))


def parse_decorated(text: str) -> DecoratedPermutation:
    """Read ``"5,7,3-,6,4,9,2,8+,1"``; a bare fixed point is counterclockwise.

    The typographic minus sign is accepted in place of ``-``.
    """
    text = text.strip().replace("−", "-")
    if not text:
        return DecoratedPermutation(identity(0))
    values, cw = [], set()
    for pos, token in enumerate(text.split(","), 1):
        token = token.strip()
        mark = ""
        if token.endswith((CLOCKWISE, COUNTERCLOCKWISE)):
            token, mark = token[:-1], token[-1]
        try:
            x = int(token)
        except ValueError as exc:
            raise ParseError(f"cannot parse decorated permutation {text!r}") from exc
        if mark and x != pos:
            raise InvariantError(f"orientation mark on non-fixed position {pos}")
        if mark == CLOCKWISE:
            cw.add(pos)
        values.append(x)
    return DecoratedPermutation(perm(values), frozenset(cw))


class BoundedAffineArc(NamedTuple):
    base: int
    target: int


class PairRelation(enum.Enum):
    ALIGNMENT = "alignment"
    CROSSING = "crossing"
    MISALIGNMENT = "misalignment"


def to_affine(wd: DecoratedPermutation) -> list[BoundedAffineArc]:
    n = wd.n
    arcs = []
    for i, x in enumerate(wd.perm, 1):
        if x > i:
            f = x
        elif x < i:
            f = x + n
        else:
            f = i + n if i in wd.clockwise else i
        arcs.append(BoundedAffineArc(i, f))
    return arcs


def _is_loop(arc: BoundedAffineArc, n: int) -> bool:
    return arc.target in (arc.base, arc.base + n)


def classify_pair(a: BoundedAffineArc, b: BoundedAffineArc, n: int) -> PairRelation:
    if (a.base - b.base) % n == 0:
        raise InvariantError(f"arcs share base {a.base}")
    crossing = False
    for (i, fi), (j, fj) in ((a, b), (b, a)):
        shift = n if j < i else 0
        j, fj = j + shift, fj + shift
        if fj < fi:
            return PairRelation.ALIGNMENT
        # interleaved, and the head of the second arc does not wrap past i
        if j <= fi < fj <= i + n:
            crossing = True
    if crossing and not (_is_loop(a, n) or _is_loop(b, n)):
        return PairRelation.CROSSING
    return PairRelation.MISALIGNMENT


def relation_matrix(wd: DecoratedPermutation) -> dict[tuple[int, int], PairRelation]:
    """Relation of every unordered pair of arcs, keyed by increasing tail pairs."""
    arcs = to_affine(wd)
    n = wd.n
    return {(a.base, b.base): classify_pair(a, b, n) for a, b in combinations(arcs, 2)}


def _pairs_with(wd: DecoratedPermutation, rel: PairRelation) -> set[tuple[int, int]]:
    return {p for p, r in relation_matrix(wd).items() if r is rel}


def alignments(wd: DecoratedPermutation) -> set[tuple[int, int]]:
    """Aligned arc pairs, each as the increasing pair of tails."""
    return _pairs_with(wd, PairRelation.ALIGNMENT)


def crossings(wd: DecoratedPermutation) -> set[tuple[int, int]]:
    return _pairs_with(wd, PairRelation.CROSSING)


def misalignments(wd: DecoratedPermutation) -> set[tuple[int, int]]:
    return _pairs_with(wd, PairRelation.MISALIGNMENT)


def crossed_alignments(wd: DecoratedPermutation,
                       relations: dict | None = None) -> list[tuple[tuple[int, int], int]]:
    """Triples ``((p, q), h)``: alignment ``{p, q}`` crossed by arc ``h``.

    Sorted by witness tail, then alignment.
    """
    rel = relations if relations is not None else relation_matrix(wd)
    n = wd.n
    cross = [[False] * (n + 1) for _ in range(n + 1)]
    for (p, q), r in rel.items():
        if r is PairRelation.CROSSING:
            cross[p][q] = cross[q][p] = True
    out = []
    for (p, q), r in rel.items():
        if r is not PairRelation.ALIGNMENT:
            continue
        for h in range(1, n + 1):
            if cross[h][p] and cross[h][q]:
                out.append(((p, q), h))
    out.sort(key=lambda t: (t[1], t[0]))
    return out


def _conjugate(wd: DecoratedPermutation, sigma, toggle: bool) -> DecoratedPermutation:
    """Relabel every vertex i as sigma(i), optionally flipping loop orientations."""
    n = wd.n
    new = [0] * n
    for i, x in enumerate(wd.perm, 1):
        new[sigma(i) - 1] = sigma(x)
    fixed = wd.fixed_points()
    if toggle:
        cw = {sigma(i) for i in fixed if i not in wd.clockwise}
    else:
        cw = {sigma(i) for i in wd.clockwise}
    return DecoratedPermutation(Permutation(tuple(new)), frozenset(cw))


def rotate(wd: DecoratedPermutation, s: int = 1) -> DecoratedPermutation:
    """Move vertex i to i + s (mod n), decorations carried along."""
    n = wd.n
    if n == 0:
        return wd
    return _conjugate(wd, lambda i: (i - 1 + s) % n + 1, toggle=False)


def reflect(wd: DecoratedPermutation) -> DecoratedPermutation:
    """Mirror the circle through vertex 1: i -> n + 2 - i (mod n).

    Loop orientations flip since the sense of the circle reverses.  This
    exchanges k and n - k.
    """
    n = wd.n
    if n == 0:
        return wd
    return _conjugate(wd, lambda i: (n + 1 - i) % n + 1, toggle=True)


def reverse_arcs(wd: DecoratedPermutation) -> DecoratedPermutation:
    inv = inverse(wd.perm)
    cw = frozenset(i for i in wd.fixed_points() if i not in wd.clockwise)
    return DecoratedPermutation(inv, cw)


def remove_fixed_point(wd: DecoratedPermutation, i: int) -> DecoratedPermutation:
    if not (1 <= i <= wd.n and wd(i) == i):
        raise InvariantError(f"{i} is not a fixed point of {wd}")
    shrink = lambda x: x - 1 if x > i else x  # noqa: E731
    values = [shrink(x) for x in wd.perm if x != i]
    cw = {shrink(c) for c in wd.clockwise if c != i}
    return DecoratedPermutation(Permutation(tuple(values)), frozenset(cw))


def crossing_components(wd: DecoratedPermutation,
                        relations: dict | None = None) -> list[list[int]]:
    """Finest partition of the arcs into sub-permutations with no crossing between parts.

    Arcs are joined when they cross or when one ends where the other
    starts (same cycle), so each part is a union of cycles and the vertex
    support of a part equals its set of tails.  Parts are sorted lists of
    tails, ordered by smallest tail.
    """
    rel = relations if relations is not None else relation_matrix(wd)
    parent = list(range(wd.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (p, q), r in rel.items():
        if r is PairRelation.CROSSING:
            parent[find(p)] = find(q)
    for i in range(1, wd.n + 1):
        parent[find(i)] = find(wd(i))
    groups: dict[int, list[int]] = {}
    for i in range(1, wd.n + 1):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def restrict_to(wd: DecoratedPermutation, support) -> DecoratedPermutation:
    """The sub-permutation on a ``w``-stable set of vertices, relabeled 1..m in order."""
    support = sorted(support)
    pos = {x: idx for idx, x in enumerate(support, 1)}
    if any(wd(x) not in pos for x in support):
        raise InvariantError(f"{support} is not a union of cycles of {wd}")
    values = tuple(pos[wd(x)] for x in support)
    cw = frozenset(pos[x] for x in support if x in wd.clockwise)
    return DecoratedPermutation(Permutation(values), cw)


def _is_noncrossing(blocks: list[list[int]]) -> bool:
    owner = {}
    for b, block in enumerate(blocks):
        for x in block:
            owner[x] = b
    for b1, b2 in combinations(range(len(blocks)), 2):
        for a, c in combinations(sorted(blocks[b1]), 2):
            inside = [owner[x] == b2 for x in range(a + 1, c)]
            outside = [owner[x] == b2 for x in range(1, len(owner) + 1)
                       if not a <= x <= c]
            if any(inside) and any(outside):
                return False
    return True


def spirograph_blocks(wd: DecoratedPermutation) -> list[tuple[list[int], int]] | None:
    """Blocks with their shifts ``t`` if the diagram is a union of spirographs."""
    blocks = crossing_components(wd)
    if not _is_noncrossing(blocks):
        return None
    out = []
    for block in blocks:
        m = len(block)
        pos = {x: idx for idx, x in enumerate(block)}
        shifts = {(pos[wd(x)] - pos[x]) % m for x in block}
        if len(shifts) != 1:
            return None
        t = shifts.pop() or m
        out.append((block, t))
    return out


def is_spirograph_union(wd: DecoratedPermutation) -> bool:
    return spirograph_blocks(wd) is not None


def arc_label(wd: DecoratedPermutation, i: int) -> str:
    """Human-readable arc, e.g. ``2->7`` or ``8+`` for a clockwise loop."""
    x = wd(i)
    if x == i:
        return f"{i}{CLOCKWISE if i in wd.clockwise else COUNTERCLOCKWISE}"
    return f"{i}->{x}"

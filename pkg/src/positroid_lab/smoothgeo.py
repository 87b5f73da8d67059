"""Codimension, tangent spaces at torus-fixed points, and the smoothness criteria.

The four combinatorial criteria are computed along separate routes so that
building a `SmoothnessReport` doubles as a consistency check:

``degree``
    every basis has exactly ``k(n-k) - codim`` basis neighbours, counted by
    trying all single exchanges of that basis;
``regular``
    the Johnson graph of the positroid, built from pairwise intersections,
    is regular of that degree;
``crossed``
    no crossed alignment in the chord diagram;
``spirograph``
    the chord diagram splits into spirographs over a noncrossing partition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .chordclass import (
    DecoratedPermutation, alignments, arc_label, crossed_alignments,
    is_spirograph_union, reflect, rotate,
)
from .errors import InvariantError
from .permcore import KSubset, Permutation, inverse, length
from .posbij import (
    Positroid, interval_from_decorated_perm, positroid_of,
    shifted_anti_exceedance_set,
)

__all__ = [
    "CRITERIA", "ConsistencyError", "JohnsonGraphView", "SmoothnessReport",
    "codimension", "tangent_codim", "johnson_graph", "basis_degree",
    "is_smooth", "singular_fixed_points", "smoothness_report",
    "anti_exchange_pairs", "anti_exchange_pairs_direct",
    "anti_exchange_pairs_by_intervals", "psi_map", "canonicalize_crossed",
    "dihedral_image",
]

CRITERIA = ("degree", "regular", "crossed", "spirograph")


class ConsistencyError(AssertionError):
    """Two routes to the same quantity disagree."""


def codimension(wd: DecoratedPermutation) -> int:
    """Number of alignments, checked against ``k(n-k) - (l(v) - l(u))``."""
    by_count = len(alignments(wd))
    I = interval_from_decorated_perm(wd)
    by_length = I.k * (I.n - I.k) - (length(I.v) - length(I.u))
    if by_count != by_length:
        raise ConsistencyError(
            f"{wd}: {by_count} alignments but interval formula gives {by_length}")
    return by_count


def _exchanges(J: KSubset, n: int):
    """All k-subsets sharing k-1 elements with ``J``."""
    Js = set(J)
    rest = [b for b in range(1, n + 1) if b not in Js]
    for a in J:
        base = Js - {a}
        for b in rest:
            yield KSubset(tuple(sorted(base | {b})))


def tangent_codim(M: Positroid, J: Iterable[int]) -> int:
    """Count of non-bases adjacent to ``J`` in the full Johnson graph."""
    J = KSubset(tuple(sorted(J)))
    if J not in M.bases:
        raise InvariantError(f"{J} is not a basis")
    return sum(1 for I in _exchanges(J, M.n) if I not in M.bases)


def basis_degree(M: Positroid, J: Iterable[int]) -> int:
    J = KSubset(tuple(sorted(J)))
    return sum(1 for I in _exchanges(J, M.n) if I in M.bases)


@dataclass(frozen=True)
class JohnsonGraphView:
    positroid: Positroid
    adjacency: dict = field(repr=False)

    @property
    def degrees(self) -> dict[KSubset, int]:
        return {J: len(nbrs) for J, nbrs in self.adjacency.items()}

    def edges(self) -> list[tuple[KSubset, KSubset]]:
        return sorted((I, J) for I, nbrs in self.adjacency.items() for J in nbrs if I < J)

    def is_regular(self) -> bool:
        return len(set(self.degrees.values())) <= 1


def johnson_graph(M: Positroid) -> JohnsonGraphView:
    k = M.k
    adj: dict[KSubset, set] = {J: set() for J in M.bases}
    for I, J in combinations(M.sorted_bases(), 2):
        if len(set(I) & set(J)) == k - 1:
            adj[I].add(J)
            adj[J].add(I)
    return JohnsonGraphView(M, {J: frozenset(s) for J, s in adj.items()})


def _verdicts(wd: DecoratedPermutation, M: Positroid | None, codim: int,
              criteria: Iterable[str]) -> dict[str, bool]:
    """``M`` and ``codim`` are only consulted by the degree and regular criteria."""
    target = M.k * (M.n - M.k) - codim if M is not None else None
    out = {}
    for c in criteria:
        if c == "degree":
            out[c] = all(basis_degree(M, J) == target for J in M.bases)
        elif c == "regular":
            degs = set(johnson_graph(M).degrees.values())
            out[c] = degs == {target}
        elif c == "crossed":
            out[c] = not crossed_alignments(wd)
        elif c == "spirograph":
            out[c] = is_spirograph_union(wd)
        else:
            raise ValueError(f"unknown criterion {c!r}; expected one of {CRITERIA}")
    return out


def is_smooth(wd: DecoratedPermutation, criterion: str = "crossed") -> bool:
    if criterion in ("crossed", "spirograph"):
        return _verdicts(wd, None, 0, [criterion])[criterion]
    M = positroid_of(wd)
    return _verdicts(wd, M, codimension(wd), [criterion])[criterion]


def singular_fixed_points(wd: DecoratedPermutation, M: Positroid | None = None) -> set[KSubset]:
    M = M or positroid_of(wd)
    codim = codimension(wd)
    return {J for J in M.bases if tangent_codim(M, J) < codim}


@dataclass
class SmoothnessReport:
    decorated: str
    n: int
    k: int
    codim: int
    degrees: dict
    tangent_codims: dict
    verdicts: dict
    singular_points: list
    witness: tuple | None
    witness_labels: tuple | None = None
    jacobian_ranks: dict | None = None

    @property
    def smooth(self) -> bool:
        return not self.singular_points

    def to_json(self) -> dict:
        fmt = lambda J: ",".join(map(str, J))  # noqa: E731
        out = {
            "decorated": self.decorated,
            "n": self.n,
            "k": self.k,
            "codim": self.codim,
            "smooth": self.smooth,
            "degrees": {fmt(J): d for J, d in sorted(self.degrees.items())},
            "tangent_codims": {fmt(J): t for J, t in sorted(self.tangent_codims.items())},
            "verdicts": dict(self.verdicts),
            "singular_points": [list(J) for J in self.singular_points],
            "witness": None,
        }
        if self.witness is not None:
            (p, q), h = self.witness
            out["witness"] = {
                "alignment": list(self.witness_labels[0]),
                "crossing": self.witness_labels[1],
                "tails": {"alignment": [p, q], "crossing": h},
            }
        if self.jacobian_ranks is not None:
            out["jacobian_ranks"] = {fmt(J): r for J, r in sorted(self.jacobian_ranks.items())}
        return out


def smoothness_report(wd: DecoratedPermutation,
                      criteria: Iterable[str] = CRITERIA) -> SmoothnessReport:
    """Evaluate the requested criteria and the torus-fixed-point test together.

    Raises `ConsistencyError` if any two verdicts disagree.
    """
    M = positroid_of(wd)
    codim = codimension(wd)
    tangents = {J: tangent_codim(M, J) for J in M.bases}
    target = M.k * (M.n - M.k)
    degrees = {J: target - t for J, t in tangents.items()}
    verdicts = _verdicts(wd, M, codim, criteria)
    singular = sorted(J for J, t in tangents.items() if t < codim)
    verdicts["tangent"] = not singular
    if len(set(verdicts.values())) > 1:
        raise ConsistencyError(f"{wd}: criteria disagree: {verdicts}")
    crossed = crossed_alignments(wd)
    witness = crossed[0] if crossed else None
    labels = None
    if witness:
        (p, q), h = witness
        labels = ((arc_label(wd, p), arc_label(wd, q)), arc_label(wd, h))
    return SmoothnessReport(str(wd), wd.n, M.k, codim, degrees, tangents,
                            verdicts, singular, witness, labels)


# --- anti-exchange pairs and the map into alignments -----------------------

def _as_derangement(w) -> Permutation:
    p = w.perm if isinstance(w, DecoratedPermutation) else Permutation(tuple(w))
    if any(x == i for i, x in enumerate(p, 1)):
        raise InvariantError(f"{','.join(map(str, p))} is not a derangement")
    return p


def anti_exchange_pairs_direct(w) -> set[tuple[int, int]]:
    """Pairs ``(a, b)``, ``a`` in ``J = I_1(w)``, ``b`` not, with ``J - a + b`` a non-basis."""
    w = _as_derangement(w)
    wd = DecoratedPermutation(w)
    M = positroid_of(wd)
    J = set(shifted_anti_exceedance_set(wd, 1))
    out = set()
    for a in J:
        for b in range(1, len(w) + 1):
            if b not in J and tuple(sorted((J - {a}) | {b})) not in M.bases:
                out.add((a, b))
    return out


def _cond1(winv, a: int, r: int) -> bool:
    return any(winv[x - 1] >= r for x in range(a, r))


def _cond2(winv, b: int, r: int) -> bool:
    return any(winv[y - 1] <= r - 1 for y in range(r, b + 1))


def anti_exchange_pairs_by_intervals(w) -> set[tuple[int, int]]:
    """The same pairs read off from the two interval conditions on ``w^-1``."""
    w = _as_derangement(w)
    winv = inverse(w)
    J = set(shifted_anti_exceedance_set(DecoratedPermutation(w), 1))
    out = set()
    for a in J:
        for b in range(1, len(w) + 1):
            if b in J:
                continue
            if b < a or not all(_cond1(winv, a, r) and _cond2(winv, b, r)
                                for r in range(a + 1, b + 1)):
                out.add((a, b))
    return out


def anti_exchange_pairs(w) -> set[tuple[int, int]]:
    direct = anti_exchange_pairs_direct(w)
    by_intervals = anti_exchange_pairs_by_intervals(w)
    if direct != by_intervals:
        raise ConsistencyError(f"anti-exchange pairs disagree: {direct} vs {by_intervals}")
    return direct


def psi_map(w, pair: tuple[int, int]) -> tuple[int, int]:
    """Send an anti-exchange pair of ``I_1(w)`` to an alignment (pair of arc tails).

    For ``a < b`` with the first interval condition failing, take the least
    failing ``r``, walk backwards from ``b`` along its cycle to the first
    element ``c >= r`` (possibly ``b`` itself after a full turn) and return
    ``(c -> w(c), w^-1(a) -> a)``.  When only the second condition fails the
    construction is mirrored: greatest failing ``r``, walk back from ``a`` to
    the first ``c <= r - 1``, return ``(c -> w(c), w^-1(b) -> b)``.
    """
    w = _as_derangement(w)
    a, b = pair
    if pair not in anti_exchange_pairs_by_intervals(w):
        raise InvariantError(f"{pair} is not an anti-exchange pair")
    winv = inverse(w)
    if b < a:
        return tuple(sorted((winv[b - 1], winv[a - 1])))
    fail1 = [r for r in range(a + 1, b + 1) if not _cond1(winv, a, r)]
    if fail1:
        r = min(fail1)
        c = winv[b - 1]
        while c < r:
            c = winv[c - 1]
        return tuple(sorted((c, winv[a - 1])))
    fail2 = [r for r in range(a + 1, b + 1) if not _cond2(winv, b, r)]
    r = max(fail2)
    c = winv[a - 1]
    while c > r - 1:
        c = winv[c - 1]
    return tuple(sorted((c, winv[b - 1])))


def dihedral_image(wd: DecoratedPermutation, s: int, reflected: bool) -> DecoratedPermutation:
    """Reflect first (if asked), then rotate by ``s``."""
    return rotate(reflect(wd) if reflected else wd, s)


def _canonical_witness(wd: DecoratedPermutation):
    m = wd(1)
    for (p, q), h in crossed_alignments(wd):
        if h != 1:
            continue
        # members start inside the witness span (or at its head) and end outside
        if all(1 < t <= m and not 1 < wd(t) < m for t in (p, q)):
            return (p, q), h
    return None


def canonicalize_crossed(wd: DecoratedPermutation) -> tuple[int, bool]:
    """Least ``(s, reflected)`` putting a crossed alignment in standard position.

    In the image, arc ``1 -> w(1)`` crosses an alignment whose two members
    have tails in ``(1, w(1)]`` and heads outside ``(1, w(1))``.
    """
    for s in range(wd.n):
        for reflected in (False, True):
            if _canonical_witness(dihedral_image(wd, s, reflected)):
                return s, reflected
    raise InvariantError(f"{wd} has no crossed alignment in standard position")

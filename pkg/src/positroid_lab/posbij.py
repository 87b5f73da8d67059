"""Bijections between decorated permutations, Grassmann necklaces, positroids
and Bruhat intervals, plus matroids of exact rational matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .chordclass import DecoratedPermutation
from .errors import InvariantError
from .exact import RationalMatrix
from .permcore import (
    KSubset, Permutation, bruhat_interval, bruhat_leq_grassmannian,
    format_perm, grassmannian_perm, identity, initial_set, inverse,
    is_k_grassmannian, multiply, shifted_key, subset,
)

__all__ = [
    "GrassmannNecklace", "Positroid", "BruhatInterval",
    "shifted_anti_exceedance_set", "grassmann_necklace",
    "decorated_perm_from_necklace", "positroid_from_necklace",
    "necklace_from_positroid", "is_positroid", "interval_from_decorated_perm",
    "decorated_perm_from_interval", "positroid_from_interval",
    "positroid_of", "matroid_of_matrix", "is_totally_nonnegative",
    "verify_basis_exchange",
]


@dataclass(frozen=True)
class GrassmannNecklace:
    n: int
    entries: tuple

    def __post_init__(self):
        entries = tuple(subset(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        n = self.n
        if len(entries) != n:
            raise InvariantError(f"necklace needs {n} entries, got {len(entries)}")
        if len({len(e) for e in entries}) > 1:
            raise InvariantError("necklace entries differ in size")
        for r in range(1, n + 1):
            cur, nxt = set(entries[r - 1]), set(entries[r % n])
            if not cur <= set(range(1, n + 1)):
                raise InvariantError(f"entry {r} leaves [{n}]")
            if not (cur - {r}) <= nxt:
                raise InvariantError(f"I_{r % n + 1} does not contain I_{r} minus {r}")
            if r not in cur and cur != nxt:
                raise InvariantError(f"{r} not in I_{r} but I_{r % n + 1} differs")

    @property
    def k(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, r: int) -> KSubset:
        """1-based access, ``necklace[r] == I_r``."""
        return self.entries[r - 1]

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [list(e) for e in self.entries]}


@dataclass(frozen=True)
class Positroid:
    n: int
    k: int
    bases: frozenset

    def __post_init__(self):
        object.__setattr__(self, "bases", frozenset(subset(b) for b in self.bases))
        if not self.bases:
            raise InvariantError("a positroid has at least one basis")
        if any(len(b) != self.k for b in self.bases):
            raise InvariantError(f"bases must all have size {self.k}")

    def __contains__(self, J) -> bool:
        return tuple(J) in self.bases

    def __len__(self) -> int:
        return len(self.bases)

    def sorted_bases(self) -> list[KSubset]:
        return sorted(self.bases)

    def non_bases(self) -> list[KSubset]:
        return [KSubset(c) for c in combinations(range(1, self.n + 1), self.k)
                if c not in self.bases]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "bases": [list(b) for b in self.sorted_bases()]}


@dataclass(frozen=True)
class BruhatInterval:
    u: Permutation
    v: Permutation
    k: int

    def __post_init__(self):
        if len(self.u) != len(self.v):
            raise InvariantError("interval endpoints differ in size")
        if not is_k_grassmannian(self.v, self.k):
            raise InvariantError(f"{format_perm(self.v)} is not {self.k}-Grassmannian")
        if not bruhat_leq_grassmannian(self.u, self.v, self.k):
            raise InvariantError(f"{format_perm(self.u)} is not below {format_perm(self.v)}")

    @property
    def n(self) -> int:
        return len(self.u)

    def to_json(self) -> dict:
        return {"u": format_perm(self.u), "v": format_perm(self.v), "k": self.k}


def shifted_anti_exceedance_set(wd: DecoratedPermutation, r: int,
                                winv: Permutation | None = None) -> KSubset:
    winv = winv or inverse(wd.perm)
    key = shifted_key(r)
    return KSubset(tuple(
        i for i in range(1, wd.n + 1)
        if key(i) < key(winv[i - 1]) or i in wd.clockwise
    ))


def grassmann_necklace(wd: DecoratedPermutation) -> GrassmannNecklace:
    winv = inverse(wd.perm)
    return GrassmannNecklace(
        wd.n, tuple(shifted_anti_exceedance_set(wd, r, winv) for r in range(1, wd.n + 1)))


def decorated_perm_from_necklace(N: GrassmannNecklace) -> DecoratedPermutation:
    n = N.n
    w = [0] * n
    cw = set()
    for r in range(1, n + 1):
        cur, nxt = set(N[r]), set(N[r % n + 1])
        if cur == nxt:
            w[r - 1] = r
            if r in cur:
                cw.add(r)
        else:
            # I_{r+1} = (I_r \ {r}) + {w(r)}
            (j,) = nxt - (cur - {r})
            w[r - 1] = j
    if sorted(w) != list(range(1, n + 1)):
        raise InvariantError(f"necklace transitions do not give a permutation: {w}")
    return DecoratedPermutation(Permutation(tuple(w)), frozenset(cw))


def positroid_from_necklace(N: GrassmannNecklace) -> Positroid:
    n, k = N.n, N.k
    bounds = []
    for r in range(1, n + 1):
        key = shifted_key(r)
        bounds.append((key, [key(x) for x in sorted(N[r], key=key)]))
    bases = []
    for c in combinations(range(1, n + 1), k):
        for key, low in bounds:
            if any(key(x) < b for x, b in zip(sorted(c, key=key), low)):
                break
        else:
            bases.append(c)
    return Positroid(n, k, frozenset(bases))


def necklace_from_positroid(M: Positroid) -> GrassmannNecklace:
    """Minimum of the bases in each shifted Gale order.

    Raises ``InvariantError`` when some shifted order has no minimum or the
    minima do not form a necklace; neither can happen for a matroid.
    """
    entries = []
    for r in range(1, M.n + 1):
        key = shifted_key(r)
        rows = {b: [key(x) for x in sorted(b, key=key)] for b in M.bases}
        # the componentwise minimum must itself be a basis
        target = [min(col) for col in zip(*rows.values())] if M.k else []
        hits = [b for b, row in rows.items() if row == target]
        if not hits:
            raise InvariantError(f"no minimum basis in shifted Gale order {r}")
        entries.append(hits[0])
    return GrassmannNecklace(M.n, tuple(entries))


def is_positroid(bases: Iterable[Iterable[int]], n: int | None = None) -> bool:
    bases = {subset(b) for b in bases}
    if not bases:
        return False
    sizes = {len(b) for b in bases}
    if len(sizes) != 1:
        return False
    if n is None:
        n = max((max(b) for b in bases if b), default=0)
    M = Positroid(n, sizes.pop(), frozenset(bases))
    try:
        N = necklace_from_positroid(M)
    except InvariantError:
        return False
    return positroid_from_necklace(N).bases == M.bases


def interval_from_decorated_perm(wd: DecoratedPermutation) -> BruhatInterval:
    I1 = shifted_anti_exceedance_set(wd, 1)
    winv = inverse(wd.perm)
    v = grassmannian_perm(wd.n, (winv[i - 1] for i in I1))
    u = multiply(wd.perm, v)
    return BruhatInterval(u, v, len(I1))


def decorated_perm_from_interval(I: BruhatInterval) -> DecoratedPermutation:
    w = multiply(I.u, inverse(I.v))
    top = set(I.u[:I.k])
    cw = {i for i, x in enumerate(w, 1) if x == i and i in top}
    return DecoratedPermutation(w, frozenset(cw))


def positroid_from_interval(I: BruhatInterval) -> Positroid:
    return Positroid(I.n, I.k, frozenset(initial_set(y, I.k) for y in bruhat_interval(I.u, I.v)))


def positroid_of(wd: DecoratedPermutation) -> Positroid:
    """The positroid of a decorated permutation, via its necklace."""
    return positroid_from_necklace(grassmann_necklace(wd))


def matroid_of_matrix(A: RationalMatrix | list) -> set[KSubset]:
    if not isinstance(A, RationalMatrix):
        A = RationalMatrix(A)
    if A.rank() < A.k:
        raise InvariantError(f"matrix has rank {A.rank()} < {A.k}")
    return {KSubset(c) for c in combinations(range(1, A.n + 1), A.k) if A.minor(c) != 0}


def is_totally_nonnegative(A: RationalMatrix | list) -> bool:
    if not isinstance(A, RationalMatrix):
        A = RationalMatrix(A)
    return all(A.minor(c) >= 0 for c in combinations(range(1, A.n + 1), A.k))


def verify_basis_exchange(bases: Iterable[Iterable[int]]) -> bool:
    M = {frozenset(b) for b in bases}
    if not M:
        return False
    for I in M:
        for J in M:
            if I == J:
                continue
            for a in I - J:
                if not any((I - {a}) | {b} in M for b in J - I):
                    return False
    return True


def full_positroid(n: int, k: int) -> Positroid:
    return Positroid(n, k, frozenset(combinations(range(1, n + 1), k)))


def top_interval(n: int, k: int) -> BruhatInterval:
    """The interval [id, v] with v the longest k-Grassmannian permutation."""
    v = grassmannian_perm(n, range(n - k + 1, n + 1))
    return BruhatInterval(identity(n), v, k)

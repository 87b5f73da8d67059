"""Permutations of [n] in 1-based one-line notation, k-subsets, and Bruhat order.

A permutation is a plain tuple ``(w(1), ..., w(n))`` and a k-subset is a
strictly increasing tuple.  Both are hashable and cheap, which matters for
the exhaustive enumerations elsewhere in the package.

>>> length(perm("3124"))
2
>>> format_perm(inverse(perm("573649281")))
'9,7,3,5,1,4,2,8,6'
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NewType

from .errors import InvariantError, ParseError

__all__ = [
    "Permutation", "KSubset",
    "perm", "identity", "subset", "format_perm", "format_subset",
    "parse_perm", "parse_subset",
    "inverse", "length", "multiply", "initial_set", "shifted_key",
    "shifted_sort", "gale_leq", "bruhat_leq", "bruhat_leq_grassmannian",
    "is_k_grassmannian", "grassmannian_descent", "grassmannian_perm",
    "bruhat_covers", "bruhat_interval",
]

# one-line notation, values 1..n
Permutation = NewType("Permutation", tuple)

# strictly increasing tuple of elements of [n]
KSubset = NewType("KSubset", tuple)


def perm(values: Iterable[int] | str) -> Permutation:
    """Build a validated permutation from values or a string.

    Strings are either comma separated (``"5,7,3"``) or, when every value
    is a single digit, compact (``"573"``).
    """
    if isinstance(values, str):
        return parse_perm(values)
    w = tuple(int(x) for x in values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvariantError(f"not a permutation of [{len(w)}]: {w}")
    return Permutation(w)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def subset(elements: Iterable[int]) -> KSubset:
    s = tuple(sorted(int(x) for x in elements))
    if len(set(s)) != len(s):
        raise InvariantError(f"repeated element in subset {s}")
    return KSubset(s)


def format_perm(w: Permutation) -> str:
    return ",".join(map(str, w))


def format_subset(s: Iterable[int]) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def parse_perm(text: str) -> Permutation:
    text = text.strip()
    try:
        if "," in text:
            values = [int(t) for t in text.split(",")]
        elif text == "":
            values = []
        else:
            values = [int(c) for c in text]
    except ValueError as exc:
        raise ParseError(f"cannot parse permutation {text!r}") from exc
    return perm(values)


def parse_subset(text: str) -> KSubset:
    text = text.strip().strip("{}").strip()
    if not text:
        return KSubset(())
    try:
        return subset(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse subset {text!r}") from exc


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def length(w: Permutation) -> int:
    """Number of inversions of ``w``."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def multiply(w: Permutation, v: Permutation) -> Permutation:
    """Composition ``wv``, i.e. ``i -> w(v(i))``."""
    if len(w) != len(v):
        raise InvariantError(f"size mismatch: {len(w)} vs {len(v)}")
    return Permutation(tuple(w[x - 1] for x in v))


def initial_set(y: Permutation, k: int) -> KSubset:
    if not 0 <= k <= len(y):
        raise InvariantError(f"k={k} out of range for n={len(y)}")
    return KSubset(tuple(sorted(y[:k])))


def shifted_key(r: int):
    """Sort key realising the order r < r+1 < ... < n < 1 < ... < r-1."""
    return lambda x: (x < r, x)


def shifted_sort(s: Iterable[int], r: int) -> list[int]:
    return sorted(s, key=shifted_key(r))


def gale_leq(I: Iterable[int], J: Iterable[int], r: int = 1) -> bool:
    """Shifted Gale order: componentwise comparison after sorting by ``<_r``."""
    key = shifted_key(r)
    a = sorted(I, key=key)
    b = sorted(J, key=key)
    if len(a) != len(b):
        raise InvariantError(f"size mismatch: {len(a)} vs {len(b)}")
    return all(key(x) <= key(y) for x, y in zip(a, b))


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Tableau criterion: ``u[i]`` is Gale below ``v[i]`` for every i."""
    if len(u) != len(v):
        raise InvariantError(f"size mismatch: {len(u)} vs {len(v)}")
    a: list[int] = []
    b: list[int] = []
    for x, y in zip(u, v):
        a.append(x)
        b.append(y)
        a.sort()
        b.sort()
        if any(p > q for p, q in zip(a, b)):
            return False
    return True


def is_k_grassmannian(v: Permutation, k: int) -> bool:
    if not 0 <= k <= len(v):
        return False
    return (all(v[i] < v[i + 1] for i in range(k - 1))
            and all(v[i] < v[i + 1] for i in range(k, len(v) - 1)))


def grassmannian_descent(v: Permutation) -> int | None:
    """Position of the unique descent of ``v``, 0 for the identity, None if several."""
    descents = [i for i in range(1, len(v)) if v[i - 1] > v[i]]
    if not descents:
        return 0
    if len(descents) == 1:
        return descents[0]
    return None


def grassmannian_perm(n: int, first: Iterable[int]) -> Permutation:
    """The k-Grassmannian permutation whose first k values are ``first``."""
    head = sorted(first)
    rest = sorted(set(range(1, n + 1)) - set(head))
    return perm(head + rest)


def bruhat_leq_grassmannian(u: Permutation, v: Permutation, k: int) -> bool:
    """Bruhat comparison against a k-Grassmannian ``v`` by one pass over positions."""
    if len(u) != len(v):
        raise InvariantError(f"size mismatch: {len(u)} vs {len(v)}")
    if not is_k_grassmannian(v, k):
        raise InvariantError(f"{format_perm(v)} is not {k}-Grassmannian")
    return (all(u[j] <= v[j] for j in range(k))
            and all(u[m] >= v[m] for m in range(k, len(u))))


def bruhat_covers(y: Permutation) -> list[Permutation]:
    """Elements covering ``y``: ``y`` times a transposition, length up by one."""
    n = len(y)
    out = []
    for i in range(n):
        lo = y[i]
        hi = n + 1
        for j in range(i + 1, n):
            # y[j] must exceed y[i] with nothing in between taking a middle value
            if lo < y[j] < hi:
                z = list(y)
                z[i], z[j] = z[j], z[i]
                out.append(Permutation(tuple(z)))
                hi = y[j]
    return out


def bruhat_interval(u: Permutation, v: Permutation) -> set[Permutation]:
    """All ``y`` with ``u <= y <= v``, found by upward search through covers."""
    if not bruhat_leq(u, v):
        raise InvariantError(f"{format_perm(u)} is not below {format_perm(v)}")
    k = grassmannian_descent(v)
    if k is not None:
        def below_top(y):
            return bruhat_leq_grassmannian(y, v, k)
    else:
        def below_top(y):
            return bruhat_leq(y, v)
    # intervals are graded, so every element is reachable from u by covers
    seen = {u}
    rejected: set[Permutation] = set()
    queue = deque([u])
    while queue:
        y = queue.popleft()
        for z in bruhat_covers(y):
            if z in seen or z in rejected:
                continue
            if below_top(z):
                seen.add(z)
                queue.append(z)
            else:
                rejected.add(z)
    return seen

"""Brute-force verifiers that share no logic with the combinatorial formulas.

`jacobian_rank_at` expands the defining Plücker minors symbolically on the
affine chart around a torus-fixed point and ranks their gradients exactly.
`brute_initial_sets` filters all of S_n with the tableau criterion.  The
enumerators and the census drive every exhaustive check.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import islice, permutations
from math import comb, factorial
from typing import Iterator

from .chordclass import DecoratedPermutation
from .errors import GuardError, InvariantError
from .exact import bareiss_rank
from .permcore import KSubset, Permutation, bruhat_leq, initial_set
from .posbij import Positroid
from .smoothgeo import is_smooth

__all__ = [
    "ChartPolynomial", "chart_matrix", "minor_polynomial", "jacobian_at",
    "jacobian_rank_at", "brute_initial_sets", "enumerate_decorated",
    "enumerate_derangements", "decorated_count", "smoothness_census",
    "census_tsv", "guard_limit",
]

GUARD_ENV = "POSITROID_GUARD_N"


def guard_limit(default: int) -> int:
    """Size guard, overridable (unsafely) through ``POSITROID_GUARD_N``."""
    value = os.environ.get(GUARD_ENV)
    return int(value) if value else default


def _check_guard(n: int, default: int, what: str) -> None:
    limit = guard_limit(default)
    if n > limit:
        raise GuardError(f"{what} refused for n={n} > {limit} (set {GUARD_ENV} to override)")


class ChartPolynomial:
    """Sparse polynomial in chart variables ``(row, col)`` with Fraction coefficients.

    Every monomial is a frozenset of variables: products of minors'
    entries never repeat a variable, and multiplication checks this.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, c) -> "ChartPolynomial":
        return cls({frozenset(): Fraction(c)})

    @classmethod
    def variable(cls, var) -> "ChartPolynomial":
        return cls({frozenset([var]): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ChartPolynomial") -> "ChartPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ChartPolynomial(out)

    def __neg__(self) -> "ChartPolynomial":
        return ChartPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "ChartPolynomial") -> "ChartPolynomial":
        return self + (-other)

    def __mul__(self, other: "ChartPolynomial") -> "ChartPolynomial":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1 & m2:
                    raise AssertionError(f"non-multilinear product {set(m1 & m2)}")
                m = m1 | m2
                out[m] = out.get(m, 0) + c1 * c2
        return ChartPolynomial(out)

    def gradient_at_origin(self) -> dict:
        """Coefficients of the degree-one monomials."""
        return {next(iter(m)): c for m, c in self.terms.items() if len(m) == 1}

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), sorted(t[0]))):
            mono = "*".join(f"x{r}_{col}" for r, col in sorted(m))
            parts.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(parts)


def chart_matrix(n: int, J: KSubset) -> list[list[ChartPolynomial]]:
    """Generic point of the chart at ``A_J``: identity on columns ``J``, variables elsewhere."""
    Js = set(J)
    rows = []
    for r, jr in enumerate(J):
        row = []
        for c in range(1, n + 1):
            if c in Js:
                row.append(ChartPolynomial.constant(1 if c == jr else 0))
            else:
                row.append(ChartPolynomial.variable((r, c)))
        rows.append(row)
    return rows


def minor_polynomial(mat: list[list[ChartPolynomial]], cols: KSubset) -> ChartPolynomial:
    """Determinant of the columns ``cols`` by cofactor expansion along the first row."""
    sub = [[row[c - 1] for c in cols] for row in mat]

    def det(rows: list[list[ChartPolynomial]]) -> ChartPolynomial:
        if not rows:
            return ChartPolynomial.constant(1)
        total = ChartPolynomial()
        first, rest = rows[0], rows[1:]
        for j, entry in enumerate(first):
            if entry.is_zero():
                continue
            minor = det([row[:j] + row[j + 1:] for row in rest])
            term = entry * minor
            total = total + (term if j % 2 == 0 else -term)
        return total

    return det(sub)


def jacobian_at(M: Positroid, J) -> tuple[list, list[list[int]]]:
    """Variables and the integer Jacobian of ``{Delta_I : I not in M}`` at ``A_J``."""
    J = KSubset(tuple(sorted(J)))
    if J not in M.bases:
        raise InvariantError(f"{J} is not a basis")
    n, k = M.n, M.k
    mat = chart_matrix(n, J)
    variables = [(r, c) for r in range(k) for c in range(1, n + 1) if c not in J]
    rows = []
    for I in M.non_bases():
        grad = minor_polynomial(mat, I).gradient_at_origin()
        adjacent = len(set(I) & set(J)) == k - 1
        if bool(grad) != adjacent:
            raise AssertionError(f"gradient of Delta_{I} at A_{J} is "
                                 f"{'non' if grad else ''}zero, |I & J| = {len(set(I) & set(J))}")
        if any(c.denominator != 1 for c in grad.values()):
            raise AssertionError("chart gradients are integral")
        rows.append([int(grad.get(v, 0)) for v in variables])
    return variables, rows


def jacobian_rank_at(M: Positroid, J) -> int:
    _, rows = jacobian_at(M, J)
    return bareiss_rank(rows)


def brute_initial_sets(u: Permutation, v: Permutation, k: int) -> set[KSubset]:
    """``{y[k] : u <= y <= v}`` by filtering every permutation of [n]."""
    n = len(u)
    _check_guard(n, 8, "brute_initial_sets")
    if not bruhat_leq(u, v):
        raise InvariantError("u is not below v")
    return {initial_set(y, k) for y in permutations(range(1, n + 1))
            if bruhat_leq(u, y) and bruhat_leq(y, v)}


def _decorations(w: tuple) -> Iterator[DecoratedPermutation]:
    fixed = [i for i, x in enumerate(w, 1) if i == x]
    # binary counter over fixed points, lowest fixed point least significant
    for mask in range(1 << len(fixed)):
        cw = frozenset(f for b, f in enumerate(fixed) if mask >> b & 1)
        yield DecoratedPermutation(Permutation(w), cw)


def enumerate_decorated(n: int, start: int = 0, stop: int | None = None) -> Iterator[DecoratedPermutation]:
    """Every decorated permutation of [n], permutations in lexicographic order.

    ``start``/``stop`` select a range of permutation indices, so shards of
    the enumeration can be produced independently.
    """
    _check_guard(n, 9, "enumerate_decorated")
    for w in islice(permutations(range(1, n + 1)), start, stop):
        yield from _decorations(w)


def enumerate_derangements(n: int) -> Iterator[DecoratedPermutation]:
    _check_guard(n, 9, "enumerate_derangements")
    for w in permutations(range(1, n + 1)):
        if all(x != i for i, x in enumerate(w, 1)):
            yield DecoratedPermutation(Permutation(w))


def decorated_count(n: int) -> int:
    """``sum over w of 2^fix(w)``, via derangement numbers by inclusion-exclusion."""
    def derangements(m):
        return sum((-1) ** i * factorial(m) // factorial(i) for i in range(m + 1))
    return sum(comb(n, j) * derangements(n - j) * 2 ** j for j in range(n + 1))


def _census_shard(args) -> Counter:
    n, criterion, start, stop = args
    counts: Counter = Counter()
    for wd in enumerate_decorated(n, start, stop):
        k = wd.k
        counts[(k, "total")] += 1
        if is_smooth(wd, criterion):
            counts[(k, "smooth")] += 1
    return counts


def smoothness_census(n: int, criterion: str = "crossed", jobs: int = 1) -> dict[int, tuple[int, int]]:
    """``{k: (total, smooth)}`` over all decorated permutations of [n]."""
    _check_guard(n, 8, "smoothness_census")
    nperms = factorial(n)
    shards = max(1, min(jobs * 4, nperms))
    bounds = [nperms * s // shards for s in range(shards + 1)]
    tasks = [(n, criterion, bounds[s], bounds[s + 1]) for s in range(shards)]
    total: Counter = Counter()
    if jobs <= 1:
        for t in tasks:
            total.update(_census_shard(t))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_census_shard, tasks):
                total.update(part)
    return {k: (total[(k, "total")], total[(k, "smooth")]) for k in range(n + 1)}


def census_tsv(n: int, criterion: str = "crossed", jobs: int = 1) -> str:
    table = smoothness_census(n, criterion, jobs)
    lines = ["n\tk\ttotal\tsmooth"]
    for k, (tot, smooth) in sorted(table.items()):
        lines.append(f"{n}\t{k}\t{tot}\t{smooth}")
    return "\n".join(lines) + "\n"

#!/usr/bin/env python3
# A walk through one decorated permutation: arcs, relations, and its indexing objects.

from positroid_lab import (
    alignments, crossed_alignments, grassmann_necklace,
    interval_from_decorated_perm, parse_decorated, positroid_of,
)
from positroid_lab.chordclass import arc_label, relation_matrix
from positroid_lab.permcore import format_perm, length

w = parse_decorated("5,7,3-,6,4,9,2,8+,1")  # 3 is a counterclockwise loop, 8 clockwise
print("w =", w, " n =", w.n, " k =", w.k)

# every unordered pair of arcs gets exactly one relation
rel = relation_matrix(w)
for (p, q) in [(2, 4), (4, 9), (1, 2), (1, 5), (4, 8), (3, 4)]:
    print(f"  {arc_label(w, p):>5} vs {arc_label(w, q):<5} {rel[p, q].value}")

print("alignments:", len(alignments(w)))
(p, q), h = crossed_alignments(w)[0]
print(f"first crossed alignment: ({arc_label(w, p)}, {arc_label(w, q)}) crossed by {arc_label(w, h)}")

# the same object seen three other ways
N = grassmann_necklace(w)
print("necklace:", " ".join("".join(map(str, e)) for e in N.entries))
I = interval_from_decorated_perm(w)
print(f"interval: u={format_perm(I.u)} (l={length(I.u)})  v={format_perm(I.v)} (l={length(I.v)})")
print("k(n-k) - (l(v) - l(u)) =", I.k * (w.n - I.k) - (length(I.v) - length(I.u)))
print("positroid size:", len(positroid_of(w)))

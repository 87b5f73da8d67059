#!/usr/bin/env python3
# Where is a positroid variety singular?  Compare the combinatorial count with exact Jacobians.

from positroid_lab import codimension, matroid_of_matrix, parse_decorated, positroid_of
from positroid_lab.oracle import jacobian_rank_at
from positroid_lab.smoothgeo import johnson_graph, smoothness_report, tangent_codim

A = [[0, 3, 1, -2, 2, 0],
     [0, 0, 0, 1, -1, 1]]
print("bases of A:", sorted("".join(map(str, J)) for J in matroid_of_matrix(A)))

w = parse_decorated("1-,3,6,5,2,4")
M = positroid_of(w)
c = codimension(w)
print("codimension:", c)

G = johnson_graph(M)
print(" J   degree  tangent  jacobian")
for J in M.sorted_bases():
    t = tangent_codim(M, J)
    flag = "  <- singular" if t < c else ""
    print(f" {''.join(map(str, J))}    {G.degrees[J]}      {t}        {jacobian_rank_at(M, J)}{flag}")

r = smoothness_report(w)
print("verdicts:", r.verdicts)

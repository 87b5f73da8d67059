#!/usr/bin/env python3
# Count smooth positroid varieties in Gr(k, n) for small n, by two independent criteria.

import sys
import time

from positroid_lab.oracle import smoothness_census

top = int(sys.argv[1]) if len(sys.argv) > 1 else 6

for n in range(1, top + 1):
    t0 = time.perf_counter()
    a = smoothness_census(n, "crossed", jobs=2)
    b = smoothness_census(n, "spirograph")
    assert a == b
    total = sum(t for t, _ in a.values())
    smooth = sum(s for _, s in a.values())
    row = " ".join(f"{s}/{t}" for k, (t, s) in sorted(a.items()))
    print(f"n={n}: smooth {smooth} of {total}   by k: {row}   ({time.perf_counter() - t0:.2f}s)")

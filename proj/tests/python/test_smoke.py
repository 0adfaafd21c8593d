#!/usr/bin/env python3
"""Smoke tests for the python bindings."""
import sys
from fractions import Fraction

import catermin as cm

failures = []


def check(name, cond):
    if not cond:
        failures.append(name)
        print(f"FAIL: {name}")


check("matching_poly", cm.matching_poly([4, 2, 3]) == [1, 7, 11])
check("matching_poly_tree",
      cm.matching_poly_tree(4, [(0, 1), (1, 2), (2, 3)]) == [1, 3, 1])
check("hosoya", cm.hosoya([4, 2, 3]) == 19)
check("hosoya is python int", isinstance(cm.hosoya([3]), int))
check("eval exact", cm.eval_matching_poly([4, 2, 3], Fraction(1, 4)) ==
      Fraction(55, 16))
check("eval from string", cm.eval_matching_poly([4, 2, 3], "1/4") ==
      Fraction(55, 16))

e = cm.energy([4, 2, 3], method="verified")
check("energy verified", abs(e["value"] - 7.38465) < 1e-4)
check("energy bound", e["error_bound"] < 1e-8)

check("build_S", cm.build_S([4, 3, 2]) == [4, 2, 3])
check("build_S paper case",
      cm.build_S([5, 5, 5, 4, 4, 4, 4, 3, 3, 3]) == [5, 3, 5, 3, 4, 4, 4, 4, 3, 5])
check("canonical_spine", cm.canonical_spine([4, 2, 3]) == [3, 2, 4])
check("enumerate", len(cm.enumerate_caterpillars([4, 3, 2])) == 3)
check("count", cm.count_caterpillars([4, 3, 2]) == 3)

bm = cm.brute_min([4, 3, 2])
check("brute_min", bm["spine"] == [3, 2, 4] and bm["hosoya"] == 19)

chain = cm.majorization_chain([2, 2, 2, 2, 1, 1], [4, 2, 1, 1, 1, 1])
check("chain", chain[0] == [2, 2, 2, 2, 1, 1] and chain[-1] == [4, 2, 1, 1, 1, 1])

check("diameter", cm.caterpillar_diameter([3, 2, 3]) == 4)

rep = cm.verify_min_theorem([4, 3, 2], ["1/4", 1, 4])
check("verify_min", rep["success"] and rep["witness"]["spine"] == [3, 2, 4])

rep = cm.verify_majorization_theorem(8, 4)
check("verify_majorization", rep["success"])

rep = cm.verify_corollary_diameter(8, 4)
check("verify_diameter", rep["success"])

rep = cm.verify_corollary_maxdeg(10, 3)
check("known deviation surfaces", not rep["success"])

try:
    cm.hosoya([0])
    check("invalid spine raises", False)
except ValueError:
    pass

try:
    cm.eval_matching_poly([3, 2], 0.5)
    check("float x rejected", False)
except ValueError:
    pass

if failures:
    print(f"{len(failures)} smoke checks failed")
    sys.exit(1)
print("all python smoke checks passed")

#!/usr/bin/env python3
"""Transitive groups whose minimal-base spectra have gaps.

Intervals not containing 1 are realized by products of symmetric groups
(in their product action).  Gapped spectra come from wreath products acting
on cosets: S_n wr C_k acting on the cosets of S_n^(k-2) x Stab x 1 spreads
minimal bases across a few rigid families.

Two published expectations disagree with what the constructions actually
produce, and the toolkit reports the computed truth: the k=2 action gives
{2, n-1} (so the {2, m} spectrum needs parameter m+1), and the k=4 action
gives {4, n+1, 2n-2}.
"""

from basekit import minimal_base_sizes, theorem3_groups, wreath_coset_action

print(__doc__)

print("--- intervals without 1, transitively ---")
for a, b in ((2, 3), (2, 4), (3, 5)):
    GM = theorem3_groups(a, b, "M")
    print(
        f"target {{{a}..{b}}}: degree {GM.degree:>3}, "
        f"spectrum {minimal_base_sizes(GM).to_list()}, transitive={GM.is_transitive()}"
    )

print()
print("--- wreath coset actions ---")
for n, k in ((4, 2), (5, 2), (4, 3), (5, 3), (4, 4)):
    G = wreath_coset_action(n, k)
    m = minimal_base_sizes(G)
    print(f"(n={n}, k={k}): degree {G.degree:>4}, spectrum {m.to_list()}")

print()
print("k=2 actions give {2, n-1}; k=3 actions give {3, n}; k=4 actions give")
print("{4, n+1, 2n-2}.  Run with the larger (5,4) instance (degree 2400) to")
print("see the three-element spectrum {4, 6, 8}:")
print("    python3 -c \"from basekit import *; \\")
print("        print(minimal_base_sizes(wreath_coset_action(5, 4)).to_list())\"")

#!/usr/bin/env python3
"""Tour of base-size spectra and the interval property.

A base of a permutation group is a point set with trivial pointwise
stabilizer.  Two spectra summarize a group's bases: the sizes of its
minimal bases (no proper subset is a base) and the lengths of its
irredundant bases (ordered sequences with strictly shrinking stabilizers).
The lengths of irredundant bases always form an interval of integers;
minimal-base sizes need not.
"""

import random

from basekit import (
    Perm,
    PermGroup,
    base_stats,
    gl42_on_2subspaces,
    irredundant_base_sizes,
    minimal_base_sizes,
    symmetric,
    theorem2_group,
)

print(__doc__)

print("--- the symmetric group on 5 points ---")
s5 = symmetric(5)
print("order:", s5.order())
print("minimal base sizes:", minimal_base_sizes(s5).to_list())
print("irredundant lengths:", irredundant_base_sizes(s5).to_list())
print("every base needs 4 points; both spectra are the singleton {4}.")

print()
print("--- a group whose minimal bases have sizes {1, 3, 5, 7} ---")
G, dom = theorem2_group([1, 3, 5, 7], 2)
m = minimal_base_sizes(G)
i = irredundant_base_sizes(G)
print("degree:", G.degree, " order:", G.order())
print("minimal base sizes:", m.to_list(), "  <- gaps!")
print("irredundant lengths:", i.to_list(), " <- an interval, as always")

print()
print("--- random 2-generator subgroups of the symmetric group on 8 points ---")
rng = random.Random(7)
for trial in range(6):
    gens = []
    for _ in range(2):
        images = list(range(8))
        rng.shuffle(images)
        gens.append(Perm(images))
    H = PermGroup(8, gens)
    sizes = irredundant_base_sizes(H)
    print(
        f"order {H.order():>6}: I-spectrum {sizes.to_list()}  interval={sizes.is_interval}"
    )

print()
print("--- invariant sizes: IBIS versus MiBIS ---")
gl = gl42_on_2subspaces()
st = base_stats(gl)
print("the 35-plane linear action: b =", st.b, " B =", st.B, " Imax =", st.Imax)
print("minimal bases all have size 4, yet irredundant bases of length 5 exist:")
print("minimal sizes invariant (MiBIS) without invariant irredundant lengths (IBIS).")

"""The standard desk-scale group corpus used by the verification suites."""

from __future__ import annotations

import random

from .constructions import (
    cyclic_regular,
    disjoint_product,
    elem_abelian_regular,
    gl42_on_2subspaces,
    k_subset_action,
    product_action,
    symmetric,
    theorem2_group,
    theorem3_groups,
    wreath_coset_action,
)
from .group import PermGroup
from .perm import Perm

__all__ = ["interval_corpus", "random_two_generator_subgroups", "sumset_pool"]

RANDOM_SEED = 91


def random_two_generator_subgroups(count: int = 12, degree: int = 8, seed: int = RANDOM_SEED):
    """Deterministic pseudo-random 2-generator subgroups of a symmetric group."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        gens = []
        for _ in range(2):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(Perm(images))
        out.append((f"rand2gen_s{degree}_{i}", PermGroup(degree, gens)))
    return out


def sumset_pool():
    """The five factor groups whose disjoint products exercise the sumset law."""
    return [
        ("sym3", symmetric(3)),
        ("sym4", symmetric(4)),
        ("cyclic3", cyclic_regular(3)),
        ("elemab_2_2", elem_abelian_regular(2, 2)),
        ("theorem2_{1,3}", theorem2_group([1, 3], 2)[0]),
    ]


def interval_corpus():
    """At least 50 named groups: every construction at desk scale plus
    seeded random subgroups."""
    groups: list[tuple[str, PermGroup]] = []
    for n in range(2, 8):
        groups.append((f"sym{n}", symmetric(n)))
    for p in (3, 5, 7):
        groups.append((f"cyclic{p}", cyclic_regular(p)))
    for p, d in ((2, 2), (2, 3), (3, 2), (2, 7)):
        groups.append((f"elemab_{p}_{d}", elem_abelian_regular(p, d)))
    for X in ([1], [2], [1, 3], [1, 4], [2, 5], [3, 4, 7], [1, 3, 5, 7]):
        name = "theorem2_{" + ",".join(map(str, X)) + "}"
        groups.append((name, theorem2_group(X, 2)[0]))
    pool = sumset_pool()
    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            name_a, A = pool[i]
            name_b, B = pool[j]
            groups.append((f"disjoint[{name_a}+{name_b}]", disjoint_product(A, B)))
    groups.append(("prod[s3,s3]", product_action(symmetric(3), symmetric(3))))
    groups.append(("prod[s3,s4]", product_action(symmetric(3), symmetric(4))))
    groups.append(("prod[s4,s4]", product_action(symmetric(4), symmetric(4))))
    groups.append(
        ("prod[s3,s3,s3,s3]", product_action(*[symmetric(3)] * 4))
    )
    groups.append(
        ("prod[s4,s3,s3]", product_action(symmetric(4), symmetric(3), symmetric(3)))
    )
    groups.append(("theorem3M(2,3)", theorem3_groups(2, 3, "M")))
    groups.append(("theorem3M(3,5)", theorem3_groups(3, 5, "M")))
    groups.append(("theorem3I(3,5)", theorem3_groups(3, 5, "I")))
    groups.append(("wreath_coset(4,2)", wreath_coset_action(4, 2)))
    groups.append(("wreath_coset(4,3)", wreath_coset_action(4, 3)))
    groups.append(("ksubsets(5,2)", k_subset_action(5, 2)))
    groups.append(("ksubsets(6,2)", k_subset_action(6, 2)))
    groups.append(("ksubsets(7,2)", k_subset_action(7, 2)))
    groups.append(("gl42_planes", gl42_on_2subspaces()))
    groups.extend(random_two_generator_subgroups())
    return groups

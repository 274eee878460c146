import random
from itertools import permutations

import pytest

from basekit import (
    BudgetExceeded,
    Perm,
    PermGroup,
    SearchBudget,
    SizeSet,
    base_stats,
    cyclic_regular,
    disjoint_product,
    elem_abelian_regular,
    grid_minimal_base,
    height,
    indicator_vectors,
    irredundant_base_sizes,
    is_base,
    is_ibis,
    is_independent_set,
    is_irredundant_sequence,
    is_mibis,
    is_minimal_base,
    k_subset_action,
    min_base_size,
    minimal_base_sizes,
    product_action,
    symmetric,
    theorem2_group,
)

import bruteforce as bf


def random_two_gen(n, seed):
    rng = random.Random(seed)
    gens = []
    for _ in range(2):
        imgs = list(range(n))
        rng.shuffle(imgs)
        gens.append(Perm(imgs))
    return PermGroup(n, gens)


ORACLE_GROUPS = [
    ("sym3", symmetric(3)),
    ("sym4", symmetric(4)),
    ("c5", cyclic_regular(5)),
    ("elemab22", elem_abelian_regular(2, 2)),
    ("klein_on_4", PermGroup(4, [Perm([1, 0, 3, 2]), Perm([2, 3, 0, 1])])),
    ("s3xs3", product_action(symmetric(3), symmetric(3))),
    ("s3+c2", disjoint_product(symmetric(3), cyclic_regular(2))),
    ("ksub52", k_subset_action(5, 2)),
    ("thm2_13", theorem2_group([1, 3], 2)[0]),
] + [(f"rand{z}", random_two_gen(6, z)) for z in range(4)]


def closure_of(G):
    return bf.closure([g.to_list() for g in G.generators], limit=6000)


@pytest.mark.parametrize("name,G", ORACLE_GROUPS, ids=[n for n, _ in ORACLE_GROUPS])
@pytest.mark.parametrize("mode", ["pruned", "exhaustive"])
def test_minimal_base_sizes_vs_bruteforce(name, G, mode):
    elements = closure_of(G)
    expected = sorted(bf.minimal_base_sizes(G.degree, elements))
    assert minimal_base_sizes(G, mode).to_list() == expected


@pytest.mark.parametrize("name,G", ORACLE_GROUPS, ids=[n for n, _ in ORACLE_GROUPS])
@pytest.mark.parametrize("mode", ["pruned", "exhaustive"])
def test_irredundant_base_sizes_vs_bruteforce(name, G, mode):
    elements = closure_of(G)
    expected = sorted(bf.irredundant_base_sizes(G.degree, elements) - {0})
    assert irredundant_base_sizes(G, mode).to_list() == expected


@pytest.mark.parametrize("name,G", ORACLE_GROUPS, ids=[n for n, _ in ORACLE_GROUPS])
@pytest.mark.parametrize("mode", ["pruned", "exhaustive"])
def test_height_vs_bruteforce(name, G, mode):
    elements = closure_of(G)
    assert height(G, mode) == bf.height(G.degree, elements)


@pytest.mark.parametrize("name,G", ORACLE_GROUPS, ids=[n for n, _ in ORACLE_GROUPS])
def test_min_base_size_vs_bruteforce(name, G):
    elements = closure_of(G)
    assert min_base_size(G) == min(bf.minimal_base_sizes(G.degree, elements))


def test_is_base_examples():
    s4 = symmetric(4)
    assert is_base(s4, {0, 1, 2})
    assert not is_base(s4, {0, 1})
    c7 = cyclic_regular(7)
    for x in range(7):
        assert is_base(c7, {x})


def test_is_minimal_base_examples():
    s4 = symmetric(4)
    assert is_minimal_base(s4, {0, 1, 2})
    assert not is_minimal_base(s4, {0, 1, 2, 3})
    # weave on 182 points: one point of the second block plus one point from
    # each of the last four 2-point blocks
    G, dom = theorem2_group([1, 3, 5, 7], 2)
    pts = {dom.block("D2")[0]} | {dom.block(f"D4_{i}")[0] for i in (4, 5, 6, 7)}
    assert is_minimal_base(G, pts)


def test_theorem2_stabilizer_structure():
    # the stabilizer of a point of the second block is generated by the last
    # four weave generators and has order 16
    G, dom = theorem2_group([1, 3, 5, 7], 2)
    y2 = dom.block("D2")[0]
    stab = G.point_stabilizer(y2)
    assert stab.order() == 16
    expected = PermGroup(G.degree, G.generators[3:])
    assert expected.order() == 16
    assert all(expected.contains(g) for g in stab.generators)


def test_is_irredundant_sequence_examples():
    s4 = symmetric(4)
    assert is_irredundant_sequence(s4, (0, 1, 2))
    assert not is_irredundant_sequence(s4, (0, 0, 1, 2))
    assert not is_irredundant_sequence(s4, (0, 1))  # does not reach the identity


def test_every_ordering_of_a_minimal_base_is_irredundant():
    for name, G in ORACLE_GROUPS[:8]:
        sizes, wits = minimal_base_sizes(G, witnesses=True)
        for base in wits.values():
            for order in list(permutations(base))[:24]:
                assert is_irredundant_sequence(G, order), (name, order)


def test_is_independent_set():
    c5 = cyclic_regular(5)
    assert is_independent_set(c5, {3})
    assert not is_independent_set(c5, {1, 2})
    for name, G in ORACLE_GROUPS[:6]:
        _, wits = minimal_base_sizes(G, witnesses=True)
        for base in wits.values():
            assert is_independent_set(G, base), name


def test_height_examples():
    assert height(cyclic_regular(6)) == 1
    assert height(elem_abelian_regular(2, 3)) == 1
    assert height(symmetric(5)) == 4


def test_height_product_subadditive():
    pool = [symmetric(3), symmetric(4), cyclic_regular(3), elem_abelian_regular(2, 2)]
    for i in range(len(pool)):
        for j in range(i, len(pool)):
            A, B = pool[i], pool[j]
            assert height(product_action(A, B)) <= height(A) + height(B)


def test_ibis_mibis():
    assert is_ibis(symmetric(5)) and is_mibis(symmetric(5))
    G, _ = theorem2_group([1, 3], 2)
    assert not is_ibis(G) and not is_mibis(G)


def test_base_stats():
    st = base_stats(symmetric(5))
    assert (st.b, st.B, st.Imax) == (4, 4, 4)
    prod = product_action(symmetric(3), symmetric(3))
    st = base_stats(prod)
    assert (st.b, st.B, st.Imax) == (2, 2, 3)


def test_trivial_group_rejected():
    T = PermGroup(4)
    for fn in (minimal_base_sizes, irredundant_base_sizes, height, min_base_size, base_stats):
        with pytest.raises(ValueError):
            fn(T)


def test_budget_exceeded_is_an_error_not_a_truncation():
    G = symmetric(6)
    with pytest.raises(BudgetExceeded):
        minimal_base_sizes(G, budget=2)
    shared = SearchBudget(10**6)
    minimal_base_sizes(G, budget=shared)
    assert 0 < shared.used < 10**6


def test_witnesses_are_real_bases():
    for name, G in ORACLE_GROUPS[:8]:
        sizes, wits = minimal_base_sizes(G, witnesses=True)
        assert sorted(wits) == sizes.to_list()
        for size, base in wits.items():
            assert len(base) == size
            assert is_minimal_base(G, base), name
        isizes, iwits = irredundant_base_sizes(G, witnesses=True)
        assert sorted(iwits) == isizes.to_list()
        for size, seq in iwits.items():
            assert len(seq) == size
            assert is_irredundant_sequence(G, seq), name


def test_size_set():
    s = SizeSet([3, 1, 3, 2])
    assert s.to_list() == [1, 2, 3]
    assert s.min == 1 and s.max == 3 and s.is_interval
    assert not SizeSet([1, 3]).is_interval
    assert 2 in s and len(s) == 3
    assert SizeSet([2, 1]) == SizeSet((1, 2))
    with pytest.raises(ValueError):
        SizeSet([])
    with pytest.raises(ValueError):
        SizeSet([0, 1])


def test_mode_validation():
    with pytest.raises(ValueError):
        minimal_base_sizes(symmetric(3), mode="fast")


# -- indicator vectors ----------------------------------------------------


def test_indicator_vectors_examples():
    iv = indicator_vectors(symmetric(3), symmetric(3), [(0, 0), (1, 1)])
    assert iv.vG == (1, 1) and iv.vH == (1, 1)
    assert iv.nG == 2 and iv.nH == 2
    iv = indicator_vectors(symmetric(3), symmetric(4), [(0, 0), (1, 1), (1, 2)])
    assert iv.vG == (1, 0, 0)
    assert iv.vH == (1, 1, 1)


def test_indicator_vectors_rejects_non_minimal():
    with pytest.raises(ValueError):
        indicator_vectors(symmetric(3), symmetric(3), [(0, 0), (1, 1), (2, 2)])
    with pytest.raises(ValueError):
        indicator_vectors(symmetric(3), symmetric(3), [(0, 7)])


def test_indicator_vector_facts_on_witnesses():
    pairs = [(symmetric(3), symmetric(3)), (symmetric(3), symmetric(4)), (symmetric(4), symmetric(4))]
    for A, B in pairs:
        prod = product_action(A, B)
        _, wits = minimal_base_sizes(prod, witnesses=True)
        b_a = minimal_base_sizes(A).max
        b_b = minimal_base_sizes(B).max
        for base in wits.values():
            coords = [divmod(p, B.degree) for p in base]
            iv = indicator_vectors(A, B, coords)
            assert iv.nG <= b_a and iv.nH <= b_b
            assert all(iv.vG[i] or iv.vH[i] for i in range(len(coords)))
            assert iv.nG + iv.nH >= len(coords)


# -- grid recipe ----------------------------------------------------------


def test_grid_recipe_instances():
    assert grid_minimal_base([0, 1], [0, 1], 2) == [(0, 0), (1, 1)]
    assert grid_minimal_base([0, 1], [0, 1, 2], 3) == [(0, 0), (1, 1), (1, 2)]
    assert len(grid_minimal_base([0, 1, 2], [0, 1, 2], 4)) == 4


def test_grid_recipe_swaps_longer_first_base():
    flipped = grid_minimal_base([0, 1, 2], [0, 1], 3)
    assert flipped == [(d, l) for l, d in grid_minimal_base([0, 1], [0, 1, 2], 3)]


def test_grid_recipe_range_errors():
    with pytest.raises(ValueError):
        grid_minimal_base([0, 1], [0, 1], 3)
    with pytest.raises(ValueError):
        grid_minimal_base([0, 1], [0, 1, 2], 2)


def test_grid_recipe_yields_minimal_bases():
    cases = [
        (symmetric(3), symmetric(3), [0, 1], [0, 1]),
        (symmetric(3), symmetric(4), [0, 1], [0, 1, 2]),
        (symmetric(4), symmetric(4), [0, 1, 2], [0, 1, 2]),
    ]
    for A, B, base_a, base_b in cases:
        prod = product_action(A, B)
        lo = max(len(base_a), len(base_b))
        hi = len(base_a) + len(base_b) - 2
        for k in range(lo, hi + 1):
            pts = {d * B.degree + l for d, l in grid_minimal_base(base_a, base_b, k)}
            assert is_minimal_base(prod, pts), (A.degree, B.degree, k)

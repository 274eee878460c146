import random

import pytest

from basekit import Perm, PermGroup, build_chain

import bruteforce as bf


def sym(n):
    gens = [Perm.from_cycles(n, (0, 1)), Perm.from_cycles(n, tuple(range(n)))]
    return PermGroup(n, gens)


def random_two_gen(n, seed):
    rng = random.Random(seed)
    gens = []
    for _ in range(2):
        imgs = list(range(n))
        rng.shuffle(imgs)
        gens.append(Perm(imgs))
    return PermGroup(n, gens)


SMALL_GROUPS = [
    ("trivial", PermGroup(4)),
    ("sym3", sym(3)),
    ("sym4", sym(4)),
    ("sym5", sym(5)),
    ("c6", PermGroup(6, [Perm.from_cycles(6, tuple(range(6)))])),
    ("klein", PermGroup(4, [Perm([1, 0, 3, 2]), Perm([2, 3, 0, 1])])),
    ("alt4", PermGroup(4, [Perm.from_cycles(4, (0, 1, 2)), Perm.from_cycles(4, (1, 2, 3))])),
] + [(f"rand{z}", random_two_gen(7, z)) for z in range(6)]


@pytest.mark.parametrize("name,G", SMALL_GROUPS, ids=[n for n, _ in SMALL_GROUPS])
def test_order_matches_bruteforce_closure(name, G):
    if G.is_trivial():
        assert G.order() == 1
        return
    elements = bf.closure([g.to_list() for g in G.generators], limit=6000)
    assert G.order() == len(elements)


def test_symmetric_orders():
    assert sym(4).order() == 24
    assert sym(5).order() == 120
    assert PermGroup(4).order() == 1


def test_orbit_examples():
    assert sym(3).orbit(0) == {0, 1, 2}
    assert PermGroup(4).orbit(2) == {2}
    G = PermGroup(5, [Perm([1, 0, 2, 3, 4]), Perm([0, 1, 3, 2, 4])])
    assert G.orbit(0) == {0, 1}
    assert G.orbit(4) == {4}
    assert G.orbits() == [[0, 1], [2, 3], [4]]
    assert not G.is_transitive()
    assert sym(3).is_transitive()


@pytest.mark.parametrize("name,G", SMALL_GROUPS, ids=[n for n, _ in SMALL_GROUPS])
def test_orbits_match_bruteforce(name, G):
    if G.is_trivial():
        return
    elements = bf.closure([g.to_list() for g in G.generators], limit=6000)
    for x in range(G.degree):
        assert G.orbit(x) == bf.orbit(elements, x)


def test_contains():
    G = sym(4)
    assert G.contains(Perm.from_cycles(4, (0, 3, 2)))
    alt = PermGroup(4, [Perm.from_cycles(4, (0, 1, 2)), Perm.from_cycles(4, (1, 2, 3))])
    assert not alt.contains(Perm.from_cycles(4, (0, 1)))
    g1, g2 = alt.generators
    assert alt.contains(g1 * g2)
    with pytest.raises(ValueError):
        G.contains(Perm.identity(5))


def test_trivial_group_contains_only_identity():
    G = PermGroup(3)
    assert G.contains(Perm.identity(3))
    assert not G.contains(Perm([1, 0, 2]))


@pytest.mark.parametrize("name,G", SMALL_GROUPS, ids=[n for n, _ in SMALL_GROUPS])
def test_chain_invariants(name, G):
    chain = G.chain()
    base = chain.base
    # level generators fix all earlier base points
    for i in range(len(chain.levels)):
        for g in chain.level_generators(i):
            assert all(g[b] == b for b in base[:i])
    # orbit sizes multiply to the group order
    order = 1
    for s in chain.orbit_sizes():
        order *= s
    assert order == G.order()
    # every generator sifts to the identity
    for g in G.generators:
        residue, lvl = chain.sift(g)
        assert residue.is_identity() and lvl == len(chain.levels)


@pytest.mark.parametrize("name,G", SMALL_GROUPS, ids=[n for n, _ in SMALL_GROUPS])
def test_chain_elements_enumeration(name, G):
    if G.order() > 200:
        return
    listed = {p for p in G.chain().elements()}
    assert len(listed) == G.order()
    if not G.is_trivial():
        elements = bf.closure([g.to_list() for g in G.generators])
        assert {tuple(p.to_list()) for p in listed} == elements


def test_chain_determinism():
    for _, G in SMALL_GROUPS[:6]:
        a = build_chain(G.degree, G.generators)
        b = build_chain(G.degree, G.generators)
        assert a.base == b.base
        for la, lb in zip(a.levels, b.levels):
            assert list(la.transversal) == list(lb.transversal)
            assert all(la.transversal[k] == lb.transversal[k] for k in la.transversal)


def test_base_prefix_retained_without_descent():
    G = PermGroup(5, [Perm([1, 0, 2, 3, 4])])  # moves only 0,1
    chain = G.stabilizer_chain((4, 0))
    assert chain.base[:2] == (4, 0)
    assert chain.orbit_sizes()[0] == 1
    assert chain.order() == 2


def test_base_prefix_validation():
    G = sym(3)
    with pytest.raises(ValueError):
        G.stabilizer_chain((0, 0))
    with pytest.raises(ValueError):
        G.stabilizer_chain((7,))


def test_pointwise_stabilizer_examples():
    # regular group: any single point has trivial stabilizer
    c5 = PermGroup(5, [Perm.from_cycles(5, tuple(range(5)))])
    assert c5.point_stabilizer(3).order() == 1
    # last point of a symmetric group is forced
    assert sym(4).pointwise_stabilizer({0, 1, 2}).order() == 1
    s = sym(5).pointwise_stabilizer({0, 1})
    assert s.order() == 6
    for g in s.generators:
        assert g[0] == 0 and g[1] == 1
        assert sym(5).contains(g)


@pytest.mark.parametrize("name,G", SMALL_GROUPS, ids=[n for n, _ in SMALL_GROUPS])
def test_pointwise_stabilizer_matches_bruteforce(name, G):
    if G.is_trivial():
        return
    rng = random.Random(11)
    elements = bf.closure([g.to_list() for g in G.generators], limit=6000)
    for _ in range(6):
        pts = rng.sample(range(G.degree), rng.randint(1, min(3, G.degree)))
        S = G.pointwise_stabilizer(pts)
        assert S.order() == len(bf.stabilizer(elements, pts))
        for g in S.generators:
            assert all(g[x] == x for x in pts)
            assert G.contains(g)


@pytest.mark.parametrize("name,G", SMALL_GROUPS, ids=[n for n, _ in SMALL_GROUPS])
def test_orbit_stabilizer(name, G):
    for x in range(G.degree):
        assert len(G.orbit(x)) * G.point_stabilizer(x).order() == G.order()


def test_order_hint_checked():
    with pytest.raises(RuntimeError):
        PermGroup(3, [Perm([1, 0, 2])], order_hint=3).order()
    assert PermGroup(3, [Perm([1, 0, 2])], order_hint=2).order() == 2


def test_identity_never_stored():
    G = PermGroup(3, [Perm.identity(3), Perm([1, 0, 2]), Perm([1, 0, 2])])
    assert len(G.generators) == 1

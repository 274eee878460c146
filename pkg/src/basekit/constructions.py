"""Builders for the groups and actions under study.

Point encodings are fixed so witness bases are reproducible:

* ``elem_abelian_regular(p, d)``: point m encodes the vector whose i-th
  coordinate is digit i of m in base p (place value p**i); generator i adds
  the i-th unit vector.
* ``product_action(G, H)``: pair (d, l) is point ``d * H.degree + l``;
  more factors fold left, giving a mixed-radix encoding.
* ``disjoint_product(G, H)``: H's points are shifted by ``G.degree``.
* ``k_subset_action(n, k)``: points are the k-subsets of {0..n-1} in
  lexicographic order.
* ``gl42_on_2subspaces``: the 35 planes are ordered lexicographically by
  their reduced-row-echelon basis (two 4-bit row vectors, bit i = basis
  coordinate i).
* ``wreath_coset_action(n, k)``: point 0 is the seed coset of the fixed
  subgroup; further cosets are numbered in breadth-first discovery order
  under right multiplication by the three wreath generators (block-0
  transposition, block-0 n-cycle, block rotation), in that order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import BudgetExceeded, SpecError
from .group import PermGroup
from .perm import Perm

__all__ = [
    "LabeledDomain",
    "symmetric",
    "cyclic_regular",
    "elem_abelian_regular",
    "disjoint_product",
    "product_action",
    "theorem2_group",
    "theorem3_groups",
    "wreath_imprimitive",
    "wreath_coset_action",
    "k_subset_action",
    "gl42_on_2subspaces",
    "build_group",
]


@dataclass(frozen=True)
class LabeledDomain:
    """Named blocks partitioning {0, ..., degree-1}."""

    degree: int
    blocks: tuple[tuple[str, int, int], ...]  # (label, start, size)

    def __post_init__(self):
        covered = 0
        for _, start, size in self.blocks:
            if start != covered or size < 1:
                raise ValueError("blocks must tile the domain in order")
            covered += size
        if covered != self.degree:
            raise ValueError("blocks do not cover the domain")

    def block(self, label: str) -> range:
        for name, start, size in self.blocks:
            if name == label:
                return range(start, start + size)
        raise KeyError(label)


def _single_block(degree: int, label: str = "omega") -> LabeledDomain:
    return LabeledDomain(degree, ((label, 0, degree),))


def symmetric(n: int) -> PermGroup:
    """Natural action of the symmetric group on n points."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return PermGroup(1)
    gens = [Perm.from_cycles(n, (0, 1)), Perm.from_cycles(n, tuple(range(n)))]
    return PermGroup(n, gens, order_hint=math.factorial(n))


def cyclic_regular(p: int) -> PermGroup:
    """A single p-cycle on p points."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return PermGroup(p, [Perm.from_cycles(p, tuple(range(p)))], order_hint=p)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def elem_abelian_regular(p: int, d: int) -> PermGroup:
    """Regular action of (Z_p)^d on itself, one generator per unit vector."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError("d must be positive")
    degree = p**d
    points = np.arange(degree, dtype=np.int32)
    gens = []
    for i in range(d):
        place = p**i
        digit = (points // place) % p
        gens.append(Perm._wrap(points + ((digit + 1) % p - digit) * place))
    return PermGroup(degree, gens, order_hint=degree)


def disjoint_product(G: PermGroup, H: PermGroup) -> PermGroup:
    """G x H acting coordinatewise on the disjoint union of the two domains."""
    degree = G.degree + H.degree
    gens = []
    tail = np.arange(G.degree, degree, dtype=np.int32)
    for g in G.generators:
        gens.append(Perm._wrap(np.concatenate([g.images, tail])))
    head = np.arange(G.degree, dtype=np.int32)
    for h in H.generators:
        gens.append(Perm._wrap(np.concatenate([head, h.images + G.degree])))
    return PermGroup(degree, gens, order_hint=G.order() * H.order())


def product_action(G: PermGroup, H: PermGroup, *rest: PermGroup) -> PermGroup:
    """G x H acting coordinatewise on the cartesian product of the domains."""
    if rest:
        return product_action(product_action(G, H), *rest)
    dg, dh = G.degree, H.degree
    degree = dg * dh
    gens = []
    cols = np.arange(dh, dtype=np.int32)
    for g in G.generators:
        gens.append(Perm._wrap((g.images[:, None] * dh + cols[None, :]).ravel()))
    rows = np.arange(dg, dtype=np.int32)
    for h in H.generators:
        gens.append(Perm._wrap((rows[:, None] * dh + h.images[None, :]).ravel()))
    return PermGroup(degree, gens, order_hint=G.order() * H.order())


def product_point(d: int, l: int, h_degree: int) -> int:
    """Encode the pair (d, l) as a point of the product action."""
    return d * h_degree + l


def product_coords(point: int, h_degree: int) -> tuple[int, int]:
    return divmod(point, h_degree)


# -- prescribed minimal-base spectra --------------------------------------


def theorem2_group(X, p: int = 2) -> tuple[PermGroup, LabeledDomain]:
    """A group whose minimal-base cardinalities are exactly the set X.

    For X = {x1 < ... < xn} with x1 = 1, weave n-1 regular elementary
    abelian p-groups with xn disjoint p-cycles: block D1 carries (Z_p)^xn,
    block Dj (j = 2..n-1) carries (Z_p)^(xn - x_{n-j+1} + 1), and blocks
    Dn_1..Dn_xn carry one p-cycle each.  Generator i is the product of the
    i-th generator of every block (identity where the block has fewer than
    i generators).  For x1 > 1 the spectrum is shifted by x1 - 1 points via
    a disjoint symmetric factor.
    """
    xs = sorted({int(x) for x in X})
    if not xs:
        raise ValueError("X must be non-empty")
    if xs[0] < 1:
        raise ValueError("X must contain positive integers")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")

    if xs[0] > 1:
        shift = xs[0] - 1
        inner, inner_dom = theorem2_group([x - shift for x in xs], p)
        sym = symmetric(xs[0])
        G = disjoint_product(sym, inner)
        blocks = (("Sym", 0, xs[0]),) + tuple(
            (label, start + xs[0], size) for label, start, size in inner_dom.blocks
        )
        return G, LabeledDomain(G.degree, blocks)

    n = len(xs)
    xn = xs[-1]
    if n == 1:
        G = elem_abelian_regular(p, xn)
        return G, _single_block(G.degree, "D1")

    # per-block generator builders; block j=1 first, then middles, then cycles
    block_dims = [xn] + [xn - xs[n - j] + 1 for j in range(2, n)]
    block_groups = [elem_abelian_regular(p, dim) for dim in block_dims]
    cycle = cyclic_regular(p).generators[0]

    sizes = [g.degree for g in block_groups] + [p] * xn
    labels = [f"D{j + 1}" for j in range(len(block_groups))] + [
        f"D{n}_{i + 1}" for i in range(xn)
    ]
    starts = np.cumsum([0] + sizes[:-1]).tolist()
    degree = sum(sizes)

    gens = []
    for i in range(xn):
        images = np.arange(degree, dtype=np.int32)
        for grp, dim, start in zip(block_groups, block_dims, starts):
            if i < dim:
                piece = grp.generators[i]
                images[start : start + piece.degree] = piece.images + start
        cyc_start = starts[len(block_groups) + i]
        images[cyc_start : cyc_start + p] = cycle.images + cyc_start
        gens.append(Perm._wrap(images))

    G = PermGroup(degree, gens, order_hint=p**xn)
    dom = LabeledDomain(
        degree, tuple((lbl, st, sz) for lbl, st, sz in zip(labels, starts, sizes))
    )
    return G, dom


def theorem3_groups(a: int, b: int, kind: str = "M") -> PermGroup:
    """A transitive group whose minimal (kind="M") or irredundant (kind="I")
    base spectrum is the interval {a, ..., b}, with 2 <= a <= b.

    Products of symmetric groups in their product action.  Writing
    b = t(a-1) + r with 0 <= r < a-1: for kind="M" take t copies of S_{a+1}
    (plus one S_{r+2} when r > 0); for kind="I" take t copies plus S_{r+1}
    when r > 0, and t-1 copies plus S_a when r = 0 (t copies alone would
    overshoot the longest irredundant base by one).
    """
    if kind not in ("M", "I"):
        raise ValueError("kind must be 'M' or 'I'")
    if a < 2:
        raise ValueError("a must be at least 2: a transitive group with a "
                         "minimal base of size 1 is regular and has spectrum {1}")
    if b < a:
        raise ValueError("need a <= b")
    if a == b:
        return symmetric(a + 1)
    t, r = divmod(b, a - 1)
    factors: list[PermGroup]
    if kind == "M":
        factors = [symmetric(a + 1)] * t
        if r > 0:
            factors.append(symmetric(r + 2))
    else:
        if r > 0:
            factors = [symmetric(a + 1)] * t + [symmetric(r + 1)]
        else:
            factors = [symmetric(a + 1)] * (t - 1) + [symmetric(a)]
    if len(factors) == 1:
        return factors[0]
    return product_action(*factors)


# -- wreath products and coset actions ------------------------------------


def wreath_imprimitive(n: int, k: int) -> PermGroup:
    """S_n wr C_k on n*k points: k blocks of n, plus the block rotation."""
    if n < 2 or k < 2:
        raise ValueError("need n >= 2 and k >= 2")
    degree = n * k
    t = Perm.from_cycles(degree, (0, 1))
    c = Perm.from_cycles(degree, tuple(range(n)))
    rot = Perm._wrap(
        np.concatenate([np.arange(n, dtype=np.int32) + ((b + 1) % k) * n for b in range(k)])
    )
    return PermGroup(degree, [t, c, rot], order_hint=math.factorial(n) ** k * k)


def _wreath_subgroup_gens(n: int, k: int) -> list[Perm]:
    # generators of S_n^(k-2) x Stab(n-1) x 1 inside the imprimitive wreath
    degree = n * k
    gens = []
    for block in range(k - 2):
        off = block * n
        gens.append(Perm.from_cycles(degree, (off, off + 1)))
        gens.append(Perm.from_cycles(degree, tuple(range(off, off + n))))
    off = (k - 2) * n
    if n > 2:
        gens.append(Perm.from_cycles(degree, (off, off + 1)))
        gens.append(Perm.from_cycles(degree, tuple(range(off, off + n - 1))))
    return gens


def _wreath_decompose(g: Perm, n: int, k: int):
    # g = (y_0, ..., y_{k-1}; rot^j): block b maps to block b+j with y_b inside
    j = g[0] // n
    ys = []
    for b in range(k):
        off = b * n
        ys.append(tuple(g[off + v] % n for v in range(n)))
    return j, ys


def coset_action(
    W: PermGroup,
    H: PermGroup,
    expected_index: int,
    max_index: int = 5000,
    signature=None,
    exact_signature: bool = False,
) -> PermGroup:
    """Right-multiplication action of W on the right cosets of H.

    Breadth-first enumeration with a quadratic scan: a candidate ``Wg`` is
    matched against known representatives ``r`` by testing ``g * r^{-1}``
    for membership in H via H's stabilizer chain.  ``signature`` may supply
    a left-H-invariant fingerprint ``f(g, g_inverse) -> bytes`` to bucket
    that scan; with ``exact_signature`` the fingerprint is trusted to
    separate cosets and the membership test is skipped.  Point 0 is the
    coset H; further cosets are numbered in discovery order over
    representatives times generators (generator list order).
    """
    if expected_index > max_index:
        raise BudgetExceeded(
            f"coset index {expected_index} exceeds the configured ceiling {max_index}"
        )
    degree = W.degree
    h_chain = H.chain()
    if signature is None:
        h_labels, _ = H.orbit_partition()

        def signature(g, ginv, _labels=h_labels):
            return _labels[ginv.images].tobytes()

    reps: list[Perm] = [Perm.identity(degree)]
    inv_reps: list[Perm] = [Perm.identity(degree)]
    buckets: dict[bytes, list[int]] = {signature(reps[0], inv_reps[0]): [0]}
    images = [[-1] for _ in W.generators]

    qi = 0
    while qi < len(reps):
        rep = reps[qi]
        for gi, s in enumerate(W.generators):
            cand = rep * s
            cand_inv = cand.inverse()
            sig = signature(cand, cand_inv)
            target = None
            bucket = buckets.get(sig)
            if bucket is not None:
                if exact_signature:
                    target = bucket[0]
                else:
                    for idx in bucket:
                        if h_chain.contains(cand * inv_reps[idx]):
                            target = idx
                            break
            if target is None:
                target = len(reps)
                if target >= max_index:
                    raise BudgetExceeded(
                        f"coset enumeration exceeded the ceiling {max_index}"
                    )
                reps.append(cand)
                inv_reps.append(cand_inv)
                buckets.setdefault(sig, []).append(target)
                for col in images:
                    col.append(-1)
            images[gi][qi] = target
        qi += 1

    if len(reps) != expected_index:
        raise RuntimeError(
            f"coset enumeration found {len(reps)} cosets, expected {expected_index}"
        )
    return PermGroup(expected_index, [Perm(col) for col in images])


def wreath_coset_action(
    n: int,
    k: int,
    method: str = "chain",
    max_index: int = 5000,
) -> PermGroup:
    """S_n wr C_k acting on the right cosets of S_n^(k-2) x Stab(n-1) x 1.

    The default identifies cosets through chain membership tests;
    ``method="triples"`` instead uses the exact invariant (rotation
    exponent, image of the stabilized point in block k-2, block k-1
    component), a bijection onto the cosets.  Both produce identical
    numberings.
    """
    if n < 3 or k < 2:
        raise ValueError("need n >= 3 and k >= 2")
    if method not in ("chain", "triples"):
        raise ValueError(f"unknown method {method!r}")
    expected = math.factorial(n) * n * k
    W = wreath_imprimitive(n, k)
    degree = n * k
    h_order = math.factorial(n) ** (k - 2) * math.factorial(n - 1)
    H = PermGroup(degree, _wreath_subgroup_gens(n, k), order_hint=h_order)

    if method == "triples":

        def signature(g, ginv):
            j, ys = _wreath_decompose(g, n, k)
            return bytes([j, ys[k - 2][n - 1]]) + bytes(ys[k - 1])

        action = coset_action(
            W, H, expected, max_index, signature=signature, exact_signature=True
        )
    else:
        action = coset_action(W, H, expected, max_index)
    return PermGroup(
        expected, action.generators, order_hint=math.factorial(n) ** k * k
    )


# -- symmetric group on k-subsets ------------------------------------------


def k_subset_action(n: int, k: int) -> PermGroup:
    """S_n on the k-subsets of {0..n-1}, subsets in lexicographic order."""
    if not 1 <= k <= n // 2:
        raise ValueError("need 1 <= k <= n/2")
    subsets = list(combinations(range(n), k))
    rank = {s: i for i, s in enumerate(subsets)}
    gens = []
    for g in symmetric(n).generators:
        img = [rank[tuple(sorted(g[x] for x in s))] for s in subsets]
        gens.append(Perm(img))
    return PermGroup(len(subsets), gens, order_hint=math.factorial(n))


# -- GL(4, 2) on planes ----------------------------------------------------


def _rref_pair(a: int, b: int) -> tuple[int, int]:
    # reduced row echelon basis of the span of two independent 4-bit vectors
    if a.bit_length() < b.bit_length():
        a, b = b, a
    if a.bit_length() == b.bit_length():
        a ^= b
        if a.bit_length() < b.bit_length():
            a, b = b, a
    if (a >> (b.bit_length() - 1)) & 1:
        a ^= b
    return a, b


def gl42_on_2subspaces() -> PermGroup:
    """GL(4, 2) on the 35 planes (2-dimensional subspaces) of (F_2)^4.

    Generated by the basis rotation e_i -> e_{i+1} and the transvection
    e_0 -> e_0 + e_1; planes act by mapping basis vectors and
    re-canonicalizing.
    """
    planes = sorted({_rref_pair(a, b) for a in range(1, 16) for b in range(1, a)})
    assert len(planes) == 35
    rank = {pl: i for i, pl in enumerate(planes)}

    def apply(mat: list[int], v: int) -> int:
        out = 0
        for i in range(4):
            if (v >> i) & 1:
                out ^= mat[i]
        return out

    rotation = [1 << ((i + 1) % 4) for i in range(4)]
    transvection = [0b0011, 0b0010, 0b0100, 0b1000]
    gens = []
    for mat in (rotation, transvection):
        img = [rank[_rref_pair(apply(mat, a), apply(mat, b))] for a, b in planes]
        gens.append(Perm(img))
    return PermGroup(35, gens, order_hint=20160)


# -- spec documents --------------------------------------------------------


def _need(spec: dict, key: str, kind=int):
    if key not in spec:
        raise SpecError(f"spec {spec.get('type')!r} is missing {key!r}")
    try:
        if kind is int:
            return int(spec[key])
        return spec[key]
    except (TypeError, ValueError) as exc:
        raise SpecError(f"bad value for {key!r}: {spec[key]!r}") from exc


def build_group(spec: dict) -> tuple[PermGroup, LabeledDomain]:
    """Evaluate a group-spec document (see the JSON schema in the README)."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise SpecError("a group spec is an object with a 'type' field")
    t = spec["type"]
    try:
        if t == "sym":
            G = symmetric(_need(spec, "n"))
            return G, _single_block(G.degree)
        if t == "cyclic_regular":
            G = cyclic_regular(_need(spec, "p"))
            return G, _single_block(G.degree)
        if t == "elem_abelian_regular":
            G = elem_abelian_regular(_need(spec, "p"), _need(spec, "d"))
            return G, _single_block(G.degree, "vectors")
        if t == "disjoint_product":
            factors = _need(spec, "factors", list)
            if len(factors) < 2:
                raise SpecError("disjoint_product needs at least two factors")
            parts = [build_group(f) for f in factors]
            G = parts[0][0]
            blocks = [
                (f"F1:{lbl}", st, sz) for lbl, st, sz in parts[0][1].blocks
            ]
            for i, (Hi, dom) in enumerate(parts[1:], start=2):
                off = G.degree
                G = disjoint_product(G, Hi)
                blocks += [(f"F{i}:{lbl}", st + off, sz) for lbl, st, sz in dom.blocks]
            return G, LabeledDomain(G.degree, tuple(blocks))
        if t == "product_action":
            factors = _need(spec, "factors", list)
            if len(factors) < 2:
                raise SpecError("product_action needs at least two factors")
            parts = [build_group(f)[0] for f in factors]
            G = product_action(*parts)
            return G, _single_block(G.degree, "pairs")
        if t == "theorem2":
            xs = _need(spec, "X", list)
            return theorem2_group(xs, int(spec.get("p", 2)))
        if t == "theorem3_m":
            G = theorem3_groups(_need(spec, "a"), _need(spec, "b"), "M")
            return G, _single_block(G.degree, "tuples")
        if t == "theorem3_i":
            G = theorem3_groups(_need(spec, "a"), _need(spec, "b"), "I")
            return G, _single_block(G.degree, "tuples")
        if t == "wreath_coset":
            G = wreath_coset_action(
                _need(spec, "n"),
                _need(spec, "k"),
                max_index=int(spec.get("max_index", 5000)),
            )
            return G, _single_block(G.degree, "cosets")
        if t == "k_subsets":
            G = k_subset_action(_need(spec, "n"), _need(spec, "k"))
            return G, _single_block(G.degree, "subsets")
        if t == "gl42_planes":
            return gl42_on_2subspaces(), _single_block(35, "planes")
        if t == "explicit":
            degree = _need(spec, "degree")
            gens = [Perm(img) for img in _need(spec, "generators", list)]
            return PermGroup(degree, gens), _single_block(degree)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(f"invalid spec {spec!r}: {exc}") from exc
    raise SpecError(f"unknown construction type {t!r}")

"""Base-size analytics: spectra of minimal and irredundant bases.

Search notes, which justify the pruned mode:

* Shrinking a group refines its orbits, so the minimum of a point's orbit
  never decreases along a descending stabilizer chain, and a point lying in
  an orbit of size > 1 is never one of the already-fixed points.  Repeatedly
  translating a target set by stabilizer elements so that its next point
  becomes the minimum of that point's current orbit therefore yields an
  enumeration of one representative per set in strictly ascending order of
  the chosen minima.  Minimal bases and independent sets are searched that
  way: per-level orbit minima, ascending.
* Every subset of a minimal base (and of an independent set) is itself
  independent, so branches whose chosen points stop being independent are
  pruned without losing any leaf.
* Irredundant sequences are order-sensitive, so their search keeps every
  orbit minimum as a candidate at each level and instead collapses repeated
  stabilizer subgroups: the set of reachable lengths below a node depends
  only on the node's pointwise stabilizer, identified exactly by its sorted
  element table when the order is small enough to enumerate.

All searches are pure functions of immutable groups and are deterministic;
node budgets abort with ``BudgetExceeded`` rather than truncate a result.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded
from .group import PermGroup

__all__ = [
    "SizeSet",
    "BaseStats",
    "IndicatorVectors",
    "SearchBudget",
    "is_base",
    "is_minimal_base",
    "is_irredundant_sequence",
    "is_independent_set",
    "minimal_base_sizes",
    "irredundant_base_sizes",
    "min_base_size",
    "height",
    "base_stats",
    "is_ibis",
    "is_mibis",
    "indicator_vectors",
    "grid_minimal_base",
]

_MEMO_ORDER_LIMIT = 3000


class SizeSet:
    """A sorted set of base cardinalities."""

    __slots__ = ("sizes",)

    def __init__(self, sizes):
        normalized = tuple(sorted({int(s) for s in sizes}))
        if not normalized:
            raise ValueError("a size set cannot be empty")
        if normalized[0] < 1:
            raise ValueError("base sizes are positive")
        self.sizes = normalized

    @property
    def min(self) -> int:
        return self.sizes[0]

    @property
    def max(self) -> int:
        return self.sizes[-1]

    @property
    def is_interval(self) -> bool:
        return self.max - self.min + 1 == len(self.sizes)

    def to_list(self) -> list[int]:
        return list(self.sizes)

    def __iter__(self):
        return iter(self.sizes)

    def __len__(self):
        return len(self.sizes)

    def __contains__(self, item):
        return item in self.sizes

    def __eq__(self, other):
        if isinstance(other, SizeSet):
            return self.sizes == other.sizes
        return NotImplemented

    def __hash__(self):
        return hash(self.sizes)

    def __repr__(self):
        return f"SizeSet({{{', '.join(map(str, self.sizes))}}})"


@dataclass(frozen=True)
class BaseStats:
    """b = smallest base size, B = largest minimal-base size, Imax = longest irredundant base."""

    b: int
    B: int
    Imax: int


@dataclass(frozen=True)
class IndicatorVectors:
    """Per-coordinate movability vectors of a minimal base of a product action."""

    vG: tuple[int, ...]
    vH: tuple[int, ...]

    @property
    def nG(self) -> int:
        return sum(self.vG)

    @property
    def nH(self) -> int:
        return sum(self.vH)


class SearchBudget:
    """Shared node-count ceiling for one run of searches."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"search budget of {self.limit} nodes exceeded")


def _as_budget(budget) -> SearchBudget:
    if budget is None:
        return SearchBudget(None)
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(int(budget))


def _require_nontrivial(G: PermGroup) -> None:
    if G.is_trivial():
        raise ValueError("the trivial group has no bases; its size sets are undefined")


def _check_mode(mode: str) -> None:
    if mode not in ("pruned", "exhaustive"):
        raise ValueError(f"mode must be 'pruned' or 'exhaustive', got {mode!r}")


def _minima_candidates(labels, counts, last):
    ar = np.arange(labels.size)
    return np.nonzero((labels == ar) & (counts > 1) & (ar > last))[0]


def _point_candidates(labels, counts, last):
    ar = np.arange(labels.size)
    return np.nonzero((counts[labels] > 1) & (ar > last))[0]


# -- predicates ---------------------------------------------------------


def is_base(G: PermGroup, points) -> bool:
    """True iff the pointwise stabilizer of ``points`` is trivial."""
    return G.pointwise_stabilizer(points).order() == 1


def is_minimal_base(G: PermGroup, points) -> bool:
    """True iff ``points`` is a base and no single deletion stays one."""
    pts = tuple(sorted(set(points)))
    if not is_base(G, pts):
        return False
    return all(
        not is_base(G, pts[:i] + pts[i + 1 :]) for i in range(len(pts))
    )


def is_irredundant_sequence(G: PermGroup, seq) -> bool:
    """True iff each point strictly shrinks the stabilizer, ending at the identity."""
    H = G
    for x in seq:
        Hx = H.point_stabilizer(int(x))
        if Hx.order() == H.order():
            return False
        H = Hx
    return H.order() == 1


def is_independent_set(G: PermGroup, points) -> bool:
    """True iff removing any point enlarges the pointwise stabilizer."""
    pts = tuple(sorted(set(points)))
    full = G.pointwise_stabilizer(pts).order()
    return all(
        G.pointwise_stabilizer(pts[:i] + pts[i + 1 :]).order() > full
        for i in range(len(pts))
    )


# -- minimal bases ------------------------------------------------------


def minimal_base_sizes(G: PermGroup, mode: str = "pruned", budget=None, witnesses: bool = False):
    """The exact set of cardinalities of minimal bases of ``G``.

    Depth-first over independent point sets with strict stabilizer descent:
    a set that is both independent and a base is a minimal base.  Exhaustive
    mode extends with any larger point, pruned mode with per-level orbit
    minima (ascending; see the module notes).  With ``witnesses=True``
    returns ``(sizes, {size: points})`` with one witness per size.
    """
    _require_nontrivial(G)
    _check_mode(mode)
    counter = _as_budget(budget)
    G.order()
    pruned = mode == "pruned"
    pick = _minima_candidates if pruned else _point_candidates
    classes = G.stabilizer_class_labels() if pruned else None
    found: dict[int, tuple[int, ...]] = {}

    def recurse(points, last, H, dels):
        counter.tick()
        labels_h, counts_h = H.orbit_partition()
        cands = pick(labels_h, counts_h, last)
        if cands.size == 0:
            return
        parts = [K.orbit_partition() for K in dels]
        h_ord = H.order()
        seen_classes = set()
        for xi in cands:
            x = int(xi)
            if pruned:
                c = int(classes[x])
                if c in seen_classes:
                    continue  # equal point stabilizer: interchangeable with an earlier candidate
                seen_classes.add(c)
            hx_order = h_ord // int(counts_h[labels_h[x]])
            independent = True
            for K, (lab_k, cnt_k) in zip(dels, parts):
                if K.order() // int(cnt_k[lab_k[x]]) <= hx_order:
                    independent = False
                    break
            if not independent:
                continue
            if hx_order == 1:
                size = len(points) + 1
                if size not in found:
                    found[size] = points + (x,)
                continue
            Hx = H.point_stabilizer(x)
            dels_x = tuple(
                K if int(cnt_k[lab_k[x]]) == 1 else K.point_stabilizer(x)
                for K, (lab_k, cnt_k) in zip(dels, parts)
            ) + (H,)
            recurse(points + (x,), x, Hx, dels_x)

    recurse((), -1, G, ())
    sizes = SizeSet(found)
    if witnesses:
        return sizes, {s: found[s] for s in sorted(found)}
    return sizes


def min_base_size(G: PermGroup, budget=None) -> int:
    """Smallest base cardinality, by branch and bound over the pruned tree.

    Candidates are tried largest orbit first so a good bound appears early;
    a node is cut when even dividing by its largest orbit size at every
    remaining step cannot reach the identity before the incumbent.
    """
    _require_nontrivial(G)
    counter = _as_budget(budget)
    G.order()
    classes = G.stabilizer_class_labels()
    best: int | None = None

    def bound_steps(order: int, max_orbit: int) -> int:
        k = 0
        v = 1
        while v < order:
            v *= max_orbit
            k += 1
        return k

    def recurse(depth, last, H, dels):
        nonlocal best
        counter.tick()
        labels_h, counts_h = H.orbit_partition()
        cands = _minima_candidates(labels_h, counts_h, last)
        if cands.size == 0:
            return
        max_orbit = int(counts_h.max())
        if best is not None and depth + bound_steps(H.order(), max_orbit) >= best:
            return
        parts = [K.orbit_partition() for K in dels]
        h_ord = H.order()
        sizes_at = counts_h[labels_h[cands]]
        order_ix = np.lexsort((cands, -sizes_at))
        seen_classes = set()
        for oi in order_ix:
            x = int(cands[oi])
            c = int(classes[x])
            if c in seen_classes:
                continue
            seen_classes.add(c)
            hx_order = h_ord // int(sizes_at[oi])
            independent = True
            for K, (lab_k, cnt_k) in zip(dels, parts):
                if K.order() // int(cnt_k[lab_k[x]]) <= hx_order:
                    independent = False
                    break
            if not independent:
                continue
            if hx_order == 1:
                if best is None or depth + 1 < best:
                    best = depth + 1
                continue
            if best is not None and depth + 1 + bound_steps(hx_order, max_orbit) >= best:
                continue
            Hx = H.point_stabilizer(x)
            dels_x = tuple(
                K if int(cnt_k[lab_k[x]]) == 1 else K.point_stabilizer(x)
                for K, (lab_k, cnt_k) in zip(dels, parts)
            ) + (H,)
            recurse(depth + 1, x, Hx, dels_x)

    recurse(0, -1, G, ())
    assert best is not None  # every non-trivial group has a base
    return best


# -- independent sets ---------------------------------------------------


def height(G: PermGroup, mode: str = "pruned", budget=None) -> int:
    """Maximum cardinality of an independent set."""
    _require_nontrivial(G)
    _check_mode(mode)
    counter = _as_budget(budget)
    G.order()
    pruned = mode == "pruned"
    pick = _minima_candidates if pruned else _point_candidates
    classes = G.stabilizer_class_labels() if pruned else None
    best = 0

    def recurse(depth, last, H, dels):
        nonlocal best
        counter.tick()
        labels_h, counts_h = H.orbit_partition()
        cands = pick(labels_h, counts_h, last)
        parts = [K.orbit_partition() for K in dels]
        h_ord = H.order()
        seen_classes = set()
        for xi in cands:
            x = int(xi)
            if pruned:
                c = int(classes[x])
                if c in seen_classes:
                    continue
                seen_classes.add(c)
            hx_order = h_ord // int(counts_h[labels_h[x]])
            independent = True
            for K, (lab_k, cnt_k) in zip(dels, parts):
                if K.order() // int(cnt_k[lab_k[x]]) <= hx_order:
                    independent = False
                    break
            if not independent:
                continue
            if depth + 1 > best:
                best = depth + 1
            if hx_order == 1:
                continue
            Hx = H.point_stabilizer(x)
            dels_x = tuple(
                K if int(cnt_k[lab_k[x]]) == 1 else K.point_stabilizer(x)
                for K, (lab_k, cnt_k) in zip(dels, parts)
            ) + (H,)
            recurse(depth + 1, x, Hx, dels_x)

    recurse(0, -1, G, ())
    return best


# -- irredundant bases --------------------------------------------------


def _element_digest(H: PermGroup) -> bytes:
    # exact subgroup identity: hash of the sorted element table
    blobs = sorted(p.images.tobytes() for p in H.chain().elements())
    h = hashlib.sha256()
    for b in blobs:
        h.update(b)
    return h.digest()


def irredundant_base_sizes(G: PermGroup, mode: str = "pruned", budget=None, witnesses: bool = False):
    """The exact set of lengths of irredundant bases of ``G``.

    Ordered sequences with strict stabilizer descent.  Pruned mode restricts
    candidates to per-level orbit minima; exhaustive mode takes every moved
    point.  Nodes with equal pointwise stabilizers share their futures, so
    small stabilizers are memoized by their exact element table.
    """
    _require_nontrivial(G)
    _check_mode(mode)
    counter = _as_budget(budget)
    G.order()
    pruned = mode == "pruned"
    pick = _minima_candidates if pruned else _point_candidates
    classes = G.stabilizer_class_labels() if pruned else None
    memo: dict[tuple[int, bytes], frozenset[int]] = {}

    def explore(H: PermGroup) -> frozenset[int]:
        counter.tick()
        sig = None
        h_ord = H.order()
        if h_ord <= _MEMO_ORDER_LIMIT:
            sig = (h_ord, _element_digest(H))
            hit = memo.get(sig)
            if hit is not None:
                return hit
        labels, counts = H.orbit_partition()
        out = set()
        seen_classes = set()
        for xi in pick(labels, counts, -1):
            x = int(xi)
            if pruned:
                c = int(classes[x])
                if c in seen_classes:
                    continue
                seen_classes.add(c)
            hx_order = h_ord // int(counts[labels[x]])
            if hx_order == 1:
                out.add(1)
            else:
                out.update(l + 1 for l in explore(H._point_stabilizer_chained(x)))
        res = frozenset(out)
        if sig is not None:
            memo[sig] = res
        return res

    lengths = explore(G)
    sizes = SizeSet(lengths)
    if not witnesses:
        return sizes
    found: dict[int, tuple[int, ...]] = {}
    for target in sizes:
        seq: list[int] = []
        H = G
        rem = target
        while rem:
            labels, counts = H.orbit_partition()
            h_ord = H.order()
            for xi in pick(labels, counts, -1):
                x = int(xi)
                hx_order = h_ord // int(counts[labels[x]])
                if hx_order == 1:
                    if rem == 1:
                        seq.append(x)
                        rem = 0
                        break
                    continue
                if rem == 1:
                    continue
                Hx = H._point_stabilizer_chained(x)
                if (rem - 1) in explore(Hx):
                    seq.append(x)
                    H = Hx
                    rem -= 1
                    break
            else:
                raise RuntimeError("witness reconstruction failed")
        found[target] = tuple(seq)
    return sizes, found


# -- aggregates ---------------------------------------------------------


def base_stats(G: PermGroup, mode: str = "pruned", budget=None) -> BaseStats:
    """b, B, and Imax from the two size-set searches."""
    m = minimal_base_sizes(G, mode, budget)
    i = irredundant_base_sizes(G, mode, budget)
    if m.min != i.min:
        raise RuntimeError(
            f"minimal and irredundant spectra disagree on b: {m.min} vs {i.min}"
        )
    return BaseStats(b=m.min, B=m.max, Imax=i.max)


def is_ibis(G: PermGroup, mode: str = "pruned", budget=None) -> bool:
    """All irredundant bases share one length."""
    return len(irredundant_base_sizes(G, mode, budget)) == 1


def is_mibis(G: PermGroup, mode: str = "pruned", budget=None) -> bool:
    """All minimal bases share one cardinality."""
    return len(minimal_base_sizes(G, mode, budget)) == 1


# -- product-action tooling ---------------------------------------------


def indicator_vectors(G: PermGroup, H: PermGroup, base) -> IndicatorVectors:
    """Movability vectors of a minimal base of the product action of G and H.

    ``base`` is a list of (G-point, H-point) pairs.  Coordinate ``i`` of the
    G-vector is 1 iff some element of G moves the i-th first coordinate while
    fixing every other first coordinate, i.e. iff the pointwise stabilizer in
    G of the other first coordinates does not fix it; the H-vector likewise.
    """
    from .constructions import product_action

    pairs = [(int(d), int(l)) for d, l in base]
    for d, l in pairs:
        if not (0 <= d < G.degree and 0 <= l < H.degree):
            raise ValueError(f"pair ({d}, {l}) outside the product domain")
    prod = product_action(G, H)
    points = {d * H.degree + l for d, l in pairs}
    if not is_minimal_base(prod, points):
        raise ValueError("the given pairs are not a minimal base of the product action")

    def vector(group, coords):
        out = []
        for i in range(len(coords)):
            others = {coords[j] for j in range(len(coords)) if j != i}
            stab = group.pointwise_stabilizer(others)
            moved = any(g[coords[i]] != coords[i] for g in stab.generators)
            out.append(1 if moved else 0)
        return tuple(out)

    return IndicatorVectors(
        vG=vector(G, [d for d, _ in pairs]),
        vH=vector(H, [l for _, l in pairs]),
    )


def grid_minimal_base(base_g, base_h, k: int) -> list[tuple[int, int]]:
    """The diagonal-then-horizontal-then-vertical grid recipe.

    Takes ordered minimal bases of the two factors and a target size ``k``
    with ``max(a, b) <= k <= a + b - 2``; returns ``k`` pairs forming a
    minimal base of the product action.  Columns are points of the first
    base, rows of the second; the layout avoids closing any rectangle.
    """
    g = [int(x) for x in base_g]
    h = [int(x) for x in base_h]
    if len(g) > len(h):
        return [(d, l) for l, d in grid_minimal_base(h, g, k)]
    a, b = len(g), len(h)
    lo, hi = max(a, b), a + b - 2
    if not lo <= k <= hi:
        raise ValueError(f"k={k} outside [{lo}, {hi}]")
    diag = a + b - k - 1
    pairs = [(g[t], h[t]) for t in range(diag)]
    pairs += [(g[t], h[diag - 1]) for t in range(diag, a - 1)]
    pairs += [(g[a - 1], h[t]) for t in range(diag, b)]
    return pairs

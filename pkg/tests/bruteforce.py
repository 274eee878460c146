"""Naive reference implementations used as oracles.

Everything here works on plain tuples and exhaustive enumeration, entirely
independent of the library's chain-based engine.  Only usable at desk scale
(orders up to a few thousand, degrees up to ~20).
"""

from itertools import combinations, permutations


def compose(p, q):
    """Apply p first, then q."""
    return tuple(q[i] for i in p)


def inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def closure(gens, limit=None):
    """All elements of the generated group, as a set of tuples."""
    if not gens:
        return set()
    n = len(gens[0])
    ident = tuple(range(n))
    elements = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        new = []
        for e in frontier:
            for g in gens:
                x = compose(e, g)
                if x not in elements:
                    elements.add(x)
                    new.append(x)
                    if limit is not None and len(elements) > limit:
                        raise RuntimeError(f"closure exceeded {limit} elements")
        frontier = new
    return elements


def stabilizer(elements, points):
    pts = tuple(points)
    return {e for e in elements if all(e[x] == x for x in pts)}


def orbit(elements, point):
    return {e[point] for e in elements}


def is_base(elements, points):
    return len(stabilizer(elements, points)) == 1


def minimal_base_sizes(degree, elements):
    """Sizes of minimal bases by scanning every subset."""
    sizes = set()
    for r in range(1, degree + 1):
        for subset in combinations(range(degree), r):
            if not is_base(elements, subset):
                continue
            if all(
                not is_base(elements, subset[:i] + subset[i + 1 :])
                for i in range(r)
            ):
                sizes.add(r)
    return sizes


def irredundant_base_sizes(degree, elements):
    """Lengths of irredundant bases by exploring every descent sequence."""
    memo = {}

    def lengths(stab):
        key = frozenset(stab)
        got = memo.get(key)
        if got is not None:
            return got
        if len(stab) == 1:
            out = {0}
        else:
            out = set()
            for x in range(degree):
                sub = {e for e in stab if e[x] == x}
                if len(sub) < len(stab):
                    out |= {l + 1 for l in lengths(sub)}
        memo[key] = out
        return out

    return lengths(elements)


def independent_set_sizes(degree, elements):
    """Sizes of independent sets (every point's removal grows the stabilizer)."""
    sizes = {0}
    for r in range(1, degree + 1):
        found = False
        for subset in combinations(range(degree), r):
            full = len(stabilizer(elements, subset))
            if all(
                len(stabilizer(elements, subset[:i] + subset[i + 1 :])) > full
                for i in range(r)
            ):
                sizes.add(r)
                found = True
        if not found:
            break
    return sizes


def height(degree, elements):
    return max(independent_set_sizes(degree, elements))


def is_irredundant_sequence(elements, seq):
    stab = set(elements)
    for x in seq:
        sub = {e for e in stab if e[x] == x}
        if len(sub) == len(stab):
            return False
        stab = sub
    return len(stab) == 1

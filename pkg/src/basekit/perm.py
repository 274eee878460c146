"""Permutations of {0, ..., d-1} stored as immutable image arrays.

Actions are written on the right throughout: ``p * q`` applies ``p`` first
and then ``q``, so ``(p * q)[i] == q[p[i]]``.  Points are 0-indexed and the
degree is fixed per permutation; there is no implicit extension by fixed
points.
"""

from __future__ import annotations

import numpy as np

__all__ = ["Perm"]

_ARANGE_CACHE: dict[int, np.ndarray] = {}


def _arange(n: int) -> np.ndarray:
    arr = _ARANGE_CACHE.get(n)
    if arr is None:
        arr = np.arange(n, dtype=np.int32)
        arr.setflags(write=False)
        _ARANGE_CACHE[n] = arr
    return arr


class Perm:
    """A bijection on {0, ..., degree-1} given by its image sequence.

    Instances are immutable, hashable, and safe to share between threads.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        arr = np.array(images, dtype=np.int32)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a permutation needs at least one point")
        n = arr.size
        if (arr < 0).any() or (arr >= n).any() or np.bincount(arr, minlength=n).max() != 1:
            raise ValueError(f"images do not form a permutation of 0..{n - 1}: {images!r}")
        arr.setflags(write=False)
        self.images = arr
        self._hash = None

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Perm":
        # arr must already be an int32 bijection; skips validation
        arr.setflags(write=False)
        p = object.__new__(cls)
        p.images = arr
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._wrap(_arange(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles) -> "Perm":
        """Build a permutation from disjoint cycles, e.g. ``from_cycles(4, (0, 1), (2, 3))``."""
        images = np.arange(degree, dtype=np.int32)
        seen: set[int] = set()
        for cycle in cycles:
            for pt in cycle:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} outside 0..{degree - 1}")
                if pt in seen:
                    raise ValueError(f"point {pt} appears in more than one cycle")
                seen.add(pt)
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if len(cycle) > 1:
                images[cycle[-1]] = cycle[0]
        return cls._wrap(images)

    @property
    def degree(self) -> int:
        return self.images.size

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition, ``self`` first: ``(p * q)[i] == q[p[i]]``."""
        if not isinstance(other, Perm):
            return NotImplemented
        if self.images.size != other.images.size:
            raise ValueError(
                f"degree mismatch: {self.images.size} vs {other.images.size}"
            )
        return Perm._wrap(other.images[self.images])

    def inverse(self) -> "Perm":
        inv = np.empty_like(self.images)
        inv[self.images] = _arange(self.images.size)
        return Perm._wrap(inv)

    def __invert__(self) -> "Perm":
        return self.inverse()

    def __getitem__(self, point: int) -> int:
        """Image of a point; raises ``IndexError`` outside 0..degree-1."""
        if not 0 <= point < self.images.size:
            raise IndexError(f"point {point} outside 0..{self.images.size - 1}")
        return int(self.images[point])

    def is_identity(self) -> bool:
        return bool((self.images == _arange(self.images.size)).all())

    def support(self) -> tuple[int, ...]:
        """Points moved by the permutation; empty iff identity."""
        moved = np.nonzero(self.images != _arange(self.images.size))[0]
        return tuple(int(i) for i in moved)

    def smallest_moved(self) -> int | None:
        diff = self.images != _arange(self.images.size)
        idx = diff.argmax()
        return int(idx) if diff[idx] else None

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its smallest point."""
        out = []
        seen = np.zeros(self.images.size, dtype=bool)
        for start in range(self.images.size):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            nxt = int(self.images[start])
            while nxt != start:
                cyc.append(nxt)
                seen[nxt] = True
                nxt = int(self.images[nxt])
            out.append(tuple(cyc))
        return out

    def to_list(self) -> list[int]:
        """Image sequence as plain ints, the JSON wire form."""
        return [int(i) for i in self.images]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images.size == other.images.size and bool(
            (self.images == other.images).all()
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.images.tobytes())
            self._hash = h
        return h

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Perm.identity({self.images.size})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Perm[{self.images.size}: {body}]"

"""312-avoiding permutations, polygon triangulations and the clip-sequence bijection.

Vertices of the (n+2)-gon are labeled 1..n+2 clockwise.  A diagonal is stored as
a normalized pair ``(a, b)`` with ``a < b``.  A triangulation of the (n+2)-gon is
indexed by the 312-avoiding permutation of 1..n recording the order in which ear
vertices are clipped (smallest available label first).

>>> t = triangulation_of(Permutation312.parse("154362"))
>>> sorted(t.diagonals)
[Diagonal(a=2, b=6), Diagonal(a=2, b=7), Diagonal(a=2, b=8), Diagonal(a=3, b=6), Diagonal(a=4, b=6)]
>>> str(clip_sequence(t))
'154362'
"""

from __future__ import annotations

import bisect
import heapq
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import MalformedInput

__all__ = [
    "Permutation312", "Diagonal", "Triangle", "Triangulation",
    "is_312_avoiding", "enumerate_312", "catalan",
    "clip_sequence", "triangulation_of", "rotate_triangulation",
    "internal_triangle_count", "fan_triangulation", "wrap",
]


def wrap(x: int, size: int) -> int:
    """Reduce a vertex label into 1..size (so that 0 maps to ``size``)."""
    return (x - 1) % size + 1


def _check_permutation(word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(word)
    if any(not isinstance(x, int) or isinstance(x, bool) for x in word):
        raise MalformedInput(f"permutation letters must be integers: {word!r}")
    if sorted(word) != list(range(1, len(word) + 1)):
        raise MalformedInput(f"not a permutation of 1..{len(word)}: {word!r}")
    return word


def is_312_avoiding(word: Sequence[int]) -> bool:
    """True iff ``word`` has no letters ``x .. y .. z`` (in that order) with ``x > z > y``.

    Raises MalformedInput when ``word`` is not a permutation of 1..n.
    """
    word = _check_permutation(word)
    prefix_max = 0
    for b, middle in enumerate(word):
        # a 312 exists with this middle iff some later letter lies strictly
        # between it and the largest earlier letter
        if prefix_max > middle + 1:
            for later in word[b + 1:]:
                if middle < later < prefix_max:
                    return False
        prefix_max = max(prefix_max, middle)
    return True


@dataclass(frozen=True, order=True)
class Permutation312:
    """A 312-avoiding permutation in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", _check_permutation(self.word))
        if not is_312_avoiding(self.word):
            raise MalformedInput(f"{self.word!r} contains the pattern 312")

    @classmethod
    def _unchecked(cls, word: Sequence[int]) -> "Permutation312":
        p = object.__new__(cls)
        object.__setattr__(p, "word", tuple(word))
        return p

    @classmethod
    def parse(cls, text: str) -> "Permutation312":
        """Parse ``"154362"`` (n <= 9) or ``"1,5,4,3,6,2"`` (any n)."""
        text = text.strip()
        try:
            if "," in text or " " in text:
                word = [int(x) for x in text.replace(",", " ").split()]
            else:
                word = [int(ch) for ch in text]
        except ValueError:
            raise MalformedInput(f"cannot parse permutation {text!r}") from None
        return cls(tuple(word))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __str__(self):
        if self.n <= 9:
            return "".join(str(x) for x in self.word)
        return ",".join(str(x) for x in self.word)

    def inverse(self) -> tuple[int, ...]:
        """Positions (0-based) of each letter; ``inverse()[x-1]`` is where ``x`` sits."""
        pos = [0] * self.n
        for i, x in enumerate(self.word):
            pos[x - 1] = i
        return tuple(pos)


def enumerate_312(n: int) -> list[Permutation312]:
    """All 312-avoiding permutations of 1..n in lexicographic order.

    These are exactly the words a stack can output when fed 1, 2, ..., n, which
    gives a pruning-free generator.  ``n = 0`` yields the single empty word.
    """
    if n < 0:
        raise MalformedInput("n must be nonnegative")
    out: list[Permutation312] = []
    word: list[int] = []
    stack: list[int] = []

    def extend(next_in: int):
        if len(word) == n:
            out.append(Permutation312._unchecked(word))
            return
        # popping the stack top always gives the smallest available letter
        if stack:
            top = stack.pop()
            word.append(top)
            extend(next_in)
            word.pop()
            stack.append(top)
        for m in range(next_in, n + 1):
            stack.extend(range(next_in, m))
            word.append(m)
            extend(m + 1)
            word.pop()
            del stack[len(stack) - (m - next_in):]

    extend(1)
    return out


def catalan(n: int) -> int:
    if n < 0:
        raise MalformedInput("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


class Diagonal(NamedTuple):
    a: int
    b: int

    @classmethod
    def of(cls, x: int, y: int, n: int) -> "Diagonal":
        """Normalized diagonal of the (n+2)-gon between labels ``x`` and ``y`` (taken mod n+2)."""
        size = n + 2
        x, y = wrap(x, size), wrap(y, size)
        if x > y:
            x, y = y, x
        d = cls(x, y)
        if not d.is_valid(n):
            raise MalformedInput(f"D({x},{y}) is not a diagonal of the {size}-gon")
        return d

    def is_valid(self, n: int) -> bool:
        return 1 <= self.a < self.b <= n + 2 and 2 <= self.b - self.a <= n

    def crosses(self, other: "Diagonal") -> bool:
        a, b = self
        c, d = other
        return (a < c < b < d) or (c < a < d < b)

    def __str__(self):
        return f"D{self.a},{self.b}"


class Triangle(NamedTuple):
    """A triangle with vertices in clockwise order and its sides flagged as diagonals.

    ``diagonal_sides`` refers to the sides ``(v1, v2), (v2, v3), (v1, v3)``.
    """

    v1: int
    v2: int
    v3: int
    diagonal_sides: tuple[bool, bool, bool]

    @property
    def internal(self) -> bool:
        return all(self.diagonal_sides)

    def sides(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        return (self.v1, self.v2), (self.v2, self.v3), (self.v1, self.v3)


def _is_side(x: int, y: int, size: int) -> bool:
    return abs(x - y) == 1 or {x, y} == {1, size}


def _laminar(diagonals: Iterable[Diagonal]) -> bool:
    """Chords on a convex polygon are pairwise non-crossing iff their intervals nest."""
    stack: list[int] = []
    for a, b in sorted(diagonals, key=lambda d: (d.a, -d.b)):
        while stack and stack[-1] <= a:
            stack.pop()
        if stack and b > stack[-1]:
            return False
        stack.append(b)
    return True


@dataclass(frozen=True)
class Triangulation:
    """A maximal set of non-crossing diagonals of the (n+2)-gon."""

    n: int
    diagonals: frozenset[Diagonal]

    def __post_init__(self):
        if self.n < 1:
            raise MalformedInput("a triangulation needs n >= 1")
        diags = frozenset(Diagonal(*d) if not isinstance(d, Diagonal) else d
                          for d in self.diagonals)
        object.__setattr__(self, "diagonals", diags)
        if len(diags) != self.n - 1:
            raise MalformedInput(
                f"expected {self.n - 1} diagonals for the {self.size}-gon, got {len(diags)}")
        for d in diags:
            if not d.is_valid(self.n):
                raise MalformedInput(f"{d} is not a diagonal of the {self.size}-gon")
        if not _laminar(diags):
            raise MalformedInput("diagonals cross")

    @classmethod
    def _unchecked(cls, n: int, diagonals: Iterable[Diagonal]) -> "Triangulation":
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "diagonals", frozenset(diagonals))
        return t

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Triangulation":
        return cls(n, frozenset(Diagonal.of(x, y, n) for x, y in pairs))

    @property
    def size(self) -> int:
        """Number of polygon vertices, n + 2."""
        return self.n + 2

    def sorted_diagonals(self) -> list[Diagonal]:
        return sorted(self.diagonals)

    def neighbors(self) -> dict[int, set[int]]:
        """Adjacency over polygon sides and diagonals."""
        size = self.size
        adj = {v: {wrap(v - 1, size), wrap(v + 1, size)} for v in range(1, size + 1)}
        for a, b in self.diagonals:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def triangles(self) -> list[Triangle]:
        """All n triangles, sorted by vertex labels."""
        size = self.size
        adj = self.neighbors()
        out = []
        for u in range(1, size + 1):
            for v in adj[u]:
                if v <= u:
                    continue
                for w in adj[u] & adj[v]:
                    if w > v:
                        out.append(Triangle(u, v, w, (
                            not _is_side(u, v, size),
                            not _is_side(v, w, size),
                            not _is_side(u, w, size))))
        out.sort()
        return out

    def __str__(self):
        return "{" + ", ".join(str(d) for d in self.sorted_diagonals()) + "}"


def fan_triangulation(n: int, apex: int = 1) -> Triangulation:
    """All diagonals share the vertex ``apex``."""
    size = n + 2
    return Triangulation(n, frozenset(
        Diagonal.of(apex, apex + k, n) for k in range(2, size - 1)))


def clip_sequence(t: Triangulation) -> Permutation312:
    """Record ear middles, always clipping the smallest-labeled one, until two vertices remain."""
    size = t.size
    degree = [0] * (size + 1)
    for a, b in t.diagonals:
        degree[a] += 1
        degree[b] += 1
    nxt = [0] + [wrap(v + 1, size) for v in range(1, size + 1)]
    prv = [0] + [wrap(v - 1, size) for v in range(1, size + 1)]
    alive = size
    ears = [v for v in range(1, size + 1) if degree[v] == 0]
    heapq.heapify(ears)
    word = []
    while alive > 2:
        assert alive == 3 or len(ears) >= 2, "a triangulated polygon has at least two ears"
        v = heapq.heappop(ears)
        u, w = prv[v], nxt[v]
        word.append(v)
        nxt[u], prv[w] = w, u
        alive -= 1
        if alive >= 3:
            # the chord u-w becomes a side of the remaining polygon
            for x in (u, w):
                degree[x] -= 1
                if degree[x] == 0:
                    heapq.heappush(ears, x)
    return Permutation312._unchecked(word)


def triangulation_of(p: Permutation312) -> Triangulation:
    """Inverse of :func:`clip_sequence`: re-insert the clipped ears in reverse order."""
    n = p.n
    if n == 0:
        raise MalformedInput("the empty permutation has no polygon")
    size = n + 2
    present = [n + 1, n + 2]
    diagonals = []
    for v in reversed(p.word):
        k = bisect.bisect_left(present, v)
        before = present[k - 1] if k > 0 else present[-1]
        after = present[k] if k < len(present) else present[0]
        present.insert(k, v)
        if len(present) >= 4:
            diagonals.append(Diagonal.of(before, after, n))
    assert len(present) == size
    return Triangulation._unchecked(n, diagonals)


def rotate_triangulation(t: Triangulation, steps: int) -> Triangulation:
    """Counterclockwise rotation: every ``D(a,b)`` becomes ``D(a-steps, b-steps)``."""
    size = t.size
    out = []
    for a, b in t.diagonals:
        x, y = wrap(a - steps, size), wrap(b - steps, size)
        out.append(Diagonal(x, y) if x < y else Diagonal(y, x))
    return Triangulation._unchecked(t.n, out)


def internal_triangle_count(t: Triangulation) -> int:
    return sum(1 for tri in t.triangles() if tri.internal)


def iter_triangulations(n: int) -> Iterator[tuple[Permutation312, Triangulation]]:
    for p in enumerate_312(n):
        yield p, triangulation_of(p)

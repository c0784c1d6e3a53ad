"""Edge flips, flip-graph distances and the flip-geodesic realizing a rotation.

A flip at a diagonal replaces it by the other diagonal of the quadrilateral
formed by its two adjacent triangles.  A counterclockwise rotation of the
(n+2)-gon by one vertex is realized by exactly ``n - 1 + t`` flips, where ``t``
is the number of internal triangles; :func:`rotation_geodesic` builds such a path
and :func:`flip_distance` checks minimality by breadth-first search.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import (
    Diagonal, Permutation312, Triangulation, clip_sequence, internal_triangle_count,
    rotate_triangulation, triangulation_of, wrap,
)
from .errors import BoundExceeded, InvalidDiagonal, InvalidFlip, MalformedInput

__all__ = [
    "FlipSequence", "flip", "flip_partner", "flip_quadrilateral", "flip_on_permutation",
    "flip_on_permutation_at", "rotation_geodesic", "flip_distance", "DEFAULT_BFS_LIMIT",
]

DEFAULT_BFS_LIMIT = 10


@dataclass(frozen=True)
class FlipSequence:
    start: Triangulation
    steps: tuple[Diagonal, ...]
    end: Triangulation

    def __len__(self):
        return len(self.steps)

    def states(self) -> list[Triangulation]:
        """Every triangulation along the path, ``start`` first; checks validity at each step."""
        cur = self.start
        out = [cur]
        for d in self.steps:
            cur = flip(cur, d)
            Triangulation(cur.n, cur.diagonals)
            out.append(cur)
        if cur != self.end:
            raise MalformedInput("flip steps do not reach the recorded end")
        return out


def _apexes(t: Triangulation, d: Diagonal, adj=None) -> tuple[int, int]:
    """The third vertices of the two triangles on either side of ``d``.

    The first apex lies strictly between ``d.a`` and ``d.b``; the second outside.
    """
    if adj is None:
        adj = t.neighbors()
    a, b = d
    common = adj[a] & adj[b]
    inside = [c for c in common if a < c < b]
    outside = [c for c in common if not a < c < b]
    assert len(inside) == 1 and len(outside) == 1, (t, d)
    return inside[0], outside[0]


def flip_partner(t: Triangulation, d: Diagonal) -> Diagonal:
    """The diagonal that replaces ``d`` when flipping ``t`` at ``d``."""
    if d not in t.diagonals:
        raise InvalidDiagonal(f"{d} is not a diagonal of {t}")
    c1, c2 = _apexes(t, d)
    return Diagonal(min(c1, c2), max(c1, c2))


def flip(t: Triangulation, d: Sequence[int]) -> Triangulation:
    d = Diagonal(*d)
    new = flip_partner(t, d)
    return Triangulation._unchecked(t.n, (t.diagonals - {d}) | {new})


def flip_quadrilateral(t: Triangulation, d: Sequence[int]) -> tuple[int, int, int, int]:
    """The quadrilateral around ``d`` as labels ``(i, j, k, l)`` with ``d = D(i, k)``.

    Labels are chosen so that ``i < j < k < l <= n+1`` or, when the quadrilateral
    uses vertex n+2 as a diagonal endpoint, ``i = n+2`` and ``j < k < l = ...``
    follow clockwise from it.  Raises InvalidFlip if ``d`` does not admit such a
    naming (then the flipped diagonal ``D(j, l)`` does).
    """
    d = Diagonal(*d)
    if d not in t.diagonals:
        raise InvalidDiagonal(f"{d} is not a diagonal of {t}")
    c1, c2 = _apexes(t, d)
    verts = sorted((d.a, d.b, c1, c2))
    size = t.size
    v1, v2, v3, v4 = verts
    if v4 <= size - 1 and (v1, v3) == tuple(d):
        return v1, v2, v3, v4
    if v4 == size and (v2, v4) == tuple(d):
        return v4, v1, v2, v3
    raise InvalidFlip(f"{d} is the D(j,l) diagonal of its quadrilateral {verts}")


def _move_after(word: list[int], j: int, k: int) -> list[int]:
    word = [x for x in word if x != j]
    pos = word.index(k)
    return word[:pos + 1] + [j] + word[pos + 1:]


def flip_on_permutation(p: Permutation312, quad: Sequence[int]) -> Permutation312:
    """Flip at ``D(i, k)`` read directly on the permutation.

    With quadrilateral ``(i, j, k, l)`` and ``D(i, k)`` present, ``p`` has the
    shape ``.. t1 t2 j t3 k ..`` and the flip yields ``.. t1 t2 t3 k j ..``.
    """
    i, j, k, l = quad
    n = p.n
    size = n + 2
    if not all(1 <= x <= size for x in (i, j, k, l)) or len({i, j, k, l}) != 4:
        raise InvalidFlip(f"bad quadrilateral {tuple(quad)}")
    t = triangulation_of(p)
    try:
        d = Diagonal.of(i, k, n)
        found = flip_quadrilateral(t, d)
    except (InvalidDiagonal, InvalidFlip, MalformedInput):
        raise InvalidFlip(f"quadrilateral {tuple(quad)} with diagonal D({i},{k}) not in {t}") from None
    if found != (i, j, k, l):
        raise InvalidFlip(f"quadrilateral around D({i},{k}) is {found}, not {tuple(quad)}")
    return Permutation312._unchecked(_move_after(list(p.word), j, k))


def flip_on_permutation_at(p: Permutation312, d: Sequence[int]) -> Permutation312:
    """Permutation of the triangulation flipped at any diagonal ``d`` of ``T_p``.

    Uses :func:`flip_on_permutation` when ``d`` is the ``D(i, k)`` diagonal of its
    quadrilateral; otherwise ``d = D(j, l)`` and the flipped triangulation is
    clipped again.
    """
    t = triangulation_of(p)
    d = Diagonal(*d)
    try:
        quad = flip_quadrilateral(t, d)
    except InvalidFlip:
        pass
    else:
        return flip_on_permutation(p, quad)
    return clip_sequence(flip(t, d))


def _apply(adj, old: Diagonal, new: Diagonal):
    adj[old.a].discard(old.b)
    adj[old.b].discard(old.a)
    adj[new.a].add(new.b)
    adj[new.b].add(new.a)


def rotation_geodesic(t: Triangulation) -> FlipSequence:
    """A shortest flip path from ``t`` to its counterclockwise rotation by one vertex.

    Diagonals whose flip already lands on a diagonal of the rotated triangulation
    are flipped first, in lexicographic order.  When none remains, a side of an
    internal triangle gets one extra flip that frees the rest of the triangle.
    At most ``t`` such extra flips are allowed (``t`` internal triangles), so the
    result has exactly ``n - 1 + t`` steps.  The release order used by
    :func:`_release_candidates` needs no backtracking in practice; the search
    only backs up if a choice fails to finish within the budget.
    """
    target = rotate_triangulation(t, 1).diagonals
    budget = internal_triangle_count(t)
    steps = _geodesic_search(t.n, set(t.diagonals), t.neighbors(), target, budget)
    if steps is None:
        raise AssertionError(f"no rotation geodesic of length {geodesic_length(t)} for {t}")
    return FlipSequence(t, tuple(steps), rotate_triangulation(t, 1))


def _geodesic_search(n, cur: set, adj, target: frozenset, budget: int) -> list[Diagonal] | None:
    size = n + 2
    original = frozenset(cur)
    steps: list[Diagonal] = []
    undo: list[tuple[Diagonal, Diagonal]] = []
    failed: dict[frozenset, int] = {}

    def do(d, new):
        cur.discard(d)
        cur.add(new)
        _apply(adj, d, new)
        steps.append(d)
        undo.append((d, new))

    def rollback(mark):
        while len(undo) > mark:
            d, new = undo.pop()
            steps.pop()
            cur.discard(new)
            cur.add(d)
            _apply(adj, new, d)

    def greedy():
        while True:
            for d in sorted(cur - target):
                new = _partner(d, adj)
                if new in target:
                    do(d, new)
                    break
            else:
                return

    def search(left):
        mark = len(undo)
        greedy()
        rest = cur - target
        if not rest:
            return True
        key = frozenset(cur)
        if left and failed.get(key, -1) < left:
            for d in _release_candidates(rest, adj, original, size):
                inner = len(undo)
                do(d, _partner(d, adj))
                if search(left - 1):
                    return True
                rollback(inner)
            failed[key] = left
        rollback(mark)
        return False

    return list(steps) if search(budget) else None


def _release_candidates(rest: set, adj, original: frozenset, size: int) -> list[Diagonal]:
    """Sides ``D(i, j)`` of a triangle ``(i, j, k)`` made of leftover diagonals whose
    neighbour across the side is ``{i, j-1, j}``.

    Triangles built only from untouched diagonals of the start come first, then
    sides whose ``j`` is not the middle label of the triangle.
    """
    ranked = []
    for d in sorted(rest):
        for i, j in ((d.a, d.b), (d.b, d.a)):
            common = adj[i] & adj[j]
            prev = wrap(j - 1, size)
            if prev == i or prev not in common:
                continue
            k = next(c for c in common if c != prev)
            s1, s2 = Diagonal(min(i, k), max(i, k)), Diagonal(min(j, k), max(j, k))
            if s1 in rest and s2 in rest:
                middle = sorted((i, j, k))[1] == j
                ranked.append((not {d, s1, s2} <= original, middle, d))
    ranked.sort()
    return list(dict.fromkeys(d for *_, d in ranked))


def _partner(d: Diagonal, adj) -> Diagonal:
    c1, c2 = [c for c in adj[d.a] & adj[d.b]]
    return Diagonal(min(c1, c2), max(c1, c2))


def flip_distance(t1: Triangulation, t2: Triangulation, limit: int = DEFAULT_BFS_LIMIT) -> int:
    """Exact distance in the flip graph, by breadth-first search from ``t1``."""
    if t1.n != t2.n:
        raise MalformedInput("triangulations of different polygons")
    if t1.n > limit:
        raise BoundExceeded(f"flip_distance is limited to n <= {limit}")
    if t1 == t2:
        return 0
    goal = t2.diagonals
    seen = {t1.diagonals}
    frontier = deque([(t1, 0)])
    while frontier:
        cur, dist = frontier.popleft()
        adj = cur.neighbors()
        for d in cur.diagonals:
            c1, c2 = _apexes(cur, d, adj)
            nxt = (cur.diagonals - {d}) | {Diagonal(min(c1, c2), max(c1, c2))}
            if nxt == goal:
                return dist + 1
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((Triangulation._unchecked(cur.n, nxt), dist + 1))
    raise AssertionError("flip graph is connected")


def geodesic_length(t: Triangulation) -> int:
    """``n - 1 + t``: the number of flips realizing a rotation by one vertex."""
    return t.n - 1 + internal_triangle_count(t)


def rotated_permutation(p: Permutation312) -> Permutation312:
    return clip_sequence(rotate_triangulation(triangulation_of(p), 1))

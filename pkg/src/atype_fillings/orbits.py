"""Orbits of fillings under the Kalman loop, which acts on triangulations as rotation.

Two independent routes are provided.  :func:`orbit_size_oracle` iterates the
rotation until the permutation returns.  :func:`orbit_size` decides rotational
symmetry from the permutation alone: it locates the word ``tau`` of one symmetric
piece (the first window of consecutive-valued letters), rebuilds the permutation
that piece would force, and compares.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import (
    Diagonal, Permutation312, Triangulation, catalan, clip_sequence, enumerate_312,
    rotate_triangulation, triangulation_of,
)
from .errors import BoundExceeded

__all__ = [
    "OrbitReport", "Orbit", "kalman_step", "orbit_size_oracle", "orbit_size_half",
    "orbit_size_third", "orbit_size", "orbit_count", "orbit_census", "interval_windows",
    "DEFAULT_CENSUS_BOUND",
]

DEFAULT_CENSUS_BOUND = 12
BOUND_ENV = "AFILL_MAX_N"


def census_bound() -> int:
    """The census size limit, overridable through ``AFILL_MAX_N``."""
    raw = os.environ.get(BOUND_ENV)
    return int(raw) if raw else DEFAULT_CENSUS_BOUND


def kalman_step(p: Permutation312) -> Permutation312:
    """The permutation of the triangulation rotated counterclockwise by one vertex."""
    if p.n == 0:
        return p
    return clip_sequence(rotate_triangulation(triangulation_of(p), 1))


def orbit_size_oracle(p: Permutation312) -> int:
    """Least ``k >= 1`` with ``kalman_step`` applied ``k`` times returning ``p``."""
    k, cur = 1, kalman_step(p)
    while cur != p:
        cur = kalman_step(cur)
        k += 1
    return k


def interval_windows(word, length: int) -> list[int]:
    """Start positions of every window of ``length`` letters whose values are consecutive.

    A window is an interval exactly when ``max - min == length - 1``; the scan uses
    monotone deques so the whole search is linear.
    """
    return list(_iter_windows(word, length))


def _iter_windows(word, length: int):
    if length <= 0 or length > len(word):
        return
    lo: deque[int] = deque()
    hi: deque[int] = deque()
    for r, x in enumerate(word):
        while lo and word[lo[-1]] >= x:
            lo.pop()
        lo.append(r)
        while hi and word[hi[-1]] <= x:
            hi.pop()
        hi.append(r)
        start = r - length + 1
        if start < 0:
            continue
        while lo[0] < start:
            lo.popleft()
        while hi[0] < start:
            hi.popleft()
        if word[hi[0]] - word[lo[0]] == length - 1:
            yield start


def _glued(tau: tuple[int, ...], low: int, parts: int, n: int) -> Triangulation | None:
    """The ``parts``-fold symmetric triangulation built from one piece.

    ``tau`` uses the letters ``low+1 .. low+m-1``; its piece is the sub-polygon on
    vertices ``low .. low+m`` with ``m = (n+2)/parts``.  Copies are rotated by
    multiples of ``m`` and joined by the diameter (``parts == 2``) or the central
    triangle (``parts == 3``).
    """
    size = n + 2
    m = size // parts
    std = Permutation312._unchecked(tuple(x - low for x in tau))
    piece = triangulation_of(std) if std.n else Triangulation._unchecked(0, ())
    # standard labels 1..m-1 are the clipped letters, m and m+1 the surviving chord
    relabel = {ell: low + ell for ell in range(1, m + 1)}
    relabel[m + 1] = low
    chords = [(relabel[d.a], relabel[d.b]) for d in piece.diagonals]
    chords += [(low, low + m)]
    if parts == 3:
        chords += [(low + m, low + 2 * m), (low, low + 2 * m)]
    diagonals = set()
    for r in range(parts):
        for x, y in chords:
            x, y = (x + r * m - 1) % size + 1, (y + r * m - 1) % size + 1
            diagonals.add(Diagonal(x, y) if x < y else Diagonal(y, x))
    if len(diagonals) != n - 1:
        return None
    return Triangulation._unchecked(n, diagonals)


def _symmetric_under(p: Permutation312, parts: int, t: Triangulation | None = None) -> bool:
    """Glue the piece found in ``p`` and compare with ``T_p``; ``t`` may pass in ``T_p``."""
    n = p.n
    size = n + 2
    if size % parts or size <= 3:
        return False
    m = size // parts
    # the first such window is the piece whose letters come first in the clip order
    start = next(_iter_windows(p.word, m - 1), None)
    if start is None:
        return False
    tau = p.word[start:start + m - 1]
    low = min(tau) - 1
    glued = _glued(tau, low, parts, n)
    if glued is None:
        return False
    # clip_sequence is a bijection, so comparing diagonals is the same as comparing permutations
    t = triangulation_of(p) if t is None else t
    return glued.diagonals == t.diagonals


def orbit_size_half(p: Permutation312) -> bool:
    """True iff the triangulation of ``p`` is symmetric under rotation by half a turn.

    For odd ``n`` this is false immediately.  Otherwise ``tau`` is the first window
    of ``n/2`` letters forming an interval, and ``p`` is symmetric exactly when it
    equals the clip sequence of ``tau``'s piece glued to its rotated copy.
    """
    if p.n + 2 <= 3:
        return orbit_size_oracle(p) * 2 == p.n + 2
    return _symmetric_under(p, 2)


def orbit_size_third(p: Permutation312) -> bool:
    """True iff the triangulation of ``p`` is symmetric under a third of a turn.

    Same scheme as :func:`orbit_size_half` with windows of ``(n+2)/3 - 1`` letters
    and three copies around a central triangle.
    """
    if p.n + 2 <= 3:
        return orbit_size_oracle(p) * 3 == p.n + 2
    return _symmetric_under(p, 3)


def orbit_size(p: Permutation312) -> int:
    """Orbit size of the filling indexed by ``p``; one of ``n+2``, ``(n+2)/2``, ``(n+2)/3``."""
    size = p.n + 2
    if size <= 3:
        return orbit_size_oracle(p)
    t = triangulation_of(p)
    if size % 2 == 0 and _symmetric_under(p, 2, t):
        return size // 2
    if size % 3 == 0 and _symmetric_under(p, 3, t):
        return size // 3
    return size


def orbit_count(n: int) -> int:
    """Number of orbits, by counting fixed points of the rotation group (Burnside)."""
    if n < 1:
        raise ValueError("orbit_count needs n >= 1")
    total = Fraction(catalan(n), n + 2)
    if n % 2 == 0:
        total += Fraction(catalan(n // 2), 2)
    if (n - 1) % 3 == 0:
        total += Fraction(2 * catalan((n - 1) // 3), 3)
    assert total.denominator == 1, (n, total)
    return int(total)


@dataclass(frozen=True)
class Orbit:
    representative: Permutation312
    size: int
    members: tuple[Permutation312, ...]


@dataclass(frozen=True)
class OrbitReport:
    n: int
    orbits: tuple[Orbit, ...]
    counts_by_size: dict[int, int] = field(default_factory=dict)

    @property
    def total_orbits(self) -> int:
        return len(self.orbits)

    def size_of(self) -> dict[Permutation312, int]:
        """Every permutation mapped to the size of its orbit."""
        return {m: o.size for o in self.orbits for m in o.members}

    def check(self) -> None:
        size = self.n + 2
        allowed = {size, size // 2 if size % 2 == 0 else None, size // 3 if size % 3 == 0 else None}
        if size == 3:
            allowed.add(1)
        assert all(o.size in allowed and size % o.size == 0 for o in self.orbits)
        assert sum(o.size for o in self.orbits) == catalan(self.n)
        assert self.total_orbits == orbit_count(self.n)


def orbit_census(n: int, bound: int | None = None) -> OrbitReport:
    """Decompose all fillings for ``n`` into rotation orbits.

    Representatives are the lexicographically smallest members; orbits are listed
    in the order of their representatives.
    """
    bound = census_bound() if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"orbit census is limited to n <= {bound} (set {BOUND_ENV} to raise it)")
    seen: set[Permutation312] = set()
    orbits = []
    for p in enumerate_312(n):
        if p in seen:
            continue
        members = [p]
        cur = kalman_step(p)
        while cur != p:
            members.append(cur)
            cur = kalman_step(cur)
        seen.update(members)
        orbits.append(Orbit(p, len(members), tuple(members)))
    counts = Counter(o.size for o in orbits)
    return OrbitReport(n, tuple(orbits), dict(sorted(counts.items(), reverse=True)))

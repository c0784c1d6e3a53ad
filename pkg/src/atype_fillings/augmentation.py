"""The augmentation induced by a pinching-sequence filling, and its toric coordinates.

Pinching the crossings ``z_{sigma(1)}, ..., z_{sigma(n)}`` in order introduces
marked points ``s_1..s_n``; the minimum cobordism then sets
``s_n = (s_1 ... s_{n-1})^-1``.  Each crossing's image is ``z_j + c_j`` while
unpinched and ``s_j + c_j`` afterwards, with ``c_j`` a Laurent polynomial.

>>> aug = augmentation(Permutation312.parse("213"))
>>> [str(aug.images[j]) for j in (1, 2, 3)]
['-s2^-1 + s1', 's2', 's1^-1*s2^-2 + s1^-1*s2^-1 - s2^-1']
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import aug_value, continuant
from .combinatorics import Diagonal, Permutation312, triangulation_of
from .errors import MalformedInput
from .polynomials import LaurentPoly

__all__ = [
    "PinchState", "Augmentation", "t_set", "phi_pinch", "phi_min", "augmentation",
    "delta_for_diagonal", "verify_fibonacci", "verify_basis", "sample_variety_point",
    "FibonacciWitness", "BasisReport",
]


def t_set(sigma: Permutation312, step: int) -> set[int]:
    """Letters ``j`` pinched after step ``step`` whose in-between letters were all pinched before it."""
    n = sigma.n
    if not 1 <= step <= n:
        raise MalformedInput(f"step {step} outside 1..{n}")
    when = {x: pos for pos, x in enumerate(sigma.word, start=1)}
    i = sigma.word[step - 1]
    out = set()
    for direction in (-1, 1):
        j = i + direction
        # walk past letters already pinched; the first later one is in T
        while 1 <= j <= n and when[j] < step:
            j += direction
        if 1 <= j <= n:
            out.add(j)
    return out


def _pinch_sign(j: int, i: int) -> int:
    # (-1)^|j-i|; the extra +1 in the quoted lemma contradicts the worked trefoil example
    return -1 if abs(j - i) % 2 else 1


@dataclass(frozen=True)
class PinchState:
    """Images of ``z_1..z_n`` after ``steps`` pinches of ``sigma``, over ``s_1..s_n``.

    ``constants[j]`` is the additive Laurent part of the image of ``z_j``; the image
    is ``z_j + constants[j]`` while ``j`` is unpinched and ``s_j + constants[j]`` after.
    """

    sigma: Permutation312
    steps: int
    constants: dict[int, LaurentPoly] = field(default_factory=dict)

    @classmethod
    def start(cls, sigma: Permutation312) -> "PinchState":
        n = sigma.n
        return cls(sigma, 0, {j: LaurentPoly.zero(n) for j in range(1, n + 1)})

    @property
    def pinched(self) -> tuple[int, ...]:
        return self.sigma.word[:self.steps]

    def image(self, j: int) -> str:
        """Readable image of ``z_j``, e.g. ``z1 - s2^-1``."""
        c = self.constants[j]
        head = f"s{j}" if j in self.pinched else f"z{j}"
        if c.is_zero():
            return head
        tail = str(c)
        return f"{head} - {tail[1:]}" if tail.startswith("-") else f"{head} + {tail}"


def phi_pinch(state: PinchState, step: int) -> PinchState:
    """Apply the pinch at ``z_{sigma(step)}``; steps must come in order 1..n."""
    if step != state.steps + 1:
        raise MalformedInput(f"pinch step {step} applied after {state.steps} steps")
    sigma = state.sigma
    n = sigma.n
    i = sigma.word[step - 1]
    s = [LaurentPoly.var(k, n) for k in range(1, n + 1)]
    constants = dict(state.constants)
    for j in t_set(sigma, step):
        term = s[i - 1].inverse()
        for k in range(min(i, j) + 1, max(i, j)):
            term = term * s[k - 1].inverse() ** 2
        constants[j] = constants[j] + _pinch_sign(j, i) * term
    return PinchState(sigma, step, constants)


@dataclass(frozen=True)
class Augmentation:
    """``images[j]`` is the image of ``z_j`` as a Laurent polynomial in ``s_1..s_{n-1}``."""

    n: int
    sigma: Permutation312
    images: dict[int, LaurentPoly]

    def point(self) -> list[LaurentPoly]:
        return [self.images[j] for j in range(1, self.n + 1)]

    def delta(self, i: int, j: int) -> LaurentPoly:
        """The image of ``Delta_{i,j}``."""
        m = max(self.n - 1, 0)
        if j == i:
            return LaurentPoly.zero(m)
        return continuant(self.point()[i - 1:j - 2], LaurentPoly.one(m))

    def x_value(self) -> LaurentPoly:
        """The image of ``X_n``; zero for a genuine augmentation."""
        return self.delta(1, self.n + 2) - 1


def phi_min(state: PinchState) -> Augmentation:
    """Substitute ``s_n -> (s_1 ... s_{n-1})^-1`` once every crossing is pinched."""
    n = state.sigma.n
    if state.steps != n:
        raise MalformedInput(f"{n - state.steps} crossings are still unpinched")
    m = n - 1
    lower = [LaurentPoly.var(k, m) for k in range(1, m + 1)]
    last = LaurentPoly.one(m)
    for v in lower:
        last = last * v.inverse()
    values = lower + [last]
    images = {}
    for j in range(1, n + 1):
        full = state.constants[j] + LaurentPoly.var(j, n)
        out = full.evaluate(values)
        images[j] = out if isinstance(out, LaurentPoly) else LaurentPoly.const(out, m)
    return Augmentation(n, state.sigma, images)


def augmentation(sigma: Permutation312) -> Augmentation:
    """``Phi_min`` after all pinches; asserts that ``X_n`` maps to zero."""
    state = PinchState.start(sigma)
    for step in range(1, sigma.n + 1):
        state = phi_pinch(state, step)
    aug = phi_min(state)
    assert aug.x_value().is_zero(), f"X_n does not vanish for {sigma}: {aug.x_value()}"
    return aug


def delta_for_diagonal(d: Diagonal, n: int) -> tuple[int, int]:
    """The pair ``(i, j)`` with ``Delta_{i,j}`` attached to the diagonal ``d``: labels shift by one."""
    d = Diagonal(*d)
    if not d.is_valid(n):
        raise MalformedInput(f"{d} is not a diagonal of the {n + 2}-gon")
    if d.b == n + 2:
        return 1, d.a + 1
    return d.a + 1, d.b + 1


def _s_monomial(i: int, j: int, m: int) -> LaurentPoly:
    """``s_i s_{i+1} ... s_{j-2}`` with ``s_n`` read as ``(s_1 ... s_{n-1})^-1``."""
    n = m + 1
    exps = [0] * m
    for k in range(i, j - 1):
        if k == n:
            exps = [e - 1 for e in exps]
        else:
            exps[k - 1] += 1
    return LaurentPoly.monomial(exps)


@dataclass(frozen=True)
class FibonacciWitness:
    diagonal: Diagonal
    pair: tuple[int, int]
    image: LaurentPoly
    expected: LaurentPoly

    @property
    def holds(self) -> bool:
        return self.image == self.expected


def verify_fibonacci(sigma: Permutation312, aug: Augmentation | None = None) -> tuple[bool, list[FibonacciWitness]]:
    """Every diagonal's Delta function maps to the monomial ``s_i ... s_{j-2}``."""
    aug = aug or augmentation(sigma)
    n = sigma.n
    witnesses = []
    for d in triangulation_of(sigma).sorted_diagonals():
        i, j = delta_for_diagonal(d, n)
        witnesses.append(FibonacciWitness(d, (i, j), aug.delta(i, j), _s_monomial(i, j, n - 1)))
    return all(w.holds for w in witnesses), witnesses


@dataclass(frozen=True)
class BasisReport:
    """``labels`` maps each triangle (Delta labels ``i < j < k``) to ``j - 1``."""

    holds: bool
    labels: dict[tuple[int, int, int], int]
    failures: list[tuple[int, int, int]]


def verify_basis(sigma: Permutation312, aug: Augmentation | None = None) -> BasisReport:
    """Each triangle gives ``D(i,j)^-1 D(j,k)^-1 D(i,k) = s_{j-1}`` and the labels ``j - 1``
    are distinct.

    A triangle's polygon vertices ``v`` become Delta labels ``v + 1`` (``n+2`` becomes
    ``1``); polygon sides contribute ``Delta = 1``.  The n triangles take the labels
    ``1..n`` once each; the one labeled ``n`` reads ``s_n = (s_1 ... s_{n-1})^-1`` and
    the other ``n - 1`` are in bijection with the chart coordinates ``s_1..s_{n-1}``.
    """
    aug = aug or augmentation(sigma)
    n = sigma.n
    m = n - 1
    labels: dict[tuple[int, int, int], int] = {}
    failures = []
    for tri in triangulation_of(sigma).triangles():
        i, j, k = sorted(1 if v == n + 2 else v + 1 for v in (tri.v1, tri.v2, tri.v3))
        labels[(i, j, k)] = j - 1
        d_ij, d_jk, d_ik = aug.delta(i, j), aug.delta(j, k), aug.delta(i, k)
        if not (d_ij.is_monomial() and d_jk.is_monomial()):
            failures.append((i, j, k))
        elif d_ij.inverse() * d_jk.inverse() * d_ik != _s_monomial(j - 1, j + 1, m):
            failures.append((i, j, k))
    chart = sorted(v for v in labels.values() if v <= m)
    bijective = sorted(labels.values()) == list(range(1, n + 1)) and chart == list(range(1, m + 1))
    return BasisReport(not failures and bijective, labels, failures)


def sample_variety_point(sigma: Permutation312, s_values: Sequence | None = None,
                         rng: random.Random | None = None, aug: Augmentation | None = None) -> tuple[Fraction, ...]:
    """Evaluate the augmentation at nonzero rationals ``s_1..s_{n-1}``; the point lies on ``X_n = 0``.

    Without ``s_values`` a random point is drawn from ``rng`` (numerators and
    denominators in 1..9, random signs).
    """
    n = sigma.n
    if s_values is None:
        rng = rng or random.Random(0)
        s_values = [Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n - 1)]
    s_values = [Fraction(v) for v in s_values]
    if len(s_values) != n - 1:
        raise MalformedInput(f"need {n - 1} s-values, got {len(s_values)}")
    if any(v == 0 for v in s_values):
        raise MalformedInput("s-values must be nonzero")
    aug = aug or augmentation(sigma)
    point = []
    for j in range(1, n + 1):
        v = aug.images[j].evaluate(s_values)
        point.append(Fraction(v))
    point = tuple(point)
    assert aug_value(point) == 0, (sigma, s_values, point)
    return point


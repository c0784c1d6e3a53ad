"""Braid matrices, continuants, the functions Delta_{i,j}, X_n and the Kalman automorphism.

``Delta_{i,j}`` is the (2,2) entry of ``B(z_i) B(z_{i+1}) ... B(z_{j-2})`` with
``B(x) = [[0, 1], [1, x]]``; equivalently the continuant ``K(z_i, ..., z_{j-2})``.
Conventions: ``Delta_{i,i+1} = 1`` and ``Delta_{i,i} = 0``.

>>> str(aug_polynomial(3))
'-1 + z1 + z3 + z1*z2*z3'
>>> str(theta(PolyZ.var(1, 2), 2))
'-z2'
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import MalformedInput
from .polynomials import PolyZ

__all__ = [
    "BraidMat", "braid_matrix", "continuant", "delta", "aug_polynomial", "theta",
    "IdentityCheck", "verify_theta_identity", "verify_euler_identity",
    "verify_euler_special", "admissible_euler_triples", "kalman_point_step",
    "delta_value", "aug_value", "SIGNS",
]


@dataclass(frozen=True)
class BraidMat:
    """A 2x2 matrix over any commutative ring (ints, Fractions, PolyZ, LaurentPoly)."""

    a: object
    b: object
    c: object
    d: object

    def __matmul__(self, other: "BraidMat") -> "BraidMat":
        return BraidMat(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    @staticmethod
    def product(mats: Sequence["BraidMat"], one=1, zero=0) -> "BraidMat":
        out = BraidMat(one, zero, zero, one)
        for m in mats:
            out = out @ m
        return out


def braid_matrix(x, one=None, zero=None) -> BraidMat:
    """``[[0, 1], [1, x]]``; the constant entries live in the ring of ``x``."""
    if one is None:
        one = PolyZ.one(x.nvars) if isinstance(x, PolyZ) else 1
    if zero is None:
        zero = one - one
    return BraidMat(zero, one, one, x)


def continuant(args: Sequence, one=1):
    """``K(x1..xm)`` by the recursion ``K = x1 K(x2..) + K(x3..)`` with ``K() = 1``.

    Works over any ring; ``one`` fixes the ring of the empty continuant.
    """
    later, current = one - one, one
    for x in reversed(args):
        later, current = current, x * current + later
    return current


def _check_indices(i: int, j: int, n: int) -> None:
    if not (1 <= i <= j <= n + 2):
        raise MalformedInput(f"Delta_{{{i},{j}}} needs 1 <= i <= j <= n+2 with n={n}")


@lru_cache(maxsize=4096)
def delta(i: int, j: int, n: int) -> PolyZ:
    """``Delta_{i,j}`` as a polynomial in ``z1..zn``."""
    _check_indices(i, j, n)
    if j == i:
        return PolyZ.zero(n)
    return continuant([PolyZ.var(k, n) for k in range(i, j - 1)], PolyZ.one(n))


def delta_value(i: int, j: int, z: Sequence):
    """``Delta_{i,j}`` evaluated at the point ``z`` (values in any ring)."""
    n = len(z)
    _check_indices(i, j, n)
    if j == i:
        return 0
    return continuant(list(z[i - 1:j - 2]))


def aug_polynomial(n: int) -> PolyZ:
    """``X_n = -1 + Delta_{1,n+2}``, whose zero set is the augmentation variety."""
    if n < 1:
        raise MalformedInput("X_n needs n >= 1")
    return delta(1, n + 2, n) - 1


def aug_value(z: Sequence):
    return delta_value(1, len(z) + 2, z) - 1


@lru_cache(maxsize=64)
def _theta_images(n: int) -> tuple[PolyZ, ...]:
    return (-delta(2, n + 2, n),) + tuple(PolyZ.var(i - 1, n) for i in range(2, n + 1))


def theta(p: PolyZ, n: int) -> PolyZ:
    """The substitution ``z1 -> -Delta_{2,n+2}``, ``z_i -> z_{i-1}`` for ``i >= 2``."""
    if p.nvars != n:
        raise MalformedInput(f"polynomial in {p.nvars} variables, expected {n}")
    out = p.evaluate(_theta_images(n))
    return out if isinstance(out, PolyZ) else PolyZ.const(out, n)


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of an exact identity check; ``difference`` is ``lhs - rhs``."""

    holds: bool
    lhs: PolyZ
    rhs: PolyZ
    label: str = ""

    @property
    def difference(self) -> PolyZ:
        return self.lhs - self.rhs

    def __bool__(self):
        return self.holds


def _check(lhs: PolyZ, rhs: PolyZ, label: str) -> IdentityCheck:
    return IdentityCheck(lhs == rhs, lhs, rhs, label)


SIGNS = ("stated", "corrected")


def _sign_choice(sign: str) -> bool:
    if sign not in SIGNS:
        raise MalformedInput(f"sign must be one of {SIGNS}, got {sign!r}")
    return sign == "corrected"


def verify_theta_identity(n: int, k: int, sign: str = "stated") -> IdentityCheck:
    """``theta(Delta_{1,k+1}) + e * Delta_{k,n+2} == -Delta_{2,k} X_n`` for ``2 < k < n+2``.

    ``sign="stated"`` uses ``e = (-1)^(n-1)``, the form in which the identity is
    usually quoted; it fails whenever ``n - k`` is even.  ``sign="corrected"`` uses
    ``e = (-1)^k``, which holds for every ``k``.  The two agree when ``n - k`` is odd.
    """
    if not 2 < k < n + 2:
        raise MalformedInput(f"k={k} outside 2 < k < n+2 for n={n}")
    e = (-1) ** k if _sign_choice(sign) else (-1) ** (n - 1)
    lhs = theta(delta(1, k + 1, n), n) + e * delta(k, n + 2, n)
    rhs = -delta(2, k, n) * aug_polynomial(n)
    return _check(lhs, rhs, f"theta ({sign} sign) n={n} k={k}")


def verify_euler_identity(mu: int, kappa: int, nu: int, n: int, sign: str = "stated") -> IdentityCheck:
    """Euler's continuant identity written with Delta functions.

    ``D(1,mu+nu+2) D(mu+1,mu+kappa+2) - D(1,mu+kappa+2) D(mu+1,mu+nu+2)
    == e * D(1,mu+1) D(mu+kappa+2,mu+nu+2)``
    for ``mu >= 1``, ``kappa >= 0``, ``nu >= kappa+1`` and ``mu + nu <= n``, with
    ``e = (-1)^(nu+1)`` (stated) or the classical ``e = (-1)^kappa`` (corrected).
    The stated sign is right exactly when ``nu - kappa`` is odd.
    """
    if mu < 1 or kappa < 0 or nu < kappa + 1 or mu + nu > n:
        raise MalformedInput(f"inadmissible (mu, kappa, nu) = ({mu}, {kappa}, {nu}) for n={n}")
    e = (-1) ** kappa if _sign_choice(sign) else (-1) ** (nu + 1)
    d = lambda i, j: delta(i, j, n)  # noqa: E731
    lhs = d(1, mu + nu + 2) * d(mu + 1, mu + kappa + 2) - d(1, mu + kappa + 2) * d(mu + 1, mu + nu + 2)
    rhs = e * d(1, mu + 1) * d(mu + kappa + 2, mu + nu + 2)
    return _check(lhs, rhs, f"euler ({sign} sign) mu={mu} kappa={kappa} nu={nu} n={n}")


def verify_euler_special(n: int, k: int, display_form: bool = False, sign: str = "stated") -> IdentityCheck:
    """The case ``mu=1, kappa=k-3, nu=n-1``:
    ``D(1,n+2) D(2,k) - D(1,k) D(2,n+2) == e * D(k,n+2)``.

    ``e`` is ``(-1)^n`` (stated) or ``(-1)^(k+1)`` (corrected).  With
    ``display_form`` the right side uses ``D(k+2,n+2)`` instead of ``D(k,n+2)``,
    the index variant that appears in print.
    """
    if not 3 <= k <= n + 1:
        raise MalformedInput(f"k={k} outside 3..n+1 for n={n}")
    start = k + 2 if display_form else k
    if start > n + 2:
        raise MalformedInput(f"display form needs k <= n, got k={k}")
    e = (-1) ** (k + 1) if _sign_choice(sign) else (-1) ** n
    d = lambda i, j: delta(i, j, n)  # noqa: E731
    lhs = d(1, n + 2) * d(2, k) - d(1, k) * d(2, n + 2)
    rhs = e * d(1, 2) * d(start, n + 2)
    form = "display" if display_form else "proof"
    return _check(lhs, rhs, f"euler-special ({form} index, {sign} sign) n={n} k={k}")


def admissible_euler_triples(n: int):
    """Every ``(mu, kappa, nu)`` accepted by :func:`verify_euler_identity` for ``n``."""
    for mu in range(1, n + 1):
        for nu in range(1, n - mu + 1):
            for kappa in range(nu):
                yield mu, kappa, nu


def kalman_point_step(z: Sequence) -> tuple:
    """The pullback of ``theta`` on a point: ``(-Delta_{2,n+2}(z), z1, ..., z_{n-1})``."""
    z = tuple(Fraction(x) for x in z)
    if not z:
        raise MalformedInput("empty point")
    return (-delta_value(2, len(z) + 2, z),) + z[:-1]

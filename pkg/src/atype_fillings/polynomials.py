"""Sparse exact polynomials with integer coefficients.

:class:`PolyZ` lives in ``z1..zn`` with nonnegative exponents; :class:`LaurentPoly`
lives in ``s1..sm`` and allows negative exponents.  Both store a mapping from
exponent tuples to nonzero ints and render terms in graded-lex order, lowest
degree first, e.g. ``-1 + z1 + z3 + z1*z2*z3``.

>>> z1, z2 = PolyZ.var(1, 2), PolyZ.var(2, 2)
>>> str((z1 + 1) * (z2 - 1))
'-1 - z1 + z2 + z1*z2'
>>> s = LaurentPoly.var(1, 1)
>>> str(s.inverse() ** 2 + 3)
's1^-2 + 3'
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import ClassVar, Iterable, Mapping, Sequence

from .errors import MalformedInput

__all__ = ["PolyZ", "LaurentPoly"]

Exps = tuple[int, ...]


def _term_key(exps: Exps):
    return (sum(exps), tuple(-e for e in exps))


class _Sparse:
    symbol: ClassVar[str] = "x"
    negative_ok: ClassVar[bool] = False
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exps, int] | Iterable[tuple[Exps, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exps, int] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise MalformedInput(f"exponent vector {exps} does not have {nvars} entries")
            if not self.negative_ok and any(e < 0 for e in exps):
                raise MalformedInput(f"negative exponent in {exps}")
            c = clean.get(exps, 0) + int(c)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    # construction

    @classmethod
    def const(cls, c: int, nvars: int):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars: int):
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int):
        return cls.const(1, nvars)

    @classmethod
    def var(cls, i: int, nvars: int):
        """The variable with 1-based index ``i``."""
        if not 1 <= i <= nvars:
            raise MalformedInput(f"variable {cls.symbol}{i} outside 1..{nvars}")
        return cls.monomial(tuple(int(k == i - 1) for k in range(nvars)))

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1):
        return cls(len(exps), {tuple(exps): coeff})

    # inspection

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        return sorted(self._terms.items(), key=lambda kv: _term_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(e) for e in self._terms)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, type(self)):
            if other.nvars != self.nvars:
                raise MalformedInput(f"variable counts differ: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return type(self).const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return type(self)(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return type(self)(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = type(self).one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        """Inverse of a unit monomial ``±x^e``; Laurent polynomials only."""
        if not self.negative_ok:
            raise MalformedInput("only Laurent monomials can be inverted")
        if not self.is_monomial():
            raise MalformedInput(f"{self} is not a monomial")
        (e, c), = self._terms.items()
        if c not in (1, -1):
            raise MalformedInput(f"{self} is not a unit")
        return type(self)(self.nvars, {tuple(-x for x in e): c})

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).const(other, self.nvars)
        if not isinstance(other, _Sparse):
            return NotImplemented
        return type(self) is type(other) and self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.nvars, frozenset(self._terms.items())))
        return self._hash

    # evaluation

    def evaluate(self, values: Sequence):
        """Plug ``values[i]`` in for variable ``i+1``; values may be numbers or polynomials.

        The result lives wherever the values live.  Negative exponents need values
        that support ``** -k`` (nonzero Fractions or Laurent monomials).
        """
        if len(values) != self.nvars:
            raise MalformedInput(f"need {self.nvars} values, got {len(values)}")
        powers: dict[tuple[int, int], object] = {}
        total = 0
        for exps, c in self.sorted_terms():
            term = c
            for i, e in enumerate(exps):
                if e:
                    key = (i, e)
                    if key not in powers:
                        v = values[i]
                        powers[key] = Fraction(v) ** e if isinstance(v, Rational) else v ** e
                    term = powers[key] * term
            total = total + term
        return total

    def substitute(self, mapping: Mapping[int, "_Sparse"]):
        """Simultaneously replace variable ``i`` (1-based) by ``mapping[i]``; others stay."""
        cls = type(self)
        values = [mapping.get(i + 1, cls.var(i + 1, self.nvars)) for i in range(self.nvars)]
        for v in values:
            if not isinstance(v, cls) or v.nvars != self.nvars:
                raise MalformedInput("substitution must stay in the same ring")
        out = self.evaluate(values)
        return out if isinstance(out, cls) else cls.const(out, self.nvars)

    # display

    def _monomial_text(self, exps: Exps) -> str:
        parts = []
        for i, e in enumerate(exps):
            if e == 1:
                parts.append(f"{self.symbol}{i + 1}")
            elif e:
                parts.append(f"{self.symbol}{i + 1}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for exps, c in self.sorted_terms():
            mono = self._monomial_text(exps)
            if not mono:
                text = str(c)
            elif c == 1:
                text = mono
            elif c == -1:
                text = "-" + mono
            else:
                text = f"{c}*{mono}"
            if not out:
                out = text
            elif text.startswith("-"):
                out += " - " + text[1:]
            else:
                out += " + " + text
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {str(self)!r})"


class PolyZ(_Sparse):
    """Integer polynomial in ``z1..zn``."""

    symbol = "z"
    negative_ok = False
    __slots__ = ()


class LaurentPoly(_Sparse):
    """Integer Laurent polynomial in ``s1..sm``."""

    symbol = "s"
    negative_ok = True
    __slots__ = ()

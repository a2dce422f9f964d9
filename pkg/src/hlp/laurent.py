"""
Exact arithmetic in the Laurent polynomial ring Z[t, t^-1].

A :class:`LaurentPoly` is a sparse map ``exponent -> coefficient`` with no
zero coefficients stored, so equality of polynomials is equality of the maps
and the zero polynomial is the empty map.  Coefficients are Python ints.

>>> t = LaurentPoly.t()
>>> (1 - t) * (1 + t)
LaurentPoly('1 - t^2')
>>> ((1 + t) * (1 - t)).exact_div(1 + t)
LaurentPoly('1 - t')
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = ["LaurentPoly", "NotDivisible", "PoleAtZero", "ONE", "ZERO", "T"]


class NotDivisible(ArithmeticError):
    """No Laurent polynomial quotient exists."""


class PoleAtZero(ZeroDivisionError):
    """Evaluation at t = 0 of a polynomial with negative exponents."""


Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[int, int] = {}
        for e, c in items:
            c = d.get(e, 0) + c
            if c:
                d[e] = c
            else:
                d.pop(e, None)
        self._terms = d
        self._hash = None

    @classmethod
    def _raw(cls, d: dict[int, int]) -> "LaurentPoly":
        # d must already be canonical
        p = object.__new__(cls)
        p._terms = d
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @classmethod
    def t(cls) -> "LaurentPoly":
        return cls.monomial(1)

    @classmethod
    def coerce(cls, x: Scalar) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(self._terms)

    def valuation(self) -> int:
        """Lowest exponent present."""
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self._terms)

    def is_polynomial(self) -> bool:
        """True when no negative exponent occurs (i.e. the value lies in Z[t])."""
        return all(e >= 0 for e in self._terms)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        d = dict(self._terms)
        for e, c in other._terms.items():
            c += d.get(e, 0)
            if c:
                d[e] = c
            else:
                del d[e]
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) == 1:
            (e0, c0), = a.items()
            return LaurentPoly._raw({e0 + e: c0 * c for e, c in b.items()})
        if len(b) == 1:
            (e0, c0), = b.items()
            return LaurentPoly._raw({e0 + e: c0 * c for e, c in a.items()})
        d: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._raw({-e * -k: c ** -k})
            raise NotDivisible("only units +-t^k may be inverted")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def exact_div(self, den: Scalar) -> "LaurentPoly":
        """Quotient q with q * den == self, or raise :class:`NotDivisible`.

        Leading-term long division from the top exponent; a nonzero remainder
        means the quotient is not a Laurent polynomial.
        """
        den = LaurentPoly.coerce(den)
        if not den._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return ZERO
        dtop = den.degree()
        dlow = den.valuation()
        lead = den._terms[dtop]
        rem = dict(self._terms)
        q: dict[int, int] = {}
        while rem:
            top = max(rem)
            # remaining span narrower than the divisor: nothing more can cancel
            if top - min(rem) < dtop - dlow:
                break
            c = rem[top]
            if c % lead:
                break
            qc = c // lead
            qe = top - dtop
            q[qe] = qc
            for e, dc in den._terms.items():
                k = qe + e
                v = rem.get(k, 0) - qc * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        if rem:
            raise NotDivisible(f"{self} is not divisible by {den}")
        return LaurentPoly._raw(q)

    def __call__(self, t0) -> Fraction:
        return self.evaluate(t0)

    def evaluate(self, t0) -> Fraction:
        """Exact value at a rational point."""
        t0 = Fraction(t0)
        if t0 == 0:
            if any(e < 0 for e in self._terms):
                raise PoleAtZero(f"{self} has a pole at t = 0")
            return Fraction(self._terms.get(0, 0))
        return sum((c * t0 ** e for e, c in self._terms.items()), Fraction(0))

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def compact(self) -> str:
        """Rendering without spaces, e.g. ``1-t^2``."""
        return str(self).replace(" ", "")

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in data)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: accepts sums like ``1 - t + 2*t^3`` or ``t^-1``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        out: dict[int, int] = {}
        i = 0
        while i < len(s):
            sign = -1 if s[i] == "-" else 1
            j = i + 1
            while j < len(s) and not (s[j] in "+-" and s[j - 1] != "^"):
                j += 1
            tok = s[i + 1:j]
            if "t" in tok:
                coef, _, power = tok.partition("t")
                coef = coef.rstrip("*")
                c = int(coef) if coef else 1
                e = int(power[1:]) if power.startswith("^") else 1
            else:
                c, e = int(tok), 0
            out[e] = out.get(e, 0) + sign * c
            i = j
        return cls(out)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
T = LaurentPoly._raw({1: 1})

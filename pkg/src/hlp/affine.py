"""
The affine Hecke algebra of GL_n in the normal form X^mu T_w.

An :class:`AffineElement` stores, for each exponent mu in Z^n, the finite
Hecke element multiplying X^mu on the right.  Straightening a generator past
a monomial uses::

    T_i X^mu = X^{s_i mu} T_i + (1-t) sum_{j=1}^{m} X^{mu - j alpha_i}      m >= 0
    T_i X^mu = X^{s_i mu} T_i + (t-1) sum_{k=0}^{-m-1} X^{mu + k alpha_i}   m < 0

where m = mu_i - mu_{i+1}.  In particular T_i X_i T_i = t X_{i+1}.

>>> print(commute_ti_xmu(1, (1, 0)))
X[0,1]*T[s1] + (1-t)*X[0,1]*T[e]
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .hecke import HeckeElement, RankMismatch, _add_into, _render_sum, one0
from .laurent import ONE, ZERO, LaurentPoly
from .perm import Permutation, act, identity
from .tableaux import column_lengths, pad

__all__ = [
    "AffineElement",
    "SymPoly",
    "commute_ti_xmu",
    "tw_times_x",
    "one0_xlambda",
    "satake_project",
    "monomial_symmetric",
]

Exponent = tuple


def _hecke_add(d: dict, mu: Exponent, h: HeckeElement) -> None:
    old = d.get(mu)
    new = h if old is None else old + h
    if new:
        d[mu] = new
    else:
        d.pop(mu, None)


class AffineElement:
    """A finite sum of X^mu h_mu with h_mu in H_n."""

    __slots__ = ("n", "_parts")

    def __init__(self, n: int, parts: Mapping[Sequence[int], HeckeElement] | None = None):
        self.n = n
        d: dict = {}
        for mu, h in (parts or {}).items():
            mu = tuple(mu)
            if len(mu) != n or h.n != n:
                raise RankMismatch(f"term at {mu} is not of rank {n}")
            _hecke_add(d, mu, h)
        self._parts = d

    @classmethod
    def _raw(cls, n: int, parts: dict) -> "AffineElement":
        a = object.__new__(cls)
        a.n = n
        a._parts = parts
        return a

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "AffineElement":
        return cls._raw(n, {})

    @classmethod
    def x(cls, mu: Sequence[int]) -> "AffineElement":
        mu = tuple(mu)
        return cls._raw(len(mu), {mu: HeckeElement.one(len(mu))})

    @classmethod
    def hecke(cls, h: HeckeElement) -> "AffineElement":
        return cls._raw(h.n, {(0,) * h.n: h} if h else {})

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[tuple[Sequence[int], Sequence[int], LaurentPoly | int]]) -> "AffineElement":
        """Build from (mu, w, coefficient) triples."""
        parts: dict = {}
        for mu, w, c in terms:
            _hecke_add(parts, tuple(mu), HeckeElement.basis(w, c))
        return cls(n, parts)

    # -- inspection -----------------------------------------------------------

    @property
    def parts(self) -> dict[Exponent, HeckeElement]:
        return dict(self._parts)

    def terms(self) -> dict[tuple[Exponent, Permutation], LaurentPoly]:
        return {(mu, w): c for mu, h in self._parts.items() for w, c in h._terms.items()}

    def part(self, mu: Sequence[int]) -> HeckeElement:
        return self._parts.get(tuple(mu), HeckeElement.zero(self.n))

    def is_zero(self) -> bool:
        return not self._parts

    def __bool__(self) -> bool:
        return bool(self._parts)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "AffineElement") -> "AffineElement":
        if not isinstance(other, AffineElement):
            return NotImplemented
        if other.n != self.n:
            raise RankMismatch(f"ranks {self.n} and {other.n}")
        d = dict(self._parts)
        for mu, h in other._parts.items():
            _hecke_add(d, mu, h)
        return AffineElement._raw(self.n, d)

    def __neg__(self) -> "AffineElement":
        return AffineElement._raw(self.n, {mu: -h for mu, h in self._parts.items()})

    def __sub__(self, other: "AffineElement") -> "AffineElement":
        return self + (-other)

    def scale(self, c) -> "AffineElement":
        c = LaurentPoly.coerce(c)
        if not c:
            return AffineElement.zero(self.n)
        return AffineElement._raw(self.n, {mu: h.scale(c) for mu, h in self._parts.items()})

    def __mul__(self, other) -> "AffineElement":
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if isinstance(other, HeckeElement):
            other = AffineElement.hecke(other)
        if not isinstance(other, AffineElement):
            return NotImplemented
        if other.n != self.n:
            raise RankMismatch(f"ranks {self.n} and {other.n}")
        out: dict = {}
        for mu, h in self._parts.items():
            # X^mu h X^nu g = X^mu sum_w c_w (T_w X^nu) g
            for nu, g in other._parts.items():
                moved: dict = {}
                for w, c in h._terms.items():
                    for nu2, k in tw_times_x(w, nu):
                        _hecke_add(moved, nu2, k.scale(c))
                for nu2, k in moved.items():
                    expo = tuple(a + b for a, b in zip(mu, nu2))
                    _hecke_add(out, expo, k * g)
        return AffineElement._raw(self.n, out)

    def __rmul__(self, other) -> "AffineElement":
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if isinstance(other, HeckeElement):
            return AffineElement.hecke(other) * self
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineElement):
            return NotImplemented
        return self.n == other.n and self._parts == other._parts

    __hash__ = None  # mutable-looking container semantics; compare, don't hash

    # -- rendering ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Permutation, LaurentPoly]]:
        rows = [(mu, w, c) for (mu, w), c in self.terms().items()]
        rows.sort(key=lambda r: (tuple(-x for x in r[0]), -r[1].length(), tuple(r[1])))
        return rows

    def __str__(self) -> str:
        if not self._parts:
            return "0"
        return _render_sum(
            (c, "X[" + ",".join(map(str, mu)) + "]*T[" + w.word_str() + "]")
            for mu, w, c in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"AffineElement(n={self.n}, '{self}')"

    def to_json(self) -> list[dict]:
        return [
            {"exponent": list(mu), "permutation": list(w), "coefficient": c.to_json()}
            for mu, w, c in self.sorted_terms()
        ]


def commute_ti_xmu(i: int, mu: Sequence[int]) -> AffineElement:
    """T_i X^mu in normal form."""
    return AffineElement._raw(len(mu), dict(_commute(i, tuple(mu))))


@lru_cache(maxsize=None)
def _commute(i: int, mu: Exponent) -> tuple:
    n = len(mu)
    m = mu[i - 1] - mu[i]
    smu = list(mu)
    smu[i - 1], smu[i] = smu[i], smu[i - 1]
    parts: dict = {}
    _hecke_add(parts, tuple(smu), HeckeElement.generator(i, n))
    if m == 0:
        return tuple(parts.items())
    e = identity(n)
    if m > 0:
        coeff = LaurentPoly._raw({0: 1, 1: -1})
        shifts = [-j for j in range(1, m + 1)]
    else:
        coeff = LaurentPoly._raw({0: -1, 1: 1})
        shifts = list(range(0, -m))
    for k in shifts:
        nu = list(mu)
        nu[i - 1] += k
        nu[i] -= k
        _hecke_add(parts, tuple(nu), HeckeElement._raw(n, {e: coeff}))
    return tuple(parts.items())


@lru_cache(maxsize=None)
def tw_times_x(w: Permutation, mu: Exponent) -> tuple:
    """T_w X^mu as a tuple of (nu, h_nu) with T_w X^mu = sum X^nu h_nu."""
    word = w.reduced_word()
    if not word:
        return ((mu, HeckeElement.one(len(mu))),)
    i = word[0]
    rest = w.left_simple(i)  # T_w = T_i T_rest
    out: dict = {}
    for nu, h in tw_times_x(rest, mu):
        for nu2, g in _commute(i, nu):
            _hecke_add(out, nu2, g * h)
    return tuple(out.items())


def one0_xlambda(lam: Sequence[int], n: int) -> AffineElement:
    """1_0 X^lam, multiplying by X^{varpi_l} one column at a time, shortest first."""
    lam = pad(lam, n)
    acc = AffineElement.hecke(one0(n))
    for l in sorted(column_lengths(lam)):
        acc = acc * AffineElement.x((1,) * l + (0,) * (n - l))
    return acc


# -- symmetric polynomials ---------------------------------------------------------


class SymPoly:
    """A Laurent polynomial in X_1..X_n with coefficients in Z[t, t^-1]."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], LaurentPoly | int] | None = None):
        self.n = n
        d: dict = {}
        for mu, c in (terms or {}).items():
            mu = tuple(mu)
            if len(mu) != n:
                raise RankMismatch(f"exponent {mu} is not of length {n}")
            _add_into(d, mu, LaurentPoly.coerce(c))
        self._terms = d

    @property
    def terms(self) -> dict[Exponent, LaurentPoly]:
        return dict(self._terms)

    def coefficient(self, mu: Sequence[int]) -> LaurentPoly:
        return self._terms.get(tuple(mu), ZERO)

    def __add__(self, other: "SymPoly") -> "SymPoly":
        d = dict(self._terms)
        for mu, c in other._terms.items():
            _add_into(d, mu, c)
        return SymPoly(self.n, d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None

    def is_symmetric(self) -> bool:
        for mu, c in self._terms.items():
            for i in range(self.n - 1):
                nu = list(mu)
                nu[i], nu[i + 1] = nu[i + 1], nu[i]
                if self._terms.get(tuple(nu), ZERO) != c:
                    return False
        return True

    def exact_div(self, den) -> "SymPoly":
        return SymPoly(self.n, {mu: c.exact_div(den) for mu, c in self._terms.items()})

    def times_monomial(self, nu: Sequence[int]) -> "SymPoly":
        return SymPoly(self.n, {tuple(a + b for a, b in zip(mu, nu)): c for mu, c in self._terms.items()})

    def evaluate(self, t0) -> dict[Exponent, Fraction]:
        """Specialize t, keeping only nonzero coefficients."""
        out = {}
        for mu, c in self._terms.items():
            v = c.evaluate(t0)
            if v:
                out[mu] = v
        return out

    def sorted_items(self) -> list[tuple[Exponent, LaurentPoly]]:
        return sorted(self._terms.items(), key=lambda kv: tuple(-x for x in kv[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return _render_sum(
            (c, "X[" + ",".join(map(str, mu)) + "]") for mu, c in self.sorted_items()
        )

    def __repr__(self) -> str:
        return f"SymPoly(n={self.n}, '{self}')"

    def to_json(self) -> list[dict]:
        return [{"exponent": list(mu), "poly": c.to_json()} for mu, c in self.sorted_items()]

    @classmethod
    def from_json(cls, n: int, data: Iterable[Mapping]) -> "SymPoly":
        return cls(n, {tuple(r["exponent"]): LaurentPoly.from_json(r["poly"]) for r in data})


def satake_project(a: AffineElement) -> SymPoly:
    """The f with a 1_0 = f(X) 1_0, using T_w 1_0 = t^l(w) 1_0."""
    out = {}
    for mu, h in a._parts.items():
        c = ZERO
        for w, k in h._terms.items():
            c = c + k.shift(w.length())
        if c:
            out[mu] = c
    return SymPoly(a.n, out)


def monomial_symmetric(lam: Sequence[int], n: int) -> SymPoly:
    """m_lam, the sum of X^mu over the distinct rearrangements mu of lam."""
    lam = pad(lam, n)
    return SymPoly(n, {mu: ONE for mu in set(itertools.permutations(lam))})

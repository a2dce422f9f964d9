"""
The finite Hecke algebra H_n over Z[t, t^-1].

Elements are sparse maps ``Permutation -> LaurentPoly`` in the basis T_w.
The only multiplication primitive is left multiplication by a generator::

    T_i T_w = T_{s_i w}                       if s_i w > w
    T_i T_w = (t - 1) T_w + t T_{s_i w}       otherwise

Basis products T_x T_y are assembled from it and memoized.

>>> T1 = HeckeElement.generator(1, 2)
>>> print(T1 * T1)
(-1+t)*T[s1] + t*T[e]
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .laurent import ONE, ZERO, LaurentPoly
from .perm import (
    Permutation,
    _blocks,
    _check_dominant,
    all_permutations,
    from_word,
    identity,
    parabolic_factorize,
)

__all__ = [
    "HeckeElement",
    "RankMismatch",
    "t_inv_generator",
    "inv_tw_inverse",
    "scaled_inv_tw_inverse",
    "one0",
    "one_lambda",
    "one_interval",
    "symmetrizer",
    "parabolic_decompose",
    "project_one0",
    "poincare",
]

_TM1 = LaurentPoly._raw({0: -1, 1: 1})  # t - 1
_T = LaurentPoly._raw({1: 1})


class RankMismatch(ValueError):
    pass


def _add_into(d: dict, key, c: LaurentPoly) -> None:
    old = d.get(key)
    if old is None:
        if c:
            d[key] = c
        return
    new = old + c
    if new:
        d[key] = new
    else:
        del d[key]


@lru_cache(maxsize=None)
def _gen_times_basis(i: int, w: Permutation) -> tuple:
    sw = w.left_simple(i)
    if w.left_multiply_increases(i):
        return ((sw, ONE),)
    return ((w, _TM1), (sw, _T))


def _gen_times(i: int, terms: Mapping) -> dict:
    out: dict = {}
    for w, c in terms.items():
        for v, k in _gen_times_basis(i, w):
            _add_into(out, v, c * k)
    return out


@lru_cache(maxsize=None)
def _basis_product(x: Permutation, y: Permutation) -> tuple:
    """T_x T_y as a tuple of (w, coefficient) pairs."""
    word = x.reduced_word()
    if not word:
        return ((y, ONE),)
    i = word[0]
    rest = x.left_simple(i)  # T_x = T_i T_rest
    return tuple(_gen_times(i, dict(_basis_product(rest, y))).items())


Scalar = Union[int, LaurentPoly]


class HeckeElement:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        self.n = n
        d: dict = {}
        for w, c in (terms or {}).items():
            w = w if isinstance(w, Permutation) else Permutation(w)
            if len(w) != n:
                raise RankMismatch(f"{w} is not in S_{n}")
            _add_into(d, w, LaurentPoly.coerce(c))
        self._terms = d
        self._hash = None

    @classmethod
    def _raw(cls, n: int, d: dict) -> "HeckeElement":
        h = object.__new__(cls)
        h.n = n
        h._terms = d
        h._hash = None
        return h

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls._raw(n, {identity(n): ONE})

    @classmethod
    def basis(cls, w: Sequence[int], coeff: Scalar = 1) -> "HeckeElement":
        w = w if isinstance(w, Permutation) else Permutation(w)
        c = LaurentPoly.coerce(coeff)
        return cls._raw(len(w), {w: c} if c else {})

    @classmethod
    def generator(cls, i: int, n: int) -> "HeckeElement":
        return cls.basis(from_word([i], n))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "HeckeElement":
        """T_{i_1} ... T_{i_k}; equals T_w when the word is reduced."""
        terms = {identity(n): ONE}
        for i in reversed(word):
            terms = _gen_times(i, terms)
        return cls._raw(n, terms)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Permutation, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (-kv[0].length(), tuple(kv[0])))

    def coefficient(self, w: Sequence[int]) -> LaurentPoly:
        return self._terms.get(tuple(w) if not isinstance(w, Permutation) else w, ZERO)

    def support(self) -> frozenset[Permutation]:
        return frozenset(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "HeckeElement") -> None:
        if other.n != self.n:
            raise RankMismatch(f"H_{self.n} and H_{other.n}")

    def __add__(self, other) -> "HeckeElement":
        if isinstance(other, (int, LaurentPoly)):
            other = HeckeElement.one(self.n) * other
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        d = dict(self._terms)
        for w, c in other._terms.items():
            _add_into(d, w, c)
        return HeckeElement._raw(self.n, d)

    __radd__ = __add__

    def __neg__(self) -> "HeckeElement":
        return HeckeElement._raw(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "HeckeElement":
        if isinstance(other, (int, LaurentPoly)):
            other = HeckeElement.one(self.n) * other
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "HeckeElement":
        return (-self) + other

    def scale(self, c: Scalar) -> "HeckeElement":
        c = LaurentPoly.coerce(c)
        if not c:
            return HeckeElement.zero(self.n)
        return HeckeElement._raw(self.n, {w: v * c for w, v in self._terms.items()})

    def __mul__(self, other) -> "HeckeElement":
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        out: dict = {}
        for x, a in self._terms.items():
            for y, b in other._terms.items():
                ab = a * b
                for w, k in _basis_product(x, y):
                    _add_into(out, w, ab * k)
        return HeckeElement._raw(self.n, out)

    def __rmul__(self, other) -> "HeckeElement":
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def left_generator(self, i: int) -> "HeckeElement":
        """T_i * self."""
        return HeckeElement._raw(self.n, _gen_times(i, self._terms))

    def __eq__(self, other) -> bool:
        if isinstance(other, HeckeElement):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, int):
            return self == HeckeElement.one(self.n) * other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return _render_sum((c, f"T[{w.word_str()}]") for w, c in self.items())

    def __repr__(self) -> str:
        return f"HeckeElement(n={self.n}, '{self}')"

    def to_json(self) -> list[dict]:
        return [
            {"permutation": list(w), "coefficient": c.to_json()}
            for w, c in self.items()
        ]

    @classmethod
    def from_json(cls, n: int, data: Iterable[Mapping]) -> "HeckeElement":
        return cls(n, {tuple(r["permutation"]): LaurentPoly.from_json(r["coefficient"]) for r in data})


def _render_sum(pairs: Iterable[tuple[LaurentPoly, str]]) -> str:
    """Render sum(c * basis) as ``(1-t)*T[s1] + t*T[e]``."""
    parts: list[str] = []
    for c, basis in pairs:
        neg = False
        if len(c._terms) == 1:
            (e, k), = c._terms.items()
            neg = k < 0
            mag = c if not neg else -c
            coef = "" if mag == 1 else mag.compact() + "*"
        else:
            coef = "(" + c.compact() + ")*"
        body = coef + basis
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def t_inv_generator(i: int, n: int) -> HeckeElement:
    """t T_i^{-1} = T_i + 1 - t."""
    e = identity(n)
    return HeckeElement._raw(n, {from_word([i], n): ONE, e: LaurentPoly._raw({0: 1, 1: -1})})


def inv_tw_inverse(w: Permutation) -> HeckeElement:
    """(T_{w^{-1}})^{-1}, the product of T_i^{-1} along a reduced word of w.

    Coefficients carry negative powers of t; ``t^l(w)`` times the result lies
    in the span of T_v over Z[t].
    """
    return scaled_inv_tw_inverse(w).scale(LaurentPoly.monomial(-w.length()))


@lru_cache(maxsize=None)
def scaled_inv_tw_inverse(w: Permutation) -> HeckeElement:
    """t^l(w) (T_{w^{-1}})^{-1}, the product of t T_i^{-1} along a reduced word of w."""
    n = len(w)
    out = HeckeElement.one(n)
    for i in reversed(w.reduced_word()):
        out = t_inv_generator(i, n) * out
    return out


def _subgroup_sum(blocks: Iterable[tuple[int, int]], n: int) -> HeckeElement:
    # a product of symmetric groups on disjoint position intervals [a, b)
    pools = []
    for a, b in blocks:
        pools.append([(a, p) for p in itertools.permutations(range(a + 1, b + 1))])
    terms = {}
    for choice in itertools.product(*pools):
        w = list(range(1, n + 1))
        for a, p in choice:
            w[a:a + len(p)] = p
        terms[Permutation._raw(tuple(w))] = ONE
    return HeckeElement._raw(n, terms)


def one0(n: int, allow_large: bool = False) -> HeckeElement:
    """1_0, the sum of T_w over all of S_n."""
    return HeckeElement._raw(n, {w: ONE for w in all_permutations(n, allow_large)})


def one_lambda(lam: Sequence[int], n: int | None = None) -> HeckeElement:
    """1_lam, the sum of T_w over the stabilizer of lam (padded to length n)."""
    lam = tuple(lam)
    if n is not None:
        lam = lam + (0,) * (n - len(lam))
    _check_dominant(lam)
    return _subgroup_sum(_blocks(lam), len(lam))


def one_interval(a: int, b: int, n: int) -> HeckeElement:
    """1_[a,b], the sum over permutations of the positions a..b (1-based, inclusive)."""
    if not 1 <= a <= b <= n:
        raise ValueError(f"[{a},{b}] is not an interval in [1, {n}]")
    return _subgroup_sum([(a - 1, b)], n)


def symmetrizer(n: int, *, weight: Sequence[int] | None = None,
                interval: tuple[int, int] | None = None) -> HeckeElement:
    """1_0 by default, 1_lam with ``weight=lam``, 1_[a,b] with ``interval=(a, b)``."""
    if weight is not None and interval is not None:
        raise ValueError("give at most one of weight and interval")
    if weight is not None:
        return one_lambda(weight, n)
    if interval is not None:
        return one_interval(interval[0], interval[1], n)
    return one0(n)


def _varpi(l: int, n: int) -> tuple[int, ...]:
    return (1,) * l + (0,) * (n - l)


def parabolic_decompose(h: HeckeElement, l: int) -> dict[tuple, HeckeElement]:
    """The unique h_F in H_{n, varpi_l} with h = sum_F T_{u_F} h_F.

    Columns F with h_F = 0 are omitted.
    """
    n = h.n
    if not 1 <= l <= n:
        raise ValueError(f"column length {l} not in [1, {n}]")
    lam = _varpi(l, n)
    parts: dict[tuple, dict] = {}
    for w, c in h._terms.items():
        u, v = parabolic_factorize(w, lam)
        F = tuple(u[:l])
        _add_into(parts.setdefault(F, {}), v, c)
    return {F: HeckeElement._raw(n, d) for F, d in parts.items() if d}


def project_one0(h: HeckeElement) -> LaurentPoly:
    """The scalar c with h 1_0 = c 1_0."""
    out = ZERO
    for w, c in h._terms.items():
        out = out + c.shift(w.length())
    return out


def poincare(lam: Sequence[int]) -> LaurentPoly:
    """W_lam(t), the sum of t^l(w) over the stabilizer of lam."""
    lam = tuple(lam)
    _check_dominant(lam)
    out = ONE
    for a, b in _blocks(lam):
        m = b - a
        # [m]_t! = prod_{k=1}^{m} (1 + t + ... + t^{k-1})
        for k in range(1, m + 1):
            out = out * LaurentPoly({e: 1 for e in range(k)})
    return out

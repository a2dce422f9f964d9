"""
Tableau weights psi_T and their Hecke algebra lift Psi_T.

Scalar weights:

* :func:`psi_macdonald` multiplies strip factors along the Gelfand-Tsetlin flag;
* :func:`psi_box` multiplies one factor per box;
* :func:`psi_klostermann` runs the two-column recursion and multiplies over
  adjacent column pairs;
* :func:`tilde_psi` projects Psi_T onto 1_0 and divides by W_lam(t).

Hecke lifts:

* :func:`bigpsi_def` builds Psi_T column by column from parabolic
  decompositions;
* :func:`bigpsi_rec` evaluates the column recursion that peels entries off
  the rightmost non highest weight column.

>>> from .tableaux import Filling
>>> print(psi_macdonald(Filling.parse("1,3/2", 3)))
1 - t^2
>>> print(bigpsi_def(Filling.parse("1,3/2", 3)))
(1-t)*T[s1] + (1-t)*T[e]
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

from .affine import AffineElement
from .hecke import (
    HeckeElement,
    one_lambda,
    parabolic_decompose,
    poincare,
    project_one0,
    scaled_inv_tw_inverse,
    t_inv_generator,
)
from .laurent import ONE, ZERO, LaurentPoly
from .perm import u_of_column
from .tableaux import (
    Column,
    ColumnOrderError,
    Filling,
    column_leq,
    column_reflect,
    column_sign,
    column_vector,
    enumerate_columns,
    horizontal_strip,
    is_highest_weight_column,
    multiplicity,
    pad,
)

__all__ = [
    "NotAStrip",
    "NotSemistandard",
    "strip",
    "psi_macdonald",
    "psi_box",
    "psi_klostermann",
    "psi_two_columns",
    "bigpsi_def",
    "bigpsi_rec",
    "tilde_psi",
    "tilde_psi_rec",
    "fundamental_lemma_check",
    "smallest_j",
    "largest_j",
]

_ONE_MINUS_T = LaurentPoly._raw({0: 1, 1: -1})
_T = LaurentPoly._raw({1: 1})


class NotAStrip(ValueError):
    pass


class NotSemistandard(ValueError):
    pass


def _one_minus_t_pow(d: int) -> LaurentPoly:
    return LaurentPoly({0: 1, d: -1})


# -- Macdonald's strip formula ----------------------------------------------------


def strip(lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
    """psi_{lam/mu} for a horizontal strip lam/mu.

    With theta' the column counts of lam - mu, the value is the product of
    1 - t^{m_j(mu)} over j >= 1 with theta'_j = 0 and theta'_{j+1} = 1.

    >>> print(strip((2, 1), (1, 1)))
    1 - t^2
    """
    if not horizontal_strip(lam, mu):
        raise NotAStrip(f"{tuple(lam)}/{tuple(mu)} is not a horizontal strip")
    width = max(lam) if any(lam) else 0
    # a horizontal strip has at most one box per column, found in the row where
    # mu ends and lam continues
    theta = [0] * (width + 2)
    m = max(len(lam), len(mu))
    lam = tuple(lam) + (0,) * (m - len(lam))
    mu = tuple(mu) + (0,) * (m - len(mu))
    for a, b in zip(lam, mu):
        for c in range(b + 1, a + 1):
            theta[c] += 1
    out = ONE
    for j in range(1, width):
        if theta[j] == 0 and theta[j + 1] == 1:
            out = out * _one_minus_t_pow(multiplicity(mu, j))
    return out


def _require_ssyt(T: Filling) -> None:
    if not T.is_semistandard():
        raise NotSemistandard(f"{T} is not semistandard")


def psi_macdonald(T: Filling) -> LaurentPoly:
    """Product of strip values along the flag T_{<=1} in T_{<=2} in ... in T_{<=n}."""
    _require_ssyt(T)
    flag = T.gt_flag()
    out = ONE
    for small, big in zip(flag, flag[1:]):
        out = out * strip(big, small)
    return out


def psi_box(T: Filling) -> LaurentPoly:
    """Product over boxes b = (r, c) of 1 - t^{leg(b, <i) + 1}.

    Here i = T(r, c+1), and the factor is 1 unless i is absent from b and from
    every box below b.
    """
    _require_ssyt(T)
    out = ONE
    cols = T.columns
    for c in range(len(cols) - 1):
        left, right = cols[c], cols[c + 1]
        for r in range(len(right)):
            i = right[r]
            below = left[r + 1:]
            if i == left[r] or i in below:
                continue
            legs = sum(1 for x in below if x < i)
            out = out * _one_minus_t_pow(legs + 1)
    return out


def _pair_semistandard(F: Column, E: Column) -> bool:
    return len(F) >= len(E) and all(f <= e for f, e in zip(F, E))


@lru_cache(maxsize=None)
def psi_two_columns(F: Column, E: Column) -> LaurentPoly:
    """Klostermann's recursion for the two-column filling F (x) E."""
    if not _pair_semistandard(F, E):
        return ZERO
    if is_highest_weight_column(E):
        return ONE
    j = next(j for j in range(1, max(E)) if j not in E and j + 1 in E)
    sE = column_reflect(j, E)[0]
    sF, sign = column_reflect(j, F)
    if sign == -1:
        return _T * psi_two_columns(sF, sE) + _ONE_MINUS_T * psi_two_columns(F, sE)
    return psi_two_columns(sF, sE)


def psi_klostermann(T: Filling) -> LaurentPoly:
    """Product of two-column values over adjacent column pairs; 0 if not semistandard."""
    out = ONE
    for F, E in zip(T.columns, T.columns[1:]):
        out = out * psi_two_columns(F, E)
        if not out:
            break
    return out


# -- the Hecke lift, by definition -------------------------------------------------


def _check_order(T: Filling) -> None:
    cols = T.columns
    if any(len(a) < len(b) for a, b in zip(cols, cols[1:])):
        raise ColumnOrderError(f"column lengths of {T} must weakly decrease left to right")


def _varpi(l: int, n: int) -> tuple[int, ...]:
    return (1,) * l + (0,) * (n - l)


def bigpsi_def(T: Filling) -> HeckeElement:
    """Psi_T from Psi_C = t^l(u_C) (T_{u_C^{-1}})^{-1} 1_{varpi_l}.

    For T = C (x) S the factor h_{C,S} is the C-component of the parabolic
    decomposition of Psi_S with respect to len(C), and
    Psi_T = t^l(u_C) (T_{u_C^{-1}})^{-1} h_{C,S}.
    """
    _check_order(T)
    return _bigpsi_def(T.columns, T.n)


@lru_cache(maxsize=None)
def _bigpsi_def(columns: tuple, n: int) -> HeckeElement:
    if not columns:
        # the empty tableau is T^0_0, so Psi is 1_0
        return one_lambda((0,) * n)
    C = columns[0]
    lead = scaled_inv_tw_inverse(u_of_column(C, n))
    if len(columns) == 1:
        return lead * one_lambda(_varpi(len(C), n))
    rest = _bigpsi_def(columns[1:], n)
    h = parabolic_decompose(rest, len(C)).get(C)
    if h is None:
        return HeckeElement.zero(n)
    return lead * h


# -- the Hecke lift, by recursion ----------------------------------------------------


def smallest_j(C: Column) -> int:
    return next(j for j in range(1, max(C)) if j not in C and j + 1 in C)


def largest_j(C: Column) -> int:
    return max(j for j in range(1, max(C)) if j not in C and j + 1 in C)


_rec_caches: dict[Callable, dict] = {}


def bigpsi_rec(T: Filling, mu: Sequence[int] = (), choose_j: Callable[[Column], int] = smallest_j) -> HeckeElement:
    """Psi_{T (x) T^0_mu} by the column recursion.

    Any highest weight columns at the right end of T are absorbed into T^0_mu
    first.  ``choose_j`` picks j with j not in C_1 and j + 1 in C_1, where C_1
    is the rightmost column that is not highest weight; every choice gives the
    same element.
    """
    full = T
    if any(mu):
        full = T.tensor(Filling.highest_weight(mu, T.n))
    _check_order(full)
    cache = _rec_caches.setdefault(choose_j, {})
    return _rec(full, choose_j, cache)


def _rec(T: Filling, choose_j, cache: dict) -> HeckeElement:
    key = (T.columns, T.n)
    hit = cache.get(key)
    if hit is not None:
        return hit
    n = T.n
    if not T.is_semistandard():
        out = HeckeElement.zero(n)
    elif T.is_highest_weight():
        out = one_lambda(T.shape)
    else:
        S, _ = T.split_highest_weight_tail()
        tail = T.columns[len(S.columns):]
        r = len(S.columns)
        j = choose_j(S.column(1))

        def sub(k: int) -> HeckeElement:
            moved = S.omega(j, k)
            return _rec(Filling._unchecked(moved.columns + tail, n), choose_j, cache)

        lead = sub(r)
        if column_sign(j, S.column(r)) == -1:
            out = lead.left_generator(j)
        else:
            out = t_inv_generator(j, n) * lead
        for k in range(1, r):
            sk = column_sign(j, S.column(k))
            if sk * column_sign(j, S.column(k + 1)) == -1:
                out = out + sub(k).scale(_ONE_MINUS_T * sk)
    cache[key] = out
    return out


# -- scalar extraction ---------------------------------------------------------------


def tilde_psi(T: Filling, lam: Sequence[int] | None = None, method: str = "def") -> LaurentPoly:
    """Psi_T 1_0 / W_lam(t), by exact division.

    Raises :class:`~hlp.laurent.NotDivisible` if the quotient is not a Laurent
    polynomial.
    """
    shape = T.shape
    if lam is not None and pad(lam, T.n) != shape:
        raise ValueError(f"{T} does not have shape {tuple(lam)}")
    if method == "def":
        big = bigpsi_def(T)
    elif method == "rec":
        big = bigpsi_rec(T)
    else:
        raise ValueError(f"unknown method {method!r}")
    return project_one0(big).exact_div(poincare(shape))


def tilde_psi_rec(T: Filling) -> LaurentPoly:
    """The scalar recursion obtained from :func:`bigpsi_rec` by T_j -> t, t T_j^{-1} -> 1,
    with initial value 1 on highest weight tableaux."""
    _check_order(T)
    return _tilde_rec(T.columns, T.n)


@lru_cache(maxsize=None)
def _tilde_rec(columns: tuple, n: int) -> LaurentPoly:
    T = Filling._unchecked(columns, n)
    if not T.is_semistandard():
        return ZERO
    if T.is_highest_weight():
        return ONE
    S, _ = T.split_highest_weight_tail()
    tail = columns[len(S.columns):]
    r = len(S.columns)
    j = smallest_j(S.column(1))
    sub = lambda k: _tilde_rec(S.omega(j, k).columns + tail, n)
    out = sub(r)
    if column_sign(j, S.column(r)) == -1:
        out = _T * out
    for k in range(1, r):
        sk = column_sign(j, S.column(k))
        if sk * column_sign(j, S.column(k + 1)) == -1:
            out = out + _ONE_MINUS_T * sk * sub(k)
    return out


# -- the fundamental lemma ------------------------------------------------------------


def fundamental_lemma_check(K: Filling, l: int, j: int) -> bool:
    """Compare t T_j^{-1} and T_j applied to sum_C X^C Psi_{C (x) K} with
    their closed forms sum_D X^D f_{D,K} and sum_D X^D g_{D,K}."""
    n = K.n
    if K.columns and l < len(K.columns[0]):
        raise ValueError(f"column length {l} is shorter than the leftmost column of K")
    if not 1 <= j < n:
        raise ValueError(f"j={j} is not in [1, {n - 1}]")
    psi = {C: _bigpsi_def((C,) + K.columns, n) for C in enumerate_columns(l, n)}
    total = AffineElement(n, {column_vector(C, n): h for C, h in psi.items()})
    tinv = t_inv_generator(j, n)
    Tj = HeckeElement.generator(j, n)
    lhs_f = AffineElement.hecke(tinv) * total
    lhs_g = AffineElement.hecke(Tj) * total
    f_parts, g_parts = {}, {}
    for D in psi:
        sD = column_reflect(j, D)[0]
        if column_leq(sD, D):
            f = tinv * psi[sD]
            g = tinv * psi[sD] - psi[D].scale(_ONE_MINUS_T)
        else:
            f = Tj * psi[sD] + psi[D].scale(_ONE_MINUS_T)
            g = Tj * psi[sD]
        f_parts[column_vector(D, n)] = f
        g_parts[column_vector(D, n)] = g
    return lhs_f == AffineElement(n, f_parts) and lhs_g == AffineElement(n, g_parts)

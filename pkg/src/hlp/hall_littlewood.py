"""
Hall-Littlewood polynomials P_lam(t) for GL_n by three routes.

* ``macdonald``: sum of psi_T X^T over semistandard tableaux;
* ``hecke``: Satake projection of 1_0 X^lam, divided by W_lam(t);
* ``psi_lift``: sum of tilde-psi_T X^T, where tilde-psi_T comes from Psi_T.

>>> P = p_macdonald((2, 1, 0), 3)
>>> print(P.poly.coefficient((1, 1, 1)))
2 - t - t^2
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .affine import SymPoly, monomial_symmetric, one0_xlambda, satake_project
from .hecke import poincare
from .laurent import ONE, LaurentPoly
from .psi import psi_macdonald, tilde_psi
from .tableaux import enumerate_ssyt, pad

__all__ = [
    "HLExpansion",
    "ROUTES",
    "w_lambda",
    "p_macdonald",
    "p_hecke",
    "p_psi_lift",
    "p_route",
    "kostka_numbers",
    "specialization_check",
    "SpecializationReport",
]

ROUTES = ("macdonald", "hecke", "psi_lift")


@dataclass(frozen=True)
class HLExpansion:
    shape: tuple[int, ...]
    n: int
    route: str
    poly: SymPoly

    def coefficient(self, mu: Sequence[int]):
        return self.poly.coefficient(mu)

    def is_monic(self) -> bool:
        return self.poly.coefficient(self.shape) == ONE

    def to_json(self, checks: Sequence[tuple[str, bool]] = ()) -> dict:
        return {
            "shape": list(self.shape),
            "n": self.n,
            "route": self.route,
            "coefficients": self.poly.to_json(),
            "checks": [{"name": name, "pass": bool(ok)} for name, ok in checks],
        }


def w_lambda(lam: Sequence[int], n: int) -> LaurentPoly:
    """Poincare polynomial of the stabilizer of lam in S_n."""
    return poincare(pad(lam, n))


def _tableau_sum(lam, n, weight_fn, route) -> HLExpansion:
    lam = pad(lam, n)
    terms: dict = {}
    for T in enumerate_ssyt(lam, n):
        mu = T.weight()
        c = weight_fn(T)
        terms[mu] = terms[mu] + c if mu in terms else c
    return HLExpansion(lam, n, route, SymPoly(n, terms))


def p_macdonald(lam: Sequence[int], n: int) -> HLExpansion:
    return _tableau_sum(lam, n, psi_macdonald, "macdonald")


def p_psi_lift(lam: Sequence[int], n: int) -> HLExpansion:
    return _tableau_sum(lam, n, tilde_psi, "psi_lift")


def p_hecke(lam: Sequence[int], n: int) -> HLExpansion:
    lam = pad(lam, n)
    proj = satake_project(one0_xlambda(lam, n))
    return HLExpansion(lam, n, "hecke", proj.exact_div(w_lambda(lam, n)))


def p_route(lam: Sequence[int], n: int, route: str) -> HLExpansion:
    route = route.replace("-", "_")
    if route == "macdonald":
        return p_macdonald(lam, n)
    if route == "hecke":
        return p_hecke(lam, n)
    if route == "psi_lift":
        return p_psi_lift(lam, n)
    raise ValueError(f"unknown route {route!r}")


def kostka_numbers(lam: Sequence[int], n: int) -> Counter:
    """K_{lam, mu} for every content mu, by counting tableaux."""
    return Counter(T.weight() for T in enumerate_ssyt(lam, n))


@dataclass
class SpecializationReport:
    shape: tuple[int, ...]
    n: int
    t0_ok: bool
    t1_ok: bool
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.t0_ok and self.t1_ok

    def checks(self) -> list[tuple[str, bool]]:
        return [("t=0 gives Kostka numbers", self.t0_ok), ("t=1 gives m_lambda", self.t1_ok)]


def specialization_check(lam: Sequence[int], n: int, expansion: HLExpansion | None = None) -> SpecializationReport:
    """Check P_lam(0) against Kostka numbers and P_lam(1) against m_lam."""
    lam = pad(lam, n)
    P = expansion.poly if expansion is not None else p_macdonald(lam, n).poly
    mismatches = []
    kostka = {mu: Fraction(k) for mu, k in kostka_numbers(lam, n).items()}
    at0 = P.evaluate(0)
    t0_ok = at0 == kostka
    if not t0_ok:
        mismatches.append(f"t=0: {at0} != {kostka}")
    at1 = P.evaluate(1)
    m = {mu: Fraction(1) for mu in monomial_symmetric(lam, n).terms}
    t1_ok = at1 == m
    if not t1_ok:
        mismatches.append(f"t=1: {at1} != {m}")
    return SpecializationReport(lam, n, t0_ok, t1_ok, mismatches)

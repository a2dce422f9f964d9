from __future__ import annotations

import pytest

from hlp.affine import SymPoly
from hlp.hall_littlewood import (
    ROUTES,
    kostka_numbers,
    p_hecke,
    p_macdonald,
    p_psi_lift,
    p_route,
    specialization_check,
    w_lambda,
)
from hlp.laurent import ONE, LaurentPoly
from conftest import dominant, lp

T = LaurentPoly.t()


def test_w_lambda():
    assert w_lambda((0, 0, 0), 3) == lp("1 + 2*t + 2*t^2 + t^3")
    assert w_lambda((2, 1, 0), 3) == ONE
    assert w_lambda((1, 1, 0), 3) == 1 + T
    assert w_lambda((1,), 4) == lp("1 + 2*t + 2*t^2 + t^3")


def test_two_variable_example():
    for route in ROUTES:
        P = p_route((2, 0), 2, route).poly
        assert P == SymPoly(2, {(2, 0): ONE, (0, 2): ONE, (1, 1): 1 - T})


def test_three_variable_example():
    P = p_macdonald((2, 1, 0), 3)
    assert P.coefficient((2, 1, 0)) == ONE
    assert P.coefficient((1, 1, 1)) == lp("2 - t - t^2")
    assert P.coefficient((3, 0, 0)).is_zero()
    assert P.is_monic()


def test_route_names():
    assert p_route((1, 0), 2, "psi-lift").route == "psi_lift"
    with pytest.raises(ValueError):
        p_route((1, 0), 2, "schur")


@pytest.mark.parametrize("n,max_weight", [(1, 6), (2, 6), (3, 6), (4, 5)])
def test_routes_agree(n, max_weight):
    for lam in dominant(n, max_weight):
        a, b, c = p_macdonald(lam, n), p_hecke(lam, n), p_psi_lift(lam, n)
        assert a.poly == b.poly == c.poly
        assert a.is_monic() and a.poly.is_symmetric()
        assert all(x == lam or x[0] <= lam[0] for x in a.poly.terms)


@pytest.mark.parametrize("n", (2, 3))
def test_determinant_shift(n):
    det = (1,) * n
    for lam in dominant(n, 4):
        shifted = tuple(x + 1 for x in lam)
        assert p_macdonald(shifted, n).poly == p_macdonald(lam, n).poly.times_monomial(det)


@pytest.mark.parametrize("n", range(1, 5))
def test_specializations(n):
    for lam in dominant(n, 5):
        report = specialization_check(lam, n)
        assert report.ok, report.mismatches
        assert [ok for _, ok in report.checks()] == [True, True]


def test_specialization_detects_mismatch():
    wrong = p_macdonald((1, 0), 2)
    bad = type(wrong)(wrong.shape, 2, "macdonald", wrong.poly + SymPoly(2, {(1, 0): T}))
    report = specialization_check((1, 0), 2, bad)
    assert report.t0_ok and not report.t1_ok and report.mismatches


def test_kostka():
    k = kostka_numbers((2, 1, 0), 3)
    assert k[(1, 1, 1)] == 2 and k[(2, 1, 0)] == 1 and sum(k.values()) == 8


@pytest.mark.parametrize("lam", [(1, 0, 0, 0, 0), (2, 1, 0, 0, 0), (1, 1, 1, 1, 0), (2, 2, 0, 0, 0)])
def test_rank_five_spot_checks(lam):
    a, b = p_macdonald(lam, 5), p_hecke(lam, 5)
    assert a.poly == b.poly == p_psi_lift(lam, 5).poly
    assert specialization_check(lam, 5, a).ok


def test_json_shape():
    P = p_hecke((1, 0), 2)
    data = P.to_json([("monic", True)])
    assert data["shape"] == [1, 0] and data["route"] == "hecke" and data["n"] == 2
    assert data["checks"] == [{"name": "monic", "pass": True}]
    assert SymPoly.from_json(2, data["coefficients"]) == P.poly

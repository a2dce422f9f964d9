from __future__ import annotations

import itertools

import pytest
from hypothesis import settings

from hlp.hecke import HeckeElement, t_inv_generator
from hlp.laurent import LaurentPoly

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


def dominant(n: int, max_weight: int, min_weight: int = 0):
    """All weakly decreasing nonnegative n-tuples with min_weight <= sum <= max_weight."""
    out = []
    for lam in itertools.product(range(max_weight + 1), repeat=n):
        if min_weight <= sum(lam) <= max_weight and all(lam[i] >= lam[i + 1] for i in range(n - 1)):
            out.append(lam)
    return sorted(out, key=lambda l: (sum(l), tuple(-x for x in l)))


def sweep():
    """(lam, n) pairs of the main verification range."""
    cases = []
    for n, w in ((2, 6), (3, 6), (4, 5)):
        cases += [(lam, n) for lam in dominant(n, w)]
    return cases


def lp(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text)


def Ti(i: int, n: int) -> HeckeElement:
    return HeckeElement.generator(i, n)


def tTinv(i: int, n: int) -> HeckeElement:
    return t_inv_generator(i, n)


@pytest.fixture
def t():
    return LaurentPoly.t()

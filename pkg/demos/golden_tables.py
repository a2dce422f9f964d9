"""
Walk through the two small worked tables: the Hecke lifts Psi_T over
B((2,1,0)) and the scalar weights psi_T over B((3,2,0)).

    python3 demos/golden_tables.py
"""
from __future__ import annotations

from hlp.hecke import poincare, project_one0
from hlp.psi import bigpsi_def, bigpsi_rec, psi_box, psi_klostermann, psi_macdonald
from hlp.tableaux import enumerate_ssyt


def lifts(lam: tuple[int, ...], n: int) -> None:
    print(f"Psi_T for T in B({lam}), n={n}")
    for T in enumerate_ssyt(lam, n):
        d = bigpsi_def(T)
        # the recursion rebuilds the same element from smaller tableaux
        assert d == bigpsi_rec(T)
        print(f"  {str(T):<18} {d}")
    print()


def weights(lam: tuple[int, ...], n: int) -> None:
    W = poincare(lam)
    print(f"psi_T for T in B({lam}), n={n}; W_lambda(t) = {W}")
    for T in enumerate_ssyt(lam, n):
        p = psi_macdonald(T)
        assert p == psi_box(T) == psi_klostermann(T)
        # projecting the lift onto 1_0 recovers W_lambda(t) psi_T
        assert project_one0(bigpsi_def(T)) == W * p
        print(f"  {str(T):<18} weight {T.weight()}  psi = {p}")
    print()


if __name__ == "__main__":
    lifts((2, 1, 0), 3)
    weights((3, 2, 0), 3)

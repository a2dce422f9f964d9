"""
Expand P_(2,1,0)(t) in three variables by each route and confirm they agree.

The Hecke route starts from 1_0 X^lambda in the affine Hecke algebra, which
also equals the sum of X^wt(T) Psi_T over tableaux; both sides are printed.

    python3 demos/expand_three_routes.py
"""
from __future__ import annotations

from hlp.affine import AffineElement, one0_xlambda
from hlp.hall_littlewood import ROUTES, p_route, specialization_check
from hlp.psi import bigpsi_def
from hlp.tableaux import enumerate_ssyt

LAM = (2, 1, 0)
N = 3

if __name__ == "__main__":
    lhs = one0_xlambda(LAM, N)
    rhs = AffineElement.zero(N)
    for T in enumerate_ssyt(LAM, N):
        rhs = rhs + AffineElement(N, {T.weight(): bigpsi_def(T)})
    print(f"1_0 X^{LAM} has {len(lhs.terms())} terms; matches the tableau sum: {lhs == rhs}\n")

    expansions = [p_route(LAM, N, r) for r in ROUTES]
    for P in expansions:
        print(f"route {P.route}:")
        for mu, c in P.poly.sorted_items():
            print(f"  X^{mu}: {c}")
    print()
    print("routes agree:", all(P.poly == expansions[0].poly for P in expansions))
    report = specialization_check(LAM, N, expansions[0])
    for name, ok in report.checks():
        print(f"{name}: {ok}")

"""
The poset of single columns of length 3 with entries at most 5, with edges
C -> s_j C whenever s_j moves C up.  Prints the DOT source; pipe it into
``dot -Tpng`` to draw it.

The order on columns is checked against Bruhat order on the minimal coset
representatives u_C along the way.

    python3 demos/column_poset.py > b_varpi3.dot
"""
from __future__ import annotations

import sys

from hlp.perm import bruhat_leq, u_of_column
from hlp.tableaux import column_leq, enumerate_columns, hasse_dot, hasse_edges

ELL, N = 3, 5

if __name__ == "__main__":
    cols = enumerate_columns(ELL, N)
    for C in cols:
        for D in cols:
            assert column_leq(C, D) == bruhat_leq(u_of_column(C, N), u_of_column(D, N))
    print(f"// {len(cols)} columns, {len(hasse_edges(ELL, N))} covering edges", file=sys.stderr)
    sys.stdout.write(hasse_dot(ELL, N))

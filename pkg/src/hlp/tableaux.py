"""
Partitions, columns, and column-strict fillings.

A column of length l is a strictly increasing tuple of entries from [n]; the
set of them is B(varpi_l).  A :class:`Filling` is a tensor C_r (x) ... (x) C_1
of columns whose lengths weakly decrease from left to right.  Columns are
stored left to right, so ``filling.columns[0]`` is C_r and
``filling.columns[-1]`` is C_1.

The highest weight column (1, ..., l) is the *minimum* of B(varpi_l) in the
entrywise order; the name follows crystal conventions.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perm import check_enumeration_size

__all__ = [
    "Column",
    "Filling",
    "ColumnOrderError",
    "LengthMismatch",
    "NotContained",
    "normalize_partition",
    "pad",
    "conjugate",
    "multiplicity",
    "column_lengths",
    "enumerate_columns",
    "column_reflect",
    "column_sign",
    "column_leq",
    "column_vector",
    "is_highest_weight_column",
    "highest_weight_column",
    "enumerate_ssyt",
    "enumerate_fillings",
    "horizontal_strip",
    "hasse_edges",
    "hasse_dot",
]

Column = tuple


class ColumnOrderError(ValueError):
    """Column lengths do not weakly decrease from left to right."""


class LengthMismatch(ValueError):
    pass


class NotContained(ValueError):
    pass


# -- partitions ---------------------------------------------------------------


def normalize_partition(lam: Sequence[int]) -> tuple[int, ...]:
    """Validate a weakly decreasing nonnegative sequence and drop trailing zeros."""
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise ValueError(f"{lam} has negative parts")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not weakly decreasing")
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def pad(lam: Sequence[int], n: int) -> tuple[int, ...]:
    lam = normalize_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    return lam + (0,) * (n - len(lam))


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = normalize_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > c) for c in range(lam[0]))


def multiplicity(mu: Sequence[int], j: int) -> int:
    """m_j(mu), the number of parts equal to j."""
    return sum(1 for x in mu if x == j)


def column_lengths(lam: Sequence[int]) -> tuple[int, ...]:
    """Column lengths of lam from left to right (weakly decreasing)."""
    return conjugate(lam)


# -- columns ----------------------------------------------------------------


def enumerate_columns(l: int, n: int) -> list[Column]:
    """B(varpi_l) in lexicographic order."""
    if not 1 <= l <= n:
        raise ValueError(f"column length {l} not in [1, {n}]")
    return list(itertools.combinations(range(1, n + 1), l))


def column_reflect(j: int, C: Column) -> tuple[Column, int]:
    """(s_j C, sigma^j_C).

    sigma is -1 exactly when j is in C and j+1 is not (then s_j C > C).
    """
    has_j = j in C
    has_j1 = (j + 1) in C
    if has_j == has_j1:
        return C, 1
    if has_j:
        return tuple(j + 1 if c == j else c for c in C), -1
    return tuple(j if c == j + 1 else c for c in C), 1


def column_sign(j: int, C: Column) -> int:
    return -1 if (j in C and (j + 1) not in C) else 1


def column_leq(E: Column, F: Column) -> bool:
    if len(E) != len(F):
        raise LengthMismatch(f"columns {E} and {F} have different lengths")
    return all(e <= f for e, f in zip(E, F))


def column_vector(C: Column, n: int) -> tuple[int, ...]:
    v = [0] * n
    for c in C:
        v[c - 1] = 1
    return tuple(v)


def highest_weight_column(l: int) -> Column:
    return tuple(range(1, l + 1))


def is_highest_weight_column(C: Column) -> bool:
    return all(c == i for i, c in enumerate(C, 1))


def _check_column(C, n):
    if not C or any(a >= b for a, b in zip(C, C[1:])) or C[0] < 1 or C[-1] > n:
        raise ValueError(f"{C} is not a strictly increasing column in [1, {n}]")


# -- fillings -----------------------------------------------------------------


@dataclass(frozen=True)
class Filling:
    columns: tuple[Column, ...]
    n: int

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        for c in cols:
            _check_column(c, self.n)
        for a, b in zip(cols, cols[1:]):
            if len(a) < len(b):
                raise ColumnOrderError(
                    f"column lengths {[len(c) for c in cols]} must weakly decrease left to right"
                )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int) -> "Filling":
        rows = [list(r) for r in rows if len(r)]
        if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
            raise ValueError("row lengths must weakly decrease")
        width = len(rows[0]) if rows else 0
        cols = [tuple(r[c] for r in rows if len(r) > c) for c in range(width)]
        return cls(tuple(cols), n)

    @classmethod
    def highest_weight(cls, lam: Sequence[int], n: int) -> "Filling":
        """T^0_lam, row i filled with i."""
        lam = pad(lam, n)
        return cls(tuple(highest_weight_column(l) for l in column_lengths(lam)), n)

    @classmethod
    def parse(cls, spec: str, n: int) -> "Filling":
        """Row syntax ``1,1/3`` (rows separated by ``/``)."""
        rows = [[int(x) for x in r.split(",") if x.strip()] for r in spec.split("/")]
        return cls.from_rows(rows, n)

    def __len__(self) -> int:
        return len(self.columns)

    def column(self, k: int) -> Column:
        """C_k, counting from the right (C_1 is the rightmost column)."""
        return self.columns[len(self.columns) - k]

    @property
    def shape(self) -> tuple[int, ...]:
        lengths = [len(c) for c in self.columns]
        return tuple(sum(1 for l in lengths if l > i) for i in range(self.n))

    def rows(self) -> list[list[int]]:
        depth = len(self.columns[0]) if self.columns else 0
        return [[c[i] for c in self.columns if len(c) > i] for i in range(depth)]

    def entry(self, r: int, c: int) -> int:
        """Entry in row r, column c (0-based)."""
        return self.columns[c][r]

    def is_semistandard(self) -> bool:
        for left, right in zip(self.columns, self.columns[1:]):
            if any(a > b for a, b in zip(left, right)):
                return False
        return True

    def is_highest_weight(self) -> bool:
        return all(is_highest_weight_column(c) for c in self.columns)

    def weight(self) -> tuple[int, ...]:
        """Content vector (c_1, ..., c_n)."""
        w = [0] * self.n
        for col in self.columns:
            for x in col:
                w[x - 1] += 1
        return tuple(w)

    def omega(self, j: int, k: int) -> "Filling":
        """Apply s_j to the rightmost k columns C_k, ..., C_1."""
        r = len(self.columns)
        if not 1 <= k <= r:
            raise ValueError(f"column index {k} not in [1, {r}]")
        cols = list(self.columns)
        for idx in range(r - k, r):
            cols[idx] = column_reflect(j, cols[idx])[0]
        return Filling._unchecked(tuple(cols), self.n)

    def tensor(self, other: "Filling") -> "Filling":
        """self (x) other: self's columns on the left."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return Filling(self.columns + other.columns, self.n)

    def split_highest_weight_tail(self) -> tuple["Filling", tuple[int, ...]]:
        """Write self = S (x) T^0_mu with mu as large as possible.

        Returns (S, mu) where mu is padded to length n.
        """
        cols = self.columns
        cut = len(cols)
        while cut and is_highest_weight_column(cols[cut - 1]):
            cut -= 1
        tail = cols[cut:]
        mu = tuple(sum(1 for c in tail if len(c) > i) for i in range(self.n))
        return Filling._unchecked(cols[:cut], self.n), mu

    def gt_flag(self) -> list[tuple[int, ...]]:
        """Shapes T_{<=i} for i = 0..n, each padded to length n."""
        rows = self.rows()
        flag = []
        for i in range(self.n + 1):
            shp = [sum(1 for x in row if x <= i) for row in rows]
            flag.append(tuple(shp) + (0,) * (self.n - len(shp)))
        return flag

    @classmethod
    def _unchecked(cls, columns: tuple, n: int) -> "Filling":
        f = object.__new__(cls)
        object.__setattr__(f, "columns", columns)
        object.__setattr__(f, "n", n)
        return f

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows()) + "]"

    def row_spec(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows())

    def ytableau(self) -> str:
        """ytableaushort-style string, e.g. ``113,22``."""
        return ",".join("".join(map(str, r)) for r in self.rows())

    def to_json(self) -> list[list[int]]:
        return self.rows()


def enumerate_ssyt(lam: Sequence[int], n: int, allow_large: bool = False) -> list[Filling]:
    """B(lam): semistandard tableaux of shape lam with entries in [n].

    Ordered lexicographically by the row reading word.
    """
    check_enumeration_size(n, allow_large)
    lam = pad(lam, n)
    shape = [x for x in lam if x]
    boxes = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    out: list[Filling] = []

    def fill(pos):
        if pos == len(boxes):
            out.append(Filling.from_rows(grid, n))
            return
        r, c = boxes[pos]
        lo = 1
        if c:
            lo = grid[r][c - 1]
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        # room must remain for the boxes below in this column
        hi = n - (sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c))
        for v in range(lo, hi + 1):
            grid[r][c] = v
            fill(pos + 1)
        grid[r][c] = 0

    fill(0)
    return out


def enumerate_fillings(lam: Sequence[int], n: int, allow_large: bool = False) -> Iterator[Filling]:
    """Every column-strict filling of shape lam, semistandard or not."""
    check_enumeration_size(n, allow_large)
    lengths = column_lengths(pad(lam, n))
    pools = [enumerate_columns(l, n) for l in lengths]
    for cols in itertools.product(*pools):
        yield Filling._unchecked(tuple(cols), n)


def horizontal_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff lam / mu is a horizontal strip (lam_1 >= mu_1 >= lam_2 >= ...)."""
    m = max(len(lam), len(mu))
    lam = tuple(lam) + (0,) * (m - len(lam))
    mu = tuple(mu) + (0,) * (m - len(mu))
    if any(b > a for a, b in zip(lam, mu)):
        raise NotContained(f"{mu} is not contained in {lam}")
    return all(mu[i] >= lam[i + 1] for i in range(m - 1))


def hasse_edges(l: int, n: int) -> list[tuple[Column, Column, int]]:
    """Cover relations E < s_j E of B(varpi_l), labelled by j."""
    edges = []
    for E in enumerate_columns(l, n):
        for j in range(1, n):
            F, sign = column_reflect(j, E)
            if sign == -1:
                edges.append((E, F, j))
    return edges


def hasse_dot(l: int, n: int) -> str:
    """Graphviz digraph of B(varpi_l); edges point upward, labelled s_j."""
    name = lambda C: '"' + ",".join(map(str, C)) + '"'
    lines = [f"digraph B_varpi{l}_n{n} {{", "  rankdir=BT;"]
    for C in enumerate_columns(l, n):
        lines.append(f"  {name(C)};")
    for E, F, j in hasse_edges(l, n):
        lines.append(f'  {name(E)} -> {name(F)} [label="s{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

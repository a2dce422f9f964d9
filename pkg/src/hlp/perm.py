"""
The symmetric group S_n as a Coxeter group.

Permutations are stored in one-line notation with values 1..n, so
``Permutation((3, 1, 2))`` sends 1 -> 3, 2 -> 1, 3 -> 2.  Products compose
right to left: ``(u * v)(k) == u(v(k))``.  With that convention
``Permutation((3, 1, 2)) == s(2, 3) * s(1, 3)``.

S_n acts on Z^n by permuting coordinates, ``w e_i = e_{w(i)}``.
"""
from __future__ import annotations

import itertools
import os
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "EnumerationTooLarge",
    "identity",
    "s",
    "from_word",
    "act",
    "pairing",
    "simple_root",
    "stabilizer_generators",
    "in_stabilizer",
    "parabolic_factorize",
    "u_of_column",
    "bruhat_leq",
    "bruhat_leq_subword",
    "all_permutations",
    "max_enumeration_n",
]

DEFAULT_MAX_N = 9


class EnumerationTooLarge(ValueError):
    pass


def max_enumeration_n() -> int:
    return int(os.environ.get("HLP_MAX_N", DEFAULT_MAX_N))


def check_enumeration_size(n: int, allow_large: bool = False) -> None:
    if not allow_large and n > max_enumeration_n():
        raise EnumerationTooLarge(
            f"refusing to enumerate for n={n} > {max_enumeration_n()}; "
            "pass allow_large=True or raise HLP_MAX_N"
        )


class Permutation(tuple):
    """An element of S_n in one-line notation."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        return tuple.__new__(cls, images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError("permutations of different rank")
        return Permutation._raw(tuple(self[v - 1] for v in other))

    def __rmul__(self, other):
        return NotImplemented

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self, 1))

    def length(self) -> int:
        return _length(tuple(self))

    def inversions(self) -> frozenset[tuple[int, int]]:
        """Inv(w) as pairs (i, j), i < j, standing for the root e_i - e_j.

        e_i - e_j is sent to e_{w(i)} - e_{w(j)}, which is negative exactly
        when w(i) > w(j).
        """
        n = len(self)
        return frozenset(
            (i + 1, j + 1)
            for i in range(n)
            for j in range(i + 1, n)
            if self[i] > self[j]
        )

    def right_descents(self) -> list[int]:
        return [i for i in range(1, len(self)) if self[i - 1] > self[i]]

    def left_multiply_increases(self, i: int) -> bool:
        """True iff l(s_i w) > l(w), i.e. value i sits left of value i+1."""
        return self.index(i) < self.index(i + 1)

    def left_simple(self, i: int) -> "Permutation":
        """s_i * w: swap the values i and i+1."""
        return Permutation._raw(
            tuple(i + 1 if v == i else i if v == i + 1 else v for v in self)
        )

    def right_simple(self, i: int) -> "Permutation":
        """w * s_i: swap the entries in positions i and i+1."""
        w = list(self)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation._raw(tuple(w))

    def reduced_word(self) -> tuple[int, ...]:
        return _reduced_word(tuple(self))

    def word_str(self) -> str:
        word = self.reduced_word()
        return " ".join(f"s{i}" for i in word) if word else "e"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


@lru_cache(maxsize=None)
def _length(w: tuple) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


@lru_cache(maxsize=None)
def _reduced_word(w: tuple) -> tuple[int, ...]:
    # peel off the smallest right descent until the identity is reached
    word: list[int] = []
    w = list(w)
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    word.reverse()
    return tuple(word)


def identity(n: int) -> Permutation:
    return Permutation._raw(tuple(range(1, n + 1)))


def s(i: int, n: int) -> Permutation:
    """The simple transposition (i, i+1) in S_n."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a simple reflection of S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation._raw(tuple(w))


def from_word(word: Sequence[int], n: int) -> Permutation:
    """The product s_{word[0]} s_{word[1]} ... in S_n."""
    w = identity(n)
    for i in reversed(word):
        w = w.left_simple(i)
    return w


def act(w: Sequence[int], mu: Sequence[int]) -> tuple[int, ...]:
    """w . mu, the coordinate permutation with (w mu)_{w(i)} = mu_i."""
    out = [0] * len(mu)
    for i, v in enumerate(w):
        out[v - 1] = mu[i]
    return tuple(out)


def pairing(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def simple_root(i: int, n: int) -> tuple[int, ...]:
    alpha = [0] * n
    alpha[i - 1] = 1
    alpha[i] = -1
    return tuple(alpha)


def stabilizer_generators(lam: Sequence[int]) -> list[int]:
    """Indices i with s_i lam = lam."""
    return [i for i in range(1, len(lam)) if lam[i - 1] == lam[i]]


def in_stabilizer(w: Sequence[int], lam: Sequence[int]) -> bool:
    return act(w, lam) == tuple(lam)


def _blocks(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal position intervals [a, b) on which lam is constant."""
    blocks = []
    start = 0
    for i in range(1, len(lam) + 1):
        if i == len(lam) or lam[i] != lam[start]:
            blocks.append((start, i))
            start = i
    return blocks


def _check_dominant(lam: Sequence[int]) -> None:
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{tuple(lam)} is not weakly decreasing")


def parabolic_factorize(w: Permutation, lam: Sequence[int]) -> tuple[Permutation, Permutation]:
    """Factor w = u v with u minimal in w S_{n,lam} and v in S_{n,lam}.

    The stabilizer of a dominant lam permutes positions inside each block where
    lam is constant, so the minimal representative sorts w's values within
    each block.
    """
    _check_dominant(lam)
    if len(lam) != len(w):
        raise ValueError("rank mismatch")
    u = list(w)
    for a, b in _blocks(lam):
        u[a:b] = sorted(u[a:b])
    u = Permutation._raw(tuple(u))
    return u, u.inverse() * w


def u_of_column(column: Sequence[int], n: int) -> Permutation:
    """The minimal coset representative u_I of S_n / S_{n, varpi_l}.

    Sends 1..l to the entries of I and l+1..n to the complement, both in
    increasing order.
    """
    entries = list(column)
    if any(a >= b for a, b in zip(entries, entries[1:])) or (
        entries and (entries[0] < 1 or entries[-1] > n)
    ):
        raise ValueError(f"{tuple(column)} is not a column in [1, {n}]")
    rest = [k for k in range(1, n + 1) if k not in set(entries)]
    return Permutation._raw(tuple(entries + rest))


def bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Bruhat order by the tableau criterion.

    u <= v iff for every k the sorted prefix u[:k] is entrywise <= the sorted
    prefix v[:k].
    """
    if len(u) != len(v):
        raise ValueError("rank mismatch")
    for k in range(1, len(u)):
        a = sorted(u[:k])
        b = sorted(v[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


@lru_cache(maxsize=None)
def _bruhat_ideal(v: tuple) -> frozenset:
    n = len(v)
    word = _reduced_word(v)
    below = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        sub = [i for i, keep in zip(word, mask) if keep]
        below.add(tuple(from_word(sub, n)))
    return frozenset(below)


def bruhat_leq_subword(u: Sequence[int], v: Sequence[int]) -> bool:
    """Bruhat order by the subword property over a reduced word of v.

    Exponential in l(v); used as an oracle for :func:`bruhat_leq`.
    """
    return tuple(u) in _bruhat_ideal(tuple(v))


def all_permutations(n: int, allow_large: bool = False) -> Iterator[Permutation]:
    check_enumeration_size(n, allow_large)
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation._raw(p)

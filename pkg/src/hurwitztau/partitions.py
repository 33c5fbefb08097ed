"""Exact partition combinatorics and symmetric-group characters.

Partitions are canonically represented as weakly decreasing tuples of
positive ints (the empty tuple for weight 0), which makes them directly
usable as memoization keys.  Everything here is exact integer/rational
arithmetic; no floats.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial
from typing import Iterator, NamedTuple, Sequence

from .errors import ArgumentError, CapacityError

PartitionT = tuple[int, ...]

DEFAULT_ENUMERATION_BOUND = 30


def _cache_size() -> int | None:
    raw = os.environ.get("HURWITZTAU_CACHE_SIZE")
    if raw is None:
        return None
    return int(raw) if int(raw) > 0 else None


class Cell(NamedTuple):
    """A box of a Young diagram, 1-indexed, with content col - row."""

    row: int
    col: int
    content: int


def as_partition(parts: Sequence[int]) -> PartitionT:
    """Validate and canonicalize a weakly decreasing sequence of positive ints."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise ArgumentError(f"partition parts must be positive, got {lam}")
        if i and lam[i - 1] < p:
            raise ArgumentError(f"partition parts must be weakly decreasing, got {lam}")
    return lam


def weight(lam: PartitionT) -> int:
    return sum(lam)


def length(lam: PartitionT) -> int:
    return len(lam)


def colength(lam: PartitionT) -> int:
    """weight - length; the number of transposition-equivalents of the profile."""
    return sum(lam) - len(lam)


def conjugate(lam: PartitionT) -> PartitionT:
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def cells(lam: PartitionT) -> Iterator[Cell]:
    """All boxes of the Young diagram in row-major order."""
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            yield Cell(i, j, j - i)


def contents(lam: PartitionT) -> tuple[int, ...]:
    """The multiset {col - row} over all cells, in row-major order."""
    return tuple(c.content for c in cells(lam))


def enumerate_partitions(n: int, max_n: int = DEFAULT_ENUMERATION_BOUND) -> list[PartitionT]:
    """All partitions of n, each once, in reverse-lexicographic order."""
    if n < 0:
        raise ArgumentError(f"cannot partition a negative integer: {n}")
    if n > max_n:
        raise CapacityError(f"partition enumeration bound exceeded: {n} > {max_n}")
    return list(_partitions_rec(n, n))


def _partitions_rec(n: int, largest: int) -> Iterator[PartitionT]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_rec(n - first, first):
            yield (first,) + rest


def hook_product(lam: PartitionT) -> int:
    """Product of all hook lengths h(lam)."""
    conj = conjugate(lam)
    prod = 1
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            prod *= part - j + conj[j - 1] - i + 1
    return prod


def dimension(lam: PartitionT) -> int:
    """Number of standard Young tableaux: |lam|! / h(lam)."""
    return factorial(weight(lam)) // hook_product(lam)


def z_order(mu: PartitionT) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    prod = 1
    mult = _multiplicities(mu)
    for part, m in mult.items():
        prod *= factorial(m) * part**m
    return prod


def aut_order(lam: PartitionT) -> int:
    """prod_i m_i(lam)! over the part multiplicities."""
    prod = 1
    for m in _multiplicities(lam).values():
        prod *= factorial(m)
    return prod


def _multiplicities(lam: PartitionT) -> dict[int, int]:
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    return mult


# --- irreducible characters (Murnaghan-Nakayama via beta sets) ------------

def character(lam: PartitionT, mu: PartitionT) -> int:
    """Irreducible S_N character chi_lam evaluated on the class of type mu."""
    if weight(lam) != weight(mu):
        raise ArgumentError(
            f"character requires equal weights: |{lam}| = {weight(lam)}, |{mu}| = {weight(mu)}"
        )
    return _character_cached(lam, mu)


@lru_cache(maxsize=_cache_size())
def _character_cached(lam: PartitionT, mu: PartitionT) -> int:
    if not mu:
        return 1
    r = mu[0]
    rest = mu[1:]
    # Removing a border strip of length r is subtracting r from one element
    # of the beta set {lam_i + (m - i)}, keeping all elements distinct; the
    # strip height parity is the number of beta elements jumped over.
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    beta_set = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        jumped = sum(1 for other in beta if nb < other < b)
        new_beta = sorted(beta_set - {b} | {nb}, reverse=True)
        new_lam = tuple(
            val - (m - 1 - pos) for pos, val in enumerate(new_beta) if val - (m - 1 - pos) > 0
        )
        total += (-1) ** jumped * _character_cached(new_lam, rest)
    return total


def clear_character_cache() -> None:
    """Drop the memo table (call between weight levels to bound memory)."""
    _character_cached.cache_clear()


# --- monomial and forgotten symmetric functions ---------------------------

def monomial_sym(lam: PartitionT, variables: Sequence[Fraction]) -> Fraction:
    """m_lam evaluated at a finite list of values.

    Zero whenever lam has more parts than there are variables.
    """
    if not lam:
        return Fraction(1)
    k = len(lam)
    n = len(variables)
    total = Fraction(0)
    for idx in combinations(range(n), k):
        for sigma in permutations(range(k)):
            term = Fraction(1)
            for i in range(k):
                term *= Fraction(variables[idx[sigma[i]]]) ** lam[i]
            total += term
    return total / aut_order(lam)


def forgotten_sym(lam: PartitionT, variables: Sequence[Fraction]) -> Fraction:
    """f_lam at a finite list of values.

    Weakly increasing index chains with repetition, and an overall sign
    (-1)**colength(lam).
    """
    if not lam:
        return Fraction(1)
    k = len(lam)
    n = len(variables)
    total = Fraction(0)
    for idx in combinations_with_replacement(range(n), k):
        for sigma in permutations(range(k)):
            term = Fraction(1)
            for i in range(k):
                term *= Fraction(variables[idx[sigma[i]]]) ** lam[i]
            total += term
    sign = -1 if colength(lam) % 2 else 1
    return sign * total / aut_order(lam)

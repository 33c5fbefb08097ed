"""Pure and rationally weighted Hurwitz numbers.

The brute-force counter enumerates factorizations of the identity in S_N
directly and is the oracle; the character-formula path is the production
engine.  Weighted Hurwitz numbers sum pure ones over branching
configurations of fixed total colength, with monomial/forgotten weight
factors in the c and d parameters.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence

from .errors import ArgumentError, CapacityError
from .partitions import (
    PartitionT,
    as_partition,
    aut_order,
    character,
    colength,
    dimension,
    enumerate_partitions,
    forgotten_sym,
    monomial_sym,
    weight,
    z_order,
)
from .weights import WeightData

BRUTEFORCE_MAX_N = 6
BRUTEFORCE_MAX_K = 4
FROBENIUS_MAX_N = 12

Perm = tuple[int, ...]


def as_profiles(profiles: Sequence[Sequence[int]]) -> tuple[PartitionT, ...]:
    """Canonicalize a nonempty tuple of equal-weight partitions."""
    if not profiles:
        raise ArgumentError("profile tuple must be nonempty")
    canon = tuple(as_partition(p) for p in profiles)
    n = weight(canon[0])
    for p in canon:
        if weight(p) != n:
            raise ArgumentError(f"profiles must all have equal weight: {canon}")
    return canon


# --- permutation machinery for the brute-force oracle ---------------------

def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)[i] = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def cycle_type(p: Perm) -> PartitionT:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        size = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            size += 1
        lengths.append(size)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=8)
def conjugacy_classes(n: int) -> dict[PartitionT, tuple[Perm, ...]]:
    """All of S_n grouped by cycle type."""
    classes: dict[PartitionT, list[Perm]] = {}
    for p in permutations(range(n)):
        classes.setdefault(cycle_type(p), []).append(p)
    return {t: tuple(ps) for t, ps in classes.items()}


def pure_hurwitz_bruteforce(
    profiles: Sequence[Sequence[int]],
    max_n: int = BRUTEFORCE_MAX_N,
    max_k: int = BRUTEFORCE_MAX_K,
) -> Fraction:
    """(1/N!) times the number of identity factorizations with given cycle types.

    Exhaustive over tuples in the first k-1 classes; the last factor is
    forced to be the inverse of the running product, so only its cycle type
    is checked.
    """
    canon = as_profiles(profiles)
    n = weight(canon[0])
    if n > max_n:
        raise CapacityError(f"brute force limited to N <= {max_n}, got {n}")
    if len(canon) > max_k:
        raise CapacityError(f"brute force limited to k <= {max_k} profiles, got {len(canon)}")
    classes = conjugacy_classes(n)
    identity = tuple(range(n))
    target = canon[-1]
    count = 0
    for prefix in product(*(classes[p] for p in canon[:-1])):
        acc = identity
        for h in prefix:
            acc = compose(acc, h)
        if cycle_type(acc) == target:
            count += 1
    return Fraction(count, factorial(n))


def pure_hurwitz_frobenius(
    profiles: Sequence[Sequence[int]],
    max_n: int = FROBENIUS_MAX_N,
) -> Fraction:
    """Same value via the class-algebra character sum."""
    canon = as_profiles(profiles)
    n = weight(canon[0])
    if n > max_n:
        raise CapacityError(f"character formula limited to N <= {max_n}, got {n}")
    return _frobenius_cached(tuple(sorted(canon)), n)


@lru_cache(maxsize=None)
def _frobenius_cached(canon: tuple[PartitionT, ...], n: int) -> Fraction:
    k = len(canon)
    nfact = factorial(n)
    z_prod = 1
    for p in canon:
        z_prod *= z_order(p)
    total = Fraction(0)
    for lam in enumerate_partitions(n):
        dim = dimension(lam)
        chi_prod = 1
        for p in canon:
            chi_prod *= character(lam, p)
        if chi_prod:
            total += chi_prod * Fraction(dim) ** (2 - k)
    return Fraction(nfact) ** (k - 2) / z_prod * total


# --- weighted Hurwitz numbers ----------------------------------------------

def weight_factor_rational(
    mus: Sequence[PartitionT],
    nus: Sequence[PartitionT],
    c: Sequence[Fraction],
    d: Sequence[Fraction],
) -> Fraction:
    """The signed factor attached to an ordered branching configuration.

    Monomial-type sum over the c parameters for the mu block, forgotten-type
    sum over the d parameters for the nu block; the 1/(k! l!) makes the
    ordered-tuple enumeration match the unordered definition.
    """
    mu_cols = []
    for p in mus:
        col = colength(as_partition(p))
        if col == 0:
            raise ArgumentError(f"weighted profile {tuple(p)} has colength 0")
        mu_cols.append(col)
    nu_cols = []
    for p in nus:
        col = colength(as_partition(p))
        if col == 0:
            raise ArgumentError(f"weighted profile {tuple(p)} has colength 0")
        nu_cols.append(col)
    lam_mu = tuple(sorted(mu_cols, reverse=True))
    lam_nu = tuple(sorted(nu_cols, reverse=True))
    k = len(lam_mu)
    l = len(lam_nu)
    c_part = aut_order(lam_mu) * monomial_sym(lam_mu, c) / factorial(k)
    d_part = aut_order(lam_nu) * forgotten_sym(lam_nu, d) / factorial(l)
    # forgotten_sym carries (-1)^colength(lam_nu) = (-1)^(sum colengths - l)
    return c_part * d_part


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of total into the given number of positive parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _partitions_with_colength(n: int, col: int) -> list[PartitionT]:
    return [lam for lam in enumerate_partitions(n) if colength(lam) == col]


def weighted_hurwitz_direct(
    weights: WeightData,
    d: int,
    mu: Sequence[int],
    max_n: int = FROBENIUS_MAX_N,
) -> Fraction:
    """H^d_G(mu) summed directly over branching configurations.

    Ordered tuples of weighted profiles (colength >= 1 each) with total
    colength d, each contributing weight factor times the pure Hurwitz
    number that also includes the unweighted profile mu.
    """
    mu_c = as_partition(mu)
    n = weight(mu_c)
    if n == 0:
        raise ArgumentError("mu must be a partition of a positive integer")
    if d < 0:
        raise ArgumentError("d must be nonnegative")
    if n > max_n:
        raise CapacityError(f"weighted sum limited to N <= {max_n}, got {n}")
    total = Fraction(0)
    for k in range(d + 1):
        for l in range(d - k + 1):
            if k + l == 0 and d > 0:
                continue
            for split in range(d + 1):
                mu_part, nu_part = split, d - split
                for e_comp in _compositions(mu_part, k):
                    for f_comp in _compositions(nu_part, l):
                        mu_choices = [_partitions_with_colength(n, e) for e in e_comp]
                        nu_choices = [_partitions_with_colength(n, f) for f in f_comp]
                        for mus in product(*mu_choices):
                            for nus in product(*nu_choices):
                                w = weight_factor_rational(mus, nus, weights.c, weights.d)
                                if w == 0:
                                    continue
                                h = pure_hurwitz_frobenius(
                                    list(mus) + list(nus) + [mu_c], max_n=max_n
                                )
                                total += w * h
    return total


def riemann_hurwitz_genus(n: int, mu: Sequence[int], d: int) -> int | None:
    """Genus g with 2 - 2g = N + len(mu) - d, or None when no cover exists."""
    mu_c = as_partition(mu)
    if weight(mu_c) != n:
        raise ArgumentError(f"mu must have weight {n}, got {tuple(mu)}")
    chi = n + len(mu_c) - d
    if chi % 2 or chi > 2:
        return None
    return (2 - chi) // 2

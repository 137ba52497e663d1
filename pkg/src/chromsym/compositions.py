"""Composition and partition calculus.

Compositions and partitions are plain tuples of positive ints.  A partition
is a tuple sorted into weakly decreasing order.  The empty tuple is a valid
composition of 0 but is rejected wherever a nonempty one is required.

    >>> compose((1, 2), (1, 2))
    (1, 2, 1, 3, 2)
    >>> irreducible_factorization((1, 2, 1, 3, 2))
    [(1, 2), (1, 2)]
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate, combinations, product
from typing import Iterable, Iterator, Sequence

from chromsym.errors import DomainError

Composition = tuple[int, ...]
Partition = tuple[int, ...]


def composition(parts: Iterable[int]) -> Composition:
    """Validate ``parts`` and return it as a composition tuple."""
    out = tuple(parts)
    for x in out:
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise DomainError(f"composition parts must be positive integers, got {out!r}")
    return out


def partition(parts: Iterable[int]) -> Partition:
    return tuple(sorted(composition(parts), reverse=True))


def is_partition(parts: Sequence[int]) -> bool:
    return all(x >= 1 for x in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def _nonempty(alpha: Composition, what: str) -> None:
    if not alpha:
        raise DomainError(f"{what} requires a nonempty composition")


# ---------------------------------------------------------------------------
# set(alpha) correspondence
# ---------------------------------------------------------------------------

def set_of(alpha: Composition) -> frozenset[int]:
    return frozenset(accumulate(alpha[:-1]))


def from_set(s: Iterable[int], n: int) -> Composition:
    """The unique composition of ``n`` whose partial-sum set is ``s``."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    cuts = sorted(set(s))
    if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
        raise DomainError(f"set {cuts} is not contained in [1, {n - 1}]")
    if n == 0:
        return ()
    bounds = [0, *cuts, n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def complement(alpha: Composition) -> Composition:
    _nonempty(alpha, "complement")
    n = sum(alpha)
    return from_set(set(range(1, n)) - set_of(alpha), n)


def reversal(alpha: Composition) -> Composition:
    return tuple(reversed(alpha))


def underlying_partition(alpha: Composition) -> Partition:
    return tuple(sorted(alpha, reverse=True))


def concat(alpha: Composition, beta: Composition) -> Composition:
    return tuple(alpha) + tuple(beta)


def near_concat(alpha: Composition, beta: Composition) -> Composition:
    if not alpha or not beta:
        raise DomainError("near concatenation requires two nonempty compositions")
    return tuple(alpha[:-1]) + (alpha[-1] + beta[0],) + tuple(beta[1:])


def near_power(beta: Composition, k: int) -> Composition:
    """``beta`` near-concatenated with itself ``k`` times (k >= 1)."""
    _nonempty(beta, "near_power")
    if k < 1:
        raise DomainError(f"near_power exponent must be >= 1, got {k}")
    if len(beta) == 1:
        return (beta[0] * k,)
    inner = beta[1:-1]
    joint = beta[-1] + beta[0]
    out = list(beta[:-1])
    for _ in range(k - 1):
        out.append(joint)
        out.extend(inner)
    out.append(beta[-1])
    return tuple(out)


# ---------------------------------------------------------------------------
# Orders
# ---------------------------------------------------------------------------

def coarsens(alpha: Composition, beta: Composition) -> bool:
    """True when ``alpha`` is a coarsening of ``beta``."""
    if sum(alpha) != sum(beta):
        return False
    return set_of(alpha) <= set_of(beta)


def contains(alpha: Composition, beta: Composition) -> bool:
    if len(alpha) != len(beta):
        return False
    return all(a >= b for a, b in zip(alpha, beta))


def coarsenings(alpha: Composition) -> list[Composition]:
    n = sum(alpha)
    cuts = sorted(set_of(alpha))
    out = [from_set(sub, n) for r in range(len(cuts) + 1) for sub in combinations(cuts, r)]
    return sorted(out, key=composition_key)


def refinements(alpha: Composition) -> list[Composition]:
    n = sum(alpha)
    if n == 0:
        return [()]
    free = sorted(set(range(1, n)) - set_of(alpha))
    base = set_of(alpha)
    out = [from_set(base | set(sub), n) for r in range(len(free) + 1) for sub in combinations(free, r)]
    return sorted(out, key=composition_key)


def contained_in(lam: Composition) -> Iterator[Composition]:
    """All compositions of the same length that ``lam`` contains."""
    return product(*(range(1, x + 1) for x in lam))


# ---------------------------------------------------------------------------
# Enumeration and canonical orders
# ---------------------------------------------------------------------------

def composition_key(alpha: Composition) -> tuple:
    """Size, then length, then lexicographic."""
    return (sum(alpha), len(alpha), tuple(alpha))


def partition_key(lam: Partition) -> tuple:
    """Length ascending, then lexicographically descending."""
    return (len(lam), tuple(-x for x in lam))


def compositions_of(n: int) -> list[Composition]:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n == 0:
        return [()]
    return sorted(
        (from_set(sub, n) for r in range(n) for sub in combinations(range(1, n), r)),
        key=composition_key,
    )


@lru_cache(maxsize=None)
def _partitions_desc(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions_desc(n - first, first))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """Partitions of ``n`` in canonical order, e.g. 4, 31, 22, 211, 1111."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return sorted(_partitions_desc(n, n), key=partition_key)


# ---------------------------------------------------------------------------
# Composition of compositions
# ---------------------------------------------------------------------------

def compose(alpha: Composition, beta: Composition) -> Composition:
    """``beta`` near-powered by each part of ``alpha``, then concatenated."""
    if not alpha or not beta:
        raise DomainError("compose requires two nonempty compositions")
    out: tuple[int, ...] = ()
    for a in alpha:
        out += near_power(beta, a)
    return out


def compose_all(factors: Sequence[Composition]) -> Composition:
    if not factors:
        raise DomainError("cannot compose an empty list of factors")
    out = factors[0]
    for f in factors[1:]:
        out = compose(out, f)
    return out


def is_trivial_factorization(beta: Composition, gamma: Composition) -> bool:
    if beta == (1,) or gamma == (1,):
        return True
    if len(beta) == 1 and len(gamma) == 1:
        return True
    return all(x == 1 for x in beta) and all(x == 1 for x in gamma)


def _peel(alpha: Composition, gamma: Composition) -> Composition | None:
    """Return ``beta`` with ``compose(beta, gamma) == alpha``, or None."""
    n, d = len(alpha), sum(gamma)
    blocks: list[int] = []

    def walk(i: int) -> bool:
        if i == n:
            return True
        b = 1
        while True:
            block = near_power(gamma, b)
            if i + len(block) > n or sum(block) > sum(alpha[i:]):
                return False
            if alpha[i:i + len(block)] == block:
                blocks.append(b)
                if walk(i + len(block)):
                    return True
                blocks.pop()
            b += 1

    if sum(alpha) % d:
        return None
    return tuple(blocks) if walk(0) else None


def two_factorizations(alpha: Composition) -> list[tuple[Composition, Composition]]:
    """Every pair ``(beta, gamma)`` with ``compose(beta, gamma) == alpha``."""
    _nonempty(alpha, "two_factorizations")
    n = sum(alpha)
    out = []
    for d in range(1, n + 1):
        if n % d:
            continue
        # gamma shares its first len(gamma)-1 parts with alpha; its last part
        # is fixed by the size d.
        head_sum = 0
        for length in range(1, len(alpha) + 1):
            if length > 1:
                head_sum += alpha[length - 2]
            last = d - head_sum
            if last < 1:
                break
            gamma = tuple(alpha[:length - 1]) + (last,)
            beta = _peel(alpha, gamma)
            if beta is not None:
                out.append((beta, gamma))
    return out


def _merge_trivial(factors: list[Composition]) -> list[Composition]:
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            if is_trivial_factorization(factors[i], factors[i + 1]):
                factors[i:i + 2] = [compose(factors[i], factors[i + 1])]
                changed = True
                break
    return factors


@lru_cache(maxsize=4096)
def _irreducible(alpha: Composition) -> tuple[Composition, ...]:
    for beta, gamma in two_factorizations(alpha):
        if not is_trivial_factorization(beta, gamma):
            factors = list(_irreducible(beta)) + list(_irreducible(gamma))
            return tuple(_merge_trivial(factors))
    return (alpha,)


def irreducible_factorization(alpha: Composition) -> list[Composition]:
    """The unique irreducible factorization of a nonempty composition.

    Any nontrivial split is refined recursively; adjacent factors that
    compose trivially are then merged back (their product is again a factor
    with only trivial splits).  Uniqueness of the irreducible factorization
    makes the choice of split immaterial.
    """
    alpha = composition(alpha)
    _nonempty(alpha, "irreducible_factorization")
    return list(_irreducible(alpha))


def nonsymmetric_factor_count(alpha: Composition) -> int:
    return sum(1 for f in irreducible_factorization(alpha) if f != reversal(f))


def equivalent(alpha: Composition, beta: Composition) -> bool:
    """Ribbon equivalence: equal factorization length, factors equal up to reversal."""
    _nonempty(alpha, "equivalent")
    _nonempty(beta, "equivalent")
    if sum(alpha) != sum(beta):
        return False
    fa = irreducible_factorization(alpha)
    fb = irreducible_factorization(beta)
    if len(fa) != len(fb):
        return False
    return all(g == f or g == reversal(f) for f, g in zip(fa, fb))


def equivalence_class(alpha: Composition) -> list[Composition]:
    factors = irreducible_factorization(alpha)
    choices = [sorted({f, reversal(f)}) for f in factors]
    return sorted({compose_all(pick) for pick in product(*choices)}, key=composition_key)


def path_class_count(alpha: Composition) -> int:
    """Weighted paths, up to isomorphism, sharing X with the path weighted by ``alpha``."""
    alpha = composition(alpha)
    _nonempty(alpha, "path_class_count")
    if alpha == reversal(alpha):
        return 1
    return 2 ** (nonsymmetric_factor_count(alpha) - 1)

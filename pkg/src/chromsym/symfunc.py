"""Sparse symmetric functions over Q, stored in the power-sum basis.

A :class:`SymFunc` maps partitions to nonzero :class:`~fractions.Fraction`
coefficients; ``()`` indexes the constant term.  The e- and h-bases are
reached through Newton's identities, ribbons through their signed
h-expansion over coarsenings.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Mapping, Union

from chromsym.compositions import (
    Composition,
    Partition,
    coarsenings,
    partition_key,
    underlying_partition,
)
from chromsym.errors import DomainError, OracleInapplicable, ResourceError

Scalar = Union[int, Fraction]


def _merge(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


class SymFunc:
    """Immutable finite linear combination of power sums ``p_lambda``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Partition, Scalar] | Iterable[tuple[Partition, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, Fraction] = {}
        for lam, c in items:
            key = tuple(sorted(lam, reverse=True))
            if any(x < 1 for x in key):
                raise DomainError(f"invalid partition {lam!r}")
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls) -> SymFunc:
        return cls()

    @classmethod
    def one(cls) -> SymFunc:
        return cls({(): 1})

    @classmethod
    def _raw(cls, terms: dict[Partition, Fraction]) -> SymFunc:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._terms)

    def coefficient(self, lam: Partition) -> Fraction:
        return self._terms.get(tuple(sorted(lam, reverse=True)), Fraction(0))

    def items(self) -> list[tuple[Partition, Fraction]]:
        """Terms in canonical order (by degree, then length, then lex descending)."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), partition_key(kv[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self._terms}

    def degree(self) -> int:
        """Degree of a homogeneous function (0 for the zero function)."""
        ds = self.degrees()
        if len(ds) > 1:
            raise DomainError(f"not homogeneous: degrees {sorted(ds)}")
        return ds.pop() if ds else 0

    def homogeneous_part(self, n: int) -> SymFunc:
        return SymFunc._raw({k: v for k, v in self._terms.items() if sum(k) == n})

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: SymFunc | Scalar) -> SymFunc:
        if not isinstance(other, SymFunc):
            other = SymFunc({(): other})
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SymFunc._raw(out)

    __radd__ = __add__

    def __neg__(self) -> SymFunc:
        return SymFunc._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: SymFunc | Scalar) -> SymFunc:
        return self + (-other)

    def __rsub__(self, other: Scalar) -> SymFunc:
        return (-self) + other

    def scale(self, c: Scalar) -> SymFunc:
        c = Fraction(c)
        if c == 0:
            return SymFunc.zero()
        return SymFunc._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: SymFunc | Scalar) -> SymFunc:
        if not isinstance(other, SymFunc):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        out: dict[Partition, Fraction] = {}
        for lam, a in self._terms.items():
            for mu, b in other._terms.items():
                key = _merge(lam, mu)
                out[key] = out.get(key, 0) + a * b
        return SymFunc._raw({k: v for k, v in out.items() if v})

    def __rmul__(self, other: Scalar) -> SymFunc:
        return self.__mul__(other)

    def __pow__(self, k: int) -> SymFunc:
        out = SymFunc.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SymFunc):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SymFunc({(): other})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"SymFunc({self.pretty()})"

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for lam, c in self.items():
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            basis = "p(" + ",".join(map(str, lam)) + ")" if lam else ""
            if not basis:
                body = str(mag)
            elif mag == 1:
                body = basis
            else:
                body = f"{mag}*{basis}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "basis": "p",
            "terms": [{"coeff": str(c), "partition": list(lam)} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SymFunc:
        if data.get("basis", "p") != "p":
            raise DomainError(f"unsupported basis {data.get('basis')!r}")
        return cls((tuple(t["partition"]), Fraction(t["coeff"])) for t in data["terms"])


# ---------------------------------------------------------------------------
# Classical bases
# ---------------------------------------------------------------------------

def p(lam: Iterable[int]) -> SymFunc:
    return SymFunc({tuple(lam): 1})


@lru_cache(maxsize=None)
def e_to_p(n: int) -> SymFunc:
    """n e_n = sum_i (-1)^(i-1) p_i e_(n-i)."""
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    if n == 0:
        return SymFunc.one()
    acc = SymFunc.zero()
    for i in range(1, n + 1):
        term = p((i,)) * e_to_p(n - i)
        acc = acc + (term if i % 2 else -term)
    return acc.scale(Fraction(1, n))


@lru_cache(maxsize=None)
def h_to_p(n: int) -> SymFunc:
    """n h_n = sum_i p_i h_(n-i)."""
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    if n == 0:
        return SymFunc.one()
    acc = SymFunc.zero()
    for i in range(1, n + 1):
        acc = acc + p((i,)) * h_to_p(n - i)
    return acc.scale(Fraction(1, n))


def _product(fs: Iterable[SymFunc]) -> SymFunc:
    out = SymFunc.one()
    for f in fs:
        out = out * f
    return out


def e_of(lam: Iterable[int]) -> SymFunc:
    return _product(e_to_p(x) for x in lam)


def h_of(lam: Iterable[int]) -> SymFunc:
    return _product(h_to_p(x) for x in lam)


def ribbon_to_h(alpha: Composition) -> dict[Partition, int]:
    """Signed h-expansion of the ribbon Schur function, summed over coarsenings."""
    if not alpha:
        raise DomainError("ribbon requires a nonempty composition")
    out: Counter = Counter()
    for beta in coarsenings(tuple(alpha)):
        out[underlying_partition(beta)] += (-1) ** (len(alpha) - len(beta))
    return {lam: c for lam, c in sorted(out.items(), key=lambda kv: partition_key(kv[0])) if c}


def ribbon_to_p(alpha: Composition) -> SymFunc:
    return sum((h_of(lam).scale(c) for lam, c in ribbon_to_h(alpha).items()), SymFunc.zero())


# ---------------------------------------------------------------------------
# Maps
# ---------------------------------------------------------------------------

def substitute_p(f: SymFunc, image: Callable[[int], SymFunc]) -> SymFunc:
    """Algebra endomorphism fixed by ``p_i -> image(i)``."""
    cache: dict[int, SymFunc] = {}
    acc = SymFunc.zero()
    for lam, c in f.items():
        term = SymFunc.one()
        for part in lam:
            if part not in cache:
                cache[part] = image(part)
            term = term * cache[part]
        acc = acc + term.scale(c)
    return acc


def omega(f: SymFunc) -> SymFunc:
    """The involution exchanging e and h: p_lambda -> (-1)^(|lambda|-l(lambda)) p_lambda."""
    return SymFunc._raw({lam: (c if (sum(lam) - len(lam)) % 2 == 0 else -c) for lam, c in f.terms.items()})


def to_h_basis(f: SymFunc) -> dict[Partition, Fraction]:
    """Coefficients of ``f`` in the h-basis, by forward substitution per degree.

    ``h_lambda`` is ``p_lambda / prod(lambda)`` plus terms with more parts, so
    processing partitions by increasing length resolves one unknown at a time.
    """
    from chromsym.linalg import expand_in_basis

    out: dict[Partition, Fraction] = {}
    for n in sorted(f.degrees()):
        part = f.homogeneous_part(n)
        out.update(expand_in_basis(part, h_of, n, longer_terms=True))
    return out


def U_map(f: SymFunc) -> SymFunc:
    """Graded automorphism sending h_lambda to p_lambda (and e_lambda to X of P_lambda)."""
    acc = SymFunc.zero()
    for lam, c in to_h_basis(f).items():
        acc = acc + p(lam).scale(c)
    return acc


def U_inverse(f: SymFunc) -> SymFunc:
    """Inverse of :func:`U_map`: p_lambda goes back to h_lambda."""
    acc = SymFunc.zero()
    for lam, c in f.items():
        acc = acc + h_of(lam).scale(c)
    return acc


# ---------------------------------------------------------------------------
# Specializations and oracles
# ---------------------------------------------------------------------------

def evaluate_all_ones(f: SymFunc, k: int) -> Fraction:
    """Value at x_1 = ... = x_k = 1, all other variables 0 (p_i -> k)."""
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    return sum((c * k ** len(lam) for lam, c in f.items()), Fraction(0))


def as_polynomial_in_k(f: SymFunc) -> list[Fraction]:
    """Coefficients of the polynomial ``k -> evaluate_all_ones(f, k)``, constant first."""
    deg = max((len(lam) for lam in f.terms), default=0)
    coeffs = [Fraction(0)] * (deg + 1)
    for lam, c in f.items():
        coeffs[len(lam)] += c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


MONOMIAL_MAX_VARS = 4
MONOMIAL_MAX_DEGREE = 10


def monomial_oracle(f: SymFunc, k: int) -> Counter:
    """Monomial expansion of ``f`` in x_1..x_k, as exponent vector -> multiplicity."""
    if k < 1 or k > MONOMIAL_MAX_VARS:
        raise ResourceError(f"monomial oracle needs 1 <= k <= {MONOMIAL_MAX_VARS}, got {k}")
    if any(sum(lam) > MONOMIAL_MAX_DEGREE for lam in f.terms):
        raise ResourceError(f"monomial oracle limited to degree <= {MONOMIAL_MAX_DEGREE}")
    if not f.is_integral():
        raise OracleInapplicable("monomial oracle needs integer coefficients")
    out: Counter = Counter()
    for lam, c in f.items():
        for choice in product(range(k), repeat=len(lam)):
            vec = [0] * k
            for part, var in zip(lam, choice):
                vec[var] += part
            out[tuple(vec)] += int(c)
    return Counter({v: m for v, m in out.items() if m})

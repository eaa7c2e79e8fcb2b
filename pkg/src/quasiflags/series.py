"""Truncated formal series on the negative root cone.

A degree vector (d_1, ..., d_{n-1}) of nonnegative integers stands for the
lattice point gamma = -sum d_i alpha_i in the cone Q^- spanned by the negated
simple roots, so a series here is a finite sum  sum_gamma c_gamma e^gamma
truncated by total degree sum d_i <= D.  Coefficients are exact scalars and
the coefficient maps are sparse: an absent key means zero.

Truncation is by total degree throughout; that is the grading in which every
operation in the package is triangular.
"""

from fractions import Fraction
from typing import Iterator

from .scalars import generalized_binomial

DegreeVector = tuple[int, ...]


def total_degree(gamma: DegreeVector) -> int:
    return sum(gamma)


def check_degree_vector(gamma, rank: int) -> DegreeVector:
    gamma = tuple(int(d) for d in gamma)
    if len(gamma) != rank:
        raise ValueError(f"degree vector {gamma} does not have rank {rank}")
    if any(d < 0 for d in gamma):
        raise ValueError(f"degree vector entries must be nonnegative: {gamma}")
    return gamma


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers with the given sum, in lex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def degree_vectors(rank: int, max_total: int) -> Iterator[DegreeVector]:
    """All degree vectors with total degree <= max_total, ordered by (total, lex)."""
    for total in range(max_total + 1):
        yield from compositions(total, rank)


class Series:
    """Sparse truncated series indexed by degree vectors.

    Immutable by convention: operations return new instances.  The zero-degree
    key is the coefficient of e^0 = 1.
    """

    __slots__ = ("rank", "truncation", "coeffs")

    def __init__(self, rank: int, truncation: int, coeffs=None):
        if rank < 1:
            raise ValueError(f"rank must be positive, got {rank}")
        if truncation < 0:
            raise ValueError(f"truncation must be nonnegative, got {truncation}")
        self.rank = rank
        self.truncation = truncation
        clean: dict[DegreeVector, Fraction] = {}
        for gamma, c in (coeffs or {}).items():
            gamma = check_degree_vector(gamma, rank)
            if total_degree(gamma) > truncation:
                raise ValueError(f"key {gamma} exceeds truncation degree {truncation}")
            c = Fraction(c)
            if c != 0:
                clean[gamma] = c
        self.coeffs = clean

    @classmethod
    def one(cls, rank: int, truncation: int) -> "Series":
        return cls(rank, truncation, {(0,) * rank: Fraction(1)})

    @classmethod
    def zero(cls, rank: int, truncation: int) -> "Series":
        return cls(rank, truncation, {})

    def coefficient(self, gamma) -> Fraction:
        gamma = check_degree_vector(gamma, self.rank)
        return self.coeffs.get(gamma, Fraction(0))

    def terms(self):
        """Sorted (degree vector, coefficient) pairs, ordered by (total, lex)."""
        return sorted(self.coeffs.items(), key=lambda kv: (total_degree(kv[0]), kv[0]))

    def truncate(self, degree: int) -> "Series":
        degree = min(degree, self.truncation)
        kept = {g: c for g, c in self.coeffs.items() if total_degree(g) <= degree}
        return Series(self.rank, degree, kept)

    def __add__(self, other: "Series") -> "Series":
        if self.rank != other.rank:
            raise ValueError("rank mismatch in series addition")
        trunc = min(self.truncation, other.truncation)
        out = dict(self.truncate(trunc).coeffs)
        for g, c in other.coeffs.items():
            if total_degree(g) <= trunc:
                out[g] = out.get(g, Fraction(0)) + c
        return Series(self.rank, trunc, out)

    def __sub__(self, other: "Series") -> "Series":
        return self + other.scale(Fraction(-1))

    def scale(self, factor) -> "Series":
        factor = Fraction(factor)
        return Series(self.rank, self.truncation,
                      {g: factor * c for g, c in self.coeffs.items()})

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other, min(self.truncation, other.truncation))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self.rank == other.rank and self.truncation == other.truncation
                and self.coeffs == other.coeffs)

    def __repr__(self):
        body = ", ".join(f"{g}: {c}" for g, c in self.terms())
        return f"Series(rank={self.rank}, D={self.truncation}, {{{body}}})"


def series_mul(a: Series, b: Series, degree: int) -> Series:
    """Cauchy product truncated at total degree `degree`."""
    if a.rank != b.rank:
        raise ValueError("rank mismatch in series multiplication")
    if degree > min(a.truncation, b.truncation):
        raise ValueError("requested degree exceeds operand truncation")
    out: dict[DegreeVector, Fraction] = {}
    for ga, ca in a.coeffs.items():
        da = total_degree(ga)
        if da > degree:
            continue
        for gb, cb in b.coeffs.items():
            if da + total_degree(gb) > degree:
                continue
            key = tuple(x + y for x, y in zip(ga, gb))
            prev = out.get(key)
            out[key] = ca * cb if prev is None else prev + ca * cb
    return Series(a.rank, degree, out)


def geometric_factor(rank: int, support: tuple[int, ...], exponent, degree: int) -> Series:
    """Expansion of (1 - e^{-alpha})^{-exponent} for the positive root alpha
    whose degree vector is `support`, truncated at total degree `degree`."""
    step = sum(support)
    coeffs = {}
    k = 0
    while k * step <= degree:
        coeffs[tuple(k * s for s in support)] = generalized_binomial(Fraction(exponent) - 1, k)
        if step == 0:
            break
        k += 1
    return Series(rank, degree, coeffs)


def denominator_power_series(n: int, exponent, degree: int) -> Series:
    """Expansion of prod_{alpha > 0} (1 - e^{-alpha})^{-exponent} for sl_n.

    Each positive root alpha_i + ... + alpha_{j-1} contributes a geometric
    factor; the factors are multiplied out with truncation at total degree
    `degree`.  Exponent 0 gives the unit series.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    rank = n - 1
    result = Series.one(rank, degree)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            support = tuple(1 if i <= k <= j - 1 else 0 for k in range(1, n))
            result = series_mul(result, geometric_factor(rank, support, exponent, degree), degree)
    return result

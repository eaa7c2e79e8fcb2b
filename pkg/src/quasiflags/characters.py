"""Torus characters of the deformation bundle at pairs of fixed points.

Over a pair of fixed flags the bundle of framed homomorphisms from one flag
into the quotient by the other decomposes into lines, and its character is a
signed sum of truncated geometric blocks in the loop weight x, one block per
triple (step i, summand j of the target, summand j' of the source), twisted
by the torus weight a_j - a_{j'}.  Restricted to the diagonal the bundle is
the tangent bundle, which gives the tangent weights that feed every
localization denominator.
"""

from functools import lru_cache
from typing import NamedTuple

from .errors import InternalInconsistency
from .tableaux import Tableau


class TorusWeight(NamedTuple):
    """Integer weight sum_j a_coeffs[j] * a_j + x_coeff * x of the torus times
    the loop rotation."""
    a_coeffs: tuple[int, ...]
    x_coeff: int

    def shift_x(self, m: int) -> "TorusWeight":
        return TorusWeight(self.a_coeffs, self.x_coeff + m)

    def is_zero(self) -> bool:
        return self.x_coeff == 0 and all(c == 0 for c in self.a_coeffs)


def x_weight(k: int, n: int) -> TorusWeight:
    return TorusWeight((0,) * n, k)


def pair_weight(j: int, j_prime: int, k: int, n: int) -> TorusWeight:
    """a_j - a_{j'} + k x (1-indexed j, j')."""
    coeffs = [0] * n
    coeffs[j - 1] += 1
    coeffs[j_prime - 1] -= 1
    return TorusWeight(tuple(coeffs), k)


class Character:
    """Finite multiplicity map on torus weights; zero multiplicities are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[TorusWeight, int] = {}
        for w, mult in (terms or {}).items():
            if mult != 0:
                clean[w] = int(mult)
        self.terms = clean

    def __add__(self, other: "Character") -> "Character":
        out = dict(self.terms)
        for w, m in other.terms.items():
            new = out.get(w, 0) + m
            if new == 0:
                out.pop(w, None)
            else:
                out[w] = new
        result = Character.__new__(Character)
        result.terms = out
        return result

    def __sub__(self, other: "Character") -> "Character":
        return self + other.negate()

    def negate(self) -> "Character":
        result = Character.__new__(Character)
        result.terms = {w: -m for w, m in self.terms.items()}
        return result

    def shift_x(self, m: int) -> "Character":
        result = Character.__new__(Character)
        result.terms = {w.shift_x(m): mult for w, mult in self.terms.items()}
        return result

    def total_multiplicity(self) -> int:
        return sum(self.terms.values())

    def weights(self) -> list[TorusWeight]:
        """Expand to a sorted weight multiset; requires all multiplicities >= 0."""
        out = []
        for w, mult in sorted(self.terms.items()):
            if mult < 0:
                raise InternalInconsistency(f"negative multiplicity {mult} at weight {w}")
            out.extend([w] * mult)
        return out

    def as_sorted_triples(self) -> list[tuple[tuple[int, ...], int, int]]:
        """Serialization: (a_coeffs, x_coeff, multiplicity), lexicographically sorted."""
        return [(w.a_coeffs, w.x_coeff, m) for w, m in sorted(self.terms.items())]

    def __eq__(self, other):
        return isinstance(other, Character) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Character({self.as_sorted_triples()})"


def geom_block(count: int) -> Character:
    """The truncated geometric series (e^{x(N+1)} - e^x)/(e^x - 1) as a character.

    N >= 1 gives e^x + ... + e^{Nx}; N = 0 gives zero; N < 0 simplifies to
    -(e^0 + e^{-x} + ... + e^{(N+1)x}).  The total multiplicity is N in every
    case.
    """
    if count >= 1:
        return Character({TorusWeight((), k): 1 for k in range(1, count + 1)})
    if count == 0:
        return Character()
    return Character({TorusWeight((), -k): -1 for k in range(0, -count)})


def pair_character(d: Tableau, d_prime: Tableau, n: int) -> Character:
    """Character of the framed-homomorphism bundle over the fixed pair (d, d').

    The positive blocks come from maps of step i of d' into step i+1 of d,
    the negative blocks from maps into step i itself:

        sum_{i=1}^{n-1} [ sum_{j<=i+1, j'<=i} e^{a_j - a_{j'}} G(d'_i^{j'} - d_{i+1}^j)
                        - sum_{j<=i,   j'<=i} e^{a_j - a_{j'}} G(d'_i^{j'} - d_i^j) ]

    where G(N) is geom_block(N) and row n of d is zero by convention.  The
    a-part uses torus coordinates a_j - a_{j'} throughout.
    """
    if d.n != n or d_prime.n != n:
        raise ValueError("tableaux must match the ambient rank n")
    acc: dict[TorusWeight, int] = {}

    def accumulate(j: int, j_prime: int, block_count: int, sign: int):
        if block_count == 0:
            return
        block = geom_block(block_count)
        for w, mult in block.terms.items():
            key = pair_weight(j, j_prime, w.x_coeff, n)
            new = acc.get(key, 0) + sign * mult
            if new == 0:
                acc.pop(key, None)
            else:
                acc[key] = new

    for i in range(1, n):
        for j_prime in range(1, i + 1):
            source = d_prime.entry(i, j_prime)
            for j in range(1, i + 2):
                accumulate(j, j_prime, source - d.entry(i + 1, j), +1)
            for j in range(1, i + 1):
                accumulate(j, j_prime, source - d.entry(i, j), -1)
    result = Character.__new__(Character)
    result.terms = acc
    return result


@lru_cache(maxsize=None)
def _tangent_weights_cached(d: Tableau, n: int) -> tuple[TorusWeight, ...]:
    char = pair_character(d, d, n)
    weights = char.weights()
    expected = 2 * sum(d.degree())
    if len(weights) != expected:
        raise InternalInconsistency(
            f"tangent multiset has size {len(weights)}, expected {expected}")
    for w in weights:
        if w.is_zero():
            raise InternalInconsistency(f"zero weight in tangent space of {d}")
    return tuple(weights)


def tangent_weights(d: Tableau, n: int) -> tuple[TorusWeight, ...]:
    """Weight multiset of the tangent space at the fixed point d.

    The diagonal character must be a genuine representation of dimension
    2 * sum(degree) with no zero weight; anything else means a transcription
    bug in the block formula and raises InternalInconsistency.
    """
    return _tangent_weights_cached(d, n)


def shift_defect(d: Tableau, d_prime: Tableau, m: int, n: int) -> Character:
    """Difference between x-shifting the pair character by m and shifting the
    second tableau by m:

        pair_character(d', d).shift_x(m) - pair_character(d', d.shift(m))

    The result is a (virtual) character independent of the pair (d, d'); that
    independence is what makes the twist-by-m comparison of localization
    matrix elements a single global constant.
    """
    return (pair_character(d_prime, d, n).shift_x(m)
            - pair_character(d_prime, d.shift(m), n))


def clear_caches():
    """Reset memoized tangent data (used by fault-injection tests)."""
    _tangent_weights_cached.cache_clear()

"""Equivariant integrals as exact sums over fixed points.

Every integral in the package reduces, by the fixed-point formula, to a sum
over tableaux of products of linear forms in (a_1, ..., a_n, x) evaluated at
an exact rational parameter point.  Products are evaluated factor by factor;
nothing is ever expanded into polynomials.  A vanishing tangent-weight value
makes the localization denominator collapse, which is reported as
NonGenericParameter so the caller can resample the point.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import TorusWeight, pair_character, tangent_weights
from .errors import NonGenericParameter
from .roots import check_zero_sum
from .series import check_degree_vector
from .tableaux import Tableau, enumerate_fixed_points


@dataclass(frozen=True)
class ParameterPoint:
    """Exact evaluation point: zero-sum torus parameters a, loop weight x != 0,
    Chern parameter m.  In the default gauge x = 1 the a_i play a_i/x."""

    a: tuple[Fraction, ...]
    x: Fraction = field(default=Fraction(1))
    m: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        object.__setattr__(self, "a", check_zero_sum(self.a))
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "m", Fraction(self.m))
        if self.x == 0:
            raise ValueError("x must be nonzero")

    @property
    def n(self) -> int:
        return len(self.a)

    def a_over_x(self) -> tuple[Fraction, ...]:
        return tuple(ai / self.x for ai in self.a)

    def scaled(self, t) -> "ParameterPoint":
        """Scale (a, x) -> (t a, t x), keeping m; localization values of total
        homogeneity degree 0 are invariant under this."""
        t = Fraction(t)
        if t == 0:
            raise ValueError("scale factor must be nonzero")
        return ParameterPoint(tuple(t * ai for ai in self.a), t * self.x, self.m)

    def with_m(self, m) -> "ParameterPoint":
        return ParameterPoint(self.a, self.x, Fraction(m))


def evaluate_weight(w: TorusWeight, pt: ParameterPoint) -> Fraction:
    """Value sum c_i a_i + c_x x of a torus weight at the point."""
    total = Fraction(w.x_coeff) * pt.x
    for c, a in zip(w.a_coeffs, pt.a):
        if c:
            total += c * a
    return total


def chern_ratio(d: Tableau, pt: ParameterPoint) -> Fraction:
    """prod over tangent weights w at d of (w + m x) / w."""
    mx = pt.m * pt.x
    result = Fraction(1)
    for w in tangent_weights(d, pt.n):
        value = evaluate_weight(w, pt)
        if value == 0:
            raise NonGenericParameter(f"tangent weight {w} vanishes at {pt}")
        result *= (value + mx) / value
    return result


def chern_series_coefficient(n: int, gamma, pt: ParameterPoint) -> Fraction:
    """Coefficient at gamma of the generating series of Chern-polynomial
    integrals: sum over fixed points of degree gamma of chern_ratio."""
    gamma = check_degree_vector(gamma, n - 1)
    total = Fraction(0)
    for d in enumerate_fixed_points(n, gamma):
        total += chern_ratio(d, pt)
    return total


def volume_coefficient(n: int, gamma, pt: ParameterPoint) -> Fraction:
    """Coefficient at gamma of the equivariant-volume series: sum over fixed
    points of prod 1/w.  This is the termwise m -> infinity limit of the Chern
    series after dividing by m^(dim)."""
    gamma = check_degree_vector(gamma, n - 1)
    total = Fraction(0)
    for d in enumerate_fixed_points(n, gamma):
        term = Fraction(1)
        for w in tangent_weights(d, n):
            value = evaluate_weight(w, pt)
            if value == 0:
                raise NonGenericParameter(f"tangent weight {w} vanishes at {pt}")
            term /= value
        total += term
    return total


def chern_matrix_element(d_prime: Tableau, d: Tableau, pt: ParameterPoint) -> Fraction:
    """Matrix element between fixed-point classes of the operator that caps
    with the Chern polynomial of the pair bundle:

        prod_{w in pair bundle over (d', d)} (w + m x) / prod_{w tangent at d'} w

    Multiplicity-k weights contribute k-fold.  On the diagonal this reduces to
    chern_ratio.
    """
    n = pt.n
    mx = pt.m * pt.x
    numerator = Fraction(1)
    for w in pair_character(d_prime, d, n).weights():
        numerator *= evaluate_weight(w, pt) + mx
    denominator = Fraction(1)
    for w in tangent_weights(d_prime, n):
        value = evaluate_weight(w, pt)
        if value == 0:
            raise NonGenericParameter(f"tangent weight {w} vanishes at {pt}")
        denominator *= value
    return numerator / denominator

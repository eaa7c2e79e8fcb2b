"""Exceptions shared across the engine.

Everything here signals a *recoverable* condition of the input data, with one
exception: InternalInconsistency means a formula was transcribed wrongly and
should never fire on a correct build.
"""


class NonGenericParameter(Exception):
    """A localization denominator vanished at the chosen parameter point.

    The caller is expected to resample the point; the locus of bad points is a
    finite union of hyperplanes.
    """


class ResonantParameter(Exception):
    """The eigenfunction recursion hit (lam, lam) = s at lam != lam0.

    Generic highest weights never resonate; resampling fixes it.
    """


class InternalInconsistency(Exception):
    """A structural invariant failed (negative multiplicity, zero tangent weight).

    Indicates a bug in a character formula, not bad input.
    """

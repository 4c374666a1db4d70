"""Realize algebraic series as diagonals of explicit rational functions.

For Q with Q(0,0) = 0 and Q_Y(0,0) != 0 there is a unique power series root
phi with phi(0) = 0, and phi is the diagonal of

    Y^2 * Q_Y(XY, Y) / Q(XY, Y).

Both substituted polynomials are divisible by Y^v (v = Y-adic valuation of
Q(XY, Y), in fact v = 1 under the hypotheses); cancelling Y^v leaves a
denominator with nonzero constant term so the series expansion exists.  The
representation is normalized so den(0,0) = 1, which for fixed-point inputs
Q = P - Y reproduces the reduced form num = Y(1 - P'_Y(XY,Y)),
den = 1 - P(XY,Y)/Y.
"""

from dataclasses import dataclass

from .algebra.polys import BiPoly, derivative_y, substitute_xy
from .algebra.series import diagonal_series, series_expand_ratio
from .errors import HypothesisViolated


@dataclass(frozen=True)
class DiagonalRep:
    """num/den whose diagonal is the tracked series; den(0,0) != 0."""

    num: BiPoly
    den: BiPoly
    note: str = ""

    def __post_init__(self):
        if not self.den.terms.get((0, 0)):
            raise HypothesisViolated("denominator vanishes at the origin")


def furstenberg_rep(Q):
    """DiagonalRep of the power-series root phi of Q with phi(0) = 0."""
    bad = []
    if Q.terms.get((0, 0)):
        bad.append("Q(0,0) != 0")
    if not Q.terms.get((0, 1)):
        bad.append("Q_Y(0,0) == 0")
    if bad:
        raise HypothesisViolated(" and ".join(bad))
    field = Q.field
    den_full = substitute_xy(Q)
    num_full = substitute_xy(derivative_y(Q)).mul_monomial(0, 2)
    v = min(j for _, j in den_full.terms)
    num = BiPoly(field, {(i, j - v): c for (i, j), c in num_full.terms.items()})
    den = BiPoly(field, {(i, j - v): c for (i, j), c in den_full.terms.items()})
    scale = field.inv(den.terms[(0, 0)])
    if scale != field.one:
        num, den = num.scale(scale), den.scale(scale)
    return DiagonalRep(num, den, note=f"furstenberg({Q.to_text()})")


def diagonal_coeffs(rep, order):
    """c_0..c_order of the diagonal of rep.num/rep.den."""
    expansion = series_expand_ratio(rep.num, rep.den, 2 * order)
    return diagonal_series(expansion, order)

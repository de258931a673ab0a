"""Implicit bi-infinite matrices built from a pair of Laurent series.

R(alpha, omega) is the matrix whose column j holds the coefficients of
alpha * omega^j.  Special cases: toeplitz(alpha) multiplies by alpha
(omega = x), lagrange(omega) composes with omega (alpha = 1), and j_matrix()
is the exponent-reversal involution (alpha = 1, omega = 1/x).  Nothing is
stored densely; entries and columns are computed on demand, and finite views
live in the window module.
"""

from __future__ import annotations

import enum

from .errors import (
    NotInvertibleError,
    SideMismatchError,
    UndefinedProductError,
    ZeroSeriesError,
)
from .series import (
    LaurentSeries,
    Side,
    _above_order,
    _below_order,
    compose,
    compositional_inverse,
    mul,
    power,
    recip,
    substitute_reciprocal,
)


class EchelonClass(enum.Enum):
    """Echelon shape of a column family: lower/upper, leading index rising
    with the column (+) or falling (-)."""

    L_PLUS = "L+"
    L_MINUS = "L-"
    U_PLUS = "U+"
    U_MINUS = "U-"

    def __str__(self) -> str:
        return self.value


_CLASS_ORDER = (
    EchelonClass.L_PLUS,
    EchelonClass.L_MINUS,
    EchelonClass.U_PLUS,
    EchelonClass.U_MINUS,
)


def format_class_set(classes) -> str:
    """Fixed-order comma listing, 'none' when empty."""
    names = [c.value for c in _CLASS_ORDER if c in classes]
    if not names:
        return "none"
    return ", ".join(names)


class RiordanMatrix:
    """Matrix pair (alpha, omega); immutable.

    `side` is the expansion convention used when a column needs a one-sided
    series (negative powers of a finite-support omega); it is inferred from
    any inexact component and defaults to bounded-below for finite pairs.
    """

    __slots__ = ("alpha", "omega", "side", "precision")

    def __init__(self, alpha: LaurentSeries, omega: LaurentSeries,
                 side: Side | None = None, precision: int | None = None):
        if omega.is_zero():
            raise ZeroSeriesError("a matrix needs a nonzero column generator")
        sides = {s.side for s in (alpha, omega) if s.side is not Side.FINITE}
        if len(sides) == 2:
            raise SideMismatchError(
                "alpha and omega must live on a common side"
            )
        inferred = sides.pop() if sides else Side.FINITE
        if side is None:
            side = inferred
        elif inferred is not Side.FINITE and side is not inferred:
            raise SideMismatchError(
                f"{inferred.value} components cannot form a {side.value} matrix"
            )
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("RiordanMatrix is immutable")

    @property
    def work_side(self) -> Side:
        return Side.BELOW if self.side is Side.FINITE else self.side

    def column(self, j: int) -> LaurentSeries:
        """The series alpha * omega^j whose coefficients fill column j."""
        return mul(self.alpha, power(self.omega, j, self.work_side, self.precision))

    def entry(self, i: int, j: int):
        return self.column(j)[i]

    def __eq__(self, other):
        if not isinstance(other, RiordanMatrix):
            return NotImplemented
        return (self.alpha == other.alpha and self.omega == other.omega
                and self.side is other.side)

    def __hash__(self):
        return hash((self.alpha, self.omega, self.side))

    def __repr__(self):
        return (f"<RiordanMatrix alpha={self.alpha.to_text()!r} "
                f"omega={self.omega.to_text()!r} {self.side.value}>")


def riordan(alpha: LaurentSeries, omega: LaurentSeries,
            side: Side | None = None,
            precision: int | None = None) -> RiordanMatrix:
    return RiordanMatrix(alpha, omega, side, precision)


def toeplitz(alpha: LaurentSeries, side: Side | None = None,
             precision: int | None = None) -> RiordanMatrix:
    """Multiplication by alpha: entry (i, j) is the coefficient alpha_{i-j}."""
    return RiordanMatrix(alpha, LaurentSeries.from_terms({1: 1}), side, precision)


def lagrange(omega: LaurentSeries, side: Side | None = None,
             precision: int | None = None) -> RiordanMatrix:
    """Composition with omega: column j holds the coefficients of omega^j."""
    return RiordanMatrix(LaurentSeries.one(), omega, side, precision)


def identity() -> RiordanMatrix:
    return toeplitz(LaurentSeries.one())


def j_matrix() -> RiordanMatrix:
    """Anti-diagonal of ones: entry (i, j) = 1 iff i + j = 0."""
    return lagrange(LaurentSeries.from_terms({-1: 1}))


def classify(m: RiordanMatrix) -> frozenset:
    """Echelon classes of the matrix, read off the column generator.

    Membership follows omega's side and order: bounded below with positive
    order gives L+, bounded below with negative order L-, and the two upper
    classes mirror those for bounded-above omega.  A finite-support omega is
    viewable on both sides, so its class set can have two elements; order 0
    on a side contributes nothing.
    """
    classes = set()
    bo = _below_order(m.omega)
    if bo is not None:
        if bo >= 1:
            classes.add(EchelonClass.L_PLUS)
        elif bo <= -1:
            classes.add(EchelonClass.L_MINUS)
    ao = _above_order(m.omega)
    if ao is not None:
        if ao >= 1:
            classes.add(EchelonClass.U_PLUS)
        elif ao <= -1:
            classes.add(EchelonClass.U_MINUS)
    return frozenset(classes)


def apply(m: RiordanMatrix, chi: LaurentSeries) -> LaurentSeries:
    """Matrix-vector product: the series alpha * (chi o omega).

    chi plays the role of a coefficient column vector; the result collects
    sum_j entry(i, j) * chi_j for every row i, which the composition rules
    evaluate without touching individual entries.
    """
    return mul(m.alpha, compose(chi, m.omega, m.precision, m.work_side))


# Defined class products and their results; the remaining eight pairs have no
# certified finite summation ranges and are rejected.  The tuple fixes the
# tie-break order when finite-support components make several cells eligible.
_TABLE = {
    (EchelonClass.L_PLUS, EchelonClass.L_PLUS): EchelonClass.L_PLUS,
    (EchelonClass.L_PLUS, EchelonClass.L_MINUS): EchelonClass.L_MINUS,
    (EchelonClass.L_MINUS, EchelonClass.U_PLUS): EchelonClass.L_MINUS,
    (EchelonClass.L_MINUS, EchelonClass.U_MINUS): EchelonClass.L_PLUS,
    (EchelonClass.U_PLUS, EchelonClass.U_PLUS): EchelonClass.U_PLUS,
    (EchelonClass.U_PLUS, EchelonClass.U_MINUS): EchelonClass.U_MINUS,
    (EchelonClass.U_MINUS, EchelonClass.L_PLUS): EchelonClass.U_MINUS,
    (EchelonClass.U_MINUS, EchelonClass.L_MINUS): EchelonClass.U_PLUS,
}

_CELL_ORDER = (
    (EchelonClass.L_PLUS, EchelonClass.L_PLUS),
    (EchelonClass.L_PLUS, EchelonClass.L_MINUS),
    (EchelonClass.L_MINUS, EchelonClass.U_PLUS),
    (EchelonClass.L_MINUS, EchelonClass.U_MINUS),
    (EchelonClass.U_PLUS, EchelonClass.U_PLUS),
    (EchelonClass.U_PLUS, EchelonClass.U_MINUS),
    (EchelonClass.U_MINUS, EchelonClass.L_PLUS),
    (EchelonClass.U_MINUS, EchelonClass.L_MINUS),
)

_SIDE_OF_CLASS = {
    EchelonClass.L_PLUS: Side.BELOW,
    EchelonClass.L_MINUS: Side.BELOW,
    EchelonClass.U_PLUS: Side.ABOVE,
    EchelonClass.U_MINUS: Side.ABOVE,
}


def product_cell(m: RiordanMatrix, n: RiordanMatrix):
    """First defined (class of m, class of n) cell in tie-break order, or None."""
    cm = classify(m)
    cn = classify(n)
    for cell in _CELL_ORDER:
        if cell[0] in cm and cell[1] in cn:
            return cell
    return None


def matmul(m: RiordanMatrix, n: RiordanMatrix) -> RiordanMatrix:
    """Product matrix R(alpha*(beta o omega), chi o omega) for m = R(alpha,
    omega) and n = R(beta, chi), defined only for compatible echelon classes."""
    cell = product_cell(m, n)
    if cell is None:
        raise UndefinedProductError(
            "product not defined for echelon classes "
            f"{format_class_set(classify(m))} x {format_class_set(classify(n))}"
        )
    prec = m.precision if m.precision is not None else n.precision
    side_m = _SIDE_OF_CLASS[cell[0]]
    result_side = _SIDE_OF_CLASS[_TABLE[cell]]
    new_omega = compose(n.omega, m.omega, prec, side_m)
    new_alpha = mul(m.alpha, compose(n.alpha, m.omega, prec, side_m))
    return RiordanMatrix(new_alpha, new_omega, result_side, prec)


def inverse(m: RiordanMatrix) -> RiordanMatrix:
    """Group inverse R(1/(alpha o winv), winv) with winv the compositional
    inverse of omega; requires alpha != 0 and omega of order +1 or -1."""
    if m.alpha.is_zero():
        raise NotInvertibleError("alpha is zero, so every row is annihilated")
    winv = compositional_inverse(m.omega, m.precision)
    composed = compose(m.alpha, winv, m.precision,
                       winv.side if winv.side is not Side.FINITE else m.work_side)
    new_alpha = recip(composed, None, m.precision)
    return RiordanMatrix(new_alpha, winv, precision=m.precision)


def j_conjugate(m: RiordanMatrix, side: str = "both") -> RiordanMatrix:
    """Reflect across the 0-row ('left'), the 0-column ('right'), or both.

    Left reflection substitutes 1/x into both components; right reflection
    replaces omega by its reciprocal; 'both' is the conjugation J m J and is
    an involution.
    """
    if side not in ("left", "right", "both"):
        raise ValueError("side must be 'left', 'right' or 'both'")
    alpha, omega = m.alpha, m.omega
    if side in ("left", "both"):
        alpha = substitute_reciprocal(alpha)
        omega = substitute_reciprocal(omega)
    if side in ("right", "both"):
        omega = recip(omega, None, m.precision)
    return RiordanMatrix(alpha, omega, precision=m.precision)

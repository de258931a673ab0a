"""Formal Laurent series with exact coefficients and tracked known windows.

A value is either an exact Laurent polynomial (finite support, every
coefficient known) or a one-sided series: bounded below (finitely many
negative exponents, an element of K((x))) or bounded above (finitely many
positive exponents, an element of K((1/x))).  Inexact values carry a
contiguous window [lo, hi] of known coefficients; for a bounded-below series
every exponent < lo is known zero, so the known region is (-inf, hi], and
mirrored for bounded-above.  Every operation derives the widest output window
it can certify from its inputs and never reports a coefficient it cannot
prove.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .errors import (
    CompositionUndefinedError,
    NotInvertibleError,
    OrderIndeterminateError,
    ParseError,
    PrecisionError,
    SideIndeterminateError,
    SideMismatchError,
    UndefinedProductError,
    ZeroSeriesError,
)

DEFAULT_PRECISION = 16


class Side(enum.Enum):
    BELOW = "below"      # bounded below: element of K((x))
    ABOVE = "above"      # bounded above: element of K((1/x))
    FINITE = "finite"    # finite support: usable on either side

    def flipped(self) -> "Side":
        if self is Side.BELOW:
            return Side.ABOVE
        if self is Side.ABOVE:
            return Side.BELOW
        return self


class LaurentSeries:
    """Immutable series value; construct via from_terms/truncated/parse."""

    __slots__ = ("side", "coeffs", "lo", "hi", "exact")

    def __init__(self, side: Side, coeffs: dict, lo: int, hi: int, exact: bool):
        coeffs = {e: (Fraction(c) if isinstance(c, int) else c)
                  for e, c in coeffs.items() if c}
        if exact:
            side = Side.FINITE
            if coeffs:
                lo, hi = min(coeffs), max(coeffs)
            else:
                lo, hi = 0, -1
        else:
            if side not in (Side.BELOW, Side.ABOVE):
                raise ValueError("inexact series must be bounded below or above")
            if coeffs:
                if min(coeffs) < lo or max(coeffs) > hi:
                    raise ValueError("coefficient outside known window")
                # tighten the window against known-zero leading coefficients
                if side is Side.BELOW:
                    lo = min(coeffs)
                else:
                    hi = max(coeffs)
            else:
                if side is Side.BELOW:
                    lo = hi + 1
                else:
                    hi = lo - 1
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_terms(cls, terms) -> "LaurentSeries":
        """Exact Laurent polynomial from {exponent: coefficient} or pairs."""
        if not isinstance(terms, dict):
            terms = dict(terms)
        return cls(Side.FINITE, dict(terms), 0, -1, True)

    @classmethod
    def truncated(cls, terms, side: Side, lo: int, hi: int) -> "LaurentSeries":
        """Inexact series known exactly on [lo, hi]."""
        if not isinstance(terms, dict):
            terms = dict(terms)
        return cls(side, dict(terms), lo, hi, False)

    @classmethod
    def zero(cls) -> "LaurentSeries":
        return cls.from_terms({})

    @classmethod
    def one(cls) -> "LaurentSeries":
        return cls.from_terms({0: Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.exact and not self.coeffs

    def support(self) -> list:
        return sorted(self.coeffs)

    def known(self, e: int) -> bool:
        """Is the coefficient of x^e determined by this value?"""
        if self.exact:
            return True
        if self.side is Side.BELOW:
            return e <= self.hi
        return e >= self.lo

    def __getitem__(self, e: int):
        if not self.known(e):
            raise PrecisionError(
                f"coefficient of x^{e} lies outside the known window "
                f"[{self.lo}, {self.hi}]"
            )
        return self.coeffs.get(e, Fraction(0))

    def order(self, side: Side | None = None):
        """Least (below) or greatest (above) exponent with nonzero coefficient.

        Returns None for the exact zero series.  For finite-support values the
        convention defaults to bounded-below when no side is given.
        """
        if self.is_zero():
            return None
        if side is None:
            side = Side.BELOW if self.side is Side.FINITE else self.side
        if side is Side.FINITE:
            raise ValueError("order needs a one-sided convention")
        if self.side not in (side, Side.FINITE):
            raise SideMismatchError(f"{self.side.value} series has no {side.value} order")
        if not self.coeffs:
            raise OrderIndeterminateError(
                "no nonzero coefficient inside the known window"
            )
        return self.lo if side is Side.BELOW else self.hi

    def _support_lo(self) -> int:
        # certified lower bound for the support; valid even with empty coeffs
        return self.lo

    def _support_hi(self) -> int:
        return self.hi

    def count_from_order(self) -> int | None:
        """Number of known coefficients counted from the order; None if exact."""
        if self.exact:
            return None
        return self.hi - self.lo + 1

    # -- structural equality -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.side is other.side
            and self.exact == other.exact
            and self.lo == other.lo
            and self.hi == other.hi
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.side, self.exact, self.lo, self.hi,
                     tuple(sorted(self.coeffs.items()))))

    # -- operators ----------------------------------------------------------

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, neg(other))

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        return mul(self, other)

    def __pow__(self, j):
        return power(self, j)

    # -- rendering ----------------------------------------------------------

    def to_text(self) -> str:
        return format_series(self)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        tag = "exact" if self.exact else f"[{self.lo},{self.hi}]"
        return f"<LaurentSeries {self.side.value} {tag} {self.to_text()}>"

    def to_json_dict(self) -> dict:
        return {
            "side": self.side.value,
            "exact": self.exact,
            "lo": self.lo,
            "hi": self.hi,
            "terms": [[e, str(self.coeffs[e])] for e in sorted(self.coeffs)],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "LaurentSeries":
        terms = {int(e): Fraction(c) for e, c in d["terms"]}
        if d["exact"]:
            return cls.from_terms(terms)
        return cls.truncated(terms, Side(d["side"]), int(d["lo"]), int(d["hi"]))


def monomial(coeff, exp: int = 0) -> LaurentSeries:
    return LaurentSeries.from_terms({exp: coeff})


def _one_like(a: LaurentSeries) -> LaurentSeries:
    # multiplicative identity with coefficients from a's field
    for c in a.coeffs.values():
        return LaurentSeries.from_terms({0: c / c})
    return LaurentSeries.one()


# -- addition ----------------------------------------------------------------


def add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    if a.exact and b.exact:
        terms = dict(a.coeffs)
        for e, c in b.coeffs.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentSeries.from_terms(terms)
    sides = {s.side for s in (a, b) if not s.exact}
    if len(sides) == 2:
        raise SideIndeterminateError(
            "sum of a bounded-below and a bounded-above series cannot be "
            "certified bounded on either side"
        )
    side = sides.pop()
    if side is Side.BELOW:
        hi = min(s.hi for s in (a, b) if not s.exact)
        lo = min(s.lo for s in (a, b) if not (s.exact and not s.coeffs))
        terms: dict = {}
        for s in (a, b):
            for e, c in s.coeffs.items():
                if e <= hi:
                    terms[e] = terms.get(e, 0) + c
        return LaurentSeries.truncated(terms, Side.BELOW, lo, hi)
    lo = max(s.lo for s in (a, b) if not s.exact)
    hi = max(s.hi for s in (a, b) if not (s.exact and not s.coeffs))
    terms = {}
    for s in (a, b):
        for e, c in s.coeffs.items():
            if e >= lo:
                terms[e] = terms.get(e, 0) + c
    return LaurentSeries.truncated(terms, Side.ABOVE, lo, hi)


def neg(a: LaurentSeries) -> LaurentSeries:
    terms = {e: -c for e, c in a.coeffs.items()}
    if a.exact:
        return LaurentSeries.from_terms(terms)
    return LaurentSeries.truncated(terms, a.side, a.lo, a.hi)


# -- multiplication -----------------------------------------------------------


def mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    if a.is_zero() or b.is_zero():
        return LaurentSeries.zero()
    if a.exact and b.exact:
        return LaurentSeries.from_terms(_convolve(a.coeffs, b.coeffs))
    sides = {s.side for s in (a, b) if not s.exact}
    if len(sides) == 2:
        raise UndefinedProductError(
            "product of a bounded-below and a bounded-above series is "
            "undefined unless one has finite support"
        )
    side = sides.pop()
    if side is Side.BELOW:
        # known through min over inexact factors of (hi + other's support bound)
        caps = []
        if not a.exact:
            caps.append(a.hi + b._support_lo())
        if not b.exact:
            caps.append(b.hi + a._support_lo())
        hi = min(caps)
        lo = a._support_lo() + b._support_lo()
        terms = _convolve(a.coeffs, b.coeffs, hi=hi)
        return LaurentSeries.truncated(terms, Side.BELOW, lo, hi)
    caps = []
    if not a.exact:
        caps.append(a.lo + b._support_hi())
    if not b.exact:
        caps.append(b.lo + a._support_hi())
    lo = max(caps)
    hi = a._support_hi() + b._support_hi()
    terms = _convolve(a.coeffs, b.coeffs, lo=lo)
    return LaurentSeries.truncated(terms, Side.ABOVE, lo, hi)


def _convolve(ca: dict, cb: dict, lo: int | None = None, hi: int | None = None) -> dict:
    out: dict = {}
    for i, ci in ca.items():
        for j, cj in cb.items():
            k = i + j
            if hi is not None and k > hi:
                continue
            if lo is not None and k < lo:
                continue
            out[k] = out.get(k, 0) + ci * cj
    return out


# -- reciprocal and powers -----------------------------------------------------


def recip(a: LaurentSeries, side: Side | None = None,
          precision: int | None = None) -> LaurentSeries:
    """Multiplicative inverse, expanded on the requested side.

    An inexact input of order m with c known coefficients yields order -m with
    the same count c; an exact non-monomial input is expanded to `precision`
    coefficients (monomials invert exactly).
    """
    if a.is_zero():
        raise ZeroSeriesError("reciprocal of the zero series")
    if not a.exact and not a.coeffs:
        raise OrderIndeterminateError("reciprocal needs a computable order")
    if a.exact and len(a.coeffs) == 1:
        (e, c), = a.coeffs.items()
        return monomial(1 / c, -e)
    if side is None:
        side = Side.BELOW if a.side is Side.FINITE else a.side
    if a.side not in (side, Side.FINITE):
        raise SideMismatchError(
            f"cannot expand the reciprocal of a {a.side.value} series {side.value}"
        )
    if side is Side.ABOVE:
        return substitute_reciprocal(
            recip(substitute_reciprocal(a), Side.BELOW, precision)
        )
    m = a.order(Side.BELOW)
    count = a.count_from_order()
    if count is None:
        count = precision if precision is not None else DEFAULT_PRECISION
    u = [a.coeffs.get(m + i, 0) for i in range(count)]
    v = [1 / u[0]]
    for k in range(1, count):
        s = 0
        for i in range(1, k + 1):
            if u[i]:
                s = s + u[i] * v[k - i]
        v.append(-(s / u[0]))
    terms = {-m + i: v[i] for i in range(count)}
    return LaurentSeries.truncated(terms, Side.BELOW, -m, -m + count - 1)


def power(a: LaurentSeries, j: int, side: Side | None = None,
          precision: int | None = None) -> LaurentSeries:
    """a ** j for integer j; negative j goes through recip on the given side."""
    if j == 0:
        return _one_like(a)
    base = a if j > 0 else recip(a, side, precision)
    n = abs(j)
    result = None
    sq = base
    while n:
        if n & 1:
            result = sq if result is None else mul(result, sq)
        n >>= 1
        if n:
            sq = mul(sq, sq)
    return result


def substitute_reciprocal(a: LaurentSeries) -> LaurentSeries:
    """Exponent negation x -> 1/x; flips the side, preserves exactness."""
    terms = {-e: c for e, c in a.coeffs.items()}
    if a.exact:
        return LaurentSeries.from_terms(terms)
    return LaurentSeries.truncated(terms, a.side.flipped(), -a.hi, -a.lo)


# -- composition ---------------------------------------------------------------


def _below_order(omega: LaurentSeries) -> int | None:
    """Order of omega as a bounded-below series, or None if not viewable so."""
    if omega.exact:
        return omega.lo
    if omega.side is not Side.BELOW:
        return None
    if not omega.coeffs:
        raise OrderIndeterminateError("inner series has indeterminate order")
    return omega.lo


def _above_order(omega: LaurentSeries) -> int | None:
    if omega.exact:
        return omega.hi
    if omega.side is not Side.ABOVE:
        return None
    if not omega.coeffs:
        raise OrderIndeterminateError("inner series has indeterminate order")
    return omega.hi


def compose(chi: LaurentSeries, omega: LaurentSeries,
            precision: int | None = None, side: Side | None = None) -> LaurentSeries:
    """Substitution chi(omega) = sum over k of chi_k * omega^k.

    Defined when chi has finite support (any nonzero omega), or per side/order:
    bounded-below chi needs omega bounded below of order >= 1 or bounded above
    of order <= -1; bounded-above chi mirrors.  `side` disambiguates the
    expansion of negative powers when omega has finite support.
    """
    if omega.is_zero():
        raise CompositionUndefinedError("inner series is zero")
    if chi.exact:
        if chi.is_zero():
            return LaurentSeries.zero()
        work = omega.side if omega.side is not Side.FINITE else (side or Side.BELOW)
        result = None
        for e in sorted(chi.coeffs):
            term = mul(monomial(chi.coeffs[e]), power(omega, e, work, precision))
            result = term if result is None else add(result, term)
        return result
    if chi.side is Side.BELOW:
        bo = _below_order(omega)
        if bo is not None and bo >= 1:
            return _compose_kernel(chi, omega, precision)
        ao = _above_order(omega)
        if ao is not None and ao <= -1:
            return substitute_reciprocal(
                _compose_kernel(chi, substitute_reciprocal(omega), precision)
            )
    else:
        bo = _below_order(omega)
        if bo is not None and bo <= -1:
            return _compose_kernel(
                substitute_reciprocal(chi), recip(omega, Side.BELOW, precision),
                precision,
            )
        ao = _above_order(omega)
        if ao is not None and ao >= 1:
            inner = substitute_reciprocal(recip(omega, Side.ABOVE, precision))
            return substitute_reciprocal(
                _compose_kernel(substitute_reciprocal(chi), inner, precision)
            )
    raise CompositionUndefinedError(
        "composition undefined: infinite outer support needs an inner series "
        "of nonzero order on a matching side (bounded-below outer with "
        "bounded-below inner of order >= 1 or bounded-above inner of order "
        "<= -1; bounded-above outer mirrored)"
    )


def _compose_kernel(chi: LaurentSeries, omega: LaurentSeries,
                    precision: int | None) -> LaurentSeries:
    # chi inexact bounded below; omega viewable below with order w >= 1.
    # Accumulating with add() intersects the terms' known regions, so the
    # binding window (lowest power of omega, or omega itself) emerges on its
    # own; chi's truncation is applied as an explicit cap afterwards.
    w = omega.lo
    m = chi._support_lo()
    chi_cap = (chi.hi + 1) * w - 1
    acc = None
    cur = power(omega, m, Side.BELOW, precision)
    for k in range(m, chi.hi + 1):
        c = chi.coeffs.get(k)
        if c:
            term = mul(monomial(c), cur)
            acc = term if acc is None else add(acc, term)
        if k < chi.hi:
            cur = mul(cur, omega)
    if acc is None:
        return LaurentSeries.truncated({}, Side.BELOW, m * w, chi_cap)
    cap = chi_cap if acc.exact else min(chi_cap, acc.hi)
    terms = {e: c for e, c in acc.coeffs.items() if e <= cap}
    return LaurentSeries.truncated(terms, Side.BELOW, m * w, cap)


# -- compositional inverse ------------------------------------------------------


def compositional_inverse(omega: LaurentSeries,
                          precision: int | None = None) -> LaurentSeries:
    """The series chi with chi(omega) = omega(chi) = x; needs order +1 or -1.

    Order +1 keeps the side; order -1 lands on the opposite side (the unique
    inverse of x^-1 + 1 is x^-1 + x^-2 + ..., which is bounded above).
    """
    if omega.is_zero():
        raise ZeroSeriesError("compositional inverse of the zero series")
    if not omega.exact and not omega.coeffs:
        raise OrderIndeterminateError("compositional inverse needs a computable order")
    bo = _below_order(omega)
    ao = _above_order(omega)
    if bo == 1:
        return _reversion(omega, precision)
    if bo == -1:
        return substitute_reciprocal(
            _reversion(recip(omega, Side.BELOW, precision), precision)
        )
    if ao == 1:
        tau = _reversion(
            recip(substitute_reciprocal(omega), Side.BELOW, precision), precision
        )
        return recip(substitute_reciprocal(tau), Side.ABOVE, precision)
    if ao == -1:
        return recip(
            _reversion(substitute_reciprocal(omega), precision), Side.BELOW, precision
        )
    raise NotInvertibleError(
        "compositional inverse requires order +1 or -1 on the series' side"
    )


def _reversion(omega: LaurentSeries, precision: int | None) -> LaurentSeries:
    # omega viewable below with order exactly 1; coefficientwise back-substitution
    if omega.exact and len(omega.coeffs) == 1:
        return monomial(1 / omega.coeffs[1], 1)
    if omega.exact:
        cap = precision if precision is not None else DEFAULT_PRECISION
    else:
        cap = omega.hi
    w = [omega.coeffs.get(e, 0) for e in range(cap + 1)]
    w1 = w[1]
    # coefficient lists of omega^k truncated at exponent cap, k = 1..cap
    pows = [None, list(w)]
    for k in range(2, cap + 1):
        prev = pows[-1]
        nxt = [0] * (cap + 1)
        for i in range(k - 1, cap):
            pi = prev[i]
            if not pi:
                continue
            for j in range(1, cap + 1 - i):
                if w[j]:
                    nxt[i + j] = nxt[i + j] + pi * w[j]
        pows.append(nxt)
    inv = {1: 1 / w1}
    w1n = w1
    for n in range(2, cap + 1):
        w1n = w1n * w1
        s = 0
        for k in range(1, n):
            c = inv.get(k)
            if c and pows[k][n]:
                s = s + c * pows[k][n]
        inv[n] = -(s / w1n)
    return LaurentSeries.truncated(inv, Side.BELOW, 1, cap)


# -- comparison up to precision ---------------------------------------------------


def eq_to_precision(a: LaurentSeries, b: LaurentSeries) -> bool:
    """Coefficients agree on the intersection of the known regions."""
    if a.exact and b.exact:
        return a.coeffs == b.coeffs
    exps = set(a.coeffs) | set(b.coeffs)
    for e in exps:
        if a.known(e) and b.known(e):
            if a.coeffs.get(e, 0) != b.coeffs.get(e, 0):
                return False
    return True


# -- text form ---------------------------------------------------------------------


def _format_term(c, e: int) -> str:
    if e == 0:
        return str(c)
    base = "x" if e == 1 else f"x^{e}"
    if c == 1:
        return base
    if c == -1:
        return f"-{base}"
    return f"{c}{base}"


def _marker(e: int) -> str:
    return "O(x)" if e == 1 else f"O(x^{e})"


def format_series(a: LaurentSeries) -> str:
    """Canonical text: ascending exponents (below/finite), descending (above),
    with a trailing O(...) marker at the first unknown exponent when inexact."""
    exps = sorted(a.coeffs, reverse=(a.side is Side.ABOVE))
    pieces = []
    for e in exps:
        c = a.coeffs[e]
        t = _format_term(c, e)
        if not pieces:
            pieces.append(t)
        elif t.startswith("-"):
            pieces.append("- " + t[1:])
        else:
            pieces.append("+ " + t)
    if not a.exact:
        m = _marker(a.hi + 1 if a.side is Side.BELOW else a.lo - 1)
        pieces.append(("+ " + m) if pieces else m)
    if not pieces:
        return "0"
    return " ".join(pieces)


# -- parsing ------------------------------------------------------------------------


class _Parser:
    """Recursive descent over: expr := term (('+'|'-') term)*;
    term := unary (('*'|'/') unary)*; unary := '-' unary | power;
    power := atom ('^' ['-'] INT)?; atom := INT ['x' ...] | 'x' | '(' expr ')'.
    An integer immediately followed by 'x' is an implicit product (2x^3)."""

    def __init__(self, text: str, side: Side, precision: int):
        self.text = text
        self.pos = 0
        self.side = side
        self.precision = precision

    def parse(self) -> LaurentSeries:
        value = self.expr()
        self.skip_ws()
        if self.pos < len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return value

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> LaurentSeries:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = add(value, rhs) if op == "+" else add(value, neg(rhs))
        return value

    def term(self) -> LaurentSeries:
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.unary()
            if op == "*":
                value = mul(value, rhs)
            else:
                value = mul(value, recip(rhs, self.side, self.precision))
        return value

    def unary(self) -> LaurentSeries:
        if self.peek() == "-":
            self.pos += 1
            return neg(self.unary())
        return self.power()

    def power(self) -> LaurentSeries:
        value = self.atom()
        if self.peek() == "^":
            self.pos += 1
            j = self.signed_int()
            value = power(value, j, self.side, self.precision)
        return value

    def signed_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        self.skip_ws()
        if not (self.pos < len(self.text) and self.text[self.pos].isdigit()):
            raise ParseError("expected integer exponent", self.pos)
        num = self.integer()
        return -num if self.text[start] == "-" else num

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected integer", self.pos)
        return int(self.text[start:self.pos])

    def atom(self) -> LaurentSeries:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return value
        if ch == "x":
            self.pos += 1
            return monomial(Fraction(1), 1)
        if ch.isdigit():
            n = self.integer()
            c = Fraction(n)
            # tight fraction is a coefficient: 3/4, 1/2x^3 (whitespace around
            # '/' leaves it to term() as expansion-triggering division)
            if (self.pos + 1 < len(self.text) and self.text[self.pos] == "/"
                    and self.text[self.pos + 1].isdigit()):
                self.pos += 1
                q = self.integer()
                if q == 0:
                    raise ParseError("zero denominator", self.pos)
                c = Fraction(n, q)
            # implicit product: 2x, 2x^3, 1/2x
            if self.pos < len(self.text) and self.text[self.pos] == "x":
                self.pos += 1
                if self.pos < len(self.text) and self.text[self.pos] == "^":
                    self.pos += 1
                    return monomial(c, self.signed_int())
                return monomial(c, 1)
            return monomial(c)
        raise ParseError(f"unexpected {ch!r}" if ch else "unexpected end of input",
                         self.pos)


def parse(text: str, side: Side = Side.BELOW,
          precision: int = DEFAULT_PRECISION) -> LaurentSeries:
    """Parse an expression into a series; the result is exact unless division
    or a negative power of a non-monomial forced an expansion on `side`."""
    if precision < 1:
        raise ParseError("precision must be at least 1")
    if side is Side.FINITE:
        side = Side.BELOW
    return _Parser(text, side, precision).parse()

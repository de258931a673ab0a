"""Dense finite views of the implicit matrices, plus brute-force oracles.

A MatrixWindow is an exact rectangular block copied out of a bi-infinite
matrix; the oracles recompute products entry by entry from such blocks.  A
product entry is an infinite sum, so the oracles demand a *guard*: an
interval of the inner index outside which every summand is certifiably zero.
Guards are derived from the structure of the factors (side, order and support
bounds of the generating series), never from inspecting finitely many
entries; when no finite guard can be certified the functions refuse rather
than truncate silently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardViolationError
from .field import format_scalar, parse_scalar
from .riordan import RiordanMatrix
from .series import LaurentSeries, Side, _above_order, _below_order


@dataclass(frozen=True)
class MatrixWindow:
    """Rows row_lo.., columns col_lo..; entries[r][c] is exact."""

    row_lo: int
    col_lo: int
    entries: tuple

    @property
    def row_hi(self) -> int:
        return self.row_lo + len(self.entries) - 1

    @property
    def col_hi(self) -> int:
        return self.col_lo + len(self.entries[0]) - 1

    def entry(self, i: int, j: int):
        return self.entries[i - self.row_lo][j - self.col_lo]

    def sub(self, rows, cols) -> "MatrixWindow":
        """Copy of the block over the given absolute index ranges."""
        rlo, rhi = rows
        clo, chi = cols
        if rlo < self.row_lo or rhi > self.row_hi or clo < self.col_lo \
                or chi > self.col_hi:
            raise ValueError("requested sub-block exceeds the window")
        grid = tuple(
            tuple(self.entry(i, j) for j in range(clo, chi + 1))
            for i in range(rlo, rhi + 1)
        )
        return MatrixWindow(rlo, clo, grid)


@dataclass(frozen=True)
class VectorWindow:
    """Entries lo..lo+len-1 of a bi-infinite coefficient vector."""

    lo: int
    values: tuple

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def entry(self, j: int):
        return self.values[j - self.lo]


def _check_range(r, what: str):
    lo, hi = r
    if lo > hi:
        raise ValueError(f"{what} range [{lo}, {hi}] is empty")


def extract(m: RiordanMatrix, rows, cols) -> MatrixWindow:
    """Dense block of m; refuses (PrecisionError) when an entry is unknown."""
    rlo, rhi = rows
    clo, chi = cols
    _check_range(rows, "row")
    _check_range(cols, "column")
    columns = {j: m.column(j) for j in range(clo, chi + 1)}
    grid = tuple(
        tuple(columns[j][i] for j in range(clo, chi + 1))
        for i in range(rlo, rhi + 1)
    )
    return MatrixWindow(rlo, clo, grid)


def vector_from_series(chi: LaurentSeries, lo: int, hi: int) -> VectorWindow:
    _check_range((lo, hi), "vector")
    return VectorWindow(lo, tuple(chi[j] for j in range(lo, hi + 1)))


# -- guard certification -------------------------------------------------------
#
# Entry (i, j) of a product is sum_k m_{ik} n_{kj}.  Column k of m has support
# inside [alpha.lo + k*ord(omega), +inf) when realized bounded below, and
# inside (-inf, alpha.hi + k*ord(omega)] when realized bounded above; solving
# those for k yields one-sided bounds on the inner index per row i.  Column j
# of n bounds k directly the same way.  An entry is certifiable when at least
# one lower and one upper bound exist; monomial/exact components are valid on
# both sides at once (their columns do not depend on the realization).


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def _left_bounds(m: RiordanMatrix, i: int):
    """(lowers, uppers, dead) restricting k so that entry (i, k) of m may be
    nonzero; dead means row i is certified all-zero."""
    lowers: list = []
    uppers: list = []
    if m.alpha.is_zero():
        return lowers, uppers, True
    two_sided = (m.alpha.exact and m.omega.exact
                 and len(m.omega.coeffs) == 1)
    dead = False
    if m.work_side is Side.BELOW or two_sided:
        w = _below_order(m.omega)
        a_lo = m.alpha.lo
        if w > 0:
            uppers.append((i - a_lo) // w)
        elif w < 0:
            lowers.append(_ceil_div(i - a_lo, w))
        elif a_lo > i:
            dead = True
    if m.work_side is Side.ABOVE or two_sided:
        w = _above_order(m.omega)
        a_hi = m.alpha.hi
        if w > 0:
            lowers.append(_ceil_div(i - a_hi, w))
        elif w < 0:
            uppers.append((i - a_hi) // w)
        elif a_hi < i:
            dead = True
    return lowers, uppers, dead


def _right_bounds(n: RiordanMatrix, j: int):
    """(lowers, uppers, dead) restricting k so that entry (k, j) of n may be
    nonzero."""
    lowers: list = []
    uppers: list = []
    if n.alpha.is_zero():
        return lowers, uppers, True
    per_column = (n.alpha.exact and n.omega.exact
                  and (j >= 0 or len(n.omega.coeffs) == 1))
    if n.work_side is Side.BELOW or per_column:
        lowers.append(n.alpha.lo + j * _below_order(n.omega))
    if n.work_side is Side.ABOVE or per_column:
        uppers.append(n.alpha.hi + j * _above_order(n.omega))
    return lowers, uppers, False


def _vector_bounds(chi: LaurentSeries):
    lowers: list = []
    uppers: list = []
    if chi.exact or chi.side is Side.BELOW:
        lowers.append(chi.lo)
    if chi.exact or chi.side is Side.ABOVE:
        uppers.append(chi.hi)
    return lowers, uppers


def _merge(i, j, left, right):
    """Certified inner-index interval for one entry, or None when the entry
    is certified zero.  Raises when no finite interval exists."""
    l1, u1, dead1 = left
    l2, u2, dead2 = right
    if dead1 or dead2:
        return None
    lowers = l1 + l2
    uppers = u1 + u2
    if not lowers or not uppers:
        raise GuardViolationError(
            f"summation for entry ({i}, {j}) cannot be certified finite"
        )
    lo, hi = max(lowers), min(uppers)
    if lo > hi:
        return None
    return lo, hi


def _hull(spans):
    spans = [s for s in spans if s is not None]
    if not spans:
        return 0, -1
    return min(s[0] for s in spans), max(s[1] for s in spans)


def product_guard(m: RiordanMatrix, n: RiordanMatrix, rows, cols):
    """Interval of the inner index covering every certified summand for the
    block rows x cols of m*n; outside it all summands are provably zero."""
    _check_range(rows, "row")
    _check_range(cols, "column")
    lefts = {i: _left_bounds(m, i) for i in range(rows[0], rows[1] + 1)}
    rights = {j: _right_bounds(n, j) for j in range(cols[0], cols[1] + 1)}
    spans = [
        _merge(i, j, lefts[i], rights[j])
        for i in lefts
        for j in rights
    ]
    return _hull(spans)


def apply_guard(m: RiordanMatrix, chi: LaurentSeries, rows):
    """Same certification for the matrix-vector product m * chi."""
    _check_range(rows, "row")
    vec = (*_vector_bounds(chi), False)
    spans = [
        _merge(i, "-", _left_bounds(m, i), vec)
        for i in range(rows[0], rows[1] + 1)
    ]
    return _hull(spans)


# -- brute-force oracles --------------------------------------------------------


def oracle_matmul(a: MatrixWindow, b: MatrixWindow, guard) -> MatrixWindow:
    """Triple-loop product over the guarded inner range.

    The caller certifies (e.g. via product_guard) that summands outside the
    guard vanish; this function only checks that the windows cover it.
    """
    if a.col_lo != b.row_lo or a.col_hi != b.row_hi:
        raise ValueError("inner index ranges of the factors differ")
    g_lo, g_hi = guard
    if g_lo <= g_hi and (g_lo < a.col_lo or g_hi > a.col_hi):
        raise GuardViolationError(
            f"windows cover [{a.col_lo}, {a.col_hi}] but the certified "
            f"summation range is [{g_lo}, {g_hi}]"
        )
    grid = []
    for r, row in enumerate(a.entries):
        i = a.row_lo + r
        out = []
        for j in range(b.col_lo, b.col_hi + 1):
            acc = Fraction(0)
            for k in range(g_lo, g_hi + 1):
                acc += row[k - a.col_lo] * b.entry(k, j)
            out.append(acc)
        grid.append(tuple(out))
    return MatrixWindow(a.row_lo, b.col_lo, tuple(grid))


def oracle_apply(a: MatrixWindow, v: VectorWindow, guard) -> VectorWindow:
    """One-dimensional analogue of oracle_matmul."""
    if a.col_lo != v.lo or a.col_hi != v.hi:
        raise ValueError("inner index ranges of matrix and vector differ")
    g_lo, g_hi = guard
    if g_lo <= g_hi and (g_lo < v.lo or g_hi > v.hi):
        raise GuardViolationError(
            f"windows cover [{v.lo}, {v.hi}] but the certified summation "
            f"range is [{g_lo}, {g_hi}]"
        )
    out = []
    for row in a.entries:
        acc = Fraction(0)
        for k in range(g_lo, g_hi + 1):
            acc += row[k - a.col_lo] * v.entry(k)
        out.append(acc)
    return VectorWindow(a.row_lo, tuple(out))


# -- rendering -------------------------------------------------------------------


def render(w: MatrixWindow, format: str = "text") -> str:
    """Aligned text grid with the (0, 0) entry bracketed, or the JSON object
    {"row_lo": ..., "col_lo": ..., "entries": [["p/q", ...], ...]}."""
    if format == "json":
        return json.dumps({
            "row_lo": w.row_lo,
            "col_lo": w.col_lo,
            "entries": [[format_scalar(v) for v in row] for row in w.entries],
        })
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    cells = [[format_scalar(v) for v in row] for row in w.entries]
    widths = [
        max(len(cells[r][c]) for r in range(len(cells)))
        for c in range(len(cells[0]))
    ]
    lines = []
    for r, row in enumerate(cells):
        pieces = []
        for c, text in enumerate(row):
            core = text.rjust(widths[c])
            if w.row_lo + r == 0 and w.col_lo + c == 0:
                pieces.append(f"[{core}]")
            else:
                pieces.append(f" {core} ")
        lines.append("".join(pieces).rstrip())
    return "\n".join(lines)


def window_from_json(text) -> MatrixWindow:
    data = json.loads(text) if isinstance(text, str) else text
    rows = data["entries"]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("entries must form a non-empty rectangle")
    grid = tuple(tuple(parse_scalar(v) for v in row) for row in rows)
    return MatrixWindow(int(data["row_lo"]), int(data["col_lo"]), grid)

"""Finite windows, guard certification, and the brute-force product oracles."""

from __future__ import annotations

from fractions import Fraction

import pytest

from biriordan.errors import GuardViolationError, PrecisionError
from biriordan.riordan import identity, j_matrix, lagrange, matmul, riordan, toeplitz
from biriordan.series import LaurentSeries, Side, mul, parse
from biriordan.window import (
    MatrixWindow,
    VectorWindow,
    apply_guard,
    extract,
    oracle_apply,
    oracle_matmul,
    product_guard,
    render,
    vector_from_series,
    window_from_json,
)
from conftest import make_rng, random_truncated

_P = 12


# -- window containers -------------------------------------------------------------


def test_window_accessors():
    w = MatrixWindow(-1, 2, ((1, 2), (3, 4), (5, 6)))
    assert (w.row_hi, w.col_hi) == (1, 3)
    assert w.entry(-1, 2) == 1
    assert w.entry(1, 3) == 6
    sub = w.sub((0, 1), (3, 3))
    assert sub.entries == ((4,), (6,))
    with pytest.raises(ValueError):
        w.sub((0, 2), (2, 3))


def test_vector_window_accessors():
    v = VectorWindow(-2, (7, 8, 9))
    assert v.hi == 0
    assert v.entry(-2) == 7 and v.entry(0) == 9


def test_extract_matches_entry():
    m = riordan(parse("1+x"), parse("x/(1-x)", precision=_P), precision=_P)
    w = extract(m, (0, 4), (0, 3))
    for i in range(0, 5):
        for j in range(0, 4):
            assert w.entry(i, j) == m.entry(i, j)


def test_extract_refuses_unknown_entries():
    m = lagrange(parse("x/(1-x)", precision=3), precision=3)
    with pytest.raises(PrecisionError):
        extract(m, (0, 10), (0, 2))


def test_extract_rejects_empty_ranges():
    with pytest.raises(ValueError):
        extract(identity(), (2, 1), (0, 0))


def test_vector_from_series():
    chi = parse("1/(1-x)", precision=6)
    v = vector_from_series(chi, 0, 5)
    assert v.values == tuple(Fraction(1) for _ in range(6))
    with pytest.raises(PrecisionError):
        vector_from_series(chi, 0, 10)


# -- rendering ---------------------------------------------------------------------


def test_render_brackets_origin():
    w = extract(j_matrix(), (-2, 2), (-2, 2))
    lines = render(w).splitlines()
    assert len(lines) == 5
    assert "[1]" in lines[2]
    assert lines[0].endswith("1")
    assert all(not line.endswith(" ") for line in lines)


def test_render_single_cell():
    assert render(extract(identity(), (0, 0), (0, 0))) == "[1]"


def test_render_json_round_trip():
    m = toeplitz(parse("1 - 1/2x"), precision=_P)
    w = extract(m, (0, 3), (0, 3))
    again = window_from_json(render(w, "json"))
    assert again == w


def test_render_rejects_unknown_format():
    w = extract(identity(), (0, 1), (0, 1))
    with pytest.raises(ValueError):
        render(w, "yaml")


def test_window_from_json_validates_shape():
    with pytest.raises(ValueError):
        window_from_json({"row_lo": 0, "col_lo": 0, "entries": [["1"], ["1", "2"]]})
    with pytest.raises(ValueError):
        window_from_json({"row_lo": 0, "col_lo": 0, "entries": []})


# -- guards ------------------------------------------------------------------------


def test_product_guard_toeplitz():
    a = random_truncated(make_rng(1), Side.BELOW, -2, count=_P)
    b = random_truncated(make_rng(2), Side.BELOW, 1, count=_P)
    m, n = toeplitz(a, precision=_P), toeplitz(b, precision=_P)
    guard = product_guard(m, n, (0, 3), (0, 3))
    lo, hi = guard
    assert lo <= hi
    # inner index must reach high enough to cover row 3 against order -2
    assert hi >= 3 + 2


def test_product_guard_refuses_doubly_infinite_sums():
    m = lagrange(parse("x/(1-x)", Side.BELOW, _P), precision=_P)
    n = lagrange(parse("x^2/(x-1)", Side.ABOVE, _P), precision=_P)
    with pytest.raises(GuardViolationError):
        product_guard(m, n, (0, 3), (0, 3))


def test_empty_per_entry_ranges_certify_zero():
    # columns of the x^3-shifted Toeplitz matrix vanish above row k+3, so
    # entries with i < j+3 are certified zero; a block made only of such
    # entries yields the empty-hull guard convention (lo, lo-1)
    m = toeplitz(parse("x^3 * 1/(1-x)", precision=_P), precision=_P)
    n = toeplitz(parse("1+x"), precision=_P)
    assert product_guard(m, n, (0, 2), (0, 2)) == (0, -1)
    # a taller block mixes dead and live entries; the oracle reproduces the
    # zeros of the dead region
    rows, cols = (0, 5), (0, 2)
    guard = product_guard(m, n, rows, cols)
    got = oracle_matmul(extract(m, rows, guard), extract(n, guard, cols), guard)
    direct = extract(toeplitz(mul(parse("x^3 * 1/(1-x)", precision=_P),
                                  parse("1+x")), precision=_P), rows, cols)
    assert got == direct
    assert all(got.entry(i, j) == 0
               for i in range(0, 6) for j in range(0, 3) if i < j + 3)


def test_oracle_matmul_matches_matmul():
    rng = make_rng(3)
    for _ in range(10):
        a = random_truncated(rng, Side.BELOW, rng.randint(-3, 3), count=_P)
        b = random_truncated(rng, Side.BELOW, rng.randint(-3, 3), count=_P)
        m, n = toeplitz(a, precision=_P), toeplitz(b, precision=_P)
        base = a.order() + b.order()
        rows = (base, base + 3)
        cols = (0, 3)
        guard = product_guard(m, n, rows, cols)
        got = oracle_matmul(extract(m, rows, guard), extract(n, guard, cols), guard)
        direct = extract(toeplitz(mul(a, b), precision=_P), rows, cols)
        assert got == direct
        assert extract(matmul(m, n), rows, cols) == direct


def test_oracle_matmul_validates_inner_ranges():
    m = toeplitz(parse("1+x"))
    a = extract(m, (0, 2), (0, 3))
    b = extract(m, (1, 4), (0, 2))
    with pytest.raises(ValueError):
        oracle_matmul(a, b, (0, 3))


def test_oracle_matmul_requires_guard_coverage():
    m = toeplitz(parse("1+x"))
    a = extract(m, (0, 2), (0, 3))
    b = extract(m, (0, 3), (0, 2))
    with pytest.raises(GuardViolationError):
        oracle_matmul(a, b, (-1, 3))


def test_apply_guard_and_oracle():
    m = toeplitz(parse("1-x"), precision=8)
    chi = parse("1/(1-x)", precision=8)
    guard = apply_guard(m, chi, (0, 5))
    v = oracle_apply(extract(m, (0, 5), guard),
                     vector_from_series(chi, *guard), guard)
    assert v.values == (1, 0, 0, 0, 0, 0)


def test_apply_guard_refuses_opposite_sides():
    m = toeplitz(parse("1/(1-x)", Side.BELOW, _P), precision=_P)
    chi = parse("1/(1-x)", Side.ABOVE, _P)
    with pytest.raises(GuardViolationError):
        apply_guard(m, chi, (0, 3))


def test_guard_handles_negative_order_columns():
    m = lagrange(parse("x^-1/(1-x)", Side.BELOW, _P), precision=_P)  # L-
    n = lagrange(parse("x^-1", Side.BELOW, _P), precision=_P)        # J-like
    guard = product_guard(m, n, (0, 3), (-3, 0))
    got = oracle_matmul(extract(m, (0, 3), guard),
                        extract(n, guard, (-3, 0)), guard)
    assert got == extract(matmul(m, n), (0, 3), (-3, 0))

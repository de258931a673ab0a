"""End-to-end acceptance: one test per shipped guarantee, exact comparisons.

Each test prints a single PASS line (visible with `pytest -s` or in captured
output) and enforces its own runtime budget.
"""

from __future__ import annotations

import time
import warnings
from fractions import Fraction

import pytest

from biriordan.cli import main as cli_main
from biriordan.errors import NotInvertibleError, UndefinedProductError
from biriordan.riordan import (
    EchelonClass,
    apply,
    classify,
    identity,
    inverse,
    j_conjugate,
    j_matrix,
    lagrange,
    matmul,
    riordan,
    toeplitz,
)
from biriordan.series import (
    Side,
    compose,
    compositional_inverse,
    eq_to_precision,
    monomial,
    mul,
    parse,
    recip,
    substitute_reciprocal,
)
from biriordan.simplicial import (
    FVector,
    HVector,
    cross_polytope,
    dehn_sommerville_residuals,
    dehn_sommerville_residuals_matrix,
    f_to_h,
    h_to_f,
    is_palindromic,
    simplex_boundary,
    verify_theorem_chain,
)
from biriordan.window import (
    apply_guard,
    extract,
    oracle_apply,
    oracle_matmul,
    product_guard,
    vector_from_series,
)
from conftest import make_rng, random_polynomial, random_rational, random_truncated


def _report(n: int, label: str, started: float, budget: float):
    elapsed = time.monotonic() - started
    assert elapsed < budget, f"criterion {n} took {elapsed:.1f}s (budget {budget}s)"
    print(f"ACCEPTANCE {n} PASS: {label} ({elapsed:.2f}s)")


def _identity_block(rows, cols):
    return extract(identity(), rows, cols)


# 1 ---------------------------------------------------------------------------------


def test_acceptance_1_toeplitz_homomorphism():
    started = time.monotonic()
    rng = make_rng(101)
    for _ in range(100):
        a = random_truncated(rng, Side.BELOW, rng.randint(-5, 5), count=12)
        b = random_truncated(rng, Side.BELOW, rng.randint(-5, 5), count=12)
        m, n = toeplitz(a, precision=12), toeplitz(b, precision=12)
        rows = (a.order() + b.order(), a.order() + b.order() + 5)
        cols = (0, 5)
        block = extract(matmul(m, n), rows, cols)
        assert block == extract(toeplitz(mul(a, b), precision=12), rows, cols)
        guard = product_guard(m, n, rows, cols)
        assert block == oracle_matmul(
            extract(m, rows, guard), extract(n, guard, cols), guard)
        ainv = recip(a, Side.BELOW, 12)
        ident = matmul(m, toeplitz(ainv, precision=12))
        assert extract(ident, (0, 5), (0, 5)) == _identity_block((0, 5), (0, 5))
    _report(1, "Toeplitz products multiply their symbols", started, 10.0)


# 2 ---------------------------------------------------------------------------------


def test_acceptance_2_lagrange_antihomomorphism():
    started = time.monotonic()
    rng = make_rng(202)
    block = ((0, 9), (0, 9))
    for _ in range(50):
        w1 = random_truncated(rng, Side.BELOW, 1, count=12)
        w2 = random_truncated(rng, Side.BELOW, 1, count=12)
        m1 = lagrange(w1, precision=12)
        m2 = lagrange(w2, precision=12)
        prod = matmul(m1, m2)
        direct = lagrange(compose(w2, w1, 12), precision=12)
        assert extract(prod, *block) == extract(direct, *block)
        guard = product_guard(m1, m2, *block)
        assert extract(prod, *block) == oracle_matmul(
            extract(m1, block[0], guard), extract(m2, guard, block[1]), guard)
        ident = matmul(m1, inverse(m1))
        assert extract(ident, *block) == _identity_block(*block)
        # the same pair moved to the upper classes by J-conjugation
        c1 = j_conjugate(m1, "both")
        c2 = j_conjugate(m2, "both")
        assert classify(c1) == {EchelonClass.U_PLUS}
        cprod = matmul(c1, c2)
        assert extract(cprod, *block) == extract(
            j_conjugate(prod, "both"), *block)
        cident = matmul(c1, inverse(c1))
        assert extract(cident, *block) == _identity_block(*block)
    _report(2, "composition matrices multiply contravariantly", started, 30.0)


# 3 ---------------------------------------------------------------------------------


def test_acceptance_3_j_algebra():
    started = time.monotonic()
    j = j_matrix()
    jj = matmul(j, j)
    assert jj.alpha == parse("1") and jj.omega == parse("x")
    rng = make_rng(303)
    for _ in range(20):
        w = random_truncated(rng, Side.BELOW, 1, count=12)
        m = lagrange(w, precision=12)
        left = j_conjugate(m, "left")
        rows, cols = (-9, 0), (0, 9)
        assert extract(left, rows, cols) == extract(matmul(j, m), rows, cols)
        # multiplying J on the left substitutes 1/x into both components
        assert eq_to_precision(left.omega, substitute_reciprocal(w))
        right = j_conjugate(m, "right")
        assert extract(right, rows, cols) == extract(matmul(m, j), rows, cols)
        # multiplying J on the right replaces omega with its reciprocal
        assert eq_to_precision(right.omega, recip(w, Side.BELOW, 12))
        # the four-class diagram under one-sided J-multiplication
        assert classify(m) == {EchelonClass.L_PLUS}
        assert classify(left) == {EchelonClass.U_MINUS}
        assert classify(right) == {EchelonClass.L_MINUS}
        assert classify(j_conjugate(m, "both")) == {EchelonClass.U_PLUS}
    _report(3, "J is an involution and conjugates the classes", started, 5.0)


# 4 ---------------------------------------------------------------------------------

_P4 = 12


def _singleton(cls: EchelonClass):
    if cls is EchelonClass.L_PLUS:
        return lagrange(parse("x/(1-x)", Side.BELOW, _P4), precision=_P4)
    if cls is EchelonClass.L_MINUS:
        return lagrange(parse("x^-1/(1-x)", Side.BELOW, _P4), precision=_P4)
    if cls is EchelonClass.U_PLUS:
        return lagrange(parse("x^2/(x-1)", Side.ABOVE, _P4), precision=_P4)
    return lagrange(substitute_reciprocal(parse("x/(1-x)", Side.BELOW, _P4)),
                    precision=_P4)


_CELLS = {
    (EchelonClass.L_PLUS, EchelonClass.L_PLUS): EchelonClass.L_PLUS,
    (EchelonClass.L_PLUS, EchelonClass.L_MINUS): EchelonClass.L_MINUS,
    (EchelonClass.L_MINUS, EchelonClass.U_PLUS): EchelonClass.L_MINUS,
    (EchelonClass.L_MINUS, EchelonClass.U_MINUS): EchelonClass.L_PLUS,
    (EchelonClass.U_PLUS, EchelonClass.U_PLUS): EchelonClass.U_PLUS,
    (EchelonClass.U_PLUS, EchelonClass.U_MINUS): EchelonClass.U_MINUS,
    (EchelonClass.U_MINUS, EchelonClass.L_PLUS): EchelonClass.U_MINUS,
    (EchelonClass.U_MINUS, EchelonClass.L_MINUS): EchelonClass.U_PLUS,
}


def test_acceptance_4_product_table_contract():
    started = time.monotonic()
    checked = 0
    for cm in EchelonClass:
        for cn in EchelonClass:
            m, n = _singleton(cm), _singleton(cn)
            assert classify(m) == {cm} and classify(n) == {cn}
            if (cm, cn) in _CELLS:
                prod = matmul(m, n)
                assert classify(prod) == {_CELLS[cm, cn]}, (cm, cn)
            else:
                with pytest.raises(UndefinedProductError) as exc:
                    matmul(m, n)
                assert str(cm) in str(exc.value) and str(cn) in str(exc.value)
            checked += 1
    assert checked == 16
    _report(4, "all 16 class-pair cells behave per the product table",
            started, 5.0)


# 5 ---------------------------------------------------------------------------------


def _apply_case(rng, kind: str):
    """Build (matrix, chi) hitting one composition case; 24 known coeffs."""
    count = 24
    if kind == "below_below":
        alpha = random_truncated(rng, Side.BELOW, rng.randint(-3, 3), count=count)
        omega = random_truncated(rng, Side.BELOW, rng.randint(1, 2), count=count)
        chi = random_truncated(rng, Side.BELOW, rng.randint(-3, 3), count=count)
    elif kind == "below_above":
        alpha = random_truncated(rng, Side.ABOVE, rng.randint(-3, 3), count=count)
        omega = random_truncated(rng, Side.ABOVE, rng.randint(-2, -1), count=count)
        chi = random_truncated(rng, Side.BELOW, rng.randint(-3, 3), count=count)
    elif kind == "above_below":
        alpha = random_truncated(rng, Side.BELOW, rng.randint(-3, 3), count=count)
        omega = random_truncated(rng, Side.BELOW, rng.randint(-2, -1), count=count)
        chi = random_truncated(rng, Side.ABOVE, rng.randint(-3, 3), count=count)
    elif kind == "above_above":
        alpha = random_truncated(rng, Side.ABOVE, rng.randint(-3, 3), count=count)
        omega = random_truncated(rng, Side.ABOVE, rng.randint(1, 2), count=count)
        chi = random_truncated(rng, Side.ABOVE, rng.randint(-3, 3), count=count)
    else:  # finite outer
        alpha = random_truncated(rng, Side.BELOW, rng.randint(-3, 3), count=count)
        omega = random_truncated(rng, Side.BELOW, 1, count=count)
        chi = random_polynomial(rng, -3, 3)
        if chi.is_zero():
            chi = monomial(1, rng.randint(-3, 3))
    return riordan(alpha, omega, precision=count), chi


def test_acceptance_5_apply_matches_window_oracle():
    started = time.monotonic()
    rng = make_rng(505)
    kinds = ["below_below", "below_above", "above_below", "above_above",
             "finite"]
    for case in range(50):
        m, chi = _apply_case(rng, kinds[case % 5])
        got = apply(m, chi)
        if got.exact:
            exps = sorted(got.coeffs)
            rows = (exps[0] - 1, exps[-1] + 1) if exps else (0, 4)
        elif got.side is Side.BELOW:
            rows = (got.lo, got.lo + 7)
        else:
            rows = (got.hi - 7, got.hi)
        guard = apply_guard(m, chi, rows)
        assert guard[0] <= guard[1]
        v = oracle_apply(extract(m, rows, guard),
                         vector_from_series(chi, *guard), guard)
        assert v.values == tuple(got[i] for i in range(rows[0], rows[1] + 1))
    _report(5, "matrix action equals the certified window oracle",
            started, 20.0)


# 6 ---------------------------------------------------------------------------------


def test_acceptance_6_invertibility_criterion():
    started = time.monotonic()
    rng = make_rng(606)
    for order in (-3, -2, -1, 0, 1, 2, 3):
        for _ in range(10):
            side = rng.choice((Side.BELOW, Side.ABOVE))
            w = random_truncated(rng, side, order, count=12)
            if order in (1, -1):
                winv = compositional_inverse(w, 12)
                assert eq_to_precision(compose(w, winv, 10), monomial(1, 1))
                assert eq_to_precision(compose(winv, w, 10), monomial(1, 1))
            else:
                with pytest.raises(NotInvertibleError):
                    compositional_inverse(w, 12)
    _report(6, "compositional inverse exists exactly for orders +1/-1",
            started, 5.0)


# 7 ---------------------------------------------------------------------------------


def test_acceptance_7_dehn_sommerville():
    started = time.monotonic()
    for d in range(-1, 9):
        for fv in (simplex_boundary(d), cross_polytope(d)):
            direct = dehn_sommerville_residuals(fv)
            assert all(r == 0 for r in direct), (d, fv.f)
            assert direct == dehn_sommerville_residuals_matrix(fv)
    solid = FVector(2, (1, 3, 3, 1))
    assert dehn_sommerville_residuals(solid) == (-1, -3, -3, 0)
    rng = make_rng(707)
    for i in range(500):
        d = rng.randint(-1, 6)
        if i % 2 == 0:
            entries = [Fraction(1)] + [random_rational(rng)
                                       for _ in range(d + 1)]
            fv = FVector(d, tuple(entries))
        else:
            half = [Fraction(rng.randint(-9, 9)) for _ in range((d + 3) // 2)]
            full = half + list(reversed(half[: (d + 2) // 2]))
            hv = HVector(d, tuple(full))
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                fv = h_to_f(hv)
        direct = dehn_sommerville_residuals(fv)
        assert direct == dehn_sommerville_residuals_matrix(fv)
        assert is_palindromic(f_to_h(fv)) == all(r == 0 for r in direct)
    _report(7, "residual identities hold exactly where h is palindromic",
            started, 10.0)


# 8 ---------------------------------------------------------------------------------


def test_acceptance_8_proof_chain():
    started = time.monotonic()
    for d in range(0, 5):
        trace = verify_theorem_chain(d)
        assert [s.name for s in trace.steps] == [
            "reversal window",
            "collapsed product",
            "inverse transform",
            "final matrix",
            "family actions",
        ]
    _report(8, "matrix-identity proof chain replays for d = 0..4",
            started, 10.0)


# 9 ---------------------------------------------------------------------------------

_CLI_CASES = [
    (
        ["series", "compose", "--chi", "1/(1-x)", "--omega", "x^-1",
         "--side", "below", "--prec", "5"],
        0,
        "1 + x^-1 + x^-2 + x^-3 + x^-4 + O(x^-5)\nside: bounded-above\n",
        "",
    ),
    (
        ["series", "invert", "--omega", "x/(1-x)", "--prec", "5"],
        0,
        "x - x^2 + x^3 - x^4 + O(x^5)\nside: bounded-below\n",
        "",
    ),
    (
        ["series", "compose", "--chi", "1/(1-x)", "--omega", "2+x"],
        1,
        "",
        "error: composition undefined: infinite outer support needs an inner "
        "series of nonzero order on a matching side (bounded-below outer with "
        "bounded-below inner of order >= 1 or bounded-above inner of order "
        "<= -1; bounded-above outer mirrored)\n",
    ),
    (
        ["matrix", "classify", "--omega", "x/(1-x)"],
        0,
        "L+\n",
        "",
    ),
    (
        ["matrix", "mul", "--omega", "x^2", "--chi", "x^3"],
        0,
        "alpha: 1\nomega: x^6\n",
        "",
    ),
    (
        ["matrix", "mul", "--omega", "x/(1-x)", "--chi", "x^2/(x-1)",
         "--other-side", "above"],
        1,
        "",
        "error: product not defined for echelon classes L+ x U+\n",
    ),
    (
        ["ds", "--f", "1,6,12,8"],
        0,
        "d: 2\nf: 1, 6, 12, 8\nh: 1, 3, 3, 1\npalindromic: yes\n"
        "residuals: 0, 0, 0, 0\n",
        "",
    ),
    (
        ["ds", "--f", "1,3,3,1"],
        3,
        "d: 2\nf: 1, 3, 3, 1\nh: 1, 0, 0, 0\npalindromic: no\n"
        "residuals: -1, -3, -3, 0\n",
        "",
    ),
    (
        ["ds", "--f", "1"],
        0,
        "d: -1\nf: 1\nh: 1\npalindromic: yes\nresiduals: 0\n",
        "",
    ),
]


def test_acceptance_9_cli_end_to_end(capsys):
    started = time.monotonic()
    for argv, want_code, want_out, want_err in _CLI_CASES:
        code = cli_main(list(argv))
        captured = capsys.readouterr()
        assert code == want_code, argv
        assert captured.out == want_out, argv
        assert captured.err == want_err, argv
    _report(9, "documented CLI invocations are byte-exact", started, 5.0)

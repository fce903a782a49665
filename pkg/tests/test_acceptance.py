"""Exit criteria of the build, one test per criterion.

Run ``pytest tests/test_acceptance.py -v`` and read the "acceptance criteria"
section of the terminal summary for the PASS/FAIL lines.
"""

import csv
import io
import time
from decimal import Decimal
from fractions import Fraction
from math import factorial

import pytest

from partition_expansion import (
    PrecisionContext,
    d_coeff,
    j_coeff,
    kappa,
    kappa_direct,
    kappa_direct_alt,
    log_f,
    log_f_direct,
    p_approx_simple,
    partition_bruteforce,
    partition_exact,
    verify_saddle_bounds,
)
from partition_expansion.cli import TABLE_NS, main, table_rows
from partition_expansion.cumulants import log_f_residual
from partition_expansion.numerics import context_for_n

from conftest import TABLE1
from test_exact import product_coefficients
from test_expansion import derivative_oracle

BOUND_SWEEP = range(1, 21)
SWEEP_DIGITS = 30


def _table_csv(capsys, *extra):
    start = time.perf_counter()
    code = main(["table", *extra])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert code == 0
    return list(csv.DictReader(io.StringIO(out))), elapsed


def test_c01_table_integers(capsys, criterion):
    rows, elapsed = _table_csv(capsys)
    bad = [r["n"] for r in rows
           if (int(r["p"]), int(r["p_bar"])) != TABLE1[int(r["n"])][:2]]
    ok = [int(r["n"]) for r in rows] == list(TABLE_NS) and not bad and elapsed < 10
    criterion(1, ok, f"p and p_bar exact for {len(rows) - len(bad)}/14 rows, "
                     f"{elapsed:.2f}s (< 10s)")


def test_c02_table_ratios(capsys, criterion):
    rows, _ = _table_csv(capsys)
    worst = Decimal(0)
    flagged = []
    for r in rows:
        ours, printed = Decimal(r["ratio"]), Decimal(TABLE1[int(r["n"])][2])
        worst = max(worst, abs(ours - printed))
        if ours != printed:
            flagged.append(r["n"])
    ok = worst <= Decimal("1e-18")
    criterion(2, ok, f"max |ratio - printed| = {worst:.1E} (<= 1E-18); "
                     f"19th-digit differences at n = {', '.join(flagged) or 'none'}")


def test_c03_ramanujan_identity(criterion):
    ctx = PrecisionContext(decimal_digits=60)
    mp = ctx.mp
    t = mp.exp(-2 * mp.pi)
    closed = mp.mpf(1) / 24 - 1 / (8 * mp.pi)
    rel = max(abs(kappa(1, t, ctx).value / closed - 1),
              abs(kappa_direct(1, t, ctx).value / closed - 1))
    criterion(3, rel < mp.mpf("1e-40"), f"kappa_1(e^-2pi) relative error {mp.nstr(rel, 3)} (< 1e-40)")


def test_c04_self_dual_fixed_point(criterion):
    ctx = PrecisionContext(decimal_digits=60)
    mp = ctx.mp
    t = mp.exp(-2 * mp.pi)
    residual = abs(log_f_residual(t, ctx))
    routes = abs(log_f(t, ctx).value - log_f_direct(t, ctx))
    worst = max(residual, routes)
    criterion(4, worst < ctx.tolerance,
              f"log f functional-equation residual {mp.nstr(worst, 3)} (< 1e-50)")


def test_c05_coefficients(criterion):
    identity = all(d_coeff(l) == (-1) ** (l + 1) * j_coeff(l) / factorial(l)
                   for l in range(1, 31))
    bounds = all(0 < d_coeff(l) < 2 * 3 ** (l - 1) for l in range(1, 31))
    oracle = all(j_coeff(l) == derivative_oracle(l) for l in range(1, 16))
    criterion(5, identity and bounds and oracle,
              f"D=(-1)^(l+1)J/l! {identity}, 0<D<2*3^(l-1) {bounds} (l<=30); "
              f"J vs series derivative {oracle} (l<=15)")


def test_c06_oracles(criterion):
    brute = all(partition_exact(n) == partition_bruteforce(n) for n in range(61))
    product = product_coefficients(100) == [partition_exact(n) for n in range(101)]
    criterion(6, brute and product,
              f"pentagonal = brute force (n<=60) {brute}; = product coefficients (n<=100) {product}")


def test_c07_cumulant_cross_validation(criterion):
    ctx = PrecisionContext(decimal_digits=40)
    mp = ctx.mp
    worst = mp.zero
    for j in range(1, 7):
        for t in ("0.6", "0.9", "0.99"):
            direct = kappa_direct(j, t, ctx).value
            values = [kappa(j, t, ctx).value]
            if j >= 2:
                values.append(kappa_direct_alt(j, t, ctx).value)
            for v in values:
                worst = max(worst, abs(v - direct) / direct)
    agree = worst <= ctx.tolerance

    x = mp.mpf("0.5")
    decay = []
    for j in (1, 2, 3):
        target = kappa(j + 1, x, ctx).value

        def err(delta):
            delta = mp.mpf(delta)
            d = kappa(j, x + delta / 2, ctx).value - kappa(j, x - delta / 2, ctx).value
            return abs(x / delta * d - target)
        decay.append(err("1e-3") / err("5e-4"))
    second_order = all(3.9 < r < 4.1 for r in decay)
    criterion(7, agree and second_order,
              f"max relative disagreement {mp.nstr(worst, 3)} (<= 1e-30); "
              f"finite-difference error ratios on halving delta "
              f"{[mp.nstr(r, 4) for r in decay]} (in (3.9, 4.1))")


def _bound_reports(digits):
    ctx = PrecisionContext(decimal_digits=digits)
    return [verify_saddle_bounds(n, ctx) for n in BOUND_SWEEP]


def test_c08_bound_sweep(criterion):
    reports = _bound_reports(SWEEP_DIGITS)
    worst = {}
    for rep in reports:
        for name, ratio in rep.ratios.items():
            worst[name] = max(worst.get(name, 0), ratio)
    failing = sorted({name for rep in reports for name in rep.failures()})
    detail = ", ".join(f"{k} max ratio {float(v):.4g}" for k, v in worst.items())
    criterion(8, not failing,
              f"n=1..20 residual/envelope with constant 1: {detail}"
              + (f"; exceeded: {failing}" if failing else ""))


def test_c09_asymptotic_order(criterion):
    sweep = (100, 200, 400, 800, 1000)
    lines = []
    ok = True
    for N in (1, 2, 3):
        scaled = []
        for n in sweep:
            ctx = context_for_n(n, N)
            mp = ctx.mp
            exact = partition_exact(n)
            err = abs(exact - p_approx_simple(n, N, ctx).value)
            scaled.append(err / (exact * mp.mpf(n) ** (-mp.mpf(N + 1) / 2)))
        steps = [abs(b - a) for a, b in zip(scaled, scaled[1:])]
        settling = all(b < a for a, b in zip(steps, steps[1:]))
        d = d_coeff(N + 1)
        limit = mp.mpf(d.numerator) / d.denominator / (8 * mp.pi ** 2 / 3) ** (mp.mpf(N + 1) / 2)
        near_limit = abs(scaled[-1] / limit - 1) < 0.1
        ok = ok and settling and near_limit
        rising = all(b > a for a, b in zip(scaled, scaled[1:]))
        lines.append(f"N={N}: {[mp.nstr(s, 4) for s in scaled]} -> {mp.nstr(limit, 4)}"
                     + (" (rising to the limit from below)" if rising else ""))
    criterion(9, ok, "scaled error bounded, increments shrinking, last within 10% of "
                     "D_(N+1)/(8pi^2/3)^((N+1)/2): " + "; ".join(lines))


def test_c10_precision_escalation(criterion):
    base = table_rows(list(TABLE_NS))
    more = table_rows(list(TABLE_NS), extra_digits=10)
    integers = all((a.p_exact, a.p_bar) == (b.p_exact, b.p_bar) for a, b in zip(base, more))
    table_shift = max(abs(Fraction(a.p_bar, a.p_exact) - Fraction(b.p_bar, b.p_exact))
                      for a, b in zip(base, more))
    r1, r2 = _bound_reports(SWEEP_DIGITS), _bound_reports(SWEEP_DIGITS + 10)
    bound_shift = max(abs(a.ratios[k] - b.ratios[k]) for a, b in zip(r1, r2) for k in a.ratios)
    same_verdicts = [a.failures() for a in r1] == [b.failures() for b in r2]
    ok = integers and table_shift < Fraction(1, 10 ** 18) and bound_shift < 1e-18 \
        and same_verdicts
    criterion(10, ok, f"+10 digits: integers unchanged {integers}, table ratio shift "
                      f"{float(table_shift):.1g}, bound ratio shift {float(bound_shift):.1g} "
                      f"(< 1e-18), verdicts unchanged {same_verdicts}")

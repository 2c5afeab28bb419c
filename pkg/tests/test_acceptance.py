"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (also visible under plain
``pytest``).  Run ``python tests/test_acceptance.py`` for just the summary.
"""

import cmath
import io
import json
import math
import time
from fractions import Fraction as F

import pytest

from zetaladder.bernoulli import bernoulli_upto
from zetaladder.checks import cross_depth, exact_agreement, oracle_agreement, standard_grid
from zetaladder.cli import OutputRecord, main
from zetaladder.ladder import LadderConfig, remainder_T, zeta, zeta_star
from zetaladder.special_values import zeta_neg_int

_capture = None


def report(name, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
    if _capture is not None:
        with _capture.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


@pytest.fixture(autouse=True)
def _show(capsys):
    global _capture
    _capture = capsys
    yield
    _capture = None


def test_bernoulli_fidelity():
    expected = [F(1), F(-1, 2), F(1, 6), F(0), F(-1, 30), F(0), F(1, 42), F(0), F(-1, 30), F(0), F(5, 66)]
    t0 = time.perf_counter()
    got = list(bernoulli_upto(10).values)
    dt = time.perf_counter() - t0
    report("bernoulli fidelity", got == expected and dt < 0.1, f"B_0..B_10 exact={got == expected} time={dt:.4f}s (< 0.1s)")


def test_lemma_identities():
    t0 = time.perf_counter()
    b = bernoulli_upto(99).values
    sums_ok = all(sum(math.comb(N, n) * b[n] for n in range(N)) == 0 for N in range(2, 62))
    odd_ok = all(b[n] == 0 for n in range(3, 100, 2))
    dt = time.perf_counter() - t0
    report(
        "lemma identities",
        sums_ok and odd_ok and dt < 2,
        f"recurrence sums zero={sums_ok} odd vanish={odd_ok} time={dt:.3f}s (< 2s)",
    )


def test_special_values():
    got = [zeta_neg_int(k) for k in range(4)]
    ok = got == [F(-1, 2), F(-1, 12), F(0), F(1, 120)]
    report("special values", ok, f"zeta(0..-3) = {', '.join(str(q) for q in got)}")


def test_ladder_vs_exact():
    t0 = time.perf_counter()
    res = exact_agreement(range(11), 1e-9, LadderConfig(tol=1e-10))
    dt = time.perf_counter() - t0
    report(
        "ladder vs exact",
        res.passed and dt < 10,
        f"max_err={res.max_err:.2e} (<= 1e-9) k=0..10 time={dt:.2f}s (< 10s)",
    )


def test_residue():
    errs = []
    for theta in (0, math.pi / 2, math.pi, 3 * math.pi / 2):
        s = 1 + 1e-3 * cmath.exp(1j * theta)
        errs.append(abs((s - 1) * zeta(s).value - 1))
    report("residue", max(errs) <= 1e-5, f"max |(s-1)zeta(s) - 1| = {max(errs):.3e} (<= 1e-5) at radius 1e-3")


def test_entire_part_value():
    v = zeta_star(1).value
    err = abs(v - 0.5772156649)
    report("entire-part value", err <= 1e-6, f"zeta*(1) = {v.real:.12f}, |diff| = {err:.2e} (<= 1e-6)")


def test_oracle_agreement():
    grid = standard_grid()
    t0 = time.perf_counter()
    res = oracle_agreement(grid, 1e-8, LadderConfig(tol=1e-10))
    dt = time.perf_counter() - t0
    report(
        "oracle agreement",
        res.passed and res.count == 200 and dt < 60,
        f"max_err={res.max_err:.2e} (<= 1e-8) points={res.count} time={dt:.1f}s (< 60s)",
    )


def test_cross_depth():
    res = cross_depth(standard_grid(), 1e-9, LadderConfig(tol=1e-10))
    report(
        "cross-depth",
        res.passed and res.count == 200,
        f"max_err={res.max_err:.2e} (<= 1e-9) points={res.count}",
    )


def test_base_identity():
    cfg = LadderConfig(tol=1e-10)
    pts = [complex(2 + 0.5 * (i % 5), -4.5 + 2.25 * (i // 5)) for i in range(20)]
    worst = 0.0
    for s in pts:
        lhs = zeta(s, cfg).value - s / 2 * zeta(s + 1, cfg).value + remainder_T(s, 0, cfg).value
        worst = max(worst, abs(lhs - 1 / (s - 1)))
    report("base identity", worst <= 5e-10, f"max residual={worst:.2e} (<= 5e-10) over 20 points with Re(s) >= 2")


def _cli(*argv):
    buf = io.StringIO()
    return main(list(argv), out=buf), buf.getvalue()


def test_cli_contract():
    notes = []
    code, text = _cli("eval", "--s", "-1", "--format", "json")
    rec = OutputRecord.from_json(text)
    a = code == 0 and abs(rec.value - (-1 / 12)) <= 1e-10 and rec.method == "ladder"
    notes.append(f"eval -1 {'ok' if a else 'bad'}")
    code, text = _cli("eval", "--s", "1", "--format", "json")
    b = code == 1 and json.loads(text).get("error") == "pole"
    notes.append(f"eval 1 {'ok' if b else 'bad'}")
    code, text = _cli("eval", "--s", "2", "--tol", "1e-8", "--format", "json")
    rec = OutputRecord.from_json(text)
    c = code == 0 and abs(rec.value - 1.64493407) <= 5e-9 and rec.method == "direct"
    notes.append(f"eval 2 {'ok' if c else 'bad'}")
    code, _ = _cli("check")
    d = code == 0
    notes.append(f"check exit={code}")
    report("cli contract", a and b and c and d, ", ".join(notes))


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

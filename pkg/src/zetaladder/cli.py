"""Command-line front end.

    zetaladder eval --s RE[,IM] [--tol T] [--format text|json|csv]
    zetaladder special --k K
    zetaladder bernoulli --upto N
    zetaladder table --re-from A --re-to B --step H [--im T]
    zetaladder check [--grid standard|small] [--tol 1e-8]

Exit codes: 0 success, 1 mathematical or domain failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from . import checks
from .bernoulli import bernoulli_upto
from .errors import ZetaError
from .ladder import LadderConfig, zeta
from .rational import format_rational
from .special_values import zeta_neg_int

CSV_COLUMNS = ["re", "im", "value_re", "value_im", "method", "depth_k", "err_estimate"]
EXACT_CSV_COLUMNS = ["n", "value", "method"]

# flags whose values may legitimately start with '-'
_VALUE_FLAGS = {"--s", "--re-from", "--re-to", "--im", "--k", "--upto", "--tol", "--step"}


@dataclass
class OutputRecord:
    s: Optional[complex] = None
    value: Union[complex, str, None] = None
    method: str = ""
    depth_k: int = 0
    err_estimate: float = 0.0
    n: Optional[int] = None
    error: Optional[str] = None
    message: Optional[str] = None

    def to_dict(self) -> dict:
        d: dict = {}
        if self.s is not None:
            d["s"] = {"re": self.s.real, "im": self.s.imag}
        if self.n is not None:
            d["n"] = self.n
        if isinstance(self.value, complex):
            d["value"] = {"re": self.value.real, "im": self.value.imag}
        else:
            d["value"] = self.value
        d["method"] = self.method
        d["depth_k"] = self.depth_k
        d["err_estimate"] = self.err_estimate
        if self.error is not None:
            d["error"] = self.error
            d["message"] = self.message
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        s = d.get("s")
        value = d.get("value")
        if isinstance(value, dict):
            value = complex(value["re"], value["im"])
        return cls(
            s=complex(s["re"], s["im"]) if s is not None else None,
            value=value,
            method=d["method"],
            depth_k=d["depth_k"],
            err_estimate=d["err_estimate"],
            n=d.get("n"),
            error=d.get("error"),
            message=d.get("message"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls.from_dict(json.loads(text))


def _fmt_real(x: float) -> str:
    return f"{x:.10g}"


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return _fmt_real(z.real + 0.0)
    return f"{z.real:.10g}{z.imag:+.10g}i"


def _text_line(rec: OutputRecord) -> str:
    if rec.error is not None:
        where = f" s={_fmt_complex(rec.s)}" if rec.s is not None else ""
        return f"error={rec.error}{where} message={rec.message}"
    if isinstance(rec.value, str):
        return rec.value if rec.n is None else f"{rec.n} {rec.value}"
    return (
        f"s={_fmt_complex(rec.s)} value={_fmt_complex(rec.value)} "
        f"method={rec.method} depth_k={rec.depth_k} err_estimate={rec.err_estimate:.3g}"
    )


def render(records: Sequence[OutputRecord], fmt: str) -> str:
    if fmt == "json":
        if len(records) == 1:
            return records[0].to_json() + "\n"
        return json.dumps([r.to_dict() for r in records]) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        exact = any(isinstance(r.value, str) for r in records)
        if exact:
            w.writerow(EXACT_CSV_COLUMNS)
            for r in records:
                w.writerow([r.n if r.n is not None else "", r.value, r.method])
        else:
            w.writerow(CSV_COLUMNS)
            for r in records:
                if r.value is None:
                    w.writerow([repr(r.s.real), repr(r.s.imag), "", "", f"skipped:{r.error}", r.depth_k, ""])
                else:
                    w.writerow([
                        repr(r.s.real), repr(r.s.imag), repr(r.value.real), repr(r.value.imag),
                        r.method, r.depth_k, repr(r.err_estimate),
                    ])
        return buf.getvalue()
    return "".join(_text_line(r) + "\n" for r in records)


def parse_point(text: str) -> complex:
    """``RE`` or ``RE,IM``, no spaces."""
    parts = text.split(",")
    if len(parts) > 2 or any(p.strip() != p or p == "" for p in parts):
        raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE or RE,IM, got {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError("components must be finite")
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (v > 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"must be a positive finite number: {text!r}")
    return v


def _finite_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return v


def default_tol() -> float:
    env = os.environ.get("ZETA_DEFAULT_TOL")
    if env:
        try:
            return _positive_float(env)
        except argparse.ArgumentTypeError:
            pass
    return 1e-10


def _eval_record(s: complex, cfg: LadderConfig) -> OutputRecord:
    res = zeta(s, cfg)
    value = complex(res.value.real + 0.0, res.value.imag + 0.0)  # drop negative zeros
    return OutputRecord(s=s, value=value, method=res.method, depth_k=res.depth_k, err_estimate=res.err_estimate)


def _error_record(s: Optional[complex], exc: ZetaError) -> OutputRecord:
    return OutputRecord(s=s, method="error", error=exc.kind, message=str(exc))


def cmd_eval(args, out) -> int:
    cfg = LadderConfig(tol=args.tol)
    try:
        rec = _eval_record(args.s, cfg)
        code = 0
    except ZetaError as exc:
        rec = _error_record(args.s, exc)
        code = 1
    out.write(render([rec], args.format))
    return code


def cmd_special(args, out) -> int:
    q = zeta_neg_int(args.k)
    rec = OutputRecord(value=format_rational(q, machine=args.format != "text"), method="exact", n=args.k)
    if args.format == "text":
        out.write(rec.value + "\n")
    else:
        out.write(render([rec], args.format))
    return 0


def cmd_bernoulli(args, out) -> int:
    table = bernoulli_upto(args.upto)
    machine = args.format != "text"
    recs = [
        OutputRecord(value=format_rational(b, machine=machine), method="exact", n=n)
        for n, b in enumerate(table.values)
    ]
    out.write(render(recs, args.format))
    return 0


def table_points(re_from: float, re_to: float, step: float, im: float = 0.0) -> List[complex]:
    count = math.floor((re_to - re_from) / step + 1e-9) + 1
    return [complex(re_from + i * step, im) for i in range(count)]


def cmd_table(args, out) -> int:
    cfg = LadderConfig(tol=args.tol)
    recs = []
    code = 0
    for s in table_points(args.re_from, args.re_to, args.step, args.im):
        if abs(s - 1) < cfg.pole_guard:
            recs.append(OutputRecord(s=s, method="skipped", error="pole", message="grid point at the pole"))
            continue
        try:
            recs.append(_eval_record(s, cfg))
        except ZetaError as exc:
            recs.append(_error_record(s, exc))
            code = 1
    out.write(render(recs, args.format))
    return code


def cmd_check(args, out) -> int:
    cfg = LadderConfig(tol=default_tol())
    grid = checks.standard_grid() if args.grid == "standard" else checks.small_grid()
    suites = [
        checks.oracle_agreement(grid, args.tol, cfg),
        checks.exact_agreement(range(11), args.tol, cfg),
        checks.cross_depth(grid, args.tol, cfg),
    ]
    if args.format == "json":
        out.write(json.dumps([
            {
                "suite": r.name,
                "max_err": r.max_err if math.isfinite(r.max_err) else None,
                "tol": r.tol,
                "count": r.count,
                "passed": r.passed,
                "failure": r.failure,
            }
            for r in suites
        ]) + "\n")
    else:
        for r in suites:
            status = "PASS" if r.passed else "FAIL"
            extra = f" ({r.failure})" if r.failure else ""
            out.write(f"{status} {r.name}: max_err={r.max_err:.3e} tol={r.tol:.1e} points={r.count}{extra}\n")
    return 0 if all(r.passed for r in suites) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetaladder", description="Riemann zeta by analytic continuation.")
    sub = parser.add_subparsers(dest="command", required=True)
    tol = default_tol()

    p = sub.add_parser("eval", help="evaluate zeta(s)")
    p.add_argument("--s", type=parse_point, required=True, help="RE or RE,IM")
    p.add_argument("--tol", type=_positive_float, default=tol)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("special", help="exact zeta(-k)")
    p.add_argument("--k", type=_nonneg_int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("bernoulli", help="exact Bernoulli numbers B_0..B_N")
    p.add_argument("--upto", type=_nonneg_int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("table", help="zeta along a horizontal line")
    p.add_argument("--re-from", type=_finite_float, required=True)
    p.add_argument("--re-to", type=_finite_float, required=True)
    p.add_argument("--step", type=_positive_float, required=True)
    p.add_argument("--im", type=_finite_float, default=0.0)
    p.add_argument("--tol", type=_positive_float, default=tol)
    p.add_argument("--format", choices=["text", "json", "csv"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="run the consistency suites")
    p.add_argument("--grid", choices=["standard", "small"], default="standard")
    p.add_argument("--tol", type=_positive_float, default=1e-8)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)
    return parser


def _join_negative_values(argv: Sequence[str]) -> List[str]:
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "table" and args.re_from > args.re_to:
        parser.print_usage(sys.stderr)
        print("zetaladder table: error: --re-from must not exceed --re-to", file=sys.stderr)
        return 2
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front-end: every operation and every reference table.

All integers are read and written as plain decimal strings; scientific
notation is rejected so no value ever passes through floating point.
Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

from .aryabhata_sqrt import SqrtTrace, isqrt, isqrt_nearest, isqrt_traced, sqrt_scaled
from .exact_arith import DomainError, RoundingMode, ScaledValue, decimal_string
from .madhava_formulas import (
    F1,
    F2,
    F3,
    F4,
    ComputationResult,
    ConvergenceReport,
    CorrectionId,
    FormulaId,
    NoConvergenceError,
    correction_code,
    circumference,
    fixed_point,
    formula_code,
    scan_range,
    vanish_onset,
)
from .numerals import decode_bhutasamkhya, decode_katapayadi, encode_katapayadi, load_lexicon
from .reference_pi import matching_decimal_places, true_circumference
from .series_engine import (
    FLOOR_EACH_OP,
    NEAREST_EACH_OP,
    ExactFinal,
    Policy,
    RationalBackend,
    ScaledBackend,
    SeriesLedger,
    build_ledger,
    round_final,
)

TABLE_DIAMETER = 9 * 10**11
LEDGER_DIAMETER = 10**17


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep argparse from calling sys.exit directly
        raise UsageError(message)


def _plain_int(text: str) -> int:
    if not re.fullmatch(r"-?[0-9]+", text):
        raise argparse.ArgumentTypeError(
            f"plain decimal integer required (no exponents or dots): {text!r}"
        )
    return int(text)


def _make_policy(code: str, backend: str = "scaled", frac_digits: int = 40) -> Policy:
    if code == "floor":
        return FLOOR_EACH_OP
    if code == "nearest":
        return NEAREST_EACH_OP
    mode = RoundingMode.FLOOR if code == "final-floor" else RoundingMode.NEAREST_HALF_UP
    back = RationalBackend() if backend == "rational" else ScaledBackend(frac_digits)
    return ExactFinal(mode, back)


def _make_formula(code: str, correction: str) -> FormulaId:
    if code == "f1":
        return F1()
    if code == "f2":
        return F2(CorrectionId(correction))
    if code == "f3":
        return F3()
    return F4()


# ---------------------------------------------------------------------------
# rendering


def _cell(value) -> str:
    """Exact decimal rendering for ledger cells of any backend."""
    if isinstance(value, int):
        return str(value)
    if isinstance(value, ScaledValue):
        return value.decimal(6)
    if isinstance(value, Fraction):
        return decimal_string(value, 6)
    return str(value)


def _aligned(headers: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(headers[i]), max((len(r[i]) for r in rows), default=0))
        for i in range(len(headers))
    ]
    lines = [" | ".join(h.rjust(w) for h, w in zip(headers, widths)).rstrip()]
    for r in rows:
        lines.append(" | ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _csv_text(headers: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(records: list[dict]) -> str:
    return json.dumps(records, ensure_ascii=False, indent=2) + "\n"


def _ledger_rows(ledger: SeriesLedger) -> list[list]:
    return [
        [row.k, _cell(row.x), 2 * row.k - 1, row.sign, _cell(row.t)]
        for row in ledger.rows
    ]


def render(results, fmt: str = "table") -> str:
    """Render results (scan lists, ledgers, traces, reports) as text."""
    if isinstance(results, SeriesLedger):
        if fmt == "table":
            lines = ["k | x_k | div | sign | t_k"]
            for row in results.rows:
                sign = "+" if row.sign > 0 else "-"
                lines.append(
                    f"{row.k} | {_cell(row.x)} | (÷{2 * row.k - 1}) | {sign} | {_cell(row.t)}"
                )
            return "\n".join(lines) + "\n"
        headers = ["k", "x_k", "divisor", "sign", "t_k"]
        if fmt == "csv":
            return _csv_text(headers, _ledger_rows(results))
        return _json_text(
            [dict(zip(headers, row)) for row in _ledger_rows(results)]
        )
    if isinstance(results, SqrtTrace):
        return _render_trace(results, fmt)
    if isinstance(results, ConvergenceReport):
        return _render_report(results, fmt)
    return _render_result_list(list(results), fmt)


def _render_result_list(results: list[ComputationResult], fmt: str) -> str:
    records = [r.record() for r in results]
    headers = ["formula", "correction", "diameter", "n", "policy", "circumference"]
    if fmt == "csv":
        return _csv_text(headers, [[rec[h] for h in headers] for rec in records])
    if fmt == "json":
        return _json_text(records)
    if not records:
        return ""
    rows = [[str(rec["n"]), str(rec["circumference"])] for rec in records]
    return _aligned(["n", "circumference"], rows)


def _render_report(report: ConvergenceReport, fmt: str) -> str:
    record = {
        "formula": formula_code(report.formula),
        "correction": correction_code(report.formula),
        "diameter": report.diameter,
        "policy": str(report.policy),
        "fixed_value": report.fixed_value,
        "onset": report.onset,
        "method": str(report.method),
        "max_terms_examined": report.max_terms_examined,
    }
    if fmt == "csv":
        headers = list(record)
        return _csv_text(headers, [[record[h] for h in headers]])
    if fmt == "json":
        return _json_text([record])
    return "".join(f"{key} = {value}\n" for key, value in record.items())


def _trace_worksheet(trace: SqrtTrace) -> tuple[list[str], list[list[str]]]:
    rows = []
    root_so_far = ""
    for step in trace.steps:
        if step.digit_emitted is not None and step.place_kind == "odd":
            root_so_far += str(step.digit_emitted)
            note = f"floor(sqrt({step.working_value})) = {step.digit_emitted}"
            rows.append([f"{step.working_value} -", root_so_far, note])
            rows.append([str(step.subtracted), "", f"{step.digit_emitted}^2 = {step.subtracted}"])
        elif step.place_kind == "even":
            prev_root = step.divisor_or_square // 2
            root_so_far += str(step.digit_emitted)
            note = f"floor({step.working_value}/(2*{prev_root})) = {step.digit_emitted}"
            rows.append([f"{step.working_value} -", root_so_far, note])
            rows.append(
                [str(step.subtracted), "", f"{step.digit_emitted}*(2*{prev_root}) = {step.subtracted}"]
            )
        else:
            rows.append([f"{step.working_value} -", "", ""])
            digit = root_so_far[-1] if root_so_far else "?"
            rows.append([str(step.subtracted), "", f"{digit}^2 = {step.subtracted}"])
    return ["computations", "result", "notes"], rows


def _render_trace(trace: SqrtTrace, fmt: str) -> str:
    if fmt == "table":
        headers, rows = _trace_worksheet(trace)
        table = _aligned(headers, rows)
        return (
            f"n = {trace.input}\n"
            + table
            + f"root = {trace.root}\nremainder = {trace.remainder}\n"
        )
    headers = ["place", "working", "divisor_or_square", "digit", "subtracted"]
    rows = [
        [
            s.place_kind,
            s.working_value,
            s.divisor_or_square,
            "" if s.digit_emitted is None else s.digit_emitted,
            s.subtracted,
        ]
        for s in trace.steps
    ]
    if fmt == "csv":
        return _csv_text(headers, rows)
    return _json_text([dict(zip(headers, row)) for row in rows])


def _render_scan_all(
    n_values: list[int], columns: dict[str, list[int]], fmt: str
) -> str:
    headers = ["n"] + list(columns)
    rows = [
        [n] + [columns[name][i] for name in columns] for i, n in enumerate(n_values)
    ]
    if fmt == "csv":
        return _csv_text(headers, rows)
    if fmt == "json":
        return _json_text([dict(zip(headers, row)) for row in rows])
    return _aligned(headers, [[str(c) for c in row] for row in rows])


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_sqrt(args) -> str:
    if args.trace:
        return render(isqrt_traced(args.n), args.format)
    if args.frac_digits is not None:
        scaled = sqrt_scaled(args.n, args.frac_digits)
        return f"root = {scaled.decimal()}\n"
    if args.round == "nearest":
        return f"root = {isqrt_nearest(args.n)}\n"
    root, remainder = isqrt(args.n)
    return f"root = {root}\nremainder = {remainder}\n"


def _cmd_varman(args) -> str:
    policy = _make_policy(args.policy, args.backend, args.frac_digits)
    ledger = build_ledger(args.diameter, policy, args.terms)
    if isinstance(policy, ExactFinal):
        c_value = round_final(ledger.circumference, policy)
    else:
        c_value = ledger.circumference
    out = []
    if args.ledger:
        out.append(render(ledger, args.format))
        if args.format != "table":
            return "".join(out)
    out.append(
        f"terms = {len(ledger.rows)}\n"
        f"O = {_cell(ledger.odd_sum)}\n"
        f"E = {_cell(ledger.even_sum)}\n"
        f"C = {c_value}\n"
    )
    return "".join(out)


def _cmd_circumference(args) -> str:
    formula = _make_formula(args.formula, args.correction)
    policy = _make_policy(args.policy, args.backend, args.frac_digits)
    result = circumference(formula, args.diameter, args.terms, policy)
    if args.format == "table":
        return f"{result.circumference}\n"
    return render([result], args.format)


def _scan_all_columns(args) -> tuple[list[int], dict[str, list[int]]]:
    formula = _make_formula(args.formula, args.correction)
    final_code = f"final-{args.final_mode}"
    columns: dict[str, list[int]] = {}
    for code in ("floor", "nearest", final_code):
        policy = _make_policy(code, args.backend, args.frac_digits)
        results = scan_range(formula, args.diameter, policy, args.n_from, args.n_to)
        columns[code.replace("-", "_")] = [r.circumference for r in results]
    return list(range(args.n_from, args.n_to + 1)), columns


def _cmd_scan(args) -> str:
    if args.policy == "all":
        n_values, columns = _scan_all_columns(args)
        return _render_scan_all(n_values, columns, args.format)
    formula = _make_formula(args.formula, args.correction)
    policy = _make_policy(args.policy, args.backend, args.frac_digits)
    results = scan_range(formula, args.diameter, policy, args.n_from, args.n_to)
    return render(results, args.format)


def _cmd_fixed_point(args) -> str:
    formula = _make_formula(args.formula, args.correction)
    policy = _make_policy(args.policy, args.backend, args.frac_digits)
    report = fixed_point(formula, args.diameter, policy, args.window, args.max_terms)
    return render(report, args.format)


def _cmd_onset(args) -> str:
    formula = _make_formula(args.formula, "c3")
    policy = _make_policy(args.policy)
    return f"{vanish_onset(formula, args.diameter, policy)}\n"


def _cmd_decode(args) -> str:
    if args.system == "katapayadi":
        return f"{decode_katapayadi(args.tokens)}\n"
    lexicon = load_lexicon(args.lexicon) if args.lexicon else None
    return f"{decode_bhutasamkhya(args.tokens, lexicon)}\n"


def _cmd_encode(args) -> str:
    tokens = encode_katapayadi(args.n)
    return " ".join(t.text for t in tokens) + "\n"


def _cmd_compare(args) -> str:
    places = matching_decimal_places(args.circumference, args.diameter)
    floor_true = true_circumference(args.diameter, RoundingMode.FLOOR)
    nearest_true = true_circumference(args.diameter, RoundingMode.NEAREST_HALF_UP)
    return (
        f"matching_decimal_places = {places}\n"
        f"true_floor = {floor_true}\n"
        f"true_nearest = {nearest_true}\n"
        f"error_vs_floor = {args.circumference - floor_true:+d}\n"
        f"error_vs_nearest = {args.circumference - nearest_true:+d}\n"
    )


# ---------------------------------------------------------------------------
# reference tables


def _reproduce_varman_ledger() -> str:
    return render(build_ledger(LEDGER_DIAMETER, FLOOR_EACH_OP), "table")


def _scan_table(formula: FormulaId, n_from: int, n_to: int, final_mode: RoundingMode) -> str:
    n_values = list(range(n_from, n_to + 1))
    columns = {}
    for name, policy in (
        ("floor", FLOOR_EACH_OP),
        ("nearest", NEAREST_EACH_OP),
        (f"final_{final_mode.value}", ExactFinal(final_mode, ScaledBackend(40))),
    ):
        results = scan_range(formula, TABLE_DIAMETER, policy, n_from, n_to)
        columns[name] = [r.circumference for r in results]
    return _render_scan_all(n_values, columns, "table")


def _reproduce_f3_fixed_points() -> str:
    rows = []
    for policy in (FLOOR_EACH_OP, NEAREST_EACH_OP,
                   ExactFinal(RoundingMode.NEAREST_HALF_UP, ScaledBackend(40))):
        report = fixed_point(F3(), TABLE_DIAMETER, policy, window=50, max_terms=10**4)
        rows.append(
            [str(report.policy), str(report.fixed_value), str(report.onset), str(report.method)]
        )
    return _aligned(["policy", "fixed_value", "onset", "method"], rows)


_REPRODUCERS = {
    "varman-ledger": _reproduce_varman_ledger,
    "table2": lambda: _scan_table(F1(), 18, 27, RoundingMode.FLOOR),
    "table3": lambda: _scan_table(F2(CorrectionId.C3), 35, 65, RoundingMode.FLOOR),
    "table-f4": lambda: _scan_table(F4(), 210, 250, RoundingMode.NEAREST_HALF_UP),
    "f3-fixed-points": _reproduce_f3_fixed_points,
}


def _cmd_reproduce(args) -> str:
    return _REPRODUCERS[args.table]()


# ---------------------------------------------------------------------------
# parser


def _add_backend_flags(sub) -> None:
    sub.add_argument("--backend", choices=["scaled", "rational"], default="scaled")
    sub.add_argument("--frac-digits", type=int, default=40)


def _add_format_flag(sub) -> None:
    sub.add_argument("--format", choices=["table", "csv", "json"], default="table")


POLICY_CHOICES = ["floor", "nearest", "final-floor", "final-nearest"]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paridhi", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("sqrt", help="integer square root by the digit-pair method")
    p.add_argument("n", type=_plain_int)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--round", choices=["floor", "nearest"], default="floor")
    p.add_argument("--frac-digits", type=int, default=None)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_sqrt)

    p = subs.add_parser("varman", help="root-12 series ledger and circumference")
    p.add_argument("--diameter", type=_plain_int, required=True)
    p.add_argument("--policy", choices=POLICY_CHOICES, default="floor")
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--ledger", action="store_true")
    _add_backend_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_varman)

    p = subs.add_parser("circumference", help="evaluate one formula at n terms")
    p.add_argument("--formula", choices=["f1", "f2", "f3", "f4"], required=True)
    p.add_argument("--correction", choices=["c1", "c2", "c3"], default="c3")
    p.add_argument("--diameter", type=_plain_int, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--policy", choices=POLICY_CHOICES, required=True)
    _add_backend_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_circumference)

    p = subs.add_parser("scan", help="evaluate a formula over a range of n")
    p.add_argument("--formula", choices=["f1", "f2", "f3", "f4"], required=True)
    p.add_argument("--correction", choices=["c1", "c2", "c3"], default="c3")
    p.add_argument("--diameter", type=_plain_int, required=True)
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--policy", choices=POLICY_CHOICES + ["all"], required=True)
    p.add_argument("--final-mode", choices=["floor", "nearest"], default="nearest",
                   help="final rounding used for the third column of --policy all")
    _add_backend_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_scan)

    p = subs.add_parser("fixed-point", help="detect the value a series settles on")
    p.add_argument("--formula", choices=["f1", "f2", "f3", "f4"], required=True)
    p.add_argument("--correction", choices=["c1", "c2", "c3"], default="c3")
    p.add_argument("--diameter", type=_plain_int, required=True)
    p.add_argument("--policy", choices=POLICY_CHOICES, required=True)
    p.add_argument("--window", type=int, default=50)
    p.add_argument("--max-terms", type=int, default=10**4)
    _add_backend_flags(p)
    _add_format_flag(p)
    p.set_defaults(handler=_cmd_fixed_point)

    p = subs.add_parser("onset", help="smallest n whose rounded term vanishes")
    p.add_argument("--formula", choices=["f3", "f4"], required=True)
    p.add_argument("--policy", choices=["floor", "nearest"], required=True)
    p.add_argument("--diameter", type=_plain_int, required=True)
    p.set_defaults(handler=_cmd_onset)

    p = subs.add_parser("decode", help="decode letter- or word-numerals")
    p.add_argument("--system", choices=["katapayadi", "bhutasamkhya"], required=True)
    p.add_argument("--lexicon", default=None)
    p.add_argument("tokens", nargs="+")
    p.set_defaults(handler=_cmd_decode)

    p = subs.add_parser("encode", help="encode an integer as letter-numerals")
    p.add_argument("--system", choices=["katapayadi"], default="katapayadi")
    p.add_argument("n", type=_plain_int)
    p.set_defaults(handler=_cmd_encode)

    p = subs.add_parser("compare", help="compare a circumference with the reference")
    p.add_argument("--circumference", type=_plain_int, required=True)
    p.add_argument("--diameter", type=_plain_int, required=True)
    p.set_defaults(handler=_cmd_compare)

    p = subs.add_parser("reproduce", help="emit a reference table")
    p.add_argument("--table", choices=sorted(_REPRODUCERS), required=True)
    p.set_defaults(handler=_cmd_reproduce)

    return parser


def execute(argv: list[str]) -> tuple[int, str, str]:
    """Run one command line; returns (exit_code, stdout, stderr)."""
    parser = build_parser()
    captured_out, captured_err = io.StringIO(), io.StringIO()
    try:
        with redirect_stdout(captured_out), redirect_stderr(captured_err):
            args = parser.parse_args(argv)
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0), captured_out.getvalue(), captured_err.getvalue()
    except UsageError as exc:
        usage = parser.format_usage()
        return 2, "", f"error: {exc}\n{usage}"
    try:
        return 0, args.handler(args), ""
    except UsageError as exc:
        return 2, "", f"error: {exc}\n"
    except (DomainError, NoConvergenceError) as exc:
        return 1, "", f"error: {exc}\n"


def main(argv: list[str] | None = None) -> int:
    import sys

    code, out, err = execute(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

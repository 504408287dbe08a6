"""Command-line front end.

Exit codes: 0 on success, 1 when a requested check fails, 2 on bad
arguments, unreadable files, or malformed JSON.  All numeric output is
exact rational text.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import acceptance
from .curvature import (
    check_parallel_four_term,
    curvature_symmetries,
    holonomy_algebra,
    model_from_json_dict,
    so_isomorphism,
    symmetric_triple,
    triple_from_rep,
    triple_to_json_dict,
    verify_lie_type,
)
from .diagram_space import quotient_dimension
from .diagrams import ChordDiagram, enumerate_diagrams
from .jsonio import JSONFormatError, format_matrix, parse_matrix
from .lie import check_exchange_identity, representation_from_json_dict
from .tensors import (
    WeightTensor,
    WorkLimitExceeded,
    check_four_term,
    evaluate,
    evaluate_naive,
    validate_symmetry,
)
from .yamada import yamada_weight

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class CLIError(Exception):
    """Input problem that should abort with exit code 2."""


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CLIError(f"{path}: not valid JSON ({exc})") from None


def _parse_diagram(code: str) -> ChordDiagram:
    try:
        return ChordDiagram.from_code(code)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _csv_writer(out):
    return csv.writer(out, lineterminator="\n")


def _matrix_lines(matrix, indent="  "):
    if not matrix:
        return [indent + "(empty)"]
    widths = [max(len(str(row[j])) for row in matrix)
              for j in range(len(matrix[0]))]
    return [indent + "  ".join(str(v).rjust(w) for v, w in zip(row, widths))
            for row in matrix]


def _bracket_lines(brackets, prefix="h"):
    m = len(brackets)
    lines = []
    for i in range(m):
        for j in range(i + 1, m):
            terms = [f"{c}*{prefix}{k}"
                     for k, c in enumerate(brackets[i][j]) if c]
            rhs = " + ".join(terms) if terms else "0"
            lines.append(f"[{prefix}{i}, {prefix}{j}] = {rhs}")
    return lines


def _tensor_from_args(args) -> WeightTensor:
    """Build the weight tensor named by --tensor/--lie/--curvature."""
    if args.tensor:
        return WeightTensor.from_json_dict(_load_json(args.tensor))
    if args.lie:
        rep = representation_from_json_dict(_load_json(args.lie))
        ok, why = rep.algebra.validate()
        if not ok:
            raise CLIError(f"{args.lie}: not a metrized Lie algebra: {why}")
        ok, why = rep.validate()
        if not ok:
            raise CLIError(f"{args.lie}: not a representation: {why}")
        return rep.weight_tensor()
    model = model_from_json_dict(_load_json(args.curvature))
    ok, why = model.validate()
    if not ok:
        raise CLIError(f"{args.curvature}: invalid curvature model: {why}")
    return model.weight_tensor()


def _cmd_enumerate(args, out) -> int:
    diagrams = enumerate_diagrams(args.n)
    codes = [d.code for d in diagrams]
    if args.format == "json":
        json.dump({"n": args.n, "codes": codes}, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["code"])
        for code in codes:
            writer.writerow([code])
    else:
        for code in codes:
            out.write((code or "(empty)") + "\n")
    return EXIT_OK


def _cmd_dims(args, out) -> int:
    kind = "unframed" if args.unframed else "framed"
    rows = [(n, quotient_dimension(n, kind)) for n in range(args.max_n + 1)]
    if args.format == "json":
        payload = [{"n": n, "kind": kind, "dimension": dim} for n, dim in rows]
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["n", "kind", "dimension"])
        for n, dim in rows:
            writer.writerow([n, kind, dim])
    else:
        for n, dim in rows:
            out.write(f"{n} {dim}\n")
    return EXIT_OK


def _emit_value(args, out, diagram_code: str, value: Fraction) -> int:
    if args.format == "json":
        json.dump({"diagram": diagram_code, "value": str(value)}, out)
        out.write("\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["diagram", "value"])
        writer.writerow([diagram_code, str(value)])
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _cmd_eval(args, out) -> int:
    diagram = _parse_diagram(args.diagram)
    tensor = _tensor_from_args(args)
    try:
        if args.naive:
            value = evaluate_naive(tensor, diagram)
        else:
            value = evaluate(tensor, diagram)
    except WorkLimitExceeded as exc:
        raise CLIError(str(exc)) from None
    return _emit_value(args, out, args.diagram, value)


def _cmd_yamada(args, out) -> int:
    diagram = _parse_diagram(args.diagram)
    try:
        loop = Fraction(args.N)
    except (ValueError, ZeroDivisionError):
        raise CLIError(f"--N {args.N!r} is not a rational number") from None
    value = yamada_weight(diagram, loop)
    return _emit_value(args, out, args.diagram, value)


def _emit_checks(args, out, rows) -> int:
    ok_all = all(ok for _, ok, _ in rows)
    if args.format == "json":
        payload = {
            "ok": ok_all,
            "checks": [
                {"name": name, "ok": ok,
                 "witness": None if witness is None else str(witness)}
                for name, ok, witness in rows
            ],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["name", "ok", "witness"])
        for name, ok, witness in rows:
            writer.writerow([name, "pass" if ok else "fail",
                             "" if witness is None else str(witness)])
    else:
        for name, ok, witness in rows:
            line = f"{name}: {'pass' if ok else 'fail'}"
            if not ok and witness is not None:
                line += f" at {witness}"
            out.write(line + "\n")
    return EXIT_OK if ok_all else EXIT_CHECK_FAILED


def _cmd_check(args, out) -> int:
    rows = []
    if args.tensor:
        tensor = WeightTensor.from_json_dict(_load_json(args.tensor))
        rows.append(("leg-symmetry", validate_symmetry(tensor), None))
        ok, witness = check_four_term(tensor)
        rows.append(("four-term", ok, witness))
    elif args.lie:
        rep = representation_from_json_dict(_load_json(args.lie))
        ok, why = rep.algebra.validate()
        rows.append(("metrized-algebra", ok, why))
        rep_ok, why = rep.validate()
        rows.append(("representation", rep_ok, why))
        if ok and rep_ok:
            tensor = rep.weight_tensor()
            rows.append(("leg-symmetry", validate_symmetry(tensor), None))
            ok, witness = check_four_term(tensor)
            rows.append(("four-term", ok, witness))
            ok, witness = check_exchange_identity(rep)
            rows.append(("exchange-identity", ok, witness))
    else:
        model = model_from_json_dict(_load_json(args.curvature))
        ok, why = model.validate()
        rows.append(("curvature-model", ok, why))
        if ok:
            pok, witness = check_parallel_four_term(model)
            rows.append(("parallel-four-term", pok, witness))
            tok, witness = check_four_term(model.weight_tensor())
            rows.append(("four-term", tok, witness))
    return _emit_checks(args, out, rows)


def _cmd_holonomy(args, out) -> int:
    model = model_from_json_dict(_load_json(args.curvature))
    ok, why = model.validate()
    if not ok:
        print(f"invalid curvature model: {why}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    pok, witness = check_parallel_four_term(model)
    if not pok:
        print(f"parallel four-term identity fails at {witness}",
              file=sys.stderr)
        return EXIT_CHECK_FAILED
    hol = holonomy_algebra(model, check_model=False)
    triple = symmetric_triple(model, check_model=False)
    triple_ok, triple_why = triple.validate()
    lie_type_ok, lie_type_why = verify_lie_type(model)
    iso = so_isomorphism(hol)
    d = model.dim
    if args.format == "json":
        payload = {
            "dim_h": hol.dim_h,
            "labels": [list(pair) for pair in hol.labels],
            "form": format_matrix(hol.form),
            "nondegenerate": hol.nondegenerate,
            "triple": triple_to_json_dict(triple),
            "triple_valid": triple_ok,
            "so_isomorphic": iso is not None,
            "casimir_matches": lie_type_ok,
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        out.write(f"dim_h={hol.dim_h}\n")
        labels = " ".join(f"({a},{b})" for a, b in hol.labels)
        out.write(f"generator labels: {labels or '(none)'}\n")
        for line in _bracket_lines(hol.brackets):
            out.write(line + "\n")
        out.write("B_h:\n")
        for line in _matrix_lines(hol.form):
            out.write(line + "\n")
        out.write(f"B_h nondegenerate: {'yes' if hol.nondegenerate else 'no'}\n")
        out.write(
            f"triple: dim {triple.dim} = {triple.dim_h} + {triple.dim_p}, "
            f"valid: {'yes' if triple_ok else 'no'}\n"
        )
        if not triple_ok:
            out.write(f"  reason: {triple_why}\n")
        out.write(f"isomorphic to so{d}: {'yes' if iso is not None else 'no'}\n")
        out.write(f"rho(C_h) == Hhat: {'yes' if lie_type_ok else 'no'}\n")
        if not lie_type_ok:
            out.write(f"  reason: {lie_type_why}\n")
    return EXIT_OK if triple_ok and lie_type_ok else EXIT_CHECK_FAILED


def _cmd_realize(args, out) -> int:
    rep = representation_from_json_dict(_load_json(args.lie))
    ok, why = rep.algebra.validate()
    if not ok:
        raise CLIError(f"{args.lie}: not a metrized Lie algebra: {why}")
    ok, why = rep.validate()
    if not ok:
        raise CLIError(f"{args.lie}: not a representation: {why}")
    form = parse_matrix(_load_json(args.form), "form",
                        rows=rep.dimV, cols=rep.dimV)
    try:
        verdict, witness = curvature_symmetries(rep, form)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    triple = None
    note = None
    if verdict == "pass":
        try:
            triple = triple_from_rep(rep, form)
        except ValueError as exc:
            note = str(exc)
    if args.format == "json":
        payload = {
            "verdict": verdict,
            "witness": None if witness is None else list(witness),
        }
        if triple is not None:
            payload["triple"] = triple_to_json_dict(triple)
        if note is not None:
            payload["note"] = note
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        line = f"verdict: {verdict}"
        if witness is not None:
            line += f" at {witness}"
        out.write(line + "\n")
        if triple is not None:
            out.write(
                f"triple: dim {triple.dim} = {triple.dim_h} + {triple.dim_p}\n"
            )
            for line in _bracket_lines(triple.brackets, prefix="e"):
                out.write(line + "\n")
        if note is not None:
            out.write(f"note: {note}\n")
    return EXIT_OK if verdict == "pass" else EXIT_CHECK_FAILED


def _cmd_verify(args, out) -> int:
    results = acceptance.run_all()
    ok_all = all(ok for _, _, ok, _ in results)
    if args.format == "json":
        payload = [
            {"criterion": number, "label": label, "ok": ok, "detail": detail}
            for number, label, ok, detail in results
        ]
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["criterion", "label", "ok", "detail"])
        for number, label, ok, detail in results:
            writer.writerow([number, label, "pass" if ok else "fail", detail])
    else:
        for number, label, ok, detail in results:
            status = "PASS" if ok else "FAIL"
            out.write(f"criterion {number} ({label}): {status} - {detail}\n")
    return EXIT_OK if ok_all else EXIT_CHECK_FAILED


def _add_format(sub, choices=("text", "json", "csv")):
    sub.add_argument("--format", choices=choices, default="text",
                     help="output format (default text)")


def _add_input_group(sub):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--tensor", metavar="FILE",
                       help="weight tensor JSON file")
    group.add_argument("--lie", metavar="FILE",
                       help="metrized Lie algebra representation JSON file")
    group.add_argument("--curvature", metavar="FILE",
                       help="curvature model JSON file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordweight",
        description="Framed weight systems on chord diagrams, exactly.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sub = subs.add_parser("enumerate", help="list canonical diagram codes")
    sub.add_argument("--n", type=int, required=True, help="number of chords")
    _add_format(sub)
    sub.set_defaults(handler=_cmd_enumerate)

    sub = subs.add_parser("dims", help="quotient dimension table")
    sub.add_argument("--max-n", type=int, required=True, dest="max_n")
    sub.add_argument("--unframed", action="store_true",
                     help="impose the one-term relations as well")
    _add_format(sub)
    sub.set_defaults(handler=_cmd_dims)

    sub = subs.add_parser("eval", help="evaluate a weight system on a diagram")
    _add_input_group(sub)
    sub.add_argument("--diagram", required=True, metavar="CODE",
                     help='diagram code such as "ABAB"')
    sub.add_argument("--naive", action="store_true",
                     help="use the exhaustive-sum evaluator")
    _add_format(sub)
    sub.set_defaults(handler=_cmd_eval)

    sub = subs.add_parser("check", help="run the identity checks for an input")
    _add_input_group(sub)
    _add_format(sub)
    sub.set_defaults(handler=_cmd_check)

    sub = subs.add_parser("holonomy",
                          help="holonomy algebra and symmetric triple")
    sub.add_argument("--curvature", required=True, metavar="FILE")
    _add_format(sub, choices=("text", "json"))
    sub.set_defaults(handler=_cmd_holonomy)

    sub = subs.add_parser("realize",
                          help="curvature-symmetry verdict for a representation")
    sub.add_argument("--lie", required=True, metavar="FILE")
    sub.add_argument("--form", required=True, metavar="FILE",
                     help="JSON matrix for the form on the representation space")
    _add_format(sub, choices=("text", "json"))
    sub.set_defaults(handler=_cmd_realize)

    sub = subs.add_parser("yamada", help="combinatorial state-sum weight")
    sub.add_argument("--diagram", required=True, metavar="CODE")
    sub.add_argument("--N", default="3",
                     help="loop value (rational, default 3)")
    _add_format(sub)
    sub.set_defaults(handler=_cmd_yamada)

    sub = subs.add_parser("verify", help="run the acceptance suite")
    _add_format(sub)
    sub.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, sys.stdout)
    except (CLIError, JSONFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

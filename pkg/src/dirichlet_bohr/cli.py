"""Command line interface: ``dirichlet-bohr <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 library domain/precision error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from typing import Any

from . import solver
from .errors import BohrError
from .lift import lattice_for_degree, lift, read_polynomial, rogosinski_halfplane_bound
from .oracles import cached_direct_sum
from .primes import build_prime_table
from .verification import run_checks
from .zeta import DEFAULT_POLICY, almost_prime_zeta, bohr_sum, prime_zeta

PAPER_TARGETS = {"bohr": solver.BOHR_TARGET, "mixed": solver.MIXED_TARGET}
PAPER_CITATIONS = {"bohr": ["Thm 3.1", "Eq. 3.3"], "mixed": ["Thm 3.3", "Eq. 3.5"]}


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    parameters: dict
    value: Any
    error_bound: float | None = None
    citations: list[str] = field(default_factory=list)
    provenance: str = "computed"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _sweep(text: str) -> tuple[float, float, float]:
    try:
        lo, hi, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi:step, got {text!r}") from None
    if not step > 0 or hi < lo:
        raise argparse.ArgumentTypeError("sweep needs step > 0 and hi >= lo")
    return lo, hi, step


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--precision", type=int, default=10, help="printed significant digits")
    common.add_argument("--prime-limit", type=int, default=10**6, help="sieve limit for oracles")
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--quiet", action="store_true")

    parser = _Parser(prog="dirichlet-bohr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("abscissa", parents=[common], help="solve F(sigma) = target")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--target", type=float)
    g.add_argument("--paper", choices=sorted(PAPER_TARGETS))

    p = sub.add_parser("rogosinski-radius", parents=[common])
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alternate-r2", action="store_true", help="use sqrt(3/8) for l = 2")

    p = sub.add_parser("prime-zeta", parents=[common])
    p.add_argument("--s", type=float, required=True)

    p = sub.add_parser("almost-prime-zeta", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=float, required=True)

    p = sub.add_parser("bohr-sum", parents=[common])
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--sigma", type=float)
    g.add_argument("--sweep", type=_sweep, metavar="LO:HI:STEP")

    p = sub.add_parser("lift", parents=[common])
    p.add_argument("--input", required=True)

    p = sub.add_parser("lattice", parents=[common])
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("rogosinski-bound", parents=[common])
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("oracle")
    osub = p.add_subparsers(dest="oracle_command", required=True, parser_class=_Parser)
    q = osub.add_parser("direct-sum", parents=[common])
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--s", type=float, required=True)
    q.add_argument("--N", type=int, required=True)

    sub.add_parser("verify", parents=[common])
    return parser


def _cmd_abscissa(args) -> list[OutputRecord]:
    target = PAPER_TARGETS[args.paper] if args.paper else args.target
    tol = args.tol if args.tol is not None else solver.DEFAULT_TOL
    r = solver.solve_abscissa(target, DEFAULT_POLICY, tol)
    payload = {
        "root": r.root,
        "bracket": list(r.bracket),
        "residual": {"value": r.residual.value, "error": r.residual.error},
        "iterations": r.iterations,
        "policy": asdict(r.policy),
    }
    params = {"target": target, "tol": tol}
    cites = []
    if args.paper:
        params["paper"] = args.paper
        cites = PAPER_CITATIONS[args.paper]
    records = [OutputRecord("abscissa", params, payload, 0.5 * (r.bracket[1] - r.bracket[0]), cites)]
    if args.paper == "bohr":
        records.append(
            OutputRecord("abscissa", {"reference": "published"}, 1.7267, None, ["Thm 3.1"], "cited")
        )
        records.append(
            OutputRecord(
                "abscissa", {"reference": "prior upper bound"},
                solver.CITED_CONSTANTS["bohr_abscissa_upper_bound_prior"], None, ["Thm 1.6"], "cited",
            )
        )
        records.append(
            OutputRecord(
                "abscissa", {"reference": "lower bound log3/log2"},
                solver.CITED_CONSTANTS["bohr_abscissa_lower_bound"], None, ["Thm 1.6", "Cor 3.2"], "cited",
            )
        )
    elif args.paper == "mixed":
        records.append(
            OutputRecord("abscissa", {"reference": "published"}, 1.2061, None, ["Thm 3.3"], "cited")
        )
        records.append(
            OutputRecord(
                "abscissa", {"reference": "prior bound"},
                solver.CITED_CONSTANTS["mixed_sigma_bound_prior"], None, ["Thm 1.6"], "cited",
            )
        )
    return records


def _cmd_rogosinski_radius(args) -> list[OutputRecord]:
    tol = args.tol if args.tol is not None else 1e-13
    r = solver.rogosinski_radius(args.l, tol=tol, alternate_r2=args.alternate_r2)
    params = {"l": args.l}
    if args.l == 2:
        params["r2_reading"] = "sqrt(3/8)" if args.alternate_r2 else "sqrt(3)/8"
    return [OutputRecord("rogosinski-radius", params, r, None, ["Thm 1.4"])]


def _enclosure_record(command, params, enc, cites) -> OutputRecord:
    return OutputRecord(command, params, enc.value, enc.error, cites)


def _cmd_bohr_sum(args) -> list[OutputRecord]:
    if args.sigma is not None:
        return [_enclosure_record("bohr-sum", {"sigma": args.sigma}, bohr_sum(args.sigma), ["Eq. 3.3"])]
    lo, hi, step = args.sweep
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [
        _enclosure_record("bohr-sum", {"sigma": lo + i * step}, bohr_sum(lo + i * step), ["Eq. 3.3"])
        for i in range(count)
    ]


def _cmd_lift(args) -> list[OutputRecord]:
    poly = read_polynomial(args.input)
    expansion = lift(poly, build_prime_table(max(poly.degree, 2)))
    payload = {
        "prime_basis": list(expansion.prime_basis),
        "terms": [
            {"coefficient": [c.real, c.imag], "exponents": list(a)} for c, a in expansion.terms
        ],
    }
    return [OutputRecord("lift", {"input": args.input, "degree": poly.degree}, payload, None, ["Eq. 2.1"])]


def _cmd_lattice(args) -> list[OutputRecord]:
    spec = lattice_for_degree(args.k, build_prime_table(max(args.k, 2)))
    payload = {
        "prime_basis": list(spec.prime_basis),
        "integer_weights": list(spec.integer_weights),
        "integer_bound": spec.integer_bound,
        "scale": spec.scale,
        "points": [list(a) for a in spec.points],
        "verified": True,
    }
    return [OutputRecord("lattice", {"k": args.k}, payload, None, ["Eq. 2.3", "Eq. 2.4", "Thm 1.4"])]


def _cmd_rogosinski_bound(args) -> list[OutputRecord]:
    tol = args.tol if args.tol is not None else 1e-13
    b = rogosinski_halfplane_bound(args.k, build_prime_table(max(args.k, 2)), tol)
    return [OutputRecord("rogosinski-bound", {"k": args.k}, b, None, ["Thm 1.4", "Eq. 2.4"])]


def _cmd_oracle(args) -> list[OutputRecord]:
    report = cached_direct_sum(args.k, args.s, args.N, lambda: build_prime_table(args.prime_limit))
    params = {"k": args.k, "s": args.s, "N": args.N}
    return [OutputRecord("oracle direct-sum", params, report.value, report.tail_bound, ["Eq. 3.3"])]


def _cmd_verify(args) -> list[OutputRecord]:
    return [
        OutputRecord(
            "verify",
            {"criterion": c.criterion, "check": c.name, "detail": c.detail},
            "pass" if c.passed else "fail",
        )
        for c in run_checks(args.prime_limit)
    ]


def _round(x: Any, digits: int) -> Any:
    if isinstance(x, float):
        return float(f"{x:.{digits}g}") if math.isfinite(x) else x
    if isinstance(x, dict):
        return {k: _round(v, digits) for k, v in x.items()}
    if isinstance(x, list):
        return [_round(v, digits) for v in x]
    return x


def _text(x: Any, digits: int) -> str:
    if isinstance(x, float):
        return f"{x:.{digits}g}"
    if isinstance(x, (dict, list)):
        return json.dumps(_round(x, digits), sort_keys=True)
    return str(x)


def render(records: list[OutputRecord], fmt: str, digits: int, command: str) -> str:
    if fmt == "json":
        data = [_round(asdict(r), digits) for r in records]
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    if fmt == "csv" or command == "bohr-sum" and len(records) > 1:
        writer = csv.writer(buf, lineterminator="\n")
        if command == "bohr-sum":
            writer.writerow(["sigma", "value", "error"])
            for r in records:
                writer.writerow([_text(r.parameters["sigma"], digits), _text(r.value, digits), _text(r.error_bound, digits)])
        else:
            writer.writerow(["command", "parameters", "value", "error_bound", "citations", "provenance"])
            for r in records:
                writer.writerow([
                    r.command, _text(r.parameters, digits), _text(r.value, digits),
                    "" if r.error_bound is None else _text(r.error_bound, digits),
                    ";".join(r.citations), r.provenance,
                ])
        return buf.getvalue()
    if command == "verify":
        for r in records:
            p = r.parameters
            buf.write(f"[{r.value.upper()}] {p['criterion']}. {p['check']}")
            buf.write(f"  ({p['detail']})\n" if p["detail"] else "\n")
        failed = sum(r.value == "fail" for r in records)
        buf.write(f"{len(records) - failed}/{len(records)} criteria passed\n")
        return buf.getvalue()
    for r in records:
        params = ", ".join(f"{k}={_text(v, digits)}" for k, v in r.parameters.items())
        line = f"{r.command} [{params}]: {_text(r.value, digits)}"
        if r.error_bound is not None:
            line += f" ± {_text(r.error_bound, digits)}"
        if r.citations:
            line += f"  ({', '.join(r.citations)}; {r.provenance})"
        else:
            line += f"  ({r.provenance})"
        buf.write(line + "\n")
    return buf.getvalue()


HANDLERS = {
    "abscissa": _cmd_abscissa,
    "rogosinski-radius": _cmd_rogosinski_radius,
    "prime-zeta": lambda a: [_enclosure_record("prime-zeta", {"s": a.s}, prime_zeta(a.s), [])],
    "almost-prime-zeta": lambda a: [
        _enclosure_record("almost-prime-zeta", {"k": a.k, "s": a.s}, almost_prime_zeta(a.k, a.s), ["Eq. 3.3"])
    ],
    "bohr-sum": _cmd_bohr_sum,
    "lift": _cmd_lift,
    "lattice": _cmd_lattice,
    "rogosinski-bound": _cmd_rogosinski_bound,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.precision < 1:
            raise UsageError("--precision must be >= 1")
    except UsageError as exc:
        print(exc, file=stderr)
        return 1
    try:
        records = HANDLERS[args.command](args)
    except BohrError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.command == "verify" and args.quiet and args.format == "text":
        failed = sum(r.value == "fail" for r in records)
        stdout.write(f"{len(records) - failed}/{len(records)} criteria passed\n")
    else:
        stdout.write(render(records, args.format, args.precision, args.command))
    if args.command == "verify" and any(r.value == "fail" for r in records):
        return 3
    return 0


def main() -> None:
    raise SystemExit(run())

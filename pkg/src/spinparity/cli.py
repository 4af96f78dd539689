"""Command-line entry point: ``verify``, ``sweep`` and ``state``.

Exit codes: 0 success, 1 failed check, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import verify
from .concurrence import Method, entanglement_entropy, eof_from_concurrence
from .density import Convention, bloch_decompose, trace_power
from .errors import SpinParityError
from .families import FAMILIES, PARAMETERS, FamilyParams, build_state, concurrence, default_method
from .spinors import as_sign

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
QUANTITIES = ("concurrence", "purity", "trace_power", "bloch_norms")
CSV_HEADER = ("param", "convention", "quantity", "value", "residual")


class UsageError(Exception):
    pass


# -- argument parsing ----------------------------------------------------------


def parse_grid(text: str) -> list[float]:
    """``"a,b,c"`` or ``"lin:start:stop:num"`` (endpoints included)."""
    try:
        if text.startswith("lin:"):
            _, start, stop, num = text.split(":")
            n = int(num)
            if n < 1:
                raise ValueError
            return [float(x) for x in np.linspace(float(start), float(stop), n)]
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse grid {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("grid must not be empty")
    return values


def parse_vector(text: str) -> tuple[float, float, float]:
    try:
        v = tuple(float(tok) for tok in text.split(","))
    except ValueError:
        v = ()
    if len(v) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    return v


def _family_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--convention", choices=[c.value for c in Convention], default="hermitian")
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--mu", type=float, default=0.3, help="magnetic moment")
    p.add_argument("--bfield", type=float, default=1.0, help="|B|")
    p.add_argument("--eta", type=float, default=0.0, help="boost rapidity")
    p.add_argument("--q", type=float, default=0.5, help="mixture weight")
    p.add_argument("--angle", type=float, default=None, help="tilt angle in radians")
    p.add_argument("--sign", choices=["plus", "minus"], default="plus")
    p.add_argument("--spin", type=int, choices=[1, 2], default=1)
    p.add_argument("--spin-axis", type=parse_vector, default=(1.0, 0.0, 0.0))
    p.add_argument("--field-axis", type=parse_vector, default=(0.0, 0.0, 1.0))
    p.add_argument("--boost-axis", type=parse_vector, default=(0.0, 0.0, 1.0))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinparity", description="Spin-parity entanglement of Dirac bispinors.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the invariant checks")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--json", action="store_true", help="print the report as JSON")
    v.add_argument("--perturb", type=float, default=0.0, help="noise added to boost operators (fault injection)")

    family = _family_options()
    s = sub.add_parser("sweep", parents=[family], help="tabulate a quantity over a parameter grid")
    s.add_argument("--quantity", choices=QUANTITIES, default="concurrence")
    s.add_argument("--param", choices=PARAMETERS, default="eta")
    s.add_argument("--grid", type=parse_grid, required=True)
    s.add_argument("--method", choices=[m.value for m in Method], default=None)
    s.add_argument("--power", type=int, default=2, help="exponent for trace_power")
    s.add_argument("--out", default="-", help="output CSV path, '-' for stdout")
    s.add_argument("--jobs", type=int, default=1)

    st = sub.add_parser("state", parents=[family], help="print a density matrix and its quantifiers")
    st.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def family_params(args) -> FamilyParams:
    return FamilyParams(
        family=args.family,
        convention=Convention(args.convention),
        m=args.mass,
        mu=args.mu,
        bmag=args.bfield,
        eta=args.eta,
        q=args.q,
        angle=args.angle,
        sign=as_sign(args.sign),
        spin=args.spin,
        spin_axis=args.spin_axis,
        field_axis=args.field_axis,
        boost_axis=args.boost_axis,
    )


# -- sweep -------------------------------------------------------------------


def _complex_row(x, conv, quantity, z):
    return (x, conv, quantity, float(np.real(z)), abs(float(np.imag(z))))


def sweep_rows(params: FamilyParams, param: str, grid, quantity: str, method=None, power: int = 2, jobs: int = 1):
    """Rows for every grid point, in grid order."""
    method = Method(method) if method else None
    points = [params.with_param(param, x) for x in grid]

    def one(pair):
        point, x = pair
        return _evaluate(point, quantity, method, power, x)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(one, zip(points, grid)))
    else:
        chunks = [one(pair) for pair in zip(points, grid)]
    return [row for chunk in chunks for row in chunk]


def _evaluate(point: FamilyParams, quantity: str, method, power: int, x: float) -> list[tuple]:
    rho = build_state(point)
    conv = point.convention.value
    if quantity == "concurrence":
        res = concurrence(rho, method or default_method(point))
        return [(x, conv, quantity, res.value, res.residual)]
    if quantity == "purity":
        if rho.is_covariant:
            raise UsageError("purity is only defined for the hermitian convention; use --quantity trace_power")
        return [_complex_row(x, conv, quantity, np.trace(rho.matrix @ rho.matrix))]
    if quantity == "trace_power":
        if power < 1:
            raise UsageError("--power must be at least 1")
        return [_complex_row(x, conv, f"trace_power_{power}", np.trace(np.linalg.matrix_power(rho.matrix, power)))]
    d = bloch_decompose(rho)
    return [_complex_row(x, conv, "bloch_a2", d.a_squared), _complex_row(x, conv, "bloch_b2", d.b_squared)]


def format_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for x, conv, quantity, value, residual in rows:
        writer.writerow((repr(float(x)), conv, quantity, repr(float(value)), repr(float(residual))))
    return buf.getvalue()


# -- state -----------------------------------------------------------------------


def _pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _pairs(a) -> list:
    a = np.asarray(a)
    if a.ndim == 0:
        return _pair(a)
    return [_pairs(x) for x in a]


def state_report(params: FamilyParams) -> dict:
    rho = build_state(params)
    d = bloch_decompose(rho)
    quantities: dict = {
        "trace": _pair(np.trace(rho.matrix)),
        "trace_powers": {str(n): _pair(np.trace(np.linalg.matrix_power(rho.matrix, n))) for n in (1, 2, 3, 4)},
        "a_squared": _pair(d.a_squared),
        "b_squared": _pair(d.b_squared),
    }
    try:
        res = concurrence(rho, default_method(params))
        quantities["concurrence"] = {"value": res.value, "method": res.method.value, "residual": res.residual}
    except SpinParityError as exc:
        quantities["concurrence"] = {"error": str(exc)}
    if not rho.is_covariant and abs(trace_power(rho, 2) - 1) < 1e-8:
        quantities["entanglement_entropy"] = entanglement_entropy(rho)
        quantities["eof"] = eof_from_concurrence(quantities["concurrence"]["value"])
    return {
        "family": params.family,
        "convention": params.convention.value,
        "parameters": {
            "m": params.m,
            "mu": params.mu,
            "bfield": params.bmag,
            "eta": params.eta,
            "q": params.q,
            "angle": params.angle,
            "sign": str(params.sign),
            "spin": params.spin,
            "spin_axis": list(params.spin_axis),
            "field_axis": list(params.field_axis),
            "boost_axis": list(params.boost_axis),
        },
        "matrix": _pairs(rho.matrix),
        "bloch": {"a": _pairs(d.a), "b": _pairs(d.b), "t": _pairs(d.t)},
        "quantities": quantities,
    }


def _from_pairs(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    return arr[..., 0] + 1j * arr[..., 1]


def read_state_json(text: str) -> dict:
    """Parse ``state --format json`` output; complex fields become numpy arrays."""
    data = json.loads(text)
    data["matrix"] = _from_pairs(data["matrix"])
    data["bloch"] = {k: _from_pairs(v) for k, v in data["bloch"].items()}
    q = data["quantities"]
    for key in ("trace", "a_squared", "b_squared"):
        q[key] = complex(*q[key])
    q["trace_powers"] = {int(k): complex(*v) for k, v in q["trace_powers"].items()}
    return data


def format_complex(z: complex) -> str:
    return f"{z.real:+.11e}{z.imag:+.11e}j"


def format_matrix(a: np.ndarray) -> str:
    a = np.atleast_2d(a)
    return "\n".join("  ".join(format_complex(z) for z in row) for row in a)


def state_text(report: dict) -> str:
    q = report["quantities"]
    lines = [
        f"family: {report['family']}  convention: {report['convention']}",
        "matrix:",
        format_matrix(_from_pairs(report["matrix"])),
        "bloch a:",
        format_matrix(_from_pairs(report["bloch"]["a"])),
        "bloch b:",
        format_matrix(_from_pairs(report["bloch"]["b"])),
        "bloch T:",
        format_matrix(_from_pairs(report["bloch"]["t"])),
        f"trace: {format_complex(complex(*q['trace']))}",
    ]
    for n, z in q["trace_powers"].items():
        lines.append(f"Tr[rho^{n}]: {format_complex(complex(*z))}")
    lines.append(f"a.a: {format_complex(complex(*q['a_squared']))}")
    lines.append(f"b.b: {format_complex(complex(*q['b_squared']))}")
    c = q["concurrence"]
    if "error" in c:
        lines.append(f"concurrence: unavailable ({c['error']})")
    else:
        lines.append(f"concurrence: {c['value']:.12g} (method {c['method']}, residual {c['residual']:.3g})")
    if "entanglement_entropy" in q:
        lines.append(f"entanglement entropy: {q['entanglement_entropy']:.12g}")
        lines.append(f"entanglement of formation: {q['eof']:.12g}")
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    report = verify.run(args.seed, args.samples, args.perturb)
    out.write(report.to_json() + "\n" if args.json else report.table() + "\n")
    if not report.passed:
        print("failed checks: " + ", ".join(report.failures), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    rows = sweep_rows(family_params(args), args.param, args.grid, args.quantity, args.method, args.power, args.jobs)
    text = format_csv(rows)
    if args.out == "-":
        out.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_state(args, out) -> int:
    report = state_report(family_params(args))
    out.write(json.dumps(report, indent=2) + "\n" if args.format == "json" else state_text(report))
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "sweep": cmd_sweep, "state": cmd_state}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, SpinParityError, ValueError, OSError) as exc:
        print(f"spinparity {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

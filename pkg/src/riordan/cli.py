"""Command-line front end.

Subcommands:

* ``show``        -- render a gamma/h/f triangle of a family (table, json,
                     csv or latex), optionally reversed;
* ``jf``          -- expand a Jacobi continued fraction given alpha/beta as
                     polynomial expressions in i, r, y;
* ``verify``      -- run the group/props/oeis check suites;
* ``export``      -- like show, but written to a file (JSON by default);
* ``oeis-check``  -- regenerate embedded OEIS fixtures from constructions;
* ``fetch-bfile`` -- download (and cache) an OEIS b-file.

Exit codes: 0 on success, 1 when a verification/comparison fails, 2 on
usage or expression-parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import MultiPoly, R
from .arrays import Kind, LowerTriMatrix
from .families import (
    POLYTOPE_NAMES,
    FamilySpec,
    f_matrix,
    gamma_matrix,
    h_matrix,
    named_triple,
)
from .jfraction import ParseError, parse_index_poly
from .oeis import (
    CACHE_DIR_ENV,
    FIXTURES,
    CacheMiss,
    NetworkUnavailable,
    fetch_bfile,
)
from .series import DEFAULT_ORDER, tidy
from . import verify as verify_mod

SAFE_INT = 2**53  # larger integers are emitted as JSON strings

FORMATS = ("table", "json", "csv", "latex")


@dataclass
class OutputDoc:
    """A rendered triangle or series expansion plus its metadata."""

    kind: str  # "matrix" | "series"
    rows: list[list]
    family: str | None = None
    flavor: str | None = None
    r: int | str | None = None
    size: int = 0
    reversed_form: bool = False
    extra: dict = field(default_factory=dict)

    def json_object(self) -> dict:
        def encode(entry):
            entry = tidy(entry)
            if isinstance(entry, int):
                return entry if abs(entry) < SAFE_INT else str(entry)
            return str(entry)

        doc = {
            "kind": self.kind,
            "family": self.family,
            "flavor": self.flavor,
            "r": self.r,
            "N": self.size,
            "reversed": self.reversed_form,
            "rows": [[encode(e) for e in row] for row in self.rows],
        }
        doc.update(self.extra)
        return doc

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.json_object(), indent=2) + "\n"
        if fmt == "table":
            return render_table(self.rows)
        if fmt == "csv":
            return render_csv(self.rows)
        if fmt == "latex":
            return render_latex(self.rows)
        raise ValueError(f"unknown format {fmt!r}")


def render_table(rows: list[list]) -> str:
    cells = [[str(tidy(e)) for e in row] for row in rows]
    widths: list[int] = []
    for row in cells:
        for k, text in enumerate(row):
            if k >= len(widths):
                widths.append(len(text))
            else:
                widths[k] = max(widths[k], len(text))
    lines = ["  ".join(text.rjust(widths[k]) for k, text in enumerate(row)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def render_csv(rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    for row in rows:
        cells = [tidy(e) for e in row]
        writer.writerow([c if isinstance(c, int) else str(c) for c in cells])
    return buffer.getvalue()


def render_latex(rows: list[list]) -> str:
    size = len(rows)
    lines = [r"\left(", r"\begin{array}{" + "c" * size + "}"]
    for row in rows:
        padded = [str(tidy(e)).replace("*", " ") for e in row] + ["0"] * (size - len(row))
        lines.append(" " + " & ".join(padded) + r" \\")
    lines += [r"\end{array}", r"\right)"]
    return "\n".join(lines) + "\n"


def parse_matrix_doc(text: str) -> OutputDoc:
    """Inverse of the JSON rendering; entries come back as int/MultiPoly."""
    from .jfraction import parse_poly

    raw = json.loads(text)

    def decode(entry):
        if isinstance(entry, int):
            return entry
        if isinstance(entry, str):
            stripped = entry.strip()
            try:
                return int(stripped)
            except ValueError:
                return parse_poly(stripped)
        raise ValueError(f"cannot decode entry {entry!r}")

    return OutputDoc(
        kind=raw["kind"],
        rows=[[decode(e) for e in row] for row in raw["rows"]],
        family=raw.get("family"),
        flavor=raw.get("flavor"),
        r=raw.get("r"),
        size=raw["N"],
        reversed_form=raw["reversed"],
    )


# -- argument helpers ----------------------------------------------------------


def _r_value(text: str):
    if text == "r":
        return "r"
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--r takes an integer or the literal 'r', got {text!r}")


def _build_matrix(args) -> LowerTriMatrix:
    if args.family == "parametric":
        r = R if args.r == "r" else args.r
        spec = FamilySpec(Kind(args.flavor), r)
        build = {"gamma": gamma_matrix, "h": h_matrix, "f": f_matrix}[args.which]
        matrix = build(spec, args.N)
    else:
        triple = named_triple(args.family, order=max(args.N, DEFAULT_ORDER))
        matrix = getattr(triple, f"{args.which}_matrix")(args.N)
    return matrix.reversed() if args.reversed else matrix


def _matrix_doc(args) -> OutputDoc:
    matrix = _build_matrix(args)
    return OutputDoc(
        kind="matrix",
        rows=[list(row) for row in matrix.rows],
        family=args.family,
        flavor=args.flavor if args.family == "parametric" else None,
        r=(args.r if args.family == "parametric" else None),
        size=args.N,
        reversed_form=args.reversed,
    )


def _add_show_arguments(sub: argparse.ArgumentParser):
    sub.add_argument(
        "--family",
        choices=("parametric",) + POLYTOPE_NAMES,
        default="parametric",
        help="triangle family (default: the parameterized family)",
    )
    sub.add_argument(
        "--flavor",
        choices=("ordinary", "exponential"),
        default="ordinary",
        help="flavor of the parameterized family",
    )
    sub.add_argument(
        "--r",
        type=_r_value,
        default="r",
        help="family parameter: an integer or the literal 'r' for symbolic",
    )
    sub.add_argument("--which", choices=("gamma", "h", "f"), required=True)
    sub.add_argument("--N", type=int, default=8, help="largest row index (default 8)")
    sub.add_argument("--reversed", action="store_true", help="reverse every row")
    sub.add_argument("--format", choices=FORMATS, default="table")


# -- subcommands -----------------------------------------------------------------


def cmd_show(args) -> int:
    sys.stdout.write(_matrix_doc(args).render(args.format))
    return 0


def cmd_export(args) -> int:
    text = _matrix_doc(args).render(args.format)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
    return 0


def cmd_jf(args) -> int:
    alpha = parse_index_poly(args.alpha)
    beta = parse_index_poly(args.beta)
    from .jfraction import JFraction

    series = JFraction(alpha, beta).expand(args.N)
    rows = []
    for n in range(args.N + 1):
        poly = MultiPoly.coerce(series[n])
        rows.append([tidy(poly.y_coefficient(k)) for k in range(poly.degree("y") + 1)])
    doc = OutputDoc(
        kind="series",
        rows=rows,
        size=args.N,
        extra={"alpha": str(alpha), "beta": str(beta)},
    )
    sys.stdout.write(doc.render(args.format))
    return 0


def cmd_verify(args) -> int:
    results = verify_mod.run_suite(args.suite, seed=args.seed)
    failures = 0
    for res in results:
        mark = "ok" if res.ok else "FAIL"
        line = f"[{mark:>4}] {res.suite} :: {res.name}"
        if not res.ok and res.detail:
            line += f" -- {res.detail}"
        print(line)
        failures += 0 if res.ok else 1
    total = len(results)
    print(f"{total - failures}/{total} checks passed")
    return 0 if failures == 0 else 1


def cmd_oeis_check(args) -> int:
    anumbers = args.anumber or sorted(FIXTURES)
    unknown = [a for a in anumbers if a not in FIXTURES]
    if unknown:
        print(f"error: no fixture for {', '.join(unknown)}", file=sys.stderr)
        return 2
    results = verify_mod.oeis_suite(anumbers)
    failures = 0
    for res in results:
        print(f"[{'ok' if res.ok else 'FAIL':>4}] {res.detail}")
        failures += 0 if res.ok else 1
    return 0 if failures == 0 else 1


def cmd_fetch_bfile(args) -> int:
    cache_dir = args.cache_dir or os.environ.get(CACHE_DIR_ENV) or (
        Path.home() / ".cache" / "riordan-oeis"
    )
    try:
        bfile = fetch_bfile(args.anumber, cache_dir, offline=args.offline)
    except (NetworkUnavailable, CacheMiss, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    values = bfile.values[: args.limit]
    print(f"{args.anumber}: {len(bfile.entries)} terms cached in {cache_dir}")
    print(", ".join(str(v) for v in values))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordan",
        description="Exact Pascal-like triangle calculus: Riordan arrays, "
        "continued fractions, OEIS cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    show = sub.add_parser("show", help="render a gamma/h/f triangle")
    _add_show_arguments(show)
    show.set_defaults(func=cmd_show)

    export = sub.add_parser("export", help="write a triangle to a file")
    _add_show_arguments(export)
    export.set_defaults(format="json")
    export.add_argument("--output", default="-", help="output path ('-' for stdout)")
    export.set_defaults(func=cmd_export)

    jf = sub.add_parser("jf", help="expand a Jacobi continued fraction")
    jf.add_argument("--alpha", required=True, help="level coefficients, e.g. '2*y+1'")
    jf.add_argument("--beta", required=True, help="x^2 weights, e.g. 'i*r*y*(y+1)'")
    jf.add_argument("--N", type=int, default=10, help="expansion order (default 10)")
    jf.add_argument("--format", choices=FORMATS, default="table")
    jf.set_defaults(func=cmd_jf)

    ver = sub.add_parser("verify", help="run the verification suites")
    ver.add_argument(
        "suite", nargs="?", default="all", choices=("all",) + verify_mod.SUITES
    )
    ver.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED)
    ver.set_defaults(func=cmd_verify)

    oeis = sub.add_parser("oeis-check", help="check embedded OEIS fixtures")
    oeis.add_argument("anumber", nargs="*", help="A-numbers (default: all fixtures)")
    oeis.set_defaults(func=cmd_oeis_check)

    fetch = sub.add_parser("fetch-bfile", help="download an OEIS b-file")
    fetch.add_argument("anumber")
    fetch.add_argument("--cache-dir", default=None)
    fetch.add_argument("--offline", action="store_true", help="only use the cache")
    fetch.add_argument("--limit", type=int, default=12, help="terms to print")
    fetch.set_defaults(func=cmd_fetch_bfile)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

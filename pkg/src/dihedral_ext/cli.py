"""
Command line front end.

    dihedral-ext ext --m 5 --x stst --y e --format json
    dihedral-ext rpoly --m 3 --x e --y st

Payload goes to stdout, a one-line diagnostic to stderr.  Exit codes: 0 on
success, 2 for bad input, 3 when the two independent Ext computations
disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from .category_o import (
    NotComparableError,
    ext_closed_form,
    ext_via_resolution,
    gabber_joseph_report,
    hom_projective_to_verma,
    hom_verma_verma,
    proj_resolution,
    verma_character,
    weight_filtration_layers,
)
from .dihedral import ElementParseError, GroupParams, elements, parse_element
from .hecke import kl_basis, r_polynomial

FORMATS = ("tsv", "json", "latex")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class CrossCheckError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _tsv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join(str(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _latex_tabular(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = [
        "\\begin{tabular}{" + "r" * len(header) + "}",
        " & ".join(header) + " \\\\",
        "\\hline",
    ]
    lines.extend(" & ".join(str(c) for c in row) + " \\\\" for row in rows)
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _elt_tex(w) -> str:
    return "w_0" if w.is_longest else str(w)


def _checked_ext(x, y):
    table = ext_via_resolution(x, y)
    if table != ext_closed_form(x, y):
        raise CrossCheckError(f"resolution and closed form disagree for x={x}, y={y}")
    return table


def cmd_ext(args, m: int) -> str:
    x, y = _element(args.x, m, "--x"), _element(args.y, m, "--y")
    table = _checked_ext(x, y)
    rows = table.sorted_entries()
    if args.format == "json":
        return _json({
            "m": m, "x": str(x), "y": str(y),
            "entries": [{"j": j, "i": i, "dim": d} for j, i, d in rows],
        })
    if args.format == "latex":
        return _latex_tabular(["$j$", "$i$", "$\\dim$"], rows)
    return _tsv(["j", "i", "dim"], rows)


def cmd_ext_table(args, m: int) -> str:
    records = []
    for x in elements(m):
        for y in elements(m):
            table = _checked_ext(x, y)
            poly = None if table.is_empty() else table.generating_function()
            records.append((x, y, poly))
    if args.format == "json":
        return _json({
            "m": m,
            "pairs": [
                {"x": str(x), "y": str(y), "polynomial": None if p is None else str(p)}
                for x, y, p in records
            ],
        })
    if args.format == "latex":
        return _latex_tabular(
            ["$x$", "$y$", "$e(x,y)$"],
            [
                (f"${_elt_tex(x)}$", f"${_elt_tex(y)}$", "---" if p is None else f"${p.render(latex=True)}$")
                for x, y, p in records
            ],
        )
    return _tsv(
        ["x", "y", "polynomial"],
        [(x, y, "0" if p is None else p) for x, y, p in records],
    )


def cmd_hom(args, m: int) -> str:
    x, y = _element(args.x, m, "--x"), _element(args.y, m, "--y")
    rows = []
    for k in range(-m, m + 1):
        d = hom_verma_verma(x, y, k)
        if d != hom_projective_to_verma(x, 0, y, k):
            raise CrossCheckError(f"Hom(Delta_x, -) and Hom(P_x, -) disagree at k={k}")
        rows.append((k, d))
    if args.format == "json":
        return _json({
            "m": m, "x": str(x), "y": str(y),
            "entries": [{"k": k, "dim": d} for k, d in rows],
        })
    if args.format == "latex":
        return _latex_tabular(["$k$", "$\\dim$"], rows)
    return _tsv(["k", "dim"], rows)


def cmd_resolution(args, m: int) -> str:
    x = _element(args.x, m, "--x")
    res = proj_resolution(x)
    if args.format == "json":
        return _json({
            "m": m, "x": str(x),
            "terms": [
                {"j": j, "summands": [{"z": str(z), "shift": a} for z, a in term]}
                for j, term in enumerate(res.terms)
            ],
        })
    if args.format == "latex":
        lines = []
        for j, term in enumerate(res.terms):
            body = " \\oplus ".join(f"P_{{{_elt_tex(z)}}}({a})" for z, a in term)
            lines.append(f"$P^{{{j}}} = {body}$")
        return "\n".join(lines) + "\n"
    return _tsv(["j", "z", "shift"], [(j, z, a) for j, term in enumerate(res.terms) for z, a in term])


def cmd_character(args, m: int) -> str:
    y = _element(args.y, m, "--y")
    char = verma_character(y)
    rows = [
        (i, z, d, char.multiplicity(z, d))
        for i, layer in enumerate(weight_filtration_layers(y))
        for z, d in layer
    ]
    if args.format == "json":
        return _json({
            "m": m, "y": str(y),
            "entries": [{"layer": i, "z": str(z), "degree": d, "mult": n} for i, z, d, n in rows],
        })
    if args.format == "latex":
        return _latex_tabular(
            ["layer", "$z$", "degree", "mult"],
            [(i, f"${_elt_tex(z)}$", d, n) for i, z, d, n in rows],
        )
    return _tsv(["layer", "z", "degree", "mult"], rows)


def cmd_klbasis(args, m: int) -> str:
    w = _element(args.w, m, "--w")
    b = kl_basis(w)
    rows = list(b.items())
    if args.format == "json":
        return _json({
            "m": m, "w": str(w),
            "coefficients": [{"y": str(y), "coefficient": str(p)} for y, p in rows],
        })
    if args.format == "latex":
        terms = []
        for y, p in rows:
            coeff = p.render(latex=True)
            terms.append(("" if coeff == "1" else coeff) + f"H_{{{_elt_tex(y)}}}")
        return f"$b_{{{_elt_tex(w)}}} = " + " + ".join(terms) + "$\n"
    return _tsv(["y", "coefficient"], rows)


def cmd_rpoly(args, m: int) -> str:
    x, y = _element(args.x, m, "--x"), _element(args.y, m, "--y")
    r = r_polynomial(x, y)
    if args.format == "json":
        return _json({"m": m, "x": str(x), "y": str(y), "polynomial": str(r)})
    if args.format == "latex":
        return f"${r.render(latex=True)}$\n"
    return f"{r}\n"


def cmd_gj(args, m: int) -> str:
    x, y = _element(args.x, m, "--x"), _element(args.y, m, "--y")
    try:
        report = gabber_joseph_report(x, y)
    except NotComparableError as exc:
        raise UsageError(str(exc)) from exc
    rows = report.rows()
    if args.format == "json":
        return _json({
            "m": m, "x": str(x), "y": str(y),
            "ext": str(report.ext_poly),
            "r_polynomial": str(report.r_poly),
            "difference": str(report.difference),
            "rows": [{"j": j, "ext": e, "r": r, "difference": d} for j, e, r, d in rows],
        })
    if args.format == "latex":
        return _latex_tabular(["$j$", "$\\dim \\mathrm{Ext}^j$", "$[q^j] R_{y,x}$", "difference"], rows)
    return _tsv(["j", "ext", "r", "difference"], rows)


COMMANDS: dict[str, tuple[Callable, tuple[str, ...], str]] = {
    "ext": (cmd_ext, ("x", "y"), "graded Ext table of two Verma modules"),
    "ext-table": (cmd_ext_table, (), "generating function e(x,y) for every ordered pair"),
    "hom": (cmd_hom, ("x", "y"), "graded Hom dimensions between Verma modules"),
    "resolution": (cmd_resolution, ("x",), "projective resolution of a Verma module"),
    "character": (cmd_character, ("y",), "Verma character with weight filtration layers"),
    "klbasis": (cmd_klbasis, ("w",), "Kazhdan-Lusztig basis element"),
    "rpoly": (cmd_rpoly, ("x", "y"), "R-polynomial R_{x,y}(q)"),
    "gj": (cmd_gj, ("x", "y"), "ungraded Ext dimensions next to R_{y,x}"),
}


def _element(text: str, m: int, flag: str):
    try:
        return parse_element(text, m)
    except ElementParseError as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dihedral-ext", description="Ext groups between Verma modules for dihedral groups")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, flags, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--m", type=int, required=True, help="dihedral parameter, the order of st (>= 2)")
        p.add_argument("--format", choices=FORMATS, default="tsv")
        for flag in flags:
            p.add_argument(f"--{flag}", required=True, help="element: e, w0 or an alternating word")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        try:
            m = GroupParams(args.m).m
        except ValueError as exc:
            raise UsageError(f"--m: {exc}") from exc
        out = handler(args, m)
    except UsageError as exc:
        print(f"dihedral-ext: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CrossCheckError as exc:
        print(f"dihedral-ext: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

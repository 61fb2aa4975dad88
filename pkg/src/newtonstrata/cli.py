"""Command-line front end: ``newtonstrata <subcommand> [options] ELEMENT``.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
2 parse error, 3 invalid datum, 4 semantic error, 5 search budget exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import random
import sys
from typing import Optional, Sequence

from . import affine as aw
from . import alcove as al
from . import lang
from . import oracle as orc
from . import plot
from . import sigma as sg
from .parse import DimensionMismatch, ParseError, format_element, parse_element
from .rootdatum import InvalidDatum, NonStableJ, build_root_datum

EXIT_OK, EXIT_PARSE, EXIT_DATUM, EXIT_SEMANTIC, EXIT_BUDGET = 0, 2, 3, 4, 5


class SemanticError(ValueError):
    pass


def _datum(args):
    return build_root_datum(args.group, args.delta)


def _elt(args, G):
    return parse_element(args.element, G)


def _emit(obj, args) -> str:
    return json.dumps(obj, indent=2 if args.pretty else None)


def _word(G, v) -> str:
    return "*".join("s%d" % (i + 1) for i in G.weyl(v).word) or "1"


def _levels(G, spec: Optional[str]):
    if not spec:
        return G
    J = [int(j) - 1 for j in spec.split(",") if j.strip()]
    return G.levi(J)


# ----------------------------------------------------------------------
# subcommands


def cmd_len(args):
    G = _datum(args)
    return str(aw.length(G, _elt(args, G)))


def cmd_eta(args):
    G = _datum(args)
    return _word(G, aw.eta(G, _elt(args, G)))


def cmd_newton(args):
    G = _datum(args)
    L = _levels(G, args.level)
    x = _elt(args, G)
    if not aw.in_level(L, x):
        raise SemanticError("element is not in the Levi given by --level")
    return _emit([sg.fmt_q(c) for c in sg.newton_point(aw.as_level(L, x), L)], args)


def cmd_kappa(args):
    G = _datum(args)
    return _emit(list(aw.kappa(G, _elt(args, G)).coords), args)


def cmd_class(args):
    G = _datum(args)
    L = _levels(G, args.level)
    x = _elt(args, G)
    if not aw.in_level(L, x):
        raise SemanticError("element is not in the Levi given by --level")
    return _emit(sg.class_of(aw.as_level(L, x), L).to_json(), args)


def cmd_defect(args):
    G = _datum(args)
    return str(sg.defect(sg.class_of(_elt(args, G), G)))


def cmd_shrunken(args):
    G = _datum(args)
    return aw.shrunken_status(G, _elt(args, G))


def cmd_alcove_find(args):
    G = _datum(args)
    x = _elt(args, G)
    if args.all:
        return _emit([c.to_json(G) for c in al.all_minimal_pairs(G, x)], args)
    return _emit(al.find_minimal_pair(G, x).to_json(G), args)


def cmd_minimal_newton(args):
    G = _datum(args)
    b = al.minimal_newton(G, _elt(args, G))
    d = b.to_json()
    return _emit({"nu": d["nu"], "kappa": d["kappa"]}, args)


def cmd_vdim(args):
    G = _datum(args)
    x = _elt(args, G)
    try:
        obj = json.loads(args.cls)
    except json.JSONDecodeError as exc:
        raise ParseError("bad class JSON: %s" % exc.msg, exc.pos) from None
    if not isinstance(obj, dict) or "nu" not in obj or "kappa" not in obj:
        raise ParseError("class JSON needs 'nu' and 'kappa'", 0)
    if len(obj["nu"]) != G.d:
        raise DimensionMismatch("nu has %d entries, expected %d" % (len(obj["nu"]), G.d))
    if obj.get("level", "G") != "G":
        raise SemanticError("virtual dimension needs a class at the level of G")
    b = sg.class_from_json(obj, G)
    if not G.is_dominant(b.nu):
        raise SemanticError("Newton point is not dominant")
    if b.kappa != aw.kappa(G, x):
        raise SemanticError("class has kappa %s but x has kappa %s"
                            % (list(b.kappa.coords), list(aw.kappa(G, x).coords)))
    return sg.fmt_q(al.virtual_dimension(G, x, b, args.budget))


def cmd_bgx(args):
    G = _datum(args)
    x = _elt(args, G)
    res = orc.reduce(G, x, args.budget)
    order = sorted(res, key=sg.SigmaClass.sort_key)
    if args.format == "csv":
        lines = ["class_nu,class_kappa,dim"]
        for b in order:
            lines.append("%s,%s,%d" % (" ".join(sg.fmt_q(c) for c in b.nu),
                                       " ".join(str(c) for c in b.kappa.coords), res[b]))
        return "\n".join(lines)
    return _emit({"x": format_element(G, x),
                  "classes": [dict(b.to_json(), dim=res[b]) for b in order]}, args)


def cmd_table(args):
    G = _datum(args)
    t = orc.strata_table(G, _elt(args, G), args.budget)
    if args.format == "csv":
        return t.to_csv().rstrip("\n")
    return _emit(t.to_json(), args)


def cmd_gap_search(args):
    G = _datum(args)
    found = orc.gap_search(G, args.max_len, args.budget)
    return _emit([format_element(G, x) for x in found], args)


def cmd_lang_solve(args):
    F = lang.field(args.p, args.k)
    if args.random:
        rng = random.Random(args.seed)
        M, v, _ = lang.random_instance(rng, F, args.random, args.N, args.q, args.mode)
    else:
        if args.M is None or args.v is None:
            raise SemanticError("lang-solve needs --M and --v (or --random n)")
        try:
            Mtxt, vtxt = json.loads(args.M), json.loads(args.v)
        except json.JSONDecodeError as exc:
            raise ParseError("bad JSON: %s" % exc.msg, exc.pos) from None
        try:
            M = [[lang.parse_series(s, F, args.N) for s in row] for row in Mtxt]
            v = [lang.parse_series(s, F, args.N) for s in vtxt]
        except ValueError as exc:
            raise ParseError(str(exc), 0) from None
        if len(M) != len(v) or any(len(row) != len(v) for row in M):
            raise SemanticError("M must be %d x %d" % (len(v), len(v)))
    w = lang.solve_lang(M, v, args.N, args.q, args.mode)
    res = lang.residual(M, v, w, args.q, args.mode)
    return _emit({"w": [lang.format_series(s) for s in w],
                  "residual_zero": all(s.is_zero() for s in res)}, args)


def cmd_plot(args):
    G = _datum(args)
    hl = [parse_element(h, G) for h in (args.highlight or [])]
    return plot.plot_apartment(plot.PlotSpec(G, args.radius, hl, args.shade)).rstrip("\n")


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", default="GL:2", help="GL:n, SL:n, SP:2n or file:PATH (default GL:2)")
    common.add_argument("--delta", default="id", help="id, flip or perm:i,j,... (1-based)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--budget", type=int, default=aw.DEFAULT_BUDGET,
                        help="node cap for cyclic-shift searches")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--pretty", action="store_true", help="indent JSON output")

    p = argparse.ArgumentParser(prog="newtonstrata",
                                description="Newton strata of Iwahori double cosets.")
    sub = p.add_subparsers(dest="command", required=True)

    def elt(name, fn, help_, level=False):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("element")
        if level:
            sp.add_argument("--level", help="Levi as 1-based simple indices, e.g. 1,3")
        sp.set_defaults(fn=fn)
        return sp

    elt("len", cmd_len, "length of x")
    elt("eta", cmd_eta, "the finite Weyl element eta(x)")
    elt("newton", cmd_newton, "Newton point of x", level=True)
    elt("kappa", cmd_kappa, "Kottwitz point of x")
    elt("class", cmd_class, "class of x as JSON", level=True)
    elt("defect", cmd_defect, "defect of the class of x")
    elt("shrunken", cmd_shrunken, "not_shrunken, shrunken or regular_shrunken")
    elt("alcove-find", cmd_alcove_find, "minimal (J, w) alcove certificate").add_argument(
        "--all", action="store_true", help="every inclusion-minimal certificate")
    elt("minimal-newton", cmd_minimal_newton, "unique minimal class of B(G)_x")
    elt("vdim", cmd_vdim, "virtual dimension d_x(b)").add_argument(
        "cls", metavar="CLASS", help='class JSON, e.g. {"nu":["1/2","1/2"],"kappa":[1]}')
    elt("bgx", cmd_bgx, "B(G)_x with dimensions via reduction")
    elt("table", cmd_table, "full strata table")

    g = sub.add_parser("gap-search", parents=[common], help="elements with unsaturated B(G)_x")
    g.add_argument("--max-len", type=int, required=True)
    g.set_defaults(fn=cmd_gap_search)

    ls = sub.add_parser("lang-solve", parents=[common], help="solve w - M sigma(w) = v mod t^N")
    ls.add_argument("--p", type=int, default=2)
    ls.add_argument("--k", type=int, default=1)
    ls.add_argument("--q", type=int, default=2)
    ls.add_argument("--N", type=int, default=4)
    ls.add_argument("--M", help='JSON matrix of series, e.g. [["t"]]')
    ls.add_argument("--v", help='JSON vector of series, e.g. ["1"]')
    ls.add_argument("--mode", choices=(lang.FIX_T, lang.FROBENIUS), default=lang.FIX_T)
    ls.add_argument("--random", type=int, metavar="n", help="random n x n instance from --seed")
    ls.set_defaults(fn=cmd_lang_solve)

    pl = sub.add_parser("plot", parents=[common], help="SVG apartment (semisimple rank <= 2)")
    pl.add_argument("--radius", type=int, default=2)
    pl.add_argument("--highlight", action="append", metavar="ELEMENT")
    pl.add_argument("--shade", action="store_true", help="shade shrunken alcoves")
    pl.set_defaults(fn=cmd_plot)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    random.seed(args.seed)
    try:
        text = args.fn(args)
    except (ParseError, DimensionMismatch) as exc:
        print("parse error: %s" % exc, file=err)
        return EXIT_PARSE
    except (InvalidDatum, lang.FieldError) as exc:
        print("invalid datum: %s" % exc, file=err)
        return EXIT_DATUM
    except aw.SearchBudgetExceeded as exc:
        print("budget exceeded: %s" % exc, file=err)
        return EXIT_BUDGET
    except (SemanticError, NonStableJ, al.NotAnAlcove, sg.NoRepresentative,
            sg.DenominatorCapExceeded, lang.ResidueFieldTooSmall, plot.RankTooLarge) as exc:
        print("error: %s" % exc, file=err)
        return EXIT_SEMANTIC
    print(text, file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line entry point.

Exit status: 0 success or Pass, 1 Fail/Refuted/domain error, 2 Inconclusive,
64 usage or input-format error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import coxeter as cx
from . import io
from .errors import Inconclusive, ParseError, TwistlabError
from .markings import (enumerate_markings, equivalence_classes, marking_component, phi_of_marking,
                       component_halfspace)
from .status import exit_code
from .twists import (TwistMove, apply_twist, complexity_data, enumerate_twists, reduce,
                     triangle_lemma_check, verify_genset)
from .words import Unknown, canonical, format_word, order_bounded

EX_USAGE = 64
DEFAULT_RADIUS = 8


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _radius(args) -> int:
    if args.radius is not None:
        return args.radius
    env = os.environ.get("TWISTLAB_RADIUS")
    if env:
        try:
            return _positive(env)
        except argparse.ArgumentTypeError as exc:
            raise ParseError(f"TWISTLAB_RADIUS: {exc}") from None
    return DEFAULT_RADIUS


def _set(J) -> str:
    return "{" + ",".join(str(j) for j in sorted(J)) + "}"


class Output:
    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []

    def text(self, line=""):
        self.lines.append(line)

    def emit(self, data):
        if self.fmt == "json":
            print(io.dumps(data))
        else:
            for line in self.lines:
                print(line)


def _dot(M: cx.CoxeterMatrix, which: str) -> str:
    g = M.dynkin_diagram() if which == "dynkin" else M.defining_graph()
    lines = [f"graph {which} {{"]
    lines += [f"  {v};" for v in sorted(g.nodes)]
    for s, t, data in sorted(g.edges(data=True)):
        m = data["m"]
        label = "" if (which == "dynkin" and m == 3) or (which == "defining" and m == 2) else f' [label="{m}"]'
        lines.append(f"  {s} -- {t}{label};")
    lines.append("}")
    return "\n".join(lines)


# -- subcommands ------------------------------------------------------------------

def cmd_check(args, out):
    M = io.read_cox(args.matrix)
    if args.format == "dot":
        print(_dot(M, args.graph))
        return 0
    fc = cx.is_fc(M)
    data = {
        "rank": M.rank,
        "right_angled": M.is_right_angled(),
        "irreducible": cx.is_irreducible(M, M.generators),
        "spherical": cx.is_spherical(M, M.generators),
        "fc": fc,
        f"rigid{args.k}": cx.is_k_rigid(M, args.k),
        "separating": [{"J": sorted(w.J), "components": [sorted(c) for c in w.components]}
                       for w in cx.separating_subsets(M)],
    }
    out.text(" ".join(f"{k}={str(v).lower()}" for k, v in data.items() if k != "separating"))
    for w in data["separating"]:
        out.text(f"separating {_set(w['J'])}: " + " | ".join(_set(c) for c in w["components"]))
    out.emit(data)
    return 0


def cmd_spherical(args, out):
    M = io.read_cox(args.matrix)
    if args.subset is not None:
        J = cx.subset(M, io.parse_subset(args.subset))
        types = cx.coxeter_type(M, J)
        data = {"J": sorted(J), "spherical": types is not None, "type": types,
                "order": cx.spherical_order(M, J) if types is not None else None}
        out.text(f"{_set(J)} spherical={str(types is not None).lower()}"
                 + (f" type={'x'.join(types) or '-'} order={data['order']}" if types is not None else ""))
        out.emit(data)
        return 0 if types is not None else 1
    if cx.is_fc(M):
        label, subsets = "maximal", cx.maximal_spherical_subsets(M)
    else:
        label, subsets = "irreducible", cx.irreducible_spherical_subsets(M)
    rows = [{"J": sorted(J), "type": cx.coxeter_type(M, J), "order": cx.spherical_order(M, J)}
            for J in subsets]
    for row in rows:
        out.text(f"{_set(row['J'])} {'x'.join(row['type'])} order={row['order']}")
    out.emit({label: rows})
    return 0


def cmd_twists(args, out):
    M = io.read_cox(args.matrix)
    moves = enumerate_twists(M, args.only_z2)
    for mv in moves:
        out.text(str(mv))
    if not moves:
        out.text("no twists")
    out.emit([mv.to_dict() for mv in moves])
    return 0


def _load(args):
    return io.read_genset(args.genset, args.cutoff)


def cmd_apply_twist(args, out):
    gens = _load(args)
    J = io.parse_subset(args.J)
    B = io.parse_subset(args.B)
    if args.A is not None:
        A = io.parse_subset(args.A)
    else:
        A = gens.claimed.generators - J - cx.perp(gens.claimed, J) - B
    new = apply_twist(gens, TwistMove(J, A, B), args.cutoff)
    for g in new.generators:
        out.text(format_word(g.word))
    out.emit(io.genset_to_json(new))
    return 0


def cmd_markings(args, out):
    M = io.read_cox(args.matrix)
    rows = []
    for mu in enumerate_markings(M, args.core):
        comp = marking_component(M, mu)
        rows.append({"marking": str(mu), "word": list(mu.base.letters), "component": sorted(comp)})
        out.text(f"{mu}  w={format_word(mu.base.letters)}  component={_set(comp)}")
    out.emit(rows)
    return 0


def cmd_classes(args, out):
    M = io.read_cox(args.matrix)
    classes = equivalence_classes(M, args.core)
    data = []
    for cls in classes:
        comps = sorted({tuple(sorted(marking_component(M, mu))) for mu in cls})
        data.append({"markings": [str(mu) for mu in cls], "components": [list(c) for c in comps]})
        out.text("class " + " ".join(str(mu) for mu in cls)
                 + "  components=" + ",".join(_set(c) for c in comps))
    out.emit(data)
    return 0


def cmd_phi(args, out):
    gens = _load(args)
    amb, M = gens.ambient, gens.claimed
    rows = []
    for mu in enumerate_markings(M, args.core):
        phi = phi_of_marking(amb, gens, mu, args.cutoff)
        rows.append({"marking": str(mu), "halfspace": str(phi)})
        out.text(f"{mu}  {phi}")
    comps = []
    for A in cx.complement_components(M, {args.core}):
        phi = component_halfspace(amb, gens, args.core, A)
        comps.append({"component": sorted(A), "halfspace": str(phi)})
        out.text(f"component {_set(A)}  {phi}")
    out.emit({"markings": rows, "components": comps})
    return 0


def cmd_complexity(args, out):
    gens = _load(args)
    data = complexity_data(gens.ambient, gens, _radius(args))
    out.text(f"K={data.value}")
    for J, cell in sorted(data.cells.items(), key=lambda kv: sorted(kv[0])):
        out.text(f"cell {_set(J)} conjugator={cell.conjugator!r} D=" + " ".join(repr(c) for c in cell.D))
    out.emit({"complexity": data.value.to_list(),
              "cells": [data.cells[J].to_dict() for J in sorted(data.cells, key=sorted)]})
    return 0


def cmd_reduce(args, out):
    gens = _load(args)
    result = reduce(gens.ambient, gens, _radius(args), args.max_steps)
    conj = list(result.conjugator.word) if result.conjugator is not None else None
    trace = [st.to_dict() for st in result.steps]
    for st in result.steps:
        out.text(f"twist {st.move}  {st.before} -> {st.after}")
    out.text("final " + " ".join(format_word(g.word) for g in result.final.generators))
    out.text(f"conjugator {format_word(conj) if conj is not None else 'none'}  status={result.status}")
    out.emit({"steps": trace, "final": [list(g.word) for g in result.final.generators],
              "conjugator": conj, "status": result.status})
    return 0 if result.status == "conjugate" else 1


def cmd_word(args, out):
    M = io.read_cox(args.matrix)
    words = [canonical(M, io.parse_word(w)) for w in args.words]
    if args.action == "reduce":
        if len(words) != 1:
            raise ParseError("word reduce takes one word")
        out.text(repr(words[0]))
        out.emit({"word": list(words[0].word), "length": len(words[0])})
        return 0
    if args.action == "eq":
        if len(words) != 2:
            raise ParseError("word eq takes two words")
        equal = words[0] == words[1]
        out.text("equal" if equal else "different")
        out.emit({"equal": equal, "canonical": [list(w.word) for w in words]})
        return 0 if equal else 1
    if len(words) != 1:
        raise ParseError("word order takes one word")
    k = order_bounded(M, words[0], args.cutoff)
    out.text(str(k))
    out.emit({"order": None if isinstance(k, Unknown) else k, "cutoff": args.cutoff})
    return 2 if isinstance(k, Unknown) else 0


def cmd_lemma3gen(args, out):
    if args.orders[0] != 2:
        raise ParseError("the first order must be 2")
    found = triangle_lemma_check(args.orders[1], args.orders[2])
    out.text(" ".join(repr(c) for c in found))
    out.emit([list(c.word) for c in found])
    return 0


def cmd_verify(args, out):
    gens = _load(args)
    report = verify_genset(gens.ambient, gens, _radius(args), args.cutoff)
    for item in report.items:
        out.text(f"{item.status:<12} {item.name}  {item.detail}")
    out.text(f"overall {report.status}")
    out.emit({"items": [{"name": i.name, "status": str(i.status), "detail": i.detail}
                        for i in report.items], "status": str(report.status)})
    return exit_code(report.status)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--radius", type=_positive, default=None,
                        help=f"search radius (default {DEFAULT_RADIUS} or $TWISTLAB_RADIUS)")
    common.add_argument("--cutoff", type=_positive, default=60, help="order cutoff (default 60)")
    common.add_argument("--max-steps", type=_positive, default=32)

    parser = _Parser(prog="twistlab", description="Coxeter generating sets and twist descent")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="FC / rigidity / irreducibility report")
    p.add_argument("matrix")
    p.add_argument("--k", type=_positive, default=2)
    p.add_argument("--graph", choices=("defining", "dynkin"), default="defining")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spherical", parents=[common], help="spherical subsets and their types")
    p.add_argument("matrix")
    p.add_argument("--subset", help="test one subset, e.g. [0,1]")
    p.set_defaults(func=cmd_spherical)

    p = sub.add_parser("twists", parents=[common], help="list elementary twists")
    p.add_argument("matrix")
    p.add_argument("--only-z2", action="store_true")
    p.set_defaults(func=cmd_twists)

    p = sub.add_parser("apply-twist", parents=[common], help="apply one twist to a generating set")
    p.add_argument("genset")
    p.add_argument("--J", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--A", default=None)
    p.set_defaults(func=cmd_apply_twist)

    for name, func, text in (("markings", cmd_markings, "markings with a given core"),
                             ("classes", cmd_classes, "move-equivalence classes of markings")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("matrix")
        p.add_argument("--core", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("phi", parents=[common], help="marking and component half-spaces")
    p.add_argument("genset")
    p.add_argument("--core", type=int, required=True)
    p.set_defaults(func=cmd_phi)

    for name, func, text in (("complexity", cmd_complexity, "complexity pair of a generating set"),
                             ("reduce", cmd_reduce, "descend by twists to a conjugate of the standard set"),
                             ("verify", cmd_verify, "involution, angle and generation checks")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("genset", help="generating-set file, or a .cox file for the standard set")
        p.set_defaults(func=func)

    p = sub.add_parser("word", parents=[common], help="word problem utilities")
    p.add_argument("action", choices=("reduce", "eq", "order"))
    p.add_argument("matrix")
    p.add_argument("words", nargs="+")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("lemma3gen", parents=[common], help="three-generator spherical side check")
    p.add_argument("orders", type=int, nargs=3)
    p.set_defaults(func=cmd_lemma3gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "dot" and args.command != "check":
        parser.error("--format dot is only available for 'check'")
    out = Output(args.format)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"twistlab: {exc}", file=sys.stderr)
        return EX_USAGE
    except OSError as exc:
        print(f"twistlab: {exc}", file=sys.stderr)
        return EX_USAGE
    except Inconclusive as exc:
        print(f"twistlab: inconclusive: {exc}", file=sys.stderr)
        return 2
    except TwistlabError as exc:
        print(f"twistlab: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``skeinpbw <command> FILE [...]``.

FILE holds either a ciliated graph (``vertices``/``edges``) or a
presentation (``generators``); a file carrying both is read as a
presentation.  Errors are printed to stderr as JSON objects and mapped to
exit codes (2 validation, 3 derivation, 4 certification, 5 parse).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import kernels
from .classical import (is_commutator, random_points, relators_vanish, transport_relators,
                        u_generators, validate_spin, zero_spin)
from .elimination import eliminate_generator, loop_residuals
from .errors import ParseError, SkeinError, ValidationError
from .expr import parse_expression
from .gauge import GaugeCoaction
from .presentation import presentation_from_json
from .relators import build_relators
from .rewrite import DEFAULT_GUARD, RewriteSystem, convolution_dimensions, specialize
from .ribbon import CiliatedGraph, build_presentation, surface_invariants


# input -----------------------------------------------------------------------

def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError("cannot read file", {"path": path, "detail": exc.strerror}) from None
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON", {"path": path, "line": exc.lineno,
                                          "column": exc.colno}) from None


class Loaded:
    def __init__(self, data, order=None):
        if not isinstance(data, dict):
            raise ValidationError("input must be a JSON object")
        self.graph = None
        if "generators" in data:
            pres = data
        elif "vertices" in data:
            self.graph = CiliatedGraph.from_json(data)
            pres = build_presentation(self.graph).to_json()
        else:
            raise ValidationError("input is neither a graph nor a presentation")
        if order is not None:
            pres = dict(pres, order=list(order))
        self.raw = presentation_from_json(pres)
        self.presentation, self.flips = self.raw.normalized()

    def no_relations(self):
        p = self.presentation
        if p.relations:
            p, _ = eliminate_generator(p)
        return p


def _system(p, guard):
    rels, _ = build_relators(p)
    return RewriteSystem(p.alphabet(), rels, presentation=p, guard=guard)


def _rational(text, what):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{what} must be a rational number", {"text": text}) from None


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


# commands ----------------------------------------------------------------------

def cmd_info(args, ld):
    p = ld.presentation
    payload = {"generators": [{"id": g.id, "type": g.arc_type} for g in p.ordered()],
               "relations": len(p.relations)}
    if ld.graph is not None:
        payload["surface"] = surface_invariants(ld.graph).to_json()
    lines = [f"generators: {len(p.generators)} ("
             + ", ".join(f"{g.id}:{g.arc_type}" for g in p.ordered()) + ")",
             f"relations: {len(p.relations)}"]
    if "surface" in payload:
        s = payload["surface"]
        lines += [f"genus: {s['genus']}",
                  f"fattening boundary components: {s['boundary_components_of_fattening']}",
                  f"punctures (closed surface): {s['punctures_closed']}",
                  f"boundary arcs (open surface): {s['boundary_arcs_open']}",
                  f"inner punctures (open surface): {s['inner_punctures_open']}"]
    _emit(args, payload, lines)
    return 0


def cmd_present(args, ld):
    print(json.dumps(ld.presentation.to_json(), sort_keys=True, indent=2))
    return 0


def cmd_relators(args, ld):
    rs = _system(ld.no_relations(), args.guard)
    rels = rs.relator_list()
    _emit(args, [r.text() for r in rels], [r.text() for r in rels])
    return 0


def cmd_certify(args, ld):
    rs = _system(ld.no_relations(), args.guard)
    report = rs.certify_confluence()
    report["generators"] = len(rs.presentation.generators)
    print(json.dumps(report, sort_keys=True, indent=2 if args.json else None))
    return 4 if report["failures"] else 0


def _expr(text, p):
    return parse_expression(text, alphabet=[g.id for g in p.generators])


def cmd_nf(args, ld):
    p = ld.no_relations()
    rs = _system(p, args.guard)
    out = rs.normal_form(_expr(args.expr, p))
    _emit(args, {"normal_form": str(out)}, [str(out)])
    return 0


def cmd_mul(args, ld):
    p = ld.no_relations()
    rs = _system(p, args.guard)
    out = rs.multiply(_expr(args.left, p), _expr(args.right, p))
    _emit(args, {"product": str(out)}, [str(out)])
    return 0


def cmd_coact(args, ld):
    p = ld.no_relations()
    co = GaugeCoaction(p, _system(p, args.guard))
    lines = co(_expr(args.expr, p)).to_lines()
    _emit(args, {"terms": lines}, lines or ["0"])
    return 0


def cmd_coinv(args, ld):
    p = ld.no_relations()
    co = GaugeCoaction(p, _system(p, args.guard))
    basis = [str(x) for x in co.coinvariants(args.degree)]
    _emit(args, {"degree": args.degree, "dimension": len(basis), "basis": basis}, basis)
    return 0


def cmd_hilbert(args, ld):
    p = ld.no_relations()
    rs = _system(p, args.guard)
    dims = [rs.graded_dimension(n) for n in range(args.degree + 1)]
    conv = convolution_dimensions(len(p.generators), args.degree)
    payload = {"dimensions": dims, "convolution": conv, "agree": dims == conv}
    _emit(args, payload, [f"{n}: {d}" for n, d in enumerate(dims)])
    return 0 if dims == conv else 4


def cmd_loop_check(args, ld):
    p = ld.presentation
    if args.word:
        words, system, subst = [args.word], p, {}
        if p.relations:
            system, subst = eliminate_generator(p)
    elif p.relations:
        words = [list(w) for w in p.relations]
        system, subst = eliminate_generator(p)
    else:
        raise ValidationError("no relation word given and the presentation has none")
    rs = _system(system, args.guard)
    results = []
    for word in words:
        res = loop_residuals(word, p, rs, subst)
        results.append({"word": word, "pass": all(not e for row in res for e in row),
                        "residual": [[str(e) for e in row] for row in res]})
    lines = [f"{' '.join(r['word'])}: {'pass' if r['pass'] else 'fail'}" for r in results]
    _emit(args, results, lines)
    return 0 if all(r["pass"] for r in results) else 4


def cmd_specialize(args, ld):
    w0 = _rational(args.omega, "--omega")
    rs = specialize(_system(ld.no_relations(), args.guard), w0)
    rels = rs.relator_list()
    comm = all(is_commutator(r.as_polynomial()) for r in rels
               if r.leading[0].arc != r.leading[1].arc)
    payload = {"omega": str(w0), "relators": [r.text() for r in rels],
               "exchange_relators_are_commutators": comm}
    _emit(args, payload, [r.text() for r in rels])
    return 0


def _spin(args, p):
    if args.spin is None:
        return zero_spin(p)
    text = args.spin
    if not text.lstrip().startswith("{"):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise ParseError("spin function must be a JSON object") from None
    return {str(k): int(v) % 2 for k, v in data.items()}


def cmd_eval(args, ld):
    p = ld.no_relations()
    rs = _system(p, args.guard)
    w = _spin(args, p)
    if args.points:
        raw = _read_json(args.points)
        points = raw if isinstance(raw, list) else [raw]
    else:
        points = random_points(p, args.count, args.seed)
    to_u, _ = u_generators(p, w)
    polys = transport_relators(rs, to_u)
    bad = relators_vanish(polys, points)
    payload = {"points": len(points), "relators": len(polys), "nonzero": len(bad)}
    _emit(args, payload, [f"points: {len(points)}", f"relators: {len(polys)}",
                          f"nonzero evaluations: {len(bad)}"])
    return 4 if bad else 0


def cmd_spin_check(args, ld):
    p = ld.presentation
    ok, bad = validate_spin(p, _spin(args, p))
    _emit(args, {"ok": ok, "failing_relations": bad}, ["pass" if ok else f"fail {bad}"])
    return 0 if ok else 4


COMMANDS = {
    "info": cmd_info, "present": cmd_present, "relators": cmd_relators, "certify": cmd_certify,
    "nf": cmd_nf, "mul": cmd_mul, "coact": cmd_coact, "coinv": cmd_coinv,
    "hilbert": cmd_hilbert, "loop-check": cmd_loop_check, "specialize": cmd_specialize,
    "eval": cmd_eval, "spin-check": cmd_spin_check,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="skeinpbw", description=__doc__.splitlines()[0])
    parser.add_argument("--backend", action="store_true", help="print the kernel backend and exit")
    sub = parser.add_subparsers(dest="command")

    def add(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("file", help="graph or presentation JSON")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="rewrite step budget")
        sp.add_argument("--order", help="JSON file listing generator ids in increasing order")
        return sp

    add("info", "surface invariants and generator types")
    add("present", "the normalized presentation as JSON")
    add("relators", "all relators, one per line")
    add("certify", "confluence report")
    add("nf", "normal form of an expression").add_argument("expr")
    sp = add("mul", "normal form of a product")
    sp.add_argument("left")
    sp.add_argument("right")
    add("coact", "gauge coaction of an expression").add_argument("expr")
    add("coinv", "coinvariants up to a word length").add_argument("--degree", type=int,
                                                                  required=True)
    add("hilbert", "graded dimensions").add_argument("--degree", type=int, required=True)
    add("loop-check", "trivial-loop identity").add_argument(
        "word", nargs="*", help="letters b_k ... b_1 (default: the relations of FILE)")
    add("specialize", "relators at a rational w").add_argument("--omega", required=True)
    sp = add("eval", "evaluate the w=1 relators at SL2 points")
    sp.add_argument("--points", help="JSON map (or list of maps) id -> 2x2 rationals")
    sp.add_argument("--count", type=int, default=100, help="random points when --points is absent")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--spin", help="spin function as JSON or a file path")
    add("spin-check", "parity of a spin function on the relations").add_argument(
        "--spin", help="spin function as JSON or a file path")
    return parser


def _error(exc):
    print(json.dumps(exc.to_json(), sort_keys=True), file=sys.stderr)
    return exc.code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend:
        print(kernels.BACKEND)
        return 0
    if not args.command:
        parser.print_help()
        return 2
    try:
        order = _read_json(args.order) if args.order else None
        ld = Loaded(_read_json(args.file), order)
        return COMMANDS[args.command](args, ld)
    except SkeinError as exc:
        return _error(exc)
    except (KeyError, TypeError, ValueError) as exc:
        return _error(ValidationError("invalid input", {"detail": str(exc)}))


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()

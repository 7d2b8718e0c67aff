"""Command-line front end.

Exit codes: 0 success, 1 domain or input error (one-line diagnostic on
stderr), 2 usage error (argparse).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import exactla as la
from .contextuality import (basis_parity_argument, cabello18_vectors, kcbs_scenario,
                            ks_check, verify_cabello18)
from .errors import AtomGraphError, InternalConsistencyError
from .extension import context_extension, equal_dim_extension, realize_extension
from .fixtures import BUILTIN_GRAPHS, BUILTIN_PROJECTORS
from .graph import context_counts, graph_isomorphic, maximal_cliques, weighted_independence
from .graphio import graph_to_dict, load_graph, to_dimacs
from .orthorep import (construct_flior, rep_to_dict, verify_faithful,
                       verify_linear_independence)
from .pba import (atom_graph, atoms, generate_pba, is_exclusive, pba_dimension,
                  pba_isomorphic, pba_to_dict, symbolic_from_atom_graph)
from .rational import fmt, fmt_float, fmt_matrix, parse, parse_matrix, parse_vector
from .states import (extend_substate, find_state, quantum_state_eval, state_from_dict,
                     state_to_dict, zero_one_state)


class UsageError(Exception):
    pass


# -- input helpers ---------------------------------------------------------------

def _graph(args):
    if args.builtin:
        if args.builtin not in BUILTIN_GRAPHS:
            raise UsageError(f"unknown builtin graph {args.builtin!r}; "
                             f"choose from {', '.join(sorted(BUILTIN_GRAPHS))}")
        return BUILTIN_GRAPHS[args.builtin]()
    return load_graph(args.input)


def _read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def load_projector_set(obj):
    """``{"dimension": d, "projectors": {name: matrix}}`` or ``{"vectors": {name: ray}}``."""
    if not isinstance(obj, dict):
        raise ValueError("projector file must be a JSON object")
    d = obj.get("dimension")
    names, projs = [], []
    for name, rows in obj.get("projectors", {}).items():
        names.append(name)
        projs.append(la.Projector(parse_matrix(rows)))
    for name, vec in obj.get("vectors", {}).items():
        v = parse_vector(vec)
        names.append(name)
        projs.append(la.projector_onto([v], len(v)))
    if not projs:
        raise ValueError("projector file lists no projectors or vectors")
    if d is not None and any(p.dim != d for p in projs):
        raise ValueError("projector order does not match declared dimension")
    return names, projs


def _projectors(args):
    if args.builtin:
        if args.builtin not in BUILTIN_PROJECTORS:
            raise UsageError(f"unknown builtin projector set {args.builtin!r}; "
                             f"choose from {', '.join(sorted(BUILTIN_PROJECTORS))}")
        return BUILTIN_PROJECTORS[args.builtin]()
    return load_projector_set(_read_json(args.input))


def _num(x, as_float):
    return fmt_float(x) if as_float else fmt(x)


def _plain(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _emit(obj, args, text_lines=None):
    if args.json or text_lines is None:
        print(json.dumps(obj, indent=2, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


# -- commands --------------------------------------------------------------------

def cmd_cliques(args):
    g = _graph(args)
    cliques = maximal_cliques(g)
    cg = context_counts(g)
    obj = {"cliques": [[g.labels[v] for v in C] for C in cliques],
           "context_counts": dict(zip(g.labels, cg)),
           "c_total": len(cliques)}
    lines = ["{" + ", ".join(g.labels[v] for v in C) + "}" for C in cliques]
    lines.append(f"c(G) = {len(cliques)}")
    _emit(obj, args, lines)


def cmd_alpha(args):
    g = _graph(args)
    if args.weights == "ones":
        w = [Fraction(1)] * g.n
    elif args.weights == "cg":
        w = [Fraction(c) for c in context_counts(g)]
    else:
        obj = _read_json(args.weights)
        if isinstance(obj, dict):
            w = [parse(obj[label]) for label in g.labels]
        else:
            w = [parse(x) for x in obj]
    value, witness = weighted_independence(g, w)
    obj = {"alpha": _num(value, args.float), "witness": [g.labels[i] for i in witness],
           "weights": {label: _num(x, args.float) for label, x in zip(g.labels, w)}}
    shown = fmt_float(value) if args.float else _plain(value)
    _emit(obj, args, [shown, "witness: " + " ".join(g.labels[i] for i in witness)])


def cmd_ks_check(args):
    report = ks_check(_graph(args))
    obj = report.to_dict(as_float=args.float)
    if not args.timing:
        obj.pop("elapsed_ms")
    g = report.graph
    lines = [f"graph: n={g.n} m={len(g.edges())}",
             f"c(G) = {report.c_total}",
             f"alpha(G;c_G) = {_plain(report.alpha_cg)}  witness: "
             + " ".join(g.labels[i] for i in report.witness),
             "0-1 state: " + ("none" if report.zero_one is None else
                              " ".join(g.labels[i] for i, v in enumerate(report.zero_one) if v)),
             f"statements: {list(report.statements)}",
             f"verdict: {report.verdict} ({obj['scope']})"]
    if args.timing:
        lines.append(f"elapsed: {report.elapsed_ms:.3f} ms")
    _emit(obj, args, lines)


def cmd_orthorep(args):
    g = _graph(args)
    rep = construct_flior(g)
    obj = rep_to_dict(rep, as_float=args.float)
    if args.verify:
        obj["verified"] = {"faithful": verify_faithful(g, rep),
                           "linearly_independent": verify_linear_independence(rep)}
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def cmd_extend(args):
    g = _graph(args)
    ext = equal_dim_extension(g) if args.equal_dim else context_extension(g)
    if args.format == "dimacs":
        sys.stdout.write(to_dimacs(ext))
    else:
        print(json.dumps(graph_to_dict(ext), indent=2, ensure_ascii=False))


def cmd_realize(args):
    res = realize_extension(_graph(args))
    b = res.algebra
    obj = {
        "extended": graph_to_dict(res.extended),
        "rep": rep_to_dict(res.rep, as_float=args.float),
        "projectors": {name: fmt_matrix(p.matrix, args.float)
                       for name, p in zip(res.extended.labels, res.atom_projectors)},
        "algebra": pba_to_dict(b, as_float=args.float),
        "iso": res.iso,
    }
    lines = [f"base: n={res.base.n} m={len(res.base.edges())}",
             f"extended: n={res.extended.n} m={len(res.extended.edges())}",
             f"ambient dimension: {res.rep.dimension}",
             f"algebra elements: {len(b)}",
             "atoms: " + " ".join(b.names[a] for a in atoms(b)),
             "atom graph matches extension: yes"]
    _emit(obj, args, lines)


def cmd_pba(args):
    if args.action == "from-graph":
        b = symbolic_from_atom_graph(_graph(args))
    else:
        names, projs = _projectors(args)
        b = generate_pba(projs, names=names, cap=args.cap)
    if args.action == "atoms":
        obj = {"atoms": [b.names[a] for a in atoms(b)]}
        _emit(obj, args, obj["atoms"])
    elif args.action == "atom-graph":
        print(json.dumps(graph_to_dict(atom_graph(b)), indent=2, ensure_ascii=False))
    else:
        obj = pba_to_dict(b, as_float=args.float)
        lines = [f"elements: {len(b)}",
                 "names: " + " ".join(b.names),
                 "atoms: " + " ".join(b.names[a] for a in atoms(b)),
                 f"dimension: {pba_dimension(b)}",
                 f"exclusive: {is_exclusive(b)}"]
        _emit(obj, args, lines)


def cmd_state(args):
    if args.action == "eval-quantum":
        names, projs = _projectors(args)
        if args.rho:
            rho = parse_matrix(_read_json(args.rho))
        elif args.psi:
            psi = parse_vector(_read_json(args.psi))
            norm = la.dot(psi, psi)
            rho = tuple(tuple(a * b / norm for b in psi) for a in psi)
        else:
            raise UsageError("eval-quantum needs --rho or --psi")
        values = quantum_state_eval(projs, rho)
        obj = state_to_dict(names, values, as_float=args.float)
        _emit(obj, args, [f"{n}: {obj[n]}" for n in names])
        return
    g = _graph(args)
    if args.action == "extend":
        if not args.substate:
            raise UsageError("state extend needs --substate FILE")
        q, _ = state_from_dict(g, _read_json(args.substate))
        ext = context_extension(g)
        values = extend_substate(g, q)
        obj = state_to_dict(ext.labels, values, as_float=args.float)
        print(json.dumps(obj, indent=2, ensure_ascii=False))
        return
    if args.action == "find":
        values = find_state(g)
    else:
        values = zero_one_state(g)
    obj = None if values is None else state_to_dict(g.labels, values, as_float=args.float)
    if obj is None and not args.json:
        print("none")
        return
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def cmd_builtin(args):
    if args.name == "kcbs":
        sc = kcbs_scenario()
        obj = sc.to_dict()
        lines = [f"classical bound alpha(C5) = {_plain(sc.classical_bound)}",
                 f"quantum value sum tr(rho P_i) = {fmt_float(sc.quantum_value)}",
                 f"violation: {sc.violation}",
                 f"extended atom graph: n={sc.extended.n} cliques="
                 f"{len(maximal_cliques(sc.extended))}"]
    elif args.name == "cabello18":
        rays = cabello18_vectors()
        verify_cabello18(rays)
        report = ks_check(BUILTIN_GRAPHS["cabello18"]())
        even, nb = basis_parity_argument()
        obj = report.to_dict(as_float=args.float)
        if not args.timing:
            obj.pop("elapsed_ms")
        obj["fixture"] = {"rays": [[fmt(x) for x in r] for r in rays], "verified": True,
                          "bases": nb, "memberships_even": even}
        lines = [f"rays: {len(rays)} (fixture verified)",
                 f"c(G) = {report.c_total}, alpha(G;c_G) = {_plain(report.alpha_cg)}, "
                 f"gap = {_plain(report.gap)}",
                 f"0-1 state: {'none' if report.zero_one is None else 'found'}",
                 f"parity: every ray in an even number of the {nb} bases: {even}",
                 f"verdict: {report.verdict}"]
    else:
        names, projs = BUILTIN_PROJECTORS["fig3-bowtie"]()
        b = generate_pba(projs, names=names)
        bowtie = BUILTIN_GRAPHS["fig3-bowtie"]()
        ag = atom_graph(b)
        sym = symbolic_from_atom_graph(bowtie)
        obj = {"elements": b.names, "atoms": [b.names[a] for a in atoms(b)],
               "atom_graph": graph_to_dict(ag),
               "matches_bowtie": graph_isomorphic(ag, bowtie) is not None,
               "symbolic_isomorphic": pba_isomorphic(b, sym)}
        lines = [f"elements: {len(b)}", "atoms: " + " ".join(obj["atoms"]),
                 "atom graph edges: " + " ".join(f"{a}-{c}" for a, c in ag.edge_labels()),
                 f"atom graph is the bowtie: {obj['matches_bowtie']}",
                 f"isomorphic to symbolic reconstruction: {obj['symbolic_isomorphic']}"]
    _emit(obj, args, lines)


# -- parser ------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--float", action="store_true",
                        help="render rationals as 17-significant-digit decimals")

    def add_source(parser, what="graph file (JSON or DIMACS)"):
        parser.add_argument("input", nargs="?", help=what)
        parser.add_argument("--builtin", help="use a built-in input instead of a file")

    p = argparse.ArgumentParser(prog="atomgraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cliques", parents=[common], help="maximal cliques")
    add_source(s)
    s.set_defaults(func=cmd_cliques)

    s = sub.add_parser("alpha", parents=[common], help="weighted independence number")
    add_source(s)
    s.add_argument("--weights", default="ones", help="'ones', 'cg', or a JSON weight file")
    s.set_defaults(func=cmd_alpha)

    s = sub.add_parser("ks-check", parents=[common], help="KS contextuality report")
    add_source(s)
    s.add_argument("--timing", action="store_true", help="include elapsed time")
    s.set_defaults(func=cmd_ks_check)

    s = sub.add_parser("orthorep", parents=[common],
                       help="faithful linearly independent co-representation")
    add_source(s)
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_orthorep)

    s = sub.add_parser("extend", parents=[common], help="context extension")
    add_source(s)
    s.add_argument("--equal-dim", action="store_true")
    s.add_argument("--format", choices=["json", "dimacs"], default="json")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("realize", parents=[common],
                       help="projector algebra whose atom graph is the extension")
    add_source(s)
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("pba", parents=[common], help="partial Boolean algebras")
    s.add_argument("action", choices=["generate", "atoms", "atom-graph", "from-graph"])
    add_source(s, "projector-set JSON (graph file for from-graph)")
    s.add_argument("--cap", type=int, default=4096, help="closure element cap")
    s.set_defaults(func=cmd_pba)

    s = sub.add_parser("state", parents=[common], help="states on graphs")
    s.add_argument("action", choices=["find", "zero-one", "extend", "eval-quantum"])
    add_source(s, "graph file (projector-set JSON for eval-quantum)")
    s.add_argument("--substate", help="substate JSON for 'extend'")
    s.add_argument("--rho", help="density matrix JSON for 'eval-quantum'")
    s.add_argument("--psi", help="state vector JSON for 'eval-quantum'")
    s.set_defaults(func=cmd_state)

    s = sub.add_parser("builtin", parents=[common], help="built-in scenarios")
    s.add_argument("name", choices=["kcbs", "cabello18", "fig3-bowtie"])
    s.add_argument("--timing", action="store_true")
    s.set_defaults(func=cmd_builtin)
    return p


def run(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "builtin":
        if bool(args.input) == bool(args.builtin):
            parser.error("give exactly one of an input file or --builtin")
    try:
        args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except (AtomGraphError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"error: {msg}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

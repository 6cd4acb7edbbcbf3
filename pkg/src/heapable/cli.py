"""Command-line front end.

Output is ``key: value`` lines.  Exit codes: 0 success, 1 infinite or
infeasible result (or a failed ``verify`` check), 2 bad input, 3 internal
inconsistency between independent computations.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import alphabet as ab
from . import formats as fmt
from . import oracles
from .permdag import (
    TopOrder,
    build_permdag,
    find_transitivity_gap,
    find_umbrella,
    is_acyclic,
    is_topological,
)
from .sequences import as_sequence, lhs_dp, lhs_reconstruct, lhs_stream
from .treewidth_mbt import (
    check_decomposition,
    heuristic_decomposition,
    rooted_mbt,
    unrooted_mbt,
)

OK, INFEASIBLE, BAD_INPUT, INCONSISTENT = 0, 1, 2, 3


class InputError(Exception):
    pass


class Inconsistent(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _fmt_alpha(a) -> str:
    return "inf" if a == math.inf else str(int(a))


def _names(vs) -> str:
    return " ".join(str(v + 1) for v in vs)


# -- subcommands --------------------------------------------------------------------


def cmd_lhs(args, out) -> int:
    if args.stream:
        return _lhs_stream(args, out)
    seqs = fmt.parse_sequences(_read(args.input)) or [[]]
    for values in seqs:
        s = as_sequence(values)
        length, table = lhs_dp(s)
        out(f"length: {length}")
        if args.witness:
            out(f"indices: {_names(lhs_reconstruct(table, s))}")
        if args.oracle:
            ref = oracles.brute_lhs(values)
            out(f"oracle: {ref}")
            if ref != length:
                raise Inconsistent(f"dp gives {length}, oracle gives {ref}")
        if args.pretty:
            verdict = "heapable" if length == len(values) else "not heapable"
            out(f"# {len(values)} labels, longest heapable subsequence {length}, {verdict}")
    return OK


def _lhs_stream(args, out) -> int:
    if args.k is not None:
        acc = lhs_stream(args.k)
        src = sys.stdin if args.input == "-" else open(args.input)
        try:
            for label in fmt.iter_labels(src):
                if label > args.k:
                    raise InputError(f"label {label} outside 1..{args.k}")
                out(str(acc.feed(label)))
        finally:
            if src is not sys.stdin:
                src.close()
        return OK
    # without --k the alphabet is only known after reading everything
    values = [v for seq in fmt.parse_sequences(_read(args.input)) for v in seq]
    s = as_sequence(values)
    acc = lhs_stream(s.k)
    for label in s.items:
        out(str(acc.feed(label)))
    return OK


def _load_dag(args, text=None):
    g, order = fmt.parse_dag(_read(args.input) if text is None else text)
    if args.order:
        order = fmt.parse_order(_read(args.order), g.n)
    if order is None:
        order = TopOrder.identity(g.n)
    return g, order


def cmd_alphabet(args, out) -> int:
    g, t = _load_dag(args)
    if not is_topological(g, t):
        raise InputError("ordering is not a topological order of the graph")
    res = ab.greedy_assign(g, t)
    lp = ab.min_alpha_lp(g, t)
    ok, witness = ab.polyhedron_feasible(g, t)
    out(f"alpha: {_fmt_alpha(res.alpha)}")
    if not res.finite:
        kind, *triple = res.obstruction
        out(f"obstruction: {kind} {_names(triple)}")
        try:
            ab.minmax_alpha(g, t)
            tournament_cycle = False
        except ab.NotUmbrellaFreeError:
            tournament_cycle = True
        out(f"minmax_path: {'cycle' if tournament_cycle else 'none'}")
        out(f"lp_value: {_fmt_alpha(lp)}")
        if not ok:
            out("lp_cycle: " + "; ".join(str(c) for c in witness))
        if lp != math.inf or ok:
            raise Inconsistent("greedy reports inf but the constraint system is feasible")
        return INFEASIBLE
    seq = res.as_sequence(t)
    value, path = ab.minmax_alpha(g, t)
    out(f"sequence: {fmt.format_sequence(seq)}")
    out(f"minmax_path: {_names(path)}")
    out(f"lp_value: {_fmt_alpha(lp)}")
    out(f"lp_witness: {fmt.format_sequence(witness)}")
    if g.n and not (res.alpha == value == lp):
        raise Inconsistent(f"greedy {res.alpha}, min-max {value}, lp {lp}")
    if args.oracle:
        ref = oracles.brute_gamma_alpha(g, t)
        out(f"oracle: {_fmt_alpha(ref)}")
        if ref != res.alpha:
            raise Inconsistent(f"greedy {res.alpha}, oracle {ref}")
    if args.pretty:
        out(f"# {g.n} vertices, {g.m} arcs, labels 1..{_fmt_alpha(res.alpha)} suffice")
    return OK


def _load_ugraph_td(args):
    g = fmt.parse_ugraph(_read(args.input))
    if args.td:
        td = fmt.parse_td(_read(args.td), g.n)
        bad = check_decomposition(g, td)
        if bad is not None:
            raise InputError(f"invalid decomposition, {bad.render(1)}")
    elif args.heuristic_td:
        td = heuristic_decomposition(g)
    else:
        raise InputError("give --td <file> or --heuristic-td")
    return g, td


def cmd_mbt(args, out) -> int:
    g, td = _load_ugraph_td(args)
    if args.root is not None:
        if not 1 <= args.root <= g.n:
            raise InputError(f"root {args.root} outside 1..{g.n}")
        tree = rooted_mbt(g, td, args.root - 1)
        ref = oracles.brute_mbt_rooted(g, args.root - 1) if args.oracle else None
    else:
        tree = unrooted_mbt(g, td)
        ref = oracles.brute_mbt_undirected(g) if args.oracle else None
    out(f"size: {tree.size}")
    for u, v in sorted(tree.edges):
        out(f"edge: {u + 1} {v + 1}")
    if args.oracle:
        out(f"oracle: {ref}")
        if ref != tree.size:
            raise Inconsistent(f"dp gives {tree.size}, oracle gives {ref}")
    if args.pretty:
        out(f"# decomposition width {td.width}, tree on {tree.size} of {g.n} vertices")
    return OK


def cmd_permdag(args, out) -> int:
    seqs = fmt.parse_sequences(_read(args.input))
    if len(seqs) != 1:
        raise InputError(f"expected one sequence, found {len(seqs)}")
    out(fmt.format_dag(build_permdag(seqs[0])))
    return OK


def cmd_verify(args, out) -> int:
    text = _read(args.input)
    header = next((ln.split() for ln in text.splitlines() if ln.startswith("p ")), None)
    if header and len(header) > 1 and header[1] == "tw":
        g = fmt.parse_ugraph(text)
        if not args.td:
            raise InputError("verifying an undirected graph needs --td")
        bad = check_decomposition(g, fmt.parse_td(_read(args.td), g.n))
        out("decomposition: valid" if bad is None else f"decomposition: invalid {bad.render(1)}")
        return OK if bad is None else INFEASIBLE
    g, t = _load_dag(args, text)
    good = True
    acyclic = is_acyclic(g)
    out(f"acyclic: {'yes' if acyclic else 'no'}")
    gap = find_transitivity_gap(g)
    out(f"transitive: {'yes' if gap is None else 'no ' + _names(gap)}")
    good &= acyclic and gap is None
    if is_topological(g, t):
        out("topological: yes")
        umb = find_umbrella(g, t)
        out(f"umbrella_free: {'yes' if umb is None else 'no ' + _names(umb)}")
        good &= umb is None
    else:
        out("topological: no")
        good = False
    return OK if good else INFEASIBLE


def cmd_oracle(args, out) -> int:
    """Fixture lines ``input -> value`` from the exhaustive solvers."""
    text = _read(args.input)
    if args.kind == "lhs":
        for values in fmt.parse_sequences(text):
            out(f"{fmt.format_sequence(values)} -> {oracles.brute_lhs(values)}")
    elif args.kind == "mbt-dag":
        for values in fmt.parse_sequences(text):
            ref = oracles.brute_mbt_directed(build_permdag(values))
            out(f"{fmt.format_sequence(values)} -> {ref}")
    elif args.kind == "mbt":
        g = fmt.parse_ugraph(text)
        if args.root is not None:
            out(f"{fmt.encode_ugraph(g)} @{args.root} -> {oracles.brute_mbt_rooted(g, args.root - 1)}")
        else:
            out(f"{fmt.encode_ugraph(g)} -> {oracles.brute_mbt_undirected(g)}")
    elif args.kind == "alpha":
        g, t = _load_dag(args, text)
        out(f"{_names(t.vertices)} -> {_fmt_alpha(oracles.brute_gamma_alpha(g, t))}")
    return OK


# -- wiring --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heapable", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, oracle=True):
        sp.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
        sp.add_argument("--pretty", action="store_true", help="append a human summary")
        if oracle:
            sp.add_argument("--oracle", action="store_true",
                            help="also run the exhaustive solver and compare")

    sp = sub.add_parser("lhs", help="longest heapable subsequence")
    common(sp)
    sp.add_argument("--witness", action="store_true", help="print 1-based indices")
    sp.add_argument("--stream", action="store_true", help="print running lengths")
    sp.add_argument("--k", type=int, help="alphabet size for true streaming")
    sp.set_defaults(func=cmd_lhs)

    sp = sub.add_parser("alphabet", help="alphabet size under a topological order")
    common(sp)
    sp.add_argument("--order", help="file with an 'o v1 .. vn' line")
    sp.set_defaults(func=cmd_alphabet)

    sp = sub.add_parser("mbt", help="maximum binary tree via tree decomposition")
    common(sp)
    sp.add_argument("--td", help="PACE .td decomposition file")
    sp.add_argument("--heuristic-td", action="store_true", help="use min-degree heuristic")
    sp.add_argument("--root", type=int, help="1-based root vertex (rooted variant)")
    sp.set_defaults(func=cmd_mbt)

    sp = sub.add_parser("permdag", help="permutation DAG of a sequence")
    common(sp, oracle=False)
    sp.set_defaults(func=cmd_permdag)

    sp = sub.add_parser("verify", help="transitivity / umbrella / decomposition checks")
    common(sp, oracle=False)
    sp.add_argument("--order", help="file with an 'o v1 .. vn' line")
    sp.add_argument("--td", help="PACE .td decomposition file")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="fixture lines from the exhaustive solvers")
    sp.add_argument("kind", choices=["lhs", "mbt-dag", "mbt", "alpha"])
    common(sp, oracle=False)
    sp.add_argument("--order", help="file with an 'o v1 .. vn' line")
    sp.add_argument("--root", type=int, help="1-based root for 'mbt'")
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv=None, out=None) -> int:
    out = out or (lambda line: print(line))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args, out)
    except (InputError, oracles.OracleBudgetExceeded, ValueError) as exc:
        # parse errors, bad decompositions and bad orders are all ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except Inconsistent as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())

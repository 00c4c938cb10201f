"""vtorb command line: generate family members, compute invariants, verify claims.

Exit codes: 0 success, 1 a theorem claim failed, 2 usage error, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families, formats, verify
from .constructions import induced_on_matching, invariant_matching, merge_cubic, merge_quartic, quotient
from .graph import Digraph, Graph, GraphError
from .group import PermGroup, default_cap, meo
from .perm import parse_perm
from .search import automorphism_group

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _cap(value: str) -> int:
    try:
        cap = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cap must be an integer, got {value!r}") from None
    if cap < 1:
        raise argparse.ArgumentTypeError("cap must be >= 1")
    return cap


def _positive(value: str) -> int:
    try:
        v = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return v


def _steps(value: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in value.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"steps must be integers, got {value!r}") from None


def read_graphs(path: str, fmt: str = "auto") -> list[tuple[str, Graph]]:
    """Graphs from a file (or stdin for '-'), each tagged ``source:line``."""
    if path == "-":
        data = sys.stdin.buffer.read()
        label = "stdin"
    else:
        with open(path, "rb") as fh:
            data = fh.read()
        label = os.path.basename(path)
    if fmt == "auto":
        first = data.lstrip().split(b"\n", 1)[0].strip()
        fmt = "edgelist" if first and all(tok.isdigit() for tok in first.split()) else "g6"
    if fmt == "edgelist":
        return [(label, formats.parse_edge_list(data.decode("ascii")))]
    out = []
    for lineno, line in enumerate(data.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if fmt == "g6":
            g = formats.decode_any(line)
        else:
            g = formats.decode_sparse6(line)
        out.append((f"{label}:{lineno}", g))
    return out


def _write(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    try:
        g = families.build(args.family, n=args.n, k=args.k, steps=args.steps, r=args.r, s=args.s)
    except (GraphError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if isinstance(g, Digraph):
        text = formats.format_arc_list(g)
    elif args.format == "s6":
        text = formats.encode_sparse6(g).decode("ascii") + "\n"
    elif args.format == "edgelist":
        text = formats.format_edge_list(g)
    else:
        text = formats.encode_graph6(g).decode("ascii") + "\n"
    _write(text, args.output)
    return EXIT_OK


def invariants(g: Graph, cap: int) -> dict:
    a = verify.Analysis(g, cap=cap)
    G = a.group
    vt = a.vt
    empty = g.n == 0
    return {
        "n": g.n,
        "valence": g.valence(),
        "connected": a.connected,
        "vertex_transitive": vt,
        "arc_transitive": vt and a.at,
        "aut_order": G.order,
        "meo": 1 if empty else a.meo,
        "ell": 0 if empty else a.ell,
        "mu": a.mu if not empty else None,
        "meo_local": 1 if empty else a.meo_local[0],
        "exact": a.exact and (empty or a.meo_local[1]),
    }


def cmd_invariants(args) -> int:
    cap = args.cap or default_cap()
    lines = []
    for name, g in read_graphs(args.input, args.input_format):
        rec = {"graph": name, **invariants(g, cap)}
        lines.append(json.dumps(rec, sort_keys=True))
    _write("\n".join(lines) + ("\n" if lines else ""), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if bool(args.input) == bool(args.family_corpus):
        raise UsageError("give exactly one of an input file or --family-corpus")
    try:
        verify.suite_claims(args.suite)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.family_corpus:
        try:
            corpus = verify.family_corpus(args.family_corpus)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        name = args.family_corpus
    else:
        corpus = read_graphs(args.input, args.input_format)
        name = "stdin" if args.input == "-" else os.path.basename(args.input)
    report = verify.scan(corpus, args.suite, cap=args.cap or default_cap(), jobs=args.jobs, corpus_name=name)
    _write(report.to_csv() if args.format == "csv" else report.dumps(), args.output)
    summary = report.summary
    for v in report.verdicts:
        if v.status == verify.FAILS and verify.claim_kind(v.claim) == "conjecture":
            print(f"conjecture counterexample: {v.graph} {v.claim}", file=sys.stderr)
    if summary["theorem_fails"]:
        return EXIT_FAIL
    if args.strict_conjectures and summary["conjecture_fails"]:
        return EXIT_FAIL
    return EXIT_OK


def _group_from_perms(g: Graph, texts) -> PermGroup:
    try:
        perms = [parse_perm(t, g.n) for t in texts]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return PermGroup(g.n, perms)


def cmd_quotient(args) -> int:
    out = []
    for name, g in read_graphs(args.input, args.input_format):
        G = _group_from_perms(g, args.perm) if args.perm else automorphism_group(g)
        try:
            res = quotient(g, G)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        out.append(json.dumps({
            "graph": name,
            "quotient": formats.encode_graph6(res.quotient).decode("ascii"),
            "blocks": len(res.block_sizes),
            "block_sizes": list(res.block_sizes),
            "block_of": list(res.block_map),
        }, sort_keys=True))
    _write("\n".join(out) + ("\n" if out else ""), args.output)
    return EXIT_OK


def cmd_merge(args) -> int:
    out = []
    for name, g in read_graphs(args.input, args.input_format):
        rec: dict = {"graph": name}
        G = automorphism_group(g)
        d = g.valence()
        if d == 3:
            T = invariant_matching(g, G)
            if T is None:
                rec["merged"] = None
                rec["reason"] = "no invariant perfect matching (needs two arc orbits)"
            else:
                res = merge_cubic(g, T)
                rec.update(res.to_json())
                rec["merged"] = formats.encode_graph6(res.merged).decode("ascii")
                rec["valence"] = res.merged.valence()
                induced = induced_on_matching(G, res)
                rec["meo_induced"] = meo(induced)[0]
        elif d == 4:
            q = merge_quartic(g, G)
            if q is None:
                rec["merged"] = None
                rec["reason"] = "local action is not Sym(3) fixing one neighbour"
            else:
                rec.update(q.result.to_json())
                rec["merged"] = formats.encode_graph6(q.lam).decode("ascii")
                rec["valence"] = q.valence
                rec["arc_transitive"] = q.arc_transitive
        else:
            raise UsageError(f"{name}: merge expects a cubic or quartic graph, valence is {d}")
        out.append(json.dumps(rec, sort_keys=True))
    _write("\n".join(out) + ("\n" if out else ""), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vtorb", description="Automorphism orders and orbits of vertex-transitive graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp, optional=False):
        if optional:
            sp.add_argument("input", nargs="?", help="graph file, '-' for stdin")
        else:
            sp.add_argument("input", help="graph file, '-' for stdin")
        sp.add_argument("--input-format", choices=("auto", "g6", "s6", "edgelist"), default="auto")
        sp.add_argument("-o", "--output", help="output file (default stdout)")

    g = sub.add_parser("gen", help="write a family member")
    g.add_argument("--family", required=True, help=", ".join(families.FAMILIES))
    for flag in ("n", "k", "r", "s"):
        g.add_argument(f"--{flag}", type=int)
    g.add_argument("--steps", type=_steps, help="circulant steps, e.g. '1,3'")
    g.add_argument("--format", choices=("g6", "s6", "edgelist"), default="g6")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    inv = sub.add_parser("invariants", help="n, valence, |Aut|, meo, l(G), mu(G), meo_local as JSON lines")
    add_input(inv)
    inv.add_argument("--cap", type=_cap, help="element cap (default VTORB_CAP or 10^6)")
    inv.set_defaults(func=cmd_invariants)

    v = sub.add_parser("verify", help="run a claim suite")
    add_input(v, optional=True)
    v.add_argument("--family-corpus", choices=tuple(verify.CORPORA))
    v.add_argument("--suite", default="all", help=f"{', '.join(verify.SUITES)} or a claim id")
    v.add_argument("--strict-conjectures", action="store_true", help="conjecture counterexamples set exit 1")
    v.add_argument("--cap", type=_cap)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("quotient", help="quotient by a group (default the full automorphism group)")
    add_input(q)
    q.add_argument("--perm", action="append", help="generator in cycle or image notation (repeatable)")
    q.set_defaults(func=cmd_quotient)

    m = sub.add_parser("merge", help="contract the invariant matching (cubic) or red matching (quartic)")
    add_input(m)
    m.set_defaults(func=cmd_merge)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"vtorb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except formats.FormatError as exc:
        print(f"vtorb: parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (OSError, UnicodeDecodeError) as exc:
        print(f"vtorb: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except GraphError as exc:
        print(f"vtorb: invalid graph: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

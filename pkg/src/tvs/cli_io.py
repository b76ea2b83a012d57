"""Command-line surface, document formats, and emitters.

Two text formats cross the tool boundary: a commented edge-list format
for graphs (header ``n <count>``, one ``u v`` pair per line) and a
JSON-shaped labeling document.  Emitters recompute weights, verdicts,
and bounds from the labels; cached values in inputs are never trusted.
Documents go to stdout, diagnostics to stderr.  Exit codes: 0 success /
irregular, 1 verification failure, 2 usage or parse error, 3 search
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import bound_report
from .constructors import ConstructionCertificate, construct, tvs_formula
from .families import (
    FAMILY_KINDS,
    TWO_REGULAR,
    CanonicalOrder,
    FamilyParameterError,
    FamilySpec,
    generate,
)
from .graph_core import (
    Graph,
    GraphError,
    TotalLabeling,
    build_graph,
    verify,
    weight_profile,
)
from .oracle import BUDGET_EXCEEDED, EXACT, SearchBudget, exact_tvs

EXIT_OK = 0
EXIT_NOT_IRREGULAR = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class EdgeListParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DocumentError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Edge-list documents


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; errors carry the offending line number."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise EdgeListParseError(line_no, f"expected header 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise EdgeListParseError(line_no, f"bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise EdgeListParseError(line_no, "vertex count must be non-negative")
            continue
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"bad edge endpoints {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(line_no, f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise EdgeListParseError(line_no, f"self-loop at vertex {u}")
        if frozenset((u, v)) in seen:
            raise EdgeListParseError(line_no, f"duplicate edge ({u}, {v})")
        seen.add(frozenset((u, v)))
        edges.append((u, v))
    if n is None:
        raise EdgeListParseError(1, "empty document: missing 'n <count>' header")
    return build_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Labeling documents


def dump_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def labeling_document(cert: ConstructionCertificate) -> dict:
    """Document for a constructed labeling; all derived fields recomputed."""
    g, _ = generate(cert.family)
    labeling = cert.labeling
    profile = weight_profile(g, labeling)
    report = verify(g, labeling)
    bounds = bound_report(g)
    doc = {
        "family": cert.family.kind,
        "n": g.n,
        "s": cert.claimed_s,
        "edge_labels": list(labeling.edge_labels),
        "vertex_labels": list(labeling.vertex_labels),
        "weights": list(profile.weights),
        "is_irregular": report.is_irregular,
        "bounds": {
            "baca": bounds.baca_bound,
            "degree_count": bounds.degree_count_bound,
        },
    }
    if cert.family.kind == TWO_REGULAR:
        doc["lengths"] = list(cert.family.lengths)
    return doc


def emit_labeling(cert: ConstructionCertificate) -> str:
    return dump_document(labeling_document(cert))


def parse_labeling(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("labeling document must be a JSON object")
    for key in ("n", "s", "edge_labels", "vertex_labels"):
        if key not in doc:
            raise DocumentError(f"missing required key {key!r}")
    for key in ("edge_labels", "vertex_labels"):
        if not isinstance(doc[key], list) or not all(isinstance(x, int) for x in doc[key]):
            raise DocumentError(f"{key} must be an array of integers")
    if not isinstance(doc["n"], int) or not isinstance(doc["s"], int):
        raise DocumentError("n and s must be integers")
    return doc


# ---------------------------------------------------------------------------
# DOT emission


def emit_dot(g: Graph, lab: TotalLabeling, order: CanonicalOrder | None = None) -> str:
    """Graph description language output with label/weight annotations."""
    profile = weight_profile(g, lab)
    grouped = order is not None and any(r.group for r in order.roles)
    lines = ["graph G {"]
    for v in range(g.n):
        tag = f"v{v}"
        if order is not None:
            role = order.roles[v]
            if role.role == "center":
                tag = "center"
            elif grouped:
                tag = f"{role.role}{role.group}.{role.rank}"
            else:
                tag = f"{role.role}{role.rank}"
        lines.append(
            f'  {v} [label="{tag} λ={lab.vertex_labels[v]} / wt={profile.weights[v]}"];'
        )
    for idx, (u, v) in enumerate(g.edges):
        lines.append(f'  {u} -- {v} [label={lab.edge_labels[idx]}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# CLI


def _family_spec(args) -> FamilySpec:
    if args.family == TWO_REGULAR:
        if args.lengths is None:
            raise FamilyParameterError("lengths: two-regular requires --lengths")
        if args.n is not None:
            raise FamilyParameterError("n: two-regular takes --lengths, not --n")
        try:
            lengths = tuple(int(x) for x in args.lengths.split(","))
        except ValueError:
            raise FamilyParameterError(
                f"lengths: expected comma-separated integers, got {args.lengths!r}"
            ) from None
        return FamilySpec(TWO_REGULAR, lengths=lengths)
    if args.lengths is not None:
        raise FamilyParameterError(f"lengths: only two-regular takes --lengths")
    if args.n is None:
        raise FamilyParameterError(f"n: {args.family} requires --n")
    return FamilySpec(args.family, args.n)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _cmd_gen(args) -> int:
    g, _ = generate(_family_spec(args))
    sys.stdout.write(emit_edge_list(g))
    return EXIT_OK


def _cmd_label(args) -> int:
    spec = _family_spec(args)
    cert = construct(spec)
    sys.stdout.write(emit_labeling(cert))
    if args.dot:
        g, order = generate(spec)
        Path(args.dot).write_text(emit_dot(g, cert.labeling, order), encoding="utf-8")
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = parse_edge_list(_read(args.graph))
    doc = parse_labeling(_read(args.labeling))
    if doc["n"] != g.n:
        raise DocumentError(f"labeling is for n={doc['n']}, graph has n={g.n}")
    declared_s = doc["s"]
    labels = doc["vertex_labels"] + doc["edge_labels"]
    actual_max = max(labels) if labels else 0
    if actual_max > declared_s:
        print(
            f"labels exceed declared s={declared_s} (max used {actual_max})",
            file=sys.stderr,
        )
        return EXIT_NOT_IRREGULAR
    lab = TotalLabeling.of(doc["vertex_labels"], doc["edge_labels"], declared_s)
    report = verify(g, lab)
    if "weights" in doc:
        recomputed = list(weight_profile(g, lab).weights)
        if doc["weights"] != recomputed:
            print("warning: cached weights were stale; recomputed", file=sys.stderr)
    sys.stdout.write(
        dump_document(
            {
                "is_irregular": report.is_irregular,
                "max_label_used": report.max_label_used,
                "duplicate_weight_witness": (
                    list(report.duplicate_weight_witness)
                    if report.duplicate_weight_witness
                    else None
                ),
                "weight_range": list(report.weight_range),
            }
        )
    )
    return EXIT_OK if report.is_irregular else EXIT_NOT_IRREGULAR


def _cmd_bound(args) -> int:
    g = parse_edge_list(_read(args.graph))
    report = bound_report(g)
    sys.stdout.write(
        dump_document(
            {
                "baca": report.baca_bound,
                "degree_count": report.degree_count_bound,
                "best": report.best,
                "witness_degree": report.witness_degree,
            }
        )
    )
    return EXIT_OK


def _cmd_exact(args) -> int:
    g = parse_edge_list(_read(args.graph))
    budget = SearchBudget(max_nodes=args.max_nodes, max_k=args.max_k)
    result = exact_tvs(g, budget)
    doc: dict = {"status": result.status, "nodes": result.nodes}
    if result.status == EXACT:
        doc["k"] = result.k
        doc["edge_labels"] = list(result.witness.edge_labels)
        doc["vertex_labels"] = list(result.witness.vertex_labels)
    sys.stdout.write(dump_document(doc))
    return EXIT_BUDGET if result.status == BUDGET_EXCEEDED else EXIT_OK


def _cmd_sweep(args) -> int:
    if args.family == TWO_REGULAR:
        raise FamilyParameterError(
            "family: sweep takes single-parameter families; "
            "drive two-regular instances through 'label --lengths'"
        )
    if args.start > args.end:
        raise FamilyParameterError("from: --from must not exceed --to")
    rows = []
    for n in range(args.start, args.end + 1):
        spec = FamilySpec(args.family, n)
        cert = construct(spec)
        g, _ = generate(spec)
        report = verify(g, cert.labeling)
        rows.append(
            {
                "n": n,
                "formula": tvs_formula(spec),
                "bound": bound_report(g).degree_count_bound,
                "constructed": report.max_label_used,
                "verified": report.is_irregular,
            }
        )
    sys.stdout.write("n\tformula\tbound\tconstructed\tverified\n")
    for row in rows:
        sys.stdout.write(
            f"{row['n']}\t{row['formula']}\t{row['bound']}\t"
            f"{row['constructed']}\t{str(row['verified']).lower()}\n"
        )
    if args.plot_dir:
        from . import figures

        path = figures.render_sweep_figure(rows, args.family, Path(args.plot_dir))
        print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tvs",
        description="Optimal irregular total labelings: construction, bounds, "
        "verification, and exact search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_args(p):
        p.add_argument("--family", required=True, choices=FAMILY_KINDS)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--lengths", default=None, help="comma-separated cycle lengths (two-regular)")

    p = sub.add_parser("gen", help="emit a family graph as an edge list")
    add_family_args(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("label", help="construct an optimal irregular labeling")
    add_family_args(p)
    p.add_argument("--dot", default=None, help="also write a DOT rendering to this file")
    p.set_defaults(func=_cmd_label)

    p = sub.add_parser("verify", help="verify a labeling document against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bound", help="print both lower bounds for a graph")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("exact", help="exact strength by branch-and-bound search")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-nodes", type=int, default=10**7)
    p.add_argument("--max-k", type=int, default=0, help="0 means the vertex count")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("sweep", help="table of formula/bound/constructed over a range")
    p.add_argument("--family", required=True, choices=FAMILY_KINDS)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="end", type=int, required=True)
    p.add_argument("--plot-dir", default=None, help="also render a summary figure here")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FamilyParameterError, EdgeListParseError, DocumentError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

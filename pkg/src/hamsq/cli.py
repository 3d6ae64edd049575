"""Command-line front end.

Exit codes: 0 success / Found everywhere, 1 on any None or violation,
2 when a search budget ran out (Unknown), 64 on usage errors.
"""

from __future__ import annotations

import json
import os
import random
import sys

import click

from .corpus import read_stream
from .cycles import best_w_cycle
from .decomposition import block_forest, is_block_chain, is_dt_graph, v2
from .eps import DEFAULT_BUDGET, DegreeConstraint, find_eps, find_jeps
from .errors import HamsqError
from .hamilton import (
    FkQuery,
    HamCycleConstraint,
    certificate_payload,
    check_fk,
    ham_cycle_in_square,
)
from .powers import power as graph_power
from .powers import square as graph_square
from .corpus import full_subdivision
from .verify import (
    CHECKS,
    SCHEMA_VERSION,
    hunt_fk_failures,
    report_exit_code,
    report_to_json,
    report_to_text,
    serialize_graph,
    sweep,
)

click.UsageError.exit_code = 64

EXIT_NONE = 1
EXIT_UNKNOWN = 2


def _default_budget():
    raw = os.environ.get("HAMSQ_BUDGET")
    return int(float(raw)) if raw else DEFAULT_BUDGET


def _budget_option(f):
    return click.option(
        "--budget",
        type=float,
        default=None,
        help="search-node cap (default HAMSQ_BUDGET or 10^7)",
    )(f)


def _resolve_budget(budget):
    return int(budget) if budget is not None else _default_budget()


def _read_one(path):
    for G in read_stream(path):
        return G
    raise click.UsageError(f"no graph found in {path}")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_vertices(text):
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise click.UsageError(f"bad vertex list {text!r}") from None


def _parse_caps(text):
    caps = {}
    if not text:
        return caps
    for item in text.split(","):
        try:
            v, c = item.split("=")
            caps[int(v)] = int(c)
        except ValueError:
            raise click.UsageError(f"bad cap entry {item!r}") from None
    return caps


def _outcome_exit(outcome):
    if outcome.found:
        return 0
    return EXIT_UNKNOWN if outcome.unknown else EXIT_NONE


@click.group()
def cli():
    """Graph squares, spanning decompositions, and statement sweeps."""


# ---------------------------------------------------------------------------
# single-graph transforms
# ---------------------------------------------------------------------------


@cli.command()
@click.option("--in", "path", required=True)
@click.option("--out", default=None)
def square(path, out):
    """Emit the square of a graph."""
    G = _read_one(path)
    _emit(serialize_graph(graph_square(G)) + "\n", out)


@cli.command()
@click.option("--in", "path", required=True)
@click.option("--k", type=int, required=True)
@click.option("--out", default=None)
def power(path, k, out):
    """Emit the k-th power of a graph."""
    G = _read_one(path)
    _emit(serialize_graph(graph_power(G, k)) + "\n", out)


@cli.command()
@click.option("--in", "path", required=True)
@click.option("--out", default=None)
def subdivide(path, out):
    """Emit the full subdivision (every edge split once)."""
    G = _read_one(path)
    _emit(serialize_graph(full_subdivision(G)) + "\n", out)


@cli.command()
@click.option("--in", "path", required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
@click.option("--out", default=None)
def blocks(path, fmt, out):
    """Block decomposition, cutvertices, and block-chain classification."""
    G = _read_one(path)
    bf = block_forest(G)
    chain = is_block_chain(G) if G.is_connected() else "disconnected"
    payload = {
        "schema-version": SCHEMA_VERSION,
        "blocks": [sorted(b) for b in bf.blocks],
        "block-vertices": [sorted(b) for b in bf.block_vertices],
        "cutvertices": sorted(bf.cutvertices),
        "endblocks": [i for i, f in enumerate(bf.endblock_flags) if f],
        "chain": chain,
    }
    if fmt == "json":
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", out)
    else:
        lines = [
            f"blocks: {payload['blocks']}",
            f"cutvertices: {payload['cutvertices']}",
            f"chain: {chain}",
        ]
        _emit("\n".join(lines) + "\n", out)


@cli.command()
@click.option("--in", "path", required=True)
@click.option("--out", default=None)
def dt(path, out):
    """Report whether every edge touches a 2-valent vertex (exit 1 if not)."""
    G = _read_one(path)
    ok = is_dt_graph(G)
    _emit(f"dt: {ok}\nv2: {sorted(v2(G))}\n", out)
    if not ok:
        sys.exit(EXIT_NONE)


# ---------------------------------------------------------------------------
# searches on one graph
# ---------------------------------------------------------------------------


def _emit_outcome(outcome, payload, fmt, out):
    if fmt == "json":
        doc = {"schema-version": SCHEMA_VERSION, "result": outcome.status}
        if payload is not None:
            doc["witness"] = payload
        _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", out)
    else:
        line = outcome.status
        if payload is not None:
            line += " " + json.dumps(payload, sort_keys=True)
        _emit(line + "\n", out)
    sys.exit(_outcome_exit(outcome))


@cli.command("eps-find")
@click.option("--in", "path", required=True)
@click.option("--caps", default="", help="comma list v=cap, e.g. 0=0,3=1")
@click.option("--require-e-nonempty", is_flag=True)
@_budget_option
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
@click.option("--out", default=None)
def eps_find(path, caps, require_e_nonempty, budget, fmt, out):
    """Search for a spanning eulerian-plus-linear-forest subgraph."""
    G = _read_one(path)
    c = DegreeConstraint.of(_parse_caps(caps), require_e_nonempty=require_e_nonempty)
    got = find_eps(G, c, _resolve_budget(budget))
    payload = json.loads(got.witness.to_json()) if got.found else None
    _emit_outcome(got, payload, fmt, out)


@cli.command("jeps-find")
@click.option("--in", "path", required=True)
@click.option("--v", type=int, required=True)
@click.option("--w", type=int, required=True)
@click.option("--caps", default="")
@_budget_option
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
@click.option("--out", default=None)
def jeps_find(path, v, w, caps, budget, fmt, out):
    """Search for an EPS-graph extended by an open trail from v to w."""
    G = _read_one(path)
    c = DegreeConstraint.of(_parse_caps(caps))
    got = find_jeps(G, v, w, c, _resolve_budget(budget))
    payload = json.loads(got.witness.to_json()) if got.found else None
    _emit_outcome(got, payload, fmt, out)


@cli.command()
@click.option("--in", "path", required=True)
@click.option("--w", "w_text", required=True, help="comma list of marked vertices")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
@click.option("--out", default=None)
def wcycle(path, w_text, fmt, out):
    """Cycle maximizing how many marked vertices it visits."""
    G = _read_one(path)
    W = _parse_vertices(w_text)
    cyc, count, sound = best_w_cycle(G, W)
    payload = {
        "schema-version": SCHEMA_VERSION,
        "vertices": list(cyc.vertices),
        "edge-ids": list(cyc.edge_ids),
        "marked-on-cycle": count,
        "sound": sound,
    }
    if fmt == "json":
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", out)
    else:
        _emit(
            f"cycle {list(cyc.vertices)} marked={count} sound={sound}\n", out
        )


@cli.command()
@click.option("--in", "path", required=True)
@click.option("--k", type=int, required=True)
@click.option("--a", "a_text", required=True, help="comma list x1,...,xk")
@_budget_option
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
@click.option("--out", default=None)
def fk(path, k, a_text, budget, fmt, out):
    """Certified hamiltonian x1x2-path in the square with witness edges."""
    G = _read_one(path)
    q = FkQuery(G, k, tuple(_parse_vertices(a_text)))
    got = check_fk(q, _resolve_budget(budget))
    payload = certificate_payload(q, got.witness) if got.found else None
    _emit_outcome(got, payload, fmt, out)


@cli.command()
@click.option("--in", "path", required=True)
@click.option("--v", type=int, default=None)
@click.option("--w", "w_text", default="", help="comma list of w vertices")
@_budget_option
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
@click.option("--out", default=None)
def hamcycle(path, v, w_text, budget, fmt, out):
    """Constrained hamiltonian cycle in the square."""
    G = _read_one(path)
    w_list = tuple(_parse_vertices(w_text)) if w_text else ()
    got = ham_cycle_in_square(
        G, HamCycleConstraint(v=v, w_list=w_list), _resolve_budget(budget)
    )
    payload = list(got.witness) if got.found else None
    _emit_outcome(got, payload, fmt, out)


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

VERIFY_CHECKS = sorted(CHECKS)


@cli.command()
@click.argument("check", type=click.Choice(VERIFY_CHECKS))
@click.option("--stream", required=True, help="graph6 or edge-list stream")
@_budget_option
@click.option("--jobs", type=int, default=1)
@click.option("--sample", type=int, default=None, help="subsample the stream")
@click.option("--seed", type=int, default=0, help="sampling reproducibility")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
@click.option("--out", default=None)
def verify(check, stream, budget, jobs, sample, seed, fmt, out):
    """Check one statement over every applicable graph in a stream."""
    graphs = list(read_stream(stream))
    if sample is not None and sample < len(graphs):
        graphs = random.Random(seed).sample(graphs, sample)
    report = sweep(check, graphs, _resolve_budget(budget), jobs)
    if sample is not None:
        report["params"]["sample"] = sample
        report["params"]["seed"] = seed
    text = report_to_json(report) if fmt == "json" else report_to_text(report)
    _emit(text, out)
    sys.exit(report_exit_code(report))


@cli.command("hunt-fk")
@click.option("--stream", required=True)
@click.option("--k", type=int, required=True)
@_budget_option
@click.option("--jobs", type=int, default=1)
@click.option("--out", default=None)
def hunt_fk(stream, k, budget, jobs, out):
    """Scan for k-tuples with no certificate; findings, not a pass gate."""
    if k < 3:
        raise click.UsageError("k must be at least 3")
    graphs = list(read_stream(stream))
    report = hunt_fk_failures(graphs, k, _resolve_budget(budget), jobs)
    _emit(json.dumps(report, sort_keys=True, indent=2) + "\n", out)
    if report["summary"]["unknown"]:
        sys.exit(EXIT_UNKNOWN)


def main(argv=None):
    try:
        cli(args=argv, standalone_mode=True)
    except HamsqError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_NONE)


if __name__ == "__main__":
    main()

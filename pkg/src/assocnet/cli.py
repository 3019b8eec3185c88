"""``assocnet`` command line: ingest, split, stats, communities, influence,
compare, export.

Reports go to stdout (or ``--out``); progress notes go to stderr. Exit codes:
0 success, 1 input/parse errors, 2 undefined-result errors. A single master
seed drives every random draw and is echoed in the report header.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import __version__
from .community import detect_communities, partition_tsv
from .errors import InputError, UndefinedResultError
from .export import EXPORT_FORMATS, export_graph
from .graph import AssociationNetwork
from .influence import spreading_scores, welch_t_test
from .ingest import (
    DEFAULT_MIN_ENDORSEMENT,
    build_network,
    filter_min_endorsement,
    parse_pairs_file,
    parse_ratings_file,
    split_by_median_concreteness,
)
from .randgraph import DEFAULT_RUNS
from .report import ReportOptions, file_digest, render, stats_report


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _log(message: str) -> None:
    click.echo(message, err=True)


def _load_network(path: str) -> AssociationNetwork:
    return AssociationNetwork.load(path)


@click.group()
@click.version_option(version=__version__, prog_name="assocnet")
def cli() -> None:
    """Semantic network analysis of word-association norms."""


@cli.command()
@click.argument("pairs", type=click.Path(exists=True, dir_okay=False))
@click.option("--ratings", type=click.Path(exists=True, dir_okay=False), default=None,
              help="word/rating table attached to nodes as concreteness.")
@click.option("--min-endorsement", type=int, default=DEFAULT_MIN_ENDORSEMENT, show_default=True,
              help="Keep responses endorsed by at least this many participants.")
@click.option("--delimiter", default="\t", help="Field delimiter (default: TAB).")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write network JSON here.")
def ingest(pairs: str, ratings: str | None, min_endorsement: int, delimiter: str, out: str | None) -> None:
    """Parse a norms file and build the whole directed network."""
    records = parse_pairs_file(pairs, delimiter=delimiter)
    kept = filter_min_endorsement(records, min_endorsement)
    table = parse_ratings_file(ratings, delimiter=delimiter) if ratings else None
    net = build_network(kept, table)
    _log(f"ingest: {len(records)} records, {len(kept)} kept at threshold {min_endorsement}; "
         f"network n={net.n} m={net.m}")
    _emit(net.to_json(), out)


@cli.command()
@click.argument("network", type=click.Path(exists=True, dir_okay=False))
@click.option("--out-prefix", default="split", show_default=True,
              help="Writes <prefix>.concrete.json and <prefix>.abstract.json.")
def split(network: str, out_prefix: str) -> None:
    """Split a network into concrete/abstract halves at the cue median."""
    net = _load_network(network)
    concrete, abstract, median = split_by_median_concreteness(net)
    concrete_path = f"{out_prefix}.concrete.json"
    abstract_path = f"{out_prefix}.abstract.json"
    Path(concrete_path).write_text(concrete.to_json(), encoding="utf-8")
    Path(abstract_path).write_text(abstract.to_json(), encoding="utf-8")
    click.echo(
        f'{{"median": {median}, "concrete": {{"n": {concrete.n}, "m": {concrete.m}}}, '
        f'"abstract": {{"n": {abstract.n}, "m": {abstract.m}}}}}'
    )
    _log(f"split: median {median}; wrote {concrete_path}, {abstract_path}")


@cli.command()
@click.argument("pairs", type=click.Path(exists=True, dir_okay=False), required=False)
@click.option("--network", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Analyze a stored network JSON instead of a pairs file.")
@click.option("--ratings", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--min-endorsement", type=int, default=DEFAULT_MIN_ENDORSEMENT, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True, help="Master seed for all randomness.")
@click.option("--runs", type=int, default=DEFAULT_RUNS, show_default=True, help="Random-benchmark ensemble size.")
@click.option("--ci-radius", type=int, default=2, show_default=True, help="Collective-influence radius.")
@click.option("--mode", type=click.Choice(["directed", "undirected", "both"]), default="both", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "md", "tsv"]), default="json", show_default=True)
@click.option("--delimiter", default="\t")
@click.option("--threads", type=int, default=1, show_default=True, help="Worker threads (never changes results).")
@click.option("--timing/--no-timing", default=False, help="Record wall-clock time (breaks byte-reproducibility).")
@click.option("--unweighted-q", is_flag=True, default=False, help="Ignore weights in modularity.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def stats(pairs: str | None, network: str | None, ratings: str | None, min_endorsement: int,
          seed: int, runs: int, ci_radius: int, mode: str, fmt: str, delimiter: str,
          threads: int, timing: bool, unweighted_q: bool, out: str | None) -> None:
    """Full statistics report (whole + concrete/abstract when ratings are given)."""
    if (pairs is None) == (network is None):
        raise InputError("pass exactly one of PAIRS or --network")
    options = ReportOptions(
        min_endorsement=min_endorsement,
        seed=seed,
        runs=runs,
        ci_radius=ci_radius,
        mode=mode,
        threads=threads,
        weighted_modularity=not unweighted_q,
        include_timing=timing,
    )
    inputs = []
    split_median = None
    if network is not None:
        net = _load_network(network)
        inputs.append({"role": "network", "path": network, "sha256": file_digest(network)})
        networks = [("whole", net)]
    else:
        assert pairs is not None
        records = parse_pairs_file(pairs, delimiter=delimiter)
        kept = filter_min_endorsement(records, min_endorsement)
        inputs.append({"role": "pairs", "path": pairs, "sha256": file_digest(pairs)})
        table = None
        if ratings:
            table = parse_ratings_file(ratings, delimiter=delimiter)
            inputs.append({"role": "ratings", "path": ratings, "sha256": file_digest(ratings)})
        net = build_network(kept, table)
        networks = [("whole", net)]
        if table is not None:
            concrete, abstract, split_median = split_by_median_concreteness(net)
            networks += [("concrete", concrete), ("abstract", abstract)]
    report = stats_report(networks, options=options, inputs=inputs, split_median=split_median)
    _emit(render(report, fmt), out)


@cli.command()
@click.argument("network", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--unweighted-q", is_flag=True, default=False)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def communities(network: str, seed: int, unweighted_q: bool, out: str | None) -> None:
    """Detect communities; prints a word/community TSV."""
    net = _load_network(network)
    projection = net.to_undirected() if net.directed else net
    partition, q = detect_communities(projection, seed=seed, weighted=not unweighted_q)
    _log(f"communities: {partition.n_communities} communities, Q = {q}")
    _emit(partition_tsv(projection, partition), out)


@cli.command()
@click.argument("network", type=click.Path(exists=True, dir_okay=False))
@click.option("--ci-radius", type=int, default=2, show_default=True)
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def influence(network: str, ci_radius: int, threads: int, out: str | None) -> None:
    """Per-node centralities and composite spreading/IVI scores (TSV)."""
    net = _load_network(network)
    projection = net.to_undirected() if net.directed else net
    table = spreading_scores(projection, radius=ci_radius, threads=threads)
    _emit(table.to_tsv(), out)


@cli.command()
@click.argument("table_a", type=click.Path(exists=True, dir_okay=False))
@click.argument("table_b", type=click.Path(exists=True, dir_okay=False))
@click.option("--column", default="spreading", show_default=True, help="Influence-table column to compare.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def compare(table_a: str, table_b: str, column: str, fmt: str) -> None:
    """Welch comparison of one score column across two influence tables."""
    def read_column(path: str) -> list[float]:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        if not lines:
            raise InputError(f"{path}: empty influence table")
        header = lines[0].split("\t")
        if column not in header:
            raise InputError(f"{path}: no column {column!r} in {header}")
        idx = header.index(column)
        values = []
        for line in lines[1:]:
            if line.strip():
                values.append(float(line.split("\t")[idx]))
        return values

    result = welch_t_test(read_column(table_a), read_column(table_b))
    if fmt == "json":
        import json

        click.echo(json.dumps({
            "mean_a": result.mean_a, "mean_b": result.mean_b,
            "sd_a": result.sd_a, "sd_b": result.sd_b,
            "n_a": result.n_a, "n_b": result.n_b,
            "t": result.t, "df": result.df, "p": result.p,
            "formatted": result.format(),
        }))
    else:
        click.echo(result.format())


@cli.command()
@click.argument("network", type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(list(EXPORT_FORMATS)), default="graphml", show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--ci-radius", type=int, default=2, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def export(network: str, fmt: str, seed: int, ci_radius: int, out: str | None) -> None:
    """Serialize a network as graphml, edgelist, dot, or json."""
    net = _load_network(network)
    _emit(export_graph(net, fmt, seed=seed, ci_radius=ci_radius), out)


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:  # --help / --version
        return int(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except UndefinedResultError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

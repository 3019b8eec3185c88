"""Analysis reports: every headline statistic for each network in each mode,
random-benchmark blocks, community structure, and the subnetwork comparison.

Reports are plain dicts with a fixed key order and deterministic float
formatting, so identical inputs, flags, and seed produce byte-identical
JSON at any worker-thread count. Wall-clock timing is only filled in when
explicitly requested, to keep that guarantee.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from ._kernels import backend_name
from .community import detect_communities
from .errors import InputError, UndefinedResultError
from .graph import AssociationNetwork
from .influence import SPREADING_VARIANT, spreading_scores, welch_t_test
from .metrics import NetworkStats, average_clustering, density, path_stats, smallworldness
from .randgraph import DEFAULT_RUNS, benchmark_ensemble

REPORT_MODES = ("directed", "undirected", "both")

STAT_ROWS = (
    ("n", "n"),
    ("D", "diameter"),
    ("d", "density"),
    ("ASPL", "aspl"),
    ("ASPL_random", "aspl_random"),
    ("k_in/out", "mean_k_in"),
    ("<k>", "mean_k"),
    ("CC", "cc"),
    ("CC_random", "cc_random"),
    ("S", "smallworldness"),
    ("Q", "q"),
)


@dataclass(frozen=True)
class ReportOptions:
    """Knobs recorded verbatim in the report header."""

    min_endorsement: int = 2
    seed: int = 42
    runs: int = DEFAULT_RUNS
    ci_radius: int = 2
    mode: str = "both"
    threads: int = 1
    weighted_modularity: bool = True
    include_timing: bool = False


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _modes_for(net: AssociationNetwork, requested: str) -> list[str]:
    if requested not in REPORT_MODES:
        raise InputError(f"unknown mode {requested!r}, expected one of {REPORT_MODES}")
    if requested == "both":
        return ["directed", "undirected"] if net.directed else ["undirected"]
    if requested == "directed" and not net.directed:
        raise InputError("directed statistics requested for an undirected network")
    return [requested]


def _network_block(
    name: str,
    net: AssociationNetwork,
    net_index: int,
    options: ReportOptions,
) -> dict:
    projection = net.to_undirected() if net.directed else net
    partition, q = detect_communities(projection, seed=options.seed, weighted=options.weighted_modularity)
    mode_blocks = []
    benchmark_blocks = []
    for mode in _modes_for(net, options.mode):
        working = net if mode == "directed" else projection
        stats_target = working
        paths = path_stats(stats_target, mode, threads=options.threads)
        cc = average_clustering(stats_target, mode)
        degrees = stats_target.degree_summary()
        bench_seed = np.random.SeedSequence([options.seed, net_index, 0 if mode == "directed" else 1])
        bench = benchmark_ensemble(stats_target, runs=options.runs, seed=bench_seed, threads=options.threads)
        try:
            s = smallworldness(cc, bench.cc_mean, paths.aspl, bench.aspl_mean)
        except UndefinedResultError:
            s = None  # degenerate tiny networks: report the gap instead of dying
        stats = NetworkStats(
            mode=mode,
            n=stats_target.n,
            m=stats_target.m,
            diameter=paths.diameter,
            density=density(stats_target, mode),
            aspl=paths.aspl,
            aspl_random=bench.aspl_mean,
            mean_k_in=degrees.mean_k_in,
            mean_k_out=degrees.mean_k_out,
            mean_k=degrees.mean_k,
            cc=cc,
            cc_random=bench.cc_mean,
            smallworldness=s,
            q=q,
            excluded_pairs=paths.excluded_pairs,
        )
        mode_blocks.append(
            {
                "mode": stats.mode,
                "n": stats.n,
                "m": stats.m,
                "diameter": stats.diameter,
                "density": stats.density,
                "aspl": stats.aspl,
                "aspl_random": stats.aspl_random,
                "mean_k_in": stats.mean_k_in,
                "mean_k_out": stats.mean_k_out,
                "mean_k": stats.mean_k,
                "cc": stats.cc,
                "cc_random": stats.cc_random,
                "smallworldness": stats.smallworldness,
                "q": stats.q,
                "excluded_pairs": stats.excluded_pairs,
            }
        )
        benchmark_blocks.append(
            {
                "mode": mode,
                "runs": bench.runs,
                "n": bench.n,
                "m": bench.m,
                "aspl_mean": bench.aspl_mean,
                "aspl_sd": bench.aspl_sd,
                "cc_mean": bench.cc_mean,
                "cc_sd": bench.cc_sd,
            }
        )
    return {
        "name": name,
        "directed": net.directed,
        "n": net.n,
        "m": net.m,
        "modes": mode_blocks,
        "benchmarks": benchmark_blocks,
        "community": {
            "algorithm": "louvain-deterministic-v1",
            "weighted": options.weighted_modularity,
            "q": q,
            "n_communities": partition.n_communities,
        },
    }


def _comparison_block(networks: dict[str, AssociationNetwork], options: ReportOptions) -> dict | None:
    if "concrete" not in networks or "abstract" not in networks:
        return None
    scores = {}
    for name in ("concrete", "abstract"):
        net = networks[name]
        projection = net.to_undirected() if net.directed else net
        scores[name] = spreading_scores(projection, radius=options.ci_radius, threads=options.threads).spreading
    result = welch_t_test(scores["concrete"], scores["abstract"])
    return {
        "group_a": "concrete",
        "group_b": "abstract",
        "score": "spreading",
        "mean_a": result.mean_a,
        "mean_b": result.mean_b,
        "sd_a": result.sd_a,
        "sd_b": result.sd_b,
        "n_a": result.n_a,
        "n_b": result.n_b,
        "t": result.t,
        "df": result.df,
        "p": result.p,
        "formatted": result.format(),
    }


def stats_report(
    networks: list[tuple[str, AssociationNetwork]],
    options: ReportOptions | None = None,
    inputs: list[dict] | None = None,
    split_median: float | None = None,
) -> dict:
    """Build the full analysis report for one or more named networks."""
    if not networks:
        raise InputError("stats report needs at least one network")
    options = options or ReportOptions()
    started = time.perf_counter()
    by_name = dict(networks)
    blocks = [
        _network_block(name, net, idx, options) for idx, (name, net) in enumerate(networks)
    ]
    comparison = _comparison_block(by_name, options)
    elapsed = time.perf_counter() - started
    return {
        "tool": {"name": "assocnet", "version": __version__},
        "inputs": inputs or [],
        "parameters": {
            "min_endorsement": options.min_endorsement,
            "seed": options.seed,
            "runs": options.runs,
            "ci_radius": options.ci_radius,
            "mode": options.mode,
            "threads": options.threads,
            "weighted_modularity": options.weighted_modularity,
            "variants": {
                "community_algorithm": "louvain-deterministic-v1",
                "spreading_score": SPREADING_VARIANT,
                "two_sample_test": "welch",
                "rng": "numpy-pcg64",
                "kernel_backend": backend_name(),
            },
        },
        "networks": blocks,
        "split_median": split_median,
        "comparison": comparison,
        "timing_seconds": elapsed if options.include_timing else None,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, ensure_ascii=False, indent=2) + "\n"


def _fmt(key: str, value) -> str:
    if value is None:
        return "-"
    if key in ("n", "diameter", "excluded_pairs"):
        return str(int(value))
    if key == "density":
        return f"{value:.2e}"
    if key in ("cc_random",):
        return f"{value:.4f}"
    return f"{value:.2f}"


def render_markdown(report: dict) -> str:
    """Statistics table with one column per (network, mode) pair."""
    columns: list[tuple[str, str, dict]] = []
    for block in report["networks"]:
        for mode_block in block["modes"]:
            columns.append((block["name"], mode_block["mode"], mode_block))
    header = ["variable"] + [f"{name} ({mode})" for name, mode, _ in columns]
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for row_label, key in STAT_ROWS:
        cells = [row_label]
        for _, _, mode_block in columns:
            if key == "mean_k_in":
                value = mode_block["mean_k_in"]
            else:
                value = mode_block.get(key)
            cells.append(_fmt(key if key != "mean_k_in" else "mean_k_in", value))
        lines.append("| " + " | ".join(cells) + " |")
    if report["comparison"] is not None:
        lines.append("")
        cmp_block = report["comparison"]
        lines.append(
            f"spreading comparison ({cmp_block['group_a']} vs {cmp_block['group_b']}): "
            f"{cmp_block['formatted']}"
        )
    return "\n".join(lines) + "\n"


def render_tsv(report: dict) -> str:
    """Flat per-(network, mode) rows with full-precision values."""
    fields = [
        "network",
        "mode",
        "n",
        "m",
        "diameter",
        "density",
        "aspl",
        "aspl_random",
        "mean_k_in",
        "mean_k_out",
        "mean_k",
        "cc",
        "cc_random",
        "smallworldness",
        "q",
        "excluded_pairs",
    ]
    lines = ["\t".join(fields)]
    for block in report["networks"]:
        for mode_block in block["modes"]:
            row = [block["name"]]
            for key in fields[1:]:
                value = mode_block.get(key)
                row.append("" if value is None else repr(value) if isinstance(value, float) else str(value))
            lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return report_json(report)
    if fmt == "md":
        return render_markdown(report)
    if fmt == "tsv":
        return render_tsv(report)
    raise InputError(f"unknown report format {fmt!r}")

"""Small-world statistics: hop distances, diameter, ASPL, clustering, density.

Distances are unweighted hop counts throughout; arc weights only matter to
community detection and reporting. Directed statistics run over ordered
reachable pairs, undirected ones over unordered pairs, and both exclude
disconnected pairs (the excluded count is reported, not hidden).

``mode`` is ``"directed"`` or ``"undirected"``. Undirected mode on a
directed network traverses the union adjacency, which has exactly the edge
set of the reciprocal-merged projection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._parallel import map_chunks, source_chunks
from .errors import InputError, UndefinedResultError
from .graph import UNREACHABLE, AssociationNetwork

MODES = ("directed", "undirected")


@dataclass(frozen=True)
class DistanceField:
    """Hop distances from one source; ``UNREACHABLE`` (-1) marks unreached nodes."""

    source: int
    distances: np.ndarray


@dataclass(frozen=True)
class PathStats:
    """Diameter and ASPL over the same reachable-pair set, plus pair bookkeeping."""

    diameter: int
    aspl: float
    finite_pairs: int
    excluded_pairs: int


@dataclass(frozen=True)
class NetworkStats:
    """One report row: every headline statistic for a network in one mode."""

    mode: str
    n: int
    m: int
    diameter: int
    density: float
    aspl: float
    aspl_random: float | None
    mean_k_in: float | None
    mean_k_out: float | None
    mean_k: float
    cc: float
    cc_random: float | None
    smallworldness: float | None
    q: float | None
    excluded_pairs: int


def _traversal_csr(net: AssociationNetwork, mode: str) -> tuple[np.ndarray, np.ndarray]:
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}, expected one of {MODES}")
    if mode == "directed":
        if not net.directed:
            raise InputError("directed statistics need a directed network")
        return net.csr("out")
    return net.csr("union")


def shortest_paths_from(net: AssociationNetwork, source: int, mode: str) -> DistanceField:
    """BFS hop distances from ``source``; weights are ignored."""
    if not (0 <= source < net.n):
        raise InputError(f"source id {source} out of range 0..{net.n - 1}")
    indptr, indices = _traversal_csr(net, mode)
    dist = _kernels.bfs_distances(indptr, indices, net.n, source)
    return DistanceField(source=source, distances=dist)


def path_stats(net: AssociationNetwork, mode: str, threads: int = 1) -> PathStats:
    """Diameter and ASPL in one all-sources BFS sweep.

    Integer accumulation keeps the result exact at any thread count.
    """
    indptr, indices = _traversal_csr(net, mode)
    n = net.n
    parts = map_chunks(
        lambda src: _kernels.apsp_aggregate(indptr, indices, n, src),
        source_chunks(n),
        threads,
    )
    total = sum(p[0] for p in parts)
    finite = sum(p[1] for p in parts)
    maxd = max((p[2] for p in parts), default=0)
    ordered_pairs = n * (n - 1)
    if mode == "undirected":
        # symmetric traversal: every unordered pair was counted twice
        total //= 2
        finite //= 2
        all_pairs = ordered_pairs // 2
    else:
        all_pairs = ordered_pairs
    if finite == 0:
        raise UndefinedResultError("no reachable pair: diameter and ASPL are undefined")
    return PathStats(
        diameter=int(maxd),
        aspl=total / finite,
        finite_pairs=finite,
        excluded_pairs=all_pairs - finite,
    )


def diameter(net: AssociationNetwork, mode: str, threads: int = 1) -> int:
    """Largest finite hop distance over the mode's pair set."""
    return path_stats(net, mode, threads=threads).diameter


def aspl(net: AssociationNetwork, mode: str, threads: int = 1) -> float:
    """Mean finite hop distance over the same pair set as :func:`diameter`."""
    return path_stats(net, mode, threads=threads).aspl


def clustering_all(net: AssociationNetwork, mode: str) -> np.ndarray:
    """Local clustering coefficient for every node.

    Undirected: realized edges among the neighborhood over ``k(k-1)/2``.
    Directed: realized arcs among the union neighborhood over ``k(k-1)``.
    Nodes with fewer than two neighbors score 0.
    """
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}, expected one of {MODES}")
    if mode == "directed":
        if not net.directed:
            raise InputError("directed statistics need a directed network")
        union_indptr, union_indices = net.csr("union")
        count_indptr, count_indices = net.csr("out")
    else:
        union_indptr, union_indices = net.csr("union")
        count_indptr, count_indices = union_indptr, union_indices
    return _kernels.local_clustering(
        union_indptr, union_indices, count_indptr, count_indices, net.n
    )


def local_clustering(net: AssociationNetwork, v: int, mode: str) -> float:
    """Clustering coefficient of one node (see :func:`clustering_all`)."""
    if not (0 <= v < net.n):
        raise InputError(f"node id {v} out of range 0..{net.n - 1}")
    return float(clustering_all(net, mode)[v])


def average_clustering(net: AssociationNetwork, mode: str, include_low_degree: bool = True) -> float:
    """Unweighted mean of local clustering over nodes.

    Nodes with fewer than two neighbors count as 0 by default; pass
    ``include_low_degree=False`` to average over the remaining nodes only.
    """
    if net.n == 0:
        raise InputError("average clustering needs at least one node")
    cc = clustering_all(net, mode)
    if include_low_degree:
        return float(np.mean(cc))
    union_indptr, _ = net.csr("union")
    degs = np.diff(union_indptr)
    eligible = cc[degs >= 2]
    if eligible.size == 0:
        return 0.0
    return float(np.mean(eligible))


def density(net: AssociationNetwork, mode: str) -> float:
    """Realized links over possible links for the mode's directedness."""
    if net.n < 2:
        raise InputError("density needs at least two nodes")
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}, expected one of {MODES}")
    n = net.n
    if mode == "directed":
        if not net.directed:
            raise InputError("directed statistics need a directed network")
        return net.m / (n * (n - 1))
    if net.directed:
        # edge count of the reciprocal-merged projection
        indptr, _ = net.csr("union")
        m = int(indptr[-1]) // 2
    else:
        m = net.m
    return 2 * m / (n * (n - 1))


def smallworldness(cc: float, cc_random: float, aspl_value: float, aspl_random: float) -> float:
    """Clustering excess over path-length excess against a matched random graph.

    ``(cc / cc_random) / (aspl / aspl_random)``; values above 3 indicate a
    small-world structure.
    """
    for name, value in (
        ("cc", cc),
        ("cc_random", cc_random),
        ("aspl", aspl_value),
        ("aspl_random", aspl_random),
    ):
        if value < 0:
            raise InputError(f"{name} must be non-negative, got {value!r}")
    if cc_random == 0.0 or aspl_value == 0.0:
        raise UndefinedResultError("smallworldness undefined: zero denominator")
    return (cc / cc_random) / (aspl_value / aspl_random)

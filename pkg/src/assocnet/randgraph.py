"""Seeded G(n, m) benchmark graphs and ensemble statistics.

All randomness flows through numpy's PCG64 generator seeded explicitly, so
identical seeds give identical graphs on every platform. Ensemble members
draw their seeds from ``SeedSequence(seed).spawn``, which makes parallel and
serial runs agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._parallel import map_chunks
from .errors import InputError
from .graph import AssociationNetwork, from_edges
from .metrics import aspl, average_clustering

DEFAULT_RUNS = 30

Seed = int | np.random.SeedSequence


@dataclass(frozen=True)
class BenchmarkSummary:
    """Ensemble mean and sample sd of ASPL and CC over seeded G(n, m) graphs."""

    runs: int
    n: int
    m: int
    directed: bool
    seed: int | None
    aspl_mean: float
    aspl_sd: float
    cc_mean: float
    cc_sd: float


def _rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed))))


def _sample_without_replacement(total: int, m: int, rng: np.random.Generator) -> list[int]:
    """Floyd's uniform m-subset of ``range(total)``; O(m) memory."""
    chosen: set[int] = set()
    for t in range(total - m, total):
        r = int(rng.integers(0, t + 1))
        if r in chosen:
            chosen.add(t)
        else:
            chosen.add(r)
    return sorted(chosen)


def _decode_directed(code: int, n: int) -> tuple[int, int]:
    u, r = divmod(code, n - 1)
    return u, r + (r >= u)


def _decode_undirected(code: int, n: int) -> tuple[int, int]:
    # pairs (u, v), u < v, in lexicographic order; offset(u) = u*(2n-u-1)/2
    s = math.isqrt((2 * n - 1) * (2 * n - 1) - 8 * code)
    u = ((2 * n - 1) - s) // 2
    while u * (2 * n - u - 1) // 2 > code:
        u -= 1
    while (u + 1) * (2 * n - u - 2) // 2 <= code:
        u += 1
    v = u + 1 + (code - u * (2 * n - u - 1) // 2)
    return u, v


def gnm_random(n: int, m: int, directed: bool, seed: Seed) -> AssociationNetwork:
    """Uniform random graph with exactly ``m`` distinct non-loop arcs."""
    if n < 2:
        raise InputError(f"G(n, m) needs n >= 2, got {n}")
    max_m = n * (n - 1) if directed else n * (n - 1) // 2
    if not (0 <= m <= max_m):
        raise InputError(f"m={m} out of range 0..{max_m} for n={n} {'directed' if directed else 'undirected'}")
    rng = _rng(seed)
    codes = _sample_without_replacement(max_m, m, rng)
    decode = _decode_directed if directed else _decode_undirected
    edges = [decode(code, n) for code in codes]
    return from_edges(edges, n=n, directed=directed)


def benchmark_ensemble(
    target: AssociationNetwork,
    runs: int = DEFAULT_RUNS,
    seed: Seed = 0,
    threads: int = 1,
) -> BenchmarkSummary:
    """ASPL and CC statistics of ``runs`` G(n, m) graphs matching the target's size.

    Member seeds derive from ``(seed, member index)``, so the ensemble is
    reproducible and order-independent under parallel execution. Sample
    standard deviation is 0 by convention for a single run.
    """
    if runs < 1:
        raise InputError(f"runs must be >= 1, got {runs}")
    n, m, directed = target.n, target.m, target.directed
    mode = "directed" if directed else "undirected"
    base = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(int(seed))
    children = base.spawn(runs)

    def member_stats(chunk: np.ndarray) -> list[tuple[float, float]]:
        out = []
        for i in chunk.tolist():
            graph = gnm_random(n, m, directed, children[i])
            out.append((aspl(graph, mode), average_clustering(graph, mode)))
        return out

    chunks = [np.arange(lo, min(lo + 1, runs), dtype=np.int32) for lo in range(runs)]
    results = [pair for part in map_chunks(member_stats, chunks, threads) for pair in part]
    aspls = np.array([r[0] for r in results], dtype=np.float64)
    ccs = np.array([r[1] for r in results], dtype=np.float64)
    return BenchmarkSummary(
        runs=runs,
        n=n,
        m=m,
        directed=directed,
        seed=int(seed) if not isinstance(seed, np.random.SeedSequence) else None,
        aspl_mean=float(np.mean(aspls)),
        aspl_sd=float(np.std(aspls, ddof=1)) if runs > 1 else 0.0,
        cc_mean=float(np.mean(ccs)),
        cc_sd=float(np.std(ccs, ddof=1)) if runs > 1 else 0.0,
    )


def ring_lattice(n: int, k: int) -> AssociationNetwork:
    """Undirected ring where every node links to its ``k`` nearest neighbors (``k`` even)."""
    if k % 2 != 0 or k < 2:
        raise InputError(f"ring lattice needs even k >= 2, got {k}")
    if k >= n:
        raise InputError(f"ring lattice needs k < n, got k={k}, n={n}")
    edges = [(i, (i + j) % n) for i in range(n) for j in range(1, k // 2 + 1)]
    return from_edges(edges, n=n, directed=False)


def watts_strogatz(n: int, k: int, rewire_prob: float, seed: Seed) -> AssociationNetwork:
    """Ring lattice with each edge's far endpoint rewired with probability ``rewire_prob``."""
    if not (0.0 <= rewire_prob <= 1.0):
        raise InputError(f"rewire probability {rewire_prob!r} outside [0, 1]")
    rng = _rng(seed)
    lattice = ring_lattice(n, k)
    edge_set = {(a.source, a.target) for a in lattice.arcs}
    for i in range(n):
        for j in range(1, k // 2 + 1):
            u, v = i, (i + j) % n
            key = (u, v) if u < v else (v, u)
            if key not in edge_set:
                continue
            if rng.random() >= rewire_prob:
                continue
            w = int(rng.integers(0, n))
            attempts = 0
            while w == u or (min(u, w), max(u, w)) in edge_set:
                w = int(rng.integers(0, n))
                attempts += 1
                if attempts > 8 * n:  # node saturated, keep the original edge
                    w = -1
                    break
            if w < 0:
                continue
            edge_set.remove(key)
            edge_set.add((min(u, w), max(u, w)))
    return from_edges(sorted(edge_set), n=n, directed=False)

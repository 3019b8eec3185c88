"""Node influence: ingredient centralities, composite spreading and IVI scores,
and the two-group Welch comparison used to contrast subnetworks.

All centralities run on an undirected network with unweighted hop distances.
The composite follows the stamped variant ``reconstructed-IVI-v1``:

    spreading_raw = norm(NC + CR) * norm(BC + CI)
    spreading     = norm(spreading_raw)
    ivi           = norm(norm(DC + LH) * spreading_raw)

where ``norm`` rescales to [1, 100] and degenerate all-equal inputs collapse
to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._parallel import map_chunks, source_chunks
from .errors import InputError, UndefinedResultError
from .graph import AssociationNetwork
from .metrics import clustering_all

DEFAULT_CI_RADIUS = 2

SPREADING_VARIANT = "reconstructed-IVI-v1"


@dataclass(frozen=True)
class InfluenceTable:
    """Per-node centrality components and composite scores, aligned to node ids."""

    labels: tuple[str, ...]
    dc: np.ndarray
    lh: np.ndarray
    nc: np.ndarray
    cr: np.ndarray
    bc: np.ndarray
    ci: np.ndarray
    spreading: np.ndarray
    ivi: np.ndarray

    def to_tsv(self) -> str:
        lines = ["word\tDC\tLH\tNC\tCR\tBC\tCI\tspreading\tivi"]
        for i, label in enumerate(self.labels):
            lines.append(
                f"{label}\t{int(self.dc[i])}\t{int(self.lh[i])}\t{float(self.nc[i])!r}\t"
                f"{float(self.cr[i])!r}\t{float(self.bc[i])!r}\t{int(self.ci[i])}\t"
                f"{float(self.spreading[i])!r}\t{float(self.ivi[i])!r}"
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GroupComparison:
    """Welch two-sample comparison of two score vectors."""

    mean_a: float
    mean_b: float
    sd_a: float
    sd_b: float
    n_a: int
    n_b: int
    t: float
    df: float
    p: float

    def format(self) -> str:
        """Render as ``t(df) = x.xx; p = y`` (p below 1e-4 prints as an inequality)."""
        p_part = "p < 0.0001" if self.p < 1e-4 else f"p = {self.p:.4f}"
        return f"t({self.df:.2f}) = {self.t:.2f}; {p_part}"


def _require_undirected(net: AssociationNetwork) -> None:
    if net.directed:
        raise InputError("influence centralities run on the undirected network")


def betweenness_all(net: AssociationNetwork, threads: int = 1) -> np.ndarray:
    """Unnormalized shortest-path betweenness (per unordered pair)."""
    _require_undirected(net)
    indptr, indices = net.csr("union")
    n = net.n
    parts = map_chunks(
        lambda src: _kernels.brandes_accumulate(indptr, indices, n, src),
        source_chunks(n),
        threads,
    )
    bc = np.zeros(n, dtype=np.float64)
    for part in parts:
        bc += part
    return bc / 2.0  # each unordered pair was accumulated from both endpoints


def local_h_index(net: AssociationNetwork) -> np.ndarray:
    """Largest h such that the node has >= h neighbors each of degree >= h."""
    _require_undirected(net)
    degs = np.array([len(t) for t in net.out_index], dtype=np.int64)
    lh = np.zeros(net.n, dtype=np.int64)
    for v in range(net.n):
        nd = sorted((int(degs[u]) for u in net.out_index[v]), reverse=True)
        h = 0
        for rank, d in enumerate(nd, start=1):
            if d >= rank:
                h = rank
            else:
                break
        lh[v] = h
    return lh


def neighborhood_connectivity(net: AssociationNetwork) -> np.ndarray:
    """Mean neighbor degree; isolated nodes score 0."""
    _require_undirected(net)
    degs = np.array([len(t) for t in net.out_index], dtype=np.int64)
    nc = np.zeros(net.n, dtype=np.float64)
    for v in range(net.n):
        nbrs = net.out_index[v]
        if nbrs:
            nc[v] = sum(int(degs[u]) for u in nbrs) / len(nbrs)
    return nc


def clusterrank(net: AssociationNetwork) -> np.ndarray:
    """``10^(-cc_v) * sum over neighbors of (degree + 1)``; isolated nodes score 0."""
    _require_undirected(net)
    degs = np.array([len(t) for t in net.out_index], dtype=np.int64)
    cc = clustering_all(net, "undirected")
    cr = np.zeros(net.n, dtype=np.float64)
    for v in range(net.n):
        total = sum(int(degs[u]) + 1 for u in net.out_index[v])
        cr[v] = 10.0 ** (-cc[v]) * total
    return cr


def collective_influence(
    net: AssociationNetwork, radius: int = DEFAULT_CI_RADIUS, threads: int = 1
) -> np.ndarray:
    """``(k_v - 1)`` times the sum of ``(k_u - 1)`` over the hop-``radius`` frontier.

    The degree factor clamps at 0 for isolated nodes.
    """
    _require_undirected(net)
    if radius < 1:
        raise InputError(f"collective influence radius must be >= 1, got {radius}")
    indptr, indices = net.csr("union")
    n = net.n
    parts = map_chunks(
        lambda src: _kernels.frontier_degree_sum(indptr, indices, n, src, radius),
        source_chunks(n),
        threads,
    )
    frontier = np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)
    degs = np.diff(indptr)
    factor = np.maximum(degs - 1, 0)
    return factor * frontier


def range_normalize(values) -> np.ndarray:
    """Affine rescale to [1, 100]; an all-equal vector collapses to all 1."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.size == 0:
        raise InputError("cannot range-normalize an empty vector")
    lo = float(arr.min())
    hi = float(arr.max())
    if hi == lo:
        return np.ones_like(arr)
    return 1.0 + 99.0 * (arr - lo) / (hi - lo)


def spreading_scores(
    net: AssociationNetwork, radius: int = DEFAULT_CI_RADIUS, threads: int = 1
) -> InfluenceTable:
    """Composite spreading and IVI scores (variant ``reconstructed-IVI-v1``)."""
    _require_undirected(net)
    dc = np.array([len(t) for t in net.out_index], dtype=np.int64)
    lh = local_h_index(net)
    nc = neighborhood_connectivity(net)
    cr = clusterrank(net)
    bc = betweenness_all(net, threads=threads)
    ci = collective_influence(net, radius=radius, threads=threads)
    spreading_raw = range_normalize(nc + cr) * range_normalize(bc + ci)
    spreading = range_normalize(spreading_raw)
    ivi = range_normalize(range_normalize(dc + lh) * spreading_raw)
    return InfluenceTable(
        labels=tuple(node.label for node in net.nodes),
        dc=dc,
        lh=lh,
        nc=nc,
        cr=cr,
        bc=bc,
        ci=ci,
        spreading=spreading,
        ivi=ivi,
    )


# -- Welch comparison ---------------------------------------------------------


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the regularized incomplete beta (modified Lentz)."""
    max_iter = 300
    eps = 3e-16
    fpmin = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < fpmin:
        d = fpmin
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < fpmin:
            d = fpmin
        c = 1.0 + aa / c
        if abs(c) < fpmin:
            c = fpmin
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < fpmin:
            d = fpmin
        c = 1.0 + aa / c
        if abs(c) < fpmin:
            c = fpmin
        d = 1.0 / d
        step = d * c
        h *= step
        if abs(step - 1.0) < eps:
            break
    return h


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """``I_x(a, b)`` via the symmetric continued-fraction expansion."""
    if a <= 0 or b <= 0:
        raise InputError("incomplete beta needs positive shape parameters")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b) + a * math.log(x) + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def t_sf_two_sided(t: float, df: float) -> float:
    """Two-sided tail probability of the t distribution with ``df`` degrees of freedom."""
    if df <= 0:
        raise InputError(f"degrees of freedom must be positive, got {df}")
    if t == 0.0:
        return 1.0
    x = df / (t * t + df)
    return regularized_incomplete_beta(df / 2.0, 0.5, x)


def welch_t_test(sample_a, sample_b) -> GroupComparison:
    """Unequal-variance two-sample t test with Welch-Satterthwaite df.

    Two-sided p from the t distribution. Degenerate zero-variance inputs:
    equal means give ``t=0, p=1``; unequal means are undefined.
    """
    a = np.asarray(sample_a, dtype=np.float64)
    b = np.asarray(sample_b, dtype=np.float64)
    if a.size < 2 or b.size < 2:
        raise InputError("each sample needs at least two observations")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise InputError("samples must be finite")
    mean_a = float(np.mean(a))
    mean_b = float(np.mean(b))
    var_a = float(np.var(a, ddof=1))
    var_b = float(np.var(b, ddof=1))
    n_a = int(a.size)
    n_b = int(b.size)
    se_a = var_a / n_a
    se_b = var_b / n_b
    pooled = se_a + se_b
    if pooled == 0.0:
        if mean_a == mean_b:
            return GroupComparison(
                mean_a=mean_a,
                mean_b=mean_b,
                sd_a=0.0,
                sd_b=0.0,
                n_a=n_a,
                n_b=n_b,
                t=0.0,
                df=float(n_a + n_b - 2),
                p=1.0,
            )
        raise UndefinedResultError("zero variance with unequal means: t is undefined")
    t = (mean_a - mean_b) / math.sqrt(pooled)
    df = pooled * pooled / (se_a * se_a / (n_a - 1) + se_b * se_b / (n_b - 1))
    return GroupComparison(
        mean_a=mean_a,
        mean_b=mean_b,
        sd_a=math.sqrt(var_a),
        sd_b=math.sqrt(var_b),
        n_a=n_a,
        n_b=n_b,
        t=t,
        df=df,
        p=t_sf_two_sided(t, df),
    )

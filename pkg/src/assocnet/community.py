"""Weighted community structure on undirected networks.

Modularity follows the degree-preserving null model over ordered node pairs;
detection is a greedy multi-level (Louvain-style) maximization made fully
deterministic: nodes are swept in ascending id and equal-gain moves resolve
to the lowest community id. The returned Q is always recomputed from the
returned partition, never trusted from the incremental bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InputError, UndefinedResultError
from .graph import AssociationNetwork


@dataclass(frozen=True)
class Partition:
    """Node -> community assignment with dense community ids 0..c-1."""

    membership: tuple[int, ...]
    n_communities: int

    @classmethod
    def from_membership(cls, membership: Sequence[int]) -> "Partition":
        """Relabel communities densely in order of first appearance."""
        remap: dict[int, int] = {}
        dense = []
        for c in membership:
            if c not in remap:
                remap[c] = len(remap)
            dense.append(remap[c])
        return cls(membership=tuple(dense), n_communities=len(remap))

    def communities(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.n_communities)]
        for node, c in enumerate(self.membership):
            groups[c].append(node)
        return groups


def _membership_vector(
    net: AssociationNetwork, partition: Partition | Sequence[int] | Mapping[int, int]
) -> list[int]:
    if isinstance(partition, Partition):
        members: Sequence[int] | Mapping[int, int] = partition.membership
    else:
        members = partition
    if isinstance(members, Mapping):
        missing = [v for v in range(net.n) if v not in members]
        if missing:
            raise InputError(f"partition does not cover node {missing[0]}")
        return [int(members[v]) for v in range(net.n)]
    if len(members) != net.n:
        raise InputError(f"partition covers {len(members)} nodes, network has {net.n}")
    return [int(c) for c in members]


def modularity_q(
    net: AssociationNetwork,
    partition: Partition | Sequence[int] | Mapping[int, int],
    weighted: bool = True,
) -> float:
    """Within-community weight excess over the strength-preserving null model.

    ``Q = sum_c [W_in(c)/W - (S(c)/2W)^2]`` with ``W`` the total edge weight
    and ``S`` community strength; degrees replace strengths when unweighted.
    """
    if net.directed:
        raise InputError("modularity is defined on the undirected network")
    comm = _membership_vector(net, partition)
    n_comm = max(comm) + 1 if comm else 0
    w_in = [0.0] * n_comm
    strength = [0.0] * n_comm
    total = 0.0
    for arc in net.arcs:
        w = float(arc.weight) if weighted else 1.0
        total += w
        strength[comm[arc.source]] += w
        strength[comm[arc.target]] += w
        if comm[arc.source] == comm[arc.target]:
            w_in[comm[arc.source]] += w
    if total == 0.0:
        raise UndefinedResultError("modularity undefined: network has no edge weight")
    two_w = 2.0 * total
    return sum(w_in[c] / total - (strength[c] / two_w) ** 2 for c in range(n_comm))


def _adjacency(net: AssociationNetwork, weighted: bool) -> list[dict[int, float]]:
    adj: list[dict[int, float]] = [dict() for _ in range(net.n)]
    for arc in net.arcs:
        w = float(arc.weight) if weighted else 1.0
        adj[arc.source][arc.target] = w
        adj[arc.target][arc.source] = w
    return adj


def _one_level(
    adj: list[dict[int, float]],
    selfw: list[float],
    two_w: float,
    init: list[int] | None = None,
) -> tuple[list[int], bool]:
    """Local-move phase. Returns the membership and whether any move happened."""
    n = len(adj)
    strength = [selfw[v] + sum(adj[v].values()) for v in range(n)]
    comm = list(range(n)) if init is None else list(init)
    comm_tot = [0.0] * (max(comm) + 1)
    for v in range(n):
        comm_tot[comm[v]] += strength[v]
    moved_any = False
    while True:
        moves = 0
        for v in range(n):
            cv = comm[v]
            neigh_w: dict[int, float] = {}
            for u, w in adj[v].items():
                cu = comm[u]
                neigh_w[cu] = neigh_w.get(cu, 0.0) + w
            comm_tot[cv] -= strength[v]
            gain_stay = neigh_w.get(cv, 0.0) - strength[v] * comm_tot[cv] / two_w
            best_c = cv
            best_gain = gain_stay
            for c in sorted(neigh_w):
                if c == cv:
                    continue
                gain = neigh_w[c] - strength[v] * comm_tot[c] / two_w
                if gain > best_gain:
                    best_gain = gain
                    best_c = c
            comm[v] = best_c
            comm_tot[best_c] += strength[v]
            if best_c != cv:
                moves += 1
        if moves == 0:
            break
        moved_any = True
    return comm, moved_any


def _densify(comm: list[int]) -> tuple[list[int], int]:
    remap: dict[int, int] = {}
    dense = []
    for c in comm:
        if c not in remap:
            remap[c] = len(remap)
        dense.append(remap[c])
    return dense, len(remap)


def _aggregate(
    adj: list[dict[int, float]], selfw: list[float], comm: list[int], n_comm: int
) -> tuple[list[dict[int, float]], list[float]]:
    new_adj: list[dict[int, float]] = [dict() for _ in range(n_comm)]
    new_selfw = [0.0] * n_comm
    for v in range(len(adj)):
        cv = comm[v]
        new_selfw[cv] += selfw[v]
        for u, w in adj[v].items():
            cu = comm[u]
            if cu == cv:
                new_selfw[cv] += w  # both directions of each internal edge pass here
            else:
                new_adj[cv][cu] = new_adj[cv].get(cu, 0.0) + w
    return new_adj, new_selfw


def detect_communities(
    net: AssociationNetwork, seed: int = 0, weighted: bool = True
) -> tuple[Partition, float]:
    """Greedy multi-level modularity maximization on edge weights.

    Fully deterministic: ascending-id sweeps, lowest-community-id tie break,
    plus a final local-move refinement at the finest level. ``seed`` is part
    of the interface for reproducibility stamping but does not influence the
    deterministic sweep. The returned Q is an independent recomputation.
    """
    if net.directed:
        raise InputError("community detection runs on the undirected network")
    del seed  # sweep order is fixed; kept for call-site reproducibility stamps
    adj = _adjacency(net, weighted)
    selfw = [0.0] * net.n
    two_w = sum(sum(d.values()) for d in adj)  # symmetric adjacency already counts 2W
    if two_w == 0.0:
        raise UndefinedResultError("community detection undefined: no edge weight")

    mapping = list(range(net.n))
    while True:
        comm, improved = _one_level(adj, selfw, two_w)
        if not improved:
            break
        dense, n_comm = _densify(comm)
        mapping = [dense[mapping[v]] for v in range(net.n)]
        if n_comm == len(adj):
            break
        adj, selfw = _aggregate(adj, selfw, dense, n_comm)

    # refinement: let single nodes relocate against the final communities
    fine_adj = _adjacency(net, weighted)
    refined, _ = _one_level(fine_adj, [0.0] * net.n, two_w, init=mapping)
    partition = Partition.from_membership(refined)
    return partition, modularity_q(net, partition, weighted=weighted)


def partition_tsv(net: AssociationNetwork, partition: Partition) -> str:
    """Rows of ``word<TAB>community`` in node-id order, with a header."""
    lines = ["word\tcommunity"]
    for node in net.nodes:
        lines.append(f"{node.label}\t{partition.membership[node.id]}")
    return "\n".join(lines) + "\n"

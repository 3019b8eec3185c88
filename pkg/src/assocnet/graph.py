"""In-memory association networks: nodes, weighted arcs, adjacency indices.

Networks are immutable after construction; every analysis pass reads them
concurrently without locking. Undirected networks store each edge exactly
once in canonical ``(min, max)`` orientation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import InputError

UNREACHABLE = -1

CONCRETENESS_MIN = 1.0
CONCRETENESS_MAX = 7.0


@dataclass(frozen=True)
class WordNode:
    """One word in the network. ``concreteness`` is a 1..7 rating if known."""

    id: int
    label: str
    concreteness: float | None = None
    is_cue: bool = False


@dataclass(frozen=True, order=True)
class Arc:
    """A weighted link. In directed networks: cue ``source`` -> response ``target``."""

    source: int
    target: int
    weight: int


@dataclass(frozen=True)
class DegreeSummary:
    """Per-node degrees plus network means. ``k_in``/``k_out`` are None for undirected nets."""

    k_in: np.ndarray | None
    k_out: np.ndarray | None
    k: np.ndarray
    mean_k_in: float | None
    mean_k_out: float | None
    mean_k: float


class AssociationNetwork:
    """Immutable directed or undirected weighted network.

    Validates on construction: contiguous node ids, unique labels, in-range
    concreteness, no self-loops, no parallel arcs, positive integer weights.
    Arcs are held sorted by ``(source, target)`` so serialization is
    byte-stable.
    """

    __slots__ = (
        "nodes",
        "arcs",
        "directed",
        "out_index",
        "in_index",
        "_label_to_id",
        "_csr_cache",
    )

    def __init__(self, nodes: Sequence[WordNode], arcs: Iterable[Arc], directed: bool):
        nodes = tuple(nodes)
        for i, node in enumerate(nodes):
            if node.id != i:
                raise InputError(f"node ids must be contiguous 0..n-1, got id {node.id} at position {i}")
            if node.concreteness is not None and not (
                CONCRETENESS_MIN <= node.concreteness <= CONCRETENESS_MAX
            ):
                raise InputError(
                    f"concreteness {node.concreteness!r} for {node.label!r} outside "
                    f"[{CONCRETENESS_MIN}, {CONCRETENESS_MAX}]"
                )
        labels = [node.label for node in nodes]
        if len(set(labels)) != len(labels):
            seen: set[str] = set()
            dup = next(l for l in labels if l in seen or seen.add(l))  # type: ignore[func-returns-value]
            raise InputError(f"duplicate node label {dup!r}")

        n = len(nodes)
        normalized: list[Arc] = []
        for arc in arcs:
            if not (0 <= arc.source < n and 0 <= arc.target < n):
                raise InputError(f"arc ({arc.source}, {arc.target}) references unknown node id")
            if arc.source == arc.target:
                raise InputError(f"self-loop on node {arc.source} is not allowed")
            if not isinstance(arc.weight, int) or arc.weight < 1:
                raise InputError(f"arc ({arc.source}, {arc.target}) weight must be a positive integer")
            if not directed and arc.source > arc.target:
                arc = Arc(arc.target, arc.source, arc.weight)
            normalized.append(arc)
        normalized.sort()
        for prev, cur in zip(normalized, normalized[1:]):
            if prev.source == cur.source and prev.target == cur.target:
                raise InputError(f"parallel arc ({cur.source}, {cur.target})")

        out_lists: list[list[int]] = [[] for _ in range(n)]
        in_lists: list[list[int]] = [[] for _ in range(n)]
        for arc in normalized:
            out_lists[arc.source].append(arc.target)
            in_lists[arc.target].append(arc.source)
            if not directed:
                out_lists[arc.target].append(arc.source)
                in_lists[arc.source].append(arc.target)

        self.nodes = nodes
        self.arcs = tuple(normalized)
        self.directed = bool(directed)
        self.out_index = tuple(tuple(sorted(lst)) for lst in out_lists)
        self.in_index = tuple(tuple(sorted(lst)) for lst in in_lists)
        self._label_to_id = {node.label: node.id for node in nodes}
        self._csr_cache: dict[str, tuple[np.ndarray, np.ndarray]] = {}

    # -- basic shape ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AssociationNetwork):
            return NotImplemented
        return (
            self.directed == other.directed
            and self.nodes == other.nodes
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:  # immutable, content-identity
        return hash((self.directed, self.nodes, self.arcs))

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"AssociationNetwork({kind}, n={self.n}, m={self.m})"

    def id_of(self, label: str) -> int:
        try:
            return self._label_to_id[label]
        except KeyError:
            raise InputError(f"unknown label {label!r}") from None

    # -- queries ---------------------------------------------------------

    def neighbors(self, v: int, mode: str = "out") -> tuple[int, ...]:
        """Sorted, duplicate-free neighbor ids of ``v``.

        ``mode`` is ``out``, ``in``, or ``union``. For undirected networks all
        three agree (edge partners).
        """
        if not (0 <= v < self.n):
            raise InputError(f"node id {v} out of range 0..{self.n - 1}")
        if mode == "out":
            return self.out_index[v]
        if mode == "in":
            return self.in_index[v]
        if mode == "union":
            if not self.directed:
                return self.out_index[v]
            return tuple(sorted(set(self.out_index[v]) | set(self.in_index[v])))
        raise InputError(f"unknown neighbor mode {mode!r}")

    def degree_summary(self) -> DegreeSummary:
        """Degrees per node plus means.

        Directed: ``k = k_in + k_out``, mean ``k_in`` = mean ``k_out`` = m/n
        and mean total degree 2m/n. Undirected: ``k`` counts incident edges,
        mean 2m/n.
        """
        n = self.n
        if self.directed:
            k_out = np.array([len(t) for t in self.out_index], dtype=np.int64)
            k_in = np.array([len(t) for t in self.in_index], dtype=np.int64)
            k = k_in + k_out
            return DegreeSummary(
                k_in=k_in,
                k_out=k_out,
                k=k,
                mean_k_in=self.m / n if n else 0.0,
                mean_k_out=self.m / n if n else 0.0,
                mean_k=2 * self.m / n if n else 0.0,
            )
        k = np.array([len(t) for t in self.out_index], dtype=np.int64)
        return DegreeSummary(
            k_in=None,
            k_out=None,
            k=k,
            mean_k_in=None,
            mean_k_out=None,
            mean_k=2 * self.m / n if n else 0.0,
        )

    # -- derived networks --------------------------------------------------

    def to_undirected(self) -> AssociationNetwork:
        """Collapse reciprocal arcs into single edges, summing their weights."""
        if not self.directed:
            raise InputError("network is already undirected")
        merged: dict[tuple[int, int], int] = {}
        for arc in self.arcs:
            key = (arc.source, arc.target) if arc.source < arc.target else (arc.target, arc.source)
            merged[key] = merged.get(key, 0) + arc.weight
        edges = [Arc(u, v, w) for (u, v), w in merged.items()]
        return AssociationNetwork(self.nodes, edges, directed=False)

    def subgraph_from_arcs(
        self, arc_predicate: Callable[[Arc], bool]
    ) -> tuple[AssociationNetwork, dict[str, int]]:
        """Arc-induced subgraph: arcs passing the predicate plus their endpoints.

        Ids are re-densified in ascending old-id order. Returns the subnetwork
        and a mapping from kept label to the old node id.
        """
        kept = [arc for arc in self.arcs if arc_predicate(arc)]
        old_ids = sorted({arc.source for arc in kept} | {arc.target for arc in kept})
        remap = {old: new for new, old in enumerate(old_ids)}
        nodes = tuple(
            WordNode(
                id=remap[old],
                label=self.nodes[old].label,
                concreteness=self.nodes[old].concreteness,
                is_cue=self.nodes[old].is_cue,
            )
            for old in old_ids
        )
        arcs = [Arc(remap[a.source], remap[a.target], a.weight) for a in kept]
        sub = AssociationNetwork(nodes, arcs, directed=self.directed)
        return sub, {self.nodes[old].label: old for old in old_ids}

    # -- kernel-facing adjacency ---------------------------------------------

    def csr(self, view: str) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency in CSR form (indptr int64, indices int32), neighbors sorted.

        Views: ``out``, ``in``, ``union``. For undirected networks every view
        is the symmetric adjacency.
        """
        key = "sym" if not self.directed else view
        cached = self._csr_cache.get(key)
        if cached is not None:
            return cached
        if not self.directed:
            lists: Sequence[tuple[int, ...]] = self.out_index
        elif view == "out":
            lists = self.out_index
        elif view == "in":
            lists = self.in_index
        elif view == "union":
            lists = tuple(self.neighbors(v, "union") for v in range(self.n))
        else:
            raise InputError(f"unknown adjacency view {view!r}")
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v, nbrs in enumerate(lists):
            indptr[v + 1] = indptr[v] + len(nbrs)
        indices = np.empty(int(indptr[-1]), dtype=np.int32)
        for v, nbrs in enumerate(lists):
            indices[indptr[v] : indptr[v + 1]] = nbrs
        self._csr_cache[key] = (indptr, indices)
        return indptr, indices

    # -- persistence -----------------------------------------------------

    def to_json(self) -> str:
        """Canonical JSON: stable key order, arrays sorted by id / (source, target)."""
        payload: dict = {
            "directed": self.directed,
            "nodes": [
                {
                    "id": node.id,
                    "label": node.label,
                    **({"concreteness": node.concreteness} if node.concreteness is not None else {}),
                    "is_cue": node.is_cue,
                }
                for node in self.nodes
            ],
            "arcs": [
                {"source": a.source, "target": a.target, "weight": a.weight} for a in self.arcs
            ],
        }
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> AssociationNetwork:
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid network JSON: {exc}") from exc
        for field in ("directed", "nodes", "arcs"):
            if field not in payload:
                raise InputError(f"network JSON missing {field!r}")
        nodes = [
            WordNode(
                id=int(entry["id"]),
                label=str(entry["label"]),
                concreteness=entry.get("concreteness"),
                is_cue=bool(entry.get("is_cue", False)),
            )
            for entry in payload["nodes"]
        ]
        nodes.sort(key=lambda nd: nd.id)
        arcs = [
            Arc(int(entry["source"]), int(entry["target"]), int(entry["weight"]))
            for entry in payload["arcs"]
        ]
        return cls(nodes, arcs, directed=bool(payload["directed"]))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> AssociationNetwork:
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def from_edges(
    edges: Iterable[tuple[int, int] | tuple[int, int, int]],
    n: int | None = None,
    directed: bool = False,
    labels: Sequence[str] | None = None,
) -> AssociationNetwork:
    """Build a network from ``(u, v)`` or ``(u, v, weight)`` tuples.

    Test and generator plumbing; node count defaults to ``max id + 1`` and
    labels to ``v0..v{n-1}``.
    """
    arcs = []
    max_id = -1
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        w = int(edge[2]) if len(edge) > 2 else 1
        arcs.append(Arc(u, v, w))
        max_id = max(max_id, u, v)
    if n is None:
        n = max_id + 1
    if labels is None:
        labels = [f"v{i}" for i in range(n)]
    nodes = [WordNode(id=i, label=labels[i]) for i in range(n)]
    return AssociationNetwork(nodes, arcs, directed=directed)

"""Norms-file ingestion: parsing, endorsement filtering, network building,
and the median-concreteness split.

Pairs files are UTF-8 delimited text with header ``cue<TAB>response<TAB>count``
(ratings: ``word<TAB>rating``); lines starting with ``#`` are ignored. Labels
are NFC-normalized, case-folded, and trimmed on the way in so accented forms
survive and case variants merge.
"""

from __future__ import annotations

import statistics
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputError, ParseError
from .graph import (
    CONCRETENESS_MAX,
    CONCRETENESS_MIN,
    Arc,
    AssociationNetwork,
    WordNode,
)

DEFAULT_MIN_ENDORSEMENT = 2

PAIRS_HEADER = ("cue", "response", "count")
RATINGS_HEADER = ("word", "rating")


@dataclass(frozen=True)
class AssociationRecord:
    """One aggregated (cue, response, endorsement count) row.

    ``lines`` keeps the source row numbers that fed the aggregate, for
    diagnostics.
    """

    cue: str
    response: str
    count: int
    lines: tuple[int, ...] = field(default=(), compare=False)


RatingsTable = dict[str, float]


def normalize_label(raw: str) -> str:
    """NFC normalization, case fold, trim. Idempotent."""
    return unicodedata.normalize("NFC", raw).casefold().strip()


def _data_rows(path: str | Path, delimiter: str):
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line.split(delimiter)


def parse_pairs_file(path: str | Path, delimiter: str = "\t") -> list[AssociationRecord]:
    """Parse a norms file into aggregated association records.

    Duplicate (cue, response) rows sum their counts. Records come back in
    first-appearance order.
    """
    path = Path(path)
    rows = _data_rows(path, delimiter)
    try:
        header_line, header = next(rows)
    except StopIteration:
        raise InputError(f"{path}: empty pairs file") from None
    if tuple(col.strip().lower() for col in header) != PAIRS_HEADER:
        raise ParseError(
            f"expected header {'|'.join(PAIRS_HEADER)!r}, got {'|'.join(header)!r}",
            path=str(path),
            line=header_line,
        )
    merged: dict[tuple[str, str], tuple[int, list[int]]] = {}
    for lineno, cols in rows:
        if len(cols) != 3:
            raise ParseError(f"expected 3 fields, got {len(cols)}", path=str(path), line=lineno)
        cue = normalize_label(cols[0])
        response = normalize_label(cols[1])
        if not cue or not response:
            raise ParseError("empty cue or response", path=str(path), line=lineno)
        try:
            count = int(cols[2].strip())
        except ValueError:
            raise ParseError(f"count {cols[2].strip()!r} is not an integer", path=str(path), line=lineno) from None
        if count < 1:
            raise ParseError(f"count must be >= 1, got {count}", path=str(path), line=lineno)
        key = (cue, response)
        if key in merged:
            prev_count, lines = merged[key]
            merged[key] = (prev_count + count, lines + [lineno])
        else:
            merged[key] = (count, [lineno])
    if not merged:
        raise InputError(f"{path}: no data rows")
    return [
        AssociationRecord(cue=cue, response=response, count=count, lines=tuple(lines))
        for (cue, response), (count, lines) in merged.items()
    ]


def parse_ratings_file(path: str | Path, delimiter: str = "\t") -> RatingsTable:
    """Parse word -> concreteness ratings; enforces the 1..7 scale."""
    path = Path(path)
    rows = _data_rows(path, delimiter)
    try:
        header_line, header = next(rows)
    except StopIteration:
        raise InputError(f"{path}: empty ratings file") from None
    if tuple(col.strip().lower() for col in header) != RATINGS_HEADER:
        raise ParseError(
            f"expected header {'|'.join(RATINGS_HEADER)!r}, got {'|'.join(header)!r}",
            path=str(path),
            line=header_line,
        )
    table: RatingsTable = {}
    for lineno, cols in rows:
        if len(cols) != 2:
            raise ParseError(f"expected 2 fields, got {len(cols)}", path=str(path), line=lineno)
        word = normalize_label(cols[0])
        if not word:
            raise ParseError("empty word", path=str(path), line=lineno)
        try:
            rating = float(cols[1].strip())
        except ValueError:
            raise ParseError(f"rating {cols[1].strip()!r} is not a number", path=str(path), line=lineno) from None
        if not (CONCRETENESS_MIN <= rating <= CONCRETENESS_MAX):
            raise ParseError(
                f"rating {rating} outside [{CONCRETENESS_MIN}, {CONCRETENESS_MAX}]",
                path=str(path),
                line=lineno,
            )
        if word in table and table[word] != rating:
            raise ParseError(
                f"conflicting ratings for {word!r}: {table[word]} vs {rating}",
                path=str(path),
                line=lineno,
            )
        table[word] = rating
    if not table:
        raise InputError(f"{path}: no data rows")
    return table


def filter_min_endorsement(
    records: list[AssociationRecord], threshold: int = DEFAULT_MIN_ENDORSEMENT
) -> list[AssociationRecord]:
    """Keep records endorsed by at least ``threshold`` participants, order preserved."""
    if threshold < 1:
        raise InputError(f"endorsement threshold must be >= 1, got {threshold}")
    return [rec for rec in records if rec.count >= threshold]


def build_network(
    records: list[AssociationRecord], ratings: RatingsTable | None = None
) -> AssociationNetwork:
    """Directed network: one node per distinct label, one arc per cue->response.

    Cue-echo responses (self-loops after normalization) are dropped. Nodes
    pick up concreteness from ``ratings`` where available; ``is_cue`` marks
    every word that appears as a cue.
    """
    if not records:
        raise InputError("cannot build a network from zero records")
    ratings = ratings or {}
    labels: list[str] = []
    index: dict[str, int] = {}
    is_cue: set[str] = set()
    weights: dict[tuple[int, int], int] = {}

    def intern(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for rec in records:
        cue = normalize_label(rec.cue)
        response = normalize_label(rec.response)
        is_cue.add(cue)
        cue_id = intern(cue)
        if cue == response:
            continue  # echoes carry no associative information
        response_id = intern(response)
        key = (cue_id, response_id)
        weights[key] = weights.get(key, 0) + rec.count

    nodes = [
        WordNode(
            id=i,
            label=label,
            concreteness=ratings.get(label),
            is_cue=label in is_cue,
        )
        for i, label in enumerate(labels)
    ]
    arcs = [Arc(src, tgt, w) for (src, tgt), w in weights.items()]
    return AssociationNetwork(nodes, arcs, directed=True)


def split_by_median_concreteness(
    net: AssociationNetwork,
) -> tuple[AssociationNetwork, AssociationNetwork, float]:
    """Split arcs by their cue's concreteness against the rated-cue median.

    Concrete gets arcs whose cue-side rating is strictly above the median;
    everything else (ties and unrated cues) goes to abstract, so the two arc
    sets partition the network's arcs. Response nodes can appear on both
    sides.
    """
    rated = [node.concreteness for node in net.nodes if node.is_cue and node.concreteness is not None]
    if not rated:
        raise InputError("no rated cue nodes: cannot compute the concreteness median")
    median = float(statistics.median(rated))

    def cue_rating(arc: Arc) -> float | None:
        return net.nodes[arc.source].concreteness

    concrete, _ = net.subgraph_from_arcs(
        lambda arc: cue_rating(arc) is not None and cue_rating(arc) > median
    )
    abstract, _ = net.subgraph_from_arcs(
        lambda arc: cue_rating(arc) is None or cue_rating(arc) <= median
    )
    return concrete, abstract, median

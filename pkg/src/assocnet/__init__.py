"""assocnet: directed weighted semantic networks from word-association norms.

Build networks from cue/response norms, measure their small-world structure
against seeded random benchmarks, detect weighted communities, and score
node influence. Library API plus an ``assocnet`` CLI.
"""

__version__ = "0.1.0"

from .errors import AssocNetError, InputError, ParseError, UndefinedResultError
from .graph import UNREACHABLE, Arc, AssociationNetwork, DegreeSummary, WordNode, from_edges
from .ingest import (
    AssociationRecord,
    RatingsTable,
    build_network,
    filter_min_endorsement,
    normalize_label,
    parse_pairs_file,
    parse_ratings_file,
    split_by_median_concreteness,
)

__all__ = [
    "__version__",
    "AssocNetError",
    "InputError",
    "ParseError",
    "UndefinedResultError",
    "UNREACHABLE",
    "Arc",
    "AssociationNetwork",
    "DegreeSummary",
    "WordNode",
    "from_edges",
    "AssociationRecord",
    "RatingsTable",
    "build_network",
    "filter_min_endorsement",
    "normalize_label",
    "parse_pairs_file",
    "parse_ratings_file",
    "split_by_median_concreteness",
]

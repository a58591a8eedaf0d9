"""Tournament combinatorics: canonical forms, transitive subtournaments,
galaxy orderings, homogeneous sets, smooth structures and forbidden-pattern search."""

from .core import (CanonicalForm, Tournament, build, canonical_form, complement, contains,
                   from_ordering, induced, is_free, is_isomorphic, relabel, transitive_tournament)
from .transitive import TrResult, tr

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm", "Tournament", "TrResult", "build", "canonical_form", "complement",
    "contains", "from_ordering", "induced", "is_free", "is_isomorphic", "relabel", "tr",
    "transitive_tournament",
]

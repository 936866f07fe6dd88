"""Borsuk-Ulam indices of free involutions on the ten flat Seifert 3-manifolds.

Thin wrapper over the C++ core. Manifold ids are strings ("M1".."M6",
"N1".."N4"); epimorphisms onto Z/2 are numbered from 1 in lexicographic order.
"""

import json

from . import _flatbu
from ._flatbu import (
    AmbiguousOrUnknown,
    IncompleteSeparation,
    classes,
    classical_number,
    epimorphisms,
    graph,
    index,
    run_acceptance,
)

__all__ = [
    "AmbiguousOrUnknown",
    "IncompleteSeparation",
    "abelianization",
    "analyze",
    "catalog",
    "classes",
    "classical_number",
    "cover",
    "epimorphisms",
    "graph",
    "index",
    "run_acceptance",
    "smith_normal_form",
]


def catalog():
    """The ten catalog entries: id, orientability, H1 and Seifert forms."""
    return json.loads(_flatbu.catalog_json())


def cover(manifold, epi):
    """Cover report for the double cover of `manifold` along epimorphism `epi`."""
    return json.loads(_flatbu.cover_json(manifold, epi))


def analyze(symbol):
    """Analyze a Seifert symbol {"b", "type", "g", "pairs"} given as a dict."""
    return json.loads(_flatbu.analyze_json(json.dumps(symbol)))


def smith_normal_form(rows):
    """Return (U, D, V, rank) with U @ A @ V == D, as lists of Python ints."""
    u, d, v, rank = _flatbu.smith_normal_form([[str(x) for x in row] for row in rows])
    as_int = lambda m: [[int(x) for x in row] for row in m]
    return as_int(u), as_int(d), as_int(v), rank


def abelianization(generators, relators):
    """Return (rank, torsion) of the abelianized presentation."""
    rank, torsion = _flatbu.abelianization(list(generators), list(relators))
    return rank, [int(t) for t in torsion]

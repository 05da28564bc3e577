"""Optimal stable roommates matchings.

Thin wrappers over the compiled core: instances, costs, and posets travel as
the same text formats the sr-opt CLI reads, results come back as dicts.
"""

import json

try:
    from . import _srmatch as _core
except ImportError:  # build-tree layout keeps the extension next to the package
    import _srmatch as _core

ValidationError = _core.ValidationError
BudgetError = _core.BudgetError


def solve(instance):
    """One stable matching, as {"status": "ok", "pairs": [[a, b], ...]} or
    {"status": "unsolvable"}."""
    return json.loads(_core.solve_json(instance))


def rotations(instance):
    """Rotation universe: {"rotations": [...], "order": [...], "fixed_pairs": [...]}."""
    return json.loads(_core.rotations_json(instance))


def optimal(instance, costs="", kmax=16):
    """Minimum-cost stable matching with the full report (cost, k, intervals).

    An empty cost table means egalitarian costs derived from the preference
    lists.  kmax bounds the crossing search.
    """
    return json.loads(_core.optimal_json(instance, costs, kmax))


def mco(text, kmax=16, encoding="hardsoft"):
    """Minimum-crossing orientation of an 'mp' poset, or of the reduced
    rotation poset when given an 'sr' instance."""
    return json.loads(_core.mco_json(text, kmax, encoding))


def gen_sr(seed, n, solvable=False):
    """Random roommates instance in 'sr' text form."""
    return _core.gen_sr(seed, n, solvable)


def gen_costs(seed, instance):
    """Random cost table (strictly increasing along preference lists)."""
    return _core.gen_costs(seed, instance)


__all__ = [
    "solve",
    "rotations",
    "optimal",
    "mco",
    "gen_sr",
    "gen_costs",
    "ValidationError",
    "BudgetError",
]

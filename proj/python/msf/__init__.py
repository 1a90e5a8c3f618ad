"""Maximal sum-free sets in finite abelian groups.

Graphs cross the boundary as adjacency-list text (see ``fixture`` and
``link_graph``); reports come back as plain dicts in the msf/1 JSON schema.
"""

from ._msf import (
    SCHEMA,
    BudgetExceeded,
    Group,
    VerificationFailure,
    caps_via_sumfree,
    classify,
    construct,
    count,
    count_complete_caps,
    fixture,
    fixture_names,
    graph_summary,
    is_sumfree,
    link_graph,
    maximal_sumfree_sets,
    mis,
    mu,
    to_dot,
    verify_prop34,
)

__all__ = [
    "SCHEMA",
    "BudgetExceeded",
    "Group",
    "VerificationFailure",
    "caps_via_sumfree",
    "classify",
    "construct",
    "count",
    "count_complete_caps",
    "fixture",
    "fixture_names",
    "graph_summary",
    "is_sumfree",
    "link_graph",
    "maximal_sumfree_sets",
    "mis",
    "mu",
    "to_dot",
    "verify_prop34",
]

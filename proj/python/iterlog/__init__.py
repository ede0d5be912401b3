"""Exact symbolic engine for formal iterated logarithms and exponentials."""

import json as _json

try:
    from ._iterlog import (
        check_identities_json,
        derive_json,
        expand_json,
        factored_constant,
        stirling,
        stirling_table,
        tableau_polynomial_str,
        tableaux,
    )
except ImportError:  # extension built out of tree, e.g. in the test harness
    from _iterlog import (
        check_identities_json,
        derive_json,
        expand_json,
        factored_constant,
        stirling,
        stirling_table,
        tableau_polynomial_str,
        tableaux,
    )

__all__ = [
    "check_identities",
    "check_identities_json",
    "derive",
    "derive_json",
    "expand",
    "expand_json",
    "factored_constant",
    "stirling",
    "stirling_table",
    "tableau_polynomial_str",
    "tableaux",
]


def expand(level, exponent="r", order=3, method="oracle"):
    """Series expansion as a parsed JSON document."""
    return _json.loads(expand_json(level, exponent, order, method))


def derive(level, times=1):
    """times-fold derivative of the level variable, parsed from JSON."""
    return _json.loads(derive_json(level, times))


def check_identities(max_m=10, max_total=8, order=4):
    """All identity sweep reports as a list of dicts."""
    return _json.loads(check_identities_json(max_m, max_total, order))

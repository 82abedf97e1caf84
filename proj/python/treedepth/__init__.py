"""Exact treedepth solver.

Graphs are given as a vertex count and a list of 0-based edges.
"""

from ._core import (
    ParseError,
    emit_tree,
    minimal_separators,
    parse_gr,
    solve,
    upper_bound,
    verify,
)

__all__ = [
    "ParseError",
    "emit_tree",
    "minimal_separators",
    "parse_gr",
    "solve",
    "solve_gr",
    "upper_bound",
    "verify",
]


def solve_gr(text, **options):
    """Solve a .gr document and return the .tree certificate text."""
    n, edges = parse_gr(text)
    result = solve(n, edges, **options)
    return emit_tree(result["parents"], result["treedepth"])

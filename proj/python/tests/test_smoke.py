import itertools

import pytest

import treedepth


def path(n):
    return n, [(i, i + 1) for i in range(n - 1)]


def cycle(n):
    return n, [(i, (i + 1) % n) for i in range(n)]


def clique(n):
    return n, list(itertools.combinations(range(n), 2))


@pytest.mark.parametrize(
    "graph, expected",
    [(path(4), 3), (path(15), 4), (cycle(8), 4), (clique(5), 5), ((7, []), 1), ((0, []), 0)],
)
def test_solve_known_values(graph, expected):
    n, edges = graph
    result = treedepth.solve(n, edges)
    assert result["treedepth"] == expected
    assert result["optimal"]
    assert treedepth.verify(n, edges, result["parents"], result["treedepth"])


def test_upper_bound_is_valid():
    n, edges = cycle(12)
    depth, parents = treedepth.upper_bound(n, edges)
    assert depth >= 5
    assert treedepth.verify(n, edges, parents, depth)


def test_verify_rejects_bad_forest():
    n, edges = clique(3)
    assert not treedepth.verify(n, edges, [-1, 0, 0], 2)


def test_gr_round_trip():
    text = "c demo\np tdp 4 3\n1 2\n2 3\n3 4\n"
    n, edges = treedepth.parse_gr(text)
    assert (n, edges) == (4, [(0, 1), (1, 2), (2, 3)])
    tree = treedepth.solve_gr(text)
    assert tree.splitlines()[0] == "3"
    assert treedepth.emit_tree([1, -1, 1, 2], 3) == "3\n2\n0\n2\n3\n"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="line 2"):
        treedepth.parse_gr("p tdp 2 1\n1 3\n")


def test_minimal_separators():
    n, edges = path(5)
    assert sorted(treedepth.minimal_separators(n, edges, 2)) == [[1], [2], [3]]
    assert treedepth.minimal_separators(*clique(4), 3) == []

from hypothesis import given, settings
from hypothesis import strategies as st

from barcodekit.matching import hopcroft_karp


def max_matching_exhaustive(adjacency, n_right):
    def best(u, used):
        if u == len(adjacency):
            return 0
        out = best(u + 1, used)
        for v in adjacency[u]:
            if v not in used:
                out = max(out, 1 + best(u + 1, used | {v}))
        return out

    return best(0, frozenset())


@st.composite
def graphs(draw):
    n_left = draw(st.integers(0, 6))
    n_right = draw(st.integers(0, 6))
    adjacency = [
        sorted(draw(st.sets(st.integers(0, n_right - 1), max_size=n_right))) if n_right else []
        for _ in range(n_left)
    ]
    return adjacency, n_right


@settings(max_examples=300)
@given(graphs())
def test_size_matches_exhaustive_search(graph):
    adjacency, n_right = graph
    size, _, _ = hopcroft_karp(adjacency, n_right)
    assert size == max_matching_exhaustive(adjacency, n_right)


@given(graphs())
def test_returned_matching_is_consistent(graph):
    adjacency, n_right = graph
    size, match_left, match_right = hopcroft_karp(adjacency, n_right)
    pairs = [(u, v) for u, v in enumerate(match_left) if v != -1]
    assert len(pairs) == size
    for u, v in pairs:
        assert v in adjacency[u]
        assert match_right[v] == u
    assert sum(v != -1 for v in match_right) == size


def test_long_augmenting_path_does_not_recurse():
    # a path graph forces augmenting paths through every vertex
    n = 5000
    adjacency = [[u, u + 1] if u + 1 < n else [u] for u in range(n)]
    adjacency.reverse()  # defeat the greedy warm start
    size, _, _ = hopcroft_karp(adjacency, n)
    assert size == n


def test_empty():
    assert hopcroft_karp([], 0) == (0, [], [])
    assert hopcroft_karp([[], []], 3)[0] == 0

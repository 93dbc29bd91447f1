"""Hopcroft-Karp maximum cardinality matching on a bipartite graph."""

from __future__ import annotations

from collections import deque
from typing import Sequence

_UNMATCHED = -1


def hopcroft_karp(adjacency: Sequence[Sequence[int]], n_right: int) -> tuple:
    """Maximum matching of a bipartite graph in O(E sqrt(V)).

    ``adjacency[u]`` lists the right vertices adjacent to left vertex ``u``.
    Returns ``(size, match_left, match_right)`` where unmatched entries are -1.
    The search is iterative, so long augmenting paths do not hit the
    recursion limit.
    """
    n_left = len(adjacency)
    match_left = [_UNMATCHED] * n_left
    match_right = [_UNMATCHED] * n_right
    size = 0

    # greedy warm start
    for u in range(n_left):
        for v in adjacency[u]:
            if match_right[v] == _UNMATCHED:
                match_left[u] = v
                match_right[v] = u
                size += 1
                break

    while True:
        dist = [-1] * n_left
        queue = deque()
        for u in range(n_left):
            if match_left[u] == _UNMATCHED:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                w = match_right[v]
                if w == _UNMATCHED:
                    found = True
                elif dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            break

        cursor = [0] * n_left
        for root in range(n_left):
            if match_left[root] != _UNMATCHED:
                continue
            # layered DFS with an explicit stack of left vertices
            stack = [root]
            path_right = []
            while stack:
                u = stack[-1]
                advanced = False
                adj = adjacency[u]
                while cursor[u] < len(adj):
                    v = adj[cursor[u]]
                    cursor[u] += 1
                    w = match_right[v]
                    if w == _UNMATCHED:
                        path_right.append(v)
                        # augment along the stack
                        for left, right in zip(stack, path_right):
                            match_left[left] = right
                            match_right[right] = left
                        size += 1
                        stack = []
                        advanced = True
                        break
                    if dist[w] == dist[u] + 1:
                        path_right.append(v)
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = -1  # dead end for this phase
                    stack.pop()
                    if path_right:
                        path_right.pop()
    return size, match_left, match_right

"""Exact delta-matchings and the bottleneck distance between barcodes.

Two bars are *compatible* at ``delta`` when each is contained in the other
widened by ``delta`` on both sides, which reduces to both endpoint gaps being
at most ``delta``.  A finite bar of length at most ``2 * delta`` may be
deleted; semi-infinite bars never can.

The decision problem is solved as a perfect matching on an augmented
bipartite graph, and the distance is the least element of a finite candidate
set admitting a matching.  All comparisons are plain float comparisons on
the same expressions the candidate set is built from, so the result is exact
with respect to the represented endpoints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .barcode import INF, Bar, Barcode, grading_of, require_valid, sigma_inf_by_degree
from .matching import hopcroft_karp

BRUTE_FORCE_CAP = 8


def compatible(i: Bar, j: Bar, delta: float) -> bool:
    if i.is_infinite != j.is_infinite:
        return False
    if i.is_infinite:
        return abs(i.birth - j.birth) <= delta
    return abs(i.birth - j.birth) <= delta and abs(i.death - j.death) <= delta


def deletable(bar: Bar, delta: float) -> bool:
    # non-strict on purpose: makes the infimum in the distance a minimum
    return not bar.is_infinite and bar.death - bar.birth <= 2 * delta


def pair_cost(i: Bar, j: Bar) -> float:
    """Least delta at which ``i`` and ``j`` are compatible (inf if never)."""
    if i.is_infinite != j.is_infinite:
        return INF
    if i.is_infinite:
        return abs(i.birth - j.birth)
    return max(abs(i.birth - j.birth), abs(i.death - j.death))


def deletion_cost(bar: Bar) -> float:
    return INF if bar.is_infinite else (bar.death - bar.birth) / 2


@dataclass
class MatchingWitness:
    delta: float
    pairs: list = field(default_factory=list)
    deleted_left: list = field(default_factory=list)
    deleted_right: list = field(default_factory=list)

    def problem(self, left: Barcode, right: Barcode) -> Optional[str]:
        """Re-check the witness against both barcodes; ``None`` means sound."""
        used_left = [p[0] for p in self.pairs] + list(self.deleted_left)
        used_right = [p[1] for p in self.pairs] + list(self.deleted_right)
        if sorted(used_left, key=_key) != list(left.bars):
            return "pairs and left deletions do not cover the left barcode exactly"
        if sorted(used_right, key=_key) != list(right.bars):
            return "pairs and right deletions do not cover the right barcode exactly"
        for bar in itertools.chain(self.deleted_left, self.deleted_right):
            if not deletable(bar, self.delta):
                return f"deleted bar {bar} is not deletable at delta={self.delta!r}"
        for i, j in self.pairs:
            if i.degree != j.degree:
                return f"pair {i} / {j} crosses degrees"
            if not compatible(i, j, self.delta):
                return f"pair {i} / {j} is not compatible at delta={self.delta!r}"
        return None


def _key(bar: Bar) -> tuple:
    return (bar.degree is None, bar.degree or 0, bar.birth, bar.death)


def _match_single_degree(left: list, right: list, delta: float) -> Optional[MatchingWitness]:
    """Perfect matching on the augmented graph for one degree.

    Left vertices: bars of ``left`` then one diagonal copy per bar of ``right``.
    Right vertices: bars of ``right`` then one diagonal copy per bar of ``left``.
    A bar is joined to its own diagonal copy only when deletable; diagonal
    copies are joined to each other completely.
    """
    n, m = len(left), len(right)
    adjacency = []
    for a, i in enumerate(left):
        row = [b for b, j in enumerate(right) if compatible(i, j, delta)]
        if deletable(i, delta):
            row.append(m + a)
        adjacency.append(row)
    diag_to_diag = list(range(m, m + n))
    for b, j in enumerate(right):
        row = [b] if deletable(j, delta) else []
        adjacency.append(row + diag_to_diag)
    size, match_left, _ = hopcroft_karp(adjacency, m + n)
    if size < n + m:
        return None
    witness = MatchingWitness(delta)
    for a in range(n):
        b = match_left[a]
        if b < m:
            witness.pairs.append((left[a], right[b]))
        else:
            witness.deleted_left.append(left[a])
    for b, j in enumerate(right):
        if match_left[n + b] == b:
            witness.deleted_right.append(j)
    return witness


def _split_by_degree(b1: Barcode, b2: Barcode) -> list:
    degrees = sorted({b.degree for b in b1} | {b.degree for b in b2},
                     key=lambda d: (d is None, d or 0))
    return [([x for x in b1 if x.degree == d], [y for y in b2 if y.degree == d]) for d in degrees]


def delta_matching_exists(b1: Barcode, b2: Barcode, delta: float) -> Optional[MatchingWitness]:
    """A verified ``delta``-matching between ``b1`` and ``b2``, or ``None``.

    Graded barcodes are matched degree by degree.
    """
    require_valid(b1)
    require_valid(b2)
    grading_of(b1, b2)
    witness = MatchingWitness(delta)
    for left, right in _split_by_degree(b1, b2):
        part = _match_single_degree(left, right, delta)
        if part is None:
            return None
        witness.pairs += part.pairs
        witness.deleted_left += part.deleted_left
        witness.deleted_right += part.deleted_right
    problem = witness.problem(b1, b2)
    if problem is not None:  # pragma: no cover - would mean a matching bug
        raise AssertionError(f"matching witness failed re-validation: {problem}")
    return witness


def candidate_deltas(b1: Barcode, b2: Barcode) -> list:
    """Sorted, deduplicated finite set containing the bottleneck threshold.

    Contains 0, the gaps between births and between finite deaths across the
    two barcodes, and half of every difference of two finite endpoints taken
    from either barcode (which covers every half-length).
    """
    values = {0.0}
    births1 = [x.birth for x in b1]
    births2 = [y.birth for y in b2]
    deaths1 = [x.death for x in b1 if not x.is_infinite]
    deaths2 = [y.death for y in b2 if not y.is_infinite]
    values.update(abs(a - c) for a in births1 for c in births2)
    values.update(abs(b - d) for b in deaths1 for d in deaths2)
    ends = sorted(set(b1.endpoints()) | set(b2.endpoints()))
    values.update((y - x) / 2 for x, y in itertools.combinations(ends, 2))
    for bar in itertools.chain(b1, b2):
        if not bar.is_infinite:
            values.add((bar.death - bar.birth) / 2)
    return sorted(values)


def _sigma_profile_matches(b1: Barcode, b2: Barcode) -> bool:
    s1, s2 = sigma_inf_by_degree(b1), sigma_inf_by_degree(b2)
    return all(s1.get(d, 0) == s2.get(d, 0) for d in set(s1) | set(s2))


def _distance_single_degree(left: list, right: list) -> float:
    if sum(x.is_infinite for x in left) != sum(y.is_infinite for y in right):
        return INF
    cands = candidate_deltas(Barcode(left), Barcode(right))
    lo, hi = 0, len(cands) - 1
    if _match_single_degree(left, right, cands[hi]) is None:  # pragma: no cover
        return INF
    while lo < hi:
        mid = (lo + hi) // 2
        if _match_single_degree(left, right, cands[mid]) is not None:
            hi = mid
        else:
            lo = mid + 1
    return cands[lo]


def bottleneck_distance(b1: Barcode, b2: Barcode) -> float:
    """Exact bottleneck distance; ``inf`` iff the semi-infinite counts differ.

    For graded barcodes this is the maximum of the per-degree distances.
    """
    require_valid(b1)
    require_valid(b2)
    grading_of(b1, b2)
    if not _sigma_profile_matches(b1, b2):
        return INF
    result = 0.0
    for left, right in _split_by_degree(b1, b2):
        result = max(result, _distance_single_degree(left, right))
    return result


# ---------------------------------------------------------------------------
# brute force reference


def partial_matchings(left: list, right: list) -> Iterator[tuple]:
    """Every admissible way to pair up or delete the bars of two lists.

    Yields ``(pairs, deleted_left, deleted_right)`` as index lists.  Pairs
    join bars of the same kind (finite/finite or infinite/infinite); only
    finite bars are ever deleted.
    """
    m = len(right)

    def rec(a: int, used: frozenset, pairs: list, dropped: list):
        if a == len(left):
            rest = [b for b in range(m) if b not in used]
            if all(not right[b].is_infinite for b in rest):
                yield list(pairs), list(dropped), rest
            return
        bar = left[a]
        if not bar.is_infinite:
            dropped.append(a)
            yield from rec(a + 1, used, pairs, dropped)
            dropped.pop()
        for b in range(m):
            if b not in used and right[b].is_infinite == bar.is_infinite:
                pairs.append((a, b))
                yield from rec(a + 1, used | {b}, pairs, dropped)
                pairs.pop()

    yield from rec(0, frozenset(), [], [])


def brute_force_distance(b1: Barcode, b2: Barcode) -> float:
    """Reference distance by exhaustive enumeration of deletions and bijections.

    The value of one configuration is the largest pair cost or deletion cost
    it uses; the distance is the smallest value over all configurations.
    Limited to ``len(b1) + len(b2) <= 8``.
    """
    if len(b1) + len(b2) > BRUTE_FORCE_CAP:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_CAP} bars in total")
    require_valid(b1)
    require_valid(b2)
    grading_of(b1, b2)
    result = 0.0
    for left, right in _split_by_degree(b1, b2):
        best = INF
        for pairs, del_l, del_r in partial_matchings(left, right):
            cost = 0.0
            for a, b in pairs:
                cost = max(cost, pair_cost(left[a], right[b]))
            for a in del_l:
                cost = max(cost, deletion_cost(left[a]))
            for b in del_r:
                cost = max(cost, deletion_cost(right[b]))
            best = min(best, cost)
        result = max(result, best)
    return result

"""Barcodes modulo overall shift: distance, components, paths, Cauchy prefixes.

The distance between two shift classes is ``min_c d(B, B2[c])``.  For a
fixed pairing/deletion pattern, ``d(B, B2[c])`` is the maximum of terms
``|u - c|`` (``u`` a difference of paired endpoints) and constants, so its
minimum sits at the midpoint of two such ``u``.  Evaluating the bottleneck
distance at every such midpoint therefore finds the exact minimum.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from .barcode import (
    INF,
    Barcode,
    FormatError,
    ShiftClass,
    _bar_key,
    grading_of,
    format_barcode,
    parse_barcode,
    require_valid,
    shift,
    sigma_inf_by_degree,
)
from .bottleneck import (
    BRUTE_FORCE_CAP,
    _split_by_degree,
    bottleneck_distance,
    deletion_cost,
    partial_matchings,
)

ClassLike = Union[ShiftClass, Barcode]


def _rep(x: ClassLike) -> Barcode:
    return x.representative if isinstance(x, ShiftClass) else x


def _same_sigma_profile(b1: Barcode, b2: Barcode) -> bool:
    s1, s2 = sigma_inf_by_degree(b1), sigma_inf_by_degree(b2)
    return all(s1.get(d, 0) == s2.get(d, 0) for d in set(s1) | set(s2))


def same_component(x: ClassLike, y: ClassLike) -> bool:
    """Same number of semi-infinite bars (in every degree, when graded)."""
    b1, b2 = require_valid(_rep(x)), require_valid(_rep(y))
    grading_of(b1, b2)
    return _same_sigma_profile(b1, b2)


def candidate_shifts(b1: Barcode, b2: Barcode) -> list:
    """Endpoint differences and differences of endpoint midpoints, sorted."""
    e1 = sorted(set(b1.endpoints()))
    e2 = sorted(set(b2.endpoints()))
    values = {x - y for x in e1 for y in e2}
    mids1 = {(x1 + x2) / 2 for x1, x2 in itertools.combinations_with_replacement(e1, 2)}
    mids2 = {(y1 + y2) / 2 for y1, y2 in itertools.combinations_with_replacement(e2, 2)}
    values.update(m1 - m2 for m1 in mids1 for m2 in mids2)
    return sorted(values)


def shift_distance(x: ClassLike, y: ClassLike) -> float:
    """Distance between shift classes; ``inf`` iff they lie in different components."""
    b1, b2 = require_valid(_rep(x)), require_valid(_rep(y))
    grading_of(b1, b2)
    if not _same_sigma_profile(b1, b2):
        return INF
    # fixed orientation keeps the result exactly symmetric
    if [_bar_key(b) for b in b2] < [_bar_key(b) for b in b1]:
        b1, b2 = b2, b1
    candidates = candidate_shifts(b1, b2) or [0.0]
    # visit candidates from the middle outwards; prune with the 1-Lipschitz bound
    centre = candidates[len(candidates) // 2]
    candidates.sort(key=lambda c: abs(c - centre))
    best = INF
    probes: list = []
    for c in candidates:
        if probes and max(v - abs(c - c0) for c0, v in probes) >= best:
            continue
        value = bottleneck_distance(b1, shift(b2, c))
        probes.append((c, value))
        if value < best:
            best = value
            if best == 0.0:
                break
    return best


def grid_oracle_shift_distance(x: ClassLike, y: ClassLike, resolution: float) -> float:
    """Reference value: bottleneck distance minimised over a uniform grid of shifts.

    The grid spans the candidate shifts with step ``resolution`` (both ends
    included).  Since ``c -> d(B, B2[c])`` is 1-Lipschitz, the result exceeds
    the true minimum by at most ``resolution / 2``.  Small inputs are
    evaluated in bulk by enumerating every pairing pattern; larger ones fall
    back to one bottleneck computation per grid point.
    """
    b1, b2 = require_valid(_rep(x)), require_valid(_rep(y))
    grading_of(b1, b2)
    if not _same_sigma_profile(b1, b2):
        return INF
    shifts = candidate_shifts(b1, b2) or [0.0]
    lo, hi = shifts[0], shifts[-1]
    steps = int(math.floor((hi - lo) / resolution))
    grid = lo + resolution * np.arange(steps + 1)
    if grid[-1] < hi:
        grid = np.append(grid, hi)
    if len(b1) + len(b2) <= BRUTE_FORCE_CAP:
        return float(_grid_values(b1, b2, grid).min())
    return min(bottleneck_distance(b1, shift(b2, float(c))) for c in grid)


def _grid_values(b1: Barcode, b2: Barcode, grid: np.ndarray) -> np.ndarray:
    """``d(b1, b2[c])`` for every ``c`` in ``grid`` by exhaustive enumeration."""
    total = np.zeros_like(grid)
    for left, right in _split_by_degree(b1, b2):
        best = np.full_like(grid, INF)
        for pairs, del_l, del_r in partial_matchings(left, right):
            const = 0.0
            for a in del_l:
                const = max(const, deletion_cost(left[a]))
            for b in del_r:
                const = max(const, deletion_cost(right[b]))
            gaps = []
            for a, b in pairs:
                gaps.append(left[a].birth - right[b].birth)
                if not left[a].is_infinite:
                    gaps.append(left[a].death - right[b].death)
            if gaps:
                # max_i |g_i - c| = |c - mid| + half-range
                mid = (max(gaps) + min(gaps)) / 2
                half = (max(gaps) - min(gaps)) / 2
                values = np.maximum(np.abs(grid - mid) + half, const)
            else:
                values = np.full_like(grid, const)
            np.minimum(best, values, out=best)
        np.maximum(total, best, out=total)
    return total


# ---------------------------------------------------------------------------
# paths and Cauchy prefixes


@dataclass
class BarcodePath:
    steps: list
    epsilon: float


@dataclass(frozen=True)
class PathViolation:
    index: int
    conditions: tuple
    message: str

    def __str__(self) -> str:
        return f"violation at index {self.index} ({', '.join(self.conditions)}): {self.message}"


def _sigma_text(profile: dict) -> str:
    if set(profile) <= {None}:
        return str(profile.get(None, 0))
    return "{" + ", ".join(f"{d}: {n}" for d, n in sorted(profile.items())) + "}"


def check_path(path: BarcodePath) -> Optional[PathViolation]:
    """Check a sampled path: mesh bound and constant semi-infinite counts.

    Returns ``None`` when both hold, else the first failing step index with
    the condition(s) that broke (``"mesh"`` and/or ``"sigma"``).
    """
    steps = [require_valid(_rep(s)) for s in path.steps]
    if not steps:
        raise ValueError("path must contain at least one barcode")
    grading_of(*steps)
    for i in range(1, len(steps)):
        dist = shift_distance(steps[i - 1], steps[i])
        sigma_ok = _same_sigma_profile(steps[i - 1], steps[i])
        conditions = []
        if not sigma_ok:
            conditions.append("sigma")
        if not dist <= path.epsilon:
            conditions.append("mesh")
        if conditions:
            parts = []
            if not sigma_ok:
                before = _sigma_text(sigma_inf_by_degree(steps[i - 1]))
                after = _sigma_text(sigma_inf_by_degree(steps[i]))
                parts.append(f"σ^∞ jump {before}→{after}")
            parts.append(f"distance {_fmt(dist)}" + ("" if dist <= path.epsilon
                                                     else f" > ε={_fmt(path.epsilon)}"))
            return PathViolation(i, tuple(conditions), ", ".join(parts))
    return None


def _fmt(x: float) -> str:
    return "+∞" if x == INF else repr(float(x))


def cauchy_check(
    sequence: Sequence[ClassLike],
    schedule: Callable[[int], float],
    pairs: Optional[Iterable[tuple]] = None,
) -> bool:
    """Finite Cauchy test: ``shift_distance(S_i, S_j) <= schedule(min(i, j))``.

    Checks every pair unless ``pairs`` restricts the sample.
    """
    if pairs is None:
        pairs = itertools.combinations(range(len(sequence)), 2)
    for i, j in pairs:
        if not shift_distance(sequence[i], sequence[j]) <= schedule(min(i, j)):
            return False
    return True


# ---------------------------------------------------------------------------
# path file: barcode blocks separated by '---' lines


def parse_path(text: str) -> list:
    blocks: list = [[]]
    starts = [1]
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip() == "---":
            blocks.append([])
            starts.append(lineno + 1)
        else:
            blocks[-1].append(line)
    steps = []
    for start, block in zip(starts, blocks):
        steps.append(parse_barcode("\n".join(block), first_line=start))
    if not steps:
        raise FormatError("empty path file")
    return steps


def format_path(steps: Iterable[Barcode]) -> str:
    return "---\n".join(format_barcode(b) for b in steps)

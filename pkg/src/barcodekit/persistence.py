"""Barcodes of action-filtered chain complexes over Z/2.

A :class:`FilteredComplex` lists generators with an integer degree and a real
action value, and the boundary of each generator as a set of generator ids.
The sublevel complex at level ``kappa`` is spanned by the generators of
action ``< kappa``; a class created by a generator of action ``a`` and killed
by one of action ``b`` is alive exactly for ``kappa`` in ``(a, b]``.

Z/2 vectors are Python ints used as bitmasks, indexed by filtration position.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

import numpy as np

from .barcode import INF, Bar, Barcode, FormatError, Violation, format_number

# perturbation offsets are multiples of this, so dyadic actions stay exact
OFFSET_QUANTUM = 2.0 ** -32


class InvalidComplex(ValueError):
    pass


class PerturbationRejected(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    id: str
    degree: int
    action: float


@dataclass(frozen=True)
class FilteredComplex:
    generators: tuple
    boundary: Mapping = field(default_factory=dict)

    def __init__(self, generators: Iterable, boundary: Optional[Mapping] = None):
        gens = tuple(g if isinstance(g, Generator) else Generator(*g) for g in generators)
        bd = {k: frozenset(v) for k, v in (boundary or {}).items() if v}
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "boundary", bd)

    def __len__(self) -> int:
        return len(self.generators)

    def by_id(self) -> dict:
        return {g.id: g for g in self.generators}

    def boundary_of(self, gen_id: str) -> frozenset:
        return self.boundary.get(gen_id, frozenset())

    def filtration_order(self) -> list:
        """Generators by ascending action; ties broken by id."""
        return sorted(self.generators, key=lambda g: (g.action, g.id))


def validate_complex(c: FilteredComplex) -> Optional[Violation]:
    gens = {}
    for i, g in enumerate(c.generators):
        if g.id in gens:
            return Violation(i, f"duplicate generator id {g.id!r}", g)
        if not math.isfinite(g.action):
            return Violation(i, f"action of {g.id!r} is not finite", g)
        gens[g.id] = g
    for i, g in enumerate(c.generators):
        for target in sorted(c.boundary_of(g.id)):
            if target not in gens:
                return Violation(i, f"boundary of {g.id!r} names unknown generator {target!r}", g)
            t = gens[target]
            if t.degree != g.degree - 1:
                return Violation(i, f"boundary {g.id!r} -> {target!r} does not lower degree by 1", g)
            if not t.action < g.action:
                return Violation(i, f"action not decreasing along {g.id!r} -> {target!r}", g)
    unknown = set(c.boundary) - set(gens)
    if unknown:
        return Violation(-1, f"boundary given for unknown generators {sorted(unknown)}")
    for i, g in enumerate(c.generators):
        twice: set = set()
        for target in c.boundary_of(g.id):
            twice ^= c.boundary_of(target)
        if twice:
            return Violation(i, f"boundary of boundary of {g.id!r} is {sorted(twice)}, not 0", g)
    return None


def require_valid_complex(c: FilteredComplex) -> FilteredComplex:
    problem = validate_complex(c)
    if problem is not None:
        raise InvalidComplex(str(problem))
    return c


def barcode_of_complex(c: FilteredComplex) -> Barcode:
    """Graded barcode by left-to-right column reduction over Z/2.

    A reduced column ``j`` with lowest entry ``i`` gives the bar
    ``(action(i), action(j)]`` in the degree of ``i``; every generator left
    unpaired gives ``(action(i), inf)``.
    """
    require_valid_complex(c)
    order = c.filtration_order()
    pos = {g.id: k for k, g in enumerate(order)}
    pivots = {}  # lowest row -> reduced column
    paired = set()
    bars = []
    for j, g in enumerate(order):
        col = 0
        for target in c.boundary_of(g.id):
            col |= 1 << pos[target]
        while col:
            low = col.bit_length() - 1
            if low not in pivots:
                break
            col ^= pivots[low]
        if col:
            low = col.bit_length() - 1
            pivots[low] = col
            paired.update((low, j))
            birth = order[low]
            bars.append(Bar(birth.action, g.action, birth.degree))
    for k, g in enumerate(order):
        if k not in paired:
            bars.append(Bar(g.action, INF, g.degree))
    return Barcode(bars)


def gf2_rank(vectors: Iterable[int]) -> int:
    basis: dict = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def homology_rank(c: FilteredComplex) -> tuple:
    """``(total, {degree: rank})`` of ``ker d / im d`` over Z/2."""
    require_valid_complex(c)
    pos = {g.id: k for k, g in enumerate(c.generators)}
    counts: dict = {}
    columns: dict = {}
    for g in c.generators:
        counts[g.degree] = counts.get(g.degree, 0) + 1
        col = 0
        for target in c.boundary_of(g.id):
            col |= 1 << pos[target]
        columns.setdefault(g.degree, []).append(col)
    rank_d = {d: gf2_rank(cols) for d, cols in columns.items()}
    per_degree = {
        d: n - rank_d.get(d, 0) - rank_d.get(d + 1, 0) for d, n in sorted(counts.items())
    }
    return sum(per_degree.values()), per_degree


def perturb_actions(c: FilteredComplex, delta: float, seed: int) -> FilteredComplex:
    """Move every action by a seeded offset in ``[-delta, delta]``.

    Offsets are truncated towards zero to multiples of ``OFFSET_QUANTUM``.
    Raises :class:`PerturbationRejected` if the result is no longer a valid
    filtered complex (some boundary would stop lowering the action).
    """
    require_valid_complex(c)
    if delta < 0:
        raise ValueError("delta must be non-negative")
    rng = np.random.default_rng(seed)
    raw = rng.uniform(-delta, delta, size=len(c.generators)) if delta > 0 else np.zeros(len(c))
    gens = []
    for g, r in zip(c.generators, raw):
        offset = math.trunc(float(r) / OFFSET_QUANTUM) * OFFSET_QUANTUM
        action = g.action + offset
        while abs(action - g.action) > delta:
            action = math.nextafter(action, g.action)
        gens.append(Generator(g.id, g.degree, action))
    out = FilteredComplex(gens, c.boundary)
    problem = validate_complex(out)
    if problem is not None:
        raise PerturbationRejected(f"delta={delta!r} seed={seed}: {problem}")
    return out


# ---------------------------------------------------------------------------
# file format


def parse_complex(text: str) -> FilteredComplex:
    """Read the sectioned text format, or the equivalent JSON document."""
    if text.lstrip().startswith("{"):
        return _parse_complex_json(text)
    section = None
    gens = []
    boundary: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("generators:", "boundary:"):
            section = line[:-1]
            continue
        if section == "generators":
            fields = line.split()
            if len(fields) != 3:
                raise FormatError(f"expected '<id> <degree> <action>', got {line!r}", lineno)
            try:
                gens.append(Generator(fields[0], int(fields[1]), float(fields[2])))
            except ValueError:
                raise FormatError(f"bad number in {line!r}", lineno) from None
        elif section == "boundary":
            head, sep, tail = line.partition(":")
            if not sep or not head.strip():
                raise FormatError(f"expected '<id> : <id> <id> ...', got {line!r}", lineno)
            key = head.strip()
            if key in boundary:
                raise FormatError(f"boundary of {key!r} given twice", lineno)
            targets = tail.split()
            if len(set(targets)) != len(targets):
                raise FormatError(f"repeated id in boundary of {key!r}", lineno)
            boundary[key] = targets
        else:
            raise FormatError("content before a 'generators:' or 'boundary:' header", lineno)
    return FilteredComplex(gens, boundary)


def _parse_complex_json(text: str) -> FilteredComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno) from None
    gens = []
    try:
        for item in doc.get("generators", []):
            if isinstance(item, Mapping):
                gens.append(Generator(str(item["id"]), int(item["degree"]), float(item["action"])))
            else:
                gid, deg, act = item
                gens.append(Generator(str(gid), int(deg), float(act)))
        boundary = {str(k): [str(t) for t in v] for k, v in doc.get("boundary", {}).items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise FormatError(f"malformed complex document: {exc}") from None
    return FilteredComplex(gens, boundary)


def format_complex(c: FilteredComplex) -> str:
    lines = ["generators:"]
    for g in c.generators:
        lines.append(f"{g.id} {g.degree} {format_number(g.action)}")
    lines.append("boundary:")
    for g in c.generators:
        targets = c.boundary_of(g.id)
        if targets:
            lines.append(f"{g.id} : " + " ".join(sorted(targets)))
    return "\n".join(lines) + "\n"

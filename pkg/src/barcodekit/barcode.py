"""Bars, barcodes, overall shifts and the count of semi-infinite bars.

A bar is the half-open interval ``(birth, death]`` or the ray ``(birth, inf)``.
A :class:`Barcode` is a finite multiset of bars; bars are kept sorted so that
two barcodes compare equal exactly when they are equal as multisets.

Endpoints are plain floats and every derived quantity is computed directly
from them, without tolerances.  Shift-invariance statements below are exact
whenever the endpoints and shifts are exactly representable sums (dyadic
grids, for instance); for arbitrary floats they hold up to rounding.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

INF = math.inf


class FormatError(ValueError):
    """Raised when a text file cannot be parsed; carries the line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InvalidBarcode(ValueError):
    """Raised by operations that require a valid barcode."""


class GradingMismatch(ValueError):
    """Raised when a graded barcode is compared with an ungraded one."""


@dataclass(frozen=True)
class Bar:
    birth: float
    death: float = INF
    degree: Optional[int] = None

    @property
    def is_infinite(self) -> bool:
        return self.death == INF

    @property
    def length(self) -> float:
        return self.death - self.birth

    def shifted(self, c: float) -> "Bar":
        return Bar(self.birth + c, self.death + c, self.degree)

    def __str__(self) -> str:
        right = "inf)" if self.is_infinite else f"{self.death!r}]"
        deg = "" if self.degree is None else f"_{self.degree}"
        return f"({self.birth!r}, {right}{deg}"


BarLike = Union[Bar, tuple]


def _bar_key(bar: Bar) -> tuple:
    return (bar.degree is None, bar.degree or 0, bar.birth, bar.death)


def _as_bar(item: BarLike) -> Bar:
    if isinstance(item, Bar):
        return item
    return Bar(*item)


@dataclass(frozen=True)
class Barcode:
    """Finite multiset of bars.

    Accepts ``Bar`` objects or ``(birth, death[, degree])`` tuples::

        >>> Barcode([(0, 1), (2, INF)]).sigma_inf
        1
    """

    bars: tuple = ()

    def __init__(self, bars: Iterable[BarLike] = ()):
        items = sorted((_as_bar(b) for b in bars), key=_bar_key)
        object.__setattr__(self, "bars", tuple(items))

    def __iter__(self) -> Iterator[Bar]:
        return iter(self.bars)

    def __len__(self) -> int:
        return len(self.bars)

    def __bool__(self) -> bool:
        return bool(self.bars)

    def __str__(self) -> str:
        return "{" + ", ".join(str(b) for b in self.bars) + "}"

    @property
    def sigma_inf(self) -> int:
        return sigma_inf(self)

    @property
    def is_graded(self) -> Optional[bool]:
        """True if every bar has a degree, False if none has, None when empty."""
        if not self.bars:
            return None
        flags = {b.degree is not None for b in self.bars}
        if len(flags) > 1:
            raise InvalidBarcode("barcode mixes graded and ungraded bars")
        return flags.pop()

    @property
    def degrees(self) -> list:
        return sorted({b.degree for b in self.bars}, key=lambda d: (d is None, d or 0))

    def in_degree(self, degree: Optional[int]) -> "Barcode":
        return Barcode(b for b in self.bars if b.degree == degree)

    def counter(self) -> Counter:
        return Counter(self.bars)

    def endpoints(self) -> list:
        """Finite endpoints (all births, finite deaths) with multiplicity."""
        out = []
        for b in self.bars:
            out.append(b.birth)
            if not b.is_infinite:
                out.append(b.death)
        return out


@dataclass(frozen=True)
class Violation:
    """First broken invariant found by a validator."""

    index: int
    message: str
    item: object = None

    def __str__(self) -> str:
        return f"item {self.index} ({self.item}): {self.message}"


def validate(barcode: Barcode) -> Optional[Violation]:
    """Return ``None`` for a valid barcode, else the first offending bar."""
    graded = None
    for i, bar in enumerate(barcode.bars):
        if not isinstance(bar.birth, (int, float)) or not math.isfinite(bar.birth):
            return Violation(i, "birth is not finite", bar)
        if math.isnan(bar.death) or bar.death == -INF:
            return Violation(i, "death is not a real number or +inf", bar)
        if bar.birth == bar.death:
            return Violation(i, "empty interval", bar)
        if bar.birth > bar.death:
            return Violation(i, "birth >= death", bar)
        if bar.degree is not None and not isinstance(bar.degree, int):
            return Violation(i, "degree is not an integer", bar)
        has_degree = bar.degree is not None
        if graded is None:
            graded = has_degree
        elif graded != has_degree:
            return Violation(i, "mixed graded and ungraded bars", bar)
    return None


def require_valid(barcode: Barcode) -> Barcode:
    problem = validate(barcode)
    if problem is not None:
        raise InvalidBarcode(str(problem))
    return barcode


def grading_of(*barcodes: Barcode) -> Optional[bool]:
    """Common grading of several barcodes; empty barcodes fit either kind."""
    kinds = {b.is_graded for b in barcodes} - {None}
    if len(kinds) > 1:
        raise GradingMismatch("cannot compare a graded barcode with an ungraded one")
    return kinds.pop() if kinds else None


def shift(barcode: Barcode, c: float) -> Barcode:
    """The barcode ``B[c]``: every endpoint moved by ``c``."""
    return Barcode(b.shifted(c) for b in barcode.bars)


def sigma_inf(barcode: Barcode) -> int:
    """Number of semi-infinite bars, counted with multiplicity."""
    return sum(1 for b in barcode.bars if b.is_infinite)


def sigma_inf_by_degree(barcode: Barcode) -> dict:
    counts: dict = {}
    for b in barcode.bars:
        counts.setdefault(b.degree, 0)
        if b.is_infinite:
            counts[b.degree] += 1
    return counts


def canonical_form(barcode: Barcode) -> Barcode:
    """Representative of the shift class of ``barcode``.

    Semi-infinite births anchor first: if there are any, the smallest of them
    is moved to 0; otherwise the smallest birth overall is.
    """
    if not barcode.bars:
        return barcode
    infinite = [b.birth for b in barcode.bars if b.is_infinite]
    anchor = min(infinite) if infinite else min(b.birth for b in barcode.bars)
    return Barcode(Bar(b.birth - anchor, b.death - anchor, b.degree) for b in barcode.bars)


@dataclass(frozen=True)
class ShiftClass:
    """A barcode up to overall shift, stored through its canonical form."""

    representative: Barcode

    def __init__(self, barcode: Barcode):
        object.__setattr__(self, "representative", canonical_form(barcode))

    @property
    def sigma_inf(self) -> int:
        return sigma_inf(self.representative)

    def __str__(self) -> str:
        return f"[{self.representative}]"


# ---------------------------------------------------------------------------
# text format: one bar per line, "<degree|-> <birth> <death|inf>"


def format_number(x: float) -> str:
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return repr(float(x))


def parse_number(token: str) -> float:
    if token in ("inf", "+inf"):
        return INF
    return float(token)


def format_barcode(barcode: Barcode) -> str:
    lines = []
    for b in barcode.bars:
        deg = "-" if b.degree is None else str(b.degree)
        lines.append(f"{deg} {format_number(b.birth)} {format_number(b.death)}")
    return "".join(line + "\n" for line in lines)


def parse_barcode(text: str, first_line: int = 1) -> Barcode:
    bars = []
    for lineno, raw in enumerate(text.splitlines(), start=first_line):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3:
            raise FormatError(f"expected '<degree|-> <birth> <death|inf>', got {line!r}", lineno)
        deg_tok, birth_tok, death_tok = fields
        try:
            degree = None if deg_tok == "-" else int(deg_tok)
            bar = Bar(float(birth_tok), parse_number(death_tok), degree)
        except ValueError:
            raise FormatError(f"bad number in {line!r}", lineno) from None
        problem = validate(Barcode([bar]))
        if problem is not None:
            raise FormatError(f"{problem.message}: {line!r}", lineno)
        bars.append(bar)
    barcode = Barcode(bars)
    problem = validate(barcode)
    if problem is not None:
        raise FormatError(problem.message)
    return barcode

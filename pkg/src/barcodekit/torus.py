"""Curves on the flat torus as a small, checkable source of filtered complexes.

This is a homological toy, not symplectic geometry: torus curves are not
exact Lagrangians and the real dimension is 2.  It exists to produce complexes
and barcode paths whose semi-infinite counts are known in closed form.

A primitive class ``(p, q)`` is represented by a straight closed line of
direction ``(p, q)``.  Two such lines in distinct directions meet in exactly
``|p s - q r|`` points, so the complex built from them has that many
generators, zero differential and only semi-infinite bars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .persistence import FilteredComplex, Generator


@dataclass(frozen=True)
class CurveClass:
    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) == (0, 0):
            raise ValueError("(0, 0) is not a curve class")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p}, {self.q}) is not primitive")

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __neg__(self) -> "CurveClass":
        return CurveClass(-self.p, -self.q)


def parse_class(token: str) -> CurveClass:
    p, sep, q = token.partition("/")
    if not sep:
        raise ValueError(f"expected p/q, got {token!r}")
    return CurveClass(int(p), int(q))


def algebraic_intersection(u: CurveClass, v: CurveClass) -> int:
    """Signed intersection form ``p s - q r`` for ``u = (p, q)``, ``v = (r, s)``."""
    return u.p * v.q - u.q * v.p


def intersection_number(u: CurveClass, v: CurveClass) -> int:
    return abs(algebraic_intersection(u, v))


def twist_action(t: CurveClass, v: CurveClass, k: int) -> CurveClass:
    """Image of ``v`` under the ``k``-th power of the Dehn twist about ``t``.

    On homology this is ``v + k <v, t> t``.
    """
    m = k * algebraic_intersection(v, t)
    p, q = v.p + m * t.p, v.q + m * t.q
    g = math.gcd(p, q)  # always 1 for primitive input; kept for safety
    return CurveClass(p // g, q // g)


def intersection_parameters(u: CurveClass, v: CurveClass) -> list:
    """Positions along ``u`` (in ``[0, 1)``) of the points where it meets ``v``.

    ``u`` is the closed line through the origin; ``v`` is translated so that
    the crossings sit at ``(2j + 1) / (2N)``, ``N = |<u, v>|``, which keeps
    them away from the base point of ``u``.
    """
    n = intersection_number(u, v)
    if n == 0:
        raise ValueError(f"{u} and {v} are parallel; no transverse representatives")
    return [Fraction(2 * j + 1, 2 * n) for j in range(n)]


def v_offset(v: CurveClass) -> tuple:
    """Translation of ``v``'s line used by :func:`intersection_parameters`.

    Chosen with ``r y - s x = 1/2`` for ``v = (r, s)`` and offset ``(x, y)``.
    """
    # Bezout: r*b - s*a = 1
    g, x0, y0 = _ext_gcd(v.p, v.q)  # x0*r + y0*s = g = 1
    a, b = -y0, x0
    return Fraction(a, 2), Fraction(b, 2)


def _ext_gcd(a: int, b: int) -> tuple:
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def build_complex(u: CurveClass, v: CurveClass) -> FilteredComplex:
    """Degree-0 complex with one generator per intersection point, zero differential."""
    params = intersection_parameters(u, v)
    return FilteredComplex(Generator(f"x{j}", 0, float(t)) for j, t in enumerate(params))


def apply_word(word, a: CurveClass, b: CurveClass, v: CurveClass) -> CurveClass:
    """Apply a twist word (``A`` twists about ``a``, ``B`` about ``b``) to ``v``.

    Syllables act right to left.
    """
    for letter, k in reversed(word.syllables):
        v = twist_action(a if letter == "A" else b, v, k)
    return v

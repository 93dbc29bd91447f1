import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import traced_intersections

from barcodekit.barcode import INF, Bar, Barcode, sigma_inf
from barcodekit.persistence import barcode_of_complex, validate_complex
from barcodekit.shift_space import BarcodePath, check_path
from barcodekit.torus import (
    CurveClass,
    algebraic_intersection,
    apply_word,
    build_complex,
    intersection_number,
    intersection_parameters,
    parse_class,
    twist_action,
    v_offset,
)
from barcodekit.twist_word import parse_and_reduce

E1, E2 = CurveClass(1, 0), CurveClass(0, 1)
SMALL = [CurveClass(p, q) for p in range(-5, 6) for q in range(-5, 6)
         if (p, q) != (0, 0) and math.gcd(p, q) == 1]

classes = st.tuples(st.integers(-6, 6), st.integers(-6, 6)).filter(
    lambda pq: pq != (0, 0) and math.gcd(*pq) == 1).map(lambda pq: CurveClass(*pq))


class TestClasses:
    def test_rejects_non_primitive(self):
        with pytest.raises(ValueError):
            CurveClass(2, 4)
        with pytest.raises(ValueError):
            CurveClass(0, 0)

    def test_parse(self):
        assert parse_class("-3/2") == CurveClass(-3, 2)
        with pytest.raises(ValueError):
            parse_class("3")
        with pytest.raises(ValueError):
            parse_class("2/2")


class TestIntersection:
    def test_basis(self):
        assert intersection_number(E1, E2) == 1

    @given(classes)
    def test_self(self, u):
        assert intersection_number(u, u) == 0

    @given(classes, classes)
    def test_form_antisymmetric(self, u, v):
        assert algebraic_intersection(u, v) == -algebraic_intersection(v, u)

    @pytest.mark.parametrize("k", [k for k in range(-10, 11) if k])
    def test_twist_growth(self, k):
        assert intersection_number(E2, twist_action(E1, E2, k)) == abs(k)


class TestTwist:
    def test_example(self):
        assert twist_action(E1, E2, 1) == CurveClass(-1, 1)

    @given(classes, st.integers(-5, 5))
    def test_fixes_own_class(self, t, k):
        assert twist_action(t, t, k) == t

    @given(classes, classes, st.integers(-5, 5), st.integers(-5, 5))
    def test_group_action(self, t, v, k, m):
        assert twist_action(t, twist_action(t, v, m), k) == twist_action(t, v, k + m)
        assert twist_action(t, twist_action(t, v, k), -k) == v

    @given(classes, classes, st.integers(-5, 5))
    def test_preserves_intersection_with_twist_curve(self, t, v, k):
        assert intersection_number(t, twist_action(t, v, k)) == intersection_number(t, v)

    def test_apply_word_right_to_left(self):
        word = parse_and_reduce("A^1 B^1")
        expected = twist_action(E1, twist_action(E2, E2, 1), 1)
        assert apply_word(word, E1, E2, E2) == expected
        word = parse_and_reduce("B^1 A^1")
        assert apply_word(word, E1, E2, E2) == twist_action(E2, twist_action(E1, E2, 1), 1)


class TestComplex:
    def test_single_point(self):
        b = barcode_of_complex(build_complex(E1, E2))
        assert b == Barcode([Bar(0.5, INF, 0)])

    def test_parallel_rejected(self):
        with pytest.raises(ValueError):
            build_complex(E1, -E1)

    def test_sigma_equals_intersection_number(self):
        for u, v in itertools.product(SMALL, SMALL):
            n = intersection_number(u, v)
            if n == 0:
                continue
            c = build_complex(u, v)
            assert validate_complex(c) is None
            assert sigma_inf(barcode_of_complex(c)) == n

    def test_three_twists(self):
        b = barcode_of_complex(build_complex(E2, twist_action(E1, E2, 3)))
        assert sigma_inf(b) == 3 and all(bar.is_infinite for bar in b)

    @pytest.mark.parametrize("u,v", [(E1, E2), (E2, CurveClass(-3, 1)), (CurveClass(2, 3), CurveClass(-1, 4)),
                                     (CurveClass(5, -2), CurveClass(3, 1))])
    def test_parameters_match_tracing(self, u, v):
        assert traced_intersections(u, v, v_offset(v)) == intersection_parameters(u, v)

    def test_twisted_path_constant_sigma(self):
        # barcodes for the same pair, sampled along a shift path
        b = barcode_of_complex(build_complex(E2, twist_action(E1, E2, 4)))
        steps = [Barcode((bar.birth + t / 10, INF, 0) for bar in b) for t in range(5)]
        assert check_path(BarcodePath(steps, 0.1)) is None

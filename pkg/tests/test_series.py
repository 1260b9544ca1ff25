"""Exact polynomial / rational generating-function arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pinclasses.errors import (
    DivisionByZero,
    MalformedSyntax,
    NonzeroConstantTerm,
    PoleAtZero,
)
from pinclasses.series import (
    Poly,
    RatGF,
    coeffs,
    from_eventually_constant,
    from_eventually_periodic,
    seq,
)

small_polys = st.builds(
    Poly,
    st.lists(st.integers(min_value=-9, max_value=9), min_size=0, max_size=6),
)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())
unit_constant_polys = nonzero_polys.filter(lambda p: p[0] != 0)


class TestPoly:
    def test_trailing_zeros_normalized(self):
        assert Poly([1, 2, 0, 0]) == Poly([1, 2])
        assert Poly([0, 0]) == Poly.zero()
        assert Poly.zero().degree == -1

    def test_parse_round_trip(self):
        for text in ["1 - 2z - z^3", "z", "1", "3z + z^2 - 7z^5", "-z^2 + 4"]:
            p = Poly.parse(text)
            assert Poly.parse(str(p)) == p

    def test_parse_known(self):
        assert Poly.parse("1-2z-z^3") == Poly([1, -2, 0, -1])
        assert Poly.parse("z") == Poly([0, 1])
        assert Poly.parse("2z^2") == Poly([0, 0, 2])

    def test_parse_rejects_garbage(self):
        with pytest.raises(MalformedSyntax):
            Poly.parse("1 + q")
        with pytest.raises(MalformedSyntax):
            Poly.parse("")

    def test_mul_known(self):
        assert Poly([1, 1]) * Poly([1, -1]) == Poly([1, 0, -1])
        assert Poly([1, 2]) * 3 == Poly([3, 6])

    def test_divmod_exact(self):
        a = Poly([1, 0, -1])
        q, r = a.divmod(Poly([1, 1]))
        assert q == Poly([1, -1]) and r.is_zero()

    def test_divmod_by_zero(self):
        with pytest.raises(DivisionByZero):
            Poly([1]).divmod(Poly.zero())

    def test_eval_horner(self):
        p = Poly([1, -2, 0, -1])
        x = Fraction(1, 2)
        assert p(x) == 1 - 2 * x - x**3

    def test_derivative(self):
        assert Poly([5, 3, 0, 2]).derivative() == Poly([3, 0, 6])

    def test_gcd_monic(self):
        a = Poly([1, 1]) * Poly([1, 0, 1])
        b = Poly([1, 1]) * Poly([2, 1])
        g = a.gcd(b)
        assert g == Poly([1, 1])

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            Poly([0.5])

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=80)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + Poly.zero() == a
        assert a * Poly.one() == a

    @given(small_polys, nonzero_polys)
    @settings(max_examples=80)
    def test_divmod_reconstructs(self, a, b):
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree or r.is_zero()


class TestRatGF:
    def test_cancellation(self):
        f = RatGF(Poly([1, 0, -1]), Poly([1, 1]))
        assert f == RatGF(Poly([1, -1]))
        assert f.is_polynomial

    def test_den_normalized_to_unit_constant(self):
        f = RatGF(Poly([2]), Poly([2, -2]))
        assert f.den[0] == 1

    def test_pole_at_zero_rejected(self):
        with pytest.raises(PoleAtZero):
            RatGF(Poly.one(), Poly([0, 1]))

    def test_zero_denominator_rejected(self):
        with pytest.raises(DivisionByZero):
            RatGF(Poly.one(), Poly.zero())

    def test_coeffs_linear_recurrence(self):
        f = RatGF(Poly([1, -1]), Poly([1, -2, 0, -1]))
        assert coeffs(f, 8) == [1, 1, 2, 5, 11, 24, 53, 117, 258]

    def test_str(self):
        f = RatGF(Poly([1, -1]), Poly([1, -2, 0, -1]))
        assert str(f) == "(1 - z)/(1 - 2z - z^3)"

    def test_json_round_trip(self):
        f = RatGF(Poly([1, -1]), Poly([1, -2, 0, -1]))
        assert RatGF.from_json(f.to_json()) == f

    @given(small_polys, unit_constant_polys, small_polys, unit_constant_polys)
    @settings(max_examples=60)
    def test_field_axioms(self, an, ad, bn, bd):
        a = RatGF(an, ad)
        b = RatGF(bn, bd)
        assert a + b == b + a
        assert a * b == b * a
        assert a - a == RatGF.zero()
        if b.num[0] != 0:  # 1/b is a power series only when b(0) != 0
            assert (a / b) * b == a

    @given(small_polys, unit_constant_polys)
    @settings(max_examples=60)
    def test_coefficients_match_evaluation_series(self, n, d):
        f = RatGF(n, d)
        got = f.coeffs(6)
        acc = RatGF(n, d)
        for k in range(7):
            assert f.coefficient(k) == got[k]


class TestSeriesBuilders:
    def test_eventually_constant_examples(self):
        assert from_eventually_constant([1], 2, 2) == RatGF(
            Poly([0, 1, 1]), Poly([1, -1])
        )
        assert from_eventually_constant([], 0, 1) == RatGF.zero()
        f = from_eventually_constant([3, 6], 6, 3)
        assert coeffs(f, 5) == [0, 3, 6, 6, 6, 6]
        f = from_eventually_constant([1, 1], 2, 3)
        assert f == RatGF(Poly([0, 1, 0, 1]), Poly([1, -1]))

    @given(
        st.lists(st.integers(min_value=0, max_value=9), min_size=0, max_size=5),
        st.integers(min_value=0, max_value=9),
    )
    @settings(max_examples=60)
    def test_eventually_constant_round_trip(self, initial, constant):
        start = len(initial) + 1
        f = from_eventually_constant(initial, constant, start)
        got = coeffs(f, start + 4)
        assert got[0] == 0
        assert got[1:start] == initial
        assert got[start:] == [constant] * 5

    @given(
        st.lists(st.integers(min_value=0, max_value=9), min_size=0, max_size=4),
        st.lists(st.integers(min_value=0, max_value=9), min_size=1, max_size=3),
    )
    @settings(max_examples=60)
    def test_eventually_periodic_round_trip(self, initial, block):
        start = len(initial) + 1
        f = from_eventually_periodic(initial, block, start)
        got = coeffs(f, start + 2 * len(block) + 3)
        assert got[1:start] == initial
        for i, value in enumerate(got[start:]):
            assert value == block[i % len(block)]

    def test_seq_identity(self):
        g = RatGF(Poly([0, 1, 0, 1]), Poly([1, -1]))  # O-class g
        f = seq(g)
        assert f == RatGF(Poly([1, -1]), Poly([1, -2, 0, -1]))

    def test_seq_rejects_nonzero_constant(self):
        with pytest.raises(NonzeroConstantTerm):
            seq(RatGF(Poly([1, 1])))

    @given(st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=5))
    @settings(max_examples=60)
    def test_seq_satisfies_f_equals_one_plus_gf(self, cs):
        g = RatGF(Poly([0] + cs))
        f = seq(g)
        assert f == RatGF.one() + g * f

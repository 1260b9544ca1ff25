"""Pin words and eventually-periodic pin specs."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pinclasses.errors import (
    AlignmentViolation,
    EmptyInput,
    IndexOutOfRange,
    MalformedSyntax,
    NonAlternatingCycle,
)
from pinclasses.pinword import (
    PinSpec,
    PinWord,
    enumerate_pin_factors,
    is_recurrent,
    left_truncate,
    parse_pin_spec,
    parse_pin_word,
    pin_factor,
)
from strategies import pin_specs, pin_words


class TestPinWord:
    def test_parse_and_str(self):
        w = parse_pin_word("2lurdld")
        assert w.numeral == 2
        assert w.letters == "lurdld"
        assert str(w) == "2lurdld"
        assert w.length == 7

    def test_whitespace_and_case(self):
        assert parse_pin_word(" 1 RU ") == PinWord(1, "ru")

    def test_symbol_indexing(self):
        w = parse_pin_word("2lurdld")
        assert w.symbol(1) == "2"
        assert w.symbol(2) == "l"
        assert w.symbol(7) == "d"
        with pytest.raises(IndexOutOfRange):
            w.symbol(8)
        with pytest.raises(IndexOutOfRange):
            w.symbol(0)

    def test_alternation_enforced(self):
        with pytest.raises(AlignmentViolation):
            PinWord(1, "uu")
        with pytest.raises(AlignmentViolation):
            PinWord(1, "ud")
        with pytest.raises(AlignmentViolation):
            PinWord(3, "lrl"[0] + "r")

    def test_bad_numeral(self):
        with pytest.raises(MalformedSyntax):
            PinWord(5, "")
        with pytest.raises(MalformedSyntax):
            parse_pin_word("0u")

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            parse_pin_word(" ")

    def test_counts(self):
        def count(n):
            if n == 1:
                return 4
            total = 0
            stack = [(q, "") for q in "1234"]
            while stack:
                num, letters = stack.pop()
                if 1 + len(letters) == n:
                    total += 1
                    continue
                last = letters[-1] if letters else None
                options = (
                    "udlr" if last is None else "ud" if last in "lr" else "lr"
                )
                for c in options:
                    stack.append((num, letters + c))
            return total

        assert count(1) == 4
        for n in range(2, 7):
            assert count(n) == 2 ** (n + 2)

    @given(pin_words())
    @settings(max_examples=60)
    def test_round_trip(self, w):
        assert parse_pin_word(str(w)) == w


class TestPinSpec:
    def test_parse(self):
        s = parse_pin_spec("2ruldlurdr(ul)*")
        assert s.prefix_length == 10
        assert s.cycle_length == 2
        assert str(s) == "2ruldlurdr(ul)*"

    def test_cycle_alternation_checked(self):
        with pytest.raises(NonAlternatingCycle):
            parse_pin_spec("1(du)*")
        with pytest.raises(NonAlternatingCycle):
            parse_pin_spec("1(udu)*")  # wrap-around u..u clash
        with pytest.raises(NonAlternatingCycle):
            parse_pin_spec("1u(ul)*")  # junction clash

    def test_symbols_and_initial_word(self):
        s = parse_pin_spec("1(ru)*")
        assert [s.symbol(t) for t in range(1, 6)] == ["1", "r", "u", "r", "u"]
        assert str(s.initial_word(5)) == "1ruru"

    def test_canonical_equality(self):
        assert parse_pin_spec("1r(ur)*") == parse_pin_spec("1(ru)*")
        assert parse_pin_spec("1(ruru)*") == parse_pin_spec("1(ru)*")
        assert parse_pin_spec("1(ru)*") != parse_pin_spec("1(ur)*")
        assert hash(parse_pin_spec("1r(ur)*")) == hash(parse_pin_spec("1(ru)*"))

    @given(pin_specs())
    @settings(max_examples=60)
    def test_initial_word_is_consistent_with_symbols(self, s):
        w = s.initial_word(9)
        assert str(w) == "".join(s.symbol(t) for t in range(1, 10))


class TestFactors:
    def test_worked_factors(self):
        s = parse_pin_spec("2ruldlurdr(ul)*")
        assert str(pin_factor(s, 5, 9)) == "3lurd"
        assert str(pin_factor(s, 9, 11)) == "4ru"
        assert str(pin_factor(s, 1, 4)) == "2rul"

    def test_factor_index_errors(self):
        s = parse_pin_spec("1(ru)*")
        with pytest.raises(IndexOutOfRange):
            pin_factor(s, 0, 3)
        with pytest.raises(IndexOutOfRange):
            pin_factor(s, 4, 3)

    def test_left_truncate_examples(self):
        s = parse_pin_spec("3rurdlurur(dl)*")
        assert str(left_truncate(s, 4)) == "1dlurur(dl)*"
        assert str(left_truncate(s, 7)) == "2rur(dl)*"
        assert left_truncate(s, 1) is s

    def test_factor_sets_1ul(self):
        s = parse_pin_spec("1(ul)*")
        allf = {str(w) for w in enumerate_pin_factors(s, 2, "all")}
        rec = {str(w) for w in enumerate_pin_factors(s, 2, "recurrent")}
        assert allf == {"1u", "1l", "2u", "2l"}
        assert rec == {"2u", "2l"}

    def test_mode_validation(self):
        with pytest.raises(ValueError):
            enumerate_pin_factors(parse_pin_spec("1(ru)*"), 2, "sometimes")

    def test_recurrence(self):
        assert is_recurrent("2(ul)*") is True
        assert is_recurrent("1(ul)*") is False
        assert is_recurrent("1(ru)*") is True
        assert is_recurrent("1(ldru)*") is True

    @given(pin_specs(), st.integers(min_value=1, max_value=5))
    @settings(max_examples=40, deadline=None)
    def test_factors_match_brute_windows(self, s, n):
        """Dual route: factor sets from the sliding enumerator equal the set
        of pin_factor(s, i, i+n-1) over a long explicit range of starts."""
        horizon = s.prefix_length + 3 * s.cycle_length + 4
        brute = {pin_factor(s, i, i + n - 1) for i in range(1, horizon + 1)}
        assert enumerate_pin_factors(s, n, "all") == brute

    @given(pin_specs(), st.integers(min_value=1, max_value=4))
    @settings(max_examples=40, deadline=None)
    def test_recurrent_factors_are_tail_factors(self, s, n):
        """Recurrent factors = factors of every left truncation's tail."""
        rec = enumerate_pin_factors(s, n, "recurrent")
        deep = left_truncate(s, s.prefix_length + 2)
        assert enumerate_pin_factors(deep, n, "all") == rec

    @given(pin_specs())
    @settings(max_examples=30, deadline=None)
    def test_truncation_preserves_cycle(self, s):
        t = left_truncate(s, s.prefix_length + 2)
        assert sorted(t.cycle) == sorted(s.cycle)
        assert t.prefix_length == 1

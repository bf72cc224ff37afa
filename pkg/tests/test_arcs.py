"""Arc labeling and the two structural permutations it induces."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fillperm import (
    ALPHA,
    BETA,
    ArcLabel,
    LabelScheme,
    Permutation,
    curve_advance,
    index_of,
    label_of,
    parse_label,
    reversal_pairing,
)

ns = st.integers(1, 8)


class TestLabels:
    @pytest.mark.parametrize(
        "j, text",
        [(1, "a1"), (2, "b1"), (9, "a5"), (10, "b5"), (11, "a1'"), (19, "a5'"), (20, "b5'")],
    )
    def test_symbol_to_text_at_n5(self, j, text):
        assert str(label_of(j, 5)) == text

    def test_parse_label_round_trip(self):
        for token in ("a1", "b12", "a5'", "b3'"):
            assert str(parse_label(token)) == token

    @pytest.mark.parametrize("bad", ["", "c1", "a0", "a", "a1''", "a 1"])
    def test_parse_label_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_label(bad)

    def test_flipped_toggles_orientation(self):
        lab = ArcLabel(ALPHA, 3)
        assert lab.flipped() == ArcLabel(ALPHA, 3, inverted=True)
        assert lab.flipped().flipped() == lab

    def test_symbol_range_checked(self):
        with pytest.raises(ValueError):
            label_of(0, 2)
        with pytest.raises(ValueError):
            label_of(9, 2)
        with pytest.raises(ValueError):
            index_of(ArcLabel(BETA, 3), 2)

    @given(ns)
    def test_scheme_is_a_bijection(self, n):
        scheme = LabelScheme(n)
        labels = scheme.labels()
        assert len(set(labels)) == 4 * n
        assert [scheme.index_of(lab) for lab in labels] == list(range(1, 4 * n + 1))


class TestReversalPairing:
    def test_smallest_cases(self):
        assert str(reversal_pairing(1)) == "(1,3)(2,4)"
        assert str(reversal_pairing(2)) == "(1,5)(2,6)(3,7)(4,8)"

    @given(ns)
    def test_involution_without_fixed_points(self, n):
        q = reversal_pairing(n)
        assert q.compose(q) == Permutation.identity(4 * n)
        assert all(q(j) != j for j in range(1, 4 * n + 1))

    @given(ns)
    def test_flips_exactly_the_orientation(self, n):
        q = reversal_pairing(n)
        for j in range(1, 4 * n + 1):
            assert label_of(q(j), n) == label_of(j, n).flipped()


class TestCurveAdvance:
    def test_smallest_cases(self):
        assert curve_advance(1) == Permutation.identity(4)
        assert str(curve_advance(2)) == "(1,3)(2,4)(5,7)(6,8)"

    @given(ns)
    def test_order_divides_n(self, n):
        t = curve_advance(n)
        power = Permutation.identity(4 * n)
        for _ in range(n):
            power = t.compose(power)
        assert power == Permutation.identity(4 * n)

    @given(ns)
    def test_preserves_curve_and_orientation(self, n):
        t = curve_advance(n)
        for j in range(1, 4 * n + 1):
            before, after = label_of(j, n), label_of(t(j), n)
            assert after.curve == before.curve
            assert after.inverted == before.inverted
            step = 1 if not before.inverted else -1
            assert after.index == (before.index - 1 + step) % n + 1

    @given(ns)
    def test_conjugation_by_reversal_inverts(self, n):
        q, t = reversal_pairing(n), curve_advance(n)
        assert q.compose(t).compose(q) == t.inverse()

"""
Given roots of e8 in the twisted basis
When their electric and color charges are decoded
Then the fixture rows and the blue up quark bit-swap pattern are reproduced
"""
from fractions import Fraction

import pytest

from hyperfoam.exceptions import DecodeError
from network.network import active_leaves, state_hash
from observables.frame import supernode_frame
from particles.charges import (
    Root8,
    anti_colors,
    apply_bitswap_pattern,
    charge_conjugate,
    classify,
    color_charge,
    electric_charge,
    fixture_bitswap_pattern,
    format_charge,
)
from particles.serializers import BitswapPatternSerializer, FixtureRowSerializer

UP_BLUE = (-2, 0, -2, 0, 0, -2, 0, 0)


class TestFixtureRows:
    def test_seven_rows(self, fixture_roots):
        assert len(fixture_roots) == 7
        assert [row.label for row in fixture_roots].count("Up") == 3

    def test_every_row_decodes_to_its_expected_charge(self, fixture_roots):
        for row in fixture_roots:
            assert electric_charge(row.root) == row.expected_charge, row.label
            assert color_charge(row.root) == row.expected_colors, row.label

    def test_positron_row_carries_a_note(self, fixture_roots):
        positron = next(row for row in fixture_roots if row.label == "Positron")
        assert positron.expected_charge == 1
        assert positron.note


class TestElectricCharge:
    def test_up_quark(self):
        assert electric_charge(UP_BLUE) == Fraction(2, 3)

    def test_even_branch(self):
        assert electric_charge((0, 2, 2, 0, 0, 0, 0, 0)) == 1
        assert electric_charge((0, 0, 0, 0, 4, 0, 0, 0)) == 1

    def test_odd_branch(self):
        assert electric_charge((0, 1, 1, 0, 0, 0, 0, 0)) == Fraction(-1, 4)

    def test_undefined_parity(self):
        with pytest.raises(DecodeError, match="odd"):
            electric_charge((0, 1, 0, 0, 0, 0, 0, 0))

    @pytest.mark.parametrize("root", [(1, 2, 3), (0,) * 9, ("a",) * 8])
    def test_malformed_roots(self, root):
        with pytest.raises(DecodeError):
            Root8.of(root)


class TestColors:
    def test_negative_entries_are_colors(self):
        assert color_charge(UP_BLUE) == ("b",)
        assert color_charge((0, 0, 0, 0, 0, -1, -1, 1)) == ("b", "g", "anti-r")

    def test_anti_colors(self):
        assert anti_colors(("b", "anti-r")) == ("anti-b", "r")

    @pytest.mark.parametrize("index", range(7))
    def test_conjugate_flips_charge_and_colors(self, fixture_roots, index):
        row = fixture_roots[index]
        conjugate = charge_conjugate(row.root)
        assert electric_charge(conjugate) == -row.expected_charge
        assert color_charge(conjugate) == anti_colors(row.expected_colors)
        assert charge_conjugate(conjugate) == row.root


class TestClassify:
    def test_known_root(self):
        record = classify(UP_BLUE)
        assert record.label == "Up"
        assert record.summary() == "charge=2/3 colors=b label=Up"

    def test_unknown_root_gets_a_descriptive_label(self):
        record = classify((0, 2, 2, 0, 0, 0, 0, 0))
        assert record.label == "charge=1, colors=none"
        assert record.note == ""

    @pytest.mark.parametrize("value, text", [(Fraction(2, 3), "2/3"), (Fraction(-1), "-1"), (Fraction(0), "0")])
    def test_format_charge(self, value, text):
        assert format_charge(value) == text


class TestSerializers:
    def test_row_rejects_odd_denominators(self):
        serializer = FixtureRowSerializer(
            data={"root": list(UP_BLUE), "label": "x", "expected_charge": "1/5", "expected_colors": []}
        )
        assert not serializer.is_valid()
        assert "expected_charge" in serializer.errors

    def test_row_rejects_short_roots(self):
        serializer = FixtureRowSerializer(
            data={"root": [0, 0], "label": "x", "expected_charge": "1", "expected_colors": []}
        )
        assert not serializer.is_valid()
        assert "root" in serializer.errors

    def test_pattern_rejects_triangle_leaves_and_duplicates(self):
        base = {"schema_version": 1, "label": "Up", "root": list(UP_BLUE)}
        odd = BitswapPatternSerializer(data={**base, "swaps": [{"slot": "central", "leaf": 2}]})
        assert not odd.is_valid()
        twice = BitswapPatternSerializer(
            data={**base, "swaps": [{"slot": "central", "leaf": 1}, {"slot": "gluonic", "leaf": 1}]}
        )
        assert not twice.is_valid()
        assert "swaps" in twice.errors


class TestBlueUpQuarkPattern:
    def test_declared_swaps(self):
        pattern = fixture_bitswap_pattern()
        assert pattern.root == Root8(*UP_BLUE)
        assert len(pattern.leaves()) == 21
        assert pattern.leaves("central") == [1, 17, 33]
        assert len(pattern.leaves("higgsonic")) == 9
        assert len(pattern.leaves("gluonic")) == 9

    def test_applied_pattern_leaves_three_pairs_active(self, tiny_network):
        events = apply_bitswap_pattern(tiny_network, 0, fixture_bitswap_pattern())
        assert len(events) == 84
        assert active_leaves(tiny_network, 0) == [9, 10, 25, 26, 41, 42]

    def test_applied_pattern_frame_is_anisotropic(self, tiny_network):
        apply_bitswap_pattern(tiny_network, 0, fixture_bitswap_pattern())
        gram = supernode_frame(tiny_network, 0)
        assert gram.matrix[0][0] == 14
        assert gram.matrix[1][1] == 10
        assert gram.trace == 36
        assert gram.anisotropy == 7

    def test_undo_restores(self, tiny_network):
        pristine = state_hash(tiny_network)
        pattern = fixture_bitswap_pattern()
        apply_bitswap_pattern(tiny_network, 0, pattern)
        apply_bitswap_pattern(tiny_network, 0, pattern, undo=True)
        assert state_hash(tiny_network) == pristine

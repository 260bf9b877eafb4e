"""
Tests for DSP instances: validation, bundle arithmetic, revenue and documents.
"""

import itertools
import json
from fractions import Fraction

import pytest

from src.constraints import InstanceConstraint
from src.dsp_instance import DSPInstance
from src.exceptions import BundleError, InstanceError, PartitionError, ProfileError, SchemaError
from src.generators.named_instances import gen_identity
from src.partition import Partition
from src.solution import StrategyProfile
from src.utils.instance_io import (instance_from_document, instance_to_document, load_instance,
                                   load_profile, parse_edge_list, profile_from_document,
                                   save_instance, save_profile)
from src.utils.rationals import decimal_string, parse_rational, rational_field

PAIRS = Partition(((0, 1), (2, 3)))


class TestValidation:
    def test_valid_instances_pass(self, ident4_instance, loc3_instance):
        assert ident4_instance.validate() is ident4_instance
        assert (ident4_instance.n, ident4_instance.k, ident4_instance.m) == (4, 4, 2)
        assert (loc3_instance.n, loc3_instance.k, loc3_instance.m) == (3, 3, 1)

    def test_dimension_mismatch_comes_first(self):
        instance = DSPInstance([-1, 1], [[1, 2, 3]], [Partition.trivial(2)])
        with pytest.raises(InstanceError, match="dimension mismatch: valuations row 0 has 3 entries"):
            instance.validate()

    @pytest.mark.parametrize("weights, valuations, message", [
        ([-1, 1, 1, 1], [[1, 0, 0, 0], [0, 1, 0, 0]], "negative weight"),
        ([1, 1, 1, 1], [[1, 0, 0, 0], [0, -1, 0, 0]], "negative valuation"),
        ([0, 0, 0, 0], [[1, 0, 0, 0], [0, 1, 0, 0]], "zero total weight"),
    ])
    def test_sign_and_mass_violations(self, weights, valuations, message):
        instance = DSPInstance(weights, valuations, [Partition.trivial(4)])
        assert not InstanceConstraint().is_feasible(instance)
        with pytest.raises(InstanceError, match=message):
            instance.validate()

    def test_mediator_partition_problems(self):
        overlapping = DSPInstance([1] * 4, [[1] * 4], [Partition(((0, 1), (1, 2, 3)))])
        with pytest.raises(InstanceError, match="mediator 0: overlapping parts"):
            overlapping.validate()
        gap = DSPInstance([1] * 4, [[1] * 4], [PAIRS, Partition(((0, 1), (3,)))])
        with pytest.raises(InstanceError, match="mediator 1: gap"):
            gap.validate()

    def test_floats_are_refused(self):
        with pytest.raises(InstanceError, match="floating point"):
            DSPInstance([0.5, 1], [[1, 1]], [Partition.trivial(2)])

    def test_zero_weight_items_are_allowed(self):
        instance = DSPInstance([0, 1], [[3, 1], [1, 2]], [Partition.singletons(2)]).validate()
        assert instance.mu(0) == 0
        assert instance.mu(1) == 1


class TestBundles:
    def test_bundle_bid(self, ident4_instance):
        assert ident4_instance.bundle_bid(0, range(4)) == Fraction(1, 4)
        assert ident4_instance.bundle_bid(0, [0, 1]) == Fraction(1, 2)
        assert ident4_instance.bundle_bid(0, [2, 3]) == 0

    def test_bundle_value_is_second_highest_bid(self, loc2_instance):
        assert loc2_instance.bundle_value([0, 1]) == 4
        assert loc2_instance.bundle_value([0]) == 0
        assert loc2_instance.mass([0, 1]) == 1

    def test_ties_count_with_multiplicity(self, ident4_instance):
        # bidders 0 and 1 both bid 1/2 on {0,1}
        assert ident4_instance.bundle_value([0, 1]) == Fraction(1, 2)

    def test_single_bidder_has_zero_value(self):
        instance = DSPInstance([1, 2], [[5, 7]], [Partition.trivial(2)]).validate()
        assert instance.bundle_value([0, 1]) == 0
        assert instance.revenue(Partition.singletons(2)) == 0

    def test_zero_mass_bundle(self):
        instance = DSPInstance([0, 1], [[3, 1], [1, 2]], [Partition.singletons(2)]).validate()
        with pytest.raises(BundleError, match="zero-mass bundle"):
            instance.bundle_bid(0, [0])
        assert instance.bundle_value([0]) == 0
        assert instance.contribution([0]) == 0

    @pytest.mark.parametrize("fixture", ["loc3_instance", "trim5_instance", "dspn1_instance"])
    def test_contribution_is_mass_times_value(self, request, fixture):
        instance = request.getfixturevalue(fixture)
        for size in range(1, instance.n + 1):
            for bundle in itertools.combinations(range(instance.n), size):
                assert instance.contribution(bundle) == instance.mass(bundle) * instance.bundle_value(bundle)


class TestRevenue:
    def test_identity_revenues(self, ident4_instance):
        assert ident4_instance.revenue(Partition.trivial(4)) == Fraction(1, 4)
        assert ident4_instance.revenue(PAIRS) == Fraction(1, 2)
        assert ident4_instance.revenue(Partition.singletons(4)) == 0

    def test_scaled_identity_revenues(self):
        instance = gen_identity(4, 100)
        assert instance.revenue(Partition.trivial(4)) == 25
        assert instance.revenue(PAIRS) == 50
        assert instance.revenue(Partition.singletons(4)) == 0

    def test_breakdown_sums_to_revenue(self, ident4_instance):
        breakdown = ident4_instance.revenue_breakdown(PAIRS)
        assert breakdown == [((0, 1), Fraction(1, 4)), ((2, 3), Fraction(1, 4))]
        assert sum(value for _, value in breakdown) == ident4_instance.revenue(PAIRS)

    def test_invalid_partition_is_rejected(self, ident4_instance):
        with pytest.raises(PartitionError, match="gap"):
            ident4_instance.revenue(Partition(((0, 1), (2,))))

    def test_profile_joint_revenue(self, ident4_instance):
        profile = StrategyProfile(ident4_instance.mediators)
        assert profile.joint() == Partition.singletons(4)
        assert profile.speaking() == [0, 1]
        assert StrategyProfile.silent(ident4_instance).speaking() == []


class TestDocuments:
    def test_document_round_trip(self, tmp_path, dspn1_instance):
        path = tmp_path / "dspn1.json"
        save_instance(dspn1_instance, str(path))
        loaded = load_instance(str(path))
        assert loaded.same_as(dspn1_instance)
        assert loaded.name == "DSP_1"
        assert DSPInstance.load(str(path)).same_as(dspn1_instance)

    def test_document_shape(self, loc2_instance):
        doc = instance_to_document(loc2_instance)
        assert doc['weights'] == ["1", "1"]
        assert doc['bidders'] == ["A", "B"]
        assert doc['mediators'] == [{'name': "mediator0", 'parts': [[0], [1]]}]
        assert loc2_instance.to_dict() == doc
        assert DSPInstance.from_dict(doc).same_as(loc2_instance)

    def test_rational_strings(self):
        doc = {'weights': ["1/2", "3/2"], 'valuations': [["2", 0], ["1/3", "4"]],
               'mediators': [{'parts': [[0, 1]]}]}
        instance = instance_from_document(doc)
        assert instance.weights == (Fraction(1, 2), Fraction(3, 2))
        assert instance.valuations[1][0] == Fraction(1, 3)
        assert instance.mediator_names == ("mediator0",)

    @pytest.mark.parametrize("doc, pointer", [
        ({'valuations': [], 'mediators': []}, "/"),
        ({'weights': [0.5, 1], 'valuations': [[1, 1]], 'mediators': []}, "/weights/0"),
        ({'weights': ["1/0", 1], 'valuations': [[1, 1]], 'mediators': []}, "/weights/0"),
        ({'weights': [1, 1], 'valuations': [[1, 1], [1]], 'mediators': []}, "/valuations/1"),
        ({'weights': [1, 1], 'valuations': [[1, 1]], 'mediators': [{'parts': [[0, "x"]]}]},
         "/mediators/0/parts/0/1"),
    ])
    def test_schema_errors_carry_a_pointer(self, doc, pointer):
        with pytest.raises(SchemaError) as excinfo:
            instance_from_document(doc)
        assert excinfo.value.pointer == pointer

    def test_short_row_message(self):
        doc = {'weights': [1, 1], 'valuations': [[1, 1], [1]], 'mediators': []}
        with pytest.raises(SchemaError, match="valuations row 1 has 1 entries, expected 2"):
            instance_from_document(doc)

    def test_invariants_checked_after_schema(self):
        doc = {'weights': [1, 1], 'valuations': [[1, 1]],
               'mediators': [{'parts': [[0, 1], [1]]}]}
        with pytest.raises(InstanceError, match="mediator 0: overlapping parts"):
            instance_from_document(doc)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\"weights\": [1,")
        with pytest.raises(SchemaError, match="invalid JSON"):
            load_instance(str(path))

    def test_profile_round_trip(self, tmp_path, ident4_instance):
        profile = StrategyProfile((PAIRS, Partition.trivial(4)))
        path = tmp_path / "profile.json"
        save_profile(profile, str(path))
        assert json.loads(path.read_text()) == {'reports': [[[0, 1], [2, 3]], [[0, 1, 2, 3]]]}
        assert load_profile(str(path), ident4_instance) == profile

    def test_profile_must_coarsen_base(self, ident4_instance):
        doc = {'reports': [[[0, 2], [1, 3]], [[0, 1, 2, 3]]]}
        with pytest.raises(ProfileError,
                           match=r"mediator 0: report \{\{0,2\},\{1,3\}\} does not coarsen"):
            profile_from_document(doc, ident4_instance)
        with pytest.raises(ProfileError, match="1 reports for 2 mediators"):
            profile_from_document({'reports': [[[0, 1, 2, 3]]]}, ident4_instance)


class TestRationals:
    def test_parse(self):
        assert parse_rational(" 3 / 6 ") == Fraction(1, 2)
        assert parse_rational("-2") == -2
        assert parse_rational(7) == 7

    @pytest.mark.parametrize("value", [True, 0.5, "1.5", "abc", None])
    def test_parse_refuses(self, value):
        with pytest.raises(SchemaError):
            parse_rational(value, "/x")

    def test_decimal_rendering(self):
        assert decimal_string(Fraction(1, 3)) == "0.333333333333"
        assert rational_field(Fraction(1, 2)) == {'exact': "1/2", 'decimal': "0.5"}
        assert rational_field(Fraction(3)) == {'exact': "3", 'decimal': "3"}


class TestEdgeLists:
    def test_header_and_comments(self):
        graph = parse_edge_list(["# triangle minus one edge", "p 4", "0 1", "1 2  # tail", ""])
        assert graph.number_of_nodes() == 4
        assert sorted(graph.edges) == [(0, 1), (1, 2)]

    def test_node_count_from_largest_index(self):
        assert parse_edge_list(["0 2"]).number_of_nodes() == 3
        assert parse_edge_list([]).number_of_nodes() == 0

    @pytest.mark.parametrize("lines, message", [
        (["0 0"], "self-loop"),
        (["0"], "expected 'u v'"),
        (["0 x"], "integers"),
        (["p 2", "0 3"], "outside the declared 2 nodes"),
        (["p two"], "malformed header"),
    ])
    def test_malformed_lines(self, lines, message):
        with pytest.raises(InstanceError, match=message):
            parse_edge_list(lines)

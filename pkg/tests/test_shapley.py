"""
Tests for Shapley payments and the exact potential.
"""

from fractions import Fraction

import numpy as np
import pytest

from src.config import Limits
from src.exceptions import CapExceededError, ProfileError
from src.generators.random_instances import random_table_game
from src.mechanism import (PaymentVector, TableGame, potential, potential_table, shapley_payment,
                           shapley_permutation, shapley_subsets)
from src.mechanism.shapley import payment_rule, potential_weight

FULL, SILENT = 1, 0


def sample_profiles(game, seed, count=8):
    rng = np.random.default_rng(seed)
    return [tuple(int(rng.integers(0, c)) for c in game.strategy_counts) for _ in range(count)]


def deviations(game, profile):
    for player, count in enumerate(game.strategy_counts):
        for s in range(count):
            if s != profile[player]:
                yield player, profile[:player] + (s,) + profile[player + 1:]


class TestIdentityGame:
    def test_both_speaking(self, ident4_game):
        expected = (Fraction(-1, 8), Fraction(-1, 8))
        assert shapley_permutation(ident4_game, (FULL, FULL)).payments == expected
        assert shapley_subsets(ident4_game, (FULL, FULL)).payments == expected

    def test_null_player_gets_nothing(self, ident4_game):
        assert shapley_subsets(ident4_game, (FULL, SILENT)).payments == (Fraction(1, 4), 0)
        assert shapley_permutation(ident4_game, (SILENT, SILENT)).payments == (0, 0)

    def test_single_player_payment(self, ident4_game):
        assert shapley_payment(ident4_game, (SILENT, FULL), 1) == Fraction(1, 4)

    def test_potential_values(self, ident4_game):
        assert potential(ident4_game, (FULL, FULL)) == Fraction(1, 2)
        assert potential(ident4_game, (SILENT, FULL)) == Fraction(5, 8)
        assert potential(ident4_game, (SILENT, SILENT)) == Fraction(3, 8)

    def test_potential_table_matches_pointwise(self, ident4_game):
        table = potential_table(ident4_game)
        for profile in ident4_game.profiles():
            assert table[profile] == potential(ident4_game, profile)

    def test_invalid_profile(self, ident4_game):
        with pytest.raises(ProfileError, match="strategy 2 outside 0..1"):
            shapley_subsets(ident4_game, (2, 0))


class TestWeightsAndCaps:
    def test_potential_weights(self):
        assert potential_weight(1, 2) == Fraction(1, 2)
        assert potential_weight(2, 2) == Fraction(1, 2)
        assert potential_weight(3, 3) == Fraction(1, 3)

    def test_single_player_is_value_minus_null(self):
        game = TableGame(np.array([Fraction(2), Fraction(7, 3), Fraction(-1)], dtype=object))
        for s in range(3):
            assert shapley_subsets(game, (s,))[0] == game.value((s,)) - game.null_value()

    def test_permutation_cap(self, ident4_game):
        with pytest.raises(CapExceededError, match="permutation Shapley sum over 2 players"):
            shapley_permutation(ident4_game, (FULL, FULL), Limits(max_permutation_players=1))

    def test_subset_cap(self, ident4_game):
        with pytest.raises(CapExceededError):
            potential(ident4_game, (FULL, FULL), Limits(max_subset_players=1))

    def test_payment_rule_lookup(self):
        assert payment_rule("perm") is shapley_permutation
        with pytest.raises(ValueError, match="Unknown payment rule: median"):
            payment_rule("median")

    def test_payment_vector(self):
        payments = PaymentVector((Fraction(1, 2), Fraction(-1, 3)))
        assert payments.total() == Fraction(1, 6)
        assert len(payments) == 2 and list(payments) == payments.to_list()


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_payment_rules_agree_and_are_efficient(seed):
    game = random_table_game(seed)
    assert game.m <= 6
    for profile in sample_profiles(game, seed):
        by_orderings = shapley_permutation(game, profile)
        by_coalitions = shapley_subsets(game, profile)
        assert by_orderings == by_coalitions
        assert by_coalitions.total() == game.value(profile) - game.null_value()
        for payments in (by_orderings, by_coalitions):
            assert all(p == 0 for p, s in zip(payments, profile) if s == 0)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_potential_is_exact(seed):
    game = random_table_game(seed)
    phi = potential_table(game)
    payments = {profile: shapley_subsets(game, profile) for profile in game.profiles()}
    for profile in game.profiles():
        for player, moved in deviations(game, profile):
            assert payments[moved][player] - payments[profile][player] == phi[moved] - phi[profile]

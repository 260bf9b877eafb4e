"""
Tests for best responses, Nash checks and best-response dynamics.
"""

from fractions import Fraction

import numpy as np
import pytest

from src.generators.random_instances import gen_random
from src.mechanism import (BestResponseDynamics, DSPGame, TableGame, best_response,
                           enumerate_equilibria, is_nash, potential, run_brd)

FULL, SILENT = 1, 0


def random_dsp_games(count, first_seed=0):
    games = []
    for seed in range(first_seed, first_seed + count):
        n, k, m = 2 + seed % 3, 2 + seed % 2, 1 + seed % 3
        games.append(DSPGame(gen_random(n, k, m, seed, max_parts=3)))
    return games


class TestBestResponse:
    def test_silence_beats_joint_speaking(self, ident4_game):
        assert best_response(ident4_game, (FULL, FULL), 0) == SILENT

    def test_current_strategy_is_kept(self, ident4_game):
        assert best_response(ident4_game, (SILENT, FULL), 1) == FULL

    def test_single_strategy_player(self):
        game = TableGame(np.array([[Fraction(1), Fraction(5)]], dtype=object))
        assert best_response(game, (0, 0), 0) == 0
        assert best_response(game, (0, 0), 1) == 1

    def test_lowest_index_breaks_ties(self):
        game = TableGame(np.array([Fraction(0), Fraction(3), Fraction(3)], dtype=object))
        assert best_response(game, (0,), 0) == 1
        assert best_response(game, (2,), 0) == 2


class TestNash:
    def test_identity_profiles(self, ident4_game):
        assert is_nash(ident4_game, (SILENT, FULL))
        assert is_nash(ident4_game, (FULL, SILENT), rule="perm")
        assert not is_nash(ident4_game, (FULL, FULL))
        assert not is_nash(ident4_game, (SILENT, SILENT))

    def test_only_profile_is_an_equilibrium(self):
        game = TableGame(np.full((1, 1), Fraction(4), dtype=object))
        assert is_nash(game, (0, 0))


class TestDynamics:
    def test_from_both_speaking(self, ident4_game):
        trace = run_brd(ident4_game, (FULL, FULL))
        assert trace.final == (SILENT, FULL)
        assert trace.converged
        assert len(trace.steps) == 1
        step = trace.steps[0]
        assert (step.player, step.old, step.new) == (0, FULL, SILENT)
        assert (step.phi_before, step.phi_after) == (Fraction(1, 2), Fraction(5, 8))

    def test_from_silence(self, ident4_game):
        trace = run_brd(ident4_game, (SILENT, SILENT))
        assert trace.final == (FULL, SILENT)
        assert ident4_game.value(trace.final) == Fraction(1, 2)
        assert run_brd(ident4_game, (SILENT, SILENT), order=[1, 0]).final == (SILENT, FULL)

    def test_trace_frame(self, ident4_game):
        frame = run_brd(ident4_game, (SILENT, SILENT)).to_frame()
        assert list(frame.columns) == ['step', 'player', 'old', 'new', 'old_label', 'new_label',
                                       'phi_before', 'phi_after']
        row = frame.iloc[0]
        assert row['new_label'] == "{{0,1},{2,3}}"
        assert row['old_label'] == "{{0,1,2,3}}"
        assert (row['phi_before'], row['phi_after']) == ("3/8", "5/8")

    def test_no_steps_at_an_equilibrium(self, ident4_game):
        dynamics = BestResponseDynamics(ident4_game)
        trace = dynamics.run((SILENT, FULL))
        assert trace.steps == []
        assert trace.to_frame().empty
        assert dynamics.get_stats() == {'passes': 1, 'steps': 0}

    def test_order_must_be_a_permutation(self, ident4_game):
        with pytest.raises(ValueError, match="not a permutation"):
            BestResponseDynamics(ident4_game, order=[0, 0])


@pytest.mark.slow
@pytest.mark.parametrize("game", random_dsp_games(100), ids=lambda game: game.name)
def test_dynamics_reach_an_equilibrium(game):
    equilibria = {eq.profile for eq in enumerate_equilibria(game)}
    for start in (game.silent_profile(), game.full_profile()):
        trace = run_brd(game, start)
        assert trace.converged
        assert is_nash(game, trace.final)
        assert trace.final in equilibria
        assert game.value(trace.final) >= game.null_value()
        assert all(step.phi_after > step.phi_before for step in trace.steps)
        assert potential(game, trace.final) >= potential(game, start)

from fractions import Fraction

import pytest

from montmort.pool import (
    PoolConfig,
    PoolDivergenceError,
    PoolState,
    advance,
    opening_state,
    pool_expected_games,
    pool_simulate,
    pool_solve,
    pool_win_probabilities,
)
from oracles import enumerate_pool, simulate_pool_reference, unlumped_win_probabilities

FAIR3 = PoolConfig(3)


class TestConfig:
    def test_streak_defaults_to_players_minus_one(self):
        assert PoolConfig(5).streak_required == 4
        assert PoolConfig(3, streak_required=4).streak_required == 4

    def test_wire_form_fields(self):
        config = PoolConfig(3, "1/3", ante="2", fee="1/2")
        assert config.champion_win_prob == Fraction(1, 3)
        assert config.pot == 6

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"players": 1},
            {"players": 3, "champion_win_prob": Fraction(3, 2)},
            {"players": 3, "ante": -1},
            {"players": 3, "fee": Fraction(-1, 2)},
            {"players": 3, "streak_required": 0},
        ],
    )
    def test_rejects_bad_parameters(self, kwargs):
        with pytest.raises(ValueError):
            PoolConfig(**kwargs)


class TestStateLaw:
    def test_champion_win_extends_streak(self):
        state = PoolState(0, 1, (2, 1))
        assert advance(state, True) == PoolState(0, 2, (1, 2))

    def test_champion_loss_crowns_the_challenger(self):
        state = PoolState(0, 2, (2, 1))
        assert advance(state, False) == PoolState(2, 1, (1, 0))

    def test_opening_states(self):
        assert opening_state(FAIR3, True) == PoolState(0, 1, (2, 1))
        assert opening_state(FAIR3, False) == PoolState(1, 1, (2, 0))

    def test_state_validation(self):
        with pytest.raises(ValueError):
            PoolState(0, 0, (1, 2))
        with pytest.raises(ValueError):
            PoolState(0, 1, (0, 2))


class TestWinProbabilities:
    def test_three_fair_players(self):
        assert pool_win_probabilities(FAIR3) == (
            Fraction(5, 14),
            Fraction(5, 14),
            Fraction(2, 7),
        )

    def test_role_recursion_closed_form(self):
        # With p = 1/2 and a two-game streak: the fresh champion's chance c
        # solves c = 1/2 + w/2 with h = c/2 and w = h/2, i.e. (4/7, 2/7, 1/7).
        c = Fraction(4, 7)
        h = c / 2
        w = h / 2
        assert c == Fraction(1, 2) + w / 2
        probs = pool_win_probabilities(FAIR3)
        assert probs[0] == (c + w) / 2
        assert probs[2] == h

    @pytest.mark.parametrize("p", [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1)])
    def test_two_players_single_game(self, p):
        assert pool_win_probabilities(PoolConfig(2, p)) == (p, 1 - p)

    def test_certain_champion_sweeps(self):
        assert pool_win_probabilities(PoolConfig(3, Fraction(1))) == (1, 0, 0)

    def test_divergence_error_not_a_hang(self):
        with pytest.raises(PoolDivergenceError):
            pool_win_probabilities(PoolConfig(3, Fraction(0)))
        with pytest.raises(PoolDivergenceError):
            pool_solve(PoolConfig(4, Fraction(0)))

    def test_streak_one_with_spectators(self):
        probs = pool_win_probabilities(PoolConfig(5, Fraction(2, 3), streak_required=1))
        assert probs == (Fraction(2, 3), Fraction(1, 3), 0, 0, 0)

    @pytest.mark.parametrize(
        "config",
        [
            PoolConfig(3, Fraction(2, 5)),
            PoolConfig(4, Fraction(1, 2)),
            PoolConfig(4, Fraction(1, 3)),
            PoolConfig(3, Fraction(3, 4), streak_required=3),
        ],
    )
    def test_matches_unlumped_state_space_solve(self, config):
        assert pool_win_probabilities(config) == unlumped_win_probabilities(config)

    def test_opening_symmetry_at_even_odds(self):
        for n in (3, 4, 5):
            solution = pool_solve(PoolConfig(n))
            assert solution.win_prob[0] == solution.win_prob[1]
            assert solution.expected_payment[0] == solution.expected_payment[1]
            assert solution.expected_net[0] == solution.expected_net[1]

    def test_waiting_seats_degrade_at_even_odds(self):
        probs = pool_win_probabilities(PoolConfig(4))
        assert probs[0] == probs[1] >= probs[2] >= probs[3]


class TestExpectedGames:
    def test_three_fair_players_play_three_games(self):
        # From any post-game state the remainder f solves f = 1 + f/2, so 2,
        # plus the opening game.
        assert pool_expected_games(FAIR3) == 3

    def test_two_players(self):
        assert pool_expected_games(PoolConfig(2, Fraction(1, 3))) == 1

    def test_certain_champion(self):
        assert pool_expected_games(PoolConfig(3, Fraction(1))) == 2


class TestPoolSolve:
    def test_three_fair_players_money(self):
        solution = pool_solve(FAIR3)
        assert solution.expected_payment == (
            Fraction(29, 14),
            Fraction(29, 14),
            Fraction(13, 7),
        )
        assert solution.expected_net == (
            Fraction(1, 98),
            Fraction(1, 98),
            Fraction(-1, 49),
        )

    def test_two_players_fair_game_is_fair(self):
        solution = pool_solve(PoolConfig(2))
        assert solution.expected_net == (0, 0)

    @pytest.mark.parametrize(
        "config",
        [
            FAIR3,
            PoolConfig(2, Fraction(1, 3)),
            PoolConfig(3, Fraction(2, 3), ante=Fraction(3, 2), fee=Fraction(1, 4)),
            PoolConfig(4, Fraction(1, 3)),
            PoolConfig(4, Fraction(1, 2), ante=0, fee=2),
            PoolConfig(5, Fraction(2, 5), streak_required=2),
            PoolConfig(5, Fraction(1), streak_required=3),
            PoolConfig(6, Fraction(1, 2)),
        ],
    )
    def test_accounting_invariants(self, config):
        solution = pool_solve(config)
        assert sum(solution.win_prob) == 1
        assert sum(solution.expected_net) == 0
        expected_paid = config.players * config.ante + config.fee * solution.expected_games
        assert sum(solution.expected_payment) == expected_paid

    def test_truncated_enumeration_brackets_probabilities(self):
        # Depth-40 exhaustive game trees bracket each exact win probability
        # within the leftover tail mass.
        for n in (3, 4):
            for p in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
                config = PoolConfig(n, p)
                oracle = enumerate_pool(config, depth=40)
                exact = pool_win_probabilities(config)
                for seat in range(n):
                    low = oracle.win_mass[seat]
                    assert low <= exact[seat] <= low + oracle.tail_mass

    def test_truncated_enumeration_confirms_money(self):
        oracle = enumerate_pool(FAIR3, depth=60)
        assert oracle.tail_mass <= Fraction(1, 2**59)
        solution = pool_solve(FAIR3)
        for seat in range(3):
            assert abs(oracle.expected_net[seat] - solution.expected_net[seat]) <= (
                oracle.residual_net_bound
            )
        assert abs(oracle.expected_games - solution.expected_games) <= (
            oracle.residual_games_bound
        )


class TestPoolSimulate:
    def test_deterministic_for_fixed_seed(self):
        first = pool_simulate(FAIR3, seed=42, trials=2000)
        second = pool_simulate(FAIR3, seed=42, trials=2000)
        assert first == second

    def test_single_trial_is_a_unit_vector(self):
        result = pool_simulate(FAIR3, seed=9, trials=1)
        assert sorted(result.win_prob) == [0, 0, 1]
        assert result.truncated_trials == 0

    def test_matches_state_law_reference(self):
        config = PoolConfig(4, Fraction(2, 5))
        wins, losses, games_won, total_games, truncated = simulate_pool_reference(
            config, seed=13, trials=3000, max_games=1_000_000
        )
        result = pool_simulate(config, seed=13, trials=3000)
        assert result.win_prob == tuple(Fraction(w, 3000) for w in wins)
        assert result.expected_games == Fraction(total_games, 3000)
        assert result.truncated_trials == truncated
        ante, fee = config.ante, config.fee
        assert result.expected_payment == tuple(
            ante + fee * Fraction(value, 3000) for value in losses
        )

    def test_statistics_near_exact_values(self):
        result = pool_simulate(FAIR3, seed=2026, trials=50_000)
        exact = pool_solve(FAIR3)
        for seat in range(3):
            margin = 4 * result.win_prob_se[seat]
            assert abs(float(result.win_prob[seat] - exact.win_prob[seat])) <= margin
        games_margin = 4 * result.expected_games_se
        assert abs(float(result.expected_games - exact.expected_games)) <= games_margin

    def test_truncation_cap_is_honoured(self):
        # A two-game cap on a pool that usually needs three forces truncations
        result = pool_simulate(FAIR3, seed=3, trials=500, max_games=2)
        assert result.truncated_trials > 0
        assert result.expected_games <= 2

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            pool_simulate(FAIR3, seed=1, trials=0)
        with pytest.raises(ValueError):
            pool_simulate(FAIR3, seed=1, trials=10, max_games=0)

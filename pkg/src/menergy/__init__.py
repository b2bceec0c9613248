"""Solver library for multi-dimensional energy and mean-payoff games with
parity objectives: antichain fixed points, Moore-machine synthesis and
verification, and randomized memoryless constructions."""

from .antichain import Antichain
from .game import (Edge, GameError, GameStructure, Lasso, ParseError, State,
                   ValidationError, alternation_transform, energy_level,
                   game_stats, lasso_values, make_game, parse_game, write_game)
from .reduction import (ReductionReport, completeness_cap, default_reward,
                        depth_bound, mp_to_energy, parity_to_energy)
from .solver import (FixpointResult, SolveOutcome, cpre_fixpoint, cpre_step,
                     default_schedule, explicit_to_antichain, incremental_solve,
                     naive_fixpoint_oracle)
from .strategy import (MooreStrategy, Product, StrategyError, VerifyReport,
                       build_memoryless, enumerate_p2_memoryless, extract_moore,
                       format_moore, parse_moore, pure_outcome_lasso,
                       strategy_product, verify_sure_winning)
from .randomized import (BestResponse, ChainAnalysis, FiniteChain,
                         MonteCarloReport, RMStrategy, RandomizedError,
                         attractor, best_response_expectation,
                         chain_from_strategies, chain_mean_payoff, check_rm,
                         format_rm, good_for_energy, mix_strategies,
                         monte_carlo_eval, mp_buchi_pure, mp_buchi_randomized,
                         mp_parity_randomized, parse_rm, rm_from_lasso,
                         rm_support_verify, stationary_distribution,
                         win_mp_buchi, win_mp_parity)
from .bench import gen_exp_family, gen_paper_fixture, gen_random_game

__version__ = "0.1.0"

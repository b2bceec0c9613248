"""Batch command-line front end.

Exit codes: 0 success (and, for solve/verify, a positive verdict),
2 negative verdict ("unknown up to cap" for solve, "losing" for verify),
1 errors.
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .bench import gen_paper_fixture, gen_random_game
from .game import (GameError, Lasso, game_stats, alternation_transform,
                   parse_game, write_game)
from .randomized import (RandomizedError, format_rm, mp_buchi_randomized,
                         mp_parity_randomized, monte_carlo_eval, parse_rm,
                         rm_from_lasso)
from .reduction import completeness_cap, default_reward, parity_to_energy
from .solver import default_schedule, incremental_solve
from .strategy import (StrategyError, enumerate_p2_memoryless, extract_moore,
                       format_moore, parse_moore, verify_sure_winning)


def _read_game(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_game(text)


def _cmd_solve(args) -> int:
    g = _read_game(args.game)
    reward = args.l if args.l is not None else default_reward(g)
    has_parity = any(s.priority % 2 == 1 for s in g.states)
    if has_parity:
        reduced, report = parity_to_energy(g, reward)
        print(f"reduced dims={reduced.dimension} reward={report.reward}")
    else:
        reduced = g
    galt, amap = alternation_transform(reduced)
    w = max(game_stats(galt).max_abs_weight, 1)
    theoretical = completeness_cap(galt, args.c_const)
    if args.hard_cap == "theoretical":
        hard_cap = theoretical
    elif args.hard_cap is not None:
        hard_cap = int(args.hard_cap)
    else:
        hard_cap = 4 * w * len(galt.states)
    if args.caps:
        schedule = [int(c) for c in args.caps.split(",")]
    else:
        schedule = default_schedule(w, hard_cap)
    print(f"config game={args.game} caps={','.join(map(str, schedule))} "
          f"hard_cap={hard_cap} c_const={args.c_const} l={reward}")

    def telemetry(cap, fp):
        print(f"cap={cap}")
        for i, size in enumerate(fp.wall_stats, start=1):
            print(f"iter={i} antichain_size={size}")

    outcome = incremental_solve(galt, schedule, hard_cap, on_fixpoint=telemetry)
    if not outcome.won:
        guarantee = ("definitive: no finite-memory winning strategy exists"
                     if hard_cap >= theoretical else
                     f"completeness only at cap {theoretical}")
        print(f"unknown up to cap {hard_cap} ({guarantee})")
        return 2
    print(f"winning cap={outcome.cap}")
    for credit in outcome.initial_credits:
        print(f"credit {g.initial} " + " ".join(map(str, credit)))
    v0 = outcome.initial_credits[0]
    machine = extract_moore(galt, outcome.fixpoint, v0)
    prio = {sid: g.priority[amap[sid]] for sid in galt.ids}
    report = verify_sure_winning(galt, machine, v0, priorities=prio)
    if not report.winning:
        print("internal error: extracted strategy failed verification", file=sys.stderr)
        return 1
    print(f"verified winning for credit {','.join(map(str, v0))} "
          f"(memory states: {machine.size()})")
    text = format_moore(machine)
    if args.out:
        Path(args.out).write_text(text)
        print(f"strategy written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_reduce(args) -> int:
    g = _read_game(args.game)
    reward = args.l if args.l is not None else default_reward(g)
    reduced, report = parity_to_energy(g, reward)
    if args.alternate:
        reduced, _ = alternation_transform(reduced)
    sys.stdout.write(write_game(reduced))
    print(f"# added dims={report.added_dimensions} reward={report.reward}",
          file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    g = _read_game(args.game)
    machine = parse_moore(Path(args.strategy).read_text())
    v0 = tuple(int(x) for x in args.credit.split(","))
    report = verify_sure_winning(g, machine, v0)
    if report.winning:
        print("Winning")
        return 0
    print(f"Losing ({report.witness_kind})")
    if report.witness_kind == "energy":
        print(f"dimension {report.witness_dimension + 1}")
        print("path " + " ".join(s for s, _ in report.witness_path))
    else:
        print("cycle " + " ".join(s for s, _ in report.witness_cycle))
    return 2


def _cmd_simulate(args) -> int:
    g = _read_game(args.game)
    rm = parse_rm(Path(args.strategy).read_text())
    adversary = None
    if not g.is_one_player():
        for i, adv in enumerate(enumerate_p2_memoryless(g)):
            if i == args.p2_index:
                adversary = adv
                break
        if adversary is None:
            raise StrategyError(f"p2 index {args.p2_index} out of range")
        print("p2 " + " ".join(f"{s}->{t}" for s, t in sorted(adversary.items())))
    report = monte_carlo_eval(g, rm, adversary, args.horizon, args.episodes, args.seed)
    print(f"config horizon={args.horizon} episodes={args.episodes} seed={args.seed} "
          f"generator={report.generator!r}")
    print("mean " + " ".join(f"{m:.6f}" for m in report.mean))
    for s in sorted(report.episodes_visiting):
        print(f"visits {s} episodes={report.episodes_visiting[s]} "
              f"total={report.visit_totals[s]}")
    return 0


def _cmd_randomize(args) -> int:
    g = _read_game(args.game)
    eps = Fraction(args.epsilon) if args.epsilon else Fraction(1, 4)
    if args.mode == "lasso":
        if not args.cycle:
            raise GameError("--cycle is required in lasso mode")
        lasso = Lasso(tuple(args.prefix.split()) if args.prefix else (),
                      tuple(args.cycle.split()))
        rm = rm_from_lasso(g, lasso)
    elif args.mode == "buchi":
        if not args.buchi:
            raise GameError("--buchi is required in buchi mode")
        rm, gamma = mp_buchi_randomized(g, set(args.buchi.split(",")), eps)
        print(f"gamma {gamma.numerator}/{gamma.denominator}")
    else:
        rm = mp_parity_randomized(g, eps)
    sys.stdout.write(format_rm(rm))
    return 0


def _cmd_gen(args) -> int:
    if args.what == "random":
        g = gen_random_game(args.states, args.dim, args.max_weight,
                            args.owner_ratio, args.priority_max, args.seed)
    elif args.what == "expfam":
        if args.k is None:
            raise GameError("expfam needs K")
        g = gen_paper_fixture(f"expfam{args.k}")
    else:
        g = gen_paper_fixture(args.what)
    sys.stdout.write(write_game(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="menergy",
                                description="multi-dimensional energy / "
                                            "mean-payoff parity game solver")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="synthesize and verify a winning strategy")
    sp.add_argument("game")
    sp.add_argument("--caps", help="comma-separated cap schedule")
    sp.add_argument("--hard-cap", dest="hard_cap",
                    help="integer, or 'theoretical' for 2*l*W")
    sp.add_argument("--c-const", dest="c_const", type=int, default=1)
    sp.add_argument("--l", type=int, help="parity reduction reward (default |S|+1)")
    sp.add_argument("--out", help="strategy output file")
    sp.set_defaults(func=_cmd_solve)

    rp = sub.add_parser("reduce", help="emit the parity-to-energy reduction")
    rp.add_argument("game")
    rp.add_argument("--l", type=int)
    rp.add_argument("--alternate", action="store_true",
                    help="also apply the alternation transform (the game "
                         "`solve` actually runs on)")
    rp.set_defaults(func=_cmd_reduce)

    vp = sub.add_parser("verify", help="verify a Moore strategy")
    vp.add_argument("game")
    vp.add_argument("strategy")
    vp.add_argument("--credit", required=True, help="v1,...,vk")
    vp.set_defaults(func=_cmd_verify)

    mp = sub.add_parser("simulate", help="Monte Carlo run of a randomized strategy")
    mp.add_argument("game")
    mp.add_argument("strategy")
    mp.add_argument("--horizon", type=int, required=True)
    mp.add_argument("--episodes", type=int, required=True)
    mp.add_argument("--seed", type=int, required=True)
    mp.add_argument("--p2-index", dest="p2_index", type=int, default=0)
    mp.set_defaults(func=_cmd_simulate)

    zp = sub.add_parser("randomize", help="randomized strategy constructions")
    zp.add_argument("game")
    zp.add_argument("--mode", choices=("lasso", "buchi", "parity"), required=True)
    zp.add_argument("--epsilon", help="p/q")
    zp.add_argument("--prefix", help="lasso prefix states (space separated)")
    zp.add_argument("--cycle", help="lasso cycle states (space separated)")
    zp.add_argument("--buchi", help="comma-separated Büchi states")
    zp.set_defaults(func=_cmd_randomize)

    gp = sub.add_parser("gen", help="fixture and random game generators")
    gp.add_argument("what", help="fig1|fig5|fig6|fig7|fig8|mpp|expfam|random")
    gp.add_argument("k", nargs="?", type=int, help="family parameter for expfam")
    gp.add_argument("--states", type=int, default=6)
    gp.add_argument("--dim", type=int, default=2)
    gp.add_argument("--max-weight", dest="max_weight", type=int, default=2)
    gp.add_argument("--owner-ratio", dest="owner_ratio", type=float, default=0.5)
    gp.add_argument("--priority-max", dest="priority_max", type=int, default=0)
    gp.add_argument("--seed", type=int, default=0)
    gp.set_defaults(func=_cmd_gen)
    return p


def run_cli(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (GameError, StrategyError, RandomizedError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()

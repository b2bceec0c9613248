from fractions import Fraction

import pytest

from menergy.bench import gen_exp_family, gen_paper_fixture
from menergy.cli import run_cli
from menergy.game import parse_game, write_game
from menergy.randomized import parse_rm
from menergy.strategy import parse_moore


@pytest.fixture
def fig1_file(tmp_path):
    p = tmp_path / "fig1.game"
    p.write_text(write_game(gen_paper_fixture("fig1")))
    return p


def test_solve_fig1(fig1_file, tmp_path, capsys):
    out = tmp_path / "strategy.txt"
    code = run_cli(["solve", str(fig1_file), "--out", str(out)])
    printed = capsys.readouterr().out
    assert code == 0
    assert "winning cap=7" in printed
    assert "credit s0" in printed
    assert "verified winning" in printed
    assert "iter=" in printed and "antichain_size=" in printed
    machine = parse_moore(out.read_text())
    assert machine.size() > 0


def test_solve_losing_game_exit_2(tmp_path, capsys):
    p = tmp_path / "lose.game"
    p.write_text("game k=1\nstate s owner=1 prio=0 init\nedge s s -1\n")
    code = run_cli(["solve", str(p), "--caps", "1,2", "--hard-cap", "4"])
    printed = capsys.readouterr().out
    assert code == 2
    assert "unknown up to cap 4" in printed


def test_solve_then_verify_round_trip(fig1_file, tmp_path, capsys):
    out = tmp_path / "strategy.txt"
    assert run_cli(["solve", str(fig1_file), "--out", str(out)]) == 0
    printed = capsys.readouterr().out
    credit = next(l for l in printed.splitlines() if l.startswith("credit s0"))
    v0 = ",".join(credit.split()[2:])
    # verification must run on the same reduced+alternating game
    assert run_cli(["reduce", str(fig1_file), "--alternate"]) == 0
    alt_file = tmp_path / "alt.game"
    alt_file.write_text(capsys.readouterr().out)
    code = run_cli(["verify", str(alt_file), str(out), "--credit", v0])
    assert code == 0
    assert "Winning" in capsys.readouterr().out


def test_verify_reports_losing_with_witness(tmp_path, capsys):
    g = gen_exp_family(1)
    p = tmp_path / "g.game"
    p.write_text(write_game(g))
    from menergy.strategy import build_memoryless, format_moore
    m = build_memoryless(g, {"t1": "t1L", "t1L": "s1", "t1R": "s1"})
    sp = tmp_path / "m.moore"
    sp.write_text(format_moore(m))
    code = run_cli(["verify", str(p), str(sp), "--credit", "5,5"])
    printed = capsys.readouterr().out
    assert code == 2
    assert "Losing (energy)" in printed and "dimension 2" in printed


def test_gen_expfam(capsys):
    assert run_cli(["gen", "expfam", "2"]) == 0
    printed = capsys.readouterr().out
    assert printed == write_game(gen_exp_family(2))


def test_gen_fixture_and_random(capsys):
    assert run_cli(["gen", "fig7"]) == 0
    assert parse_game(capsys.readouterr().out) == gen_paper_fixture("fig7")
    assert run_cli(["gen", "random", "--states", "5", "--dim", "2",
                    "--max-weight", "2", "--seed", "11"]) == 0
    g = parse_game(capsys.readouterr().out)
    assert len(g.states) == 5 and g.dimension == 2


def test_gen_unknown_fixture(capsys):
    assert run_cli(["gen", "fig99"]) == 1
    assert "error:" in capsys.readouterr().err


def test_reduce_output_parses(fig1_file, capsys):
    assert run_cli(["reduce", str(fig1_file), "--l", "7"]) == 0
    reduced = parse_game(capsys.readouterr().out)
    assert reduced.dimension == 4
    assert reduced.weight[("s3", "s5")] == (-2, 1, 7, 7)


def test_randomize_lasso_mode(tmp_path, capsys):
    p = tmp_path / "fig7.game"
    p.write_text(write_game(gen_paper_fixture("fig7")))
    code = run_cli(["randomize", str(p), "--mode", "lasso",
                    "--cycle", "s1 s1 s1 s1 s1 s1 s1 s1 s1 s2"])
    printed = capsys.readouterr().out
    assert code == 0
    rm = parse_rm(printed)
    assert rm.dist["s1"]["s2"] == Fraction(1, 9)


def test_randomize_buchi_mode(tmp_path, capsys):
    p = tmp_path / "fig7.game"
    p.write_text(write_game(gen_paper_fixture("fig7")))
    code = run_cli(["randomize", str(p), "--mode", "buchi",
                    "--buchi", "s2", "--epsilon", "1/4"])
    printed = capsys.readouterr().out
    assert code == 0
    assert printed.startswith("gamma ")
    parse_rm(printed[printed.index("rm"):])


def test_simulate(tmp_path, capsys):
    p = tmp_path / "fig7.game"
    p.write_text(write_game(gen_paper_fixture("fig7")))
    rm_file = tmp_path / "rm.txt"
    rm_file.write_text("rm\ndist s1 s1:8/9 s2:1/9\ndist s2 s1:1/1\n")
    code = run_cli(["simulate", str(p), str(rm_file), "--horizon", "1000",
                    "--episodes", "5", "--seed", "4"])
    printed = capsys.readouterr().out
    assert code == 0
    assert "mean " in printed and "visits s2 episodes=5" in printed
    # reproducible
    run_cli(["simulate", str(p), str(rm_file), "--horizon", "1000",
             "--episodes", "5", "--seed", "4"])
    assert capsys.readouterr().out == printed


def test_missing_file_is_error(capsys):
    assert run_cli(["solve", "/nonexistent/game"]) == 1
    assert "error:" in capsys.readouterr().err


def test_bad_subcommand_is_error(capsys):
    assert run_cli(["frobnicate"]) == 1

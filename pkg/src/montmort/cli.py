"""Command-line surface: every computation behind `montmort <command>`.

Exact fractions are always the primary output; decimals are annotations.
Rationals on the command line use the "p/q" form (a bare integer works too).
Strategies are "threshold:t" or a 13-letter table, rank 1 (ace) through 13
(king). Formats: text (default), json, csv. `montmort reproduce` recomputes
the whole historical battery and exits 0 only when every figure matches,
so it can gate CI directly. No environment variables are consulted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__, etrennes, leher, montecarlo, pool, report, solver
from .rational import approx_string as _approx
from .rational import decimal_string, format_rational, parse_rational

SIGMA_BAND = 4  # simulation verdicts: estimate within 4 standard errors


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def _paul_strategy(text: str) -> leher.PaulStrategy:
    try:
        return leher.PaulStrategy.parse(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def _pierre_strategy(text: str) -> leher.PierreStrategy:
    try:
        return leher.PierreStrategy.parse(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def _print_csv(rows: list[list[str]]) -> None:
    buffer = io.StringIO()
    csv.writer(buffer).writerows(rows)
    print(buffer.getvalue(), end="")


def _value_payload(value: Fraction) -> dict:
    return {"exact": format_rational(value), "decimal": decimal_string(value)}


def _rank_name(rank: int) -> str:
    names = {1: "an ace", 8: "an 8", 11: "a jack", 12: "a queen", 13: "a king"}
    return names.get(rank, f"a {rank}")


def _matrix_rows(matrix: solver.GameMatrix) -> list[list[str]]:
    header = ["row\\col", *matrix.col_labels]
    rows = [header]
    for label, row in zip(matrix.row_labels, matrix.entries):
        rows.append([label, *(format_rational(x) for x in row)])
    return rows


def _emit_matrix(matrix: solver.GameMatrix, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(matrix.to_json_dict(), indent=2))
    elif fmt == "csv":
        _print_csv(_matrix_rows(matrix))
    else:
        rows = _matrix_rows(matrix)
        widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
        for row in rows:
            print("  ".join(cell.ljust(width) for cell, width in zip(row, widths)))


def _solution_payload(solution: solver.GameSolution, matrix: solver.GameMatrix) -> dict:
    return {
        "value": _value_payload(solution.value),
        "row_mix": {
            label: format_rational(weight)
            for label, weight in zip(matrix.row_labels, solution.row_mix.weights)
        },
        "col_mix": {
            label: format_rational(weight)
            for label, weight in zip(matrix.col_labels, solution.col_mix.weights)
        },
        "certificate": {
            "row_payoffs": [format_rational(x) for x in solution.certificate.row_payoffs],
            "col_payoffs": [format_rational(x) for x in solution.certificate.col_payoffs],
        },
    }


def _emit_solution(solution: solver.GameSolution, matrix: solver.GameMatrix, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_solution_payload(solution, matrix), indent=2))
        return
    if fmt == "csv":
        rows = [["quantity", "strategy", "value"], ["value", "", format_rational(solution.value)]]
        for label, weight in zip(matrix.row_labels, solution.row_mix.weights):
            rows.append(["row_weight", label, format_rational(weight)])
        for label, weight in zip(matrix.col_labels, solution.col_mix.weights):
            rows.append(["col_weight", label, format_rational(weight)])
        _print_csv(rows)
        return
    print(f"value: {_approx(solution.value)}")
    row_parts = [
        f"{label} = {format_rational(weight)}"
        for label, weight in zip(matrix.row_labels, solution.row_mix.weights)
    ]
    col_parts = [
        f"{label} = {format_rational(weight)}"
        for label, weight in zip(matrix.col_labels, solution.col_mix.weights)
    ]
    print("row weights: " + ", ".join(row_parts))
    print("col weights: " + ", ".join(col_parts))


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------


def _cmd_leher_table(args: argparse.Namespace) -> int:
    matrix = leher.threshold_matrix() if args.all_thresholds else leher.build_leher_matrix()
    _emit_matrix(matrix, args.format)
    return 0


def _cmd_leher_solve(args: argparse.Namespace) -> int:
    matrix = leher.threshold_matrix() if args.all_thresholds else leher.build_leher_matrix()
    _emit_solution(solver.solve_zero_sum(matrix), matrix, args.format)
    return 0


def _cmd_leher_conditional(args: argparse.Namespace) -> int:
    if args.player == "paul":
        if args.action not in ("hold", "switch"):
            raise ValueError("Paul's action must be hold or switch")
        action = leher.PaulAction(args.action)
        lot = leher.conditional_lot_paul(args.card, action, args.pierre)
        label = f"Paul's lot holding {_rank_name(args.card)} and playing {args.action}"
    else:
        if args.action not in ("hold", "draw"):
            raise ValueError("Pierre's action must be hold or draw")
        action = leher.PierreAction(args.action)
        lot = leher.conditional_lot_pierre(args.card, action, args.paul)
        label = f"Pierre's lot holding {_rank_name(args.card)} and playing {args.action} (Paul stood)"
    if args.format == "json":
        print(json.dumps({"label": label, "lot": _value_payload(lot)}, indent=2))
    elif args.format == "csv":
        _print_csv([["label", "lot"], [label, format_rational(lot)]])
    else:
        print(f"{label}: {_approx(lot)}")
    return 0


def _cmd_leher_value(args: argparse.Namespace) -> int:
    value = leher.mixed_value(args.a, args.b, args.c, args.d)
    if args.format == "json":
        print(json.dumps({"value": _value_payload(value)}, indent=2))
    elif args.format == "csv":
        _print_csv([["value"], [format_rational(value)]])
    else:
        print(_approx(value))
    return 0


def _pool_config(args: argparse.Namespace) -> pool.PoolConfig:
    return pool.PoolConfig(
        players=args.players,
        champion_win_prob=args.p,
        ante=args.ante,
        fee=args.fee,
        streak_required=args.streak,
    )


def _cmd_pool_solve(args: argparse.Namespace) -> int:
    config = _pool_config(args)
    solution = pool.pool_solve(config)
    seats = [
        {
            "seat": index + 1,
            "win_prob": _value_payload(win),
            "expected_payment": _value_payload(payment),
            "expected_net": _value_payload(net),
        }
        for index, (win, payment, net) in enumerate(
            zip(solution.win_prob, solution.expected_payment, solution.expected_net)
        )
    ]
    if args.format == "json":
        print(
            json.dumps(
                {"expected_games": _value_payload(solution.expected_games), "seats": seats},
                indent=2,
            )
        )
        return 0
    if args.format == "csv":
        rows = [["seat", "win_prob", "expected_payment", "expected_net"]]
        for index in range(config.players):
            rows.append(
                [
                    str(index + 1),
                    format_rational(solution.win_prob[index]),
                    format_rational(solution.expected_payment[index]),
                    format_rational(solution.expected_net[index]),
                ]
            )
        rows.append(["expected_games", format_rational(solution.expected_games), "", ""])
        _print_csv(rows)
        return 0
    print(f"expected games: {_approx(solution.expected_games)}")
    for index in range(config.players):
        print(
            f"seat {index + 1}: wins {_approx(solution.win_prob[index])}; "
            f"pays {_approx(solution.expected_payment[index])}; "
            f"net {_approx(solution.expected_net[index])}"
        )
    return 0


def _cmd_pool_simulate(args: argparse.Namespace) -> int:
    config = _pool_config(args)
    exact = pool.pool_solve(config)
    result = pool.pool_simulate(config, seed=args.seed, trials=args.trials, max_games=args.max_games)
    verdicts = []
    for estimate, sigma, target in zip(result.win_prob, result.win_prob_se, exact.win_prob):
        verdicts.append(abs(float(estimate) - float(target)) <= SIGMA_BAND * sigma)
    seats = [
        {
            "seat": index + 1,
            "win_freq": format_rational(result.win_prob[index]),
            "sigma": result.win_prob_se[index],
            "target": format_rational(exact.win_prob[index]),
            "verdict": "pass" if verdicts[index] else "fail",
        }
        for index in range(config.players)
    ]
    payload = {
        "trials": result.trials,
        "seed": args.seed,
        "expected_games": format_rational(result.expected_games),
        "truncated_trials": result.truncated_trials,
        "seats": seats,
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = [["seat", "win_freq", "sigma", "target", "verdict"]]
        rows += [
            [str(s["seat"]), s["win_freq"], repr(s["sigma"]), s["target"], s["verdict"]]
            for s in seats
        ]
        _print_csv(rows)
    else:
        print(f"{result.trials} pools, seed {args.seed}, truncated {result.truncated_trials}")
        print(f"mean games: {_approx(result.expected_games)}")
        for entry in seats:
            print(
                f"seat {entry['seat']}: win freq {entry['win_freq']} "
                f"(target {entry['target']}, sigma {entry['sigma']:.6f}) {entry['verdict']}"
            )
    return 0 if all(verdicts) else 1


def _cmd_etrennes_solve(args: argparse.Namespace) -> int:
    config = etrennes.EtrennesConfig(even_prize=args.even, odd_prize=args.odd)
    matrix = etrennes.etrennes_matrix(config)
    _emit_solution(etrennes.etrennes_solve(config), matrix, args.format)
    return 0


def _cmd_simulate_leher(args: argparse.Namespace) -> int:
    target = leher.mixed_value(args.a, args.b, args.c, args.d)
    result = montecarlo.leher_simulate(
        args.a, args.b, args.c, args.d, seed=args.seed, trials=args.trials
    )
    within = abs(float(result.frequency) - float(target)) <= SIGMA_BAND * result.std_error
    payload = {
        "estimate": format_rational(result.frequency),
        "target": format_rational(target),
        "sigma": result.std_error,
        "trials": result.trials,
        "seed": args.seed,
        "verdict": "pass" if within else "fail",
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _print_csv(
            [
                ["estimate", "target", "sigma", "trials", "seed", "verdict"],
                [
                    payload["estimate"],
                    payload["target"],
                    repr(payload["sigma"]),
                    str(payload["trials"]),
                    str(payload["seed"]),
                    payload["verdict"],
                ],
            ]
        )
    else:
        print(
            f"Paul won {result.wins} of {result.trials}: {payload['estimate']} "
            f"≈ {decimal_string(result.frequency)} "
            f"(target {_approx(target)}, sigma {result.std_error:.6f}) {payload['verdict']}"
        )
    return 0 if within else 1


def _cmd_reproduce(args: argparse.Namespace) -> int:
    entries = report.build_reproduction_report()
    if args.format == "json":
        print(report.render_json(entries))
    elif args.format == "csv":
        print(report.render_csv(entries), end="")
    else:
        print(report.render_text(entries))
    return 0 if report.all_pass(entries) else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="montmort",
        description="Exact engine for Le Her, the problem of the pool, and Les Etrennes.",
    )
    parser.add_argument("--version", action="version", version=f"montmort {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    leher_parser = commands.add_parser("leher", help="the card game Le Her")
    leher_commands = leher_parser.add_subparsers(dest="subcommand", required=True)

    table = leher_commands.add_parser("table", help="print the table of Paul's lots")
    table.add_argument(
        "--all-thresholds",
        action="store_true",
        help="the full 14x14 matrix over every threshold pair instead of the 2x2 table",
    )
    _add_format(table)
    table.set_defaults(handler=_cmd_leher_table)

    solve = leher_commands.add_parser("solve", help="value and optimal token mixes")
    solve.add_argument("--all-thresholds", action="store_true", help="solve the 14x14 game")
    _add_format(solve)
    solve.set_defaults(handler=_cmd_leher_solve)

    conditional = leher_commands.add_parser(
        "conditional", help="a lot conditioned on the dealt card"
    )
    conditional.add_argument("--player", choices=("paul", "pierre"), required=True)
    conditional.add_argument("--card", type=int, required=True, help="dealt rank, 1..13")
    conditional.add_argument(
        "--action", choices=("hold", "switch", "draw"), required=True,
        help="hold/switch for Paul, hold/draw for Pierre",
    )
    conditional.add_argument(
        "--pierre", type=_pierre_strategy, default=leher.PierreStrategy.threshold(8),
        help="Pierre's strategy when Paul is conditioned (default threshold:8)",
    )
    conditional.add_argument(
        "--paul", type=_paul_strategy, default=leher.PaulStrategy.threshold(7),
        help="Paul's strategy when Pierre is conditioned (default threshold:7)",
    )
    _add_format(conditional)
    conditional.set_defaults(handler=_cmd_leher_conditional)

    value = leher_commands.add_parser("value", help="Paul's lot under token weights")
    for name, description in (
        ("--a", "Paul's weight on switching the 7"),
        ("--b", "Paul's weight on holding the 7"),
        ("--c", "Pierre's weight on switching the 8"),
        ("--d", "Pierre's weight on holding the 8"),
    ):
        value.add_argument(name, type=_rational, required=True, help=description)
    _add_format(value)
    value.set_defaults(handler=_cmd_leher_value)

    pool_parser = commands.add_parser("pool", help="the problem of the pool")
    pool_commands = pool_parser.add_subparsers(dest="subcommand", required=True)

    def add_pool_options(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--players", type=int, required=True, help="number of seats, >= 2")
        sub.add_argument("--p", type=_rational, default=Fraction(1, 2),
                         help="incumbent's win probability each game (default 1/2)")
        sub.add_argument("--ante", type=_rational, default=Fraction(1), help="ante (default 1)")
        sub.add_argument("--fee", type=_rational, default=Fraction(1),
                         help="fee each loser pays (default 1)")
        sub.add_argument("--streak", type=int, default=None,
                         help="consecutive wins required (default players - 1)")

    pool_solve = pool_commands.add_parser("solve", help="exact per-seat solution")
    add_pool_options(pool_solve)
    _add_format(pool_solve)
    pool_solve.set_defaults(handler=_cmd_pool_solve)

    pool_sim = pool_commands.add_parser("simulate", help="Monte Carlo cross-check")
    add_pool_options(pool_sim)
    pool_sim.add_argument("--seed", type=int, required=True)
    pool_sim.add_argument("--trials", type=int, required=True)
    pool_sim.add_argument("--max-games", type=int, default=pool.DEFAULT_TRIAL_GAME_CAP,
                          help="abandon a trial after this many games")
    _add_format(pool_sim)
    pool_sim.set_defaults(handler=_cmd_pool_simulate)

    etrennes_parser = commands.add_parser("etrennes", help="the parity-guessing gift game")
    etrennes_commands = etrennes_parser.add_subparsers(dest="subcommand", required=True)
    etrennes_solve = etrennes_commands.add_parser("solve", help="value and optimal mixes")
    etrennes_solve.add_argument("--even", type=_rational, default=Fraction(4),
                                help="prize for a correct even guess (default 4)")
    etrennes_solve.add_argument("--odd", type=_rational, default=Fraction(1),
                                help="prize for a correct odd guess (default 1)")
    _add_format(etrennes_solve)
    etrennes_solve.set_defaults(handler=_cmd_etrennes_solve)

    simulate_parser = commands.add_parser("simulate", help="token-bag Monte Carlo")
    simulate_commands = simulate_parser.add_subparsers(dest="subcommand", required=True)
    sim_leher = simulate_commands.add_parser("leher", help="simulate mixed-strategy Le Her")
    for name in ("--a", "--b", "--c", "--d"):
        sim_leher.add_argument(name, type=_rational, required=True)
    sim_leher.add_argument("--seed", type=int, required=True)
    sim_leher.add_argument("--trials", type=int, required=True)
    _add_format(sim_leher)
    sim_leher.set_defaults(handler=_cmd_simulate_leher)

    reproduce = commands.add_parser(
        "reproduce", help="recompute every historical figure; exit 0 only if all match"
    )
    _add_format(reproduce)
    reproduce.set_defaults(handler=_cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as error:
        print(f"montmort: error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

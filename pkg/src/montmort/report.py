"""The historical reproduction battery.

Every quantitative claim about Le Her that the Montmort-Bernoulli-Waldegrave
correspondence printed is recomputed here from scratch and compared, exactly,
against the quoted figure: the four cells of Montmort's table of Paul's
chances, Waldegrave's seven conditional lots, Bernoulli's even-token lot and
the always-switch guarantee, the 3:5 / 5:3 token solution and its value,
Montmort's 1711 bracketing of Paul's advantage, the 2697:2828 complement,
and the 60:36 difference ratio. An entry passes only on exact rational
equality; the two strict-inequality bracket checks are encoded as indicator
entries whose computed value is 1 exactly when the inequality holds.

The battery is deterministic, needs no randomness, network, clock or
environment, and is meant to gate CI: the CLI's `reproduce` command exits
zero only if every entry passes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .leher import (
    PaulAction,
    PaulStrategy,
    PierreAction,
    PierreStrategy,
    build_leher_matrix,
    conditional_lot_paul,
    conditional_lot_pierre,
    conditional_mixed_lot_paul7,
    paul_win_probability,
    pierre_win_probability,
)
from .rational import format_rational
from .solver import solve_zero_sum

_TABLE = "Montmort's table of the lots of Paul and Pierre, Essay d'analyse (2nd ed., 1713)"
_WALDEGRAVE_1712 = "Waldegrave's letter quoted by Montmort, spring 1712"
_BERNOULLI_TOKENS = "Bernoulli to Montmort, 30 December 1712 (the bag of tokens)"
_WALDEGRAVE_MINIMAX = "Waldegrave's letter quoted by Montmort, 15 November 1713"
_MONTMORT_1711 = "Montmort to Bernoulli, 10 April 1711"
_BERNOULLI_1711 = "Bernoulli to Montmort, 10 November 1711"


@dataclass(frozen=True)
class ReportEntry:
    """One recomputed historical figure against its quoted value."""

    label: str
    expected: Fraction
    computed: Fraction
    source: str

    @property
    def verdict(self) -> str:
        return "pass" if self.expected == self.computed else "fail"

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


def _indicator(condition: bool) -> Fraction:
    return Fraction(1 if condition else 0)


def build_reproduction_report() -> list[ReportEntry]:
    """Recompute the full battery; order is stable across runs."""
    t7, t6 = PaulStrategy.threshold(7), PaulStrategy.threshold(6)
    p8, p7 = PierreStrategy.threshold(8), PierreStrategy.threshold(7)

    entries = [
        ReportEntry(
            "Paul's lot: switch the 7 vs switch the 8",
            Fraction(2828, 5525),
            paul_win_probability(t7, p8),
            _TABLE,
        ),
        ReportEntry(
            "Paul's lot: switch the 7 vs hold the 8",
            Fraction(2838, 5525),
            paul_win_probability(t7, p7),
            _TABLE,
        ),
        ReportEntry(
            "Paul's lot: hold the 7 vs switch the 8",
            Fraction(2834, 5525),
            paul_win_probability(t6, p8),
            _TABLE,
        ),
        ReportEntry(
            "Paul's lot: hold the 7 vs hold the 8",
            Fraction(2828, 5525),
            paul_win_probability(t6, p7),
            _TABLE,
        ),
        ReportEntry(
            "Paul with a 7, switching",
            Fraction(780, 51 * 50),
            conditional_lot_paul(7, PaulAction.SWITCH, p8),
            _WALDEGRAVE_1712,
        ),
        ReportEntry(
            "Paul with a 7, holding, Pierre holds the 8",
            Fraction(720, 51 * 50),
            conditional_lot_paul(7, PaulAction.HOLD, p7),
            _WALDEGRAVE_1712,
        ),
        ReportEntry(
            "Paul with a 7, holding, Pierre switches the 8",
            Fraction(816, 51 * 50),
            conditional_lot_paul(7, PaulAction.HOLD, p8),
            _WALDEGRAVE_1712,
        ),
        ReportEntry(
            "Pierre with an 8, holding, Paul holds above a 7",
            Fraction(150, 23 * 50),
            conditional_lot_pierre(8, PierreAction.HOLD, t7),
            _WALDEGRAVE_1712,
        ),
        ReportEntry(
            "Pierre with an 8, drawing, Paul holds above a 7",
            Fraction(210, 23 * 50),
            conditional_lot_pierre(8, PierreAction.DRAW, t7),
            _WALDEGRAVE_1712,
        ),
        ReportEntry(
            "Pierre with an 8, holding, Paul holds the 7 too",
            Fraction(350, 27 * 50),
            conditional_lot_pierre(8, PierreAction.HOLD, t6),
            _WALDEGRAVE_1712,
        ),
        ReportEntry(
            "Pierre with an 8, drawing, Paul holds the 7 too",
            Fraction(314, 27 * 50),
            conditional_lot_pierre(8, PierreAction.DRAW, t6),
            _WALDEGRAVE_1712,
        ),
        ReportEntry(
            "Paul's lot with a 7, both tossing even tokens",
            Fraction(774, 51 * 50),
            conditional_mixed_lot_paul7(Fraction(1, 2), Fraction(1, 2)),
            _BERNOULLI_TOKENS,
        ),
        ReportEntry(
            "Paul's guaranteed lot with a 7, always switching",
            Fraction(780, 51 * 50),
            conditional_mixed_lot_paul7(Fraction(1), Fraction(0)),
            _BERNOULLI_TOKENS,
        ),
    ]

    solution = solve_zero_sum(build_leher_matrix())
    row_probs = solution.row_mix.probabilities()
    col_probs = solution.col_mix.probabilities()
    entries += [
        ReportEntry(
            "value of the game under best play",
            Fraction(2831, 5525) + Fraction(3, 4 * 5525),
            solution.value,
            _WALDEGRAVE_MINIMAX,
        ),
        ReportEntry(
            "Paul's chance of switching the 7 under the 3:5 tokens",
            Fraction(3, 8),
            row_probs[0],
            _WALDEGRAVE_MINIMAX,
        ),
        ReportEntry(
            "Paul's chance of holding the 7 under the 3:5 tokens",
            Fraction(5, 8),
            row_probs[1],
            _WALDEGRAVE_MINIMAX,
        ),
        ReportEntry(
            "Pierre's chance of switching the 8 under the 5:3 tokens",
            Fraction(5, 8),
            col_probs[0],
            _WALDEGRAVE_MINIMAX,
        ),
        ReportEntry(
            "Pierre's chance of holding the 8 under the 5:3 tokens",
            Fraction(3, 8),
            col_probs[1],
            _WALDEGRAVE_MINIMAX,
        ),
    ]

    advantage = paul_win_probability(t7, p8) - Fraction(1, 2)
    lot_switch = conditional_lot_paul(7, PaulAction.SWITCH, p8)
    lot_hold_vs_hold = conditional_lot_paul(7, PaulAction.HOLD, p7)
    lot_hold_vs_switch = conditional_lot_paul(7, PaulAction.HOLD, p8)
    entries += [
        ReportEntry(
            "Paul's advantage over an even split",
            Fraction(131, 11050),
            advantage,
            _MONTMORT_1711,
        ),
        ReportEntry(
            "advantage greater than 1 in 85 (1 = holds)",
            Fraction(1),
            _indicator(Fraction(1, 85) < advantage),
            _MONTMORT_1711,
        ),
        ReportEntry(
            "advantage less than 1 in 84 (1 = holds)",
            Fraction(1),
            _indicator(advantage < Fraction(1, 84)),
            _MONTMORT_1711,
        ),
        ReportEntry(
            "Pierre's lot against the pure thresholds (2697 to Paul's 2828)",
            Fraction(2697, 5525),
            pierre_win_probability(t7, p8),
            _BERNOULLI_1711,
        ),
        ReportEntry(
            "difference ratio (780 - 720) to (816 - 780), i.e. 5:3",
            Fraction(5, 3),
            (lot_switch - lot_hold_vs_hold) / (lot_hold_vs_switch - lot_switch),
            _WALDEGRAVE_1712,
        ),
    ]
    return entries


def all_pass(entries: list[ReportEntry]) -> bool:
    return all(entry.passed for entry in entries)


def render_text(entries: list[ReportEntry]) -> str:
    lines = []
    for entry in entries:
        mark = "PASS" if entry.passed else "FAIL"
        lines.append(
            f"[{mark}] {entry.label}: expected {format_rational(entry.expected)}, "
            f"computed {format_rational(entry.computed)}  ({entry.source})"
        )
    passed = sum(entry.passed for entry in entries)
    lines.append(f"{passed}/{len(entries)} historical figures reproduced exactly")
    return "\n".join(lines)


def render_json(entries: list[ReportEntry]) -> str:
    payload = [
        {
            "label": entry.label,
            "expected": format_rational(entry.expected),
            "computed": format_rational(entry.computed),
            "source": entry.source,
            "verdict": entry.verdict,
        }
        for entry in entries
    ]
    return json.dumps(payload, indent=2)


def render_csv(entries: list[ReportEntry]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["label", "expected", "computed", "source", "verdict"])
    for entry in entries:
        writer.writerow(
            [
                entry.label,
                format_rational(entry.expected),
                format_rational(entry.computed),
                entry.source,
                entry.verdict,
            ]
        )
    return buffer.getvalue()

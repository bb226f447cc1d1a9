"""Exact solving of two-player zero-sum matrix games.

Entries are Fractions and everything stays exact: a pure saddle-point check
first, then iterated elimination of strictly dominated pure strategies, then
support enumeration with exact equalisation solves over the reduced matrix.
Every candidate is checked for global optimality, and the final solution is
certified against the original, unreduced matrix before being returned.

The row player maximises; column payoffs are what the row player receives.
Mixed strategies carry raw nonnegative weights (token counts, in the spirit
of the historical bag of black and white tokens) and normalise on demand.
Values are unique; optimal mixes need not be, and ties are broken toward the
lexicographically smallest support sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, NamedTuple

from .rational import as_rational, format_rational, parse_rational


@dataclass(frozen=True)
class GameMatrix:
    """A rectangular payoff matrix to the row player, with labelled strategies."""

    entries: tuple[tuple[Fraction, ...], ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ValueError("matrix rows must all have the same length")
        if len(self.row_labels) != len(self.entries) or len(self.col_labels) != width:
            raise ValueError("label counts must match the matrix shape")

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Iterable[Fraction | int | str]],
        row_labels: Iterable[str] | None = None,
        col_labels: Iterable[str] | None = None,
    ) -> GameMatrix:
        entries = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if not entries or not entries[0]:
            raise ValueError("matrix needs at least one row and one column")
        rl = tuple(row_labels) if row_labels is not None else tuple(
            f"row{i}" for i in range(len(entries))
        )
        cl = tuple(col_labels) if col_labels is not None else tuple(
            f"col{j}" for j in range(len(entries[0]))
        )
        return cls(entries, rl, cl)

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0])

    def payoff(self, row: int, col: int) -> Fraction:
        return self.entries[row][col]

    def column(self, col: int) -> tuple[Fraction, ...]:
        return tuple(row[col] for row in self.entries)

    def negated_transpose(self) -> GameMatrix:
        """The same game seen from the column player's side."""
        rows = [
            [-self.entries[i][j] for i in range(self.n_rows)] for j in range(self.n_cols)
        ]
        return GameMatrix.from_rows(rows, self.col_labels, self.row_labels)

    def to_json_dict(self) -> dict:
        return {
            "rows": list(self.row_labels),
            "cols": list(self.col_labels),
            "entries": [[format_rational(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> GameMatrix:
        rows = [[parse_rational(x) for x in row] for row in data["entries"]]
        return cls.from_rows(rows, data["rows"], data["cols"])

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> GameMatrix:
        return cls.from_json_dict(json.loads(text))


@dataclass(frozen=True)
class MixedStrategy:
    """Nonnegative weights over pure strategies; probabilities derived on demand."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if any(w < 0 for w in self.weights):
            raise ValueError("mixed-strategy weights must be nonnegative")
        if not any(w > 0 for w in self.weights):
            raise ValueError("mixed strategy needs at least one positive weight")

    @classmethod
    def from_weights(cls, weights: Iterable[Fraction | int | str]) -> MixedStrategy:
        return cls(tuple(as_rational(w) for w in weights))

    @classmethod
    def pure(cls, size: int, index: int) -> MixedStrategy:
        if not 0 <= index < size:
            raise ValueError(f"pure-strategy index {index} outside 0..{size - 1}")
        return cls(tuple(Fraction(int(i == index)) for i in range(size)))

    @classmethod
    def from_probabilities(cls, probabilities: Iterable[Fraction]) -> MixedStrategy:
        """Store probabilities as the smallest whole-number token counts."""
        probs = tuple(probabilities)
        scale = lcm(*(p.denominator for p in probs)) if probs else 1
        ints = [int(p * scale) for p in probs]
        divisor = gcd(*ints)
        if divisor > 1:
            ints = [i // divisor for i in ints]
        return cls(tuple(Fraction(i) for i in ints))

    def __len__(self) -> int:
        return len(self.weights)

    def probabilities(self) -> tuple[Fraction, ...]:
        total = sum(self.weights)
        return tuple(w / total for w in self.weights)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, w in enumerate(self.weights) if w > 0)


@dataclass(frozen=True)
class Certificate:
    """Pure-strategy payoffs against the returned mixes.

    row_payoffs[i] is what pure row i earns against the column mix;
    col_payoffs[j] is what the row player earns when column j is played pure
    against the row mix. At an equilibrium with value v, every row payoff is
    at most v and every column payoff at least v, with equality on the
    respective supports.
    """

    row_payoffs: tuple[Fraction, ...]
    col_payoffs: tuple[Fraction, ...]


@dataclass(frozen=True)
class GameSolution:
    value: Fraction
    row_mix: MixedStrategy
    col_mix: MixedStrategy
    certificate: Certificate


class EquilibriumCheck(NamedTuple):
    is_equilibrium: bool
    value: Fraction
    certificate: Certificate


@dataclass(frozen=True)
class EliminationResult:
    """A dominance-reduced game plus the mapping back to original indices."""

    matrix: GameMatrix
    row_indices: tuple[int, ...]
    col_indices: tuple[int, ...]
    mode: str
    #: Strict elimination never changes the game value; weak elimination may.
    value_preserving: bool


# ---------------------------------------------------------------------------
# Exact linear algebra
# ---------------------------------------------------------------------------


def solve_linear_system(
    coefficients: list[list[Fraction]], constants: list[Fraction]
) -> list[Fraction] | None:
    """Solve a square system exactly; None when the matrix is singular.

    Gaussian elimination over Fractions with partial pivoting on exact
    magnitude. Exact arithmetic means pivoting is about determinism, not
    numerical stability.
    """
    size = len(coefficients)
    if any(len(row) != size for row in coefficients) or len(constants) != size:
        raise ValueError("system must be square with a matching constant vector")
    a = [list(row) for row in coefficients]
    b = list(constants)
    for col in range(size):
        pivot = max(range(col, size), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0:
            return None
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        inverse = 1 / a[col][col]
        for r in range(col + 1, size):
            factor = a[r][col] * inverse
            if factor == 0:
                continue
            for k in range(col, size):
                a[r][k] -= factor * a[col][k]
            b[r] -= factor * b[col]
    solution = [Fraction(0)] * size
    for row in range(size - 1, -1, -1):
        acc = b[row]
        for k in range(row + 1, size):
            acc -= a[row][k] * solution[k]
        solution[row] = acc / a[row][row]
    return solution


# ---------------------------------------------------------------------------
# Payoffs, best responses, certificates
# ---------------------------------------------------------------------------


def _row_payoffs(matrix: GameMatrix, col_probs: tuple[Fraction, ...]) -> list[Fraction]:
    return [
        sum(row[j] * col_probs[j] for j in range(matrix.n_cols)) for row in matrix.entries
    ]


def _col_payoffs(matrix: GameMatrix, row_probs: tuple[Fraction, ...]) -> list[Fraction]:
    return [
        sum(row_probs[i] * matrix.entries[i][j] for i in range(matrix.n_rows))
        for j in range(matrix.n_cols)
    ]


def expected_payoff(
    matrix: GameMatrix, row_mix: MixedStrategy, col_mix: MixedStrategy
) -> Fraction:
    """The row player's exact expected payoff under the two mixes."""
    if len(row_mix) != matrix.n_rows or len(col_mix) != matrix.n_cols:
        raise ValueError("mix lengths must match the matrix shape")
    x = row_mix.probabilities()
    payoffs = _row_payoffs(matrix, col_mix.probabilities())
    return sum(x[i] * payoffs[i] for i in range(matrix.n_rows))


def best_response(matrix: GameMatrix, col_mix: MixedStrategy) -> tuple[set[int], Fraction]:
    """All rows maximising the payoff against the column mix, and that payoff.

    Ties are returned as a set, never broken arbitrarily.
    """
    if len(col_mix) != matrix.n_cols:
        raise ValueError(
            f"column mix has {len(col_mix)} weights for a {matrix.n_cols}-column matrix"
        )
    payoffs = _row_payoffs(matrix, col_mix.probabilities())
    top = max(payoffs)
    return {i for i, p in enumerate(payoffs) if p == top}, top


def verify_equilibrium(
    matrix: GameMatrix, row_mix: MixedStrategy, col_mix: MixedStrategy
) -> EquilibriumCheck:
    """Check that no pure deviation improves either player.

    Returns the profile value and the full deviation-payoff certificate
    whether or not the profile is an equilibrium.
    """
    if len(row_mix) != matrix.n_rows or len(col_mix) != matrix.n_cols:
        raise ValueError("mix lengths must match the matrix shape")
    x = row_mix.probabilities()
    row_payoffs = _row_payoffs(matrix, col_mix.probabilities())
    col_payoffs = _col_payoffs(matrix, x)
    value = sum(x[i] * row_payoffs[i] for i in range(matrix.n_rows))
    ok = max(row_payoffs) <= value and min(col_payoffs) >= value
    return EquilibriumCheck(ok, value, Certificate(tuple(row_payoffs), tuple(col_payoffs)))


# ---------------------------------------------------------------------------
# Dominance elimination
# ---------------------------------------------------------------------------


def _dominates(better: list[Fraction], worse: list[Fraction], mode: str) -> bool:
    if mode == "strict":
        return all(x > y for x, y in zip(better, worse))
    return all(x >= y for x, y in zip(better, worse)) and any(
        x > y for x, y in zip(better, worse)
    )


def eliminate_dominated(matrix: GameMatrix, mode: str = "strict") -> EliminationResult:
    """Iteratively remove rows/columns dominated by another pure strategy.

    Rows are dominated when another row pays the row player at least as much
    everywhere (strictly more, in strict mode); columns when another column
    concedes at most as much everywhere. One strategy is removed at a time,
    lowest index first, until nothing is dominated. Strict elimination is
    order independent and value preserving; weak elimination is neither,
    which the result flags.
    """
    if mode not in ("strict", "weak"):
        raise ValueError(f"mode must be 'strict' or 'weak', got {mode!r}")
    rows = list(range(matrix.n_rows))
    cols = list(range(matrix.n_cols))
    entries = matrix.entries

    def row_vector(i: int) -> list[Fraction]:
        return [entries[i][j] for j in cols]

    def col_vector(j: int) -> list[Fraction]:
        return [entries[i][j] for i in rows]

    changed = True
    while changed:
        changed = False
        for i in rows:
            victim = row_vector(i)
            if any(h != i and _dominates(row_vector(h), victim, mode) for h in rows):
                rows.remove(i)
                changed = True
                break
        if changed:
            continue
        for j in cols:
            victim = col_vector(j)
            # The column player pays out the entries, so smaller dominates.
            if any(g != j and _dominates(victim, col_vector(g), mode) for g in cols):
                cols.remove(j)
                changed = True
                break
    reduced = GameMatrix.from_rows(
        [[entries[i][j] for j in cols] for i in rows],
        [matrix.row_labels[i] for i in rows],
        [matrix.col_labels[j] for j in cols],
    )
    return EliminationResult(reduced, tuple(rows), tuple(cols), mode, mode == "strict")


# ---------------------------------------------------------------------------
# Solving
# ---------------------------------------------------------------------------


def _pure_saddle(matrix: GameMatrix) -> tuple[int, int] | None:
    row_mins = [min(row) for row in matrix.entries]
    col_maxs = [max(matrix.column(j)) for j in range(matrix.n_cols)]
    maximin = max(row_mins)
    minimax = min(col_maxs)
    if maximin != minimax:
        return None
    i = row_mins.index(maximin)
    j = col_maxs.index(minimax)
    return i, j


def _equalisation_mix(
    payoffs: list[list[Fraction]], supports: tuple[int, ...], size: int
) -> tuple[list[Fraction], Fraction] | None:
    """Weights making every strategy in `supports` yield the same value.

    `payoffs[k][s]` is what the opponent's pure strategy s in the candidate
    support earns against our k-th supported strategy. Unknowns are our
    weights plus the common value; singular systems mean the candidate
    support cannot equalise and are skipped by the caller.
    """
    k = len(supports)
    coefficients: list[list[Fraction]] = []
    constants: list[Fraction] = []
    for s in range(k):
        coefficients.append([payoffs[t][s] for t in range(k)] + [Fraction(-1)])
        constants.append(Fraction(0))
    coefficients.append([Fraction(1)] * k + [Fraction(0)])
    constants.append(Fraction(1))
    solution = solve_linear_system(coefficients, constants)
    if solution is None:
        return None
    weights = solution[:k]
    if any(w < 0 for w in weights):
        return None
    full = [Fraction(0)] * size
    for index, weight in zip(supports, weights):
        full[index] = weight
    return full, solution[k]


def _support_enumeration(
    matrix: GameMatrix,
) -> tuple[Fraction, tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Exact value and optimal mixes by square-support enumeration.

    Works on a shifted copy with all entries positive, which guarantees an
    equalising square support exists and its system is nonsingular; the
    shift is removed from the value afterwards. Supports are scanned in
    lexicographic order by size, so the first globally optimal candidate has
    the lexicographically smallest supports.
    """
    m, n = matrix.n_rows, matrix.n_cols
    low = min(min(row) for row in matrix.entries)
    shift = Fraction(1) - low if low <= 0 else Fraction(0)
    a = [[x + shift for x in row] for row in matrix.entries]

    for k in range(1, min(m, n) + 1):
        for row_support in combinations(range(m), k):
            for col_support in combinations(range(n), k):
                rows_result = _equalisation_mix(
                    [[a[i][j] for j in col_support] for i in row_support],
                    row_support,
                    m,
                )
                if rows_result is None:
                    continue
                x, value = rows_result
                cols_result = _equalisation_mix(
                    [[a[i][j] for i in row_support] for j in col_support],
                    col_support,
                    n,
                )
                if cols_result is None:
                    continue
                y, col_value = cols_result
                if col_value != value:
                    continue
                # Global optimality: no pure strategy beats the candidate.
                if any(
                    sum(x[i] * a[i][j] for i in row_support) < value for j in range(n)
                ):
                    continue
                if any(
                    sum(a[i][j] * y[j] for j in col_support) > value for i in range(m)
                ):
                    continue
                return value - shift, tuple(x), tuple(y)
    raise RuntimeError("support enumeration found no equilibrium; this cannot happen")


def solve_zero_sum(matrix: GameMatrix) -> GameSolution:
    """Exact minimax value and optimal mixes for a zero-sum matrix game.

    Pure saddle points are returned directly. Otherwise strictly dominated
    strategies are eliminated (which preserves the value and every
    equilibrium), the reduced game is solved by support enumeration, and the
    zero-extended mixes are certified against the original matrix.
    """
    saddle = _pure_saddle(matrix)
    if saddle is not None:
        i, j = saddle
        row_mix = MixedStrategy.pure(matrix.n_rows, i)
        col_mix = MixedStrategy.pure(matrix.n_cols, j)
    else:
        reduced = eliminate_dominated(matrix, "strict")
        value, x_red, y_red = _support_enumeration(reduced.matrix)
        x = [Fraction(0)] * matrix.n_rows
        for index, weight in zip(reduced.row_indices, x_red):
            x[index] = weight
        y = [Fraction(0)] * matrix.n_cols
        for index, weight in zip(reduced.col_indices, y_red):
            y[index] = weight
        row_mix = MixedStrategy.from_probabilities(x)
        col_mix = MixedStrategy.from_probabilities(y)
    check = verify_equilibrium(matrix, row_mix, col_mix)
    if not check.is_equilibrium:
        raise RuntimeError("computed solution failed certification against the original matrix")
    return GameSolution(check.value, row_mix, col_mix, check.certificate)

"""Exact analysis of the two-player card game Le Her.

Pierre deals one card to Paul and one to himself from a standard 52-card
deck (ace low, king high). Paul may force a swap of the two cards, which
Pierre can refuse only when he holds a king. Once Paul has moved, Pierre may
keep his current card or replace it with a fresh draw from the deck, except
that a drawn king must be thrown back and the current card kept. Highest
card takes the pot; ties go to the dealer Pierre.

Strategies are per-rank action tables. The historical analysis centres on
threshold rules ("switch the 7 and under", "hold the 8 and over"), so both
strategy types carry a threshold constructor, but arbitrary tables work too.

One decision node is implicit in the rules and is resolved here the only
sensible way: after a completed swap Pierre holds Paul's former card and has
just handed over his own, so he knows both hands. Standing wins for him
exactly when his new card is at least Paul's (the dealer takes ties), and
drawing is his only hope otherwise. Any other play at that node is strictly
worse. This forced response reproduces every lot quoted in the
Montmort-Bernoulli-Waldegrave correspondence.

All probabilities are exact Fractions obtained by enumerating ordered rank
triples with multiplicity weights over the 52 * 51 * 50 = 132,600 ordered
deals; no floating point anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rational import as_rational
from .solver import GameMatrix

KING = 13
RANK_COUNT = 13
COPIES_PER_RANK = 4
DECK_SIZE = RANK_COUNT * COPIES_PER_RANK
ORDERED_DEALS = DECK_SIZE * (DECK_SIZE - 1) * (DECK_SIZE - 2)

#: Denominator of a lot conditioned on Paul's dealt card (51 cards for
#: Pierre, then 50 for the optional draw).
CONDITIONAL_DEAL_COUNT = (DECK_SIZE - 1) * (DECK_SIZE - 2)


class PaulAction(enum.Enum):
    HOLD = "hold"
    SWITCH = "switch"


class PierreAction(enum.Enum):
    HOLD = "hold"
    DRAW = "draw"


def _check_rank(rank: int) -> int:
    if not isinstance(rank, int) or isinstance(rank, bool) or not 1 <= rank <= RANK_COUNT:
        raise ValueError(f"rank must be an integer in 1..13, got {rank!r}")
    return rank


@dataclass(frozen=True)
class DeckComposition:
    """Copies of each rank remaining in the deck; counts[r - 1] is rank r."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != RANK_COUNT:
            raise ValueError(f"deck needs {RANK_COUNT} rank counts, got {len(self.counts)}")
        for rank0, count in enumerate(self.counts):
            if not 0 <= count <= COPIES_PER_RANK:
                raise ValueError(f"rank {rank0 + 1} count {count} outside 0..{COPIES_PER_RANK}")

    @classmethod
    def standard(cls) -> DeckComposition:
        return cls((COPIES_PER_RANK,) * RANK_COUNT)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def count(self, rank: int) -> int:
        return self.counts[_check_rank(rank) - 1]

    def without(self, *ranks: int) -> DeckComposition:
        """A copy with one card of each given rank removed."""
        counts = list(self.counts)
        for rank in ranks:
            index = _check_rank(rank) - 1
            if counts[index] == 0:
                raise ValueError(f"no copies of rank {rank} left to remove")
            counts[index] -= 1
        return DeckComposition(tuple(counts))


def _parse_action_string(text: str, yes_letters: str) -> tuple[bool, ...]:
    if len(text) != RANK_COUNT:
        raise ValueError(f"action string must be {RANK_COUNT} characters, got {text!r}")
    flags = []
    for letter in text.upper():
        if letter in yes_letters:
            flags.append(True)
        elif letter == "H":
            flags.append(False)
        else:
            raise ValueError(f"bad action letter {letter!r} in {text!r}")
    return tuple(flags)


def _threshold_flags(threshold: int) -> tuple[bool, ...]:
    if not 0 <= threshold <= RANK_COUNT:
        raise ValueError(f"threshold must be in 0..13, got {threshold}")
    return tuple(rank <= threshold for rank in range(1, RANK_COUNT + 1))


def _threshold_of(flags: tuple[bool, ...]) -> int | None:
    """The threshold t when flags act on exactly the ranks 1..t, else None."""
    t = 0
    while t < RANK_COUNT and flags[t]:
        t += 1
    if any(flags[t:]):
        return None
    return t


@dataclass(frozen=True)
class PaulStrategy:
    """Paul's plan for his dealt card: switch[r - 1] is True when rank r is swapped."""

    switch: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.switch) != RANK_COUNT or not all(isinstance(f, bool) for f in self.switch):
            raise ValueError("strategy needs one boolean per rank 1..13")

    @classmethod
    def threshold(cls, threshold: int) -> PaulStrategy:
        """Switch every rank up to `threshold`, hold above (0 = never switch)."""
        return cls(_threshold_flags(threshold))

    @classmethod
    def parse(cls, text: str) -> PaulStrategy:
        """Accepts "threshold:t" or a 13-letter table like "SSSSSSSHHHHHH"."""
        body = text.strip()
        if body.lower().startswith("threshold:"):
            return cls.threshold(int(body.split(":", 1)[1]))
        return cls(_parse_action_string(body, "S"))

    def action(self, rank: int) -> PaulAction:
        return PaulAction.SWITCH if self.switch[_check_rank(rank) - 1] else PaulAction.HOLD

    @property
    def threshold_value(self) -> int | None:
        return _threshold_of(self.switch)

    def serialize(self) -> str:
        t = self.threshold_value
        if t is not None:
            return f"threshold:{t}"
        return "".join("S" if f else "H" for f in self.switch)


@dataclass(frozen=True)
class PierreStrategy:
    """Pierre's plan at his free node (Paul stood): draw[r - 1] is True when rank r redraws."""

    draw: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.draw) != RANK_COUNT or not all(isinstance(f, bool) for f in self.draw):
            raise ValueError("strategy needs one boolean per rank 1..13")

    @classmethod
    def threshold(cls, threshold: int) -> PierreStrategy:
        """Draw on every rank up to `threshold`, hold above (0 = never draw)."""
        return cls(_threshold_flags(threshold))

    @classmethod
    def parse(cls, text: str) -> PierreStrategy:
        """Accepts "threshold:t" or a 13-letter table; D (or S) = draw, H = hold."""
        body = text.strip()
        if body.lower().startswith("threshold:"):
            return cls.threshold(int(body.split(":", 1)[1]))
        return cls(_parse_action_string(body, "DS"))

    def action(self, rank: int) -> PierreAction:
        return PierreAction.DRAW if self.draw[_check_rank(rank) - 1] else PierreAction.HOLD

    @property
    def threshold_value(self) -> int | None:
        return _threshold_of(self.draw)

    def serialize(self) -> str:
        t = self.threshold_value
        if t is not None:
            return f"threshold:{t}"
        return "".join("D" if f else "H" for f in self.draw)


# ---------------------------------------------------------------------------
# Game law
# ---------------------------------------------------------------------------


def _before_draw(
    paul_card: int,
    pierre_card: int,
    paul: PaulStrategy,
    pierre: PierreStrategy,
) -> tuple[int, int, bool]:
    """Both decisions up to Pierre's optional redraw.

    Returns (paul_final, pierre_current, pierre_draws). When pierre_draws is
    False the deal is settled and pierre_current is Pierre's final card.
    """
    if paul.switch[paul_card - 1]:
        if pierre_card == KING:
            # Swap refused; Pierre stands on the king.
            return paul_card, KING, False
        # Swap completed: Pierre holds paul_card and knows Paul holds
        # pierre_card, so his response is forced (dealer keeps ties).
        if paul_card >= pierre_card:
            return pierre_card, paul_card, False
        return pierre_card, paul_card, True
    if pierre.draw[pierre_card - 1]:
        return paul_card, pierre_card, True
    return paul_card, pierre_card, False


def resolve_deal(
    paul_card: int,
    pierre_card: int,
    replacement: int,
    paul: PaulStrategy,
    pierre: PierreStrategy,
) -> tuple[int, int]:
    """Final (paul_card, pierre_card) for one ordered three-card deal.

    `replacement` is the next card of the deck; it only matters when the play
    reaches Pierre's redraw, and a replacement king is thrown back.
    """
    for card in (paul_card, pierre_card, replacement):
        _check_rank(card)
    paul_final, pierre_current, draws = _before_draw(paul_card, pierre_card, paul, pierre)
    if draws and replacement != KING:
        return paul_final, replacement
    return paul_final, pierre_current


def paul_wins_deal(
    paul_card: int,
    pierre_card: int,
    replacement: int,
    paul: PaulStrategy,
    pierre: PierreStrategy,
) -> bool:
    """True exactly when Paul takes the pot (Pierre keeps ties)."""
    paul_final, pierre_final = resolve_deal(paul_card, pierre_card, replacement, paul, pierre)
    return paul_final > pierre_final


# ---------------------------------------------------------------------------
# Exact enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _win_weights(paul: PaulStrategy, pierre: PierreStrategy) -> tuple[int, int]:
    """Integer win weights (Paul's, Pierre's) over the 132,600 ordered deals.

    Each player's weight is accumulated by its own predicate (strictly higher
    for Paul, at-least for Pierre) rather than as each other's complement, so
    the complementarity law checked in the tests is a real property of the
    enumeration, not an accounting identity.
    """
    paul_weight = 0
    pierre_weight = 0
    for a in range(1, RANK_COUNT + 1):
        for b in range(1, RANK_COUNT + 1):
            weight_ab = COPIES_PER_RANK * (COPIES_PER_RANK - (b == a))
            paul_final, pierre_current, draws = _before_draw(a, b, paul, pierre)
            if not draws:
                # The unseen third card cannot matter: 50 equal outcomes.
                if paul_final > pierre_current:
                    paul_weight += weight_ab * (DECK_SIZE - 2)
                if pierre_current >= paul_final:
                    pierre_weight += weight_ab * (DECK_SIZE - 2)
                continue
            for c in range(1, RANK_COUNT + 1):
                weight_c = COPIES_PER_RANK - (c == a) - (c == b)
                pierre_final = pierre_current if c == KING else c
                if paul_final > pierre_final:
                    paul_weight += weight_ab * weight_c
                if pierre_final >= paul_final:
                    pierre_weight += weight_ab * weight_c
    return paul_weight, pierre_weight


def paul_win_probability(paul: PaulStrategy, pierre: PierreStrategy) -> Fraction:
    """Paul's exact lot for a strategy pair on the full 52-card deck."""
    return Fraction(_win_weights(paul, pierre)[0], ORDERED_DEALS)


def pierre_win_probability(paul: PaulStrategy, pierre: PierreStrategy) -> Fraction:
    """Pierre's exact lot; ties go to him, so this complements Paul's exactly."""
    return Fraction(_win_weights(paul, pierre)[1], ORDERED_DEALS)


def conditional_lot_paul(card: int, action: PaulAction, pierre: PierreStrategy) -> Fraction:
    """Paul's winning lot given his dealt card and his chosen action.

    Enumerates Pierre's 51 possible cards and, where a redraw happens, the 50
    possible replacements; the result has denominator dividing 51 * 50.
    When the action is SWITCH the answer does not depend on `pierre`, since
    Pierre's post-swap response is forced by the rules.
    """
    _check_rank(card)
    if not isinstance(action, PaulAction):
        raise ValueError(f"expected a PaulAction, got {action!r}")
    paul = PaulStrategy.threshold(RANK_COUNT if action is PaulAction.SWITCH else 0)
    win = 0
    for b in range(1, RANK_COUNT + 1):
        weight_b = COPIES_PER_RANK - (b == card)
        paul_final, pierre_current, draws = _before_draw(card, b, paul, pierre)
        if not draws:
            if paul_final > pierre_current:
                win += weight_b * (DECK_SIZE - 2)
            continue
        for c in range(1, RANK_COUNT + 1):
            weight_c = COPIES_PER_RANK - (c == card) - (c == b)
            pierre_final = pierre_current if c == KING else c
            if paul_final > pierre_final:
                win += weight_b * weight_c
    return Fraction(win, CONDITIONAL_DEAL_COUNT)


def conditional_lot_pierre(card: int, action: PierreAction, paul: PaulStrategy) -> Fraction:
    """Pierre's winning lot given his card, conditioned on Paul having stood.

    The conditioning event is "Paul was dealt a rank he holds under `paul`,
    and Pierre then drew `card`": with Paul holding h ranks that leaves
    4h - 1 or 4h stand-cards out of 51 (one fewer when `card` is itself a
    stand rank). That count times 50 is the denominator before reduction,
    which is how the historical 23 * 50 and 27 * 50 totals arise.
    """
    _check_rank(card)
    if not isinstance(action, PierreAction):
        raise ValueError(f"expected a PierreAction, got {action!r}")
    pierre = PierreStrategy.threshold(RANK_COUNT if action is PierreAction.DRAW else 0)
    stand_weights = [
        (a, COPIES_PER_RANK - (a == card))
        for a in range(1, RANK_COUNT + 1)
        if not paul.switch[a - 1]
    ]
    total = sum(weight for _, weight in stand_weights)
    if total == 0:
        raise ValueError("conditioning event impossible: Paul never stands under this strategy")
    win = 0
    for a, weight_a in stand_weights:
        paul_final, pierre_current, draws = _before_draw(a, card, paul, pierre)
        if not draws:
            if pierre_current >= paul_final:
                win += weight_a * (DECK_SIZE - 2)
            continue
        for c in range(1, RANK_COUNT + 1):
            weight_c = COPIES_PER_RANK - (c == a) - (c == card)
            pierre_final = pierre_current if c == KING else c
            if pierre_final >= paul_final:
                win += weight_a * weight_c
    return Fraction(win, total * (DECK_SIZE - 2))


# ---------------------------------------------------------------------------
# Mixing over the four historical strategies
# ---------------------------------------------------------------------------

#: Row strategies of the historical table: switch the 7, hold the 7.
PAUL_TABLE_STRATEGIES = (PaulStrategy.threshold(7), PaulStrategy.threshold(6))
#: Column strategies: switch the 8, hold the 8.
PIERRE_TABLE_STRATEGIES = (PierreStrategy.threshold(8), PierreStrategy.threshold(7))

PAUL_TABLE_LABELS = ("switch the 7", "hold the 7")
PIERRE_TABLE_LABELS = ("switch the 8", "hold the 8")


@lru_cache(maxsize=None)
def build_leher_matrix() -> GameMatrix:
    """The 2x2 table of Paul's lots over the four crucial strategy pairs.

    Rows are Paul's "switch the 7" then "hold the 7"; columns are Pierre's
    "switch the 8" then "hold the 8"; entries come straight from the exact
    enumeration.
    """
    rows = [
        [paul_win_probability(paul, pierre) for pierre in PIERRE_TABLE_STRATEGIES]
        for paul in PAUL_TABLE_STRATEGIES
    ]
    return GameMatrix.from_rows(rows, PAUL_TABLE_LABELS, PIERRE_TABLE_LABELS)


@lru_cache(maxsize=None)
def threshold_matrix() -> GameMatrix:
    """Paul's lot for every threshold pair (t_paul, t_pierre) in 0..13 squared."""
    paul_strategies = [PaulStrategy.threshold(t) for t in range(RANK_COUNT + 1)]
    pierre_strategies = [PierreStrategy.threshold(t) for t in range(RANK_COUNT + 1)]
    rows = [
        [paul_win_probability(paul, pierre) for pierre in pierre_strategies]
        for paul in paul_strategies
    ]
    labels = tuple(f"threshold:{t}" for t in range(RANK_COUNT + 1))
    return GameMatrix.from_rows(rows, labels, labels)


def _check_probability(name: str, value: Fraction) -> Fraction:
    if not 0 <= value <= 1:
        raise ValueError(f"{name} must be a probability in [0, 1], got {value}")
    return value


def conditional_mixed_lot_paul7(
    p_switch: Fraction | int | str,
    p_pierre_draw8: Fraction | int | str,
) -> Fraction:
    """Paul's lot with a seven when both players randomise the disputed cards.

    Paul switches the seven with probability `p_switch`; if he stood, Pierre
    redraws his eight with probability `p_pierre_draw8`. Composed from the
    conditional lots, not from stored constants.
    """
    p_switch = _check_probability("p_switch", as_rational(p_switch))
    p_draw = _check_probability("p_pierre_draw8", as_rational(p_pierre_draw8))
    lot_switch = conditional_lot_paul(7, PaulAction.SWITCH, PierreStrategy.threshold(8))
    lot_hold_vs_draw = conditional_lot_paul(7, PaulAction.HOLD, PierreStrategy.threshold(8))
    lot_hold_vs_hold = conditional_lot_paul(7, PaulAction.HOLD, PierreStrategy.threshold(7))
    lot_hold = p_draw * lot_hold_vs_draw + (1 - p_draw) * lot_hold_vs_hold
    return p_switch * lot_switch + (1 - p_switch) * lot_hold


def mixed_value(
    a: Fraction | int | str,
    b: Fraction | int | str,
    c: Fraction | int | str,
    d: Fraction | int | str,
) -> Fraction:
    """Paul's lot when both sides mix the four table strategies by weight.

    Paul plays "switch the 7" with weight a and "hold the 7" with weight b;
    Pierre plays "switch the 8" with weight c and "hold the 8" with weight d.
    Weights need not be normalised; the value is invariant under positive
    rescaling of (a, b) and of (c, d). The coefficients are read from the
    computed table, and the normalisation is (a + b)(c + d), which is what
    makes the constant-value claims of the correspondence come out.
    """
    a, b, c, d = (as_rational(x) for x in (a, b, c, d))
    for name, weight in zip("abcd", (a, b, c, d)):
        if weight < 0:
            raise ValueError(f"weight {name} must be nonnegative, got {weight}")
    if a + b == 0:
        raise ValueError("Paul's weights a + b must be positive")
    if c + d == 0:
        raise ValueError("Pierre's weights c + d must be positive")
    table = build_leher_matrix()
    numerator = (
        a * c * table.entries[0][0]
        + a * d * table.entries[0][1]
        + b * c * table.entries[1][0]
        + b * d * table.entries[1][1]
    )
    return numerator / ((a + b) * (c + d))

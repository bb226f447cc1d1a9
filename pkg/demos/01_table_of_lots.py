"""The table of Paul's lots, and why the middle cards are the whole dispute.

Le Her in one paragraph: Pierre deals Paul a card, then himself one. Paul may
force a swap (refused only against a king); then Pierre may redraw (a drawn
king goes back). Highest card wins, ties to the dealer. Low cards are
obviously switched and high ones obviously held; the fight is over Paul's
seven and Pierre's eight. This script recomputes, by exact enumeration of all
52 * 51 * 50 ordered deals, the four-cell table of Paul's winning chances
over those two disputed decisions.
"""

from fractions import Fraction

from montmort import (
    PaulStrategy,
    PierreStrategy,
    build_leher_matrix,
    paul_win_probability,
    pierre_win_probability,
)
from montmort.rational import approx_string, format_rational

table = build_leher_matrix()

print("Paul's winning lot for the four crucial strategy pairs:\n")
header = " " * 14 + "".join(label.rjust(16) for label in table.col_labels)
print(header)
for label, row in zip(table.row_labels, table.entries):
    print(label.ljust(14) + "".join(format_rational(x).rjust(16) for x in row))

print()
print("(fractions are in lowest terms: 218/425 is 2834/5525)")
print("Every cell sits a little above 1/2: moving first is worth something,")
print("even though ties go to the dealer.")
best_pure = paul_win_probability(PaulStrategy.threshold(7), PierreStrategy.threshold(8))
advantage = best_pure - Fraction(1, 2)
print(f"At the pure thresholds Paul wins {approx_string(best_pure)},")
print(f"an edge of {approx_string(advantage)} over an even split.")
print(f"Montmort's 1711 bracket: 1/85 < edge < 1/84 ->",
      Fraction(1, 85) < advantage < Fraction(1, 84))

pierre = pierre_win_probability(PaulStrategy.threshold(7), PierreStrategy.threshold(8))
print(f"\nPierre's complementary lot is {format_rational(pierre)}:")
print(f"the famous ratio {pierre.numerator} to {best_pure.numerator}, summing to "
      f"{pierre.numerator + best_pure.numerator} = {best_pure.denominator} exactly.")

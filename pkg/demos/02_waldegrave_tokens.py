"""Waldegrave's conditional lots and the 3:5 bag of tokens.

The argument that cracked the game open ran on lots *conditioned on the
disputed card*. Holding a seven, Paul wins 780/2550 by switching, but 720 or
816 (out of 2550) by holding, depending on what Pierre does with an eight.
Since 780 - 720 and 816 - 780 stand as 60:36 = 5:3, no pure rule is safe:
whatever maxim Paul fixes, Pierre profits by reacting, and round it goes.
The way out is chance itself: draw tokens from a bag, 3 black to 5 white,
switch on black. This script recomputes the lots, the ratio, and the mixed
value that no opponent can touch.
"""

import random
from fractions import Fraction

from montmort import (
    PaulAction,
    PaulStrategy,
    PierreAction,
    PierreStrategy,
    build_leher_matrix,
    conditional_lot_paul,
    conditional_lot_pierre,
    conditional_mixed_lot_paul7,
    mixed_value,
    solve_zero_sum,
)
from montmort.rational import approx_string, format_rational

P8, P7 = PierreStrategy.threshold(8), PierreStrategy.threshold(7)
T7, T6 = PaulStrategy.threshold(7), PaulStrategy.threshold(6)

print("Paul holding a seven:")
switch = conditional_lot_paul(7, PaulAction.SWITCH, P8)
hold_vs_hold = conditional_lot_paul(7, PaulAction.HOLD, P7)
hold_vs_switch = conditional_lot_paul(7, PaulAction.HOLD, P8)
print(f"  switching:                      {format_rational(switch)}  (= 780/2550)")
print(f"  holding, Pierre holds his 8:    {format_rational(hold_vs_hold)}  (= 720/2550)")
print(f"  holding, Pierre switches his 8: {format_rational(hold_vs_switch)}  (= 816/2550)")
ratio = (switch - hold_vs_hold) / (hold_vs_switch - switch)
print(f"  difference ratio (780-720):(816-780) = {format_rational(ratio)}  (5:3)\n")

print("Pierre holding an eight (given Paul stood):")
print(f"  vs Paul holding above a 7: hold {format_rational(conditional_lot_pierre(8, PierreAction.HOLD, T7))},"
      f" draw {format_rational(conditional_lot_pierre(8, PierreAction.DRAW, T7))}")
print(f"  vs Paul holding the 7 too: hold {format_rational(conditional_lot_pierre(8, PierreAction.HOLD, T6))},"
      f" draw {format_rational(conditional_lot_pierre(8, PierreAction.DRAW, T6))}\n")

print("Bernoulli's equal-token proposal gives Paul, with a seven,")
print(f"  {approx_string(conditional_mixed_lot_paul7(Fraction(1, 2), Fraction(1, 2)))}")
print("which loses to simply always switching:")
print(f"  {approx_string(conditional_mixed_lot_paul7(Fraction(1), Fraction(0)))}")
print("so an even bag cannot be the answer either.\n")

solution = solve_zero_sum(build_leher_matrix())
print(f"The solved bag: Paul mixes {format_rational(solution.row_mix.weights[0])}:"
      f"{format_rational(solution.row_mix.weights[1])} on (switch, hold) the 7,")
print(f"Pierre {format_rational(solution.col_mix.weights[0])}:"
      f"{format_rational(solution.col_mix.weights[1])} on (switch, hold) the 8,")
print(f"locking the value at {approx_string(solution.value)} = 2831/5525 + 3/(4*5525).\n")

rng = random.Random(0)
print("No matter what Pierre weighs his tokens, 3:5 keeps Paul at the value:")
for _ in range(4):
    c, d = rng.randint(0, 20), rng.randint(0, 20)
    if c + d == 0:
        c = 1
    print(f"  mixed_value(3, 5, {c:2d}, {d:2d}) = {format_rational(mixed_value(3, 5, c, d))}")

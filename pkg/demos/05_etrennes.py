"""Les Etrennes: four ecus for guessing even, one for guessing odd.

A father hides an odd or even number of tokens; a correct "even" guess earns
the son four ecus, a correct "odd" one ecu, a miss nothing. The same
strategic knot as Le Her in miniature: any fixed guessing habit can be read
and punished, and the cure is again a weighted bag of tokens. With prizes
(e, o) the solved value is e*o/(e+o), both players weighting "even" by o and
"odd" by e; far better than the min(e, o)/2 a fair coin can guarantee.
"""

from fractions import Fraction

from montmort import EtrennesConfig, etrennes_matrix, etrennes_solve
from montmort.rational import approx_string, format_rational

config = EtrennesConfig()
matrix = etrennes_matrix(config)
print("payoff to the son (rows: his guess; columns: the hand's parity):")
for label, row in zip(matrix.row_labels, matrix.entries):
    print(f"  {label:>5}: " + "  ".join(format_rational(x) for x in row))

solution = etrennes_solve(config)
print(f"\nvalue {approx_string(solution.value)} with the son guessing even:odd at "
      f"{solution.row_mix.weights[0]}:{solution.row_mix.weights[1]}")
coin = min(config.even_prize, config.odd_prize) / 2
print(f"a fair coin would guarantee only {format_rational(coin)}\n")

print("sweeping the prizes (value = e*o/(e+o), mixes weight even by o, odd by e):")
for even, odd in [(1, 1), (2, 3), (9, 1), (Fraction(7, 2), Fraction(1, 3))]:
    swept = etrennes_solve(EtrennesConfig(even, odd))
    closed = swept.value == Fraction(even) * Fraction(odd) / (Fraction(even) + Fraction(odd))
    print(f"  prizes ({format_rational(Fraction(even))}, {format_rational(Fraction(odd))}):"
          f" value {format_rational(swept.value)},"
          f" son mixes {swept.row_mix.weights[0]}:{swept.row_mix.weights[1]},"
          f" closed form agrees: {closed}")

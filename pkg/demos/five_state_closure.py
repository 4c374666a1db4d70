"""Roots of Y^2 + (1+X) Y + X^2 over F_2 as a five-state automaton.

The Cartier closure of the formal root under Lambda_0, Lambda_1 produces
states i, a, b, c and a zero sink; both series roots share the skeleton and
differ only in the attached outputs.  The closure works with formal
combinations r_0(X) f + r_1(X) f^2 whose coefficients may have X-power
poles; evaluating them on a lifted branch shows every state is a genuine
power series.
"""

from algseries import (GF, cartier_closure, eval_bipoly_at_series, export_dot,
                       frobenius_from_poly, parse_poly, roots_automata)

F2 = GF(2)
Q = parse_poly("Y^2+(1+X)*Y+X^2", F2)

relation = frobenius_from_poly(Q)
print("annihilating relation:", relation.to_text())

skeleton = cartier_closure(relation)
print(f"\nclosure skeleton ({skeleton.n_states} states):")
for i, elem in enumerate(skeleton.states):
    targets = skeleton.transitions[i]
    print(f"  state {i}: {elem.to_text()}   (0 -> {targets[0]}, 1 -> {targets[1]})")

outcome = roots_automata(Q, 64)
for branch, automaton in outcome.branches:
    print(f"\nbranch a0 = {branch.a0!r}:")
    print("  first coefficients:", branch.series.coeffs[:12])
    print("  outputs per state: ",
          [branch.outputs[i].raw for i in range(skeleton.n_states)])
    residue = eval_bipoly_at_series(Q, automaton.generate(64))
    print("  Q(X, generated) == 0:", residue.is_zero())

print("\nminimized branch-0 automaton:")
print(export_dot(outcome.branches[0][1]))

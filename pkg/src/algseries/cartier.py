"""Cartier (digit-section) operators and the kernel closure for P/Q.

Over F_q, Lambda_{r,s} maps sum a_{m,n} X^m Y^n to sum a_{mq+r, nq+s} X^m Y^n
and satisfies Lambda_{r,s}(A^q B) = A * Lambda_{r,s}(B).  For a rational
series P/Q with Q(0,0) != 0 that identity pins the denominator:

    Lambda_{r,s}(R/Q) = Lambda_{r,s}(R Q^(q-1) / Q^q) = Lambda_{r,s}(R Q^(q-1)) / Q

so the q-kernel closure only ever tracks numerators, and the numerator
degree contracts to below deg P + deg Q after one step.  The closure is a
2-D automaton over digit pairs; restricting to equal pairs (r, r) yields the
digit automaton of the diagonal sequence [X^n Y^n](P/Q).
"""

from dataclasses import dataclass, field as dc_field

from .algebra.fields import FieldElement
from .algebra.polys import BiPoly, RationalFn, UniPoly
from .automaton import DFAO
from .errors import (DigitOutOfRange, InfiniteField, StateBudgetExceeded,
                     ZeroConstantTerm)

STATE_BUDGET = 100000  # guard only; theory bounds every closure


def _digit_base(field):
    if not field.is_finite:
        raise InfiniteField("Cartier operators require a finite field")
    return field.order


def _check_digit(r, q):
    if not 0 <= r < q:
        raise DigitOutOfRange(f"digit {r} outside 0..{q - 1}")


def cartier_uni(A, r):
    """Univariate digit section: [X^n]result = [X^(qn+r)]A.

    For a rational function the section is taken through the identity
    Lambda_r(num/den) = Lambda_r(num * den^(q-1)) / den and renormalized.
    """
    if isinstance(A, RationalFn):
        q = _digit_base(A.field)
        _check_digit(r, q)
        num = A.num * A.den ** (q - 1)
        return RationalFn(cartier_uni(num, r), A.den)
    q = _digit_base(A.field)
    _check_digit(r, q)
    return UniPoly(A.field, A.coeffs[r::q], A.var)


def cartier_bi(A, r, s):
    """Bivariate digit section: [X^m Y^n]result = [X^(mq+r) Y^(nq+s)]A."""
    q = _digit_base(A.field)
    _check_digit(r, q)
    _check_digit(s, q)
    out = {}
    for (i, j), c in A.terms.items():
        if i % q == r and j % q == s:
            out[(i // q, j // q)] = c
    return BiPoly(A.field, out)


@dataclass(frozen=True)
class KernelState:
    """Numerator R of a kernel element R/Q (Q fixed by the closure)."""

    numerator: BiPoly

    @property
    def key(self):
        return self.numerator.key()


@dataclass
class KernelAutomaton2D:
    """Closure of P/Q under all q^2 digit sections.

    ``transitions[state][r + q*s]`` follows Lambda_{r,s}; every non-initial
    state has total degree < ``degree_bound`` = deg P + deg Q.
    """

    q: int
    den: BiPoly
    states: list
    transitions: list
    degree_bound: int
    initial: int = 0
    field: object = dc_field(default=None)

    def __post_init__(self):
        if self.field is None:
            self.field = self.den.field

    @property
    def n_states(self):
        return len(self.states)

    def output(self, index):
        return kernel_output(self.states[index], self.den)

    def to_dfao(self):
        outputs = [self.output(i).raw for i in range(self.n_states)]
        labels = [st.numerator.to_text() for st in self.states]
        return DFAO(self.q, self.field, self.initial, self.transitions,
                    outputs, labels, arity=2)

    def coefficient(self, m, n):
        """[X^m Y^n](P/Q) by running digit pairs of (m, n)."""
        return self.to_dfao().run((m, n))


def rational_kernel(P, Q, state_budget=STATE_BUDGET):
    """Kernel closure of P/Q over F_q; requires Q(0,0) != 0."""
    q = _digit_base(Q.field)
    if not Q.terms.get((0, 0)):
        raise ZeroConstantTerm("Q(0,0) must be nonzero")
    bound = max(P.total_degree, 0) + Q.total_degree
    Qq1 = Q ** (q - 1)
    states = [KernelState(P)]
    index = {P.key(): 0}
    transitions = []
    head = 0
    while head < len(states):
        R = states[head].numerator
        head += 1
        RQ = R * Qq1
        row = []
        for symbol in range(q * q):
            r, s = symbol % q, symbol // q
            image = cartier_bi(RQ, r, s)
            key = image.key()
            target = index.get(key)
            if target is None:
                target = len(states)
                if target >= state_budget:
                    raise StateBudgetExceeded(
                        f"kernel closure exceeded {state_budget} states")
                index[key] = target
                states.append(KernelState(image))
            row.append(target)
        transitions.append(row)
    return KernelAutomaton2D(q=q, den=Q, states=states, transitions=transitions,
                             degree_bound=bound)


def kernel_output(state, Q):
    """Constant coefficient u_{0,0} of the state's series, R(0,0)/Q(0,0)."""
    R = state.numerator if isinstance(state, KernelState) else state
    f = Q.field
    q00 = Q.terms.get((0, 0))
    if not q00:
        raise ZeroConstantTerm("Q(0,0) must be nonzero")
    r0 = R.terms.get((0, 0), f.zero)
    return FieldElement(f, f.div(r0, q00))


def diagonal_automaton(aut):
    """Digit automaton of the diagonal sequence [X^n Y^n](P/Q)."""
    q = aut.q
    transitions = [[row[r + q * r] for r in range(q)] for row in aut.transitions]
    outputs = [aut.output(i).raw for i in range(aut.n_states)]
    labels = [st.numerator.to_text() for st in aut.states]
    return DFAO(q, aut.field, aut.initial, transitions, outputs, labels, arity=1)

"""Deterministic finite automata with output (DFAO).

A DFAO reads the base-q digits of an index least-significant-digit first
(n = 0 reads the empty word) and emits the output of the final state; this
is the one digit convention used across the toolkit.  ``arity`` 1 gives the
classic digit automaton; ``arity`` 2 reads digit *pairs* (r, s), encoded as
the symbol r + q*s, and indexes coefficients of bivariate series.  Outputs
are field elements so automata compose with the series modules directly.

Every automaton this toolkit synthesizes has outputs constant along its
0-transitions (outputs are constant terms of kernel elements, which the
digit-0 section preserves), so padding an index with leading zeros cannot
change the result and the kernel identity u_{qn+r} = (run from the r-image
of the initial state)(n) holds for every n including 0.

Persistence is a JSON document, rendering is Graphviz DOT; both are
deterministic byte-for-byte for a given automaton.
"""

import json

from .algebra.fields import GF, QQ, FieldElement
from .algebra.series import TruncSeries1
from .errors import AlgSeriesError, SchemaError
from .exprparse import parse_unipoly


class DFAO:
    """Immutable automaton: transitions[state][symbol] -> state."""

    __slots__ = ("q", "arity", "field", "initial", "transitions", "outputs",
                 "labels")

    def __init__(self, q, field, initial, transitions, outputs, labels=None,
                 arity=1):
        if q < 2:
            raise AlgSeriesError("digit base must be >= 2")
        nsym = q ** arity
        transitions = tuple(tuple(row) for row in transitions)
        nstates = len(transitions)
        for row in transitions:
            if len(row) != nsym or any(not 0 <= t < nstates for t in row):
                raise AlgSeriesError("transition table is not total")
        if len(outputs) != nstates:
            raise AlgSeriesError("one output per state required")
        if not 0 <= initial < nstates:
            raise AlgSeriesError("initial state out of range")
        self.q = q
        self.arity = arity
        self.field = field
        self.initial = initial
        self.transitions = transitions
        self.outputs = tuple(outputs)
        self.labels = tuple(labels) if labels is not None else None

    @property
    def n_states(self):
        return len(self.transitions)

    def output_element(self, state):
        return FieldElement(self.field, self.outputs[state])

    def _digits(self, n):
        digits = []
        while n:
            n, r = divmod(n, self.q)
            digits.append(r)
        return digits

    def run_raw(self, n):
        """Raw output value at index n (int, or an (m, n) pair if arity 2)."""
        state = self.initial
        delta = self.transitions
        if self.arity == 1:
            for d in self._digits(n):
                state = delta[state][d]
        else:
            m, n = n
            dm, dn = self._digits(m), self._digits(n)
            if len(dm) < len(dn):
                dm += [0] * (len(dn) - len(dm))
            else:
                dn += [0] * (len(dm) - len(dn))
            for r, s in zip(dm, dn):
                state = delta[state][r + self.q * s]
        return self.outputs[state]

    def run(self, n):
        """Output at index n as a FieldElement."""
        return FieldElement(self.field, self.run_raw(n))

    def generate(self, count):
        """TruncSeries1 with c_n = run(n) for 0 <= n <= count (arity 1)."""
        if self.arity != 1:
            raise AlgSeriesError("generate needs a one-dimensional automaton")
        return TruncSeries1(self.field,
                            [self.run_raw(n) for n in range(count + 1)], count)

    def reroot(self, state):
        """Same automaton started at ``state`` (kernel subsequence view)."""
        return DFAO(self.q, self.field, state, self.transitions, self.outputs,
                    self.labels, self.arity)

    def minimize(self):
        """Moore partition refinement; outputs form the initial partition.

        The result keeps only states reachable from the initial state and
        numbers them in breadth-first order (digits ascending), so equal
        automata minimize to byte-identical objects.
        """
        nsym = self.q ** self.arity
        # reachable states first: minimization must not let dead states
        # split live blocks
        reach = [self.initial]
        seen = {self.initial}
        for s in reach:
            for t in self.transitions[s]:
                if t not in seen:
                    seen.add(t)
                    reach.append(t)
        block = {}
        by_output = {}
        for s in reach:
            key = by_output.setdefault(self.outputs[s], len(by_output))
            block[s] = key
        nblocks = len(by_output)
        while True:
            signatures = {}
            nxt = {}
            for s in reach:
                sig = (block[s],) + tuple(block[self.transitions[s][a]]
                                          for a in range(nsym))
                idx = signatures.setdefault(sig, len(signatures))
                nxt[s] = idx
            if len(signatures) == nblocks:
                block = nxt
                break
            block, nblocks = nxt, len(signatures)
        # canonical BFS numbering of blocks
        order = {}
        queue = [self.initial]
        order[block[self.initial]] = 0
        rep = {block[self.initial]: self.initial}
        head = 0
        while head < len(queue):
            s = queue[head]
            head += 1
            for a in range(nsym):
                t = self.transitions[s][a]
                b = block[t]
                if b not in order:
                    order[b] = len(order)
                    rep[b] = t
                    queue.append(t)
        transitions = []
        outputs = []
        labels = [] if self.labels is not None else None
        for b, _ in sorted(order.items(), key=lambda kv: kv[1]):
            s = rep[b]
            transitions.append(tuple(order[block[self.transitions[s][a]]]
                                     for a in range(nsym)))
            outputs.append(self.outputs[s])
            if labels is not None:
                labels.append(self.labels[s])
        return DFAO(self.q, self.field, 0, transitions, outputs, labels,
                    self.arity)

    def __eq__(self, other):
        """Structural equality; labels are cosmetic and not compared."""
        return (isinstance(other, DFAO) and other.q == self.q
                and other.arity == self.arity and other.field == self.field
                and other.initial == self.initial
                and other.transitions == self.transitions
                and other.outputs == self.outputs)

    def __hash__(self):
        return hash((self.q, self.arity, self.field, self.initial,
                     self.transitions, self.outputs))

    def __repr__(self):
        return (f"DFAO(q={self.q}, arity={self.arity}, "
                f"states={self.n_states}, field={self.field!r})")


def _symbol_text(q, arity, symbol):
    if arity == 1:
        return str(symbol)
    return f"({symbol % q},{symbol // q})"


def export_dot(automaton):
    """Graphviz DOT text; deterministic byte-for-byte."""
    lines = ["digraph dfao {", "  rankdir=LR;"]
    for s in range(automaton.n_states):
        out = automaton.field.fmt(automaton.outputs[s])
        shape = "doublecircle" if s == automaton.initial else "circle"
        lines.append(f'  n{s} [label="{s}:{out}", shape={shape}];')
    nsym = automaton.q ** automaton.arity
    for s in range(automaton.n_states):
        grouped = {}
        for a in range(nsym):
            grouped.setdefault(automaton.transitions[s][a], []).append(a)
        for target in sorted(grouped, key=lambda t: grouped[t][0]):
            label = ",".join(_symbol_text(automaton.q, automaton.arity, a)
                             for a in grouped[target])
            lines.append(f'  n{s} -> n{target} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _field_to_json(field):
    if field.kind == "prime":
        return {"kind": "prime", "p": field.char}
    if field.kind == "extension":
        return {"kind": "extension", "p": field.char, "k": field.degree,
                "modulus": field.modulus_text()}
    return {"kind": "rationals"}


def _field_from_json(obj, path):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError(path, "field descriptor object required")
    kind = obj["kind"]
    if kind == "rationals":
        return QQ
    if kind == "prime":
        if not isinstance(obj.get("p"), int):
            raise SchemaError(path + ".p", "prime characteristic required")
        return GF(obj["p"])
    if kind == "extension":
        if not isinstance(obj.get("p"), int) or not isinstance(obj.get("k"), int):
            raise SchemaError(path, "extension needs integer p and k")
        modulus = obj.get("modulus")
        if modulus is None:
            return GF(obj["p"] ** obj["k"])
        if not isinstance(modulus, str):
            raise SchemaError(path + ".modulus", "modulus must be a string")
        try:
            poly = parse_unipoly(modulus, GF(obj["p"]), var="t")
        except AlgSeriesError as exc:
            raise SchemaError(path + ".modulus", str(exc)) from exc
        return GF(obj["p"] ** obj["k"], modulus=poly.coeffs)
    raise SchemaError(path + ".kind", f"unknown field kind {kind!r}")


def to_json(automaton):
    """Lossless JSON document for an automaton."""
    doc = {
        "q": automaton.q,
        "arity": automaton.arity,
        "digit_order": "lsd",
        "field": _field_to_json(automaton.field),
        "initial": automaton.initial,
        "transitions": [list(row) for row in automaton.transitions],
        "outputs": [automaton.field.to_literal(v) for v in automaton.outputs],
    }
    if automaton.labels is not None:
        doc["labels"] = list(automaton.labels)
    return json.dumps(doc, indent=2) + "\n"


def from_json(text):
    """Parse an automaton document; SchemaError carries the JSON path."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("$", "top-level object required")
    for key in ("q", "initial", "transitions", "outputs", "field"):
        if key not in doc:
            raise SchemaError(f"$.{key}", "missing required key")
    if not isinstance(doc["q"], int) or doc["q"] < 2:
        raise SchemaError("$.q", "integer digit base >= 2 required")
    arity = doc.get("arity", 1)
    if arity not in (1, 2):
        raise SchemaError("$.arity", "arity must be 1 or 2")
    if doc.get("digit_order", "lsd") != "lsd":
        raise SchemaError("$.digit_order", "only digit_order 'lsd' is supported")
    field = _field_from_json(doc["field"], "$.field")
    transitions = doc["transitions"]
    if not isinstance(transitions, list) or not transitions:
        raise SchemaError("$.transitions", "nonempty list required")
    nstates = len(transitions)
    nsym = doc["q"] ** arity
    for i, row in enumerate(transitions):
        if not isinstance(row, list) or len(row) != nsym:
            raise SchemaError(f"$.transitions[{i}]",
                              f"row of {nsym} target states required")
        for j, t in enumerate(row):
            if not isinstance(t, int) or not 0 <= t < nstates:
                raise SchemaError(f"$.transitions[{i}][{j}]",
                                  "target state index out of range")
    outputs_doc = doc["outputs"]
    if not isinstance(outputs_doc, list) or len(outputs_doc) != nstates:
        raise SchemaError("$.outputs", f"list of {nstates} literals required")
    outputs = []
    for i, lit in enumerate(outputs_doc):
        try:
            outputs.append(field.from_literal(lit))
        except (AlgSeriesError, ValueError, TypeError) as exc:
            raise SchemaError(f"$.outputs[{i}]", str(exc)) from exc
    if not isinstance(doc["initial"], int) or not 0 <= doc["initial"] < nstates:
        raise SchemaError("$.initial", "initial state index out of range")
    labels = doc.get("labels")
    if labels is not None:
        if (not isinstance(labels, list) or len(labels) != nstates
                or not all(isinstance(x, str) for x in labels)):
            raise SchemaError("$.labels", f"list of {nstates} strings required")
    return DFAO(doc["q"], field, doc["initial"], transitions, outputs,
                labels, arity)

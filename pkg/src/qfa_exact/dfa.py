"""Minimal DFAs for the promise families and exhaustive minimality checks.

The classical solvers are cycle counters: a d-state cycle solves the
unary family when d divides N but not l, and the same d drives the
two-letter up/down counter for the binary families. The certificates
re-prove minimality by enumerating every smaller machine and watching
each one misclassify some promise instance.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .promise import (
    BinaryPromiseSpec,
    Classification,
    UnaryPromiseSpec,
    enumerate_instances,
    spec_to_dict,
)
from .words import as_runs

DEFAULT_ENUMERATION_BUDGET = 10**6


class EnumerationBudgetError(RuntimeError):
    """Raised when a certificate search would exceed its machine budget."""


@dataclass(frozen=True, eq=False)
class Dfa:
    """Table-driven deterministic automaton; delta[state][symbol_index]."""

    num_states: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    start: int
    accepting: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if len(self.delta) != self.num_states:
            raise ValueError("transition table must have one row per state")
        for row in self.delta:
            if len(row) != len(self.alphabet) or not all(0 <= s < self.num_states for s in row):
                raise ValueError("transition table entries out of range")
        if not 0 <= self.start < self.num_states:
            raise ValueError(f"start state {self.start} out of range")
        if not self.accepting <= set(range(self.num_states)):
            raise ValueError("accepting states out of range")

    def _advance(self, state: int, sym_index: int, count: int) -> int:
        """Apply one symbol `count` times, shortcutting around the cycle the
        walk inevitably enters; cost is O(num_states) regardless of count."""
        seen = {}
        path = []
        for step in range(count + 1):
            if step == count:
                return state
            if state in seen:
                cycle_start = seen[state]
                cycle_len = step - cycle_start
                return path[cycle_start + (count - cycle_start) % cycle_len]
            seen[state] = step
            path.append(state)
            state = self.delta[state][sym_index]
        return state

    def final_state_of(self, word) -> int:
        state = self.start
        for sym, count in as_runs(word, self.alphabet):
            state = self._advance(state, self.alphabet.index(sym), count)
        return state

    def accepts(self, word) -> bool:
        """True iff the word (int length, str, or runs) ends in an accepting state."""
        return self.final_state_of(word) in self.accepting

    def to_dict(self) -> dict:
        return {
            "states": self.num_states,
            "alphabet": list(self.alphabet),
            "delta": [list(row) for row in self.delta],
            "start": self.start,
            "accepting": sorted(self.accepting),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Dfa":
        return cls(
            num_states=data["states"],
            alphabet=tuple(data["alphabet"]),
            delta=tuple(tuple(row) for row in data["delta"]),
            start=data["start"],
            accepting=frozenset(data["accepting"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "Dfa":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed DFA JSON: {exc}") from exc
        try:
            return cls.from_dict(data)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"DFA JSON missing or malformed field: {exc}") from exc


def run_dfa(dfa: Dfa, word) -> bool:
    return dfa.accepts(word)


def smallest_modulus(N: int, l: int) -> int:
    """Smallest d >= 2 dividing N but not l; the unary minimal-DFA size.

    Always exists: d = N itself divides N and cannot divide 0 < l < N.
    """
    if not 0 < l < N:
        raise ValueError(f"need 0 < l < N, got l={l}, N={N}")
    for d in range(2, N + 1):
        if N % d == 0 and l % d != 0:
            return d
    raise AssertionError("unreachable: N divides N and not l")


def smallest_nondivisor(l: int) -> int:
    """Smallest d >= 2 that does not divide l."""
    if l < 1:
        raise ValueError(f"need l >= 1, got {l}")
    d = 2
    while l % d == 0:
        d += 1
    return d


@lru_cache(maxsize=None)
def _reachable_offsets(N: int, d: int) -> frozenset:
    # residues (-p*N) mod d over one full period of p; l hits one of these
    # exactly when some p*N + l is divisible by d
    return frozenset((-p * N) % d for p in range(d))


def smallest_modulus_alt(N: int, l: int) -> int:
    """Smallest d >= 2 with p*N + l never divisible by d, by brute force.

    Checking p over [0, d) suffices: (p*N + l) mod d is periodic in p
    with period dividing d. Kept deliberately independent of
    `smallest_modulus` so the two characterizations can be compared.
    """
    if not 0 < l < N:
        raise ValueError(f"need 0 < l < N, got l={l}, N={N}")
    d = 2
    while l % d in _reachable_offsets(N, d):
        d += 1
    return d


def build_unary_min_dfa(N: int, l: int) -> Dfa:
    """The d-state single-cycle solver for the unary offset family,
    d = smallest_modulus(N, l): step forward mod d, accept the states
    hit by multiples of N."""
    d = smallest_modulus(N, l)
    return Dfa(
        num_states=d,
        alphabet=("a",),
        delta=tuple(((i + 1) % d,) for i in range(d)),
        start=0,
        accepting=frozenset((i * N) % d for i in range(d)),
    )


def build_binary_min_dfa(d: int) -> Dfa:
    """The d-state up/down counter: `a` steps forward, `b` steps back,
    accept when the counts agree mod d.

    With d = smallest_nondivisor(l) it solves the fixed-surplus family;
    with d = smallest_modulus(N, l) the modular-surplus one.
    """
    if d < 2:
        raise ValueError(f"need at least 2 states, got {d}")
    return Dfa(
        num_states=d,
        alphabet=("a", "b"),
        delta=tuple(((i + 1) % d, (i - 1) % d) for i in range(d)),
        start=0,
        accepting=frozenset({0}),
    )


@dataclass(frozen=True)
class MinimalityCertificate:
    """Outcome of an exhaustive search below a claimed machine size.

    Certified means every enumerated smaller DFA misclassified some
    witness word. A counterexample is a smaller DFA that classified all
    witnesses correctly, reported with one (yes, no) witness pair it
    separates; finding one would refute the size formula.
    """

    spec: object
    claimed_d: int
    witness_bounds: tuple[int, int | None]
    machines_checked: int
    certified: bool
    counterexample: Dfa | None = None
    counterexample_words: tuple | None = None

    def to_dict(self) -> dict:
        return {
            "spec": spec_to_dict(self.spec),
            "claimed_d": self.claimed_d,
            "witness_bounds": list(self.witness_bounds),
            "machines_checked": self.machines_checked,
            "certified": self.certified,
            "counterexample": None if self.counterexample is None else self.counterexample.to_dict(),
            "counterexample_words": None
            if self.counterexample_words is None
            else [list(w) if isinstance(w, tuple) else w for w in self.counterexample_words],
        }


def _unary_tail_cycle_dfa(m: int, tail: int, accepting) -> Dfa:
    delta = tuple(((i + 1,) if i < m - 1 else (tail,)) for i in range(m))
    return Dfa(num_states=m, alphabet=("a",), delta=delta, start=0, accepting=accepting)


def certify_minimality_unary(
    N: int,
    l: int,
    i_max: int | None = None,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> MinimalityCertificate:
    """Certify that no unary DFA below d = smallest_modulus(N, l) states
    solves the offset family, on witnesses a^{iN} and a^{iN+l}, i <= i_max.

    Every unary DFA's reachable part is a tail of k states feeding a
    cycle of t states, so machines are enumerated as (k, t) splits of
    each size m < d together with every accepting subset. The default
    i_max = 2d + 2 walks past any tail and around any cycle at least
    once. The accept-subset loop is resolved in closed form per (k, t):
    a subset works iff it contains every yes-witness state and no
    no-witness state, and the first such subset in enumeration order is
    the union of the yes-witness states; the reported machine count is
    identical to checking subsets one by one.
    """
    d = smallest_modulus(N, l)
    if i_max is None:
        i_max = 2 * d + 2
    if i_max < 0:
        raise ValueError("witness bound must be nonnegative")
    spec = UnaryPromiseSpec(N, 0, l)
    total = sum(m * 2**m for m in range(1, d))
    if total > budget:
        raise EnumerationBudgetError(
            f"{total} candidate machines exceed budget {budget} for d={d}"
        )
    yes_lengths = [i * N for i in range(i_max + 1)]
    no_lengths = [i * N + l for i in range(i_max + 1)]
    checked = 0
    for m in range(1, d):
        for tail in range(m):
            cycle = m - tail

            def state_after(n):
                return n if n < tail else tail + (n - tail) % cycle

            yes_mask = 0
            for n in yes_lengths:
                yes_mask |= 1 << state_after(n)
            no_mask = 0
            for n in no_lengths:
                no_mask |= 1 << state_after(n)
            if yes_mask & no_mask:
                checked += 2**m
                continue
            # subsets scan in order 0, 1, ...; the first workable one is
            # yes_mask itself, after yes_mask failing candidates
            checked += yes_mask + 1
            accepting = frozenset(i for i in range(m) if yes_mask >> i & 1)
            return MinimalityCertificate(
                spec=spec,
                claimed_d=d,
                witness_bounds=(i_max, None),
                machines_checked=checked,
                certified=False,
                counterexample=_unary_tail_cycle_dfa(m, tail, accepting),
                counterexample_words=(yes_lengths[0], no_lengths[0]),
            )
    return MinimalityCertificate(
        spec=spec,
        claimed_d=d,
        witness_bounds=(i_max, None),
        machines_checked=checked,
        certified=True,
    )


def _binary_candidate_count(d: int) -> int:
    return sum(m ** (2 * m) * m * 2**m for m in range(1, d))


def certify_minimality_binary(
    spec: BinaryPromiseSpec,
    i_max: int = 64,
    j_max: int = 8,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> MinimalityCertificate:
    """Certify the binary size formulas by full enumeration: every
    transition table, start state, and accepting subset with fewer than
    d states is run on the witnesses from enumerate_instances.

    Candidate counts explode as m^(2m); the default budget admits d <= 4
    and anything larger raises EnumerationBudgetError up front.
    """
    if spec.N is None:
        d = smallest_nondivisor(spec.l)
    else:
        d = smallest_modulus(spec.N, spec.l)
    total = _binary_candidate_count(d)
    if total > budget:
        raise EnumerationBudgetError(
            f"{total} candidate machines exceed budget {budget} for d={d}"
        )
    witnesses = [
        (tuple(dict(word).get(sym, 0) for sym in ("a", "b")), label is Classification.YES)
        for word, label in enumerate_instances(spec, i_max, j_max)
    ]
    checked = 0
    for m in range(1, d):
        for flat in product(range(m), repeat=2 * m):
            delta = tuple((flat[2 * i], flat[2 * i + 1]) for i in range(m))
            for start in range(m):
                for acc_mask in range(2**m):
                    checked += 1
                    if _solves_all(delta, start, acc_mask, witnesses):
                        dfa = Dfa(
                            num_states=m,
                            alphabet=("a", "b"),
                            delta=delta,
                            start=start,
                            accepting=frozenset(i for i in range(m) if acc_mask >> i & 1),
                        )
                        yes_word, no_word = None, None
                        for word, label in enumerate_instances(spec, i_max, j_max):
                            if label is Classification.YES and yes_word is None:
                                yes_word = word
                            if label is Classification.NO and no_word is None:
                                no_word = word
                        return MinimalityCertificate(
                            spec=spec,
                            claimed_d=d,
                            witness_bounds=(i_max, j_max),
                            machines_checked=checked,
                            certified=False,
                            counterexample=dfa,
                            counterexample_words=(yes_word, no_word),
                        )
    return MinimalityCertificate(
        spec=spec,
        claimed_d=d,
        witness_bounds=(i_max, j_max),
        machines_checked=checked,
        certified=True,
    )


def _step_many(delta, sym_index, state, count):
    seen = {}
    path = []
    step = 0
    while step < count:
        if state in seen:
            cycle_start = seen[state]
            cycle_len = step - cycle_start
            return path[cycle_start + (count - cycle_start) % cycle_len]
        seen[state] = step
        path.append(state)
        state = delta[state][sym_index]
        step += 1
    return state


def _solves_all(delta, start, acc_mask, witnesses):
    for (n_a, n_b), is_yes in witnesses:
        state = _step_many(delta, 0, start, n_a)
        state = _step_many(delta, 1, state, n_b)
        if bool(acc_mask >> state & 1) != is_yes:
            return False
    return True

"""Core DFA model: validated automata, word runs, induced machines, xor products."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

Word = str  # the empty string is the empty word

_RESERVED_SYMBOLS = frozenset("#@")


class AlphabetMismatchError(ValueError):
    """Two automata were combined although their alphabets differ."""


def check_alphabet(alphabet: str) -> None:
    """Validate an alphabet: non-empty, unique printable symbols, none of them '#' or '@'."""
    if not alphabet:
        raise ValueError("alphabet is empty")
    seen = set()
    for sym in alphabet:
        if sym in seen:
            raise ValueError(f"duplicate alphabet symbol {sym!r}")
        seen.add(sym)
        if sym in _RESERVED_SYMBOLS:
            raise ValueError(f"alphabet symbol {sym!r} is reserved")
        if sym.isspace() or not sym.isprintable():
            raise ValueError(f"alphabet symbol {sym!r} is whitespace or unprintable")


def reachable_states(delta: Iterable[Iterable[int]], start: int) -> set[int]:
    """States reachable from ``start`` in a raw transition table (rows of successor ids)."""
    rows = list(delta)
    seen = {start}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for t in rows[q]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def states_reaching(delta, targets: Iterable[int]) -> set[int]:
    """States from which some state in ``targets`` is reachable (backward closure)."""
    rows = list(delta)
    preds: list[list[int]] = [[] for _ in rows]
    for q, row in enumerate(rows):
        for t in row:
            preds[t].append(q)
    seen = set(targets)
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        for p in preds[q]:
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return seen


def strongly_connected_components(delta) -> list[list[int]]:
    """Tarjan's SCC over a transition table, iterative so deep machines cannot overflow."""
    rows = [tuple(row) for row in delta]
    n = len(rows)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, edge = work[-1]
            if edge == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            row = rows[v]
            while edge < len(row):
                w = row[edge]
                edge += 1
                if index[w] == -1:
                    work[-1] = (v, edge)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comps


def states_on_cycles(delta) -> set[int]:
    """States lying on some cycle: in an SCC of size > 1, or carrying a self-loop."""
    rows = [tuple(row) for row in delta]
    out: set[int] = set()
    for comp in strongly_connected_components(rows):
        if len(comp) > 1:
            out.update(comp)
        else:
            q = comp[0]
            if q in rows[q]:
                out.add(q)
    return out


@dataclass(frozen=True)
class Dfa:
    """A complete deterministic finite automaton over single-character symbols.

    States are the dense integers ``0..n-1`` and ``delta[q][i]`` is the successor
    of ``q`` on the i-th symbol of ``alphabet``.  Every state must be reachable
    from ``start``; construction fails otherwise (use :func:`trim` to drop
    unreachable states first).  Instances are immutable, hashable, and safe to
    share across threads.  ``names`` is display-only and ignored by equality.
    """

    alphabet: str
    start: int
    accepting: frozenset[int]
    delta: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
        check_alphabet(self.alphabet)
        n = len(self.delta)
        if n == 0:
            raise ValueError("a DFA needs at least one state")
        k = len(self.alphabet)
        for q, row in enumerate(self.delta):
            if len(row) != k:
                raise ValueError(f"state {q} has {len(row)} transitions, expected {k}")
            for t in row:
                if not 0 <= t < n:
                    raise ValueError(f"transition target {t} out of range for state {q}")
        if not 0 <= self.start < n:
            raise ValueError(f"start state {self.start} out of range")
        for q in self.accepting:
            if not 0 <= q < n:
                raise ValueError(f"accepting state {q} out of range")
        if self.names is not None and len(self.names) != n:
            raise ValueError("names must cover every state")
        missing = set(range(n)) - reachable_states(self.delta, self.start)
        if missing:
            raise ValueError(f"states unreachable from start: {sorted(missing)}")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    @property
    def states(self) -> range:
        return range(len(self.delta))

    @cached_property
    def _symbol_index(self) -> dict[str, int]:
        return {sym: i for i, sym in enumerate(self.alphabet)}

    def symbol_index(self, symbol: str) -> int:
        try:
            return self._symbol_index[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} not in alphabet {self.alphabet!r}") from None

    def name_of(self, q: int) -> str:
        if self.names is not None:
            return self.names[q]
        return str(q)

    def is_accepting(self, q: int) -> bool:
        return q in self.accepting

    def step(self, q: int, symbol: str) -> int:
        return self.delta[q][self.symbol_index(symbol)]

    def run(self, word: Word, start: int | None = None) -> int:
        """State reached from ``start`` (default: the start state) after reading ``word``."""
        q = self.start if start is None else start
        delta = self.delta
        index = self._symbol_index
        for sym in word:
            try:
                q = delta[q][index[sym]]
            except KeyError:
                raise ValueError(f"symbol {sym!r} not in alphabet {self.alphabet!r}") from None
        return q

    def accepts(self, word: Word) -> bool:
        return self.run(word) in self.accepting


def trim(alphabet, start, accepting, delta, names=None) -> tuple[Dfa, dict[int, int]]:
    """Drop states unreachable from ``start`` and reindex densely, keeping id order.

    Returns the trimmed automaton and the old-id -> new-id map for the survivors.
    """
    rows = [tuple(row) for row in delta]
    keep = sorted(reachable_states(rows, start))
    remap = {old: new for new, old in enumerate(keep)}
    new_delta = tuple(tuple(remap[t] for t in rows[old]) for old in keep)
    new_accepting = frozenset(remap[q] for q in accepting if q in remap)
    new_names = tuple(names[old] for old in keep) if names is not None else None
    return Dfa(alphabet, remap[start], new_accepting, new_delta, new_names), remap


def induce(d: Dfa, q: int) -> Dfa:
    """The automaton obtained by re-pointing the start at ``q`` and trimming."""
    if q not in d.states:
        raise ValueError(f"state {q} out of range")
    dfa, _ = trim(d.alphabet, q, d.accepting, d.delta, d.names)
    return dfa


@dataclass(frozen=True)
class ProductDfa:
    """Reachable pair automaton accepting the symmetric difference of two languages.

    ``pairs[i]`` records which (left state, right state) pair product state ``i``
    stands for.
    """

    dfa: Dfa
    pairs: tuple[tuple[int, int], ...]

    def pair_of(self, q: int) -> tuple[int, int]:
        return self.pairs[q]


def product_xor(a: Dfa, b: Dfa) -> ProductDfa:
    """Pair construction over the reachable product, accepting exactly where a, b disagree."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"alphabets differ: {a.alphabet!r} vs {b.alphabet!r}")
    k = len(a.alphabet)
    da, db = a.delta, b.delta
    acc_a, acc_b = a.accepting, b.accepting
    first = (a.start, b.start)
    index: dict[tuple[int, int], int] = {first: 0}
    pairs: list[tuple[int, int]] = [first]
    rows: list[tuple[int, ...]] = []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        row_a, row_b = da[p], db[q]
        row = []
        for ci in range(k):
            key = (row_a[ci], row_b[ci])
            j = index.get(key)
            if j is None:
                j = len(pairs)
                index[key] = j
                pairs.append(key)
            row.append(j)
        rows.append(tuple(row))
        i += 1
    accepting = frozenset(
        i for i, (p, q) in enumerate(pairs) if (p in acc_a) != (q in acc_b)
    )
    dfa = Dfa(a.alphabet, 0, accepting, tuple(rows))
    return ProductDfa(dfa, tuple(pairs))


def _lex_symbol_order(d: Dfa) -> tuple[tuple[int, str], ...]:
    # symbol positions in character order, so breadth-first searches yield shortlex words
    return tuple(sorted(((i, s) for i, s in enumerate(d.alphabet)), key=lambda t: t[1]))


def shortest_word_to(d: Dfa, source: int, targets: Iterable[int]) -> Word | None:
    """Shortlex-least word taking ``source`` into ``targets``, or None if unreachable."""
    goal = set(targets)
    if source in goal:
        return ""
    order = _lex_symbol_order(d)
    delta = d.delta
    parent: dict[int, tuple[int, str]] = {source: (-1, "")}
    queue = deque([source])
    while queue:
        q = queue.popleft()
        for ci, sym in order:
            t = delta[q][ci]
            if t in parent:
                continue
            parent[t] = (q, sym)
            if t in goal:
                out = []
                cur = t
                while cur != source:
                    prev, s = parent[cur]
                    out.append(s)
                    cur = prev
                return "".join(reversed(out))
            queue.append(t)
    return None


def shortest_cycle_word(d: Dfa, q: int) -> Word | None:
    """Shortlex-least non-empty word returning ``q`` to itself, or None if q is acyclic."""
    order = _lex_symbol_order(d)
    delta = d.delta
    parent: dict[int, tuple[int, str]] = {}
    queue = deque()
    for ci, sym in order:
        t = delta[q][ci]
        if t == q:
            return sym
        if t not in parent:
            parent[t] = (-1, sym)
            queue.append(t)
    while queue:
        s = queue.popleft()
        for ci, sym in order:
            t = delta[s][ci]
            if t == q:
                out = [sym]
                cur = s
                while cur != -1:
                    prev, first = parent[cur]
                    out.append(first)
                    cur = prev
                return "".join(reversed(out))
            if t not in parent:
                parent[t] = (s, sym)
                queue.append(t)
    return None

"""Line-oriented text formats: the ``dfa v1`` automaton format and word lists.

Format sketch::

    dfa v1
    alphabet 01
    states 2
    start 0
    accept 0
    0 0 0
    0 1 1
    1 0 1
    1 1 1

``#`` starts a comment, blank lines are ignored, ``accept -`` means no
accepting states, and exactly ``states * len(alphabet)`` transition lines
``<from> <symbol> <to>`` must be present.  The canonical serialization sorts
transitions by (from, symbol) and accepting ids ascending.  The empty word is
rendered as ``@`` wherever words appear in text.
"""

from __future__ import annotations

import warnings

from .core import Dfa, Word, check_alphabet, reachable_states, trim

EPSILON_TOKEN = "@"


class DfaFormatError(ValueError):
    """A ``dfa v1`` document failed to parse; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class TrimWarning(UserWarning):
    """Unreachable states were dropped while loading an automaton."""


def _logical_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield line_no, content


def _parse_int(token: str, what: str, line_no: int) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise DfaFormatError(f"{what} is not an integer: {token!r}", line_no) from None


def parse_dfa(text: str, *, complete: bool = False) -> Dfa:
    """Parse the ``dfa v1`` format into a validated automaton.

    Unreachable states are dropped with a :class:`TrimWarning` and ids reindexed
    densely.  A missing transition is an error unless ``complete=True``, which
    routes every missing transition to a fresh rejecting sink before validation.
    """
    lines = _logical_lines(text)

    def next_line(expect: str):
        try:
            return next(lines)
        except StopIteration:
            raise DfaFormatError(f"unexpected end of input, expected {expect}") from None

    line_no, magic = next_line("'dfa v1' header")
    if magic != "dfa v1":
        raise DfaFormatError(f"expected 'dfa v1' header, got {magic!r}", line_no)

    line_no, decl = next_line("alphabet line")
    fields = decl.split()
    if len(fields) != 2 or fields[0] != "alphabet":
        raise DfaFormatError("expected 'alphabet <symbols>'", line_no)
    alphabet = fields[1]
    try:
        check_alphabet(alphabet)
    except ValueError as exc:
        raise DfaFormatError(str(exc), line_no) from None

    line_no, decl = next_line("states line")
    fields = decl.split()
    if len(fields) != 2 or fields[0] != "states":
        raise DfaFormatError("expected 'states <count>'", line_no)
    n = _parse_int(fields[1], "state count", line_no)
    if n < 1:
        raise DfaFormatError(f"state count must be positive, got {n}", line_no)

    line_no, decl = next_line("start line")
    fields = decl.split()
    if len(fields) != 2 or fields[0] != "start":
        raise DfaFormatError("expected 'start <id>'", line_no)
    start = _parse_int(fields[1], "start state", line_no)
    if not 0 <= start < n:
        raise DfaFormatError(f"start state {start} out of range 0..{n - 1}", line_no)

    line_no, decl = next_line("accept line")
    fields = decl.split()
    if len(fields) < 2 or fields[0] != "accept":
        raise DfaFormatError("expected 'accept <ids>' or 'accept -'", line_no)
    accepting: set[int] = set()
    if fields[1:] != ["-"]:
        for token in fields[1:]:
            q = _parse_int(token, "accepting state", line_no)
            if not 0 <= q < n:
                raise DfaFormatError(f"accepting state {q} out of range 0..{n - 1}", line_no)
            accepting.add(q)

    k = len(alphabet)
    table: dict[tuple[int, int], int] = {}
    for line_no, decl in lines:
        fields = decl.split()
        if len(fields) != 3:
            raise DfaFormatError(f"expected '<from> <symbol> <to>', got {decl!r}", line_no)
        src = _parse_int(fields[0], "source state", line_no)
        if not 0 <= src < n:
            raise DfaFormatError(f"source state {src} out of range 0..{n - 1}", line_no)
        if fields[1] not in alphabet or len(fields[1]) != 1:
            raise DfaFormatError(f"symbol {fields[1]!r} not in alphabet {alphabet!r}", line_no)
        ci = alphabet.index(fields[1])
        dst = _parse_int(fields[2], "target state", line_no)
        if not 0 <= dst < n:
            raise DfaFormatError(f"target state {dst} out of range 0..{n - 1}", line_no)
        if (src, ci) in table:
            raise DfaFormatError(f"duplicate transition for state {src} on {fields[1]!r}", line_no)
        table[(src, ci)] = dst

    missing = [(q, ci) for q in range(n) for ci in range(k) if (q, ci) not in table]
    if missing:
        if complete:
            sink = n
            n += 1
            for q, ci in missing:
                table[(q, ci)] = sink
            for ci in range(k):
                table[(sink, ci)] = sink
        else:
            q, ci = missing[0]
            raise DfaFormatError(
                f"incomplete transition table: state {q} has no transition on {alphabet[ci]!r}"
                f" ({len(missing)} missing in total)"
            )

    delta = tuple(tuple(table[(q, ci)] for ci in range(k)) for q in range(n))
    reachable = reachable_states(delta, start)
    if len(reachable) < n:
        dropped = n - len(reachable)
        plural = "" if dropped == 1 else "s"
        warnings.warn(f"trimmed {dropped} unreachable state{plural}", TrimWarning, stacklevel=2)
    dfa, _ = trim(alphabet, start, accepting, delta)
    return dfa


def serialize_dfa(d: Dfa) -> str:
    """Canonical ``dfa v1`` text: transitions sorted by (from, symbol), accept ascending."""
    lines = [
        "dfa v1",
        f"alphabet {d.alphabet}",
        f"states {d.n_states}",
        f"start {d.start}",
    ]
    if d.accepting:
        lines.append("accept " + " ".join(str(q) for q in sorted(d.accepting)))
    else:
        lines.append("accept -")
    for q in d.states:
        for ci, sym in sorted(enumerate(d.alphabet), key=lambda t: t[1]):
            lines.append(f"{q} {sym} {d.delta[q][ci]}")
    return "\n".join(lines) + "\n"


def format_word(word: Word) -> str:
    """Render a word for text output; the empty word becomes ``@``."""
    return word if word else EPSILON_TOKEN


def parse_word(token: str) -> Word:
    """Read a word token; ``@`` denotes the empty word."""
    if token == EPSILON_TOKEN:
        return ""
    if EPSILON_TOKEN in token:
        raise ValueError(f"{EPSILON_TOKEN!r} may only appear alone: {token!r}")
    return token


def parse_word_list(text: str) -> list[Word]:
    """One word per line, ``@`` for the empty word, ``#`` comments and blanks ignored."""
    words = []
    for _, content in _logical_lines(text):
        if len(content.split()) != 1:
            raise ValueError(f"expected one word per line, got {content!r}")
        words.append(parse_word(content))
    return words


def serialize_word_list(words) -> str:
    return "".join(format_word(w) + "\n" for w in words)

"""Language classification (empty / finite / infinite), enumeration, and symmetric differences."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AlphabetMismatchError,
    Dfa,
    Word,
    product_xor,
    shortest_cycle_word,
    shortest_word_to,
    states_on_cycles,
    states_reaching,
)

EMPTY = "empty"
FINITE = "finite"
INFINITE = "infinite"


def shortlex_key(word: Word) -> tuple[int, Word]:
    return (len(word), word)


@dataclass(frozen=True)
class Lasso:
    """Witness of an infinite language: ``prefix . pump^k . suffix`` is accepted for every k."""

    prefix: Word
    pump: Word
    suffix: Word

    def word(self, k: int) -> Word:
        return self.prefix + self.pump * k + self.suffix


@dataclass(frozen=True)
class Classification:
    kind: str  # EMPTY, FINITE or INFINITE
    witness: Lasso | None = None


@dataclass(frozen=True)
class DiffResult:
    """Symmetric difference of two languages: a finite word list or a lasso witness."""

    kind: str  # FINITE or INFINITE
    words: tuple[Word, ...] | None = None
    witness: Lasso | None = None

    @property
    def finite(self) -> bool:
        return self.kind == FINITE


class InfiniteLanguageError(ValueError):
    """Enumeration was asked for an infinite language; carries the lasso witness."""

    def __init__(self, witness: Lasso):
        self.witness = witness
        super().__init__(
            f"language is infinite: accepts {witness.prefix!r} ({witness.pump!r})* {witness.suffix!r}"
        )


def useful_states(d: Dfa) -> set[int]:
    """States from which some accepting state is reachable."""
    if not d.accepting:
        return set()
    return states_reaching(d.delta, d.accepting)


def classify_language(d: Dfa) -> Classification:
    """Decide whether L(d) is empty, finite, or infinite.

    A language is infinite exactly when some state that can still accept lies on
    a cycle; the returned lasso goes through the smallest-id such state with
    shortlex-least prefix, pump, and suffix.
    """
    useful = useful_states(d)
    if d.start not in useful:
        return Classification(EMPTY)
    pumpable = useful & states_on_cycles(d.delta)
    if not pumpable:
        return Classification(FINITE)
    c = min(pumpable)
    pump = shortest_cycle_word(d, c)
    prefix = shortest_word_to(d, d.start, {c})
    suffix = shortest_word_to(d, c, d.accepting)
    # all three exist by choice of c: reachable, on a cycle, and useful
    return Classification(INFINITE, Lasso(prefix, pump, suffix))


def enumerate_finite_language(d: Dfa) -> list[Word]:
    """All accepted words, shortlex-sorted.  Raises InfiniteLanguageError otherwise."""
    cls = classify_language(d)
    if cls.kind == INFINITE:
        raise InfiniteLanguageError(cls.witness)
    if cls.kind == EMPTY:
        return []
    useful = useful_states(d)
    # runs of accepted words never leave the useful set, which is acyclic here
    out: list[Word] = []
    stack: list[tuple[int, Word]] = [(d.start, "")]
    delta = d.delta
    accepting = d.accepting
    while stack:
        q, word = stack.pop()
        if q in accepting:
            out.append(word)
        for ci, sym in enumerate(d.alphabet):
            t = delta[q][ci]
            if t in useful:
                stack.append((t, word + sym))
    out.sort(key=shortlex_key)
    return out


def symmetric_difference(a: Dfa, b: Dfa) -> DiffResult:
    """L(a) xor L(b): the full shortlex word list when finite, else a lasso witness."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"alphabets differ: {a.alphabet!r} vs {b.alphabet!r}")
    prod = product_xor(a, b).dfa
    cls = classify_language(prod)
    if cls.kind == INFINITE:
        return DiffResult(INFINITE, witness=cls.witness)
    words = tuple(enumerate_finite_language(prod)) if cls.kind == FINITE else ()
    return DiffResult(FINITE, words=words)


def languages_equal(a: Dfa, b: Dfa) -> bool:
    """Exact language equality, decided by emptiness of the xor product."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"alphabets differ: {a.alphabet!r} vs {b.alphabet!r}")
    return classify_language(product_xor(a, b).dfa).kind == EMPTY

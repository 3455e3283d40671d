"""Isomorphisms between the infinite parts and between the finite parts of two DFAs."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Dfa, Word, induce, reachable_states, shortest_cycle_word, shortest_word_to, states_on_cycles
from .classes import cross_finitely_different, dfas_finitely_different
from .fmin import is_f_minimal
from .language import languages_equal
from .minimize import is_minimized
from .parts import compute_parts

INFINITE_PART = "infinite"
FINITE_PART = "finite"


@dataclass(frozen=True)
class StateBijection:
    """A bijection between the tagged parts of two machines, as sorted (from, to) pairs."""

    part: str  # INFINITE_PART or FINITE_PART
    mapping: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)


@dataclass(frozen=True)
class RepresentativeAssignment:
    """The long witness words used to transport infinite-part states across machines."""

    threshold: int  # every representative is strictly longer than this
    words: tuple[tuple[int, Word], ...]

    def word_for(self, q: int) -> Word:
        return dict(self.words)[q]


def _require_minimized(d: Dfa, side: str) -> None:
    if not is_minimized(d):
        raise ValueError(f"{side} automaton is not minimized")


def verify_bijection(a: Dfa, b: Dfa, bij: StateBijection) -> tuple[bool, str | None]:
    """Check the part-isomorphism conditions; returns (ok, first broken condition).

    A malformed bijection (domain or range not exactly the tagged part, or a
    repeated source/target) raises instead of returning false.
    """
    parts_a = compute_parts(a)
    parts_b = compute_parts(b)
    if bij.part == INFINITE_PART:
        dom_expect, rng_expect = parts_a.infinite, parts_b.infinite
    elif bij.part == FINITE_PART:
        dom_expect, rng_expect = parts_a.finite, parts_b.finite
    else:
        raise ValueError(f"unknown part tag {bij.part!r}")
    sources = [s for s, _ in bij.mapping]
    targets = [t for _, t in bij.mapping]
    if len(set(sources)) != len(sources) or set(sources) != dom_expect:
        raise ValueError(f"domain is not exactly the {bij.part} part of the left automaton")
    if len(set(targets)) != len(targets) or set(targets) != rng_expect:
        raise ValueError(f"range is not exactly the {bij.part} part of the right automaton")
    fmap = bij.as_dict()
    if bij.part == INFINITE_PART:
        for q in sorted(fmap):
            if (q in a.accepting) != (fmap[q] in b.accepting):
                return False, f"acceptance differs at state {q}"
        for q in sorted(fmap):
            for ci, sym in enumerate(a.alphabet):
                # successors of infinite-part states stay in the infinite part
                if fmap[a.delta[q][ci]] != b.delta[fmap[q]][ci]:
                    return False, f"transition mismatch at state {q} on {sym!r}"
    else:
        for p in sorted(fmap):
            for ci, sym in enumerate(a.alphabet):
                r = a.delta[p][ci]
                if r in fmap and b.delta[fmap[p]][ci] != fmap[r]:
                    return False, f"finite-part transition mismatch at state {p} on {sym!r}"
    return True, None


def infinite_part_iso(a: Dfa, b: Dfa) -> StateBijection | None:
    """Match infinite-part states across two minimized machines by exact language.

    An infinite-part isomorphism forces equal state languages, and in minimized
    machines each language occurs at most once, so this matching succeeds
    exactly when the infinite parts are isomorphic, and is then unique.
    """
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabets differ: {a.alphabet!r} vs {b.alphabet!r}")
    _require_minimized(a, "left")
    _require_minimized(b, "right")
    inf_a = sorted(compute_parts(a).infinite)
    inf_b = sorted(compute_parts(b).infinite)
    if len(inf_a) != len(inf_b):
        return None
    mapping = []
    for q in inf_a:
        dq = induce(a, q)
        partner = None
        for r in inf_b:
            if languages_equal(dq, induce(b, r)):
                partner = r
                break
        if partner is None:
            return None
        mapping.append((q, partner))
    if len({t for _, t in mapping}) != len(inf_b):
        return None
    return StateBijection(INFINITE_PART, tuple(mapping))


def iso_from_representatives(a: Dfa, b: Dfa) -> tuple[StateBijection, RepresentativeAssignment]:
    """Build the infinite-part isomorphism constructively through long witness words.

    For each infinite-part state q of ``a``, pump the first discovered cycle on
    a path to q (smallest-id cycle entry, shortlex-least words) until the word
    w_q is longer than N = |states(a)| * |states(b)|, and map q to where ``b``
    takes w_q.  Requires both machines minimized and finitely different; the
    resulting map is verified and any failure raises, since it would contradict
    the length-threshold argument.
    """
    _require_minimized(a, "left")
    _require_minimized(b, "right")
    same, _ = dfas_finitely_different(a, b)
    if not same:
        raise ValueError("automata are not finitely different")
    threshold = a.n_states * b.n_states
    inf_a = sorted(compute_parts(a).infinite)
    inf_b = compute_parts(b).infinite
    cycle_entries = sorted(states_on_cycles(a.delta))
    reach_from = {c: reachable_states(a.delta, c) for c in cycle_entries}
    mapping = []
    reps = []
    for q in inf_a:
        entry = next(c for c in cycle_entries if q in reach_from[c])
        prefix = shortest_word_to(a, a.start, {entry})
        pump = shortest_cycle_word(a, entry)
        tail = shortest_word_to(a, entry, {q})
        base = len(prefix) + len(tail)
        pumps = max(0, -(-(threshold + 1 - base) // len(pump)))
        word = prefix + pump * pumps + tail
        if a.run(word) != q:
            raise AssertionError(f"representative word does not reach state {q}; this is a bug")
        mapping.append((q, b.run(word)))
        reps.append((q, word))
    if {t for _, t in mapping} != inf_b:
        raise AssertionError("representative map does not target the infinite part; this is a bug")
    bij = StateBijection(INFINITE_PART, tuple(mapping))
    ok, reason = verify_bijection(a, b, bij)
    if not ok:
        raise AssertionError(f"representative map fails verification ({reason}); this is a bug")
    return bij, RepresentativeAssignment(threshold, tuple(reps))


def finite_part_iso(a: Dfa, b: Dfa) -> StateBijection:
    """Pair up finite-part states of two f-minimal, finitely different machines.

    In an f-minimal machine every finite-part state is the only representative
    of its class, so matching by class membership is forced; the transition
    condition (acceptance is deliberately unconstrained) is verified and a
    failure raises, as the hypotheses make it impossible.
    """
    ok_a, _ = is_f_minimal(a)
    if not ok_a:
        raise ValueError("left automaton is not f-minimal")
    ok_b, _ = is_f_minimal(b)
    if not ok_b:
        raise ValueError("right automaton is not f-minimal")
    same, _ = dfas_finitely_different(a, b)
    if not same:
        raise ValueError("automata are not finitely different")
    fin_a = sorted(compute_parts(a).finite)
    fin_b = sorted(compute_parts(b).finite)
    if len(fin_a) != len(fin_b):
        raise AssertionError("finite parts have different sizes; this is a bug")
    mapping = []
    for p in fin_a:
        partners = [r for r in fin_b if cross_finitely_different(a, p, b, r)[0]]
        if len(partners) != 1:
            raise AssertionError(
                f"state {p} has {len(partners)} class partners, expected exactly one; this is a bug"
            )
        mapping.append((p, partners[0]))
    bij = StateBijection(FINITE_PART, tuple(mapping))
    ok, reason = verify_bijection(a, b, bij)
    if not ok:
        raise AssertionError(f"finite-part map fails verification ({reason}); this is a bug")
    return bij

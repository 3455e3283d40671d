"""Finite-difference structure: state-classes, machine signatures, machine-level verdicts.

Two states are finitely different (written p ~ q) when the languages accepted
from them differ on only finitely many words.  ~ is an equivalence; its classes
over a machine's states are the state-classes, and the set of classes touched
by a machine is its signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import AlphabetMismatchError, Dfa, induce, product_xor
from .language import DiffResult, symmetric_difference
from .minimize import minimize
from .parts import compute_parts


@dataclass(frozen=True)
class StateClassPartition:
    """States grouped by ~; each class is identified by its smallest member."""

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def members(self, class_id: int) -> tuple[int, ...]:
        for cls in self.classes:
            if cls[0] == class_id:
                return cls
        raise KeyError(class_id)


@lru_cache(maxsize=None)
def _induced_diff(a: Dfa, pa: int, b: Dfa, pb: int) -> DiffResult:
    # one shared memo serves same-machine and cross-machine queries alike
    return symmetric_difference(induce(a, pa), induce(b, pb))


def clear_memo() -> None:
    """Drop all cached ~ verdicts (frees the machines they keep alive)."""
    _induced_diff.cache_clear()


def states_finitely_different(d: Dfa, p: int, q: int) -> tuple[bool, DiffResult]:
    """Decide p ~ q inside one machine; the DiffResult carries words or a lasso."""
    for s in (p, q):
        if s not in d.states:
            raise ValueError(f"state {s} out of range")
    if p > q:
        p, q = q, p
    diff = _induced_diff(d, p, d, q)
    return diff.finite, diff


def cross_finitely_different(a: Dfa, p: int, b: Dfa, q: int) -> tuple[bool, DiffResult]:
    """Decide p ~ q for states of two different machines over one alphabet."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"alphabets differ: {a.alphabet!r} vs {b.alphabet!r}")
    if p not in a.states:
        raise ValueError(f"state {p} out of range")
    if q not in b.states:
        raise ValueError(f"state {q} out of range")
    diff = _induced_diff(a, p, b, q)
    return diff.finite, diff


def finite_language_by_minimization(d: Dfa) -> bool:
    """Finiteness decided structurally: minimize, then ask whether the infinite
    part is exactly one non-accepting state looping to itself."""
    m = minimize(d)
    inf = compute_parts(m).infinite
    if len(inf) != 1:
        return False
    (sink,) = inf
    return sink not in m.accepting and all(t == sink for t in m.delta[sink])


def states_finitely_different_by_shape(d: Dfa, p: int, q: int) -> bool:
    """The same verdict as :func:`states_finitely_different`, via the structural test."""
    for s in (p, q):
        if s not in d.states:
            raise ValueError(f"state {s} out of range")
    prod = product_xor(induce(d, p), induce(d, q))
    return finite_language_by_minimization(prod.dfa)


def state_class_partition(d: Dfa, *, check_all_pairs: bool = False) -> StateClassPartition:
    """Group the states of ``d`` into ~ classes.

    Transitivity lets most pairs be skipped once their classes are united; with
    ``check_all_pairs=True`` every pair is tested and cross-checked against the
    union-find closure (an inconsistency would be an implementation bug).
    """
    n = d.n_states
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    verdicts: dict[tuple[int, int], bool] = {}
    for p in range(n):
        for q in range(p + 1, n):
            if not check_all_pairs and find(p) == find(q):
                continue
            same, _ = states_finitely_different(d, p, q)
            if check_all_pairs:
                verdicts[(p, q)] = same
            if same:
                parent[find(q)] = find(p)
    if check_all_pairs:
        for (p, q), same in verdicts.items():
            if same != (find(p) == find(q)):
                raise AssertionError(
                    f"finite difference is not transitive over states {p}, {q}; this is a bug"
                )
    smallest: dict[int, int] = {}
    for q in range(n):
        root = find(q)
        if root not in smallest or q < smallest[root]:
            smallest[root] = q
    class_of = tuple(smallest[find(q)] for q in range(n))
    grouped: dict[int, list[int]] = {}
    for q in range(n):
        grouped.setdefault(class_of[q], []).append(q)
    classes = tuple(tuple(grouped[cid]) for cid in sorted(grouped))
    return StateClassPartition(class_of, classes)


def class_matching(a: Dfa, b: Dfa) -> dict[int, int] | None:
    """Bijection a-class-id -> b-class-id induced by ~ across machines, or None."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(f"alphabets differ: {a.alphabet!r} vs {b.alphabet!r}")
    pa = state_class_partition(a)
    pb = state_class_partition(b)
    if len(pa.classes) != len(pb.classes):
        return None
    out: dict[int, int] = {}
    for cls_a in pa.classes:
        rep_a = cls_a[0]
        partner = None
        for cls_b in pb.classes:
            same, _ = cross_finitely_different(a, rep_a, b, cls_b[0])
            if same:
                partner = cls_b[0]
                break
        if partner is None:
            return None
        out[cls_a[0]] = partner
    if len(set(out.values())) != len(pb.classes):
        return None
    return out


def signature_equal(a: Dfa, b: Dfa) -> bool:
    """Do the two machines touch exactly the same ~ classes of languages?"""
    return class_matching(a, b) is not None


def dfas_finitely_different(a: Dfa, b: Dfa) -> tuple[bool, DiffResult]:
    """Machine-level ~: do L(a) and L(b) differ on only finitely many words?"""
    diff = symmetric_difference(a, b)
    return diff.finite, diff

import pytest
from hypothesis import given, settings

from fdfa import fixtures
from fdfa.classes import dfas_finitely_different, states_finitely_different
from fdfa.core import Dfa
from fdfa.fmin import (
    FMergeError,
    f_merge,
    f_minimize,
    flip_finite_acceptance,
    is_f_minimal,
    redirect_boundary_transition,
)
from fdfa.language import symmetric_difference
from fdfa.minimize import is_minimized
from fdfa.parts import compute_parts

from conftest import dfas


def zero_machine():
    return fixtures.finite_language_dfa(["0"])


def test_f_merge_rewires_and_trims():
    merged = f_merge(zero_machine(), 1, 2)
    assert merged.n_states == 2
    assert not merged.accepting
    diff = symmetric_difference(zero_machine(), merged)
    assert diff.words == ("0",)


def test_f_merge_validation():
    with pytest.raises(FMergeError, match="out of range"):
        f_merge(zero_machine(), 9, 0)
    with pytest.raises(FMergeError, match="with itself"):
        f_merge(zero_machine(), 0, 0)
    with pytest.raises(FMergeError, match="infinite part"):
        f_merge(fixtures.onezstar(), 1, 2)
    with pytest.raises(FMergeError, match="not finitely different"):
        f_merge(fixtures.onezstar(), 0, 1)


def test_f_minimize_sigplus_trace():
    out, records = f_minimize(fixtures.sigplus())
    assert out == fixtures.all_words()
    assert len(records) == 1
    r = records[0]
    assert (r.merged, r.target, r.class_id) == (0, 1, 0)
    assert r.words_into_merged == ("",)
    assert r.class_diff_words == ("",)
    assert r.bound == 1


def test_f_minimize_zero_machine_needs_two_merges():
    out, records = f_minimize(zero_machine())
    assert out.n_states == 1
    assert not out.accepting
    assert [(r.merged, r.target) for r in records] == [(1, 2), (0, 1)]
    first = records[0]
    assert first.words_into_merged == ("0",)
    assert first.class_diff_words == ("",)


def test_f_minimize_reversed_reaches_same_size():
    canonical, _ = f_minimize(zero_machine())
    rev, records = f_minimize(zero_machine(), order="reversed")
    assert rev.n_states == canonical.n_states == 1
    # the reversed tie-break happens to get there in a single merge
    assert [(r.merged, r.target) for r in records] == [(0, 2)]


def test_f_minimize_rejects_unknown_order():
    with pytest.raises(ValueError, match="order"):
        f_minimize(zero_machine(), order="sideways")


def test_f_minimize_keeps_machines_in_class():
    for d in (zero_machine(), fixtures.sigplus(), fixtures.onezstar(), fixtures.zstar()):
        out, _ = f_minimize(d)
        assert dfas_finitely_different(d, out)[0]
        assert is_minimized(out)
        assert is_f_minimal(out)[0]


def test_is_f_minimal_verdicts():
    assert is_f_minimal(fixtures.all_words()) == (True, None)
    assert is_f_minimal(fixtures.onezstar()) == (True, None)
    ok, pair = is_f_minimal(fixtures.sigplus())
    assert not ok
    assert pair == (0, 1)
    ok, pair = is_f_minimal(zero_machine())
    assert not ok
    p, q = pair
    assert p in compute_parts(zero_machine()).finite
    assert states_finitely_different(zero_machine(), p, q)[0]


def test_flip_finite_acceptance():
    oz = fixtures.onezstar()
    flipped = flip_finite_acceptance(oz, {0})
    assert flipped.accepting == frozenset({0, 1})
    diff = symmetric_difference(oz, flipped)
    assert diff.words == ("",)
    assert is_f_minimal(flipped)[0]
    # flipping back restores the original
    assert flip_finite_acceptance(flipped, {0}) == oz


def test_flip_rejects_infinite_part_states():
    with pytest.raises(FMergeError, match="not in the finite part"):
        flip_finite_acceptance(fixtures.onezstar(), {1})
    with pytest.raises(ValueError, match="out of range"):
        flip_finite_acceptance(fixtures.onezstar(), {9})


def boundary_machine():
    # start 0 is the sole finite-part state; 1 and 2 induce 0+ and 0*,
    # finitely different targets reachable on '0' and via the 1-cycle at 3
    return Dfa("01", 0, {2, 3}, ((1, 3), (2, 4), (2, 4), (1, 3), (4, 4)))


def test_boundary_machine_shape():
    parts = compute_parts(boundary_machine())
    assert parts.finite == frozenset({0})
    assert states_finitely_different(boundary_machine(), 1, 2)[0]


def test_redirect_boundary_transition_legal():
    d = boundary_machine()
    redirected = redirect_boundary_transition(d, 0, "0", 2)
    # state 1 stays reachable through the cycle at 3, so nothing is trimmed
    assert redirected.n_states == 5
    assert redirected.delta[0] == (2, 3)
    diff = symmetric_difference(d, redirected)
    assert diff.words == ("0",)


def test_redirect_to_current_target_is_identity():
    d = boundary_machine()
    assert redirect_boundary_transition(d, 0, "0", 1) is d


def test_redirect_rejects_targets_outside_the_class():
    d = boundary_machine()
    with pytest.raises(FMergeError, match="not finitely different"):
        redirect_boundary_transition(d, 0, "0", 3)
    with pytest.raises(FMergeError, match="not finitely different"):
        redirect_boundary_transition(d, 0, "0", 4)


def test_redirect_rejects_wrong_shapes():
    d = boundary_machine()
    with pytest.raises(FMergeError, match="not in the finite part"):
        redirect_boundary_transition(d, 3, "0", 2)
    zero = zero_machine()
    with pytest.raises(FMergeError, match="does not enter the infinite part"):
        redirect_boundary_transition(zero, 0, "0", 2)


@given(dfas(max_states=4))
@settings(max_examples=40, deadline=None)
def test_f_minimize_properties(d):
    out, records = f_minimize(d)
    assert is_minimized(out)
    assert is_f_minimal(out)[0]
    assert dfas_finitely_different(d, out)[0]
    rev, _ = f_minimize(d, order="reversed")
    assert rev.n_states == out.n_states
    for r in records:
        realized = symmetric_difference(r.before, r.after)
        assert realized.finite
        assert len(realized.words) <= r.bound

import pytest

from nfakit import (
    Graph,
    Nfa,
    NotAcyclicError,
    NotUnaryError,
    SymbolNotInAlphabetError,
    accepts_length,
    enumerate_naive,
    reduce_triangle,
    simulate,
)
from nfakit.cli import random_layered_nfa

from conftest import random_nfa, seeded

C4 = Graph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
K3 = Graph(3, frozenset({(0, 1), (1, 2), (0, 2)}))


def chain_nfa(n, finals):
    transitions = frozenset((i, "a", i + 1) for i in range(n - 1))
    return Nfa(n, ("a",), 0, frozenset(finals), transitions)


# ---------------------------------------------------------------------------
# accepts_length


def test_self_loop_accepts_every_length():
    star = Nfa(1, ("a",), 0, frozenset({0}), {(0, "a", 0)})
    for ell in (0, 1, 2, 17, 1000, 1_000_000):
        assert accepts_length(star, ell)


def test_square_reduction_rejects_target_length():
    assert not accepts_length(reduce_triangle(C4).nfa, 6)


def test_triangle_reduction_accepts_target_length():
    nfa = reduce_triangle(K3).nfa
    assert accepts_length(nfa, 5)
    assert simulate(nfa, "a" * 5)


def test_length_zero_means_start_is_final():
    assert accepts_length(Nfa(2, ("a",), 0, frozenset({0}), {(0, "a", 1)}), 0)
    assert not accepts_length(chain_nfa(2, {1}), 0)


def test_acyclic_rejects_lengths_at_or_beyond_state_count():
    rng = seeded(31)
    for trial in range(15):
        nfa = random_layered_nfa(rng.randint(1, 12), 900 + trial)
        for ell in range(nfa.state_count, nfa.state_count + 4):
            assert not accepts_length(nfa, ell)


# ---------------------------------------------------------------------------
# simulate


def test_empty_word():
    assert simulate(Nfa(1, ("a",), 0, frozenset({0}), frozenset()), "")
    assert not simulate(chain_nfa(2, {1}), "")


def test_chain_accepts_exactly_its_length():
    nfa = chain_nfa(2, {1})
    assert simulate(nfa, "a")
    assert not simulate(nfa, "aa")


def test_simulate_rejects_foreign_symbols():
    with pytest.raises(SymbolNotInAlphabetError):
        simulate(chain_nfa(2, {1}), "ab")


def path_search(nfa, word):
    """Oracle: memoized search for an accepting transition path."""
    by_source = {}
    for src, sym, dst in nfa.transitions:
        by_source.setdefault((src, sym), []).append(dst)
    seen = {}

    def go(state, index):
        key = (state, index)
        if key in seen:
            return seen[key]
        if index == len(word):
            result = state in nfa.finals
        else:
            result = any(
                go(nxt, index + 1)
                for nxt in by_source.get((state, word[index]), ())
            )
        seen[key] = result
        return result

    return go(nfa.start, 0)


def test_simulate_matches_path_search_on_random_nfas():
    rng = seeded(32)
    words = [""]
    frontier = [""]
    for _ in range(6):
        frontier = [w + ch for w in frontier for ch in "ab"]
        words.extend(frontier)
    for _ in range(500):
        nfa = random_nfa(rng, max_states=10)
        for word in words:
            assert simulate(nfa, word) == path_search(nfa, word)


def test_simulate_agrees_with_accepts_length_on_unary_nfas():
    rng = seeded(33)
    cyclic = Nfa(3, ("a",), 0, frozenset({2}), {(0, "a", 1), (1, "a", 2), (2, "a", 0)})
    cases = [cyclic] + [random_layered_nfa(rng.randint(1, 10), 40 + t) for t in range(15)]
    for nfa in cases:
        for ell in range(nfa.state_count + 1):
            assert simulate(nfa, "a" * ell) == accepts_length(nfa, ell)


# ---------------------------------------------------------------------------
# enumerate_naive


def test_enumerate_single_final_start():
    assert enumerate_naive(Nfa(1, ("a",), 0, frozenset({0}), frozenset())) == (0,)


def test_enumerate_chain_finals():
    assert enumerate_naive(chain_nfa(4, {1, 3})) == (1, 3)


def test_enumerate_square_reduction_golden_set():
    # frozen from this operation's own first run; excludes 6, the
    # length that would witness a triangle
    assert enumerate_naive(reduce_triangle(C4).nfa) == (3, 5, 7, 9)


def test_enumerate_requires_unary():
    binary = Nfa(1, ("a", "b"), 0, frozenset({0}), frozenset())
    with pytest.raises(NotUnaryError):
        enumerate_naive(binary)


def test_enumerate_requires_acyclic():
    loop = Nfa(1, ("a",), 0, frozenset({0}), {(0, "a", 0)})
    with pytest.raises(NotAcyclicError):
        enumerate_naive(loop)


def test_enumerate_membership_matches_accepts_length():
    for trial in range(25):
        nfa = random_layered_nfa(3 + trial % 12, 7000 + trial)
        members = set(enumerate_naive(nfa))
        for ell in range(nfa.state_count):
            assert accepts_length(nfa, ell) == (ell in members)

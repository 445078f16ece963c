"""Cyclic and acyclic de Bruijn sequences: counts, checks, generators."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prismatic import (
    DeBruijnSequence,
    acyclic_from_cyclic,
    count_acyclic,
    count_cyclic,
    enumerate_all_cyclic,
    generate_cyclic,
    is_acyclic_debruijn,
    is_cyclic_debruijn,
)
from prismatic.debruijn import (
    BadIndexError,
    SequenceError,
    TooLargeError,
    all_rotations,
    rotated,
)

from goldens import CYC16, LEX_LEAST


def test_count_formulas():
    assert count_cyclic(2, 2) == 1
    assert count_cyclic(2, 3) == 2
    assert count_cyclic(2, 4) == 16
    assert count_cyclic(3, 2) == 24
    assert count_acyclic(2, 3) == 16
    assert count_acyclic(3, 2) == 216
    # acyclic = cyclic * n^k (one start per term)
    for n, k in [(2, 2), (2, 3), (2, 4), (3, 2), (4, 2)]:
        assert count_acyclic(n, k) == count_cyclic(n, k) * n**k


def test_known_cyclic_sequence_checks():
    assert is_cyclic_debruijn(CYC16, 2, 4)
    assert not is_cyclic_debruijn(CYC16[:-1], 2, 4)
    broken = (1,) + CYC16[1:]
    assert not is_cyclic_debruijn(broken, 2, 4)


def test_cyclic_check_wraps_around():
    assert is_cyclic_debruijn((1, 1, 2, 2), 2, 2)
    assert not is_cyclic_debruijn((1, 2, 1, 2), 2, 2)


def test_acyclic_check():
    word = CYC16 + CYC16[:3]
    assert is_acyclic_debruijn(word, 2, 4)
    assert not is_acyclic_debruijn(CYC16, 2, 4)  # wrong length
    assert not is_acyclic_debruijn(word[:-1] + (word[-1] % 2 + 1,), 2, 4)


def test_sequence_dataclass_validates():
    seq = DeBruijnSequence(2, 4, CYC16)
    assert seq.text() == "(" + ",".join(str(s) for s in CYC16) + ")"
    with pytest.raises(SequenceError):
        DeBruijnSequence(2, 4, CYC16[:-1])
    with pytest.raises(SequenceError):
        DeBruijnSequence(2, 4, (1,) + CYC16[1:])


def test_acyclic_from_cyclic_start_zero():
    seq = DeBruijnSequence(2, 4, CYC16)
    acyc = acyclic_from_cyclic(seq, 0)
    assert acyc.symbols == CYC16 + (2, 1, 2)
    assert not acyc.cyclic
    assert acyc.symbols[: 3] == acyc.symbols[-3:]


def test_acyclic_from_cyclic_every_start():
    seq = DeBruijnSequence(2, 4, CYC16)
    words = {acyclic_from_cyclic(seq, s).symbols for s in range(16)}
    assert len(words) == 16
    assert all(is_acyclic_debruijn(w, 2, 4) for w in words)


def test_acyclic_from_cyclic_bad_start():
    seq = DeBruijnSequence(2, 4, CYC16)
    with pytest.raises(BadIndexError):
        acyclic_from_cyclic(seq, 16)
    with pytest.raises(BadIndexError):
        acyclic_from_cyclic(seq, -1)


def test_lex_least_generator_goldens():
    for (n, k), expected in LEX_LEAST.items():
        seq = generate_cyclic(n, k, method="greedy-least")
        assert seq.symbols == expected
        assert is_cyclic_debruijn(seq.symbols, n, k)


def test_lex_least_is_minimal_among_rotations():
    seq = generate_cyclic(2, 4)
    assert seq.symbols == min(all_rotations(seq))


def test_lex_least_is_global_minimum_small():
    # against full enumeration with all rotations
    for n, k in [(2, 2), (2, 3), (3, 2)]:
        best = min(
            rot for s in enumerate_all_cyclic(n, k) for rot in all_rotations(s)
        )
        assert generate_cyclic(n, k).symbols == best


def test_eulerian_generator_seeded():
    for seed in range(6):
        seq = generate_cyclic(3, 2, method="eulerian", seed=seed)
        assert is_cyclic_debruijn(seq.symbols, 3, 2)
    a = generate_cyclic(3, 2, method="eulerian", seed=3)
    b = generate_cyclic(3, 2, method="eulerian", seed=3)
    assert a == b


def test_generator_rejects_unknown_method():
    with pytest.raises(SequenceError):
        generate_cyclic(2, 3, method="by-hand")


def test_generator_rejects_huge_orders():
    with pytest.raises(TooLargeError):
        generate_cyclic(10, 7)


def test_enumerate_matches_formula():
    assert len(enumerate_all_cyclic(2, 2)) == 1
    assert len(enumerate_all_cyclic(2, 3)) == 2
    assert len(enumerate_all_cyclic(2, 4)) == 16
    assert len(enumerate_all_cyclic(3, 2)) == 24


def test_enumerate_matches_brute_force():
    # independent oracle: generate every word, filter, dedupe by rotation
    def brute(n, k):
        length = n**k
        reps = set()
        for word in itertools.product(range(1, n + 1), repeat=length):
            if is_cyclic_debruijn(word, n, k):
                reps.add(
                    min(
                        tuple(word[(i + j) % length] for j in range(length))
                        for i in range(length)
                    )
                )
        return reps

    for n, k in [(2, 2), (2, 3), (3, 2)]:
        enumerated = {min(all_rotations(s)) for s in enumerate_all_cyclic(n, k)}
        assert enumerated == brute(n, k)


def test_enumerate_yields_distinct_valid_sequences():
    seqs = enumerate_all_cyclic(2, 4)
    assert len({s.symbols for s in seqs}) == 16
    for s in seqs:
        assert is_cyclic_debruijn(s.symbols, 2, 4)
        assert s.symbols[:4] == (1, 1, 1, 1)


def test_enumerate_rejects_huge_orders():
    with pytest.raises(TooLargeError):
        enumerate_all_cyclic(4, 4)


def test_rotated():
    assert rotated((1, 2, 3, 4), 2) == (3, 4, 1, 2)
    assert rotated((1, 2, 3, 4), 0) == (1, 2, 3, 4)


def test_all_rotations():
    rots = all_rotations(DeBruijnSequence(2, 2, (1, 1, 2, 2)))
    assert len(rots) == 4
    assert (2, 2, 1, 1) in rots
    acyc = acyclic_from_cyclic(DeBruijnSequence(2, 2, (1, 1, 2, 2)), 0)
    with pytest.raises(SequenceError):
        all_rotations(acyc)


def test_trivial_single_symbol_cases():
    # one symbol: the cyclic sequence has length 1^k = 1
    assert count_cyclic(1, 2) == 1
    assert is_cyclic_debruijn((1,), 1, 2)
    seq = generate_cyclic(1, 2)
    assert seq.symbols == (1,)
    assert len(enumerate_all_cyclic(1, 2)) == 1


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2)]),
    st.integers(0, 999),
)
def test_eulerian_output_is_always_valid(order, seed):
    n, k = order
    seq = generate_cyclic(n, k, method="eulerian", seed=seed)
    assert is_cyclic_debruijn(seq.symbols, n, k)
    assert len(seq.symbols) == n**k


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(2, 3), (2, 4), (3, 2)]), st.integers(0, 99))
def test_every_rotation_is_cyclic_debruijn(order, seed):
    n, k = order
    seq = generate_cyclic(n, k, method="eulerian", seed=seed)
    for rot in all_rotations(seq):
        assert is_cyclic_debruijn(rot, n, k)

from __future__ import annotations

import itertools
import random

import pytest

from qhk.adem import adem_pair, admissible_expansion
from qhk.words import is_admissible_ops


def test_known_pairs():
    assert adem_pair(7, 3) == frozenset()
    assert adem_pair(6, 2) == frozenset({(5, 3)})
    assert adem_pair(5, 2) == frozenset()
    assert adem_pair(4, 1) == frozenset({(3, 2)})
    assert adem_pair(9, 3) == frozenset({(7, 5)})
    assert adem_pair(3, 1) == frozenset()   # C(0,1) kills the only candidate


def test_pair_requires_inadmissible_input():
    with pytest.raises(ValueError):
        adem_pair(4, 2)
    with pytest.raises(ValueError):
        adem_pair(3, 2)
    with pytest.raises(ValueError):
        adem_pair(3, 0)


def test_pair_outputs_are_admissible_and_degree_preserving():
    for b in range(1, 33):
        for a in range(2 * b + 1, 2 * b + 65):
            for x, y in adem_pair(a, b):
                assert x + y == a + b
                assert 1 <= y
                assert x <= 2 * y
                assert x < a


def test_pair_parity():
    # odd,odd -> every output pair odd,odd; odd,even -> every output odd,even
    for b in range(1, 33):
        for a in range(2 * b + 1, 2 * b + 65):
            for x, y in adem_pair(a, b):
                if a % 2 == 1 and b % 2 == 1:
                    assert x % 2 == 1 and y % 2 == 1
                if a % 2 == 1 and b % 2 == 0:
                    assert x % 2 == 1 and y % 2 == 0


def test_expansion_fixes_admissible_words():
    for ops in [(2,), (4, 2), (9, 5), (8, 4, 2), (17, 9, 5)]:
        assert is_admissible_ops(ops)
        assert admissible_expansion(ops) == frozenset({ops})
    assert admissible_expansion(()) == frozenset({()})


def test_expansion_known_values():
    assert admissible_expansion((6, 2)) == frozenset({(5, 3)})
    assert admissible_expansion((7, 3)) == frozenset()
    assert admissible_expansion((9, 3, 2)) == frozenset()   # (9,3)->(7,5), then (5,2)->0


def test_expansion_outputs_admissible_with_constant_sum():
    rng = random.Random(11)
    for _ in range(300):
        s = rng.randrange(1, 5)
        ops = tuple(rng.randrange(1, 20) for _ in range(s))
        for word in admissible_expansion(ops):
            assert is_admissible_ops(word)
            assert sum(word) == sum(ops)
            assert len(word) == len(ops)


def _expand_anywhere(ops, rng):
    # same rewriting, but resolving a randomly chosen inadmissible pair;
    # agreement with the leftmost strategy is the confluence check
    bad = [j for j in range(len(ops) - 1) if ops[j] > 2 * ops[j + 1]]
    if not bad:
        return frozenset({ops})
    j = rng.choice(bad)
    out = set()
    for x, y in adem_pair(ops[j], ops[j + 1]):
        out ^= _expand_anywhere(ops[:j] + (x, y) + ops[j + 2 :], rng)
    return frozenset(out)


def test_expansion_strategy_independent():
    rng = random.Random(7)
    for _ in range(200):
        s = rng.randrange(2, 5)
        ops = tuple(rng.randrange(1, 16) for _ in range(s))
        assert _expand_anywhere(ops, rng) == admissible_expansion(ops)


def test_expansion_exhaustive_small_triples():
    for ops in itertools.product(range(1, 9), repeat=3):
        for word in admissible_expansion(ops):
            assert is_admissible_ops(word)
            assert sum(word) == sum(ops)


def test_expansion_rejects_nonpositive():
    with pytest.raises(ValueError):
        admissible_expansion((3, 0))

from __future__ import annotations

import math

import pytest

from qhk.mod2 import binom_mod2, lowest_zero_bit


def test_matches_math_comb_on_naturals():
    for n in range(65):
        for k in range(65):
            assert binom_mod2(n, k) == math.comb(n, k) % 2 if k <= n else binom_mod2(n, k) == 0


def test_zero_above_diagonal():
    for n in range(40):
        for k in range(n + 1, n + 20):
            assert binom_mod2(n, k) == 0


def test_negative_k_is_zero():
    assert binom_mod2(5, -1) == 0
    assert binom_mod2(-3, -2) == 0
    assert binom_mod2(0, -7) == 0


def test_negative_n_is_two_adic():
    # -1 has all bits set, so it dominates everything
    for k in range(100):
        assert binom_mod2(-1, k) == 1
    # -2 = ...11110 misses exactly the bit-0 digit
    assert binom_mod2(-2, 1) == 0
    assert binom_mod2(-2, 2) == 1
    assert binom_mod2(-2, 3) == 0
    # Pascal still holds 2-adically: C(n,k) = C(n-1,k-1) + C(n-1,k)
    for n in range(-16, 16):
        for k in range(1, 32):
            assert binom_mod2(n, k) == (binom_mod2(n - 1, k - 1) + binom_mod2(n - 1, k)) % 2


def test_even_choose_odd_is_even():
    # bit 0 of k cannot be dominated by an even n; this parity fact drives
    # the all-odd-entries closure of the Steenrod action downstream
    for n in range(0, 128, 2):
        for k in range(1, 128, 2):
            assert binom_mod2(n, k) == 0


def test_lowest_zero_bit_examples():
    assert lowest_zero_bit(9) == 1
    assert lowest_zero_bit(7) == 3
    assert lowest_zero_bit(4) == 0
    assert lowest_zero_bit(1) == 1
    assert lowest_zero_bit(2) == 0
    for k in range(1, 16):
        assert lowest_zero_bit(2**k - 1) == k
        assert lowest_zero_bit(2**k) == 0


def test_lowest_zero_bit_rejects_nonpositive():
    with pytest.raises(ValueError):
        lowest_zero_bit(0)
    with pytest.raises(ValueError):
        lowest_zero_bit(-5)


def test_lowest_zero_bit_binomial_characterization():
    # least t with C(n - 2^t, 2^t) odd; needs the 2-adic extension at
    # n = 2^k - 1 where n - 2^k = -1
    for n in range(1, 2048):
        t = 0
        while binom_mod2(n - 2**t, 2**t) == 0:
            t += 1
        assert t == lowest_zero_bit(n)

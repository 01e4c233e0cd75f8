"""Binomial coefficients mod 2 and the dyadic valuation-style invariant rho.

Everything downstream reduces coefficient questions to Lucas' theorem:
C(n, k) is odd iff the base-2 digits of k are dominated by those of n,
i.e. n & k == k.  We extend n to negative integers 2-adically (two's
complement supplies the digit string), so C(-1, k) = 1 for every k >= 0.
Callers that want the partition-style convention C(n, k) = 0 for n < 0
must clamp before calling.
"""

from __future__ import annotations


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 via digit domination; n may be negative (2-adic)."""
    if k < 0:
        return 0
    return 1 if n & k == k else 0


def lowest_zero_bit(n: int) -> int:
    """Position of the lowest 0 in the binary expansion of n >= 1.

    Equivalently the least t with C(n - 2^t, 2^t) odd: subtracting 2^t
    borrows through the low run of 1s exactly when bit t is 0, and digit
    domination of 2^t survives only then.
    """
    if n < 1:
        raise ValueError(f"lowest_zero_bit needs n >= 1, got {n}")
    i = 0
    while n & 1:
        n >>= 1
        i += 1
    return i

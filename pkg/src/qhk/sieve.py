"""Degreewise linear algebra over GF(2) and the structure-theorem checks.

Everything here reduces to kernels of explicit maps between finite
monomial bases.  The length cap is honest: the Steenrod action, the
coproduct legs and the halving root never increase word lengths, so the
capped spans are genuinely closed under every map we take kernels of, and
computed kernels are true subspaces of the capped span (dimensions are
monotone in the cap, not exact values for the whole algebra).

Reports carry the exact inputs, a counter of performed checks, failure
strings, and an `excluded` list for classes the statement deliberately
does not cover (suspension-killed classes in the factorization check,
odd-degree classes over an unsuspended space in the spherical-form check).
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import (
    EL_ZERO,
    Element,
    Monomial,
    _tensor_mul,
    apply_q,
    coproduct,
    decomposable_part,
    el_mul,
    el_square,
    indecomposable_part,
    mono_word,
    normalize,
    reduced_coproduct,
    root,
    suspend,
    suspend_gen,
)
from .exprs import format_element
from .mod2 import lowest_zero_bit
from .spaces import Space, gen_degree, is_gen_A_annihilated, is_suspension_like, space_name
from .steenrod import element_is_A_annihilated, madsen_action, sq_down, word_is_A_annihilated
from .words import AdmissibleGen, admissible_words, excess, is_admissible_ops, word_sort_key


# -- GF(2) kernels ------------------------------------------------------------

def f2_kernel(rows) -> set[tuple[int, ...]]:
    """Kernel basis of the matrix with the given 0/1 rows, by the
    free-column method on the reduced row echelon form."""
    rows = [list(r) for r in rows]
    if not rows:
        raise ValueError("no rows: the ambient dimension would be ambiguous")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("rows of unequal length")
    if any(x not in (0, 1) for r in rows for x in r):
        raise ValueError("entries must be 0 or 1")
    pivots: dict[int, int] = {}
    for r in rows:
        m = 0
        for j, x in enumerate(r):
            m |= x << j
        # clear every pivot column; ascending sweep terminates because each
        # xor zeroes bit c and touches only higher bits
        c = 0
        while m >> c:
            if (m >> c) & 1 and c in pivots:
                m ^= pivots[c]
            else:
                c += 1
        if m:
            lead = (m & -m).bit_length() - 1
            for c2 in pivots:
                if (pivots[c2] >> lead) & 1:
                    pivots[c2] ^= m
            pivots[lead] = m
    out = set()
    for f in range(n):
        if f in pivots:
            continue
        vec = [0] * n
        vec[f] = 1
        for c, m in pivots.items():
            if (m >> f) & 1:
                vec[c] = 1
        out.add(tuple(vec))
    return out


def _map_kernel(images: list[int]) -> list[int]:
    """Kernel of e_i -> images[i], as domain bitmasks, by elimination with
    trackers.  Deterministic in the input order."""
    lead: dict[int, tuple[int, int]] = {}
    out = []
    for i, img in enumerate(images):
        trk = 1 << i
        while img:
            top = img.bit_length() - 1
            if top not in lead:
                lead[top] = (img, trk)
                break
            img2, trk2 = lead[top]
            img ^= img2
            trk ^= trk2
        else:
            out.append(trk)
    return out


# -- monomial bases and subspaces ----------------------------------------------

@lru_cache(maxsize=None)
def monomial_basis(space: Space, degree: int, max_len: int) -> tuple[Monomial, ...]:
    """All products of word powers of exactly this degree (word length
    capped), in a fixed enumeration order."""
    if degree < 0:
        return ()
    words = [w for d in range(1, degree + 1) for w in admissible_words(space, d, max_len)]
    out: list[Monomial] = []

    def rec(idx: int, remaining: int, acc: list) -> None:
        if remaining == 0:
            pairs = sorted(acc, key=lambda we: word_sort_key(we[0]))
            out.append(Monomial(tuple(pairs)))
            return
        if idx == len(words):
            return
        rec(idx + 1, remaining, acc)
        w = words[idx]
        e = 1
        while w.degree * e <= remaining:
            rec(idx + 1, remaining - w.degree * e, acc + [(w, e)])
            e += 1

    rec(0, degree, [])
    return tuple(out)


def _steenrod_images(space: Space, degree: int, max_len: int) -> list[int]:
    """Stacked images of every basis monomial under all Sq^{2^k} below the
    degree, as bitmasks over the concatenated target bases."""
    basis = monomial_basis(space, degree, max_len)
    ops = []
    a = 1
    while a < degree:
        target = monomial_basis(space, degree - a, max_len)
        ops.append((a, {m: i for i, m in enumerate(target)}, len(target)))
        a *= 2
    images = []
    for m in basis:
        mask = 0
        off = 0
        for a, index, size in ops:
            for mm in sq_down(a, frozenset({m})):
                mask |= 1 << (off + index[mm])
            off += size
        images.append(mask)
    return images


def _coproduct_images(space: Space, degree: int, max_len: int) -> list[int]:
    basis = monomial_basis(space, degree, max_len)
    columns: dict[tuple[Monomial, Monomial], int] = {}
    images = []
    for m in basis:
        mask = 0
        for pair in sorted(
            reduced_coproduct(frozenset({m})),
            key=lambda lr: (_basis_pos(space, max_len, lr[0]), _basis_pos(space, max_len, lr[1])),
        ):
            col = columns.setdefault(pair, len(columns))
            mask |= 1 << col
        images.append(mask)
    return images


@lru_cache(maxsize=None)
def _basis_index(space: Space, degree: int, max_len: int) -> dict:
    return {m: i for i, m in enumerate(monomial_basis(space, degree, max_len))}


def _basis_pos(space: Space, max_len: int, m: Monomial) -> tuple[int, int]:
    return (m.degree, _basis_index(space, m.degree, max_len)[m])


def _kernel_elements(space: Space, degree: int, max_len: int, images: list[int]) -> tuple[Element, ...]:
    basis = monomial_basis(space, degree, max_len)
    out = []
    for mask in _map_kernel(images):
        out.append(frozenset(basis[i] for i in range(len(basis)) if (mask >> i) & 1))
    return tuple(out)


@lru_cache(maxsize=None)
def annihilated_subspace(space: Space, degree: int, max_len: int) -> tuple[Element, ...]:
    """Basis of the classes killed by every Sq^{2^k}, within the capped span."""
    return _kernel_elements(space, degree, max_len, _steenrod_images(space, degree, max_len))


@lru_cache(maxsize=None)
def primitive_subspace(space: Space, degree: int, max_len: int) -> tuple[Element, ...]:
    return _kernel_elements(space, degree, max_len, _coproduct_images(space, degree, max_len))


@lru_cache(maxsize=None)
def spherical_candidates(space: Space, degree: int, max_len: int) -> tuple[Element, ...]:
    """Classes that are both A-annihilated and primitive: the survivors every
    spherical class must be among."""
    st = _steenrod_images(space, degree, max_len)
    cp = _coproduct_images(space, degree, max_len)
    shift = max((im.bit_length() for im in st), default=0)
    return _kernel_elements(
        space, degree, max_len, [a | (b << shift) for a, b in zip(st, cp)]
    )


def sample_members(basis, max_vectors: int) -> list[Element]:
    """Deterministic nonzero members: the basis itself first, then sums in
    ascending binary-mask order, capped."""
    n = len(basis)
    out = list(basis[:max_vectors])
    mask = 3
    while len(out) < max_vectors and n > 1 and mask < (1 << n):
        if mask & (mask - 1):
            acc: set = set()
            for i in range(n):
                if (mask >> i) & 1:
                    acc ^= basis[i]
            out.append(frozenset(acc))
        mask += 1
    return out


# -- reports -------------------------------------------------------------------

@dataclass
class VerifyReport:
    theorem: str
    space: str
    bounds: dict
    checked: int
    failures: list[str] = field(default_factory=list)
    excluded: list[str] = field(default_factory=list)
    millis: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "space": self.space,
            "bounds": self.bounds,
            "checked": self.checked,
            "failures": list(self.failures),
            "excluded": list(self.excluded),
            "millis": self.millis,
        }


# -- theorem 1: the annihilation criterion --------------------------------------

def verify_annihilation(space: Space, max_degree: int, max_len: int) -> VerifyReport:
    t0 = time.perf_counter()
    report = VerifyReport(
        "1", space_name(space), {"max_degree": max_degree, "max_length": max_len}, 0
    )
    for degree in range(1, max_degree + 1):
        for w in admissible_words(space, degree, max_len):
            report.checked += 1
            criterion = word_is_A_annihilated(w)
            action = element_is_A_annihilated(frozenset({mono_word(w)}))
            if criterion != action:
                report.failures.append(
                    f"criterion says {criterion}, action says {action}: "
                    f"{format_element(frozenset({mono_word(w)}))}"
                )
    report.millis = int((time.perf_counter() - t0) * 1000)
    return report


# -- theorem 2: suspension factorization ----------------------------------------

def _witness_exists(w: AdmissibleGen) -> bool:
    if not w.ops:
        return is_gen_A_annihilated(w.gen)
    entries = w.lower
    for j in range(1, len(w.ops) + 1):
        for n in range(1, entries[j - 1] + 1):
            witness = normalize(w.ops[j - 1 :], suspend_gen(w.gen, n))
            if witness and element_is_A_annihilated(witness):
                return True
    return False


def verify_suspension_factorization(
    space: Space, max_degree: int, max_len: int, max_vectors: int = 64
) -> VerifyReport:
    """Sampled members of the annihilated subspace with nonzero suspension
    image must have, in every word-length stratum of their indecomposable
    part, a leading term that desuspends to an annihilated class after
    dropping a prefix of its operations."""
    t0 = time.perf_counter()
    report = VerifyReport(
        "2",
        space_name(space),
        {"max_degree": max_degree, "max_length": max_len, "max_vectors": max_vectors},
        0,
    )
    for degree in range(1, max_degree + 1):
        for xi in sample_members(annihilated_subspace(space, degree, max_len), max_vectors):
            report.checked += 1
            if not suspend(xi):
                report.excluded.append(f"suspension image zero: {format_element(xi)}")
                continue
            strata: dict[int, list[AdmissibleGen]] = {}
            for m in indecomposable_part(xi):
                w = m.factors[0][0]
                strata.setdefault(len(w.ops), []).append(w)
            for length, ws in sorted(strata.items()):
                leading = max(ws, key=word_sort_key)
                if not _witness_exists(leading):
                    report.failures.append(
                        f"no suspension witness for the length-{length} leading term "
                        f"{format_element(frozenset({mono_word(leading)}))} of {format_element(xi)}"
                    )
    report.millis = int((time.perf_counter() - t0) * 1000)
    return report


# -- theorem 3: the shape of spherical candidates --------------------------------

def _indecomposables_all_odd(xi: Element) -> bool:
    return all(
        i % 2 == 1 for m in indecomposable_part(xi) for i in m.factors[0][0].ops
    )


def verify_spherical_form(
    space: Space, max_degree: int, max_len: int, max_vectors: int = 64
) -> VerifyReport:
    """Candidates (annihilated and primitive) must, modulo decomposables, be
    sums of all-odd words; in odd degrees over a suspension-like space the
    decomposable part must vanish outright.  Over a space that is not a
    suspension the odd-degree statement is not claimed, so violations land
    in `excluded` rather than in `failures`.  Sampled annihilated members
    are also checked for the interior facts: indecomposable terms of excess
    >= 2 have odd leading entry, and in odd degrees so do terms of excess
    >= 3."""
    t0 = time.perf_counter()
    report = VerifyReport(
        "3",
        space_name(space),
        {"max_degree": max_degree, "max_length": max_len, "max_vectors": max_vectors},
        0,
    )
    suspension = is_suspension_like(space)
    for degree in range(1, max_degree + 1):
        for xi in sample_members(annihilated_subspace(space, degree, max_len), max_vectors):
            report.checked += 1
            for m in indecomposable_part(xi):
                w = m.factors[0][0]
                if not w.ops or w.ops[0] % 2:
                    continue
                ex = excess(w.ops, gen_degree(w.gen))
                if ex >= 2:
                    report.failures.append(
                        f"annihilated member has an even-led term of excess >= 2: "
                        f"{format_element(frozenset({m}))} in {format_element(xi)}"
                    )
                if degree % 2 and ex >= 3:
                    report.failures.append(
                        f"odd-degree annihilated member has an even-led term of "
                        f"excess >= 3: {format_element(frozenset({m}))}"
                    )
        for xi in sample_members(spherical_candidates(space, degree, max_len), max_vectors):
            report.checked += 1
            odd = _indecomposables_all_odd(xi)
            if degree % 2 == 0:
                if not odd:
                    report.failures.append(
                        f"even-degree candidate whose indecomposable part has an "
                        f"even entry: {format_element(xi)}"
                    )
                continue
            clean = odd and not decomposable_part(xi)
            if clean:
                continue
            if suspension:
                report.failures.append(
                    f"odd-degree candidate over a suspension is not an all-odd "
                    f"word sum: {format_element(xi)}"
                )
            else:
                report.excluded.append(format_element(xi))
    report.millis = int((time.perf_counter() - t0) * 1000)
    return report


# -- root and coproduct compatibility --------------------------------------------

def verify_root_compatibility(
    space: Space,
    max_len: int = 2,
    hopf_degree: int = 12,
    square_degree: int = 10,
    word_degree: int = 16,
    primitive_degree: int = 16,
) -> VerifyReport:
    t0 = time.perf_counter()
    report = VerifyReport(
        "root",
        space_name(space),
        {
            "max_length": max_len,
            "hopf_degree": hopf_degree,
            "square_degree": square_degree,
            "word_degree": word_degree,
            "primitive_degree": primitive_degree,
        },
        0,
    )

    # coassociativity on basis monomials
    for degree in range(1, hopf_degree + 1):
        for m in monomial_basis(space, degree, max_len):
            report.checked += 1
            left: set = set()
            right: set = set()
            for l, r in coproduct(frozenset({m})):
                for l1, l2 in coproduct(frozenset({l})):
                    left ^= {(l1, l2, r)}
                for r1, r2 in coproduct(frozenset({r})):
                    right ^= {(l, r1, r2)}
            if left != right:
                report.failures.append(
                    f"coassociativity fails on {format_element(frozenset({m}))}"
                )

    # multiplicativity on pairs of basis monomials
    for d1 in range(1, hopf_degree):
        for d2 in range(d1, hopf_degree - d1 + 1):
            for m1 in monomial_basis(space, d1, max_len):
                for m2 in monomial_basis(space, d2, max_len):
                    report.checked += 1
                    lhs = coproduct(el_mul(frozenset({m1}), frozenset({m2})))
                    rhs = _tensor_mul(coproduct(frozenset({m1})), coproduct(frozenset({m2})))
                    if lhs != rhs:
                        report.failures.append(
                            f"coproduct is not multiplicative on "
                            f"{format_element(frozenset({m1}))} and {format_element(frozenset({m2}))}"
                        )

    # the root undoes squaring
    for degree in range(1, square_degree + 1):
        basis = monomial_basis(space, degree, max_len)
        for m in basis:
            report.checked += 1
            if root(el_square(frozenset({m}))) != frozenset({m}):
                report.failures.append(f"root(square) misses {format_element(frozenset({m}))}")
        whole = frozenset(basis)
        report.checked += 1
        if root(el_square(whole)) != whole:
            report.failures.append(f"root(square) misses the full sum in degree {degree}")

    # half-index commutation on basis words
    for degree in range(1, word_degree + 1):
        for w in admissible_words(space, degree, max_len):
            if not w.ops:
                continue
            report.checked += 1
            lhs = root(frozenset({mono_word(w)}))
            tail = frozenset({mono_word(AdmissibleGen(w.ops[1:], w.gen))})
            if w.ops[0] % 2 == 0:
                if lhs != apply_q(w.ops[0] // 2, root(tail)):
                    report.failures.append(
                        f"root does not halve the leading operation on "
                        f"{format_element(frozenset({mono_word(w)}))}"
                    )
            elif lhs != EL_ZERO:
                report.failures.append(
                    f"root survives an odd leading operation on "
                    f"{format_element(frozenset({mono_word(w)}))}"
                )

    # primitives have rootless indecomposable part
    for degree in range(2, primitive_degree + 1, 2):
        for xi in primitive_subspace(space, degree, max_len):
            report.checked += 1
            if root(indecomposable_part(xi)) != EL_ZERO:
                report.failures.append(
                    f"primitive with a rooted indecomposable part: {format_element(xi)}"
                )

    report.millis = int((time.perf_counter() - t0) * 1000)
    return report


def run_verifier(
    theorem: str,
    space: Space,
    max_degree: int | None = None,
    max_len: int = 2,
    max_vectors: int = 64,
) -> VerifyReport:
    """Dispatch by theorem label.  For "root" an explicit max_degree
    overrides all four internal bounds; otherwise the defaults apply."""
    if theorem == "root":
        if max_degree is None:
            return verify_root_compatibility(space, max_len)
        return verify_root_compatibility(
            space,
            max_len,
            hopf_degree=max_degree,
            square_degree=max_degree,
            word_degree=max_degree,
            primitive_degree=max_degree,
        )
    if max_degree is None:
        raise ValueError(f"theorem {theorem!r} needs a degree bound")
    if theorem == "1":
        return verify_annihilation(space, max_degree, max_len)
    if theorem == "2":
        return verify_suspension_factorization(space, max_degree, max_len, max_vectors)
    if theorem == "3":
        return verify_spherical_form(space, max_degree, max_len, max_vectors)
    raise ValueError(f"unknown theorem {theorem!r}")


# -- the sequence-level excess drop ----------------------------------------------

def _admissible_sequences(max_sum: int, max_len: int):
    for s in range(1, max_len + 1):
        for seq in itertools.product(range(1, max_sum + 1), repeat=s):
            if sum(seq) <= max_sum and is_admissible_ops(seq):
                yield seq


def check_curtis_bound(max_sum: int, max_len: int) -> tuple[int, list[str]]:
    """For admissible generator-free sequences whose adjacent pairs satisfy
    2 i_{j+1} - i_j < 2^{rho(i_{j+1})}, every admissible output of the
    sequence-level Steenrod action loses at least 2^{rho(i_1)} of excess,
    and rho is nondecreasing along the sequence."""
    checked = 0
    failures: list[str] = []
    for seq in _admissible_sequences(max_sum, max_len):
        if any(
            2 * seq[j + 1] - seq[j] >= 2 ** lowest_zero_bit(seq[j + 1])
            for j in range(len(seq) - 1)
        ):
            continue
        rhos = [lowest_zero_bit(i) for i in seq]
        if any(rhos[j] > rhos[j + 1] for j in range(len(seq) - 1)):
            failures.append(f"rho not nondecreasing along {seq}")
        bound = (seq[0] - sum(seq[1:])) - 2 ** lowest_zero_bit(seq[0])
        for a in range(1, sum(seq) + 1):
            checked += 1
            for k in madsen_action(a, seq, normalized=True):
                if k[0] - sum(k[1:]) > bound:
                    failures.append(f"Sq^{a} on {seq}: output {k} has excess above {bound}")
    return checked, failures

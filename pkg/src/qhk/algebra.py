"""The free Hopf algebra on admissible words, with exact mod-2 arithmetic.

Elements are frozensets of monomials (a set is a mod-2 sum); monomials are
sorted tuples of (word, exponent) factors.  Everything is hashable so the
heavy recursions can memoize.

The operation action on a single admissible word is where the calculus
lives: prepending an index usually breaks admissibility, Adem straightening
restores it, and each straightened sequence then collapses against the
generator by the excess rule

    e_1 < 0          ->  0
    e_1 = ... = e_t = 0, rest positive  ->  (Q^{i_{t+1}..i_s} x)^{2^t}

(the lower entries of an admissible sequence are nondecreasing, so the
zeros sit in a prefix; an index equal to the degree squares, below kills).
Composites and powers reduce to that via the Cartan formula and
Q^n(v^2) = (Q^{n/2} v)^2 for even n, 0 for odd n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .adem import admissible_expansion
from .spaces import (
    SPHERE,
    Generator,
    gen_degree,
    reduced_coproduct_gen,
    root_gen,
    suspend_space,
)
from .words import AdmissibleGen, lower_entries, word_sort_key


@dataclass(frozen=True)
class Monomial:
    """Product of word powers, factors ascending by word order."""

    factors: tuple[tuple[AdmissibleGen, int], ...]

    @property
    def degree(self) -> int:
        return sum(e * w.degree for w, e in self.factors)

    @property
    def total_exponent(self) -> int:
        return sum(e for _, e in self.factors)


MONO_ONE = Monomial(())

Element = frozenset  # of Monomial
TensorElement = frozenset  # of (Monomial, Monomial)

EL_ZERO: Element = frozenset()
EL_ONE: Element = frozenset({MONO_ONE})


def mono_from_pairs(pairs) -> Monomial:
    merged: dict[AdmissibleGen, int] = {}
    for w, e in pairs:
        if e < 0:
            raise ValueError("negative exponent")
        merged[w] = merged.get(w, 0) + e
    kept = [(w, e) for w, e in merged.items() if e > 0]
    kept.sort(key=lambda we: word_sort_key(we[0]))
    return Monomial(tuple(kept))


def mono_word(w: AdmissibleGen, e: int = 1) -> Monomial:
    return mono_from_pairs([(w, e)])


def el_gen(g: Generator) -> Element:
    return frozenset({mono_word(AdmissibleGen((), g))})


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return mono_from_pairs(a.factors + b.factors)


def mono_square(m: Monomial) -> Monomial:
    return Monomial(tuple((w, 2 * e) for w, e in m.factors))


def el_add(*els: Element) -> Element:
    out: set = set()
    for el in els:
        out ^= el
    return frozenset(out)


def el_mul(a: Element, b: Element) -> Element:
    out: set = set()
    for ma in a:
        for mb in b:
            out ^= {mono_mul(ma, mb)}
    return frozenset(out)


def el_square(el: Element) -> Element:
    # Frobenius is additive mod 2 and injective on monomials
    return frozenset(mono_square(m) for m in el)


def el_degree(el: Element) -> int | None:
    """Common degree of the terms; None for 0, error if mixed."""
    degs = {m.degree for m in el}
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError(f"inhomogeneous element, degrees {sorted(degs)}")
    return degs.pop()


def indecomposable_part(el: Element) -> Element:
    return frozenset(m for m in el if m.total_exponent == 1)


def decomposable_part(el: Element) -> Element:
    return frozenset(m for m in el if m.total_exponent != 1)


# -- the operation action ----------------------------------------------------

def evaluate_admissible(ops: tuple[int, ...], gen: Generator) -> Monomial | None:
    """Collapse an admissible sequence against a generator; None means 0."""
    entries = lower_entries(ops, gen_degree(gen))
    if entries and entries[0] < 0:
        return None
    t = 0
    while t < len(entries) and entries[t] == 0:
        t += 1
    return mono_word(AdmissibleGen(ops[t:], gen), 2**t)


def normalize(ops: tuple[int, ...], gen: Generator) -> Element:
    """The composite Q^ops applied to a generator, in basis form."""
    out: set = set()
    for seq in admissible_expansion(tuple(ops)):
        m = evaluate_admissible(seq, gen)
        if m is not None:
            out ^= {m}
    return frozenset(out)


@lru_cache(maxsize=None)
def _apply_q_mono(n: int, m: Monomial) -> Element:
    if not m.factors:
        return EL_ONE if n == 0 else EL_ZERO
    if n == 0:
        return EL_ZERO
    d = m.degree
    if n < d:
        return EL_ZERO
    if n == d:
        return frozenset({mono_square(m)})
    if len(m.factors) == 1:
        w, e = m.factors[0]
        if e == 1:
            return normalize((n,) + w.ops, w.gen)
        if e % 2 == 0:
            if n % 2:
                return EL_ZERO
            return el_square(_apply_q_mono(n // 2, mono_word(w, e // 2)))
        left: Monomial = mono_word(w)
        right: Monomial = mono_word(w, e - 1)
    else:
        w, e = m.factors[0]
        left = mono_word(w, e)
        right = Monomial(m.factors[1:])
    out: set = set()
    for i in range(n + 1):
        li = _apply_q_mono(i, left)
        if not li:
            continue
        rj = _apply_q_mono(n - i, right)
        for ml in li:
            for mr in rj:
                out ^= {mono_mul(ml, mr)}
    return frozenset(out)


def apply_q(n: int, el: Element) -> Element:
    if n < 0:
        raise ValueError("operation index must be >= 0")
    out: set = set()
    for m in el:
        out ^= _apply_q_mono(n, m)
    return frozenset(out)


# -- coproduct ----------------------------------------------------------------

def _tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    out: set = set()
    for la, ra in a:
        for lb, rb in b:
            out ^= {(mono_mul(la, lb), mono_mul(ra, rb))}
    return frozenset(out)


def _tensor_square(a: TensorElement) -> TensorElement:
    return frozenset((mono_square(l), mono_square(r)) for l, r in a)


TENSOR_ONE: TensorElement = frozenset({(MONO_ONE, MONO_ONE)})


@lru_cache(maxsize=None)
def _coproduct_word(w: AdmissibleGen) -> TensorElement:
    if not w.ops:
        out: set = {(mono_word(w), MONO_ONE), (MONO_ONE, mono_word(w))}
        for gl, gr in reduced_coproduct_gen(w.gen):
            out ^= {(mono_word(AdmissibleGen((), gl)), mono_word(AdmissibleGen((), gr)))}
        return frozenset(out)
    n = w.ops[0]
    inner = _coproduct_word(AdmissibleGen(w.ops[1:], w.gen))
    out = set()
    for l, r in inner:
        for i in range(n + 1):
            li = _apply_q_mono(i, l)
            if not li:
                continue
            rj = _apply_q_mono(n - i, r)
            for ml in li:
                for mr in rj:
                    out ^= {(ml, mr)}
    return frozenset(out)


def _tensor_pow(a: TensorElement, e: int) -> TensorElement:
    out = TENSOR_ONE
    sq = a
    while e:
        if e & 1:
            out = _tensor_mul(out, sq)
        sq = _tensor_square(sq)
        e >>= 1
    return out


@lru_cache(maxsize=None)
def _coproduct_mono(m: Monomial) -> TensorElement:
    out = TENSOR_ONE
    for w, e in m.factors:
        out = _tensor_mul(out, _tensor_pow(_coproduct_word(w), e))
    return out


def coproduct(el: Element) -> TensorElement:
    out: set = set()
    for m in el:
        out ^= _coproduct_mono(m)
    return frozenset(out)


def reduced_coproduct(el: Element) -> TensorElement:
    out = set(coproduct(el))
    for m in el:
        out ^= {(m, MONO_ONE), (MONO_ONE, m)}
    return frozenset(out)


def is_primitive(el: Element) -> bool:
    return not reduced_coproduct(el)


# -- suspension ----------------------------------------------------------------

def suspend_gen(g: Generator, k: int = 1) -> Generator:
    space = suspend_space(g.space, k)
    if space.kind == SPHERE:
        return Generator(space, space.dim)
    return Generator(space, g.index)


def suspend(el: Element, k: int = 1) -> Element:
    """Homology suspension: kills the unit and all decomposables, sends a
    word to the same sequence over the suspended generator (where its
    excess has dropped by one, possibly collapsing it to a square)."""
    for _ in range(k):
        out: set = set()
        for m in el:
            if m.total_exponent != 1:
                continue
            w = m.factors[0][0]
            res = evaluate_admissible(w.ops, suspend_gen(w.gen))
            if res is not None:
                out ^= {res}
        el = frozenset(out)
    return el


# -- halving root ---------------------------------------------------------------

def _root_word(w: AdmissibleGen) -> Element:
    if any(i % 2 for i in w.ops):
        return EL_ZERO
    rg = root_gen(w.gen)
    if rg is None:
        return EL_ZERO
    return normalize(tuple(i // 2 for i in w.ops), rg)


def root(el: Element) -> Element:
    """Exponent-halving root: even powers halve, an unpaired factor goes
    through the word root (all indices even, generator has a halving image)
    or dies."""
    out: set = set()
    for m in el:
        part: Element = EL_ONE
        for w, e in m.factors:
            if e // 2:
                part = el_mul(part, frozenset({mono_word(w, e // 2)}))
            if e % 2:
                part = el_mul(part, _root_word(w))
                if not part:
                    break
        out ^= part
    return frozenset(out)

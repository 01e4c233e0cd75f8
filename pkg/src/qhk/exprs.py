"""Parsing and printing of elements.

Grammar (whitespace free):

    expr   := term ('+' term)*
    term   := factor (('*' | nothing) factor)*
    factor := 'Q^'<nat> factor | atom ('^'<nat>)?
    atom   := generator | '(' expr ')'

so ``Q^2 a1^3`` is Q^2 applied to the cube, and operations bind the whole
next factor.  Generator tokens look like g3, a5, c7, optionally carrying a
suspension suffix (a5^s2); the lexer tells ``^s2`` (shift) and ``^2``
(exponent) apart.  Parsing evaluates on the spot, so the result is always
in basis form; an operation applied to an inhomogeneous sum is refused
(evaluating it termwise would be fine, but it is almost always a typo).
"""

from __future__ import annotations

import re

from .algebra import (
    EL_ONE,
    EL_ZERO,
    Element,
    Monomial,
    apply_q,
    el_degree,
    el_mul,
    el_square,
    mono_from_pairs,
    mono_word,
)
from .spaces import (
    Generator,
    Space,
    gen_degree,
    gen_name,
    generators,
    parse_gen,
    parse_space,
    space_name,
)
from .words import AdmissibleGen, word_sort_key


class ExprError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN_RE = re.compile(
    r"(Q\^[0-9]+)|([gac][0-9]+(?:\^s[0-9]+)?)|(\^[0-9]+)|([+*()])|(\s+)|(.)"
)


def _lex(text: str) -> list[tuple[str, str, int]]:
    out = []
    for m in _TOKEN_RE.finditer(text):
        q, gen, exp, punct, ws, bad = m.groups()
        if ws is not None:
            continue
        if bad is not None:
            raise ExprError(f"unexpected character {bad!r}", m.start())
        if q is not None:
            out.append(("q", q[2:], m.start()))
        elif gen is not None:
            out.append(("gen", gen, m.start()))
        elif exp is not None:
            out.append(("exp", exp[1:], m.start()))
        else:
            out.append((punct, punct, m.start()))
    return out


def _el_pow(el: Element, e: int) -> Element:
    out = EL_ONE
    sq = el
    while e:
        if e & 1:
            out = el_mul(out, sq)
        sq = el_square(sq)
        e >>= 1
    return out


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]], space: Space | None, length: int):
        self.tokens = tokens
        self.space = space
        self.length = length
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", "", self.length)

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self) -> Element:
        el = self.term()
        while self.peek()[0] == "+":
            self.take()
            other = self.term()
            el = frozenset(set(el) ^ set(other))
        return el

    def term(self) -> Element:
        el = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                el = el_mul(el, self.factor())
            elif kind in ("q", "gen", "("):
                el = el_mul(el, self.factor())
            else:
                return el

    def factor(self) -> Element:
        kind, value, pos = self.peek()
        if kind == "q":
            self.take()
            operand = self.factor()
            try:
                el_degree(operand)
            except ValueError:
                raise ExprError("operation applied to an inhomogeneous sum", pos) from None
            return apply_q(int(value), operand)
        el = self.atom()
        if self.peek()[0] == "exp":
            _, evalue, _ = self.take()
            el = _el_pow(el, int(evalue))
        return el

    def atom(self) -> Element:
        kind, value, pos = self.take()
        if kind == "gen":
            try:
                g = parse_gen(value)
            except ValueError as err:
                raise ExprError(str(err), pos) from None
            if self.space is not None and g.space != self.space:
                raise ExprError(
                    f"generator {value} does not live on {space_name(self.space)}", pos
                )
            return frozenset({mono_word(AdmissibleGen((), g))})
        if kind == "(":
            el = self.expr()
            kind2, _, pos2 = self.take()
            if kind2 != ")":
                raise ExprError("expected ')'", pos2)
            return el
        raise ExprError(f"expected a generator, 'Q^n' or '(', got {value!r}", pos)


def parse_element(text: str, space: Space | None = None) -> Element:
    if text.strip() == "0":
        return EL_ZERO
    if text.strip() == "1":
        return EL_ONE
    parser = _Parser(_lex(text), space, len(text))
    el = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ExprError(f"trailing input {value!r}", pos)
    return el


# -- printing -----------------------------------------------------------------

def _mono_key(m: Monomial):
    return (m.degree, tuple((word_sort_key(w), e) for w, e in m.factors))


def format_word_power(w: AdmissibleGen, e: int) -> str:
    ops = " ".join(f"Q^{i}" for i in w.ops)
    base = f"{ops} {gen_name(w.gen)}" if ops else gen_name(w.gen)
    if e == 1:
        return base
    if w.ops:
        return f"({base})^{e}"
    return f"{base}^{e}"


def format_element(el: Element) -> str:
    if not el:
        return "0"
    parts = []
    for m in sorted(el, key=_mono_key, reverse=True):
        if not m.factors:
            parts.append("1")
        else:
            parts.append("*".join(format_word_power(w, e) for w, e in m.factors))
    return " + ".join(parts)


# -- JSON ---------------------------------------------------------------------

def element_to_json(el: Element) -> dict:
    terms = []
    for m in sorted(el, key=_mono_key, reverse=True):
        factors = [
            {
                "ops": list(w.ops),
                "gen": {"space": space_name(w.gen.space), "index": w.gen.index},
                "exp": e,
            }
            for w, e in m.factors
        ]
        terms.append({"factors": factors})
    return {"terms": terms}


def element_from_json(obj: dict) -> Element:
    terms: set = set()
    for term in obj["terms"]:
        pairs = []
        for f in term["factors"]:
            space = parse_space(f["gen"]["space"])
            gen = Generator(space, int(f["gen"]["index"]))
            if gen not in generators(space, gen_degree(gen)):
                raise ValueError(f"no generator of index {gen.index} on {f['gen']['space']}")
            pairs.append((AdmissibleGen(tuple(int(i) for i in f["ops"]), gen), int(f["exp"])))
        terms ^= {mono_from_pairs(pairs)}
    return frozenset(terms)

"""Noncommutative polynomials over a finite alphabet.

A :class:`Polynomial` is a dense map from words (tuples of letter indices)
to nonzero coefficients.  Polynomials are either *non-unital* (elements of
the free algebra without identity, no empty-word term allowed) or *unital*
(identity adjoined).  Mixing the two in arithmetic is a ``TypeError``; use
:meth:`Polynomial.embed` to pass explicitly from the first to the second.

Text grammar (ASCII, whitespace insignificant)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' nat]
    atom   := var | '(' expr ')' | coeff
    coeff  := integer | integer '/' positive-integer      (fractions over QQ only)

A bare ``1`` (or any constant factor standing alone) denotes the empty word
and is only legal in unital context.  Variable names are identifiers,
optionally followed by one bracketed index list such as ``t[1,x,b]``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .rings import Ring

Word = tuple

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*(?:\[[A-Za-z0-9_,]*\])?")


def word_key(w: Word):
    """Enumeration order: shorter words first, then lexicographic by index."""
    return (len(w), w)


def term_key(w: Word):
    """Printing order: higher degree first, then lexicographic by index."""
    return (-len(w), w)


@dataclass(frozen=True)
class Alphabet:
    names: tuple

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for n in names:
            if not isinstance(n, str) or not NAME_RE.fullmatch(n):
                raise ValueError(f"invalid variable name {n!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __add__(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.names + other.names)

    def format_word(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        for letter, run in itertools.groupby(w):
            k = len(list(run))
            name = self.names[letter]
            parts.append(name if k == 1 else f"{name}^{k}")
        return "*".join(parts)


class Polynomial:
    """Element of ``K<X>`` (or ``K<X>^1`` when ``unital``)."""

    __slots__ = ("ring", "alphabet", "terms", "unital")

    def __init__(self, ring: Ring, alphabet: Alphabet, terms: Mapping | None = None, unital: bool = False):
        self.ring = ring
        self.alphabet = alphabet
        self.unital = unital
        clean = {}
        if terms:
            n = len(alphabet)
            for w, c in terms.items():
                w = tuple(w)
                c = ring(c)
                if c == 0:
                    continue
                if not w and not unital:
                    raise ValueError("constant term in a non-unital polynomial")
                if any(not 0 <= i < n for i in w):
                    raise ValueError(f"word {w} uses letters outside the alphabet")
                clean[w] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring, alphabet, terms, unital):
        p = cls.__new__(cls)
        p.ring, p.alphabet, p.terms, p.unital = ring, alphabet, terms, unital
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, ring, alphabet, unital=False):
        return cls._raw(ring, alphabet, {}, unital)

    @classmethod
    def one(cls, ring, alphabet):
        return cls._raw(ring, alphabet, {(): ring.one}, True)

    @classmethod
    def monomial(cls, ring, alphabet, word, coeff=None, unital=False):
        c = ring.one if coeff is None else ring(coeff)
        return cls(ring, alphabet, {tuple(word): c}, unital)

    @classmethod
    def variable(cls, ring, alphabet, name, unital=False):
        return cls._raw(ring, alphabet, {(alphabet.index(name),): ring.one}, unital)

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Largest word length; ``-1`` for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda wc: term_key(wc[0]))

    def coefficient(self, word) -> object:
        return self.terms.get(tuple(word), self.ring.zero)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.ring, self.alphabet, {w: c for w, c in self.terms.items() if len(w) == d}, self.unital)

    def __len__(self):
        return len(self.terms)

    def _compatible(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")
        if self.ring != other.ring:
            raise TypeError(f"ring mismatch: {self.ring} vs {other.ring}")
        if self.alphabet != other.alphabet:
            raise TypeError("alphabet mismatch")
        if self.unital != other.unital:
            raise TypeError("unital and non-unital polynomials do not mix; use embed()")

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.alphabet == other.alphabet
            and self.unital == other.unital
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.alphabet, self.unital, frozenset(self.terms.items())))

    # -- conversions between K<X> and K<X>^1 --------------------------------
    def embed(self) -> "Polynomial":
        """The same element viewed in the algebra with identity adjoined."""
        return Polynomial._raw(self.ring, self.alphabet, dict(self.terms), True)

    def strip_unit(self) -> "Polynomial":
        """View a unital polynomial without constant term as an element of ``K<X>``."""
        if () in self.terms:
            raise ValueError("polynomial has a constant term")
        return Polynomial._raw(self.ring, self.alphabet, dict(self.terms), False)

    def constant_term(self):
        return self.terms.get((), self.ring.zero)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._compatible(other)
        ring = self.ring
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = ring.add(out.get(w, ring.zero), c)
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return Polynomial._raw(ring, self.alphabet, out, self.unital)

    __radd__ = __add__

    def __neg__(self):
        ring = self.ring
        return Polynomial._raw(ring, self.alphabet, {w: ring.neg(c) for w, c in self.terms.items()}, self.unital)

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        ring = self.ring
        c = ring(c)
        if c == 0:
            return Polynomial._raw(ring, self.alphabet, {}, self.unital)
        out = {}
        for w, a in self.terms.items():
            b = ring.mul(c, a)
            if b != 0:
                out[w] = b
        return Polynomial._raw(ring, self.alphabet, out, self.unital)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._compatible(other)
        ring = self.ring
        out: dict = {}
        get = out.get
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = ring.add(get(w, ring.zero), ring.mul(c1, c2))
                if s == 0:
                    out.pop(w, None)
                else:
                    out[w] = s
        return Polynomial._raw(ring, self.alphabet, out, self.unital)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        if n == 0:
            if not self.unital:
                raise ValueError("zeroth power needs a unital polynomial")
            return Polynomial.one(self.ring, self.alphabet)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    # -- printing ---------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        tag = "unital " if self.unital else ""
        return f"<{tag}Polynomial over {self.ring} in {','.join(self.alphabet.names)}: {format_poly(self)}>"


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_scale(c, a: Polynomial) -> Polynomial:
    return a.scale(c)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def linear_combination(ring, alphabet, pairs, unital=False) -> Polynomial:
    """``sum(c * p for c, p in pairs)`` accumulated in one dictionary."""
    out: dict = {}
    for c, p in pairs:
        c = ring(c)
        if c == 0:
            continue
        for w, a in p.terms.items():
            s = ring.add(out.get(w, ring.zero), ring.mul(c, a))
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
    return Polynomial._raw(ring, alphabet, out, unital)


# ---------------------------------------------------------------------------
# Formatting and parsing
# ---------------------------------------------------------------------------

def format_poly(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    ring = p.ring
    out = []
    for i, (w, c) in enumerate(p.sorted_terms()):
        neg = ring.kind != "Fp" and c < 0
        mag = -c if neg else c
        body = p.alphabet.format_word(w) if w else None
        if body is None:
            text = ring.format(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{ring.format(mag)}*{body}"
        if i == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.position = position


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*(?:\[[A-Za-z0-9_,]*\])?)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos, toks = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[start]!r}", start, text)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, alphabet, ring):
        self.text = text
        self.alphabet = alphabet
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(msg, tok[2], self.text)

    def const(self, c):
        return Polynomial._raw(self.ring, self.alphabet, {(): c} if c != 0 else {}, True)

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("expected a natural number exponent", tok)
            n = int(tok[1])
            if n == 0:
                base = self.const(self.ring.one)
            else:
                base = base ** n
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            num = int(val)
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self.take()
                if den[0] != "num" or int(den[1]) == 0:
                    self.error("expected a positive denominator", den)
                if self.ring.kind != "Q":
                    self.error("fractions are only allowed over QQ", den)
                return self.const(self.ring(Fraction(num, int(den[1]))))
            return self.const(self.ring(num))
        if kind == "name":
            if val not in self.alphabet:
                self.error(f"unknown variable {val!r}", tok)
            return Polynomial._raw(self.ring, self.alphabet, {(self.alphabet.index(val),): self.ring.one}, True)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                self.error("expected ')'", close)
            return inner
        self.error("unexpected token" if kind != "end" else "unexpected end of input", tok)


def parse_poly(text: str, alphabet: Alphabet, ring: Ring, unital: bool = False) -> Polynomial:
    """Parse ``text`` into a canonical polynomial.

    Raises :class:`PolynomialSyntaxError` (with a position) for malformed
    text or unknown variables, and ``ValueError`` when a constant term shows
    up in non-unital context.
    """
    ring = Ring.from_descriptor(ring)
    parser = _Parser(text, alphabet, ring)
    if parser.peek()[0] == "end":
        parser.error("empty expression")
    p = parser.expr()
    if parser.peek()[0] != "end":
        parser.error("unexpected trailing input")
    if unital:
        return p
    if () in p.terms:
        raise ValueError(f"constant term in non-unital context: {text!r}")
    return p.strip_unit()


# ---------------------------------------------------------------------------
# Homomorphisms and words
# ---------------------------------------------------------------------------

class AlgebraHom:
    """Substitution homomorphism ``source -> target`` given by variable images.

    Images must share one ring, alphabet and unital flag.  Applying the map
    to a unital polynomial sends the empty word to the identity, which
    requires unital images.
    """

    def __init__(self, source: Alphabet, target: Alphabet, images: Mapping[str, Polynomial] | Sequence[Polynomial], ring: Ring, unital: bool = False):
        if isinstance(images, Mapping):
            missing = [n for n in source.names if n not in images]
            if missing:
                raise ValueError(f"no image for {missing}")
            images = [images[n] for n in source.names]
        images = list(images)
        if len(images) != len(source):
            raise ValueError("one image per source variable is required")
        for img in images:
            if img.alphabet != target or img.ring != ring:
                raise TypeError("image polynomial over the wrong alphabet or ring")
        self.source = source
        self.target = target
        self.ring = ring
        self.unital = unital
        self.images = [img if img.unital == unital else (img.embed() if unital else img.strip_unit()) for img in images]

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply_hom(self, p)


def apply_hom(h: AlgebraHom, p: Polynomial) -> Polynomial:
    if p.alphabet != h.source:
        raise TypeError("polynomial is not over the homomorphism's source alphabet")
    if p.ring != h.ring:
        raise TypeError("ring mismatch")
    ring = h.ring
    unital = h.unital or p.unital
    if p.unital and not h.unital and () in p.terms:
        raise TypeError("constant term needs a unital target")
    images = [img.embed() if unital and not img.unital else img for img in h.images]
    cache: dict = {}

    def image(w):
        if w in cache:
            return cache[w]
        if not w:
            r = Polynomial.one(ring, h.target)
        elif len(w) == 1:
            r = images[w[0]]
        else:
            r = image(w[:-1]) * images[w[-1]]
        cache[w] = r
        return r

    out: dict = {}
    for w, c in p.terms.items():
        for v, a in image(w).terms.items():
            s = ring.add(out.get(v, ring.zero), ring.mul(c, a))
            if s == 0:
                out.pop(v, None)
            else:
                out[v] = s
    return Polynomial._raw(ring, h.target, out, unital)


def enumerate_words(alphabet: Alphabet | int, min_deg: int, max_deg: int) -> list:
    """All words with length in ``[min_deg, max_deg]`` in canonical order."""
    n = alphabet if isinstance(alphabet, int) else len(alphabet)
    out = []
    for d in range(max(min_deg, 0), max_deg + 1):
        out.extend(itertools.product(range(n), repeat=d))
    return out


def content(w: Word, n: int) -> tuple:
    """Letter multiplicities of a word."""
    c = [0] * n
    for i in w:
        c[i] += 1
    return tuple(c)


def random_polynomial(rng, ring, alphabet, max_deg, max_terms=4, unital=False, min_deg=None) -> Polynomial:
    """Small random polynomial for property checks."""
    lo = 0 if unital else 1
    if min_deg is not None:
        lo = max(lo, min_deg)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(lo, max(lo, max_deg))
        w = tuple(rng.randrange(len(alphabet)) for _ in range(d))
        terms[w] = ring.add(terms.get(w, ring.zero), ring.random(rng))
    return Polynomial(ring, alphabet, terms, unital)

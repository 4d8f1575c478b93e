"""Signed permutations, prefix reversals and generator words.

A signed permutation of ``[n]`` is stored through its window
``[w(1) ... w(n)]``.  Edges of the burnt pancake graph join ``w`` and
``w * r_i`` where ``r_i`` reverses and negates the first ``i`` symbols, so
every walk in this package is a right-multiplication by its letters.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvalidDimension, InvalidGenerator, ParseError

__all__ = [
    "SignedPerm",
    "GenWord",
    "WalkTrace",
    "CycleWitness",
    "identity",
    "apply_reversal",
    "compose",
    "inverse",
    "reversal_perm",
    "word_product",
    "walk",
    "cycle_facts",
    "parse_perm",
    "format_perm",
    "parse_word",
    "format_word",
]


@dataclass(frozen=True)
class SignedPerm:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if n < 1:
            raise InvalidDimension("a signed permutation needs n >= 1")
        if sorted(abs(x) for x in window) != list(range(1, n + 1)):
            raise ParseError(f"{list(window)} is not a signed permutation of [{n}]")

    @classmethod
    def _trusted(cls, window: tuple[int, ...]) -> "SignedPerm":
        # skips validation; callers guarantee a valid window
        obj = object.__new__(cls)
        object.__setattr__(obj, "window", window)
        return obj

    @property
    def n(self) -> int:
        return len(self.window)

    def __len__(self):
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __getitem__(self, i):
        return self.window[i]

    def __str__(self):
        return format_perm(self)


@dataclass(frozen=True)
class GenWord:
    """A sequence of reversal indices, each in ``[1, n]``."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        letters = tuple(int(c) for c in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.n < 1:
            raise InvalidDimension(f"dimension must be >= 1, got {self.n}")
        for pos, c in enumerate(letters):
            if not 1 <= c <= self.n:
                raise InvalidGenerator(f"letter r_{c} at position {pos} is outside [1, {self.n}]")

    @classmethod
    def _trusted(cls, letters: tuple[int, ...], n: int) -> "GenWord":
        obj = object.__new__(cls)
        object.__setattr__(obj, "letters", letters)
        object.__setattr__(obj, "n", n)
        return obj

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self):
        return format_word(self)

    def is_cycle_word(self) -> bool:
        """No two cyclically adjacent letters are equal.

        Necessary (not sufficient) for the word to trace a cycle, since every
        ``r_i`` is an involution.
        """
        L = self.letters
        if len(L) < 3:
            return False
        return all(L[t] != L[t - 1] for t in range(len(L)))

    def at_dimension(self, n: int) -> "GenWord":
        return GenWord(self.letters, n)


@dataclass(frozen=True)
class WalkTrace:
    vertices: tuple[SignedPerm, ...]
    letters: tuple[int, ...]
    closed: bool
    simple: bool

    def __len__(self):
        return len(self.letters)


@dataclass(frozen=True)
class CycleWitness:
    """A start vertex and a word whose walk is a simple closed cycle."""

    n: int
    start: SignedPerm
    word: GenWord

    @property
    def length(self) -> int:
        return len(self.word)


def _check_n(n):
    if not isinstance(n, int) or n < 1:
        raise InvalidDimension(f"dimension must be a positive integer, got {n!r}")


def identity(n: int) -> SignedPerm:
    _check_n(n)
    return SignedPerm._trusted(tuple(range(1, n + 1)))


def _flip(window: tuple[int, ...], i: int) -> tuple[int, ...]:
    return tuple([-x for x in window[i - 1 :: -1]]) + window[i:]


def apply_reversal(w: SignedPerm, i: int) -> SignedPerm:
    if not 1 <= i <= w.n:
        raise InvalidGenerator(f"r_{i} is not a generator of B_{w.n}")
    return SignedPerm._trusted(_flip(w.window, i))


def reversal_perm(n: int, i: int) -> SignedPerm:
    """``r_i`` itself as an element of ``B_n``."""
    return apply_reversal(identity(n), i)


def compose(u: SignedPerm, v: SignedPerm) -> SignedPerm:
    """Group product ``u * v`` with ``(u * v)(x) = u(v(x))``.

    With this convention ``compose(w, reversal_perm(n, i))`` equals
    ``apply_reversal(w, i)``.
    """
    if u.n != v.n:
        raise DimensionMismatch(f"cannot compose B_{u.n} with B_{v.n}")
    uw = u.window
    return SignedPerm._trusted(tuple(uw[x - 1] if x > 0 else -uw[-x - 1] for x in v.window))


def inverse(w: SignedPerm) -> SignedPerm:
    out = [0] * w.n
    for pos, x in enumerate(w.window, start=1):
        if x > 0:
            out[x - 1] = pos
        else:
            out[-x - 1] = -pos
    return SignedPerm._trusted(tuple(out))


def word_product(word: GenWord) -> SignedPerm:
    """Product ``r_{i1} r_{i2} ...`` of the letters, left to right."""
    w = tuple(range(1, word.n + 1))
    for c in word.letters:
        w = _flip(w, c)
    return SignedPerm._trusted(w)


def walk(start: SignedPerm, word: GenWord) -> WalkTrace:
    if word.n != start.n:
        raise DimensionMismatch(f"word over B_{word.n} walked from a vertex of B_{start.n}")
    verts = [start]
    w = start.window
    for c in word.letters:
        w = _flip(w, c)
        verts.append(SignedPerm._trusted(w))
    closed = verts[-1] == verts[0]
    body = verts[:-1] if closed else verts
    simple = closed and len(set(body)) == len(body)
    return WalkTrace(tuple(verts), word.letters, closed, simple)


def _byte_codec(n: int):
    # symbol s in [-n, n] is stored as the byte s + n; negation is b -> 2n - b
    table = bytes((2 * n - b) if b <= 2 * n else b for b in range(256))
    return table


def cycle_facts(start: SignedPerm, letters: Sequence[int]):
    """Walk ``letters`` from ``start`` and report ``(closed, simple, bad_pos)``.

    ``bad_pos`` is the index of the first letter whose application revisits a
    vertex before the final step (``None`` when there is none).  Vertices are
    hashed as compact byte strings so walks of several hundred thousand steps
    stay cheap.
    """
    n = start.n
    if n > 127:
        raise InvalidDimension("cycle_facts supports n <= 127")
    neg = _byte_codec(n)
    w = bytes(x + n for x in start.window)
    origin = w
    seen = {w}
    last = len(letters) - 1
    bad = None
    for t, c in enumerate(letters):
        if not 1 <= c <= n:
            raise InvalidGenerator(f"letter r_{c} at position {t} is outside [1, {n}]")
        w = w[c - 1 :: -1].translate(neg) + w[c:]
        if t < last:
            if w in seen:
                bad = t
                break
            seen.add(w)
    if bad is not None:
        return False, False, bad
    closed = w == origin and len(letters) > 0
    simple = closed and len(letters) >= 3
    return closed, simple, None


_PERM_RE = re.compile(r"^\s*\[(.*)\]\s*$")


def parse_perm(text: str) -> SignedPerm:
    m = _PERM_RE.match(text)
    if not m:
        raise ParseError(f"expected '[s1 s2 ... sn]', got {text!r}")
    body = m.group(1).replace(",", " ").split()
    try:
        window = tuple(int(tok) for tok in body)
    except ValueError:
        raise ParseError(f"non-integer symbol in {text!r}") from None
    if not window:
        raise ParseError("empty permutation")
    n = len(window)
    for x in window:
        if x == 0 or abs(x) > n:
            raise ParseError(f"symbol {x} out of range for n={n}")
    if len({abs(x) for x in window}) != n:
        raise ParseError(f"duplicate absolute value in {text!r}")
    return SignedPerm._trusted(window)


def format_perm(w: SignedPerm) -> str:
    return "[" + " ".join(str(x) for x in w.window) + "]"


def parse_word(text: str, n: int) -> GenWord:
    """Parse a word in digit form (``n <= 9`` only) or list form.

    List form separates integers by whitespace and/or commas and works for
    any ``n``.  A separator-free token is read digit by digit when ``n <= 9``
    and as a single letter otherwise.
    """
    _check_n(n)
    s = text.strip()
    if not s:
        raise ParseError("empty word")
    tokens = [tok for tok in re.split(r"[\s,]+", s) if tok]
    if len(tokens) == 1 and n <= 9:
        if not tokens[0].isdigit():
            raise ParseError(f"malformed word {text!r}")
        letters = tuple(int(ch) for ch in tokens[0])
    else:
        try:
            letters = tuple(int(tok) for tok in tokens)
        except ValueError:
            raise ParseError(f"malformed word {text!r}") from None
    return GenWord(letters, n)


def format_word(word: GenWord | Iterable[int], n: int | None = None, list_form: bool = False) -> str:
    if isinstance(word, GenWord):
        n = word.n
        letters = word.letters
    else:
        letters = tuple(word)
        if n is None:
            n = max(letters, default=1)
    if n <= 9 and not list_form:
        return "".join(map(str, letters))
    return " ".join(map(str, letters))

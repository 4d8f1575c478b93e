"""The 8-cycles of ``BP_n``: four word families, canonical forms and counts.

A cycle word is canonical when its index sequence is the lexicographic
maximum over the 16 ways of reading the cycle (8 starting points, two
directions).  Every 8-cycle of ``BP_n`` reads canonically as one of

* F1: ``r_k r_j r_i r_j r_k r_{k-j+i} r_i r_{k-j+i}``, ``1 <= i < j <= k-1``, ``3 <= k``
* F2: ``r_k r_j r_k r_i r_k r_j r_k r_i``, ``2 <= i, j <= k-2``, ``i + j <= k``, ``4 <= k``
* F3: ``r_k r_i r_k r_1 r_k r_i r_k r_1``, ``2 <= i <= k-1``, ``3 <= k``
* F4: ``r_k r_1 r_k r_1 r_k r_1 r_k r_1``, ``2 <= k``

with ``k <= n``.  Some parameter choices give the same cycles under another
reading (F1 with ``(i, j, k)`` and ``(i, k-j+i, k)``; F2 with ``i`` and
``j`` swapped); exactly one instance of each class spells the canonical
word literally.

Counting uses the fact that the graph is vertex transitive: a canonical word
``W`` whose 16 readings contain ``s(W)`` copies of ``W`` traces
``|V| / s(W)`` distinct cycles, ``8 / s(W)`` of them through any vertex.
The totals this gives are derived here and checked against brute force for
``n <= 4``; they are not stated in the source material.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidDimension, NotCanonical
from .graph import _check_cap, order, rank, unrank
from .perm import CycleWitness, GenWord, SignedPerm, _flip, cycle_facts, identity

FAMILIES = ("F1", "F2", "F3", "F4")

FAMILY_PATTERNS = {
    "F1": "r_k r_j r_i r_j r_k r_{k-j+i} r_i r_{k-j+i}",
    "F2": "r_k r_j r_k r_i r_k r_j r_k r_i",
    "F3": "r_k r_i r_k r_1 r_k r_i r_k r_1",
    "F4": "r_k r_1 r_k r_1 r_k r_1 r_k r_1",
}

FAMILY_RANGES = {
    "F1": "1 <= i < j <= k-1, 3 <= k <= n",
    "F2": "2 <= i, j <= k-2, i+j <= k, 4 <= k <= n",
    "F3": "2 <= i <= k-1, 3 <= k <= n",
    "F4": "2 <= k <= n",
}


@dataclass(frozen=True)
class CanonicalForm:
    family: str
    params: tuple[int, ...]
    n: int

    def __str__(self):
        names = {"F1": "ijk", "F2": "ijk", "F3": "ik", "F4": "k"}[self.family]
        return f"{self.family}(" + ", ".join(f"{a}={v}" for a, v in zip(names, self.params)) + ")"


@dataclass(frozen=True)
class EightCycle:
    word: GenWord
    start: SignedPerm
    fingerprint: tuple[int, ...]


def _in_range(family, params, n):
    if family == "F1":
        i, j, k = params
        return 3 <= k <= n and 1 <= i < j <= k - 1
    if family == "F2":
        i, j, k = params
        return 4 <= k <= n and 2 <= i <= k - 2 and 2 <= j <= k - 2 and i + j <= k
    if family == "F3":
        i, k = params
        return 3 <= k <= n and 2 <= i <= k - 1
    if family == "F4":
        (k,) = params
        return 2 <= k <= n
    return False


def _letters(family, params):
    if family == "F1":
        i, j, k = params
        m = k - j + i
        return (k, j, i, j, k, m, i, m)
    if family == "F2":
        i, j, k = params
        return (k, j, k, i) * 2
    if family == "F3":
        i, k = params
        return (k, i, k, 1) * 2
    (k,) = params
    return (k, 1) * 4


def form_to_word(form: CanonicalForm) -> GenWord:
    if form.family not in FAMILIES:
        raise ValueError(f"unknown family {form.family!r}")
    params = tuple(form.params)
    if not _in_range(form.family, params, form.n):
        raise ValueError(f"{form.family} parameters {params} out of range for n={form.n}")
    return GenWord._trusted(_letters(form.family, params), form.n)


def family_instances(n: int) -> list[CanonicalForm]:
    """All in-range instances, families in order and parameters lexicographic."""
    if n < 2:
        raise InvalidDimension(f"8-cycles need n >= 2, got {n}")
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if _in_range("F1", (i, j, k), n):
                    out.append(CanonicalForm("F1", (i, j, k), n))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if _in_range("F2", (i, j, k), n):
                    out.append(CanonicalForm("F2", (i, j, k), n))
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if _in_range("F3", (i, k), n):
                out.append(CanonicalForm("F3", (i, k), n))
    for k in range(2, n + 1):
        out.append(CanonicalForm("F4", (k,), n))
    return out


def readings(letters) -> list[tuple[int, ...]]:
    """The 16 letter sequences of a cycle word: 8 rotations, then 8 reversed.

    Reading backwards from vertex ``t`` crosses ``letters[t-1]`` first.
    """
    w = tuple(letters)
    L = len(w)
    fwd = [w[t:] + w[:t] for t in range(L)]
    bwd = [tuple(reversed(w[:t])) + tuple(reversed(w[t:])) for t in range(L)]
    return fwd + bwd


def canonical_letters(letters) -> tuple[int, ...]:
    return max(readings(letters))


def symmetry_factor(letters) -> int:
    """How many of the 16 readings of the word equal the word itself."""
    w = tuple(letters)
    return sum(r == w for r in readings(w))


def canonical_words(n: int) -> list[GenWord]:
    """Distinct canonical 8-cycle words of ``BP_n``, in family order."""
    seen = set()
    out = []
    for form in family_instances(n):
        w = canonical_letters(_letters(form.family, form.params))
        if w not in seen:
            seen.add(w)
            out.append(GenWord._trusted(w, n))
    return out


def _vertices(start, letters):
    vs = [start]
    w = start
    for c in letters[:-1]:
        w = _flip(w, c)
        vs.append(w)
    return vs


def _rank_window(window):
    return rank(SignedPerm._trusted(window))


def canonicalize(witness: CycleWitness) -> EightCycle:
    """Canonical word and start of an 8-cycle.

    Among the readings that spell the maximal sequence the one starting at
    the vertex of smallest rank is chosen.
    """
    letters = tuple(witness.word.letters)
    if len(letters) != 8:
        raise NotCanonical(f"expected an 8-cycle, got a word of length {len(letters)}")
    closed, simple, _ = cycle_facts(witness.start, letters)
    if not simple:
        raise NotCanonical("word does not trace a simple 8-cycle from its start")
    verts = _vertices(witness.start.window, letters)
    ranks = [_rank_window(v) for v in verts]
    best = canonical_letters(letters)
    starts = [ranks[t % 8] for t, r in enumerate(readings(letters)) if r == best]
    start = unrank(witness.n, min(starts))
    return EightCycle(GenWord._trusted(best, witness.n), start, tuple(sorted(ranks)))


def classify(word: GenWord) -> CanonicalForm:
    """Family and parameters of a canonical 8-cycle word."""
    letters = tuple(word.letters)
    n = word.n
    if len(letters) != 8:
        raise NotCanonical(f"not an 8-cycle word: length {len(letters)}")
    closed, simple, _ = cycle_facts(identity(n), letters)
    if not simple:
        raise NotCanonical(f"{word} does not trace an 8-cycle")
    best = canonical_letters(letters)
    if best != letters:
        raise NotCanonical(f"{word} is not canonical; its canonical reading is {GenWord._trusted(best, n)}")
    for form in family_instances(max(n, 2)):
        if _letters(form.family, form.params) == letters:
            return form
    raise NotCanonical(f"{word} matches no 8-cycle family")


def count_8cycles(n: int) -> int:
    total = sum(Fraction(order(n), symmetry_factor(w.letters)) for w in canonical_words(n))
    return int(total)


def count_through_vertex(n: int, vertex: SignedPerm | None = None) -> int:
    """8-cycles containing ``vertex``.

    With no vertex the closed form is returned; with one, the cycles are
    found by walking every canonical word backwards from it and deduplicating
    by vertex set, so the result can be compared with the closed form.
    """
    if vertex is None:
        return int(sum(Fraction(8, symmetry_factor(w.letters)) for w in canonical_words(n)))
    if vertex.n != n:
        raise InvalidDimension(f"vertex has dimension {vertex.n}, expected {n}")
    found = set()
    x = vertex.window
    for w in canonical_words(n):
        letters = w.letters
        for t in range(8):
            v = x
            for c in reversed(letters[:t]):
                v = _flip(v, c)
            found.add(frozenset(_vertices(v, letters)))
    return len(found)


def enumerate_8cycles(n: int, cap: int | None = None):
    """Yield every 8-cycle once, by canonical word and then start rank."""
    if n < 2:
        raise InvalidDimension(f"8-cycles need n >= 2, got {n}")
    _check_cap(n, cap)
    words = canonical_words(n)
    for w in words:
        for r in range(order(n)):
            start = unrank(n, r)
            cyc = canonicalize(CycleWitness(n, start, w))
            if cyc.start == start and cyc.word == w:
                yield cyc


@dataclass(frozen=True)
class FormRow:
    family: str
    pattern: str
    ranges: str
    instances: int
    canonical_words: int


def forms_table(n: int) -> list[FormRow]:
    rows = []
    insts = family_instances(n)
    for fam in FAMILIES:
        mine = [f for f in insts if f.family == fam]
        literal = {
            _letters(f.family, f.params)
            for f in mine
            if canonical_letters(_letters(f.family, f.params)) == _letters(f.family, f.params)
        }
        rows.append(FormRow(fam, FAMILY_PATTERNS[fam], FAMILY_RANGES[fam], len(mine), len(literal)))
    return rows

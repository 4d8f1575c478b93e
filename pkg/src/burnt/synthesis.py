"""Constructive synthesis of a simple cycle of any length ``8 <= l <= 2^n n!``.

For ``n >= 5`` a length either fits inside one copy ``BP_{n-1}(n)`` (the
recursive word is reused verbatim) or is written as ``l = a*H + b`` with
``H = 2^(n-1)(n-1)!``.  A base cycle ``C_k`` is then chosen and some of its
copies that carry a single ``r_{n-1}`` edge get that edge replaced by a
recursively built cycle of ``BP_{n-1}``.

Splicing an inner cycle ``W`` (rotated so an ``r_{n-1}`` letter is last)
into the base at position ``p`` replaces the letter ``r_{n-1}`` by the first
``|W| - 1`` letters of ``W``.  Those letters multiply to ``r_{n-1}``, so the
walk still closes, and they never leave the copy of the vertex at ``p``,
which the base touches only through that one edge.  A splice adds
``|W| - 2`` to the length.

The inner lengths follow the case analysis of the constructive proof.  Where
the base cycle actually used differs from the nominal one (see
``base_cycles``), or the prescribed lengths do not add up, the difference is
moved onto the non-Hamiltonian inner cycles while keeping each of them in
``(2^(n-2)(n-2)!, H]``.  The final length is always asserted exactly.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import ceil, factorial

from . import corpus as _corpus
from .base_cycles import BaseCycleSpec, base_cycle, copy_profile
from .errors import ConstructionError, InvalidDimension, UnreachableLength
from .graph import order
from .perm import CycleWitness, GenWord, _flip, cycle_facts, identity

PLUS_ONE_DEFICIT = 16


@dataclass
class PlanNode:
    """One step of a synthesis, with the steps it depends on as children."""

    kind: str
    n: int
    length: int
    info: dict = field(default_factory=dict)
    children: list = field(default_factory=list)

    def describe(self) -> str:
        extra = " ".join(f"{k}={v}" for k, v in self.info.items())
        head = f"{self.kind} n={self.n} length={self.length}"
        return f"{head} {extra}" if extra else head

    def lines(self, depth: int = 0):
        yield "  " * depth + self.describe()
        for child in self.children:
            yield from child.lines(depth + 1)

    def render(self) -> str:
        return "\n".join(self.lines())

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "length": self.length,
            "info": dict(self.info),
            "children": [c.to_dict() for c in self.children],
        }


SynthesisPlan = PlanNode


@dataclass(frozen=True)
class SynthesisResult:
    witness: CycleWitness
    plan: PlanNode


def hamiltonian_length(n: int) -> int:
    return order(n)


def _bounds(n):
    # inner cycles live in BP_{n-1}; above |BP_{n-2}| they must use r_{n-1}
    return order(n - 2), order(n - 1)


def decompose(n: int, length: int) -> tuple[int, int]:
    """``(a, b)`` with ``length = a * 2^(n-1)(n-1)! + b`` and ``0 <= b < 2^(n-1)(n-1)!``.

    The full Hamiltonian length maps to ``(2n, 0)``.
    """
    H = order(n - 1)
    if not H < length <= order(n):
        raise UnreachableLength(f"length {length} is not in ({H}, {order(n)}] for n={n}")
    if length == order(n):
        return 2 * n, 0
    return divmod(length, H)


def embed_in_copy(word: GenWord, n: int | None = None) -> GenWord:
    """Reinterpret a word of ``BP_{n-1}`` at dimension ``n``.

    From the identity the walk never applies ``r_n`` and so stays inside the
    copy ``BP_{n-1}(n)``.
    """
    n = word.n + 1 if n is None else n
    if any(c >= n for c in word.letters):
        raise ConstructionError(f"word uses r_{max(word.letters)}, which leaves the copy in BP_{n}")
    return GenWord._trusted(word.letters, n)


def rotate_to_trailing(word: GenWord, letter: int) -> GenWord:
    """Rotate a cycle word so that its first ``letter`` becomes the last letter."""
    try:
        j = word.letters.index(letter)
    except ValueError:
        raise ConstructionError(f"cycle word has no r_{letter} edge to splice on") from None
    return GenWord._trusted(word.letters[j + 1 :] + word.letters[: j + 1], word.n)


def splice(base: GenWord, pos: int, inner: GenWord) -> GenWord:
    """Replace ``base[pos]`` by ``inner`` without its trailing letter."""
    n = base.n
    if not 0 <= pos < len(base):
        raise ConstructionError(f"splice position {pos} outside the base word", base.letters, pos)
    if base[pos] != n - 1:
        raise ConstructionError(f"base letter at {pos} is r_{base[pos]}, not r_{n - 1}", base.letters, pos)
    if len(inner) < 3 or inner[-1] != n - 1:
        raise ConstructionError(f"inner word must be a cycle word ending in r_{n - 1}", inner.letters)
    if any(c >= n for c in inner.letters):
        raise ConstructionError("inner word leaves the copy", inner.letters)
    letters = base.letters[:pos] + inner.letters[:-1] + base.letters[pos + 1 :]
    return GenWord._trusted(letters, n)


def _walk_to(word, n, pos):
    w = identity(n).window
    for c in word.letters[:pos]:
        w = _flip(w, c)
    return w


def _rebalance(n, a, b, case, base_len, fixed, free):
    """Shift ``free`` inner lengths so the spliced total is exactly ``a*H + b``.

    Returns the adjusted lengths and the net shift applied to them.
    """
    T, H = _bounds(n)
    total = base_len + sum(fixed) + sum(free) - 2 * (len(fixed) + len(free))
    diff = a * H + b - total
    shift = diff
    free = list(free)
    for t in range(len(free)):
        if diff == 0:
            break
        room = (H - free[t]) if diff > 0 else (T + 1 - free[t])
        step = min(diff, room) if diff > 0 else max(diff, room)
        free[t] += step
        diff -= step
    if diff:
        raise ConstructionError(f"case {case} at n={n} a={a} b={b}: cannot rebalance inner lengths by {diff}")
    return free, shift


class _Synth:
    def __init__(self, use_corpus: bool, plus_one_via_case1: bool):
        self.use_corpus = use_corpus
        self.plus_one_via_case1 = plus_one_via_case1

    def run(self, n: int, length: int):
        if n < 2:
            raise InvalidDimension(f"cycles need n >= 2, got n={n}")
        if not 8 <= length <= order(n):
            raise UnreachableLength(f"BP_{n} has no cycle of length {length} (need 8..{order(n)})")
        if length == order(n) and n >= 3:
            return self._hamiltonian(n)
        return self._build(n, length)

    def _build(self, n, length):
        if n == 2:
            return (1, 2) * 4, PlanNode("trivial", 2, 8)
        if n <= 4:
            return self._small(n, length)
        H = order(n - 1)
        if length <= H:
            letters, child = self.run(n - 1, length)
            return letters, PlanNode("embed-in-copy", n, length, {"copy": n}, [child])
        if length == order(n):
            return self._full(n)
        if length == H + 1 and not self.plus_one_via_case1:
            return self._plus_one(n)
        return self._case(n, length)

    def _hamiltonian(self, n):
        key = (n, self.use_corpus)
        hit = _HAMILTONIAN_MEMO.get(key)
        if hit is None:
            letters, plan = self._build(n, order(n))
            _check(n, letters, order(n))
            with _MEMO_LOCK:
                hit = _HAMILTONIAN_MEMO.setdefault(key, (letters, plan))
        letters, plan = hit
        return letters, PlanNode("hamiltonian", n, order(n), {}, [plan])

    def _small(self, n, length):
        if self.use_corpus:
            word = _corpus.lookup(n, length).word
            return word.letters, PlanNode("corpus-lookup", n, length)
        from .oracle import find_cycle_dfs

        found = find_cycle_dfs(n, length)
        if found is None:
            raise ConstructionError(f"DFS found no {length}-cycle in BP_{n}")
        return found.word.letters, PlanNode("dfs", n, length)

    def _inner(self, n, length):
        letters, plan = self.run(n - 1, length)
        if n - 1 not in letters:
            raise ConstructionError(f"inner {length}-cycle of BP_{n - 1} has no r_{n - 1} edge", letters)
        return letters, plan

    def _assemble(self, n, spec: BaseCycleSpec, positions, lengths, node: PlanNode):
        base = spec.word
        node.children.append(
            PlanNode("base-cycle", n, spec.length, {"k": spec.k, "case_tag": spec.case_tag, "formula": spec.formula})
        )
        if len(set(positions)) != len(positions):
            raise ConstructionError("two inner cycles assigned to one copy")
        order_ = sorted(zip(positions, lengths))
        copies = [_walk_to(base, n, p)[-1] for p, _ in order_]
        if len(set(copies)) != len(copies):
            raise ConstructionError("two inner cycles assigned to one copy")
        inners = []
        offset = 0
        for (pos, L), q in zip(order_, copies):
            letters, plan = self._inner(n, L)
            inner = rotate_to_trailing(GenWord._trusted(letters, n), n - 1)
            inners.append((pos, inner))
            node.children.append(
                PlanNode("splice", n, L, {"position": pos, "copy": q, "inner_length": L, "offset": pos + offset}, [plan])
            )
            offset += L - 2
        word = base
        for pos, inner in reversed(inners):
            word = splice(word, pos, inner)
        return word.letters, node

    def _full(self, n):
        spec = base_cycle(n, n)
        prof = copy_profile(spec)
        node = PlanNode("case", n, order(n), {"case": "hamiltonian", "a": 2 * n, "b": 0})
        positions = list(prof.single_edge_positions)
        return self._assemble(n, spec, positions, [order(n - 1)] * len(positions), node)

    def _plus_one(self, n):
        H = order(n - 1)
        spec = base_cycle(n, 1)
        prof = copy_profile(spec)
        second = list(prof.counts)[1]
        pos = next(p for p in prof.single_edge_positions if _walk_to(spec.word, n, p)[-1] == second)
        node = PlanNode("special-plus-one", n, H + 1, {"copy_visited": 2})
        return self._assemble(n, spec, [pos], [H - PLUS_ONE_DEFICIT], node)

    def _case(self, n, length):
        a, b = decompose(n, length)
        T, H = _bounds(n)
        half = order(n - 1) // 2
        if a < ceil(n / 2):
            spec = base_cycle(n, a)
            if b - 6 * a - 9 > T:
                case = "1(i)"
                fixed = [H] * a
                free = [b - 6 * a - 9]
            else:
                case = "1(ii)"
                part = (1 << (n - 1)) * factorial(n - 2)
                fixed = [H] * (a - 1)
                free = [part + b - 6 * a - 9, H - part]
        elif a <= n - 2:
            case = "2"
            spec = base_cycle(n, a)
            fixed = [half] * (2 * a - 2)
            free = [half - 2 * n + 2 * a + b // 2, half - 2 * n + 2 * a + (b + 1) // 2]
        else:
            case = "3"
            spec = base_cycle(n, n)
            fixed = [H] * (a - 1)
            free = [half - 2 * n + a + b // 2 + 1, half - 2 * n + a + (b + 1) // 2 + 1]
        free, shift = _rebalance(n, a, b, case, spec.length, fixed, free)
        lengths = fixed + free
        for L in lengths:
            if not T < L <= H:
                raise ConstructionError(f"case {case} inner length {L} outside ({T}, {H}] at n={n}")
        prof = copy_profile(spec)
        positions = list(prof.single_edge_positions)
        if len(positions) < len(lengths):
            raise ConstructionError(f"C_{spec.k} of BP_{n} has too few single-edge copies for case {case}")
        info = {"case": case, "a": a, "b": b}
        if shift:
            info["rebalanced"] = shift
        node = PlanNode("case", n, length, info)
        return self._assemble(n, spec, positions[: len(lengths)], lengths, node)


_HAMILTONIAN_MEMO: dict = {}
_MEMO_LOCK = threading.Lock()


def _check(n, letters, length):
    if len(letters) != length:
        raise ConstructionError(f"built a word of length {len(letters)}, wanted {length}", letters)
    closed, simple, pos = cycle_facts(identity(n), letters)
    if not simple:
        raise ConstructionError(f"synthesized {length}-word for BP_{n} is not a simple cycle", letters, pos)


def synthesize(n: int, length: int, use_corpus: bool = True, plus_one_via_case1: bool = False) -> SynthesisResult:
    """Build and validate a ``length``-cycle of ``BP_n`` with its plan tree.

    ``use_corpus=False`` replaces the stored ``n = 3, 4`` words by a DFS.
    ``plus_one_via_case1`` routes ``2^(n-1)(n-1)! + 1`` through the general
    case analysis instead of the dedicated ``C_1`` construction.
    """
    letters, plan = _Synth(use_corpus, plus_one_via_case1).run(n, length)
    _check(n, letters, length)
    return SynthesisResult(CycleWitness(n, identity(n), GenWord._trusted(tuple(letters), n)), plan)


def synth_cycle(n: int, length: int, use_corpus: bool = True, plus_one_via_case1: bool = False) -> CycleWitness:
    return synthesize(n, length, use_corpus, plus_one_via_case1).witness

"""Base cycles ``C_k`` of ``BP_n`` (``n >= 4``) and their copy profiles.

Three word families are used, named after the shape of the walk:

* ``smallK``: ``r_{k+1} (r_n r_{n-1})^{2k+2} r_{n-2k-2} r_n (r_{k+1} r_k)^{k+1}
  r_{2k+2} (r_k r_{k+1})^k r_k``, length ``8k + 11``.
* ``midK``: ``r_{k+1} (r_n r_{n-1})^{2k+2} r_n r_{k+1} (r_{n-k-2} r_{n-k-1})^{n-k-2}
  r_{n-k-2} r_n (r_{n-k-2} r_{n-k-1})^{n-k-2} r_{n-k-2}``, length ``4n + 2``.
* ``fullK``: ``(r_n r_{n-1})^{2n}``, length ``4n``.

The nominal split is smallK for ``k < ceil(n/2)``, midK for
``ceil(n/2) <= k < n - 1`` and fullK for ``k in {n-1, n}``.  Two parameters
fall outside the index range of their nominal formula:

* ``k = ceil(n/2) - 1``: smallK needs ``r_{n-2k-2}`` with ``n - 2k - 2 <= 0``.
  The midK word is used instead (its indices are in range there and it walks
  to a cycle of length ``4n + 2``).
* ``k = n - 2``: midK needs ``r_0``.  Dropping the empty blocks leaves a
  rotation of the fullK word, so the fullK word is used (length ``4n``).

Both are tagged ``boundary-adjusted`` and record the formula that produced
them.  Every word is walk-validated before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil, factorial

from .errors import ConstructionError, InvalidDimension
from .perm import GenWord, _flip, cycle_facts, identity

SMALL_K = "smallK"
MID_K = "midK"
FULL_K = "fullK"
BOUNDARY = "boundary-adjusted"


@dataclass(frozen=True)
class BaseCycleSpec:
    n: int
    k: int
    case_tag: str
    formula: str
    word: GenWord

    @property
    def length(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class CopyProfile:
    """Intra-copy edge counts of a base cycle walked from the identity.

    ``counts`` maps each visited copy (its signed last symbol) to the number
    of letters ``< n`` applied while inside it, in order of first visit.
    ``single_edge_positions`` lists word positions of ``r_{n-1}`` letters that
    are the only intra-copy edge of their copy.
    """

    counts: dict
    top_letters: int
    single_edge_positions: tuple[int, ...]

    @property
    def copies_visited(self) -> int:
        return len(self.counts)

    def multiset(self) -> list[int]:
        return sorted(self.counts.values())


def _small_k_word(n, k):
    return (
        [k + 1]
        + [n, n - 1] * (2 * k + 2)
        + [n - 2 * k - 2, n]
        + [k + 1, k] * (k + 1)
        + [2 * k + 2]
        + [k, k + 1] * k
        + [k]
    )


def _mid_k_word(n, k):
    a, b = n - k - 2, n - k - 1
    return (
        [k + 1]
        + [n, n - 1] * (2 * k + 2)
        + [n, k + 1]
        + [a, b] * (n - k - 2)
        + [a, n]
        + [a, b] * (n - k - 2)
        + [a]
    )


def _full_k_word(n):
    return [n, n - 1] * (2 * n)


_FORMULAS = {SMALL_K: _small_k_word, MID_K: _mid_k_word, FULL_K: lambda n, k: _full_k_word(n)}


def nominal_case(n: int, k: int) -> str:
    if k < ceil(n / 2):
        return SMALL_K
    if k < n - 1:
        return MID_K
    return FULL_K


def resolve_formula(n: int, k: int) -> tuple[str, str]:
    """``(case_tag, formula)`` actually used for ``C_k``."""
    if k == ceil(n / 2) - 1:
        return BOUNDARY, MID_K
    if k == n - 2:
        return BOUNDARY, FULL_K
    case = nominal_case(n, k)
    return case, case


def expected_length(n: int, formula: str, k: int) -> int:
    if formula == SMALL_K:
        return 8 * k + 11
    if formula == MID_K:
        return 4 * n + 2
    return 4 * n


def expected_profile(n: int, formula: str, k: int) -> list[int]:
    """Sorted intra-copy edge counts predicted for the formula."""
    if formula == SMALL_K:
        return sorted([1] * (2 * k + 1) + [2, 4 * k + 5])
    if formula == MID_K:
        return sorted([1] * (2 * k + 2) + [2 * n - 2 * k - 2] * 2)
    return [1] * (2 * n)


@lru_cache(maxsize=None)
def base_cycle(n: int, k: int) -> BaseCycleSpec:
    if n < 4:
        raise InvalidDimension(f"base cycles are defined for n >= 4, got n={n}")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    tag, formula = resolve_formula(n, k)
    letters = tuple(_FORMULAS[formula](n, k))
    bad = [c for c in letters if not 1 <= c <= n]
    if bad:
        raise ConstructionError(f"C_{k} of BP_{n} uses out-of-range index r_{bad[0]}", letters)
    closed, simple, pos = cycle_facts(identity(n), letters)
    if not simple:
        raise ConstructionError(f"C_{k} of BP_{n} ({formula}) is not a simple cycle", letters, pos)
    return BaseCycleSpec(n, k, tag, formula, GenWord._trusted(letters, n))


def copy_profile(spec: BaseCycleSpec) -> CopyProfile:
    n = spec.n
    counts: dict = {}
    members: dict = {}
    w = identity(n).window
    tops = 0
    for pos, c in enumerate(spec.word.letters):
        if c == n:
            tops += 1
        else:
            q = w[-1]
            counts[q] = counts.get(q, 0) + 1
            members.setdefault(q, []).append((pos, c))
        w = _flip(w, c)
    singles = tuple(
        sorted(
            members[q][0][0]
            for q, cnt in counts.items()
            if cnt == 1 and members[q][0][1] == n - 1
        )
    )
    return CopyProfile(counts, tops, singles)


def copy_visit_order(spec: BaseCycleSpec) -> list[int]:
    """Copies in the order the walk from the identity enters them."""
    return list(copy_profile(spec).counts)


@dataclass(frozen=True)
class ObservationResult:
    name: str
    statement: str
    n: int
    applicable: bool
    holds: bool


def _p(e, m):
    return (1 << e) * factorial(m)


def _observations(n):
    c = ceil(n / 2)
    t, h = _p(n - 2, n - 2), _p(n - 1, n - 1)
    return [
        ("half-range", "ceil(n/2) <= k <= n-1 implies n-k <= k+1", 1,
         all(n - k <= k + 1 for k in range(c, n))),
        ("case1ii-inner", "2^(n-2)(n-2)! < 2^(n-1)(n-2)! - 3n - 9 < 2^(n-1)(n-1)!", 5,
         t < _p(n - 1, n - 2) - 3 * n - 9 < h),
        ("case1ii-sum", "2^(n-1)(n-2)! + 2^(n-2)(n-2)! < 2^(n-1)(n-1)!", 3,
         _p(n - 1, n - 2) + t < h),
        ("case1ii-complement", "2^(n-1)(n-1)! - 2^(n-1)(n-2)! > 2^(n-2)(n-2)!", 3,
         h - _p(n - 1, n - 2) > t),
        ("plus-one-inner", "2^(n-2)(n-2)! < 2^(n-1)(n-1)! - 17 < 2^(n-1)(n-1)!", 4,
         t < h - 17 < h),
        ("case2-lower", "2^(n-2)(n-2)! < 2^(n-2)(n-1)! - n - 1 < 2^(n-1)(n-1)!", 3,
         t < _p(n - 2, n - 1) - n - 1 < h),
        ("case2-upper", "2^(n-2)(n-2)! < 2^(n-1)(n-1)! - 4 < 2^(n-1)(n-1)!", 3,
         t < h - 4 < h),
        ("case3-lower", "2^(n-2)(n-2)! < 2^(n-2)(n-1)! - n + 1 < 2^(n-1)(n-1)!", 4,
         t < _p(n - 2, n - 1) - n + 1 < h),
    ]


def check_observations(n: int) -> list[ObservationResult]:
    """Evaluate the length inequalities the synthesis relies on.

    Each inequality is checked only where it is claimed (its minimum ``n``);
    elsewhere it is reported as not applicable.
    """
    if n < 3:
        raise InvalidDimension(f"observations are stated for n >= 3, got {n}")
    out = []
    for name, statement, n_min, value in _observations(n):
        applicable = n >= n_min
        out.append(ObservationResult(name, statement, n, applicable, bool(value) if applicable else True))
    return out

"""The burnt pancake graph ``BP_n`` as an implicit graph.

Vertex ranks are stable across versions: the Lehmer index of the
absolute-value permutation (lexicographic order) times ``2**n``, plus a sign
mask whose bit ``j`` is set when window position ``j`` (0-based) is negative.
The identity therefore has rank 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import InvalidDimension, ResourceLimit
from .perm import SignedPerm, _flip, apply_reversal, format_perm

DEFAULT_EXPLICIT_CAP = 7

# copies BP_{n-1}(q) are identified by the signed last symbol q
CopyRef = int


@dataclass(frozen=True)
class GraphStats:
    n: int
    vertices: int
    edges: int
    density: Fraction

    def __str__(self):
        return f"n={self.n} vertices={self.vertices} edges={self.edges} density={self.density}"


def order(n: int) -> int:
    """Number of vertices ``2**n * n!``."""
    return (1 << n) * factorial(n)


def copy_of(w: SignedPerm) -> CopyRef:
    if w.n < 2:
        raise InvalidDimension("copy structure needs n >= 2")
    return w.window[-1]


def neighbors(w: SignedPerm) -> list[SignedPerm]:
    return [apply_reversal(w, i) for i in range(1, w.n + 1)]


def _lehmer_rank(perm) -> int:
    n = len(perm)
    r = 0
    for i in range(n):
        smaller = 0
        pi = perm[i]
        for j in range(i + 1, n):
            if perm[j] < pi:
                smaller += 1
        r = r * (n - i) + smaller
    return r


def _lehmer_unrank(n: int, r: int) -> list[int]:
    digits = []
    for radix in range(1, n + 1):
        r, d = divmod(r, radix)
        digits.append(d)
    digits.reverse()
    pool = list(range(1, n + 1))
    return [pool.pop(d) for d in digits]


def rank(w: SignedPerm) -> int:
    n = w.n
    mask = 0
    for j, x in enumerate(w.window):
        if x < 0:
            mask |= 1 << j
    return _lehmer_rank([abs(x) for x in w.window]) * (1 << n) + mask


def unrank(n: int, r: int) -> SignedPerm:
    if n < 1:
        raise InvalidDimension(f"dimension must be >= 1, got {n}")
    if not 0 <= r < order(n):
        raise ValueError(f"rank {r} outside [0, {order(n)})")
    lehmer, mask = divmod(r, 1 << n)
    perm = _lehmer_unrank(n, lehmer)
    return SignedPerm._trusted(tuple(-x if mask >> j & 1 else x for j, x in enumerate(perm)))


def stats(n: int) -> GraphStats:
    if n < 1:
        raise InvalidDimension(f"dimension must be >= 1, got {n}")
    v = order(n)
    e = n * (1 << (n - 1)) * factorial(n)
    return GraphStats(n, v, e, Fraction(n, v - 1))


def density_from_counts(vertices: int, edges: int) -> Fraction:
    return Fraction(edges, comb(vertices, 2))


def _check_cap(n, cap):
    cap = DEFAULT_EXPLICIT_CAP if cap is None else cap
    if n > cap:
        raise ResourceLimit(f"explicit BP_{n} exceeds the cap n <= {cap} ({order(n)} vertices)")


def iter_vertices(n: int, cap: int | None = None):
    """All vertices in rank order."""
    _check_cap(n, cap)
    for r in range(order(n)):
        yield unrank(n, r)


def build_explicit(n: int, cap: int | None = None) -> list[tuple[int, int]]:
    """Edge list of ``BP_n`` as sorted ``(rank1, rank2)`` pairs, ``rank1 < rank2``."""
    if n < 1:
        raise InvalidDimension(f"dimension must be >= 1, got {n}")
    return [(a, b) for a, b, _ in edge_labels(n, cap)]


def edge_labels(n: int, cap: int | None = None):
    """``(rank1, rank2, i)`` for every edge, ``rank1 < rank2``, sorted."""
    _check_cap(n, cap)
    out = []
    for r in range(order(n)):
        win = unrank(n, r).window
        for i in range(1, n + 1):
            s = rank(SignedPerm._trusted(_flip(win, i)))
            if r < s:
                out.append((r, s, i))
    out.sort()
    return out


def export_edges(n: int, cap: int | None = None) -> str:
    return "".join(f"{a}\t{b}\n" for a, b in build_explicit(n, cap))


def export_dot(n: int, cap: int | None = None) -> str:
    labelled = edge_labels(n, cap)
    lines = [f"graph BP{n} {{"]
    for r in range(order(n)):
        lines.append(f'  {r} [label="{format_perm(unrank(n, r))}"];')
    for a, b, i in labelled:
        lines.append(f'  {a} -- {b} [label="r_{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

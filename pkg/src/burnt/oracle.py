"""Brute-force ground truth on explicit small graphs.

Everything here works on plain tuples with its own flip routine so that it
stays independent of the constructive code it is used to check.

Cycle counting convention: a cycle is a set of vertices with a cyclic order
and is counted once regardless of start vertex and direction.  Counts
"through a vertex" restrict to cycles containing that vertex; this anchored
count is what gives 184 for the 23-cycles of the unsigned ``P_4`` (there are
192 in total, each missing exactly one of the 24 vertices).
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

from .errors import InvalidDimension, InvalidGenerator, ResourceLimit
from .perm import CycleWitness, GenWord, SignedPerm

DEFAULT_VERTEX_CAP = 100_000
DFS_MAX_N = 4


def signed_flip(w: tuple, i: int) -> tuple:
    return tuple(-x for x in reversed(w[:i])) + w[i:]


def unsigned_apply_reversal(p, i: int) -> tuple:
    p = tuple(p)
    if not 1 <= i <= len(p):
        raise InvalidGenerator(f"r_{i} is not a prefix reversal of S_{len(p)}")
    return tuple(reversed(p[:i])) + p[i:]


@dataclass
class ExplicitGraph:
    """Vertices (as tuples) with integer adjacency lists.

    Vertex 0 is always the identity; ``labels[u][t]`` is the generator index
    of the edge ``adj[u][t]``.
    """

    n: int
    signed: bool
    vertices: list
    index: dict
    adj: list
    labels: list

    def __len__(self):
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2


def _graph_size(n, signed):
    return factorial(n) * (2**n if signed else 1)


def build_graph(n: int, signed: bool = True, cap: int | None = None) -> ExplicitGraph:
    if n < 1:
        raise InvalidDimension(f"dimension must be >= 1, got {n}")
    cap = DEFAULT_VERTEX_CAP if cap is None else cap
    size = _graph_size(n, signed)
    if size > cap:
        kind = "BP" if signed else "P"
        raise ResourceLimit(f"{kind}_{n} has {size} vertices, over the cap of {cap}")
    ident = tuple(range(1, n + 1))
    if signed:
        verts = [
            tuple(a * s for a, s in zip(p, signs))
            for p in permutations(ident)
            for signs in product((1, -1), repeat=n)
        ]
        gens = list(range(1, n + 1))
        move = signed_flip
    else:
        verts = list(permutations(ident))
        gens = list(range(2, n + 1))
        move = unsigned_apply_reversal
    verts.remove(ident)
    verts.insert(0, ident)
    index = {v: t for t, v in enumerate(verts)}
    adj = [[index[move(v, i)] for i in gens] for v in verts]
    labels = [gens[:] for _ in verts]
    return ExplicitGraph(n, signed, verts, index, adj, labels)


def bfs_levels(graph: ExplicitGraph, source: int) -> list[int]:
    dist = [-1] * len(graph)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in graph.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


@dataclass(frozen=True)
class ValidationReport:
    length: int
    closed: bool
    simple: bool
    visited: int
    first_violation: int | None = None
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.closed and self.simple


def is_simple_cycle(n: int, start, word, signed: bool = True) -> ValidationReport:
    """Walk ``word`` from ``start`` and report whether it is a simple cycle.

    ``first_violation`` is the index of the first offending letter: an
    immediate backtrack, an out-of-range index, or the step that revisits a
    vertex early.
    """
    letters = tuple(word.letters if isinstance(word, GenWord) else word)
    v = tuple(start.window if isinstance(start, SignedPerm) else start)
    if len(v) != n:
        raise InvalidDimension(f"start vertex has dimension {len(v)}, expected {n}")
    move = signed_flip if signed else unsigned_apply_reversal
    lo = 1 if signed else 2
    L = len(letters)
    for t, c in enumerate(letters):
        if not lo <= c <= n:
            return ValidationReport(L, False, False, 0, t, f"letter {c} out of range")
        if t > 0 and c == letters[t - 1]:
            return ValidationReport(L, False, False, 0, t, "immediate backtrack")
    origin = v
    seen = {v}
    for t, c in enumerate(letters):
        v = move(v, c)
        if t == L - 1:
            break
        if v in seen:
            return ValidationReport(L, False, False, len(seen), t, "vertex revisited")
        seen.add(v)
    closed = L > 0 and v == origin
    if not closed:
        return ValidationReport(L, False, False, len(seen), None, "walk does not return to start")
    if L < 3 or letters[0] == letters[-1]:
        return ValidationReport(L, True, False, len(seen), L - 1, "immediate backtrack")
    return ValidationReport(L, True, True, len(seen))


def find_cycle_dfs(n: int, length: int, anchor=None, max_n: int = DFS_MAX_N) -> CycleWitness | None:
    """Smallest-letter-first search for a cycle of ``length`` through ``anchor``.

    By vertex transitivity a cycle of a given length exists iff one passes
    through the identity, which is the default anchor.  Branches that cannot
    return to the anchor in the remaining steps are pruned; pruning never
    changes which witness is found first.
    """
    if n > max_n:
        raise ResourceLimit(f"DFS cycle search is capped at n <= {max_n}")
    graph = build_graph(n)
    start = 0 if anchor is None else graph.index[tuple(anchor)]
    if length < 3 or length > len(graph):
        return None
    dist = bfs_levels(graph, start)
    visited = bytearray(len(graph))
    visited[start] = 1
    path: list[int] = []
    adj, labels = graph.adj, graph.labels

    # iterative DFS; each frame is (vertex, next neighbour slot)
    stack = [[start, 0]]
    while stack:
        frame = stack[-1]
        u, slot = frame
        depth = len(stack) - 1
        remaining = length - depth
        if slot >= len(adj[u]):
            stack.pop()
            if path:
                path.pop()
            visited[u] = 0 if u != start else 1
            continue
        frame[1] += 1
        v = adj[u][slot]
        if remaining == 1:
            if v == start:
                path.append(labels[u][slot])
                return CycleWitness(n, SignedPerm(graph.vertices[start]), GenWord(tuple(path), n))
            continue
        if visited[v] or dist[v] > remaining - 1:
            continue
        visited[v] = 1
        path.append(labels[u][slot])
        stack.append([v, 0])
    return None


def iter_cycles_of_length(graph: ExplicitGraph, length: int, anchor: int | None = None):
    """Yield each cycle of ``length`` once, as a tuple of vertex indices.

    Without an anchor every cycle is reported starting from its smallest
    vertex; with an anchor only cycles through that vertex are reported,
    starting from it.  Of the two directions the one whose second vertex is
    smaller than its last is kept.
    """
    if length < 3:
        return
    adj = graph.adj
    N = len(graph)
    starts = range(N) if anchor is None else (anchor,)
    for s in starts:
        floor = s if anchor is None else -1
        dist = bfs_levels(graph, s)
        on_path = bytearray(N)
        on_path[s] = 1
        path = [s]

        def extend(u):
            remaining = length - len(path)
            if remaining == 0:
                if s in adj[u] and path[1] < path[-1]:
                    yield tuple(path)
                return
            for v in adj[u]:
                if v > floor and not on_path[v] and dist[v] <= remaining:
                    on_path[v] = 1
                    path.append(v)
                    yield from extend(v)
                    path.pop()
                    on_path[v] = 0

        yield from extend(s)


def enumerate_cycles_of_length(graph: ExplicitGraph, length: int, anchor: int | None = None) -> int:
    return sum(1 for _ in iter_cycles_of_length(graph, length, anchor))


def girth(graph: ExplicitGraph) -> int | None:
    best = None
    N = len(graph)
    for s in range(N):
        dist = [-1] * N
        parent = [-1] * N
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for v in graph.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    cyc = dist[u] + dist[v] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def bfs_distance(u, v, cap: int | None = None) -> int:
    u = tuple(u.window if isinstance(u, SignedPerm) else u)
    v = tuple(v.window if isinstance(v, SignedPerm) else v)
    if len(u) != len(v):
        raise InvalidDimension("distance between vertices of different dimension")
    n = len(u)
    cap = DEFAULT_VERTEX_CAP if cap is None else cap
    if _graph_size(n, True) > cap:
        raise ResourceLimit(f"BFS over BP_{n} exceeds the cap of {cap} vertices")
    if u == v:
        return 0
    seen = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for i in range(1, n + 1):
            y = signed_flip(x, i)
            if y not in seen:
                seen[y] = seen[x] + 1
                if y == v:
                    return seen[y]
                queue.append(y)
    raise AssertionError("BP_n is connected")


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    statement: str
    checked: int
    violations: int

    @property
    def holds(self) -> bool:
        return self.checked > 0 and self.violations == 0


def _distance_table(graph):
    return [bfs_levels(graph, s) for s in range(len(graph))]


def check_lemma_properties(n: int, samples: int = 10_000, seed: int = 0) -> list[LemmaCheck]:
    """Check the distance and copy lemmas behind the 8-cycle classification.

    ``n = 3`` is checked exhaustively; larger ``n`` on ``samples`` random
    vertices (pairs are then formed from each sampled vertex).
    """
    if n < 3:
        raise InvalidDimension("lemma checks need n >= 3")
    graph = build_graph(n)
    dist = _distance_table(graph)
    idx = graph.index
    V = graph.vertices
    exhaustive = n == 3
    rng = random.Random(seed)
    pool = list(range(len(V))) if exhaustive else [rng.randrange(len(V)) for _ in range(samples)]

    # r_n always moves a vertex to a copy with a different |last symbol|
    c1 = v1 = 0
    for p in pool:
        w = V[p]
        c1 += 1
        v1 += abs(w[-1]) == abs(signed_flip(w, n)[-1])

    # same first symbol: distance 3 iff tau = pi r_j r_i r_j, i < j
    c2 = v2 = 0
    for p in pool:
        pi = V[p]
        three = set()
        for j in range(2, n + 1):
            for i in range(1, j):
                tau = signed_flip(signed_flip(signed_flip(pi, j), i), j)
                # block form [A B C] -> [A rev(-B) C] with |A| = j - i, |B| = i
                block = pi[: j - i] + tuple(-x for x in reversed(pi[j - i : j])) + pi[j:]
                c2 += 1
                v2 += tau != block
                three.add(tau)
        for t in range(len(V)):
            tau = V[t]
            if t == p or tau[0] != pi[0]:
                continue
            c2 += 1
            v2 += (dist[p][t] == 3) != (tau in three)

    # block swap [A B C] -> [B A C] with nonempty blocks is at distance >= 3
    c3 = v3 = 0
    for p in pool:
        pi = V[p]
        for la in range(1, n - 1):
            for lb in range(1, n - la):
                tau = pi[la : la + lb] + pi[:la] + pi[la + lb :]
                path = signed_flip(signed_flip(signed_flip(pi, la), la + lb), lb)
                c3 += 1
                v3 += dist[p][idx[tau]] < 3 or path != tau

    # two vertices of one copy within distance 2 leave it by r_n into distinct copies
    c4 = v4 = 0
    for p in pool:
        pi = V[p]
        near = set()
        for i in range(1, n + 1):
            x = signed_flip(pi, i)
            near.add(x)
            for k in range(1, n + 1):
                near.add(signed_flip(x, k))
        near.discard(pi)
        for tau in near:
            if tau[-1] != pi[-1]:
                continue
            c4 += 1
            v4 += signed_flip(pi, n)[-1] == signed_flip(tau, n)[-1]

    return [
        LemmaCheck("copy-change", "|last(w)| != |last(w r_n)|", c1, v1),
        LemmaCheck("distance-three", "same first symbol: d = 3 iff tau = pi r_j r_i r_j", c2, v2),
        LemmaCheck("block-swap", "d([ABC], [BAC]) >= 3 for nonempty A, B, C", c3, v3),
        LemmaCheck("distinct-exits", "d <= 2 inside a copy implies distinct r_n exits", c4, v4),
    ]

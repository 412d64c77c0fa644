"""Alcove model of the affine Coxeter complex of a root system.

Walls are ``H_{alpha,k} = {x : <x, alpha^vee> = k}`` and the translations of
the affine Weyl group form the root lattice, so the affine wall of the
fundamental alcove is ``<x, phi^vee> = 1`` where ``phi^vee`` is the highest
coroot (``phi`` = :attr:`RootSystem.affine_root`, the highest short root; it is
the highest root in simply laced types).

Generators of the affine Weyl group are indexed ``0..rank``: ``0`` is the
affine reflection ``s_0: x -> x - (<x, phi^vee> - 1) phi`` and ``i >= 1`` is the
simple reflection ``s_i`` in ``alpha_i`` (1-based, so ``alpha_i`` sits at
coordinate ``i - 1``).

Every alcove is ``u . fa`` for exactly one affine Weyl element ``u``; internally
``u`` is the pair ``(w, mu)`` of a Weyl group index and an integral
translation, acting as ``x -> w(x) + mu``.  Right multiplication by ``s_g``
crosses the panel of cotype ``g``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Tuple

from .root_system import (
    RootSystem,
    Vector,
    WeylElement,
    _matmul,
    _normalize,
    apply,
)


class NotAVertexError(ValueError):
    pass


class ComplexError(RuntimeError):
    """Internal inconsistency in the alcove model (should be unreachable)."""


@dataclass(frozen=True, order=True)
class AffineHyperplane:
    """``H_{alpha, k} = {x : <x, alpha^vee> = k}`` with ``alpha`` positive."""

    root: int
    level: int


@dataclass(frozen=True)
class AffineWeylElement:
    linear_part: WeylElement
    translation: Vector

    def __call__(self, x: Vector) -> Vector:
        return tuple(a + b for a, b in zip(self.linear_part(x), self.translation))


@dataclass(frozen=True)
class Alcove:
    """An alcove ``element . fa``; identified by its level vector.

    ``levels[j]`` is the integer ``k`` with ``k < <p, beta_j^vee> < k + 1`` on the
    interior, ``beta_j`` the ``j``-th positive root.
    """

    levels: Tuple[int, ...]
    w: int = field(compare=False)
    translation: Tuple[int, ...] = field(compare=False)

    def __lt__(self, other):
        return self.levels < other.levels

    @property
    def state(self):
        return self.w, self.translation


@dataclass(frozen=True)
class Panel:
    vertices: Tuple[Vector, ...]
    support: AffineHyperplane
    ptype: int


class AffineComplex:
    """Precomputed tables for the affine Coxeter complex of ``rs``."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = self.rank = rs.rank
        W = self.W = rs.weyl_group()
        self.matrices = [w.matrix for w in W]
        roots = rs.positive_roots
        theta = self.theta = rs.affine_root
        self.nroots = len(roots)

        # <x, beta^vee> = sum_j coroot_rows[b][j] * x[j]; integral rows
        self.coroot_rows = [
            tuple(int(rs.pair_with_coroot(tuple(int(i == j) for i in range(n)), b)) for j in range(n))
            for b in roots
        ]
        self.theta_row = self.coroot_rows[rs.root_index(theta)]

        # affine generator g -> (linear generator matrix, translation)
        s_theta = rs.reflection_matrix(theta)
        self.s_theta = rs.element_index(s_theta)
        gens = [s_theta] + [rs.generator_matrix(i) for i in range(n)]
        self.gen_index = [rs.element_index(M) for M in gens]

        size = len(W)
        self.right = [[rs.element_index(_matmul(W[w].matrix, gens[g])) for g in range(n + 1)] for w in range(size)]
        self.left = [[rs.element_index(_matmul(gens[g], W[w].matrix)) for g in range(n + 1)] for w in range(size)]
        self.inverse = []
        for w in W:
            M = W[0].matrix
            for i in reversed(w.word):
                M = _matmul(M, rs.generator_matrix(i))
            self.inverse.append(rs.element_index(M))
        self.w_theta = [apply(W[w].matrix, theta) for w in range(size)]
        self.reflection = [rs.element_index(rs.reflection_matrix(b)) for b in roots]
        self._reflect_cache = {}

        # negative[w][b]: w^{-1} beta_b is a negative root
        self.negative = []
        for w in range(size):
            Minv = W[self.inverse[w]].matrix
            self.negative.append(tuple(any(a < 0 for a in apply(Minv, b)) for b in roots))

        # wall of cotype g in alcove (w, mu): beta = root index, level = sign*c + <mu, beta^vee>
        simple_walls = [theta] + [tuple(int(i == j) for i in range(n)) for j in range(n)]
        self.wall = []
        self.fold_ok = []
        for w in range(size):
            walls, ok = [], []
            for g in range(n + 1):
                img = apply(W[w].matrix, simple_walls[g])
                sign = 1 if any(a > 0 for a in img) else -1
                beta = rs.root_index(tuple(sign * a for a in img))
                c = 1 if g == 0 else 0
                walls.append((beta, sign * c))
                # level_beta(alcove) >= wall level  <=>  -[w^{-1}beta<0] >= sign*c
                ok.append(-(1 if sign < 0 else 0) >= sign * c)
            self.wall.append(tuple(walls))
            self.fold_ok.append(tuple(ok))

        # vertices of fa: the origin and omega_g / <omega_g, phi^vee>
        verts = [tuple(0 for _ in range(n))]
        for g in range(n):
            om = rs.fundamental_coweights[g]
            verts.append(_normalize([Fraction(a) / rs.pair_with_coroot(om, theta) for a in om]))
        self.fa_vertices = tuple(verts)
        self.zero = tuple(0 for _ in range(n))
        self._vertex_cache: Dict[Tuple[int, int], Vector] = {}

    # -- raw (w, mu) states ---------------------------------------------
    def pair(self, mu, b: int):
        row = self.coroot_rows[b]
        return sum(row[j] * mu[j] for j in range(self.rank))

    def cross_state(self, w: int, mu: tuple, g: int):
        if g == 0:
            t = self.w_theta[w]
            return self.right[w][0], tuple(a + b for a, b in zip(mu, t))
        return self.right[w][g], mu

    def wall_of(self, w: int, mu: tuple, g: int) -> AffineHyperplane:
        beta, c = self.wall[w][g]
        return AffineHyperplane(beta, c + self.pair(mu, beta))

    def levels_of(self, w: int, mu: tuple) -> Tuple[int, ...]:
        neg = self.negative[w]
        return tuple(self.pair(mu, b) - neg[b] for b in range(self.nroots))

    def reflect_state(self, h: AffineHyperplane, w: int, mu: tuple):
        """Left-multiply ``(w, mu)`` by the reflection in ``h``."""
        beta = self.rs.positive_roots[h.root]
        c = self.pair(mu, h.root) - h.level
        key = (h.root, w)
        w2 = self._reflect_cache.get(key)
        if w2 is None:
            M = _matmul(self.rs.reflection_matrix(beta), self.W[w].matrix)
            w2 = self._reflect_cache[key] = self.rs.element_index(M)
        return w2, tuple(a - c * b for a, b in zip(mu, beta))

    def alcove(self, w: int, mu) -> Alcove:
        mu = tuple(int(a) for a in mu)
        return Alcove(self.levels_of(w, mu), w, mu)

    def vertex(self, a: Alcove, g: int) -> Vector:
        """Vertex of type ``g`` of alcove ``a``."""
        if g == 0:
            return a.translation
        key = (a.w, g)
        off = self._vertex_cache.get(key)
        if off is None:
            off = self._vertex_cache[key] = _normalize(apply(self.W[a.w].matrix, self.fa_vertices[g]))
        return _normalize([x + y for x, y in zip(off, a.translation)])

    def vertices(self, a: Alcove) -> Tuple[Vector, ...]:
        return tuple(self.vertex(a, g) for g in range(self.rank + 1))

    def element(self, a: Alcove) -> AffineWeylElement:
        return AffineWeylElement(self.W[a.w], a.translation)

    # -- affine reduction -----------------------------------------------
    def reduce_to_fundamental(self, v: Vector):
        """Return ``(v0, (w, mu))`` with ``w(v) + mu = v0`` and ``v0`` in ``fa``."""
        rs = self.rs
        v = _normalize(v)
        w, mu = 0, self.zero
        theta = self.theta
        while True:
            for i in range(self.rank):
                c = rs.coroot_pairing(v, i)
                if c < 0:
                    v = _normalize(rs.simple_reflection(i, v))
                    w = self.left[w][i + 1]
                    mu = rs.simple_reflection(i, mu)
                    break
            else:
                c = sum(r * a for r, a in zip(self.theta_row, v))
                if c > 1:
                    v = _normalize([a - (c - 1) * t for a, t in zip(v, theta)])
                    w = self.left[w][0]
                    ct = sum(r * a for r, a in zip(self.theta_row, mu))
                    mu = tuple(a - (ct - 1) * t for a, t in zip(mu, theta))
                    continue
                return v, (w, tuple(int(a) for a in mu))

    def locate_vertex(self, v: Vector):
        """Type of the vertex ``v`` and one alcove containing it."""
        v0, (w, mu) = self.reduce_to_fundamental(v)
        try:
            label = self.fa_vertices.index(v0)
        except ValueError:
            raise NotAVertexError(f"{tuple(v)} is not a vertex of the {self.rs.kind} complex") from None
        winv = self.inverse[w]
        minv = tuple(-a for a in apply(self.W[winv].matrix, mu))
        return label, self.alcove(winv, minv)


@lru_cache(maxsize=None)
def complex_of(rs: RootSystem) -> AffineComplex:
    return AffineComplex(rs)


def fundamental_alcove(rs: RootSystem) -> Alcove:
    cx = complex_of(rs)
    return cx.alcove(0, cx.zero)


def alcove_vertices(rs: RootSystem, a: Alcove) -> Tuple[Vector, ...]:
    """Vertices of ``a`` listed by type ``0..rank``."""
    return complex_of(rs).vertices(a)


def cross(rs: RootSystem, a: Alcove, g: int) -> Alcove:
    cx = complex_of(rs)
    return cx.alcove(*cx.cross_state(a.w, a.translation, g))


def _support_by_search(cx: AffineComplex, verts) -> AffineHyperplane:
    found = []
    for b in range(cx.nroots):
        vals = {cx.pair(v, b) for v in verts}
        if len(vals) == 1:
            k = vals.pop()
            if Fraction(k).denominator == 1:
                found.append(AffineHyperplane(b, int(k)))
    if len(found) != 1:
        raise ComplexError(f"no unique wall through {verts}: {found}")
    return found[0]


@lru_cache(maxsize=200_000)
def _panel(rs: RootSystem, a: Alcove, g: int) -> Panel:
    cx = complex_of(rs)
    verts = [cx.vertex(a, t) for t in range(rs.rank + 1) if t != g]
    return Panel(tuple(sorted(verts)), _support_by_search(cx, verts), g)


def panel_of(rs: RootSystem, a: Alcove, g: int) -> Panel:
    """Face of ``a`` shared with ``cross(rs, a, g)``."""
    return _panel(rs, a, g)


def vertex_type(rs: RootSystem, v: Vector) -> int:
    return complex_of(rs).locate_vertex(v)[0]


def separates(rs: RootSystem, h: AffineHyperplane, a: Alcove) -> bool:
    """Whether ``h`` separates the alcove ``a`` from the antidominant chamber."""
    return a.levels[h.root] >= h.level


def alcoves_containing(rs: RootSystem, v: Vector) -> FrozenSet[Alcove]:
    cx = complex_of(rs)
    label, start = cx.locate_vertex(v)
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for g in range(rs.rank + 1):
            if g == label:
                continue
            b = cross(rs, a, g)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return frozenset(seen)


def _bfs(rs: RootSystem, a: Vector, b: Vector):
    """Shortest alcove path from the star of ``a`` to the star of ``b``."""
    sources = sorted(alcoves_containing(rs, a))
    targets = alcoves_containing(rs, b)
    parent: Dict[Alcove, Optional[Tuple[Alcove, int]]] = {s: None for s in sources}
    frontier = sources
    while frontier:
        hits = sorted(x for x in frontier if x in targets)
        if hits:
            path = [hits[0]]
            moves = []
            while parent[path[-1]] is not None:
                prev, g = parent[path[-1]]
                moves.append(g)
                path.append(prev)
            return path[::-1], moves[::-1]
        nxt = []
        for x in frontier:
            for g in range(rs.rank + 1):
                y = cross(rs, x, g)
                if y not in parent:
                    parent[y] = (x, g)
                    nxt.append(y)
        frontier = nxt
    raise ComplexError("alcove graph is disconnected")


@lru_cache(maxsize=4096)
def _distance(rs: RootSystem, a: Vector, b: Vector) -> int:
    return len(_bfs(rs, a, b)[0])


def gallery_distance(rs: RootSystem, a: Vector, b: Vector) -> int:
    """Number of alcoves in a shortest gallery with ``a`` in the first and ``b`` in the last alcove."""
    return _distance(rs, _normalize(a), _normalize(b))


def minimal_gallery(rs: RootSystem, x: Vector):
    """A shortest gallery from the origin to the type-0 vertex ``x``."""
    from .galleries import Gallery

    x = _normalize(x)
    if vertex_type(rs, x) != 0:
        raise NotAVertexError(f"{x} is not a special vertex of type 0")
    cx = complex_of(rs)
    if x == cx.zero:
        return Gallery(cx.zero, None, (), cx.zero, rs)
    path, moves = _bfs(rs, cx.zero, x)
    steps = tuple((panel_of(rs, path[i], g), path[i + 1]) for i, g in enumerate(moves))
    return Gallery(cx.zero, path[0], steps, x, rs)


def hyperplane_count_distance(rs: RootSystem, x: Vector) -> int:
    """Closed-form distance from 0 to a type-0 vertex: one plus the walls strictly between."""
    cx = complex_of(rs)
    return 1 + sum(max(0, abs(cx.pair(x, b)) - 1) for b in range(cx.nroots))


def ball(rs: RootSystem, radius: int) -> List[Alcove]:
    """All alcoves within ``radius`` crossings of the fundamental alcove."""
    start = fundamental_alcove(rs)
    seen = {start}
    frontier = [start]
    for _ in range(radius):
        nxt = []
        for a in frontier:
            for g in range(rs.rank + 1):
                b = cross(rs, a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


def minimal_gallery_types(rs: RootSystem, x: Vector, limit: int = 4) -> List[Tuple[int, ...]]:
    """Up to ``limit`` distinct panel-type sequences of shortest galleries from 0 to ``x``.

    Shortest paths are traced backwards through the BFS layers; the result is
    sorted, and the type of :func:`minimal_gallery` is always included.
    """
    x = _normalize(x)
    cx = complex_of(rs)
    if x == cx.zero:
        return [()]
    first = tuple(p.ptype for p in minimal_gallery(rs, x).panels)
    targets = alcoves_containing(rs, x)
    layers = [set(alcoves_containing(rs, cx.zero))]
    seen = set(layers[0])
    while not layers[-1] & targets:
        nxt = set()
        for a in layers[-1]:
            for g in range(rs.rank + 1):
                b = cross(rs, a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.add(b)
        layers.append(nxt)
    found = {first}
    stack = [(a, ()) for a in sorted(layers[-1] & targets)]
    while stack and len(found) < limit:
        a, suffix = stack.pop()
        depth = len(layers) - 1 - len(suffix)
        if depth == 0:
            found.add(suffix)
            continue
        for g in range(rs.rank, -1, -1):
            b = cross(rs, a, g)
            if b in layers[depth - 1]:
                stack.append((b, (g,) + suffix))
    return sorted(found)

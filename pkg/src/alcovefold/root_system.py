"""Irreducible crystallographic root systems in exact arithmetic.

Vectors are plain tuples of rationals (``int`` or ``Fraction``) giving the
coefficients of the simple roots, so ``(1, 1)`` in type A2 is
``alpha_1 + alpha_2``.  All Weyl group matrices act on these coordinates and
are integral.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

Vector = Tuple  # tuple of int | Fraction, one entry per simple root
Matrix = Tuple[Tuple[int, ...], ...]

SUPPORTED = {
    "A": (1, 2, 3, 4, 5),
    "B": (2, 3, 4),
    "C": (2, 3, 4),
    "D": (4,),
    "G": (2,),
    "F": (4,),
}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystemKind:
    family: str
    rank: int

    def __post_init__(self):
        if self.rank not in SUPPORTED.get(self.family, ()):
            raise RootSystemError(f"unsupported root system kind {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemKind":
        text = text.strip()
        try:
            return cls(text[0].upper(), int(text[1:]))
        except (IndexError, ValueError):
            raise RootSystemError(f"unsupported root system kind {text!r}") from None

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(kind: RootSystemKind) -> List[List[int]]:
    """Cartan matrix with ``C[i][j] = <alpha_j, alpha_i^vee>``, Bourbaki numbering."""
    n = kind.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        C[i][j] = a
        C[j][i] = b

    if kind.family in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if kind.family == "B":
            # alpha_n short
            C[n - 1][n - 2] = -2
        elif kind.family == "C":
            # alpha_n long
            C[n - 2][n - 1] = -2
    elif kind.family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif kind.family == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    elif kind.family == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    return C


def _symmetrizer(C) -> List[Fraction]:
    # d_i C[i][j] = d_j C[j][i]; walk the (connected) Dynkin diagram from node 0
    n = len(C)
    d = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if i != j and C[i][j] and d[j] is None:
                d[j] = d[i] * C[i][j] / C[j][i]
                queue.append(j)
    top = max(d)
    return [x / top for x in d]


def _matmul(A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0])))
        for i in range(len(A))
    )


def _identity(n) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def apply(M: Matrix, v: Vector) -> Vector:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in M)


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def _normalize(v) -> Vector:
    # integral Fractions become ints so vectors print and hash uniformly
    return tuple(int(a) if Fraction(a).denominator == 1 else Fraction(a) for a in v)


@dataclass(frozen=True)
class WeylElement:
    word: Tuple[int, ...] = field(compare=False)
    matrix: Matrix

    def __len__(self):
        return len(self.word)

    def __call__(self, v: Vector) -> Vector:
        return apply(self.matrix, v)


@dataclass(eq=False)
class RootSystem:
    """Root datum of an irreducible root system.

    Built by :func:`construct`; treat instances as immutable.
    """

    kind: RootSystemKind
    cartan: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[Fraction, ...]
    positive_roots: Tuple[Vector, ...]
    highest_root: Vector
    affine_root: Vector
    fundamental_coweights: Tuple[Vector, ...]
    weyl_vector: Vector
    _group: List[WeylElement] = field(default_factory=list, repr=False)
    _index: Dict[Matrix, int] = field(default_factory=dict, repr=False)
    _root_index: Dict[Vector, int] = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.kind.rank

    def __repr__(self):
        return f"RootSystem({self.kind})"

    # -- bilinear data -------------------------------------------------
    def form(self, x: Vector, y: Vector):
        """Invariant form; long roots have squared length 2."""
        n = self.rank
        return sum(
            self.symmetrizer[i] * self.cartan[i][j] * x[i] * y[j]
            for i in range(n)
            for j in range(n)
            if self.cartan[i][j]
        )

    def coroot_pairing(self, x: Vector, i: int):
        """``<x, alpha_i^vee>`` for the simple root ``alpha_i`` (0-based ``i``)."""
        row = self.cartan[i]
        return sum(row[j] * x[j] for j in range(self.rank))

    def dynkin_labels(self, x: Vector) -> Tuple:
        return tuple(self.coroot_pairing(x, i) for i in range(self.rank))

    def from_dynkin_labels(self, labels: Sequence) -> Vector:
        v = [0] * self.rank
        for c, w in zip(labels, self.fundamental_coweights):
            v = [a + c * b for a, b in zip(v, w)]
        return _normalize(v)

    def is_root(self, v: Vector) -> bool:
        v = tuple(v)
        return v in self._root_index or tuple(-a for a in v) in self._root_index

    def root_index(self, v: Vector) -> int:
        """Index of the positive root ``v`` in :attr:`positive_roots`."""
        return self._root_index[tuple(v)]

    def pair_with_coroot(self, x: Vector, alpha: Vector):
        if not self.is_root(alpha):
            raise RootSystemError(f"{alpha} is not a root of {self.kind}")
        return _normalize([2 * self.form(x, alpha) / self.form(alpha, alpha)])[0]

    def simple_reflection(self, i: int, v: Vector) -> Vector:
        c = self.coroot_pairing(v, i)
        return tuple(a - c if j == i else a for j, a in enumerate(v))

    def reflection_matrix(self, alpha: Vector) -> Matrix:
        """Matrix of ``x -> x - <x, alpha^vee> alpha``."""
        n = self.rank
        cols = []
        for j in range(n):
            e = tuple(int(i == j) for i in range(n))
            c = self.pair_with_coroot(e, alpha)
            cols.append(tuple(e[i] - c * alpha[i] for i in range(n)))
        return tuple(tuple(int(cols[j][i]) for j in range(n)) for i in range(n))

    # -- Weyl group ----------------------------------------------------
    def generator_matrix(self, i: int) -> Matrix:
        n = self.rank
        return tuple(
            tuple((int(r == c) - (self.cartan[i][c] if r == i else 0)) for c in range(n))
            for r in range(n)
        )

    def weyl_group(self) -> List[WeylElement]:
        if not self._group:
            n = self.rank
            gens = [self.generator_matrix(i) for i in range(n)]
            start = WeylElement((), _identity(n))
            self._group.append(start)
            self._index[start.matrix] = 0
            queue = deque([start])
            while queue:
                w = queue.popleft()
                for i, g in enumerate(gens):
                    M = _matmul(w.matrix, g)
                    if M not in self._index:
                        u = WeylElement(w.word + (i,), M)
                        self._index[M] = len(self._group)
                        self._group.append(u)
                        queue.append(u)
        return self._group

    def element_index(self, w) -> int:
        self.weyl_group()
        return self._index[w.matrix if isinstance(w, WeylElement) else w]

    def identity(self) -> WeylElement:
        return self.weyl_group()[0]

    def weyl_orbit(self, v: Vector) -> frozenset:
        v = _normalize(v)
        seen = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for i in range(self.rank):
                y = self.simple_reflection(i, x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def dominant_rep(self, v: Vector) -> Tuple[Vector, WeylElement]:
        """Return ``(v_plus, w)`` with ``w(v) = v_plus`` dominant."""
        v = _normalize(v)
        M = _identity(self.rank)
        moved = True
        while moved:
            moved = False
            for i in range(self.rank):
                if self.coroot_pairing(v, i) < 0:
                    v = self.simple_reflection(i, v)
                    M = _matmul(self.generator_matrix(i), M)
                    moved = True
                    break
        return v, self.weyl_group()[self.element_index(M)]

    def is_dominant(self, v: Vector) -> bool:
        return all(self.coroot_pairing(v, i) >= 0 for i in range(self.rank))

    def inversions(self, w: WeylElement) -> int:
        """Number of positive roots sent to negative roots by ``w``."""
        return sum(1 for a in self.positive_roots if not _positive(apply(w.matrix, a)))


def _positive(v) -> bool:
    return all(a >= 0 for a in v) and any(a > 0 for a in v)


def _solve(C, b):
    # exact Gauss-Jordan for the small Cartan systems
    n = len(C)
    A = [[Fraction(C[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [a / p for a in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * c for a, c in zip(A[r], A[col])]
    return [A[i][n] for i in range(n)]


def construct(kind) -> RootSystem:
    """Build the root system of ``kind`` (a :class:`RootSystemKind` or a string like ``"A2"``)."""
    if isinstance(kind, str):
        kind = RootSystemKind.parse(kind)
    elif isinstance(kind, tuple):
        kind = RootSystemKind(*kind)
    C = cartan_matrix(kind)
    n = kind.rank
    d = _symmetrizer(C)

    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for i in range(n):
            c = sum(C[i][j] * v[j] for j in range(n))
            u = tuple(a - c if j == i else a for j, a in enumerate(v))
            if _positive(u) and u not in roots:
                roots.add(u)
                queue.append(u)
    positive = tuple(sorted(roots, key=lambda r: (sum(r), tuple(-a for a in r))))
    highest = positive[-1]
    # the root whose coroot is the highest coroot: the highest short root
    norm = lambda r: sum(d[i] * C[i][j] * r[i] * r[j] for i in range(n) for j in range(n))
    shortest = min(norm(r) for r in positive)
    affine = max((r for r in positive if norm(r) == shortest), key=sum)

    coweights = tuple(
        _normalize(_solve(C, [int(i == j) for j in range(n)])) for i in range(n)
    )
    rho = _normalize([Fraction(sum(r[i] for r in positive), 2) for i in range(n)])
    rs = RootSystem(
        kind=kind,
        cartan=tuple(tuple(row) for row in C),
        symmetrizer=tuple(d),
        positive_roots=positive,
        highest_root=highest,
        affine_root=affine,
        fundamental_coweights=coweights,
        weyl_vector=rho,
    )
    rs._root_index.update({r: k for k, r in enumerate(positive)})
    return rs

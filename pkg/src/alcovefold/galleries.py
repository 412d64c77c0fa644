"""Combinatorial galleries, positive folding, and unfolding.

A gallery from ``source`` runs through alcoves ``c_0, ..., c_n``; step ``i``
(1-based) passes through the panel ``c_i'`` of ``c_{i-1}``.  Either the panel
is crossed (``c_i != c_{i-1}``) or the gallery stutters there
(``c_i == c_{i-1}``); a stutter is a fold.  Folds are positive when the panel's
wall separates the alcove from the antidominant chamber.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .affine_coxeter import (
    AffineHyperplane,
    Alcove,
    Panel,
    alcoves_containing,
    complex_of,
    gallery_distance,
    panel_of,
    separates,
    vertex_type,
)
from .root_system import RootSystem, Vector, _normalize


class FoldError(ValueError):
    """A fold that would not be positive, or a script that does not fit."""

    def __init__(self, index: int, message: str):
        super().__init__(f"step {index}: {message}")
        self.index = index


@dataclass(frozen=True)
class GalleryType:
    source_type: int
    panel_types: Tuple[int, ...]
    target_type: int

    def __len__(self):
        return len(self.panel_types)


@dataclass(frozen=True)
class Gallery:
    source: Vector
    first_alcove: Optional[Alcove]
    steps: Tuple[Tuple[Panel, Alcove], ...]
    target: Vector
    rs: RootSystem = field(default=None, compare=False, repr=False)

    @property
    def alcoves(self) -> Tuple[Alcove, ...]:
        if self.first_alcove is None:
            return ()
        return (self.first_alcove,) + tuple(a for _, a in self.steps)

    def __len__(self):
        """Number of alcoves."""
        return len(self.alcoves)

    @property
    def panels(self) -> Tuple[Panel, ...]:
        return tuple(p for p, _ in self.steps)

    @property
    def moves(self) -> str:
        alc = self.alcoves
        return "".join("F" if alc[i] == alc[i - 1] else "C" for i in range(1, len(alc)))

    @property
    def stutters(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i, m in enumerate(self.moves) if m == "F")

    @property
    def key(self):
        start = self.first_alcove.levels if self.first_alcove is not None else ()
        return start, self.moves


@dataclass(frozen=True)
class FoldScript:
    entries: Tuple[Tuple[int, AffineHyperplane], ...] = ()

    def __post_init__(self):
        idx = [i for i, _ in self.entries]
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"fold script indices must increase: {idx}")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def gallery_type(g: Gallery) -> GalleryType:
    rs = g.rs
    return GalleryType(
        vertex_type(rs, g.source),
        tuple(p.ptype for p in g.panels),
        vertex_type(rs, g.target),
    )


def build_gallery(rs: RootSystem, source: Vector, alcoves: Sequence[Alcove], types: Sequence[int], target_type: int) -> Gallery:
    """Gallery through ``alcoves`` whose step ``i`` uses the panel of cotype ``types[i-1]``."""
    cx = complex_of(rs)
    if not alcoves:
        return Gallery(_normalize(source), None, (), _normalize(source), rs)
    steps = tuple((panel_of(rs, alcoves[i], t), alcoves[i + 1]) for i, t in enumerate(types))
    return Gallery(_normalize(source), alcoves[0], steps, cx.vertex(alcoves[-1], target_type), rs)


def is_positively_folded(g: Gallery) -> bool:
    return _first_negative_fold(g) is None


def _first_negative_fold(g: Gallery) -> Optional[int]:
    alc = g.alcoves
    for i, (p, a) in enumerate(g.steps, start=1):
        if a == alc[i - 1] and not separates(g.rs, p.support, a):
            return i
    return None


def _walks(cx, start: int, types: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Fold/cross patterns (1 = fold) of positively folded walks from alcove ``(start, 0)``."""
    n = len(types)
    stack = [(0, start, cx.zero, ())]
    while stack:
        i, w, mu, moves = stack.pop()
        if i == n:
            yield moves
            continue
        g = types[i]
        if cx.fold_ok[w][g]:
            stack.append((i + 1, w, mu, moves + (1,)))
        w2, mu2 = cx.cross_state(w, mu, g)
        stack.append((i + 1, w2, mu2, moves + (0,)))


def _run(cx, start: Alcove, types, moves) -> List[Alcove]:
    w, mu = start.state
    out = [start]
    for g, fold in zip(types, moves):
        if not fold:
            w, mu = cx.cross_state(w, mu, g)
            out.append(cx.alcove(w, mu))
        else:
            out.append(out[-1])
    return out


def enumerate_positively_folded(rs: RootSystem, t: GalleryType, threads: int = 1) -> Tuple[Gallery, ...]:
    """All positively folded galleries of type ``t`` with source 0, canonically sorted.

    The first alcove ranges over every alcove containing the origin.  The
    search is split by first alcove; ``threads`` only changes how the parts are
    scheduled, never the result.
    """
    if t.source_type != 0:
        raise ValueError("only galleries with source of type 0 are enumerated")
    cx = complex_of(rs)
    if not t.panel_types:
        return (Gallery(cx.zero, None, (), cx.zero, rs),) if t.target_type == 0 else ()
    types = t.panel_types
    starts = sorted(alcoves_containing(rs, cx.zero))

    def part(start: Alcove):
        return [
            build_gallery(rs, cx.zero, _run(cx, start, types, moves), types, t.target_type)
            for moves in _walks(cx, start.w, types)
        ]

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(part, starts))
    else:
        parts = [part(s) for s in starts]
    return tuple(sorted((g for p in parts for g in p), key=lambda g: g.key))


def endpoints(galleries) -> frozenset:
    return frozenset(g.target for g in galleries)


def _reflect_tail(cx, alcoves: List[Alcove], i: int, h: AffineHyperplane):
    for j in range(i, len(alcoves)):
        alcoves[j] = cx.alcove(*cx.reflect_state(h, *alcoves[j].state))


def unfold(g: Gallery) -> Tuple[Gallery, FoldScript]:
    """Undo the folds of ``g`` left to right.

    Returns a non-stuttering gallery of the same type and the script that
    refolds it into ``g``.
    """
    bad = _first_negative_fold(g)
    if bad is not None:
        raise FoldError(bad, "gallery is negatively folded here")
    rs = g.rs
    cx = complex_of(rs)
    t = gallery_type(g)
    alcoves = list(g.alcoves)
    entries = []
    for i, ptype in enumerate(t.panel_types, start=1):
        if alcoves[i] == alcoves[i - 1]:
            h = cx.wall_of(*alcoves[i - 1].state, ptype)
            _reflect_tail(cx, alcoves, i, h)
            entries.append((i, h))
    return build_gallery(rs, g.source, alcoves, t.panel_types, t.target_type), FoldScript(tuple(entries))


def apply_fold_script(g: Gallery, script: FoldScript) -> Gallery:
    """Fold ``g`` at the scripted steps, in increasing order.

    Each entry's wall must be the support of that step's panel in ``g``.  At
    step ``i`` the tail from ``c_i`` on is reflected in the current wall of the
    panel, so the gallery stutters there; the fold must be positive.
    """
    rs = g.rs
    cx = complex_of(rs)
    panels = g.panels
    alcoves = list(g.alcoves)
    for i, h in script:
        if not 1 <= i <= len(panels):
            raise FoldError(i, "index outside the gallery")
        if panels[i - 1].support != h:
            raise FoldError(i, f"{h} is not the wall of this panel")
        if alcoves[i] == alcoves[i - 1]:
            raise FoldError(i, "gallery already stutters here")
    for i, _ in script:
        ptype = panels[i - 1].ptype
        prev = alcoves[i - 1]
        wall = cx.wall_of(*prev.state, ptype)
        if not separates(rs, wall, prev):
            raise FoldError(i, f"fold at {wall} would be negative")
        _reflect_tail(cx, alcoves, i, wall)
    t = gallery_type(g)
    return build_gallery(rs, g.source, alcoves, t.panel_types, t.target_type)


def is_minimal(g: Gallery) -> bool:
    if g.first_alcove is None:
        return g.source == g.target
    return len(g) == gallery_distance(g.rs, g.source, g.target)


# -- text format -------------------------------------------------------

def _fmt(v) -> str:
    return ",".join(str(Fraction(a)) for a in v)


def format_gallery(g: Gallery) -> str:
    start = ",".join(map(str, g.first_alcove.levels)) if g.first_alcove is not None else "-"
    return f"{g.rs.kind} | src={_fmt(g.source)} | start={start} | moves={g.moves} | end={_fmt(g.target)}"


def alcove_from_levels(rs: RootSystem, levels: Sequence[int]) -> Alcove:
    cx = complex_of(rs)
    levels = tuple(levels)
    simple = [rs.root_index(tuple(int(i == j) for i in range(rs.rank))) for j in range(rs.rank)]
    for w in range(len(cx.W)):
        labels = [levels[b] + cx.negative[w][b] for b in simple]
        mu = rs.from_dynkin_labels(labels)
        if all(Fraction(a).denominator == 1 for a in mu) and cx.levels_of(w, mu) == levels:
            return cx.alcove(w, mu)
    raise ValueError(f"no alcove has levels {levels}")


def parse_gallery(rs: RootSystem, line: str, t: GalleryType) -> Gallery:
    """Inverse of :func:`format_gallery`; the type supplies the panel cotypes."""
    fields = dict(part.strip().split("=", 1) for part in line.split("|")[1:])
    source = _normalize(Fraction(x) for x in fields["src"].split(","))
    if fields["start"] == "-":
        return Gallery(source, None, (), source, rs)
    start = alcove_from_levels(rs, [int(x) for x in fields["start"].split(",")])
    moves = [m == "F" for m in fields["moves"]]
    g = build_gallery(rs, source, _run(complex_of(rs), start, t.panel_types, moves), t.panel_types, t.target_type)
    end = _normalize(Fraction(x) for x in fields["end"].split(","))
    if g.target != end:
        raise ValueError(f"endpoint mismatch: line says {end}, walk gives {g.target}")
    return g

"""Heaps of dimers and directed lattice animals.

A dimer occupies the two cells (column, column+1) of one level.  A heap
is a finite set of dimers where every dimer above level 0 rests on some
dimer one or more levels below within one column of it, no two dimers of
a level overlap, and exactly one dimer sits at level 0, in column 0.

Directed animals are point sets on the quarter plane grown from the
origin by steps (1,0), (0,1) and, on the triangular lattice, (1,1).
Rotating an animal 45 degrees and letting each point fall as a dimer in
column x - y turns animals into heaps; square-lattice animals give the
heaps with no dimer directly on top of another.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

BRUTE_FORCE_BOUND = 8
LATTICES = ("square", "triangular")


class BadGroundError(ValueError):
    pass


class NotAHeapError(ValueError):
    pass


class MissingOriginError(ValueError):
    pass


class TooLargeError(ValueError):
    pass


class HeapParseError(ValueError):
    pass


class Dimer(NamedTuple):
    column: int
    level: int


def _canonical(dimers: Iterable[Dimer]) -> tuple[Dimer, ...]:
    return tuple(sorted(dimers, key=lambda d: (d.level, d.column)))


def _check_heap(dimers: tuple[Dimer, ...]) -> str | None:
    """Return a breach description, or None for a valid heap."""
    if not dimers:
        return "empty heap"
    if len(set(dimers)) != len(dimers):
        return "repeated dimer"
    ground = [d for d in dimers if d.level == 0]
    if len(ground) != 1 or ground[0].column != 0:
        return "need exactly one level-0 dimer, in column 0"
    by_level: dict[int, list[int]] = {}
    for col, level in dimers:
        by_level.setdefault(level, []).append(col)
    for level, cols in by_level.items():
        cols.sort()
        if any(b - a <= 1 for a, b in zip(cols, cols[1:])):
            return f"overlapping dimers at level {level}"
    for col, level in dimers:
        if level == 0:
            continue
        if not any(
            other.level == level - 1 and abs(other.column - col) <= 1
            for other in dimers
        ):
            return f"dimer ({col},{level}) has no support"
    return None


class Heap:
    """Immutable validated heap; dimers kept sorted by (level, column)."""

    __slots__ = ("dimers", "_hash")

    def __init__(self, dimers: Iterable[Dimer]):
        canon = _canonical(Dimer(*d) for d in dimers)
        breach = _check_heap(canon)
        if breach is not None:
            raise NotAHeapError(breach)
        object.__setattr__(self, "dimers", canon)
        object.__setattr__(self, "_hash", hash(canon))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Heap is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Heap) and self.dimers == other.dimers

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Heap({to_text(self)!r})"

    def __len__(self) -> int:
        return len(self.dimers)

    def min_column(self) -> int:
        return min(d.column for d in self.dimers)

    def max_column(self) -> int:
        return max(d.column for d in self.dimers)


@dataclass(frozen=True)
class AnimalStats:
    area: int
    lw: int
    rw: int
    width: int
    diag: int
    nbp_profile: dict[int, int]


def _drop_level(tops: dict[int, int], column: int) -> int:
    """Level a dimer dropped at this column lands on, given column tops."""
    best = -1
    for c in (column - 1, column, column + 1):
        lvl = tops.get(c, -1)
        if lvl > best:
            best = lvl
    return best + 1


def superpose(base: tuple[Dimer, ...], part: tuple[Dimer, ...], shift: int) -> tuple[Dimer, ...]:
    """Drop the dimers of part, columns shifted, onto base; canonical result."""
    tops: dict[int, int] = {}
    for col, level in base:
        if level > tops.get(col, -1):
            tops[col] = level
    out = list(base)
    for col, _ in _canonical(part):
        target = col + shift
        level = _drop_level(tops, target)
        tops[target] = level
        out.append(Dimer(target, level))
    return _canonical(out)


def drop(heap: Heap | None, column: int) -> Heap:
    """Add one dimer released above the column; it falls until supported."""
    if heap is None:
        if column != 0:
            raise BadGroundError("first dimer must land in column 0")
        return Heap((Dimer(0, 0),))
    return Heap(superpose(heap.dimers, (Dimer(column, 0),), 0))


def heap_stats(h: Heap) -> AnimalStats:
    cols = [d.column for d in h.dimers]
    lo, hi = min(cols), max(cols)
    profile: dict[int, int] = {}
    for c in cols:
        profile[c + 1] = profile.get(c + 1, 0) + 1
    occupied = set(h.dimers)
    diag = sum(1 for col, level in h.dimers if Dimer(col, level + 1) in occupied)
    return AnimalStats(
        area=len(h.dimers),
        lw=-lo,
        rw=hi + 1,
        width=hi + 1 - lo,
        diag=diag,
        nbp_profile=profile,
    )


# --- animals -----------------------------------------------------------

Point = tuple[int, int]


def _steps(lattice: str) -> tuple[Point, ...]:
    if lattice == "square":
        return ((1, 0), (0, 1))
    if lattice == "triangular":
        return ((1, 0), (0, 1), (1, 1))
    raise ValueError(f"unknown lattice {lattice!r}")


def animal_validate(points: Iterable[Point], lattice: str = "triangular") -> bool:
    """True when every point is reachable from the origin by lattice steps."""
    pts = set(points)
    if (0, 0) not in pts:
        raise MissingOriginError("animal must contain (0, 0)")
    if any(x < 0 or y < 0 for x, y in pts):
        raise ValueError("animal coordinates must be non-negative")
    moves = _steps(lattice)
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        x, y = frontier.pop()
        for dx, dy in moves:
            nxt = (x + dx, y + dy)
            if nxt in pts and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return len(seen) == len(pts)


@dataclass(frozen=True)
class PointAnimal:
    """Finite point set containing the origin, connected on the triangular lattice."""

    points: frozenset[Point]

    def __post_init__(self) -> None:
        if not animal_validate(self.points, "triangular"):
            raise ValueError("points are not connected to the origin")

    def __len__(self) -> int:
        return len(self.points)

    def sorted_points(self) -> tuple[Point, ...]:
        return tuple(sorted(self.points))

    def __str__(self) -> str:
        return points_to_text(self)


def animal_to_heap(a: PointAnimal) -> Heap:
    """Drop one dimer per point, column x - y, in non-decreasing x + y order."""
    tops: dict[int, int] = {}
    out = []
    for x, y in sorted(a.points, key=lambda p: (p[0] + p[1], p[0])):
        col = x - y
        level = _drop_level(tops, col)
        tops[col] = level
        out.append(Dimer(col, level))
    return Heap(out)


def animal_reflect(a: PointAnimal) -> PointAnimal:
    return PointAnimal(frozenset((y, x) for x, y in a.points))


def _candidates(n: int, lattice: str, subdiagonal: bool) -> list[Point]:
    if lattice == "square":
        region = [
            (x, y)
            for x in range(n)
            for y in range(n)
            if x + y <= n - 1
        ]
    else:
        # diagonal steps reach sums up to 2(n-1), so only max(x, y) is bounded
        region = [(x, y) for x in range(n) for y in range(n)]
    if subdiagonal:
        region = [(x, y) for x, y in region if y <= x]
    region.sort(key=lambda p: (p[0] + p[1], p[0]))
    return region


def animal_enumerate_bruteforce(
    n: int, lattice: str = "triangular", subdiagonal: bool = False
) -> frozenset[PointAnimal]:
    """All n-point animals, by scanning origin-containing candidate subsets.

    Candidates are ordered by (x + y, x), so every predecessor of a point
    precedes it.  A subset is an animal exactly when each chosen point has
    a chosen predecessor, which lets the scan discard a subset the moment
    an unsupported point is added and skip its extensions wholesale.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > BRUTE_FORCE_BOUND:
        raise TooLargeError(f"brute force capped at n = {BRUTE_FORCE_BOUND}")
    if lattice not in LATTICES:
        raise ValueError(f"unknown lattice {lattice!r}")
    cands = _candidates(n, lattice, subdiagonal)
    index = {p: i for i, p in enumerate(cands)}
    moves = _steps(lattice)
    pred_mask = []
    for x, y in cands:
        mask = 0
        for dx, dy in moves:
            j = index.get((x - dx, y - dy))
            if j is not None:
                mask |= 1 << j
        pred_mask.append(mask)
    m = len(cands)
    found: list[frozenset[Point]] = []
    chosen: list[int] = [0]

    def extend(start: int, reach: int) -> None:
        if len(chosen) == n:
            found.append(frozenset(cands[i] for i in chosen))
            return
        remaining = n - len(chosen)
        for idx in range(start, m - remaining + 1):
            if pred_mask[idx] & reach:
                chosen.append(idx)
                extend(idx + 1, reach | (1 << idx))
                chosen.pop()

    extend(1, 1)
    return frozenset(PointAnimal(pts) for pts in found)


# --- text formats ------------------------------------------------------


def _parse_pairs(text: str, what: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.strip().split(";"):
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise HeapParseError(f"bad {what} token {chunk!r}")
        try:
            a, b = (int(part) for part in chunk[1:-1].split(","))
        except ValueError as exc:
            raise HeapParseError(f"bad {what} token {chunk!r}") from exc
        pairs.append((a, b))
    return pairs


def parse_heap(text: str) -> Heap:
    return Heap(Dimer(c, l) for c, l in _parse_pairs(text, "dimer"))


def to_text(h: Heap) -> str:
    return ";".join(f"({d.column},{d.level})" for d in h.dimers)


def parse_points(text: str) -> PointAnimal:
    return PointAnimal(frozenset(_parse_pairs(text, "point")))


def points_to_text(a: PointAnimal) -> str:
    return ";".join(f"({x},{y})" for x, y in a.sorted_points())

"""Words over {U, D} viewed as lattice paths with unit up and down steps.

A word of length L traces the points (x, y_x) for x = 0..L.  Grand-Dyck
words are balanced and start with U; Dyck words additionally never dip
below the axis.  The signed statistics treat axis crossings specially: a
crossing is an interior zero where the incoming and outgoing steps agree,
and each crossing lowers the "modified height" of everything to its right
by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

FAMILIES = ("dyck", "dyck_star", "grand_dyck", "grand_dyck_star", "grand_dyck_udu_free")


class EmptyWordError(ValueError):
    pass


class BadCharError(ValueError):
    pass


class NotGrandDyckError(ValueError):
    pass


@dataclass(frozen=True)
class PathFlags:
    balanced: bool
    starts_with_u: bool
    dyck: bool
    grand_dyck: bool


@dataclass(frozen=True)
class PathStats:
    semilength: int
    cross: int
    height_max: int
    nbu_profile: dict[int, int]
    d_end_heights: tuple[int, ...]
    dud_count: int
    udu_count: int


def parse(text: str) -> str:
    word = text.strip()
    if not word:
        raise EmptyWordError("empty step word")
    bad = set(word) - {"U", "D"}
    if bad:
        raise BadCharError(f"steps must be U or D, found {sorted(bad)}")
    return word


def heights(word: str) -> list[int]:
    """Points y_0..y_L visited by the word, starting at 0."""
    ys = [0]
    for step in word:
        ys.append(ys[-1] + (1 if step == "U" else -1))
    return ys


def classify(word: str) -> PathFlags:
    ys = heights(word)
    balanced = ys[-1] == 0
    starts_u = word[:1] == "U"
    dyck = balanced and min(ys) >= 0
    return PathFlags(balanced, starts_u, dyck, balanced and starts_u)


def pattern_count(word: str, pattern: str) -> int:
    """Occurrences of a step pattern as consecutive letters, overlaps allowed."""
    k = len(pattern)
    return sum(1 for i in range(len(word) - k + 1) if word[i : i + k] == pattern)


def reverse(word: str) -> str:
    """Read the steps right to left, each keeping its letter."""
    return word[::-1]


def crossings(word: str) -> tuple[int, ...]:
    """Interior x positions where the path changes sign through the axis."""
    ys = heights(word)
    return tuple(
        x
        for x in range(1, len(word))
        if ys[x] == 0 and word[x - 1] == word[x]
    )


def modified_heights(word: str) -> list[int]:
    """Per point: |y_x| minus the number of crossings strictly left of x."""
    ys = heights(word)
    out = []
    seen = 0
    cross_iter = iter(crossings(word))
    next_cross = next(cross_iter, None)
    for x, y in enumerate(ys):
        if next_cross is not None and next_cross < x:
            seen += 1
            next_cross = next(cross_iter, None)
        out.append(abs(y) - seen)
    return out


def height_stats(word: str) -> PathStats:
    flags = classify(word)
    if not flags.grand_dyck:
        raise NotGrandDyckError(f"need a balanced word starting with U: {word!r}")
    modified = modified_heights(word)
    cross_at = crossings(word)
    nbu: dict[int, int] = {}
    d_ends = []
    for i, step in enumerate(word):
        h = modified[i + 1]
        if step == "U":
            nbu[h] = nbu.get(h, 0) + 1
        else:
            d_ends.append(h)
    return PathStats(
        semilength=word.count("U"),
        cross=len(cross_at),
        height_max=max(modified),
        nbu_profile=nbu,
        d_end_heights=tuple(d_ends),
        dud_count=pattern_count(word, "DUD"),
        udu_count=pattern_count(word, "UDU"),
    )


def _gen_balanced(n: int, dyck_only: bool) -> Iterator[str]:
    # depth-first with U tried before D, so output is lexicographic (U < D)
    buf: list[str] = []

    def rec(ups: int, downs: int, y: int) -> Iterator[str]:
        if ups == 0 and downs == 0:
            yield "".join(buf)
            return
        if ups > 0:
            buf.append("U")
            yield from rec(ups - 1, downs, y + 1)
            buf.pop()
        if downs > 0 and (not dyck_only or y > 0):
            buf.append("D")
            yield from rec(ups, downs - 1, y - 1)
            buf.pop()

    if n < 1:
        raise ValueError("n must be positive")
    buf.append("U")
    yield from rec(n - 1, n, 1)
    buf.pop()


def enumerate_family(family: str, n: int) -> Iterator[str]:
    """Yield the words of semilength n in lexicographic order with U < D."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    dyck_only = family.startswith("dyck")
    for word in _gen_balanced(n, dyck_only):
        if family in ("dyck_star", "grand_dyck_star") and "DUD" in word:
            continue
        if family == "grand_dyck_udu_free" and "UDU" in word:
            continue
        yield word


def count_family(family: str, n: int) -> int:
    return sum(1 for _ in enumerate_family(family, n))

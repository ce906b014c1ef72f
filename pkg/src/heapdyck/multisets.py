"""Non-decreasing multisets over {1, ..., k}.

A multiset is kept as its sorted value sequence together with the ambient
bound k.  The subfamilies of interest:

* ``star``: no value is followed by its successor (no i with
  values[i+1] == values[i] + 1),
* ``super``: superdiagonal, values[i] >= i (positions counted from 1),
* ``super_star``: both of the above,
* ``no_single_except_k``: every value below the bound occurs zero times
  or at least twice.

Statistics are driven by the indicator delta(i) = [values[i] >= i]: the
number of sign changes of delta, the adjacency count, and a per-position
gap profile that discounts each |values[i] - i| by the number of delta
changes seen so far.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

FAMILIES = ("all", "star", "super", "super_star", "no_single_except_k")


class EmptyMultisetError(ValueError):
    pass


class NotSortedError(ValueError):
    pass


class OutOfRangeError(ValueError):
    pass


class MultisetParseError(ValueError):
    pass


@dataclass(frozen=True)
class Multiset:
    """Sorted values drawn from {1, ..., bound}, possibly with repeats."""

    values: tuple[int, ...]
    bound: int

    def __str__(self) -> str:
        return to_text(self)

    @property
    def size(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class MultisetFlags:
    superdiagonal: bool
    star: bool
    no_single_except_bound: bool


@dataclass(frozen=True)
class MultisetStats:
    length: int
    cross: int
    adj: int
    gap_profile: tuple[int, ...]
    gap: int
    delta_profile: tuple[int, ...]


def validate(raw: Sequence[int], bound: int | None = None) -> Multiset:
    """Check a value sequence and wrap it; bound defaults to the length."""
    values = tuple(raw)
    if not values:
        raise EmptyMultisetError("multiset needs at least one value")
    k = len(values) if bound is None else bound
    if any(values[i] > values[i + 1] for i in range(len(values) - 1)):
        raise NotSortedError(f"values must be non-decreasing: {values}")
    if values[0] < 1 or values[-1] > k:
        raise OutOfRangeError(f"values must lie in 1..{k}: {values}")
    return Multiset(values, k)


def classify(m: Multiset) -> MultisetFlags:
    v = m.values
    super_ = all(v[i] >= i + 1 for i in range(len(v)))
    star = adjacency_count(m) == 0
    counts: dict[int, int] = {}
    for x in v:
        counts[x] = counts.get(x, 0) + 1
    no_single = all(c != 1 for x, c in counts.items() if x != m.bound)
    return MultisetFlags(super_, star, no_single)


def adjacency_count(m: Multiset) -> int:
    """Number of positions whose successor holds the next integer up."""
    v = m.values
    return sum(1 for a, b in zip(v, v[1:]) if b == a + 1)


def stats(m: Multiset) -> MultisetStats:
    v = m.values
    n = len(v)
    delta = tuple(1 if v[i] >= i + 1 else 0 for i in range(n))
    changes = [delta[i] != delta[i + 1] for i in range(n - 1)]
    cross = sum(changes)
    profile = []
    seen = 0
    for i in range(n):
        # seen counts delta changes at pairs strictly left of position i+1
        profile.append(abs(v[i] - (i + 1)) - seen)
        if i < n - 1 and changes[i]:
            seen += 1
    return MultisetStats(
        length=n,
        cross=cross,
        adj=adjacency_count(m),
        gap_profile=tuple(profile),
        gap=max(profile),
        delta_profile=delta,
    )


def _keep(family: str, m: Multiset) -> bool:
    if family == "all":
        return True
    flags = classify(m)
    if family == "star":
        return flags.star
    if family == "super":
        return flags.superdiagonal
    if family == "super_star":
        return flags.superdiagonal and flags.star
    if family == "no_single_except_k":
        return flags.no_single_except_bound
    raise ValueError(f"unknown family {family!r}")


def enumerate_family(family: str, n: int, k: int | None = None) -> Iterator[Multiset]:
    """Yield the family members of size n over {1..k} in lexicographic order."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if n < 1:
        raise ValueError("n must be positive")
    bound = n if k is None else k
    for tup in combinations_with_replacement(range(1, bound + 1), n):
        m = Multiset(tup, bound)
        if _keep(family, m):
            yield m


def count_family(family: str, n: int, k: int | None = None) -> int:
    return sum(1 for _ in enumerate_family(family, n, k))


def parse(text: str) -> Multiset:
    """Read the "v1,v2,...,vn|k=K" form; the |k= part may be omitted."""
    body, sep, tail = text.strip().partition("|")
    bound: int | None = None
    if sep:
        if not tail.startswith("k="):
            raise MultisetParseError(f"expected |k=NUMBER, got {tail!r}")
        try:
            bound = int(tail[2:])
        except ValueError as exc:
            raise MultisetParseError(f"bad bound in {text!r}") from exc
    try:
        values = [int(part) for part in body.split(",")]
    except ValueError as exc:
        raise MultisetParseError(f"bad value list in {text!r}") from exc
    return validate(values, bound)


def to_text(m: Multiset) -> str:
    body = ",".join(str(v) for v in m.values)
    if m.bound == len(m.values):
        return body
    return f"{body}|k={m.bound}"

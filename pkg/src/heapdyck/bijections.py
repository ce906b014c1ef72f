"""Bijections between multisets, step words, and heaps of dimers.

The multiset side is a staircase encoding: a multiset over {1..k} with n
values becomes the word U^{v1} D U^{v2-v1} D ... D U^{k-vn}, one D per
value and one U per unit of growth.  With k = n this lands exactly on the
balanced words starting with U, and the subfamilies line up: superdiagonal
multisets give Dyck words, star multisets give DUD-free words, and
multisets repeating every value below the bound give UDU-free words.

The heap side peels a word into maximal same-sign runs.  Each run, read
as a Dyck word (below-axis runs are reversed first), is parsed by its
arch structure into one of four constructors and built by gravity drops;
successive run components are then superposed, each one column further
left.  The inverse direction recovers the constructor arguments by
searching for the unique split of the dimers that recomposes the heap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import heaps, multisets, paths
from .heaps import Dimer, Heap

GRAMMAR_CLASSES = ("T", "Ts", "Q", "Qs")
GROUND = (Dimer(0, 0),)


class NotStartingUError(ValueError):
    pass


class FactorizationFailedError(RuntimeError):
    pass


class GrammarDuplicateError(RuntimeError):
    pass


@dataclass(frozen=True)
class Factorization:
    case: str
    parts: tuple[Heap, ...]


@dataclass(frozen=True)
class RunComponent:
    start: int
    end: int
    below: bool
    dyck_word: str
    shift: int


# --- multiset <-> word -------------------------------------------------


def multiset_to_path(m: multisets.Multiset) -> str:
    """Staircase word: one D per value, U runs filling the gaps up to the bound."""
    pieces = []
    prev = 0
    for v in m.values:
        pieces.append("U" * (v - prev))
        pieces.append("D")
        prev = v
    pieces.append("U" * (m.bound - prev))
    return "".join(pieces)


def path_to_multiset(word: str) -> multisets.Multiset:
    """Each D records how many U steps precede it; the U total is the bound."""
    if not word.startswith("U"):
        raise NotStartingUError(f"word must start with U: {word!r}")
    bad = set(word) - {"U", "D"}
    if bad:
        raise paths.BadCharError(f"steps must be U or D, found {sorted(bad)}")
    ups = 0
    values = []
    for step in word:
        if step == "U":
            ups += 1
        else:
            values.append(ups)
    return multisets.validate(values, ups)


# --- word -> heap ------------------------------------------------------


@lru_cache(maxsize=None)
def _dyck_heap(word: str) -> tuple[Dimer, ...]:
    """Build the subdiagonal heap of a nonempty Dyck word by arch structure."""
    if word == "UD":
        return GROUND
    ys = paths.heights(word)
    returns = [x for x in range(1, len(word) + 1) if ys[x] == 0]
    if len(returns) == 1:
        return _compose_ii(_dyck_heap(word[1:-1]))
    last = returns[-2]
    arch = word[last:]
    if arch == "UD":
        return _compose_iii(_dyck_heap(word[:last]))
    return _compose_iv(_dyck_heap(arch[1:-1]), _dyck_heap(word[:last]))


def run_components(word: str) -> list[RunComponent]:
    """Split a grand-Dyck word at its crossings into alternating sign runs."""
    bounds = [0, *paths.crossings(word), len(word)]
    comps = []
    for j, (a, b) in enumerate(zip(bounds, bounds[1:])):
        run = word[a:b]
        below = run[0] == "D"
        if below != (j % 2 == 1):
            raise FactorizationFailedError(f"runs do not alternate in {word!r}")
        comps.append(RunComponent(a, b, below, run[::-1] if below else run, -j))
    return comps


def path_to_heap(word: str, require_grand_dyck: bool = True) -> Heap:
    """Superpose the run components, each shifted one more column left."""
    if require_grand_dyck and not paths.classify(word).grand_dyck:
        raise paths.NotGrandDyckError(f"need a balanced word starting with U: {word!r}")
    acc: tuple[Dimer, ...] = ()
    for comp in run_components(word):
        part = _dyck_heap(comp.dyck_word)
        acc = part if comp.shift == 0 else heaps.superpose(acc, part, comp.shift)
    return Heap(acc)


# --- constructors and their inversion ----------------------------------


def _compose_ii(b: tuple[Dimer, ...]) -> tuple[Dimer, ...]:
    return heaps.superpose(GROUND, b, 1)


def _compose_iii(b: tuple[Dimer, ...]) -> tuple[Dimer, ...]:
    return heaps.superpose(GROUND, b, 0)


def _compose_iv(b: tuple[Dimer, ...], c: tuple[Dimer, ...]) -> tuple[Dimer, ...]:
    return heaps.superpose(heaps.superpose(GROUND, b, 1), c, 0)


def _compose_v(b: tuple[Dimer, ...], c: tuple[Dimer, ...]) -> tuple[Dimer, ...]:
    return heaps.superpose(b, c, -1)


def _redrop(pieces, shift: int) -> tuple[Dimer, ...] | None:
    """Re-drop a dimer subset from scratch; None unless a pyramid results."""
    tops: dict[int, int] = {}
    out: list[Dimer] = []
    for d in sorted(pieces, key=lambda d: (d.level, d.column)):
        col = d.column + shift
        level = heaps._drop_level(tops, col)
        if level == 0 and (out or col != 0):
            return None
        tops[col] = level
        out.append(Dimer(col, level))
    return tuple(sorted(out, key=lambda d: (d.level, d.column)))


def _up_closure(pieces, seed) -> set[Dimer]:
    """Close a dimer set upward: pull in anything touching it from above."""
    closure = set(seed)
    changed = True
    while changed:
        changed = False
        for q in pieces:
            if q in closure:
                continue
            if any(abs(q.column - p.column) <= 1 and q.level > p.level for p in closure):
                closure.add(q)
                changed = True
    return closure


def _is_up_closed(pieces, subset) -> bool:
    for p in subset:
        for q in pieces:
            if q in subset:
                continue
            if abs(q.column - p.column) <= 1 and q.level > p.level:
                return False
    return True


def _subsets(items):
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def _factor_subdiagonal(dims: tuple[Dimer, ...]):
    """Invert one constructor step on a heap with no negative column."""
    if len(dims) == 1:
        return "i", ()
    rest = tuple(d for d in dims if d != Dimer(0, 0))
    if all(d.column >= 1 for d in rest):
        b = _redrop(rest, -1)
        if b is None or _compose_ii(b) != dims:
            raise FactorizationFailedError(f"bad single-part split of {dims}")
        return "ii", (b,)
    level1 = [d for d in rest if d.level == 1]
    if len(level1) != 1:
        raise FactorizationFailedError(f"expected one level-1 dimer in {dims}")
    if level1[0].column == 0:
        b = _redrop(rest, 0)
        if b is None or _compose_iii(b) != dims:
            raise FactorizationFailedError(f"bad column-0 split of {dims}")
        return "iii", (b,)
    forced = {d for d in rest if d.column == 0}
    closure = _up_closure(rest, forced)
    optional = [d for d in rest if d not in closure]
    matches = []
    for extra in _subsets(optional):
        top = closure | set(extra)
        if len(top) == len(rest) or not _is_up_closed(rest, top):
            continue
        b = _redrop((d for d in rest if d not in top), -1)
        c = _redrop(top, 0)
        if b is None or c is None:
            continue
        if _compose_iv(b, c) == dims:
            matches.append((b, c))
    if len(matches) != 1:
        raise FactorizationFailedError(
            f"{len(matches)} two-part splits of {dims}, expected exactly one"
        )
    return "iv", matches[0]


def _factor_v(dims: tuple[Dimer, ...]):
    """Split off the unique left component of a heap reaching column -1 or less."""
    forced = {d for d in dims if d.column < 0}
    closure = _up_closure(dims, forced)
    ground = Dimer(0, 0)
    if ground in closure:
        raise FactorizationFailedError(f"left component swallows the ground in {dims}")
    optional = [d for d in dims if d not in closure and d != ground]
    matches = []
    for extra in _subsets(optional):
        top = closure | set(extra)
        if not _is_up_closed(dims, top):
            continue
        base = tuple(d for d in dims if d not in top)
        if heaps._check_heap(base) is not None:
            continue
        c = _redrop(top, 1)
        if c is None:
            continue
        if _compose_v(base, c) == dims:
            matches.append((base, c))
    if len(matches) != 1:
        raise FactorizationFailedError(
            f"{len(matches)} left splits of {dims}, expected exactly one"
        )
    return matches[0]


def factorize(h: Heap) -> Factorization:
    if not isinstance(h, Heap):
        raise heaps.NotAHeapError(f"expected a Heap, got {type(h).__name__}")
    if h.min_column() < 0:
        base, c = _factor_v(h.dimers)
        return Factorization("v", (Heap(base), Heap(c)))
    case, parts = _factor_subdiagonal(h.dimers)
    return Factorization(case, tuple(Heap(p) for p in parts))


def compose(case: str, parts: tuple[Heap, ...]) -> Heap:
    """Rebuild a heap from a factorization; inverse of factorize."""
    dims = tuple(p.dimers for p in parts)
    if case == "i":
        return Heap(GROUND)
    if case == "ii":
        return Heap(_compose_ii(*dims))
    if case == "iii":
        return Heap(_compose_iii(*dims))
    if case == "iv":
        return Heap(_compose_iv(*dims))
    if case == "v":
        return Heap(_compose_v(*dims))
    raise ValueError(f"unknown case {case!r}")


# --- heap -> word ------------------------------------------------------


@lru_cache(maxsize=None)
def _dyck_word(dims: tuple[Dimer, ...]) -> str:
    case, parts = _factor_subdiagonal(dims)
    if case == "i":
        return "UD"
    if case == "ii":
        return "U" + _dyck_word(parts[0]) + "D"
    if case == "iii":
        return _dyck_word(parts[0]) + "UD"
    b, c = parts
    return _dyck_word(c) + "U" + _dyck_word(b) + "D"


def heap_to_path(h: Heap) -> str:
    """Emit the run components left to right, reversing every other one."""
    comps = []
    dims = h.dimers
    while min(d.column for d in dims) < 0:
        base, c = _factor_v(dims)
        comps.append(base)
        dims = c
    comps.append(dims)
    words = []
    for j, comp in enumerate(comps):
        w = _dyck_word(comp)
        words.append(w[::-1] if j % 2 else w)
    return "".join(words)


# --- grammar enumeration ------------------------------------------------


_GRAMMAR_MEMO: dict[tuple[str, int], tuple[bytes, ...]] = {}
_DECODED_CACHE: dict[tuple[str, int], frozenset[Heap]] = {}
_DECODED_CACHE_MAX_N = 8


def _encode(dims: tuple[Dimer, ...]) -> bytes:
    out = bytearray()
    for col, level in dims:
        out.append(level)
        out.append(col + 64)
    return bytes(out)


def _decode(blob: bytes) -> tuple[Dimer, ...]:
    return tuple(
        Dimer(blob[i + 1] - 64, blob[i]) for i in range(0, len(blob), 2)
    )


def _assert_distinct(built: list[bytes], klass: str, n: int) -> tuple[bytes, ...]:
    if len(set(built)) != len(built):
        raise GrammarDuplicateError(
            f"constructor overlap while building {klass} at size {n}"
        )
    return tuple(built)


def _encoded(klass: str, n: int) -> tuple[bytes, ...]:
    key = (klass, n)
    got = _GRAMMAR_MEMO.get(key)
    if got is not None:
        return got
    if klass in ("Ts", "Qs"):
        if n == 1:
            built = [_encode(GROUND)]
        else:
            built = []
            for blob in _encoded(klass, n - 1):
                b = _decode(blob)
                built.append(_encode(_compose_ii(b)))
                if klass == "Ts":
                    built.append(_encode(_compose_iii(b)))
            for a in range(1, n - 1):
                for blob_b in _encoded(klass, a):
                    b = _decode(blob_b)
                    for blob_c in _encoded(klass, n - 1 - a):
                        built.append(_encode(_compose_iv(b, _decode(blob_c))))
    else:
        base = "Ts" if klass == "T" else "Qs"
        built = list(_encoded(base, n))
        for a in range(1, n):
            for blob_b in _encoded(base, a):
                b = _decode(blob_b)
                for blob_c in _encoded(klass, n - a):
                    built.append(_encode(_compose_v(b, _decode(blob_c))))
    result = _assert_distinct(built, klass, n)
    _GRAMMAR_MEMO[key] = result
    return result


def grammar_enumerate(n: int, klass: str) -> frozenset[Heap]:
    """All size-n heaps of a class, built by the constructor grammar.

    Classes: Ts = no negative column, T = all heaps, Qs and Q = the same
    with no dimer directly on top of another (square-lattice animals).
    """
    if klass not in GRAMMAR_CLASSES:
        raise ValueError(f"unknown class {klass!r}")
    if n < 1:
        raise ValueError("n must be positive")
    key = (klass, n)
    got = _DECODED_CACHE.get(key)
    if got is not None:
        return got
    result = frozenset(Heap(_decode(blob)) for blob in _encoded(klass, n))
    if n <= _DECODED_CACHE_MAX_N:
        _DECODED_CACHE[key] = result
    return result


def grammar_count(n: int, klass: str) -> int:
    if klass not in GRAMMAR_CLASSES:
        raise ValueError(f"unknown class {klass!r}")
    if n < 1:
        raise ValueError("n must be positive")
    return len(_encoded(klass, n))


def clear_caches() -> None:
    """Drop memoized grammar tables and word/heap caches (used by tests)."""
    _GRAMMAR_MEMO.clear()
    _DECODED_CACHE.clear()
    _dyck_heap.cache_clear()
    _dyck_word.cache_clear()

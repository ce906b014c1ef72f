"""Verification suites behind the command line `verify` verb.

Each suite walks every object up to a size bound and records one result
per named check.  The statistics suite does not assume the two empirical
index relations it watches; it detects the constants from the data,
fails if they drift anywhere in range, and reports what it found.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable

from . import bijections, heaps, multisets, paths, series

SUITES = ("counts", "bijections", "statistics", "series", "symmetry")
SUITE_CAPS = {
    "counts": 10,
    "bijections": 8,
    "statistics": 8,
    "series": 30,
    "symmetry": 7,
}
ANIMAL_ORACLE_CAP = 7


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str

    def format_line(self) -> str:
        status = "OK" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.detail}"


@dataclass
class VerifyReport:
    suite: str
    max_n: int
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def format_lines(self) -> list[str]:
        return [c.format_line() for c in self.checks]

    def to_payload(self) -> dict:
        return {
            "suite": self.suite,
            "maxN": self.max_n,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks
            ],
        }


class _Recorder:
    """Collects at most one failure per check, keeping the first detail."""

    def __init__(self) -> None:
        self.order: list[str] = []
        self.failures: dict[str, str] = {}
        self.notes: dict[str, str] = {}

    def declare(self, *names: str) -> None:
        for name in names:
            if name not in self.order:
                self.order.append(name)

    def require(self, name: str, ok: bool, detail: str) -> None:
        self.declare(name)
        if not ok and name not in self.failures:
            self.failures[name] = detail

    def note(self, name: str, detail: str) -> None:
        self.declare(name)
        self.notes[name] = detail

    def results(self, default_detail: str) -> list[CheckResult]:
        out = []
        for name in self.order:
            if name in self.failures:
                out.append(CheckResult(name, False, self.failures[name]))
            else:
                out.append(CheckResult(name, True, self.notes.get(name, default_detail)))
        return out


def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _motzkin(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = row[-1] + sum(row[i] * row[-2 - i] for i in range(len(row) - 1))
        row.append(nxt)
    return row[n]


def _wrap(fn: Callable[[int], list[CheckResult]], max_n: int) -> list[CheckResult]:
    try:
        return fn(max_n)
    except Exception as exc:  # surface bugs as failures, not crashes
        return [CheckResult("suite-execution", False, f"{type(exc).__name__}: {exc}")]


def run_suite(suite: str, max_n: int | None = None) -> VerifyReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    cap = SUITE_CAPS[suite]
    bound = cap if max_n is None else max_n
    if not 1 <= bound <= cap:
        raise ValueError(f"suite {suite} accepts bounds 1..{cap}, got {bound}")
    fn = {
        "counts": _suite_counts,
        "bijections": _suite_bijections,
        "statistics": _suite_statistics,
        "series": _suite_series,
        "symmetry": _suite_symmetry,
    }[suite]
    return VerifyReport(suite, bound, _wrap(fn, bound))


def run_all(max_n: int | None = None) -> list[VerifyReport]:
    return [run_suite(name, max_n if name != "series" else None) for name in SUITES]


# --- counts -------------------------------------------------------------


def _suite_counts(max_n: int) -> list[CheckResult]:
    rec = _Recorder()
    q = series.closed_form("Q", max_n)
    ts = series.closed_form("Ts", max_n)
    t = series.closed_form("T", max_n)
    qs = series.closed_form("Qs", max_n)
    for n in range(1, max_n + 1):
        rec.require(
            "dyck-count-is-catalan",
            paths.count_family("dyck", n) == _catalan(n),
            f"mismatch at n={n}",
        )
        rec.require(
            "dyck-star-count-is-motzkin",
            paths.count_family("dyck_star", n) == _motzkin(n - 1),
            f"mismatch at n={n}",
        )
        rec.require(
            "grand-dyck-count-is-central-binomial",
            paths.count_family("grand_dyck", n) == comb(2 * n - 1, n - 1),
            f"mismatch at n={n}",
        )
        rec.require(
            "multiset-count-is-binomial",
            multisets.count_family("all", n) == comb(2 * n - 1, n),
            f"mismatch at n={n}",
        )
        star = multisets.count_family("star", n)
        dud_free = paths.count_family("grand_dyck_star", n)
        udu_free = paths.count_family("grand_dyck_udu_free", n)
        no_single = multisets.count_family("no_single_except_k", n)
        rec.require(
            "star-multisets-match-dud-free-words",
            star == dud_free,
            f"n={n}: {star} vs {dud_free}",
        )
        rec.require(
            "dud-free-matches-udu-free-count",
            dud_free == udu_free,
            f"n={n}: {dud_free} vs {udu_free}",
        )
        rec.require(
            "no-single-multisets-match-udu-free-words",
            no_single == udu_free,
            f"n={n}: {no_single} vs {udu_free}",
        )
        rec.require(
            "star-count-matches-series-Q",
            star == q[n],
            f"n={n}: {star} vs {q[n]}",
        )
        for klass, ser in (("T", t), ("Ts", ts), ("Q", q), ("Qs", qs)):
            rec.require(
                "grammar-counts-match-series",
                bijections.grammar_count(n, klass) == ser[n],
                f"class {klass}, n={n}",
            )
    return rec.results(f"all sizes 1..{max_n}")


# --- bijections ---------------------------------------------------------


def _suite_bijections(max_n: int) -> list[CheckResult]:
    rec = _Recorder()
    for n in range(1, max_n + 1):
        words = set(paths.enumerate_family("grand_dyck", n))
        images = {}
        for m in multisets.enumerate_family("all", n):
            w = bijections.multiset_to_path(m)
            images[w] = m
            rec.require(
                "staircase-round-trip",
                bijections.path_to_multiset(w) == m,
                f"n={n}, multiset {m}",
            )
        rec.require(
            "staircase-is-bijective",
            len(images) == len(words) and set(images) == words,
            f"n={n}: image size {len(images)}, target {len(words)}",
        )
        for family, target in (
            ("super", "dyck"),
            ("star", "grand_dyck_star"),
            ("no_single_except_k", "grand_dyck_udu_free"),
        ):
            got = {
                bijections.multiset_to_path(m)
                for m in multisets.enumerate_family(family, n)
            }
            want = set(paths.enumerate_family(target, n))
            rec.require(
                f"staircase-{family.replace('_', '-')}-image",
                got == want,
                f"n={n}: {len(got)} words vs {len(want)}",
            )
        heaps_seen = {}
        for w in words:
            h = bijections.path_to_heap(w)
            heaps_seen[h] = w
            rec.require(
                "run-heap-round-trip",
                bijections.heap_to_path(h) == w,
                f"n={n}, word {w}",
            )
        rec.require(
            "run-heap-image-is-grammar-T",
            len(heaps_seen) == len(words)
            and set(heaps_seen) == bijections.grammar_enumerate(n, "T"),
            f"n={n}: {len(heaps_seen)} heaps",
        )
        dyck_image = {
            bijections.path_to_heap(w) for w in paths.enumerate_family("dyck", n)
        }
        rec.require(
            "dyck-image-is-grammar-Ts",
            dyck_image == bijections.grammar_enumerate(n, "Ts"),
            f"n={n}",
        )
        dud_free_image = {
            bijections.path_to_heap(w)
            for w in paths.enumerate_family("grand_dyck_star", n)
        }
        rec.require(
            "dud-free-image-is-grammar-Q",
            dud_free_image == bijections.grammar_enumerate(n, "Q"),
            f"n={n}",
        )
        if n <= ANIMAL_ORACLE_CAP:
            for lattice, klass in (("triangular", "T"), ("square", "Q")):
                brute = {
                    heaps.animal_to_heap(a)
                    for a in heaps.animal_enumerate_bruteforce(n, lattice)
                }
                rec.require(
                    "grammar-matches-brute-force-animals",
                    brute == bijections.grammar_enumerate(n, klass),
                    f"{lattice}, n={n}",
                )
            for lattice, klass in (("triangular", "Ts"), ("square", "Qs")):
                brute = {
                    heaps.animal_to_heap(a)
                    for a in heaps.animal_enumerate_bruteforce(n, lattice, subdiagonal=True)
                }
                rec.require(
                    "grammar-matches-subdiagonal-animals",
                    brute == bijections.grammar_enumerate(n, klass),
                    f"{lattice} subdiagonal, n={n}",
                )
            square_heaps = {
                heaps.animal_to_heap(a): a
                for a in heaps.animal_enumerate_bruteforce(n, "square")
            }
            for a in heaps.animal_enumerate_bruteforce(n, "triangular"):
                h = heaps.animal_to_heap(a)
                rec.require(
                    "square-animals-are-diagonal-free-heaps",
                    (heaps.heap_stats(h).diag == 0) == (h in square_heaps),
                    f"n={n}, animal {a}",
                )
    return rec.results(f"all sizes 1..{max_n}")


# --- statistics ---------------------------------------------------------


def _suite_statistics(max_n: int) -> list[CheckResult]:
    rec = _Recorder()
    gap_offsets: dict[int, int] = {}
    dyck_offsets: set[int] = set()
    above_offsets: set[int] = set()
    below_offsets: set[int] = set()
    for n in range(1, max_n + 1):
        for word in paths.enumerate_family("grand_dyck", n):
            m = bijections.path_to_multiset(word)
            h = bijections.path_to_heap(word)
            ms = multisets.stats(m)
            ps = paths.height_stats(word)
            hs = heaps.heap_stats(h)
            where = f"n={n}, word {word}"
            rec.require(
                "area-equals-semilength-equals-length",
                hs.area == ps.semilength == ms.length,
                where,
            )
            rec.require(
                "left-width-equals-crossings",
                hs.lw == ps.cross == ms.cross,
                where,
            )
            rec.require("right-width-equals-height", hs.rw == ps.height_max, where)
            rec.require(
                "diagonal-pairs-equal-dud-equal-adjacency",
                hs.diag == ps.dud_count == ms.adj,
                where,
            )
            rec.require(
                "width-splits-into-crossings-plus-height",
                hs.width == ps.cross + ps.height_max,
                where,
            )
            rec.require(
                "gap-profile-equals-d-end-heights",
                ms.gap_profile == ps.d_end_heights,
                where,
            )
            rec.require(
                "u-count-per-height-totals-semilength",
                sum(ps.nbu_profile.values()) == ps.semilength,
                where,
            )
            off = ps.height_max - ms.gap
            gap_offsets[off] = gap_offsets.get(off, 0) + 1
            if paths.classify(word).dyck:
                dyck_offsets.add(off)
            modified = paths.modified_heights(word)
            for comp in bijections.run_components(word):
                cols = sorted(
                    d.column + comp.shift
                    for d in bijections._dyck_heap(comp.dyck_word)
                )
                u_heights = sorted(
                    modified[i + 1]
                    for i in range(comp.start, comp.end)
                    if word[i] == "U"
                )
                diffs = {uh - c for uh, c in zip(u_heights, cols)}
                rec.require(
                    "u-heights-track-dimer-columns",
                    len(diffs) == 1,
                    f"{where}, run at {comp.start}",
                )
                if len(diffs) == 1:
                    (below_offsets if comp.below else above_offsets).add(diffs.pop())
    bounded = set(gap_offsets) <= {0, 1}
    rec.require(
        "gap-stays-within-one-of-height",
        bounded,
        f"offsets seen: {sorted(gap_offsets)}",
    )
    rec.require(
        "gap-is-height-minus-one-on-crossing-free-words",
        dyck_offsets == {1},
        f"offsets on crossing-free words: {sorted(dyck_offsets)}",
    )
    if bounded:
        rec.note(
            "gap-stays-within-one-of-height",
            "detected Height - Gap in {0, 1}: offset 1 on "
            f"{gap_offsets.get(1, 0)} words (all crossing-free words among "
            f"them), offset 0 on {gap_offsets.get(0, 0)}, n <= {max_n}",
        )
    rec.require(
        "u-height-column-offsets-are-constant",
        len(above_offsets) == 1 and len(below_offsets) <= 1,
        f"above {sorted(above_offsets)}, below {sorted(below_offsets)}",
    )
    if len(above_offsets) == 1 and len(below_offsets) == 1:
        ua = next(iter(above_offsets))
        ub = next(iter(below_offsets))
        rec.note(
            "u-height-column-offsets-are-constant",
            f"per run, sorted U heights = sorted dimer columns + {ua} above "
            f"the axis and + {ub} below, stable for n <= {max_n}",
        )
    return rec.results(f"all grand-Dyck words, sizes 1..{max_n}")


# --- series -------------------------------------------------------------


def _suite_series(max_n: int) -> list[CheckResult]:
    out = []
    for check in series.check_identities(max_n):
        out.append(
            CheckResult(
                f"series-identity: {check.name}",
                check.ok,
                check.detail if check.ok else f"coefficients differ, {check.detail}",
            )
        )
    table = series.bivariate("f", max_n, 3)
    row1 = all(table.coefficient(n, 1) == 1 for n in range(1, max_n + 1))
    out.append(
        CheckResult(
            "bound-1-column-counts-one-multiset",
            row1,
            f"f(n, 1) = 1 for n <= {max_n}",
        )
    )
    return out


# --- symmetry -----------------------------------------------------------


def _distribution(values: Iterable[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return out


def _suite_symmetry(max_n: int) -> list[CheckResult]:
    rec = _Recorder()
    for n in range(1, max_n + 1):
        for klass in ("T", "Q"):
            stats = [heaps.heap_stats(h) for h in bijections.grammar_enumerate(n, klass)]
            rec.require(
                "left-plus-one-matches-right-width",
                _distribution(s.lw + 1 for s in stats)
                == _distribution(s.rw for s in stats),
                f"class {klass}, n={n}",
            )
        for family in ("grand_dyck", "grand_dyck_star"):
            stats = [
                paths.height_stats(w) for w in paths.enumerate_family(family, n)
            ]
            rec.require(
                "crossings-plus-one-matches-height",
                _distribution(s.cross + 1 for s in stats)
                == _distribution(s.height_max for s in stats),
                f"family {family}, n={n}",
            )
        if n <= ANIMAL_ORACLE_CAP - 1:
            for a in heaps.animal_enumerate_bruteforce(n, "triangular"):
                sa = heaps.heap_stats(heaps.animal_to_heap(a))
                sb = heaps.heap_stats(heaps.animal_to_heap(heaps.animal_reflect(a)))
                rec.require(
                    "reflection-swaps-widths",
                    sb.lw + 1 == sa.rw and sb.rw == sa.lw + 1 and sb.area == sa.area,
                    f"n={n}, animal {a}",
                )
    return rec.results(f"all sizes 1..{max_n}")

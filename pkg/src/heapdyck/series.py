"""Exact truncated power series over the rationals.

A Series holds Fraction coefficients for z^0 .. z^order; coefficients
beyond the order are unknown, never assumed zero, and every arithmetic
result carries the minimum order of its operands.  Square roots are taken
only of series with constant term 1, and the closed forms below divide
by their leading monomials through explicit valuation shifts, so the
whole module stays exact.

The four univariate closed forms count the heap classes by area:

    Ts: (1 - 2z - sqrt(1 - 4z)) / 2z          Catalan numbers
    T:  (1 - 4z - sqrt(1 - 4z)) / (8z - 2)    binomial(2n-1, n)
    Qs: (1 - z - sqrt(1 - 2z - 3z^2)) / 2z    Motzkin numbers, shifted
    Q:  (1 - 3z - sqrt(1 - 2z - 3z^2)) / (6z - 2)

Mdiag, the diagonal of the bivariate multiset count, coincides with Q.
The bivariate tables f (multisets without consecutive values, by size n
and bound k) and h (multisets repeating every value below the bound) are
expanded by bottom-up division with sparse polynomial denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

CLOSED_FORMS = ("Ts", "T", "Qs", "Q", "Mdiag")
BIVARIATE_NAMES = ("f", "h")

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DivByNonUnitError(ZeroDivisionError):
    pass


class SqrtBadConstantError(ValueError):
    pass


@dataclass(frozen=True)
class Series:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )
        if not self.coeffs:
            raise ValueError("series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond computed order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs[: n + 1])))

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series(tuple(a - b for a, b in zip(self.coeffs, other.coeffs[: n + 1])))

    def __mul__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        out = [_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return Series(tuple(out))

    def __truediv__(self, other: "Series") -> "Series":
        if other.coeffs[0] == 0:
            raise DivByNonUnitError("divisor has zero constant term")
        n = min(self.order, other.order)
        inv0 = 1 / other.coeffs[0]
        out: list[Fraction] = []
        for k in range(n + 1):
            acc = self.coeffs[k]
            for j in range(1, k + 1):
                acc -= other.coeffs[j] * out[k - j]
            out.append(acc * inv0)
        return Series(tuple(out))

    def sqrt(self) -> "Series":
        if self.coeffs[0] != 1:
            raise SqrtBadConstantError("square root needs constant term 1")
        out = [_ONE]
        for k in range(1, self.order + 1):
            acc = self.coeffs[k]
            for j in range(1, k):
                acc -= out[j] * out[k - j]
            out.append(acc / 2)
        return Series(tuple(out))

    def shift_down(self, k: int) -> "Series":
        """Divide by z^k, requiring the low coefficients to vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"series has valuation below {k}")
        return Series(self.coeffs[k:])

    def scale(self, factor: Fraction | int) -> "Series":
        f = Fraction(factor)
        return Series(tuple(c * f for c in self.coeffs))

    def format_terms(self, start: int = 0) -> str:
        lines = []
        for n, c in enumerate(self.coeffs):
            if n < start:
                continue
            if c.denominator == 1:
                lines.append(f"{n}\t{c.numerator}")
            else:
                lines.append(f"{n}\t{c.numerator}/{c.denominator}")
        return "\n".join(lines)


def from_ints(values: Iterable[int]) -> Series:
    return Series(tuple(Fraction(v) for v in values))


def polynomial(coeffs: Sequence[int | Fraction], order: int) -> Series:
    out = [Fraction(0)] * (order + 1)
    for i, c in enumerate(coeffs):
        if i > order:
            if c != 0:
                raise ValueError("polynomial degree beyond requested order")
            continue
        out[i] = Fraction(c)
    return Series(tuple(out))


def closed_form(name: str, order: int) -> Series:
    """One of the five named area series, computed to the given order."""
    if name not in CLOSED_FORMS:
        raise ValueError(f"unknown series {name!r}")
    n = order + 1
    if name in ("Ts", "T"):
        root = polynomial([1, -4], n).sqrt()
        if name == "Ts":
            return (polynomial([1, -2], n) - root).shift_down(1).scale(Fraction(1, 2))
        return ((polynomial([1, -4], n) - root) / polynomial([-2, 8], n)).truncate(order)
    root = polynomial([1, -2, -3], n).sqrt()
    if name == "Qs":
        return (polynomial([1, -1], n) - root).shift_down(1).scale(Fraction(1, 2))
    return ((polynomial([1, -3], n) - root) / polynomial([-2, 6], n)).truncate(order)


@dataclass(frozen=True)
class BivarTable:
    """Coefficients c[n][k] of z^n u^k, exact, up to fixed z and u orders."""

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def z_order(self) -> int:
        return len(self.rows) - 1

    @property
    def u_order(self) -> int:
        return len(self.rows[0]) - 1

    def coefficient(self, n: int, k: int) -> Fraction:
        return self.rows[n][k]

    def diagonal(self) -> Series:
        n = min(self.z_order, self.u_order)
        return Series(tuple(self.rows[i][i] for i in range(n + 1)))


def diagonal(table: BivarTable) -> Series:
    return table.diagonal()


def _divide_table(
    numerator: dict[tuple[int, int], int],
    denominator: dict[tuple[int, int], int],
    z_order: int,
    u_order: int,
) -> BivarTable:
    d00 = Fraction(denominator.get((0, 0), 0))
    if d00 == 0:
        raise DivByNonUnitError("bivariate divisor has zero constant term")
    rows = [[_ZERO] * (u_order + 1) for _ in range(z_order + 1)]
    for n in range(z_order + 1):
        for k in range(u_order + 1):
            acc = Fraction(numerator.get((n, k), 0))
            for (i, j), c in denominator.items():
                if (i, j) == (0, 0) or i > n or j > k:
                    continue
                acc -= c * rows[n - i][k - j]
            rows[n][k] = acc / d00
    return BivarTable(tuple(tuple(row) for row in rows))


def bivariate(name: str, z_order: int, u_order: int) -> BivarTable:
    """Expand one of the two rational multiset counters as a table."""
    if name == "f":
        # u z / ((1 - u)(1 - u - z + u z - u^2 z))
        numerator = {(1, 1): 1}
        denominator = {
            (0, 0): 1,
            (0, 1): -2,
            (0, 2): 1,
            (1, 0): -1,
            (1, 1): 2,
            (1, 2): -2,
            (1, 3): 1,
        }
    elif name == "h":
        # u / (1 - z - u (1 - z + z^2))
        numerator = {(0, 1): 1}
        denominator = {
            (0, 0): 1,
            (1, 0): -1,
            (0, 1): -1,
            (1, 1): 1,
            (2, 1): -1,
        }
    else:
        raise ValueError(f"unknown bivariate {name!r}")
    return _divide_table(numerator, denominator, z_order, u_order)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    ok: bool
    detail: str


def check_identities(order: int) -> list[IdentityCheck]:
    """Verify the constructor equations and diagonal identities to an order."""
    n = order
    z = polynomial([0, 1], n)
    one = polynomial([1], n)
    ts = closed_form("Ts", n)
    t = closed_form("T", n)
    qs = closed_form("Qs", n)
    q = closed_form("Q", n)
    checks = []

    def record(name: str, lhs: Series, rhs: Series) -> None:
        same = lhs.coeffs[: n + 1] == rhs.coeffs[: n + 1]
        checks.append(
            IdentityCheck(name, same, f"orders 0..{min(lhs.order, rhs.order)} compared")
        )

    record("Ts = z(1+Ts)^2", ts, z * (one + ts) * (one + ts))
    record("Qs = z(1+Qs+Qs^2)", qs, z * (one + qs + qs * qs))
    record("T = Ts(1+T)", t, ts * (one + t))
    record("Q = Qs(1+Q)", q, qs * (one + q))
    for radicand in ([1, -4], [1, -2, -3]):
        poly = polynomial(radicand, n)
        root = poly.sqrt()
        record(f"sqrt{tuple(radicand)} squares back", root * root, poly)
    record("diagonal(f) = Q", bivariate("f", n, n).diagonal(), q)
    record("diagonal(h) = Q", bivariate("h", n, n).diagonal(), q)
    record("Mdiag = Q", closed_form("Mdiag", n), q)
    return checks

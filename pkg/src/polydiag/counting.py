"""Counting polydiagonal subspaces by three independent methods.

Each type of subspace is counted by (1) an exponential generating function
with exact rational coefficients, (2) a recurrence, and (3) streaming the
actual enumeration through the classifier.  The three must agree; the
count table cross-checks them where the enumeration is feasible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import classify, enumerate_tagged_partitions

DEFAULT_ORDER = 16
ENUMERATION_CAP = 8

KINDS = (
    "polydiagonal",
    "synchrony",
    "anti_synchrony",
    "minimally",
    "fully",
    "evenly",
    "freely_evenly",
    "freely_fully",
)

FIGURE_KINDS = KINDS[:6]  # the six rows of the published table


# ---------------------------------------------------------------------------
# truncated power series over Q


@dataclass(frozen=True)
class RationalSeries:
    """Coefficients c[0..order] of a power series truncated at x^order."""

    coeffs: tuple

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _coerce(other, self.order)
        return RationalSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = _coerce(other, self.order)
        return RationalSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalSeries(tuple(a * other for a in self.coeffs))
        if self.order != other.order:
            raise ValueError("truncation orders differ")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return RationalSeries(tuple(out))

    __rmul__ = __mul__


def _coerce(x, order):
    if isinstance(x, RationalSeries):
        return x
    return RationalSeries((Fraction(x),) + (Fraction(0),) * order)


def series(coeffs, order) -> RationalSeries:
    cs = [Fraction(c) for c in coeffs][: order + 1]
    cs += [Fraction(0)] * (order + 1 - len(cs))
    return RationalSeries(tuple(cs))


def series_exp(s: RationalSeries) -> RationalSeries:
    """exp of a series with zero constant term, via h' = s' h."""
    if s.coeffs[0] != 0:
        raise ValueError("series_exp needs zero constant term")
    n = s.order
    h = [Fraction(1)] + [Fraction(0)] * n
    for k in range(n):
        # (k+1) h_{k+1} = sum_{i=0..k} (i+1) s_{i+1} h_{k-i}
        acc = sum((i + 1) * s.coeffs[i + 1] * h[k - i] for i in range(k + 1))
        h[k + 1] = acc / (k + 1)
    return RationalSeries(tuple(h))


def exp_x(order, scale=1) -> RationalSeries:
    """Series of e^(scale*x)."""
    return RationalSeries(
        tuple(Fraction(scale) ** k / math.factorial(k) for k in range(order + 1))
    )


def bessel_like(order) -> RationalSeries:
    """Sum over n of binomial(2n,n) x^(2n) / (2n)!  (the I0(2x) expansion);
    the coefficient of x^(2k) is 1/(k!)^2."""
    cs = [Fraction(0)] * (order + 1)
    for k in range(0, order // 2 + 1):
        cs[2 * k] = Fraction(1, math.factorial(k) ** 2)
    return RationalSeries(tuple(cs))


@lru_cache(maxsize=None)
def egf(kind: str, order: int = DEFAULT_ORDER) -> RationalSeries:
    """The exponential generating function of a kind, truncated."""
    one = _coerce(1, order)
    x = series([0, 1], order)
    if kind == "synchrony":
        return series_exp(exp_x(order) - one)  # Bell numbers
    if kind == "polydiagonal":
        return series_exp((exp_x(order, 2) - one + 2 * x) * Fraction(1, 2))
    if kind == "fully":
        return series_exp((exp_x(order, 2) - 2 * exp_x(order) + 2 * x + one) * Fraction(1, 2))
    if kind == "freely_fully":
        return series_exp((exp_x(order, 2) - 2 * exp_x(order) + one) * Fraction(1, 2))
    if kind == "evenly":
        return series_exp((bessel_like(order) - one) * Fraction(1, 2) + x)
    if kind == "freely_evenly":
        return series_exp((bessel_like(order) - one) * Fraction(1, 2))
    if kind == "anti_synchrony":
        return egf("polydiagonal", order) - egf("synchrony", order)
    if kind == "minimally":
        # partitions with one distinguished block: (e^x - 1) * Bell EGF
        return (exp_x(order) - one) * egf("synchrony", order)
    raise KeyError("unknown kind %r" % kind)


def egf_count(kind: str, n: int, order: int | None = None) -> int:
    """n! times the x^n coefficient of the kind's EGF, as an exact int."""
    if n < 0:
        raise ValueError("n must be >= 0")
    order = order if order is not None else max(DEFAULT_ORDER, n)
    if n > order:
        raise ValueError("n exceeds truncation order")
    c = egf(kind, order).coeffs[n] * math.factorial(n)
    if c.denominator != 1:
        raise ArithmeticError("EGF coefficient is not integral")
    return int(c)


# ---------------------------------------------------------------------------
# recurrences


def _multinomial(n, k, l):
    return math.comb(n, k) * math.comb(n - k, l)


@lru_cache(maxsize=None)
def _rec_seq(kind: str, n: int) -> int:
    if n == 0:
        return 1
    m = n - 1
    if kind == "synchrony":
        return sum(math.comb(m, k) * _rec_seq(kind, k) for k in range(m + 1))
    if kind == "polydiagonal":
        total = _rec_seq(kind, m)
        total += sum(
            _multinomial(m, k, l) * _rec_seq(kind, k)
            for k in range(m)
            for l in range(m - k)
        )
        total += sum(math.comb(m, k) * _rec_seq(kind, k) for k in range(m + 1))
        return total
    if kind == "fully":
        return _rec_seq(kind, m) + sum(
            _multinomial(m, k, l) * _rec_seq(kind, k)
            for k in range(m)
            for l in range(m - k)
        )
    if kind == "evenly":
        return _rec_seq(kind, m) + sum(
            _multinomial(m, m - 2 * l - 1, l) * _rec_seq(kind, m - 2 * l - 1)
            for l in range((m - 1) // 2 + 1)
        )
    raise KeyError(kind)


def recurrence_count(kind: str, n: int) -> int:
    """Exact count from the recurrences; minimally via the Bell difference
    and anti_synchrony as the complement of synchrony."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if kind in ("polydiagonal", "synchrony", "fully", "evenly"):
        return _rec_seq(kind, n)
    if kind == "minimally":
        return _rec_seq("synchrony", n + 1) - _rec_seq("synchrony", n)
    if kind == "anti_synchrony":
        return _rec_seq("polydiagonal", n) - _rec_seq("synchrony", n)
    if kind in ("freely_evenly", "freely_fully"):
        raise KeyError("no recurrence for %r; use egf_count or enumeration_count" % kind)
    raise KeyError("unknown kind %r" % kind)


# ---------------------------------------------------------------------------
# enumeration census


_KIND_FLAG = {
    "polydiagonal": lambda c: True,
    "synchrony": lambda c: c.synchrony,
    "anti_synchrony": lambda c: c.anti_synchrony,
    "minimally": lambda c: c.minimally_tagged,
    "fully": lambda c: c.fully_tagged,
    "evenly": lambda c: c.evenly_tagged,
    "freely_evenly": lambda c: c.freely_tagged and c.evenly_tagged,
    "freely_fully": lambda c: c.freely_tagged and c.fully_tagged,
}


@lru_cache(maxsize=None)
def _census(n: int) -> dict:
    counts = dict.fromkeys(KINDS, 0)
    for p in enumerate_tagged_partitions(n):
        c = classify(p)
        counts["polydiagonal"] += 1
        if c.synchrony:
            counts["synchrony"] += 1
        else:
            counts["anti_synchrony"] += 1
        if c.minimally_tagged:
            counts["minimally"] += 1
        if c.fully_tagged:
            counts["fully"] += 1
            if c.freely_tagged:
                counts["freely_fully"] += 1
        if c.evenly_tagged:
            counts["evenly"] += 1
            if c.freely_tagged:
                counts["freely_evenly"] += 1
    return counts


def enumeration_count(kind: str, n: int, n_cap: int = ENUMERATION_CAP) -> int:
    if kind not in KINDS:
        raise KeyError("unknown kind %r" % kind)
    if n > n_cap:
        raise ValueError("n=%d exceeds enumeration cap %d" % (n, n_cap))
    return _census(n)[kind]


# ---------------------------------------------------------------------------
# the table


@dataclass(frozen=True)
class CountTable:
    max_n: int
    rows: dict  # kind -> list of ints, n = 0..max_n
    cross_checked: dict  # kind -> bool (three-way agreement on the checked range)

    def row_symbols(self):
        return {
            "polydiagonal": "p",
            "synchrony": "s",
            "anti_synchrony": "a",
            "minimally": "m",
            "fully": "f",
            "evenly": "e",
            "freely_evenly": "e~",
            "freely_fully": "f~",
        }


def count_table(max_n: int, kinds=FIGURE_KINDS, check_cap: int = ENUMERATION_CAP) -> CountTable:
    """Counts for n = 0..max_n, enumeration cross-checked where feasible."""
    order = max(DEFAULT_ORDER, max_n)
    rows, checked = {}, {}
    for kind in kinds:
        vals = []
        ok = True
        for n in range(max_n + 1):
            by_egf = egf_count(kind, n, order)
            try:
                by_rec = recurrence_count(kind, n)
            except KeyError:
                by_rec = by_egf
            if by_rec != by_egf:
                ok = False
            if n <= check_cap and enumeration_count(kind, n) != by_egf:
                ok = False
            vals.append(by_egf)
        rows[kind] = vals
        checked[kind] = ok
    return CountTable(max_n, rows, checked)


def table_to_markdown(t: CountTable) -> str:
    sym = t.row_symbols()
    header = "| kind | sym | " + " | ".join("n=%d" % n for n in range(t.max_n + 1)) + " | check |"
    rule = "|" + "---|" * (t.max_n + 4)
    lines = [header, rule]
    for kind, vals in t.rows.items():
        lines.append(
            "| %s | %s | %s | %s |"
            % (
                kind,
                sym[kind],
                " | ".join(str(v) for v in vals),
                "ok" if t.cross_checked[kind] else "MISMATCH",
            )
        )
    return "\n".join(lines) + "\n"


def table_to_csv(t: CountTable) -> str:
    lines = ["kind," + ",".join("n%d" % n for n in range(t.max_n + 1)) + ",check"]
    for kind, vals in t.rows.items():
        lines.append(
            "%s,%s,%s"
            % (kind, ",".join(str(v) for v in vals), "ok" if t.cross_checked[kind] else "MISMATCH")
        )
    return "\n".join(lines) + "\n"

"""Closed forms, recurrences, triangles, power-series equations and the
semi-Baxter succession rule, plus the bundled known-sequence table."""

import json
import os
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from pathlib import Path
from typing import Callable, NamedTuple, Sequence

from .avoidance import avoids_words, parse_pattern


class IterationLimit(RuntimeError):
    pass


# ---- elementary numbers -------------------------------------------------

def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def large_schroder(n: int) -> int:
    # R_n = R_{n-1} + sum_{k<n} R_k R_{n-1-k}
    r = [1]
    for m in range(1, n + 1):
        r.append(r[m - 1] + sum(r[k] * r[m - 1 - k] for k in range(m)))
    return r[n]


def bell_numbers(count: int) -> list:
    """B_0..B_{count-1} by the Bell triangle."""
    if count <= 0:
        return []
    out, row = [1], [1]
    while len(out) < count:
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[0])
    return out


def stirling2(n: int, k: int) -> int:
    return _stirling2(n, k)


@lru_cache(maxsize=None)
def _stirling2(n, k):
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def euler_zigzag(count: int) -> list:
    """E_0..E_{count-1} via the Entringer (boustrophedon) triangle."""
    out, row = [], [1]
    for n in range(count):
        out.append(row[-1])
        nxt = [0]
        for k in range(1, n + 2):
            nxt.append(nxt[-1] + row[n + 1 - k])
        row = nxt
    return out


def baxter(n: int) -> int:
    if n == 0:
        return 1
    total = sum(comb(n + 1, k - 1) * comb(n + 1, k) * comb(n + 1, k + 1) for k in range(1, n + 1))
    return total // (comb(n + 1, 1) * comb(n + 1, 2))


# ---- triangles ----------------------------------------------------------

@lru_cache(maxsize=None)
def s_triangle_304(n: int, k: int) -> int:
    """Sequences avoiding (-,-,=) with k distinct entries."""
    if n < 1 or k < 1 or k > n:
        return 0
    if n <= 2:
        return 1
    if k == 1:
        return 0
    return (n - k + 1) * s_triangle_304(n - 1, k - 1) + (n - k) * s_triangle_304(n - 2, k - 1)


def s_triangle_304_header(n: int, k: int) -> int:
    """The alternative coefficient (n-1+k); kept to exhibit where it breaks."""
    if n < 1 or k < 1 or k > n:
        return 0
    if n <= 2:
        return 1
    if k == 1:
        return 0
    return (n - 1 + k) * s_triangle_304_header(n - 1, k - 1) + (n - k) * s_triangle_304_header(n - 2, k - 1)


def nexus_T(n: int, k: int) -> int:
    if not 1 <= k <= n:
        return 0
    return (n + 1 - k) ** k - (n - k) ** k


@lru_cache(maxsize=None)
def callan_u(n: int, k: int) -> int:
    if n == 0 and k == 0:
        return 1
    if k > n or k <= 0 or n < 0:
        return 0
    return callan_u(n - 1, k - 1) + k * sum(callan_u(n - 1, j) for j in range(k, n))


@lru_cache(maxsize=None)
def snab_2958(n: int, a: int, b: int) -> int:
    """Sequences in I_n(210,100) with top value a and bottom value b."""
    if n < 1 or a < 0 or a >= n or b < -1 or b >= a and b != -1:
        return 0
    if b == -1:
        num = (n - a) * comb(n - 1 + a, a)
        assert num % n == 0
        return num // n
    return (sum(snab_2958(n - 1, a, i) for i in range(-1, b))
            + sum(snab_2958(n - 1, j, b) for j in range(b + 1, a + 1)))


def snab_total(n: int) -> int:
    return sum(snab_2958(n, a, b) for a in range(n) for b in range(-1, a))


def snab_total_split(n: int) -> int:
    """Catalan term plus the b >= 0 part of the double sum."""
    return catalan(n) + sum(snab_2958(n, a, b) for a in range(n) for b in range(a))


def ballot(n: int, k: int) -> int:
    """Standard tableaux of shape (n-1, k)."""
    if not 0 <= k <= n - 1:
        return 0
    return comb(n - 1 + k, k) * (n - k) // n


def triangle_row(name: str, n: int) -> list:
    if name == "s304":
        return [s_triangle_304(n, k) for k in range(1, n + 1)]
    if name == "nexus":
        return [nexus_T(n, k) for k in range(1, n + 1)]
    if name == "callan":
        return [callan_u(n, k) for k in range(1, n + 1)]
    if name == "stirling2":
        return [stirling2(n, k) for k in range(1, n + 1)]
    if name == "ballot":
        return [ballot(n, k) for k in range(n)]
    raise KeyError(f"unknown triangle {name!r}")


# ---- power series -------------------------------------------------------

def ps_trunc(a, order):
    a = list(a[: order + 1])
    return a + [0] * (order + 1 - len(a))


def ps_add(*series):
    order = max(len(s) for s in series) - 1
    out = [0] * (order + 1)
    for s in series:
        for i, x in enumerate(s):
            out[i] += x
    return out


def ps_scale(a, c):
    return [c * x for x in a]


def ps_mul(a, b, order=None):
    if order is None:
        order = min(len(a), len(b)) - 1
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def ps_inv(a, order=None):
    if order is None:
        order = len(a) - 1
    if not a[0]:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1) / a[0]
    for n in range(1, order + 1):
        out[n] = -sum(a[k] * out[n - k] for k in range(1, min(n, len(a) - 1) + 1)) * out[0]
    return _tidy(out)


def ps_sqrt(a, order=None):
    """Square root of a series with constant term 1."""
    if order is None:
        order = len(a) - 1
    if a[0] != 1:
        raise ValueError("constant term must be 1")
    a = ps_trunc(a, order)
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for n in range(1, order + 1):
        out[n] = (a[n] - sum(out[k] * out[n - k] for k in range(1, n))) / Fraction(2)
    return _tidy(out)


def ps_shift_down(a, k):
    if any(a[:k]):
        raise ValueError(f"series not divisible by x^{k}")
    return list(a[k:])


def _tidy(a):
    return [int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in a]


X = [0, 1]


def _poly(*coeffs, order):
    return ps_trunc(list(coeffs), order)


def _catalan_rhs(i, order):
    return ps_add(_poly(1, order=order), ps_mul(_poly(0, 1, order=order), ps_mul(i, i, order), order))


def _rhs_1694(a, order):
    x_minus_x2 = _poly(0, 1, -1, order=order)
    return ps_add(_poly(1, order=order), ps_mul(x_minus_x2, ps_mul(a, ps_mul(a, a, order), order), order))


def _rhs_1806c(e, order):
    x = _poly(0, 1, order=order)
    return ps_add(x, ps_mul(x, e, order), ps_mul(e, e, order))


def _rhs_805(a, order):
    # A (1 - x - xC) = (1 - 2x) / (1 - x), rearranged for iteration
    x = _poly(0, 1, order=order)
    c = series_solve("I_catalan", order)
    base = ps_mul(_poly(1, -2, order=order), [1] * (order + 1), order)
    return ps_add(base, ps_mul(a, ps_mul(x, ps_add(_poly(1, order=order), c), order), order))


def _rhs_805_cases(a, order):
    """The unsolved three-case equation exactly as first written down; its
    fixed point is not the class-805 series."""
    x = _poly(0, 1, order=order)
    c = series_solve("I_catalan", order)
    geo = ps_mul(x, [1] * (order + 1), order)          # x / (1 - x)
    c_minus_1 = ps_add(c, _poly(-1, order=order))
    return ps_add(_poly(1, order=order), ps_mul(x, a, order), ps_mul(geo, c_minus_1, order),
                  ps_mul(ps_mul(ps_add(a, ps_scale(geo, -1)), x, order), c, order))


SERIES = {
    "I_catalan": (_catalan_rhs, "I = 1 + x I^2", (429,)),
    "A200753": (_rhs_1694, "A = 1 + (x - x^2) A^3", (1694,)),
    "E_1806C": (_rhs_1806c, "E = x + x E + E^2", (1806,)),
    "A_805": (_rhs_805, "A = (1-2x)/(1-x) + x(1+C) A", (805,)),
    "A_805_cases": (_rhs_805_cases, "A = 1 + xA + x/(1-x)(C-1) + (A - x/(1-x)) x C", ()),
}


@lru_cache(maxsize=None)
def _series_cached(name, order):
    rhs = SERIES[name][0]
    cur = [0] * (order + 1)
    for _ in range(order + 3):
        nxt = _tidy(ps_trunc(rhs(cur, order), order))
        if nxt == cur:
            return tuple(cur)
        cur = nxt
    raise IterationLimit(f"{name} did not stabilise within {order + 3} passes")


def series_solve(name: str, order: int = 30) -> list:
    """Coefficients c_0..c_order of the registered equation's solution by
    fixed-point iteration from 0."""
    if name not in SERIES:
        raise KeyError(f"unknown series {name!r}")
    return list(_series_cached(name, order))


def closed_805(order: int) -> list:
    """(1-2x)(1-2x-sqrt(1-4x)) / (2x^2(1-x)) expanded exactly."""
    o = order + 2
    root = ps_sqrt(_poly(1, -4, order=o), o)
    inner = ps_add(_poly(1, -2, order=o), ps_scale(root, -1))
    num = ps_mul(_poly(1, -2, order=o), inner, o)
    num = ps_shift_down(num, 2)
    out = ps_mul(ps_scale(num, Fraction(1, 2)), [1] * (order + 1), order)
    return _tidy(out)


def closed_1806c(order: int) -> list:
    root = ps_sqrt(_poly(1, -6, 1, order=order), order)
    return _tidy(ps_scale(ps_add(_poly(1, -1, order=order), ps_scale(root, -1)), Fraction(1, 2)))


# ---- succession rule ----------------------------------------------------

def omega_semi_children(h: int, k: int) -> list:
    return [(i, k + 1) for i in range(1, h + 1)] + [(h + k - j, 1 + j) for j in range(k)]


def omega_semi_levels(levels: int) -> list:
    """Label multiplicities per level of the generating tree."""
    out = [Counter({(1, 1): 1})]
    while len(out) < levels:
        nxt = Counter()
        for (h, k), c in out[-1].items():
            for lab in omega_semi_children(h, k):
                nxt[lab] += c
        out.append(nxt)
    return out[:levels]


def omega_semi_level_counts(levels: int) -> list:
    return [sum(level.values()) for level in omega_semi_levels(levels)]


SEMI_WORDS = parse_pattern("101,201")


def active_sites_101_201(e: Sequence[int]):
    e = tuple(e)
    if not e or not avoids_words(e, SEMI_WORDS):
        raise ValueError(f"{e} is not in I_n(101,201)")
    sites = [c for c in range(len(e) + 1) if avoids_words(e + (c,), SEMI_WORDS)]
    top = max(e)
    h = sum(1 for c in sites if c <= top)
    return sites, (h, len(sites) - h)


# ---- closed forms -------------------------------------------------------

def _class1016(n):
    if n == 1:
        return 1
    total = comb(2 * (n - 1), n - 1)
    for k in range(2, n - 1):
        for i in range(1, k):
            for u in range(1, i + 1):
                for d in range(u):
                    total += Fraction(i - d + 1, i + 1) * comb(i + d, d)
    assert Fraction(total).denominator == 1
    return int(total)


def _class2549(n):
    total = sum(Fraction(n - i, 2 * i + n) * comb(2 * i + n, i) for i in range(n + 1))
    assert total.denominator == 1
    return int(total)


class SequenceSpec(NamedTuple):
    name: str
    kind: str
    classes: tuple
    term: Callable        # n -> a_n, n >= 1
    description: str


def _eventually(values):
    return lambda n: values[n - 1] if n <= len(values) else values[-1]


_REG = [
    SequenceSpec("identity", "closed-form", ("7",), lambda n: n, "n"),
    SequenceSpec("class12", "closed-form", ("12",), lambda n: 1 if n == 1 else 2 * (n - 1), "2(n-1) for n > 1"),
    SequenceSpec("fibonacci", "closed-form", ("21",), lambda n: fibonacci(n + 1), "F_{n+1}"),
    SequenceSpec("lazy_caterer", "closed-form", ("22",), lambda n: comb(n, 2) + 1, "C(n,2) + 1"),
    SequenceSpec("class33", "closed-form", ("33",), lambda n: fibonacci(n + 2) - 1, "F_{n+2} - 1"),
    SequenceSpec("powers_of_two", "closed-form", ("64",), lambda n: 2 ** (n - 1), "2^{n-1}"),
    SequenceSpec("grassmannian", "closed-form", ("121",), lambda n: 2 ** n - n, "2^n - n"),
    SequenceSpec("class151", "linear-recurrence", ("151",), None, "a_n = 3a_{n-1} - 2a_{n-2} + a_{n-3}; 1, 2, 5"),
    SequenceSpec("class185", "closed-form", ("185",), lambda n: 2 ** (n + 1) - comb(n + 1, 3) - 2 * n - 1,
                 "2^{n+1} - C(n+1,3) - 2n - 1"),
    SequenceSpec("class193", "closed-form", ("193",),
                 lambda n: 1 if n == 1 else (n - 1) * 2 ** (n - 2) + 1, "(n-1) 2^{n-2} + 1"),
    SequenceSpec("class233", "closed-form", ("233",), lambda n: fibonacci(2 * n - 1), "F_{2n-1}"),
    SequenceSpec("catalan", "closed-form", ("429",), catalan, "C_n"),
    SequenceSpec("nexus", "triangle-sum", ("523",), lambda n: sum(nexus_T(n, k) for k in range(1, n + 1)),
                 "sum_k (n+1-k)^k - (n-k)^k"),
    SequenceSpec("bell", "closed-form", ("877",), lambda n: bell_numbers(n + 1)[n], "Bell numbers B_n"),
    SequenceSpec("class304", "triangle-sum", ("304",), lambda n: sum(s_triangle_304(n, k) for k in range(1, n + 1)),
                 "sum_k s(n,k)"),
    SequenceSpec("central_binomial", "closed-form", ("924",), lambda n: comb(2 * n - 2, n - 1), "C(2n-2, n-1)"),
    SequenceSpec("euler_updown", "closed-form", ("1385",), lambda n: euler_zigzag(n + 2)[n + 1],
                 "E_{n+1}, boustrophedon"),
    SequenceSpec("class1694", "series", ("1694",), lambda n: series_solve("A200753", max(n, 30))[n],
                 "[x^n] A, A = 1 + (x - x^2) A^3"),
    SequenceSpec("large_schroder", "closed-form", ("1806",), lambda n: large_schroder(n - 1), "R_{n-1}"),
    SequenceSpec("baxter", "bundled-prefix", ("2074",), baxter, "Baxter numbers (standard triple-binomial sum)"),
    SequenceSpec("class2549", "closed-form", ("2549",), _class2549, "sum_i (n-i)/(2i+n) C(2i+n, i)"),
    SequenceSpec("semi_baxter", "succession-rule", ("2958",), lambda n: omega_semi_level_counts(n)[n - 1],
                 "level sizes of the semi-Baxter generating tree"),
    SequenceSpec("class2958_snab", "triangle-sum", ("2958",), snab_total, "sum_{a,b} S(n,a,b)"),
    SequenceSpec("class3207", "triangle-sum", ("3207",), lambda n: sum(callan_u(n, k) for k in range(n + 1)),
                 "sum_k u(n,k)"),
    SequenceSpec("class805", "closed-form", ("805",), lambda n: catalan(n + 1) - sum(catalan(i) for i in range(1, n + 1)),
                 "C_{n+1} - sum_{i=1}^n C_i"),
    SequenceSpec("class1016", "closed-form", ("1016",), _class1016, "central binomial plus a quadruple sum"),
    SequenceSpec("class1079A", "closed-form", ("1079",), lambda n: 1 + sum(comb(2 * i, i - 1) for i in range(1, n)),
                 "1 + sum_{i=1}^{n-1} C(2i, i-1)"),
    SequenceSpec("factorial", "closed-form", ("5040",), factorial, "n!"),
    SequenceSpec("uc_any_any_any", "ultimately-constant", ("(-,-,-)",), _eventually([1, 2, 0]), "1,2,0,0,..."),
    SequenceSpec("uc_le_le_any", "ultimately-constant", ("(<=,<=,-)",), _eventually([1, 2, 1, 0]), "1,2,1,0,..."),
    SequenceSpec("uc_any_any_ne", "ultimately-constant", ("(-,-,!=)",), _eventually([1, 2, 2, 1]), "1,2,2,1,1,..."),
    SequenceSpec("uc_any_any_lt", "ultimately-constant", ("(-,-,<)",), _eventually([1, 2, 2]), "1,2,2,2,..."),
    SequenceSpec("uc_any_ne_any", "ultimately-constant", ("(-,!=,-)",), _eventually([1, 2, 2]), "1,2,2,2,..."),
    SequenceSpec("uc_any_ne_ne", "ultimately-constant", ("(-,!=,!=)",), _eventually([1, 2, 3]), "1,2,3,3,..."),
]
REGISTRY = {s.name: s for s in _REG}


def _class151(count):
    a = [1, 2, 5]
    while len(a) < count:
        a.append(3 * a[-1] - 2 * a[-2] + a[-3])
    return a[:count]


def known_sequence(name: str, count: int) -> list:
    """a_1..a_count of a registered sequence."""
    if name not in REGISTRY:
        raise KeyError(f"unknown sequence {name!r}")
    if count < 1:
        raise ValueError("need at least one term")
    if name == "class151":
        return _class151(count)
    if name == "semi_baxter":
        return omega_semi_level_counts(count)
    term = REGISTRY[name].term
    return [term(n) for n in range(1, count + 1)]


# ---- bundled data and fingerprinting ------------------------------------

def data_dir() -> Path:
    override = os.environ.get("INVSEQ_DATA")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


@lru_cache(maxsize=None)
def _load_db(path: str):
    with open(path, encoding="utf-8") as fh:
        return tuple(json.load(fh))


def load_known_sequences(path=None) -> list:
    path = Path(path) if path else data_dir() / "sequences.json"
    return list(_load_db(str(path)))


def known_entry(oeis_id: str, db=None) -> dict:
    for entry in (db if db is not None else load_known_sequences()):
        if entry["id"] == oeis_id:
            return entry
    raise KeyError(oeis_id)


def fingerprint(seq: Sequence[int], db=None, min_terms: int = 5) -> list:
    """Entries whose stored terms contain `seq` as a contiguous block.
    Each match carries the index into the stored terms where it aligns."""
    seq = list(seq)
    if len(seq) < min_terms:
        raise ValueError(f"need at least {min_terms} terms to fingerprint")
    db = db if db is not None else load_known_sequences()
    hits = []
    for entry in db:
        terms = entry["terms"]
        for start in range(len(terms) - len(seq) + 1):
            if terms[start:start + len(seq)] == seq:
                hits.append({"id": entry["id"], "description": entry["description"],
                             "align": start, "n_of_first": entry["offset"] + start})
                break
    return hits

"""Relation triples, the 13 length-3 words, and avoidance counting.

The counting engine works on 13-bit masks: bit i is set when the word
WORDS[i] occurs as the order type of some index triple.  A sequence avoids
a forbidden set W exactly when its mask is disjoint from W, so a single
histogram of masks at length n answers every pattern at once.

Enumeration is a level-by-level dynamic program.  The state after a prefix
is (mask, set of values seen, packed lookahead) where the lookahead holds,
for every possible next value c, the mask bits that appending c would add.
Prefixes with equal states have identical futures, so they merge.
"""

from collections import Counter, defaultdict
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from multiprocessing import Pool
from typing import Iterable, Iterator, NamedTuple, Sequence

WORDS = ("000", "001", "010", "100", "011", "101", "110",
         "012", "021", "102", "120", "201", "210")
WORD_BIT = {w: 1 << i for i, w in enumerate(WORDS)}
ALL_WORDS = (1 << 13) - 1
_STRICT_ALIASES = {"123": "012", "132": "021", "213": "102",
                   "231": "120", "312": "201", "321": "210"}
_SLOT = 13


class PatternSyntaxError(ValueError):
    pass


class Relation(Enum):
    LT = "<"
    GT = ">"
    LE = "<="
    GE = ">="
    EQ = "="
    NE = "!="
    ANY = "-"

    def holds(self, x, y) -> bool:
        return _REL_FUNCS[self](x, y)

    @property
    def pretty(self) -> str:
        return _PRETTY[self]


_REL_FUNCS = {
    Relation.LT: lambda x, y: x < y,
    Relation.GT: lambda x, y: x > y,
    Relation.LE: lambda x, y: x <= y,
    Relation.GE: lambda x, y: x >= y,
    Relation.EQ: lambda x, y: x == y,
    Relation.NE: lambda x, y: x != y,
    Relation.ANY: lambda x, y: True,
}
_PRETTY = {Relation.LT: "<", Relation.GT: ">", Relation.LE: "≤", Relation.GE: "≥",
           Relation.EQ: "=", Relation.NE: "≠", Relation.ANY: "−"}
_REL_PARSE = {r.value: r for r in Relation}
_REL_PARSE.update({"≤": Relation.LE, "≥": Relation.GE, "≠": Relation.NE,
                   "−": Relation.ANY, "==": Relation.EQ, "<>": Relation.NE})

# enumeration order of relations used for listing all triples
RELATIONS = (Relation.LT, Relation.GT, Relation.LE, Relation.GE,
             Relation.EQ, Relation.NE, Relation.ANY)


def rel_holds(x: int, y: int, r: Relation) -> bool:
    return r.holds(x, y)


class Triple(NamedTuple):
    rho1: Relation
    rho2: Relation
    rho3: Relation

    def __str__(self):
        return "(" + ",".join(r.value for r in self) + ")"

    @property
    def pretty(self) -> str:
        return "(" + ",".join(r.pretty for r in self) + ")"


def all_triples() -> list:
    return [Triple(*t) for t in product(RELATIONS, repeat=3)]


def parse_triple(text: str) -> Triple:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise PatternSyntaxError(f"triple must be parenthesised: {text!r}")
    parts = [p.strip() for p in s[1:-1].split(",")]
    if len(parts) != 3:
        raise PatternSyntaxError(f"triple needs three relations: {text!r}")
    try:
        return Triple(*(_REL_PARSE[p] for p in parts))
    except KeyError as exc:
        raise PatternSyntaxError(f"unknown relation {exc.args[0]!r} in {text!r}") from None


def order_type(x: int, y: int, z: int) -> str:
    ranks = {v: i for i, v in enumerate(sorted({x, y, z}))}
    return f"{ranks[x]}{ranks[y]}{ranks[z]}"


def words_to_mask(words: Iterable[str]) -> int:
    m = 0
    for w in words:
        w = _STRICT_ALIASES.get(w, w)
        if w not in WORD_BIT:
            raise PatternSyntaxError(f"unknown word pattern {w!r}")
        m |= WORD_BIT[w]
    return m


def mask_to_words(mask: int) -> list:
    return [w for w in WORDS if mask & WORD_BIT[w]]


def parse_words(text: str) -> int:
    parts = [p.strip() for p in text.replace(" ", ",").split(",") if p.strip()]
    if not parts:
        raise PatternSyntaxError("empty word list")
    return words_to_mask(parts)


def parse_pattern(text: str) -> int:
    """Either a triple "(>=,>=,-)" or a word list "210,100"; returns a mask."""
    s = text.strip()
    if s.startswith("("):
        return triple_to_forbidden_words(parse_triple(s))
    return parse_words(s)


def triple_to_forbidden_words(rho) -> int:
    r1, r2, r3 = rho
    m = 0
    for w in WORDS:
        a, b, c = (int(ch) for ch in w)
        if r1.holds(a, b) and r2.holds(b, c) and r3.holds(a, c):
            m |= WORD_BIT[w]
    return m


def contains_triple(e: Sequence[int], rho) -> bool:
    r1, r2, r3 = rho
    for i, j, k in combinations(range(len(e)), 3):
        if r1.holds(e[i], e[j]) and r2.holds(e[j], e[k]) and r3.holds(e[i], e[k]):
            return True
    return False


def pattern_mask(e: Sequence[int]) -> int:
    """Set of order types over all index triples (direct C(n,3) scan)."""
    m = 0
    for i, j, k in combinations(range(len(e)), 3):
        m |= WORD_BIT[order_type(e[i], e[j], e[k])]
    return m


def avoids_words(e: Sequence[int], words: int) -> bool:
    return not (pattern_mask(e) & words)


# ---- fast engine --------------------------------------------------------

@lru_cache(maxsize=None)
def _lookahead_tables(width: int):
    """table[v][S] = packed masks added by appending c, for each c < width,
    from pairs (x, v) with x in the value set S."""
    pair = [[sum(WORD_BIT[order_type(x, v, c)] << (_SLOT * c) for c in range(width))
             for v in range(width)] for x in range(width)]
    table = []
    for v in range(width):
        row = [0] * (1 << width)
        for s in range(1, 1 << width):
            low = s & -s
            row[s] = row[s ^ low] | pair[low.bit_length() - 1][v]
        table.append(row)
    return table


def _advance(states: dict, length: int, table, forbidden: int) -> dict:
    nxt = defaultdict(int)
    for (m, seen, look), c in states.items():
        for v in range(length + 1):
            m2 = m | ((look >> (_SLOT * v)) & ALL_WORDS)
            if m2 & forbidden:
                continue
            nxt[m2, seen | (1 << v), look | table[v][seen]] += c
    return nxt


def _finish(states: dict, length: int, forbidden: int) -> Counter:
    """Histogram of masks one step past `length`, without building states."""
    hist = Counter()
    for (m, _seen, look), c in states.items():
        for v in range(length + 1):
            m2 = m | ((look >> (_SLOT * v)) & ALL_WORDS)
            if not m2 & forbidden:
                hist[m2] += c
    return hist


def _run(states: dict, start_len: int, n: int, forbidden: int) -> Counter:
    table = _lookahead_tables(n)
    for length in range(start_len, n - 1):
        states = _advance(states, length, table, forbidden)
    return _finish(states, n - 1, forbidden)


def _worker(args):
    items, start_len, n, forbidden = args
    return dict(_run(dict(items), start_len, n, forbidden))


def mask_histogram(n: int, forbidden: int = 0, jobs: int = 1, split_at: int = 4) -> Counter:
    """Counter {mask: number of e in I_n with that mask}, restricted to
    sequences avoiding `forbidden`.

    With jobs > 1 the state set at length `split_at` is dealt round-robin
    to worker processes.  Sums are exact integers, so the result does not
    depend on `jobs`."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Counter({0: 1})
    start_len = min(split_at, n - 1) if jobs > 1 else 0
    table = _lookahead_tables(n)
    states = {(0, 0, 0): 1}
    for length in range(start_len):
        states = _advance(states, length, table, forbidden)
    if jobs <= 1 or len(states) < 2:
        return _run(states, start_len, n, forbidden)
    items = sorted(states.items())
    chunks = [items[i::jobs] for i in range(jobs)]
    with Pool(min(jobs, len(items))) as pool:
        parts = pool.map(_worker, [(ch, start_len, n, forbidden) for ch in chunks if ch])
    total = Counter()
    for part in parts:
        total.update(part)
    return total


def count_from_histogram(hist: dict, words: int) -> int:
    return sum(c for m, c in hist.items() if not m & words)


def count_avoiders(n: int, rho) -> int:
    words = rho if isinstance(rho, int) else triple_to_forbidden_words(rho)
    return count_words(n, words)


def count_words(n: int, words: int, jobs: int = 1) -> int:
    if n == 0:
        return 1
    return sum(mask_histogram(n, words, jobs=jobs).values())


def count_avoiders_naive(n: int, rho) -> int:
    from .core import iter_inversion_sequences
    return sum(1 for e in iter_inversion_sequences(n) if not contains_triple(e, rho))


def count_avoiders_batch(n: int, patterns: Sequence, jobs: int = 1) -> list:
    masks = [p if isinstance(p, int) else triple_to_forbidden_words(p) for p in patterns]
    hist = mask_histogram(n, jobs=jobs)
    return [count_from_histogram(hist, w) for w in masks]


def avoidance_sequence(words: int, upto: int, jobs: int = 1) -> list:
    return [count_words(n, words, jobs=jobs) for n in range(1, upto + 1)]


def iter_avoiders(n: int, words: int) -> Iterator[tuple]:
    """Depth-first generation of I_n(words) in lexicographic order."""
    if n == 0:
        yield ()
        return
    table = _lookahead_tables(n)
    prefix = []

    def rec(m, seen, look):
        length = len(prefix)
        if length == n:
            yield tuple(prefix)
            return
        for v in range(length + 1):
            m2 = m | ((look >> (_SLOT * v)) & ALL_WORDS)
            if m2 & words:
                continue
            prefix.append(v)
            yield from rec(m2, seen | (1 << v), look | table[v][seen])
            prefix.pop()

    yield from rec(0, 0, 0)


def mask_histograms_upto(n: int, jobs: int = 1) -> dict:
    return {k: mask_histogram(k, jobs=jobs) for k in range(1, n + 1)}

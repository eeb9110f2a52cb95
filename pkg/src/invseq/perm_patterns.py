"""Pattern containment on permutations: classical, vincular, barred rules
and quadrant marked mesh patterns."""

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .avoidance import PatternSyntaxError


def standardize(seq: Sequence[int]) -> tuple:
    ranks = {v: i + 1 for i, v in enumerate(sorted(seq))}
    return tuple(ranks[v] for v in seq)


@dataclass(frozen=True)
class Vincular:
    word: tuple
    glued: frozenset = frozenset()  # p in glued: entries p, p+1 (1-indexed) adjacent

    def __str__(self):
        out = ""
        for i, x in enumerate(self.word, 1):
            if i in self.glued and (i - 1) not in self.glued:
                out += "["
            out += str(x)
            if (i - 1) in self.glued and i not in self.glued:
                out += "]"
        return out


@dataclass(frozen=True)
class BarredRule:
    """Every occurrence of `core` must sit inside an occurrence of
    `extension`, at the extension positions listed in `embedding`."""
    name: str
    core: tuple
    extension: tuple
    embedding: tuple


@dataclass(frozen=True)
class MarkedMesh:
    """A point matches when its quadrants (NE, NW, SW, SE) hold at least
    a, b, c, d points respectively."""
    a: int
    b: int
    c: int
    d: int

    def __str__(self):
        return f"MMP({self.a},{self.b},{self.c},{self.d})"


PLANE = BarredRule("plane", (2, 1, 4, 3), (2, 1, 3, 5, 4), (0, 1, 3, 4))
BAR3BAR1542 = BarredRule("bar3bar1542", (3, 2, 1), (3, 1, 5, 4, 2), (2, 3, 4))
FOUR_BAR132 = BarredRule("4bar132", (3, 2, 1), (4, 1, 3, 2), (0, 2, 3))
BARRED_RULES = {r.name: r for r in (PLANE, BAR3BAR1542, FOUR_BAR132)}

SEMI_BAXTER = Vincular((2, 4, 1, 3), frozenset({2}))
BAXTER_PAIR = (Vincular((3, 1, 4, 2), frozenset({2})), SEMI_BAXTER)
GAPPED_1234 = Vincular((1, 2, 3, 4), frozenset({2}))


def occurrences(p: Sequence[int], pat: Sequence[int], glued=frozenset()) -> Iterator[tuple]:
    """Index tuples of p order-isomorphic to pat, honouring adjacency."""
    n, m = len(p), len(pat)
    idx = []

    def rec(start):
        t = len(idx)
        if t == m:
            yield tuple(idx)
            return
        if t and t in glued:
            cands = (idx[-1] + 1,) if idx[-1] + 1 < n else ()
        else:
            cands = range(start, n - (m - t) + 1)
        for i in cands:
            x = p[i]
            if all((p[idx[s]] < x) == (pat[s] < pat[t]) for s in range(t)):
                idx.append(i)
                yield from rec(i + 1)
                idx.pop()

    yield from rec(0)


def contains_classical(p: Sequence[int], pat: Sequence[int]) -> bool:
    return next(occurrences(p, pat), None) is not None


def contains_vincular(p: Sequence[int], pat: Vincular) -> bool:
    return next(occurrences(p, pat.word, pat.glued), None) is not None


def contains_barred(p: Sequence[int], rule: BarredRule) -> bool:
    """True when some core occurrence fails to extend, i.e. p violates the rule."""
    covered = {tuple(occ[k] for k in rule.embedding) for occ in occurrences(p, rule.extension)}
    return any(occ not in covered for occ in occurrences(p, rule.core))


def quadrant_counts(p: Sequence[int], i: int) -> tuple:
    x = p[i]
    ne = sum(1 for j in range(i + 1, len(p)) if p[j] > x)
    nw = sum(1 for j in range(i) if p[j] > x)
    sw = i - nw
    se = len(p) - 1 - i - ne
    return ne, nw, sw, se


def mmp_matches(p: Sequence[int], i: int, m: MarkedMesh) -> bool:
    ne, nw, sw, se = quadrant_counts(p, i)
    return ne >= m.a and nw >= m.b and sw >= m.c and se >= m.d


def avoids_mmp(p: Sequence[int], m: MarkedMesh) -> bool:
    return not any(mmp_matches(p, i, m) for i in range(len(p)))


def parse_perm_pattern(text: str):
    s = text.strip()
    if s in BARRED_RULES:
        return BARRED_RULES[s]
    if s.upper().startswith("MMP(") and s.endswith(")"):
        try:
            vals = [int(x) for x in s[4:-1].split(",")]
        except ValueError:
            raise PatternSyntaxError(f"bad mesh pattern {text!r}") from None
        if len(vals) != 4 or min(vals) < 0:
            raise PatternSyntaxError(f"bad mesh pattern {text!r}")
        return MarkedMesh(*vals)
    word, glued, depth = [], set(), 0
    opened_at = None
    for ch in s:
        if ch == "[":
            if depth:
                raise PatternSyntaxError(f"nested brackets in {text!r}")
            depth, opened_at = 1, len(word) + 1
        elif ch == "]":
            if not depth:
                raise PatternSyntaxError(f"unbalanced brackets in {text!r}")
            depth = 0
            glued.update(range(opened_at, len(word)))
        elif ch.isdigit():
            word.append(int(ch))
        else:
            raise PatternSyntaxError(f"unexpected {ch!r} in pattern {text!r}")
    if depth or sorted(word) != list(range(1, len(word) + 1)):
        raise PatternSyntaxError(f"not a permutation pattern: {text!r}")
    if glued:
        return Vincular(tuple(word), frozenset(glued))
    return tuple(word)


def avoids(p: Sequence[int], pat) -> bool:
    if isinstance(pat, Vincular):
        return not contains_vincular(p, pat)
    if isinstance(pat, BarredRule):
        return not contains_barred(p, pat)
    if isinstance(pat, MarkedMesh):
        return avoids_mmp(p, pat)
    return not contains_classical(p, pat)


def _ends_occurrence(p, pat) -> bool:
    """Does p contain pat (classical or vincular) through its last entry?"""
    if isinstance(pat, Vincular):
        word, glued = pat.word, pat.glued
    else:
        word, glued = tuple(pat), frozenset()
    n, m = len(p), len(word)
    if n < m:
        return False
    for occ in occurrences(p[:-1], word[:-1], glued):
        if (m - 1) in glued and occ[-1] != n - 2:
            continue
        if _fits(p, occ + (n - 1,), word):
            return True
    return False


def _fits(p, idx, word) -> bool:
    m = len(word)
    return all((p[idx[s]] < p[idx[t]]) == (word[s] < word[t])
               for s in range(m) for t in range(s + 1, m))


def _hereditary(patterns) -> bool:
    return not any(isinstance(q, BarredRule) for q in patterns)


def iter_avoiders_perm(n: int, patterns: Sequence) -> Iterator[tuple]:
    """Permutations of [n] avoiding every listed pattern.

    Classical, vincular and marked mesh avoidance survive deleting the last
    entry, so those lists are grown one position at a time and only
    occurrences through the new last entry are checked."""
    patterns = list(patterns)
    if not _hereditary(patterns):
        for p in permutations(range(1, n + 1)):
            if all(avoids(p, q) for q in patterns):
                yield p
        return
    meshes = [q for q in patterns if isinstance(q, MarkedMesh)]
    others = [q for q in patterns if not isinstance(q, MarkedMesh)]
    level = [()]
    for k in range(1, n + 1):
        nxt = []
        for p in level:
            for v in range(1, k + 1):
                q = tuple(x + 1 if x >= v else x for x in p) + (v,)
                if any(_ends_occurrence(q, pat) for pat in others):
                    continue
                if any(not avoids_mmp(q, m) for m in meshes):
                    continue
                nxt.append(q)
        level = nxt
    yield from level


def count_avoiders_perm(n: int, patterns: Sequence) -> int:
    return sum(1 for _ in iter_avoiders_perm(n, patterns))


def descents(p: Sequence[int]) -> list:
    return [i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]]


def count_grassmannian(n: int) -> int:
    return sum(1 for p in permutations(range(1, n + 1)) if len(descents(p)) <= 1)

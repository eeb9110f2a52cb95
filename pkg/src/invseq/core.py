"""Inversion sequences, permutations, statistics and small operators.

Sequences are plain tuples of ints stored 0-indexed; positions in error
messages are reported 1-indexed.
"""

from itertools import product
from typing import Iterable, Iterator, NamedTuple, Sequence


class InvalidSequence(ValueError):
    pass


class RangeViolation(ValueError):
    pass


class Stats(NamedTuple):
    asc: int
    zeros: int
    dist: int
    repeats: int
    maxim: int
    maxx: int
    last: int


STAT_NAMES = ("asc", "zeros", "dist", "repeats", "maxim", "maxx", "last", "lr_maxima")


def check_inversion_sequence(e: Sequence[int]) -> tuple:
    e = tuple(e)
    for i, x in enumerate(e):
        if not isinstance(x, int) or x < 0 or x > i:
            raise InvalidSequence(f"entry {x!r} at position {i + 1} must lie in 0..{i}")
    return e


def is_inversion_sequence(e: Sequence[int]) -> bool:
    return all(isinstance(x, int) and 0 <= x <= i for i, x in enumerate(e))


def check_permutation(p: Sequence[int]) -> tuple:
    p = tuple(p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidSequence(f"{p} is not a permutation of 1..{len(p)}")
    return p


def iter_inversion_sequences(n: int) -> Iterator[tuple]:
    """All of I_n in lexicographic order."""
    return product(*[range(i) for i in range(1, n + 1)])


def iter_inversion_sequences_partitioned(n: int, prefix: Sequence[int]) -> Iterator[tuple]:
    prefix = check_inversion_sequence(prefix)
    if len(prefix) > n:
        raise InvalidSequence(f"prefix of length {len(prefix)} longer than n={n}")
    for tail in product(*[range(i) for i in range(len(prefix) + 1, n + 1)]):
        yield prefix + tail


def prefixes(n: int, k: int) -> list:
    """Length-min(k, n) prefixes; their extension streams partition I_n."""
    return list(iter_inversion_sequences(min(k, n)))


def sigma(e: Sequence[int], t: int) -> tuple:
    """Add t to every nonzero entry. The result need not be an inversion sequence."""
    out = []
    for i, x in enumerate(e):
        if x == 0:
            out.append(0)
        else:
            if x + t < 0:
                raise RangeViolation(f"entry {x} at position {i + 1} would become {x + t}")
            out.append(x + t)
    return tuple(out)


def concat_front_zero(e: Sequence[int]) -> tuple:
    return check_inversion_sequence((0,) + tuple(e))


def concat_back(e: Sequence[int], value: int) -> tuple:
    e = tuple(e)
    if not 0 <= value <= len(e):
        raise RangeViolation(f"appended value {value} must lie in 0..{len(e)}")
    return e + (value,)


def lr_maxima(e: Sequence[int]) -> int:
    """Number of strict left-to-right maxima."""
    best, count = -1, 0
    for x in e:
        if x > best:
            best, count = x, count + 1
    return count


def stats(e: Sequence[int]) -> Stats:
    n = len(e)
    if n == 0:
        raise InvalidSequence("statistics are undefined on the empty sequence")
    asc = sum(1 for i in range(n - 1) if e[i] < e[i + 1])
    dist = len(set(e))
    return Stats(
        asc=asc,
        zeros=sum(1 for x in e if x == 0),
        dist=dist,
        repeats=n - dist,
        maxim=sum(1 for i, x in enumerate(e) if x == i),
        maxx=max(e),
        last=e[-1],
    )


def statistic(e: Sequence[int], name: str) -> int:
    if name == "lr_maxima":
        return lr_maxima(e)
    if name not in Stats._fields:
        raise KeyError(f"unknown statistic {name!r}")
    return getattr(stats(e), name)


def reverse(seq: Sequence[int]) -> tuple:
    return tuple(reversed(seq))


def complement(p: Sequence[int]) -> tuple:
    n = len(p)
    return tuple(n + 1 - x for x in p)


def format_sequence(e: Iterable[int]) -> str:
    return "(" + ",".join(str(x) for x in e) + ")"


def parse_sequence(text: str) -> tuple:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s.strip():
        return ()
    try:
        return tuple(int(x) for x in s.replace(" ", ",").split(",") if x != "")
    except ValueError:
        raise InvalidSequence(f"cannot parse sequence {text!r}") from None


def parse_permutation(text: str) -> tuple:
    s = text.strip().strip("()")
    if " " in s.strip() or "," in s:
        p = tuple(int(x) for x in s.replace(",", " ").split())
    else:
        p = tuple(int(c) for c in s)
    return check_permutation(p)

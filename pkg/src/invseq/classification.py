"""Equivalence and Wilf classification of the 343 triples, class labels,
and table reproduction.

Two forbidden word sets give the same avoidance sets exactly when they
exclude the same realizable masks (a sequence avoids W iff its mask misses
W).  So the canonical form of W is its closure: every word w such that no
realizable mask containing w is disjoint from W.  Raw word sets alone are
not canonical; {000,010,011,021} and the six words of (-,>=,>=) forbid the
same sequences, for instance."""

import json
import time
import warnings
from collections import defaultdict
from functools import lru_cache
from typing import NamedTuple

from .avoidance import (ALL_WORDS, WORD_BIT, WORDS, Triple, all_triples, count_from_histogram,
                        mask_histogram, mask_to_words, parse_pattern, parse_triple,
                        triple_to_forbidden_words)
from .core import iter_inversion_sequences
from .sequences import data_dir

REALIZABLE_HORIZON = 8


@lru_cache(maxsize=None)
def _histogram(n, jobs=1):
    return mask_histogram(n, jobs=jobs)


def histogram(n: int, jobs: int = 1):
    """Shared full-I_n mask histogram (cached per n)."""
    return _histogram(n, 1) if jobs <= 1 else _histogram(n, jobs)


@lru_cache(maxsize=None)
def realizable_masks(horizon: int = REALIZABLE_HORIZON) -> frozenset:
    out = set()
    for n in range(1, horizon + 1):
        out.update(histogram(n))
    return frozenset(out)


def closure(words: int, horizon: int = REALIZABLE_HORIZON) -> int:
    allowed = [m for m in realizable_masks(horizon) if not m & words]
    seen = 0
    for m in allowed:
        seen |= m
    return ALL_WORDS & ~seen


class EquivalenceClass(NamedTuple):
    closure: int
    members: tuple          # Triples, in all_triples() order

    @property
    def words(self) -> list:
        return mask_to_words(self.closure)

    @property
    def representative(self) -> Triple:
        return self.members[0]


def _sort_key(mask):
    return tuple(mask_to_words(mask))


@lru_cache(maxsize=None)
def equivalence_classes(horizon: int = REALIZABLE_HORIZON) -> tuple:
    groups = defaultdict(list)
    for t in all_triples():
        groups[closure(triple_to_forbidden_words(t), horizon)].append(t)
    return tuple(EquivalenceClass(m, tuple(ms)) for m, ms in sorted(groups.items(), key=lambda kv: _sort_key(kv[0])))


def word_set_classes() -> list:
    """Grouping by raw forbidden word sets, without closure."""
    groups = defaultdict(list)
    for t in all_triples():
        groups[triple_to_forbidden_words(t)].append(t)
    return [(m, tuple(ms)) for m, ms in sorted(groups.items(), key=lambda kv: _sort_key(kv[0]))]


def class_of(pattern, horizon: int = REALIZABLE_HORIZON) -> EquivalenceClass:
    words = _as_words(pattern)
    target = closure(words, horizon)
    for cls in equivalence_classes(horizon):
        if cls.closure == target:
            return cls
    raise KeyError(f"no class with closure {mask_to_words(target)}")


def _as_words(pattern) -> int:
    if isinstance(pattern, int):
        return pattern
    if isinstance(pattern, str):
        return parse_pattern(pattern)
    return triple_to_forbidden_words(pattern)


def class_sequence(words: int, upto: int, jobs: int = 1) -> list:
    return [count_from_histogram(histogram(n, jobs), words) for n in range(1, upto + 1)]


class WilfBlock(NamedTuple):
    terms: tuple
    classes: tuple


def wilf_classes(horizon: int = 9, jobs: int = 1) -> list:
    """Equivalence classes grouped by identical a_1..a_horizon."""
    if horizon > 10:
        warnings.warn(f"horizon {horizon} enumerates {horizon}! sequences", RuntimeWarning)
    groups = defaultdict(list)
    for cls in equivalence_classes():
        groups[tuple(class_sequence(cls.closure, horizon, jobs))].append(cls)
    return [WilfBlock(k, tuple(v)) for k, v in sorted(groups.items())]


# ---- labels -------------------------------------------------------------

def _load(name):
    with open(data_dir() / name, encoding="utf-8") as fh:
        return json.load(fh)


def load_table(which: int) -> list:
    return _load(f"tables/table{which}.json")


@lru_cache(maxsize=None)
def label_map() -> dict:
    """closure mask -> label, from the bundled map plus a fallback of a_7
    and a letter in word-set order for classes the map leaves out."""
    out = {}
    for label, triple in _load("labels.json").items():
        m = class_of(parse_triple(triple)).closure
        if m in out:
            raise ValueError(f"labels {out[m]} and {label} name the same class")
        out[m] = label
    loose = defaultdict(list)
    for cls in equivalence_classes():
        if cls.closure not in out:
            loose[count_from_histogram(histogram(7), cls.closure)].append(cls.closure)
    for a7, masks in loose.items():
        if len(masks) == 1:
            out[masks[0]] = str(a7)
        else:
            for i, m in enumerate(sorted(masks, key=_sort_key)):
                out[m] = f"{a7}{chr(ord('A') + i)}"
    return out


def class_label(rho) -> str:
    return label_map()[class_of(rho).closure]


def label_to_class(label: str) -> EquivalenceClass:
    for cls in equivalence_classes():
        if label_map()[cls.closure] == label:
            return cls
    raise KeyError(f"unknown class label {label!r}")


def label_number(label: str) -> int:
    return int(label.rstrip("ABCD"))


# ---- Table 1 predicates -------------------------------------------------

def _nondecr(s):
    return all(a <= b for a, b in zip(s, s[1:]))


def _incr(s):
    return all(a < b for a, b in zip(s, s[1:]))


def _nonincr(s):
    return all(a >= b for a, b in zip(s, s[1:]))


def _decr(s):
    return all(a > b for a, b in zip(s, s[1:]))


def _const(s):
    return len(set(s)) <= 1


def _split(e, left, join, right):
    """Some t in 1..n with left(e_1..e_t), join(e_t, e_{t+1}) when t < n,
    and right(e_{t+1}..e_n)."""
    n = len(e)
    for t in range(1, n + 1):
        a, b = e[:t], e[t:]
        if left(a) and right(b) and (not b or join(a[-1], b[0])):
            return True
    return False


def _le(x, y):
    return x <= y


def _lt(x, y):
    return x < y


def _ge(x, y):
    return x >= y


def _gt(x, y):
    return x > y


def _row22b(e):
    # e_1 = ... = e_t <= e_{t+1} >= 0 = ... = 0
    n = len(e)
    for t in range(1, n + 1):
        a, rest = e[:t], e[t:]
        if not _const(a):
            continue
        if not rest:
            return True
        if a[-1] <= rest[0] and all(x == 0 for x in rest[1:]):
            return True
    return False


def _row121a(e):
    # e_1 = ... = e_t <= e_{t+1} >= e_{t+2} >= ... >= e_n
    n = len(e)
    for t in range(1, n + 1):
        a, rest = e[:t], e[t:]
        if _const(a) and (not rest or (a[-1] <= rest[0] and _nonincr(rest))):
            return True
    return False


def _row33b(e):
    # e_1 < ... < e_t = ... = e_s > ... > e_n
    n = len(e)
    for t in range(1, n + 1):
        for s in range(t, n + 1):
            if _incr(e[:t]) and _const(e[t - 1:s]) and _decr(e[s - 1:]):
                return True
    return False


def _positive(e):
    return [x for x in e if x > 0]


def _contiguous_equal(e):
    last = {}
    for i, x in enumerate(e):
        if x in last and last[x] != i - 1:
            return False
        last[x] = i
    return True


def _adjacent_only_equal(e):
    return all(abs(s - t) <= 1 for s in range(len(e)) for t in range(s + 1, len(e)) if e[s] == e[t])


TABLE1_PREDICATES = {
    "first n-1 entries equal": lambda e: _const(e[:-1]),
    "constant, then a weak rise, then constant": lambda e: _split(e, _const, _le, _const),
    "constant, then a strict rise, then strictly increasing": lambda e: _split(e, _const, _lt, _incr),
    "first n-1 entries weakly increasing": lambda e: _nondecr(e[:-1]),
    "weakly increasing": _nondecr,
    "e_1 <= e_2 < e_3 < ... < e_n": lambda e: _incr(e[1:]) and (len(e) < 2 or e[0] <= e[1]),
    "first n-1 entries strictly increasing": lambda e: _incr(e[:-1]),
    "e_2 onwards weakly decreasing": lambda e: _nonincr(e[1:]),
    "constant, one rise, then zeros": _row22b,
    "constant, one rise, then weakly decreasing": _row121a,
    "constant, then up, then strictly decreasing": lambda e: _split(e, _const, _lt, _decr),
    "weakly increasing, strict drop, weakly decreasing": lambda e: _split(e, _nondecr, _gt, _nonincr),
    "weakly increasing, strict drop, strictly decreasing": lambda e: _split(e, _nondecr, _gt, _decr),
    "weakly increasing, weak drop, then constant": lambda e: _split(e, _nondecr, _ge, _const),
    "strictly increasing, weak drop, then constant": lambda e: _split(e, _incr, _ge, _const),
    "strictly increasing, weak drop, weakly decreasing": lambda e: _split(e, _incr, _ge, _nonincr),
    "strictly increasing, weak drop, strictly decreasing": lambda e: _split(e, _incr, _ge, _decr),
    "strictly increasing, plateau, strictly decreasing": _row33b,
    "positive entries strictly decreasing": lambda e: _decr(_positive(e)),
    "positive entries weakly decreasing": lambda e: _nonincr(_positive(e)),
    "positive entries strictly increasing": lambda e: _incr(_positive(e)),
    "positive entries weakly increasing": lambda e: _nondecr(_positive(e)),
    "e_2..e_n distinct": lambda e: len(set(e[1:])) == len(e) - 1 if e else True,
    "at most two distinct values": lambda e: len(set(e)) <= 2,
    "positive entries distinct": lambda e: len(set(_positive(e))) == len(_positive(e)),
    "no three entries equal": lambda e: all(e.count(x) <= 2 for x in set(e)),
    "equal entries are contiguous": _contiguous_equal,
    "equal entries are adjacent": _adjacent_only_equal,
}


def _table1_check(row, upto):
    pred = TABLE1_PREDICATES[row["predicate"]]
    words = parse_pattern(row["triple"])
    from .avoidance import avoids_words
    bad = []
    for n in range(1, upto + 1):
        for e in iter_inversion_sequences(n):
            if pred(e) != avoids_words(e, words) and len(bad) < 3:
                bad.append({"n": n, "e": list(e), "predicate": pred(e)})
    return bad


# ---- table reproduction -------------------------------------------------

def _relation_note(row, cls):
    printed = row.get("printed_triple")
    if printed and closure(parse_pattern(printed)) != cls.closure:
        return f"printed relation {printed} belongs to class {class_label(parse_triple(printed))}"
    return None


def reproduce_table(which: int, upto: int = None, jobs: int = 1) -> dict:
    """Recompute every row of a bundled table.  Mismatches against the
    printed data go under "errors"; printed annotations that are
    inconsistent but do not affect the counted sequence go under "notes"."""
    started = time.perf_counter()
    rows, errors, notes = [], [], []
    if which == 1:
        upto = upto or 7
        for row in load_table(1):
            cls = class_of(parse_triple(row["triple"]))
            got = class_label(cls.representative)
            bad = _table1_check(row, upto)
            if got != row["label"]:
                errors.append({"label": row["label"], "issue": f"triple lands in class {got}"})
            if bad:
                errors.append({"label": row["label"], "issue": "predicate disagrees with avoidance",
                               "examples": bad})
            note = _relation_note(row, cls)
            if note:
                notes.append({"label": row["label"], "note": note})
            rows.append({"label": row["label"], "triple": row["triple"], "predicate": row["predicate"],
                         "checked_upto": upto, "agrees": not bad})
    elif which in (2, 3):
        upto = upto or (7 if which == 2 else 9)
        for row in load_table(which):
            cls = class_of(parse_triple(row["triple"]))
            got_label = class_label(cls.representative)
            terms = class_sequence(cls.closure, upto, jobs)
            entry = {"label": row["label"], "triple": row["triple"], "terms": terms,
                     "a7": terms[6] if upto >= 7 else None, "class_label": got_label}
            if got_label != row["label"]:
                errors.append({"label": row["label"], "issue": f"triple lands in class {got_label}"})
            if upto >= 7 and terms[6] != label_number(row["label"]):
                errors.append({"label": row["label"], "issue": f"a_7 = {terms[6]}"})
            printed = row.get("terms")
            if printed and printed[:upto] != terms[: len(printed)]:
                errors.append({"label": row["label"], "issue": "prefix mismatch",
                               "printed": printed[:upto], "computed": terms})
            if row.get("words"):
                annotated = parse_pattern(",".join(row["words"]))
                raw = triple_to_forbidden_words(parse_triple(row["triple"]))
                if closure(annotated) != cls.closure:
                    other = label_map().get(closure(annotated), "of no triple")
                    notes.append({"label": row["label"],
                                  "note": f"printed-annotation discrepancy: I_n({','.join(row['words'])}) "
                                          f"is class {other}, counts {class_sequence(annotated, upto, jobs)}"})
                elif annotated != raw:
                    notes.append({"label": row["label"],
                                  "note": "annotation equals the forbidden set only up to closure"})
            rows.append(entry)
    else:
        raise ValueError(f"no table {which}")
    return {"table": which, "rows": rows, "errors": errors, "notes": notes,
            "passed": not errors, "seconds": round(time.perf_counter() - started, 3)}


def ultimately_constant_report(upto: int = 12, stable: int = 4) -> list:
    """Classes whose sequence is constant over its last `stable` terms up to
    `upto`.  Terms past n = 8 come from pruned enumeration, which is cheap
    because only classes that are still tiny at n = 8 get that far."""
    from .avoidance import count_words
    out = []
    for cls in equivalence_classes():
        terms = class_sequence(cls.closure, min(upto, 8))
        if terms[-1] > 100:
            continue
        terms += [count_words(n, cls.closure) for n in range(9, upto + 1)]
        if len(set(terms[-stable:])) == 1:
            out.append((cls.representative, terms))
    return out


def classification_report(horizon: int = 9, jobs: int = 1) -> dict:
    eq = equivalence_classes()
    wilf = wilf_classes(horizon, jobs)
    labels = label_map()
    index = {cls.closure: i for i, cls in enumerate(eq)}
    return {
        "equivalence_classes": [
            {"label": labels[c.closure], "words": c.words, "members": [str(t) for t in c.members]}
            for c in eq],
        "wilf_classes": [
            {"terms": list(b.terms), "classes": [labels[c.closure] for c in b.classes]}
            for b in wilf],
        "labels": {str(t): labels[c.closure] for c in eq for t in c.members},
        "summary": f"{len(eq)} equivalence classes, {len(wilf)} Wilf classes at n={horizon}",
        "class_index": {labels[c]: i for c, i in index.items()},
    }

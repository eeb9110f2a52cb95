"""Maps between avoidance classes of inversion sequences, with exhaustive
verification."""

from itertools import permutations
from typing import Callable, NamedTuple, Optional, Sequence

from .avoidance import avoids_words, iter_avoiders, parse_pattern
from .core import check_inversion_sequence, iter_inversion_sequences, lr_maxima, stats
from .encodings import invcode, phi, theta


class DomainError(ValueError):
    pass


class TopBottom(NamedTuple):
    top_indices: tuple
    bottom_indices: tuple
    top_value: int
    bottom_value: int


def _require(e, words: int, what: str):
    e = check_inversion_sequence(e)
    if not avoids_words(e, words):
        raise DomainError(f"{e} is not in I_n({what})")
    return e


def _words(text):
    return parse_pattern(text)


ALPHA_DOMAIN = _words("110,210")
ALPHA_RANGE = _words("100,210")
D772_DOMAIN = _words("(>=,>=,-)")
D772_RANGE = _words("(-,<=,>=)")
D2958_DOMAIN = _words("210,100")
D2958_RANGE = _words("201,100")
PREFIX_ZERO_DOMAIN = _words("(>=,<=,!=)")
PREFIX_ZERO_RANGE = _words("(!=,<=,-)")


def alpha(e: Sequence[int], check: bool = True) -> tuple:
    """Entries that recur later are raised to the running maximum."""
    if check:
        e = _require(e, ALPHA_DOMAIN, "110,210")
    n = len(e)
    out, running = [], -1
    for j in range(n):
        running = max(running, e[j])
        out.append(running if e[j] in e[j + 1:] else e[j])
    return tuple(out)


def beta(e: Sequence[int], check: bool = True) -> tuple:
    """Entries already seen drop to the minimum of the remaining suffix."""
    if check:
        e = _require(e, ALPHA_RANGE, "100,210")
    return tuple(min(e[j:]) if e[j] in e[:j] else e[j] for j in range(len(e)))


def weak_maxima(e: Sequence[int]) -> list:
    best, out = -1, []
    for i, x in enumerate(e):
        if x >= best:
            out.append(i)
            best = x
    return out


def strict_maxima(e: Sequence[int]) -> list:
    best, out = -1, []
    for i, x in enumerate(e):
        if x > best:
            out.append(i)
            best = x
    return out


def _greedy_reassign(e, tops, allow_equal: bool) -> tuple:
    """Keep entries at `tops`; refill the other positions left to right with
    the largest unused non-top value below (or, with allow_equal, not above)
    the running prefix maximum."""
    top = set(tops)
    pool = sorted(e[i] for i in range(len(e)) if i not in top)
    out = list(e)
    running = -1
    for j, x in enumerate(e):
        if j not in top:
            fits = [k for k in pool if (k <= running if allow_equal else k < running)]
            if not fits:
                raise RuntimeError(f"greedy extraction exhausted at position {j + 1} of {tuple(e)}")
            pick = max(fits)
            pool.remove(pick)
            out[j] = pick
        running = max(running, x)
    return tuple(out)


def _sort_non_tops(f, tops) -> tuple:
    top = set(tops)
    rest = iter(sorted(f[i] for i in range(len(f)) if i not in top))
    return tuple(f[i] if i in top else next(rest) for i in range(len(f)))


def map_772(e: Sequence[int], check: bool = True) -> tuple:
    """I_n(>=,>=,-) -> I_n(-,<=,>=).

    Left-to-right maxima are strict here and the greedy bound is "at most
    the prefix maximum"; the weak-maxima variant leaves (0,1,0,1) fixed,
    which contains 101."""
    if check:
        e = _require(e, D772_DOMAIN, "(>=,>=,-)")
    return _greedy_reassign(e, strict_maxima(e), allow_equal=True)


def map_772_inverse(f: Sequence[int], check: bool = True) -> tuple:
    if check:
        f = _require(f, D772_RANGE, "(-,<=,>=)")
    return _sort_non_tops(f, strict_maxima(f))


def map_772_weak(e: Sequence[int]) -> tuple:
    """The weak-maxima reading with a strict bound, kept for comparison."""
    return _greedy_reassign(e, weak_maxima(e), allow_equal=False)


def map_2958D(e: Sequence[int], check: bool = True) -> tuple:
    """I_n(210,100) -> I_n(201,100) via weak left-to-right maxima."""
    if check:
        e = _require(e, D2958_DOMAIN, "210,100")
    return _greedy_reassign(e, weak_maxima(e), allow_equal=False)


def map_2958D_inverse(f: Sequence[int], check: bool = True) -> tuple:
    if check:
        f = _require(f, D2958_RANGE, "201,100")
    return _sort_non_tops(f, weak_maxima(f))


def zero_repeats(e: Sequence[int]) -> tuple:
    seen, out = set(), []
    for x in e:
        out.append(0 if x in seen else x)
        seen.add(x)
    return tuple(out)


def first_descent(e: Sequence[int]) -> int:
    """1-indexed s with e_s > e_{s+1}, or n when e is weakly increasing."""
    for i in range(len(e) - 1):
        if e[i] > e[i + 1]:
            return i + 1
    return len(e)


def prefix_zero(e: Sequence[int], check: bool = True) -> tuple:
    if check:
        e = _require(e, PREFIX_ZERO_DOMAIN, "(>=,<=,!=)")
    s = first_descent(e)
    return tuple(0 if i < s - 1 else x for i, x in enumerate(e))


def top_bottom(e: Sequence[int]) -> TopBottom:
    if not e:
        raise ValueError("empty sequence")
    tops = weak_maxima(e)
    top = set(tops)
    bottoms = tuple(i for i in range(len(e)) if i not in top)
    return TopBottom(
        top_indices=tuple(i + 1 for i in tops),
        bottom_indices=tuple(i + 1 for i in bottoms),
        top_value=e[tops[-1]],
        bottom_value=e[bottoms[-1]] if bottoms else -1,
    )


# ---- registry and verification -----------------------------------------

def _stat(name):
    if name == "lr_maxima":
        return lr_maxima
    return lambda e: getattr(stats(e), name)


class Restriction(NamedTuple):
    domain: Optional[str]      # None: all permutations of [n]
    codomain: Optional[str]    # None: all of I_n
    bijective: bool = True     # False: only containment is claimed


class Entry(NamedTuple):
    func: Callable
    restrictions: tuple
    preserved: tuple = ()
    unchecked: Optional[Callable] = None


REGISTRY = {
    "theta": Entry(theta, (Restriction(None, None),)),
    "invcode": Entry(invcode, (Restriction(None, None),)),
    "phi": Entry(phi, (Restriction(None, None),)),
    "alpha": Entry(alpha, (Restriction("110,210", "100,210"),),
                   unchecked=lambda e: alpha(e, check=False)),
    "beta": Entry(beta, (Restriction("100,210", "110,210"),),
                  unchecked=lambda e: beta(e, check=False)),
    "map_772": Entry(map_772, (Restriction("(>=,>=,-)", "(-,<=,>=)"),),
                     ("maxim", "maxx", "zeros", "dist", "lr_maxima"),
                     unchecked=lambda e: map_772(e, check=False)),
    "map_2958D": Entry(map_2958D, (Restriction("210,100", "201,100"),
                                   Restriction("210,110,100,000", "201,101,100,000", False)),
                       unchecked=lambda e: map_2958D(e, check=False)),
    "zero_repeats": Entry(zero_repeats, (Restriction("(!=,!=,=)", "011"),
                                         Restriction("(-,>,-)", "(-,>=,<)"))),
    "prefix_zero": Entry(prefix_zero, (Restriction("(>=,<=,!=)", "(!=,<=,-)"),),
                         unchecked=lambda e: prefix_zero(e, check=False)),
}


def _domain(n, spec):
    if spec is None:
        return permutations(range(1, n + 1))
    return iter_avoiders(n, parse_pattern(spec))


def _codomain(n, spec):
    if spec is None:
        return set(iter_inversion_sequences(n))
    return set(iter_avoiders(n, parse_pattern(spec)))


def verify_bijection(name: str, n: int, max_examples: int = 5) -> dict:
    if name not in REGISTRY:
        raise KeyError(f"unknown bijection {name!r}; known: {', '.join(REGISTRY)}")
    entry = REGISTRY[name]
    func = entry.unchecked or entry.func
    checks = []
    for r in entry.restrictions:
        target = _codomain(n, r.codomain)
        images, outside, clashes, broken = {}, [], [], {s: [] for s in entry.preserved}
        size = 0
        for x in _domain(n, r.domain):
            size += 1
            y = func(x)
            if y not in target and len(outside) < max_examples:
                outside.append([list(x), list(y)])
            if y in images and len(clashes) < max_examples:
                clashes.append([list(images[y]), list(x), list(y)])
            images.setdefault(y, x)
            for s in entry.preserved:
                if _stat(s)(x) != _stat(s)(y) and len(broken[s]) < max_examples:
                    broken[s].append([list(x), list(y)])
        contained = not outside
        injective = len(images) == size
        surjective = contained and len(images) == len(target)
        check = {
            "domain": r.domain or "S_n",
            "codomain": r.codomain or "I_n",
            "domain_size": size,
            "codomain_size": len(target),
            "contained": contained,
            "injective": injective,
            "surjective": surjective,
            "claim": "bijection" if r.bijective else "containment",
            "preserved": {s: not broken[s] for s in entry.preserved},
            "counterexamples": {"outside_codomain": outside, "collisions": clashes,
                                "statistics": {s: v for s, v in broken.items() if v}},
        }
        ok = contained and (not r.bijective or (injective and surjective))
        check["passed"] = ok and all(check["preserved"].values())
        checks.append(check)
    return {"bijection": name, "n": n, "checks": checks,
            "passed": all(c["passed"] for c in checks)}

"""The twelve acceptance checks, shared by the test suite and `invseq verify --all`.

Each check returns a Result; `detail` carries the numbers behind the verdict
and `consistency` lists sub-checks that only confirm a conjectured identity
to the stated horizon."""

import time
from collections import Counter
from itertools import permutations
from math import comb
from typing import NamedTuple

from . import bijections as bj
from . import perm_patterns as pp
from . import sequences as sq
from .avoidance import (all_triples, avoids_words, count_from_histogram, count_words, iter_avoiders,
                        mask_histogram, parse_pattern, parse_triple, triple_to_forbidden_words)
from .classification import (class_label, class_of, class_sequence, equivalence_classes, histogram,
                             label_to_class, label_number, load_table, reproduce_table,
                             ultimately_constant_report, wilf_classes)
from .core import stats
from .encodings import exc, invcode, invcode_inv, phi, phi_inv, theta, theta_inv


class Result(NamedTuple):
    number: int
    title: str
    passed: bool
    detail: dict
    consistency: tuple = ()
    note: str = ""


def _words(label):
    return label_to_class(label).closure


def _seq(label, upto=9):
    return class_sequence(_words(label), upto)


def db_terms(oeis_id, first=1, last=9):
    """Bundled terms a_first..a_last of an entry, using its avoidance offset."""
    e = sq.known_entry(oeis_id)
    start = first - e["offset"]
    return e["terms"][start:start + last - first + 1]


def db_rows(oeis_id):
    return sq.known_entry(oeis_id)["rows"]


# ---- 1 -------------------------------------------------------------------

def criterion_1():
    started = time.perf_counter()
    eq = equivalence_classes()
    seconds = time.perf_counter() - started
    all_avoiding = len(class_of(parse_triple("(=,=,!=)")).members)
    six = class_of(parse_triple("(=,<=,-)"))
    expected_six = {"(=,<=,-)", "(=,-,<=)", "(=,<=,<=)", "(>=,-,<=)", "(>=,<=,-)", "(>=,<=,>=)"}
    members = {str(t) for t in six.members}
    detail = {"classes": len(eq), "expected": 98, "sizes_sum": sum(len(c.members) for c in eq),
              "all_avoiding_members": all_avoiding, "class_21_members": sorted(members),
              "seconds": round(seconds, 3)}
    ok = (len(eq) == 98 and all_avoiding == 41 and members == expected_six
          and detail["sizes_sum"] == 343 and seconds < 1.0)
    note = (f"{len(eq)} classes (expected 98); all-avoiding class {all_avoiding} members; "
            f"(=,<=,-) class {len(members)} members; {seconds:.3f} s")
    return Result(1, "equivalence classification", ok, detail, (), note)


# ---- 2 -------------------------------------------------------------------

def criterion_2(jobs=1):
    started = time.perf_counter()
    hists = [histogram(n, jobs) for n in range(1, 10)]
    blocks = wilf_classes(9, jobs)
    seconds = time.perf_counter() - started
    # refinement check, triple by triple rather than class by class
    by_seq = {}
    split = []
    for cls in equivalence_classes():
        seqs = {tuple(count_from_histogram(h, triple_to_forbidden_words(t)) for h in hists) for t in cls.members}
        if len(seqs) != 1:
            split.append(str(cls.representative))
        by_seq.setdefault(seqs.pop(), []).append(cls)
    distinct = len({tuple(count_from_histogram(h, triple_to_forbidden_words(t)) for h in hists)
                    for t in all_triples()})
    detail = {"blocks": len(blocks), "expected": 63, "distinct_triple_sequences": distinct,
              "split_equivalence_classes": split, "seconds": round(seconds, 3)}
    ok = len(blocks) == 63 and distinct == 63 and not split and seconds < 300
    return Result(2, "Wilf classification at N = 9", ok, detail)


# ---- 3 -------------------------------------------------------------------

def criterion_3():
    labels = [r["label"] for t in (2, 3) for r in load_table(t)] + ["5040", "7A", "7B", "7C", "7D"]
    h7 = histogram(7)
    bad = {}
    for label in labels:
        got = count_from_histogram(h7, _words(label))
        if got != label_number(label):
            bad[label] = got
    distinct_classes = len({_words(label) for label in labels})
    detail = {"rows_checked": len(labels), "distinct_classes": distinct_classes,
              "table_2_3_classes": len(labels) - 5, "mismatches": bad}
    return Result(3, "a_7 equals the class label", not bad and distinct_classes == len(labels), detail)


# ---- 4 -------------------------------------------------------------------

def criterion_4():
    rep = reproduce_table(3, upto=9)
    bad = [e for e in rep["errors"]]
    detail = {"rows": len(rep["rows"]), "errors": bad, "notes": rep["notes"]}
    return Result(4, "Table 3 prefixes to a_9", not bad and len(rep["rows"]) == 34, detail)


# ---- 5 -------------------------------------------------------------------

# registered formula -> class labels it is checked against exactly
EXACT_FORMULAS = [
    ("identity", ("7A", "7B", "7C", "7D")),
    ("class12", ("12A", "12B")),
    ("fibonacci", ("21",)),
    ("lazy_caterer", ("22A", "22B", "22C")),
    ("class33", ("33A", "33B")),
    ("powers_of_two", ("64A", "64B", "64C", "64D")),
    ("grassmannian", ("121A", "121B", "121C")),
    ("class151", ("151",)),
    ("class185", ("185",)),
    ("class193", ("193",)),
    ("class233", ("233",)),
    ("catalan", ("429A", "429B", "429C")),
    ("nexus", ("523",)),
    ("class805", ("805",)),
    ("bell", ("877A", "877C")),
    ("central_binomial", ("924",)),
    ("class1016", ("1016",)),
    ("class1079A", ("1079A",)),
    ("euler_updown", ("1385",)),
    ("large_schroder", ("1806A", "1806B", "1806C", "1806D")),
    ("class3207", ("3207A", "3207B")),
]

PERM_1265 = [(2, 1, 4, 3), (3, 1, 4, 2), (4, 1, 3, 2)]


def _conjectures():
    return [
        ("187 vs A049125", ("187",), db_terms("A049125")),
        ("304 vs A229046", ("304",), db_terms("A229046")),
        ("877B/877D vs Bell", ("877B", "877D"), sq.known_sequence("bell", 9)),
        ("1064 vs A071356", ("1064",), db_terms("A071356")),
        ("1079B vs 1079A", ("1079B",), _seq("1079A")),
        ("1347 vs A106228", ("1347",), db_terms("A106228")),
        ("2549 vs A098746 formula", ("2549A", "2549B", "2549C"), sq.known_sequence("class2549", 9)),
        ("2074 vs Baxter prefix", ("2074",), [sq.baxter(n) for n in range(1, 10)]),
    ]


def criterion_5():
    bad = {}
    for name, labels in EXACT_FORMULAS:
        want = sq.known_sequence(name, 9)
        for label in labels:
            got = _seq(label)
            if got != want:
                bad[f"{name}:{label}"] = got
    perm_1265 = [pp.count_avoiders_perm(n, PERM_1265) for n in range(1, 10)]
    if perm_1265 != _seq("1265"):
        bad["1265:permutations"] = perm_1265
    constants = {}
    for spec in sq.REGISTRY.values():
        if spec.kind == "ultimately-constant":
            got = class_sequence(parse_pattern(spec.classes[0]), 9)
            constants[spec.classes[0]] = class_label(parse_triple(spec.classes[0]))
            if got != sq.known_sequence(spec.name, 9):
                bad[spec.name] = got
    consistency = []
    for title, labels, want in _conjectures():
        agree = all(_seq(label) == want for label in labels)
        consistency.append((title, "consistent with conjecture" if agree else "INCONSISTENT"))
    ok = not bad and all(v == "consistent with conjecture" for _, v in consistency)
    detail = {"formulas": len(EXACT_FORMULAS) + 1, "mismatches": bad, "constant_classes": constants}
    return Result(5, "formula vs oracle, n <= 9", ok, detail, tuple(consistency))


# ---- 6 -------------------------------------------------------------------

def criterion_6():
    got = {
        "1694": sq.series_solve("A200753", 30)[7],
        "1806C": sq.series_solve("E_1806C", 30)[7],
        "429B": sq.series_solve("I_catalan", 30)[7],
    }
    closed = sq.closed_805(20)
    want = [sq.catalan(n + 1) - sum(sq.catalan(i) for i in range(1, n + 1)) for n in range(21)]
    detail = {"x7": got, "closed_805_n_le_20": closed == want}
    ok = got == {"1694": 1694, "1806C": 1806, "429B": 429} and closed == want
    return Result(6, "generating functions", ok, detail)


# ---- 7 -------------------------------------------------------------------

def criterion_7():
    words = parse_pattern("101,201")
    rule = sq.omega_semi_level_counts(9)
    brute = class_sequence(words, 9)
    snab = [sq.snab_total(n) for n in range(1, 10)]
    levels = sq.omega_semi_levels(7)
    label_bad = []
    for n in range(1, 8):
        sites = Counter(sq.active_sites_101_201(e)[1] for e in iter_avoiders(n, words))
        if sites != levels[n - 1]:
            label_bad.append(n)
    detail = {"rule": rule, "brute": brute, "snab": snab, "label_mismatch_levels": label_bad}
    return Result(7, "succession rule", rule == brute == snab and not label_bad, detail)


# ---- 8 -------------------------------------------------------------------

IMAGE_CLAIMS = [
    ("theta", [(1, 2, 3), (1, 3, 2), (2, 3, 1)], "(=,-,-)"),
    ("theta", [(2, 1, 3), (3, 2, 1)], "(<,!=,-)"),
    ("theta", [(2, 1, 3), (3, 1, 2)], "(<,>=,-)"),
    ("theta", [(2, 1, 3)], "(-,>,-)"),
    ("theta", [(2, 1, 3, 4), (2, 1, 4, 3)], "(>,-,>=)"),
    ("theta", [(2, 1, 4, 3), (3, 1, 4, 2), (3, 2, 4, 1)], "(>,<,-)"),
    ("invcode", [(2, 1, 4, 3), (3, 1, 4, 2), (4, 1, 3, 2)], "(>,<,-)"),
    ("phi", [(4, 3, 2, 1), (4, 3, 1, 2)], "(>=,!=,>=)"),
    ("phi", [pp.MarkedMesh(0, 2, 0, 2)], "(>,!=,>)"),
]
_ENC = {"theta": theta, "invcode": invcode, "phi": phi}

WILF_PAIRS = [("2549C", "2549A"), ("1953A", "1953B"), ("1833A", "1833B"), ("746A", "746B"), ("663A", "663B")]


def _image_claims(n):
    out = {}
    for enc, pats, triple in IMAGE_CLAIMS:
        image = {_ENC[enc](p) for p in pp.iter_avoiders_perm(n, pats)}
        target = set(iter_avoiders(n, parse_pattern(triple)))
        out[f"{enc}(S_{n}({','.join(map(str, pats))})) = I_{n}{triple}"] = image == target
    return out


def _alpha_pairs(n_max=8, full_010=None):
    out = {}
    full_010 = {} if full_010 is None else full_010
    dom, cod = bj.ALPHA_DOMAIN, bj.ALPHA_RANGE
    for n in range(1, n_max + 1):
        domain = list(iter_avoiders(n, dom))
        images = [bj.alpha(e) for e in domain]
        target = set(iter_avoiders(n, cod))
        inverse = all(bj.beta(f) == e for e, f in zip(domain, images))
        out[f"n={n} alpha bijection"] = set(images) == target and len(set(images)) == len(domain) and inverse
        for p in ("201", "120"):
            out[f"n={n} preserves {p}"] = all(_avoids(e, p) == _avoids(f, p) for e, f in zip(domain, images))
        # 010 is preserved only among 120-avoiders, which is all the 746 pair needs
        out[f"n={n} preserves 010 given 120"] = all(_avoids(e, "010") == _avoids(f, "010")
                                                    for e, f in zip(domain, images) if _avoids(e, "120"))
        full_010[n] = sum(_avoids(e, "010") != _avoids(f, "010") for e, f in zip(domain, images))
        for a, b in WILF_PAIRS:
            src, dst = set(iter_avoiders(n, _words(a))), set(iter_avoiders(n, _words(b)))
            out[f"n={n} alpha({a}) = {b}"] = {bj.alpha(e) for e in src} == dst and len(src) == len(dst)
    return out


def _avoids(e, word):
    return avoids_words(e, parse_pattern(word))


def criterion_8():
    n = 7
    perms = list(permutations(range(1, n + 1)))
    trips = {
        "theta": all(theta_inv(theta(p)) == p for p in perms) and len({theta(p) for p in perms}) == 5040,
        "invcode": all(invcode_inv(invcode(p)) == p for p in perms) and len({invcode(p) for p in perms}) == 5040,
        "phi": all(phi_inv(phi(p)) == p for p in perms) and len({phi(p) for p in perms}) == 5040,
        "exc = repeats . phi": all(exc(p) == stats(phi(p)).repeats for p in perms),
    }
    images = _image_claims(n)
    full_010 = {}
    alpha = _alpha_pairs(8, full_010)
    reports = {}
    for name in ("map_772", "map_2958D"):
        reports[name] = [bj.verify_bijection(name, m) for m in range(1, 9)]
    r772 = all(r["passed"] for r in reports["map_772"])
    r2958 = all(r["checks"][0]["passed"] for r in reports["map_2958D"])
    restriction = all(r["checks"][1]["passed"] for r in reports["map_2958D"])
    failing = [r["checks"][1]["counterexamples"]["outside_codomain"][:1] for r in reports["map_2958D"]
               if not r["checks"][1]["passed"]]
    detail = {"round_trips": trips, "images": images,
              "alpha_failures": [k for k, v in alpha.items() if not v],
              "alpha_010_flips_without_120": full_010,
              "map_772_n_le_8": r772, "map_2958D_bijection_n_le_8": r2958,
              "map_2958D_772B_to_772A": restriction,
              "restriction_counterexample": failing[0] if failing else None}
    ok = all(trips.values()) and all(images.values()) and all(alpha.values()) and r772 and r2958 and restriction
    failed = [k for k, v in {**trips, **images, **alpha}.items() if not v]
    failed += [k for k, v in (("map_772", r772), ("map_2958D bijection", r2958),
                              ("map_2958D 772B -> 772A", restriction)) if not v]
    note = "failed: " + "; ".join(failed) if failed else ""
    if failed and failing:
        note += f" (e.g. {tuple(failing[0][0][0])} -> {tuple(failing[0][0][1])})"
    return Result(8, "bijections", ok, detail, (), note)


# ---- 9 -------------------------------------------------------------------

def _refine(n, pattern, key):
    return Counter(key(e) for e in iter_avoiders(n, parse_pattern(pattern)))


def criterion_9():
    bad = []
    for n in range(1, 8):
        d = _refine(n, "(-,-,=)", lambda e: stats(e).dist)
        if any(d[k] != sq.s_triangle_304(n, k) for k in range(1, n + 1)):
            bad.append(("s", n))
        d = _refine(n, "(!=,=,-)", lambda e: stats(e).dist)
        if any(d[k] != sq.nexus_T(n, k) for k in range(1, n + 1)):
            bad.append(("T", n))
        for pat in ("101", "110"):
            d = _refine(n, pat, lambda e: stats(e).zeros)
            if any(d[k] != sq.callan_u(n, k) for k in range(0, n + 1)):
                bad.append(("u", pat, n))
        d = _refine(n, "210,100", lambda e: (bj.top_bottom(e).top_value, bj.top_bottom(e).bottom_value))
        if any(d[(a, b)] != sq.snab_2958(n, a, b) for a in range(n) for b in range(-1, a)) or \
                sum(d.values()) != sq.snab_total(n):
            bad.append(("S", n))
        d = _refine(n, "011", lambda e: stats(e).zeros)
        if any(d[k] != sq.stirling2(n, k) for k in range(1, n + 1)):
            bad.append(("stirling", n))
    return Result(9, "triangle refinements, n <= 7", not bad, {"mismatches": bad})


# ---- 10 ------------------------------------------------------------------

TABLE_1064 = [[1], [1, 1], [1, 4, 1], [1, 9, 9, 1], [1, 16, 38, 16, 1], [1, 25, 110, 110, 25, 1],
              [1, 36, 255, 480, 255, 36, 1]]


def _dist_row(n, pattern, stat, lo, hi):
    c = _refine(n, pattern, lambda e: getattr(stats(e), stat))
    return [c[k] for k in range(lo, hi + 1)]


def criterion_10():
    detail = {}
    rows = [_dist_row(n, "(>,<=,-)", "dist", 1, n) for n in range(1, 8)]
    detail["1064_table"] = rows == TABLE_1064 and all(r == r[::-1] for r in rows)
    asc_ok = True
    for n in range(1, 9):
        a = [_dist_row(n, p, "asc", 0, n - 1) for p in ("021", "(>,-,>=)", "(>=,!=,>=)")]
        asc_ok &= a[0] == a[1] == a[2] and a[0] == a[0][::-1]
    detail["ascents_palindromic_equal"] = asc_ok
    schroder = db_rows("A090981")
    rep = [_dist_row(n, "(>=,!=,>=)", "repeats", 0, n - 1) for n in range(1, 9)]
    detail["repeats_vs_A090981"] = rep == schroder[:8]
    ballot = db_rows("A009766")
    last = [_dist_row(n, "(>=,-,>=)", "last", 0, n - 1) for n in range(1, 9)]
    detail["last_vs_A009766"] = last == ballot[:8]
    consistency = (("repeats over I_n(>=,!=,>=) vs A090981", "consistent with conjecture"
                    if detail["repeats_vs_A090981"] else "INCONSISTENT"),
                   ("last over I_n(>=,-,>=) vs A009766", "consistent with conjecture"
                    if detail["last_vs_A009766"] else "INCONSISTENT"))
    return Result(10, "statistic distributions", all(detail.values()), detail, consistency)


# ---- 11 ------------------------------------------------------------------

PERM_CLAIMS = [
    ("vincular Baxter", list(pp.BAXTER_PAIR), 2074),
    ("semi-Baxter 2[41]3", [pp.SEMI_BAXTER], 2958),
    ("plane 21bar354", [pp.PLANE], 2958),
    ("1[23]4", [pp.GAPPED_1234], 3207),
    ("bar3bar1542", [pp.BAR3BAR1542], 523),
    ("MMP(0,2,0,2)", [pp.MarkedMesh(0, 2, 0, 2)], 3720),
    ("S(2143,3142,4132)", [(2, 1, 4, 3), (3, 1, 4, 2), (4, 1, 3, 2)], 1265),
    ("S(4123,4132,4213)", [(4, 1, 2, 3), (4, 1, 3, 2), (4, 2, 1, 3)], 1347),
    ("S(4231,42513)", [(4, 2, 3, 1), (4, 2, 5, 1, 3)], 2549),
    ("S(132,4312)", [(1, 3, 2), (4, 3, 1, 2)], 193),
]


def criterion_11():
    got = {name: pp.count_avoiders_perm(7, pats) for name, pats, _ in PERM_CLAIMS}
    got["Grassmannian"] = pp.count_grassmannian(7)
    want = {name: v for name, _, v in PERM_CLAIMS}
    want["Grassmannian"] = 121
    return Result(11, "permutation cross-counts at n = 7", got == want, {"counts": got})


# ---- 12 ------------------------------------------------------------------

def criterion_12(n=9):
    hists = {j: mask_histogram(n, jobs=j) for j in (1, 4, 16)}
    same = hists[1] == hists[4] == hists[16]
    w = parse_pattern("210,100")
    counts = {j: count_words(n, w, jobs=j) for j in (1, 4, 16)}
    ok = same and len(set(counts.values())) == 1
    return Result(12, "determinism across --jobs 1/4/16", ok, {"n": n, "histograms_equal": same, "counts": counts})


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


def format_line(r: Result) -> str:
    return f"criterion {r.number:2d} [{'PASS' if r.passed else 'FAIL'}] {r.title}"


def run_all():
    return [c() for c in CRITERIA]

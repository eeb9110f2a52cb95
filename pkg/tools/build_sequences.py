"""Regenerate src/invseq/data/sequences.json.

Every entry is computed here by a route that does not count inversion
sequences (permutation brute force, set partitions, lattice paths, trees,
standard formulas), except where noted in its provenance.  `offset` is the
avoidance index n of terms[0]; triangles carry `rows` and a flattened
`terms` list, with `offset` naming the first row.

    python tools/build_sequences.py [--check]
"""

import argparse
import json
import sys
from collections import Counter
from itertools import permutations
from math import comb
from pathlib import Path

from invseq import perm_patterns as pp
from invseq import sequences as sq

OUT = Path(__file__).resolve().parents[1] / "src" / "invseq" / "data" / "sequences.json"
PERM_N = 9


def perm_counts(patterns, upto=PERM_N):
    return [pp.count_avoiders_perm(n, patterns) for n in range(1, upto + 1)]


def set_partitions(n):
    """Restricted growth strings of length n."""
    if n == 0:
        yield ()
        return
    word = [0]

    def rec(top):
        if len(word) == n:
            yield tuple(word)
            return
        for b in range(top + 2):
            word.append(b)
            yield from rec(max(top, b))
            word.pop()

    yield from rec(0)


def _arcs(rgs):
    blocks = {}
    for i, b in enumerate(rgs, 1):
        blocks.setdefault(b, []).append(i)
    out = []
    for bl in blocks.values():
        if len(bl) == 1:
            out.append((bl[0], bl[0]))
        out.extend(zip(bl, bl[1:]))
    return out


def enhanced_3_crossing(rgs):
    a = _arcs(rgs)
    return any(x[0] < y[0] < z[0] <= x[1] < y[1] < z[1] for x in a for y in a for z in a)


def tree_049125(count):
    """Ordered trees in which every internal node is adjacent to at most one
    leaf.  T counts planted subtrees: T = (1/(1-xT) - 1) + x/(1-xT)^2, and
    the whole count is 1/(1 - x - xT)."""
    order = count
    x = sq.ps_trunc([0, 1], order)
    one = sq.ps_trunc([1], order)
    t = [0] * (order + 1)
    for _ in range(order + 3):
        g = sq.ps_inv(sq.ps_add(one, sq.ps_scale(sq.ps_mul(x, t, order), -1)), order)
        t = sq._tidy(sq.ps_add(g, sq.ps_scale(one, -1), sq.ps_mul(x, sq.ps_mul(g, g, order), order)))
    total = sq.ps_inv(sq.ps_add(one, sq.ps_scale(x, -1), sq.ps_scale(sq.ps_mul(x, t, order), -1)), order)
    return sq._tidy(total)[:count]


def lattice_071356(count):
    """Underdiagonal paths from (0,0) to the line x = n with steps
    (1,0), (0,1), (1,2), staying in y <= x."""
    out = []
    for n in range(count):
        ways = {(0, 0): 1}
        order = sorted(((x, y) for x in range(n + 1) for y in range(x + 1)), key=lambda p: (p[0], p[1]))
        for x, y in order:
            if (x, y) == (0, 0):
                continue
            w = 0
            for dx, dy in ((1, 0), (0, 1), (1, 2)):
                px, py = x - dx, y - dy
                if 0 <= py <= px:
                    w += ways.get((px, py), 0)
            ways[(x, y)] = w
        out.append(sum(ways[(n, y)] for y in range(n + 1)))
    return out


def recurrence_071356(count):
    a = [1]
    while len(a) < count:
        m = len(a)
        a.append(2 * a[m - 1] + 2 * sum(a[i] * a[m - 2 - i] for i in range(m - 1)))
    return a


def schroder_ascent_rows(rows):
    """Row n: Schroder paths of semilength n by number of ascents."""
    out = []
    for n in range(rows):
        res = Counter()

        def rec(x, y, asc, up):
            if x == 2 * n:
                if y == 0:
                    res[asc] += 1
                return
            rec(x + 1, y + 1, asc + (not up), True)
            if y > 0:
                rec(x + 1, y - 1, asc, False)
            if x + 2 <= 2 * n:
                rec(x + 2, y, asc, False)

        if n == 0:
            res[0] = 1
        else:
            rec(0, 0, 0, False)
        out.append([res[k] for k in range(n + 1)])
    return out


def descents_123_rows(rows):
    """Row n: 123-avoiding permutations of [n] with k descents, k = 0..n-1."""
    out = []
    for n in range(1, rows + 1):
        c = Counter(len(pp.descents(p)) for p in pp.iter_avoiders_perm(n, [(1, 2, 3)]))
        out.append([c[k] for k in range(n)])
    return out


def big_blocks_rows(rows):
    """Row n: set partitions of [n] by number of blocks of size > 1."""
    out = []
    for n in range(1, rows + 1):
        c = Counter()
        for p in set_partitions(n):
            sizes = Counter(p)
            c[sum(1 for s in sizes.values() if s > 1)] += 1
        out.append([c[k] for k in range(n // 2 + 1)])
    return out


def ballot_rows(rows):
    return [[comb(n - 1 + k, k) * (n - k) // n for k in range(n)] for n in range(1, rows + 1)]


def formula_2549(count):
    return [sq._class2549(n) for n in range(1, count + 1)]


def agree(name, *routes):
    k = min(len(r) for r in routes)
    first = routes[0][:k]
    for r in routes[1:]:
        if r[:k] != first:
            raise SystemExit(f"{name}: routes disagree\n{first}\n{r[:k]}")


def entry(oeis, description, offset, terms, provenance, rows=None):
    e = {"id": oeis, "description": description, "offset": offset, "terms": list(terms),
         "provenance": provenance}
    if rows is not None:
        e["rows"] = rows
    return e


def build():
    N = 14
    out = []
    r = lambda f: [f(n) for n in range(1, N + 1)]

    out.append(entry("A000045", "Fibonacci numbers, a_n = F_{n+1}", 1, r(lambda n: sq.fibonacci(n + 1)),
                     "standard recurrence"))
    out.append(entry("A000071", "F_{n+2} - 1", 1, r(lambda n: sq.fibonacci(n + 2) - 1), "standard recurrence"))
    out.append(entry("A000079", "powers of 2, a_n = 2^{n-1}", 1, r(lambda n: 2 ** (n - 1)), "formula"))
    cat = [sq.catalan(n) for n in range(N + 1)]
    agree("catalan", cat[1:10], perm_counts([(2, 1, 3)]))
    out.append(entry("A000108", "Catalan numbers C_n", 0, cat,
                     "binomial formula; S_n(213) permutation count agrees for n <= 9"))
    bell = sq.bell_numbers(N + 1)
    agree("bell", bell[1:9], [sum(1 for _ in set_partitions(n)) for n in range(1, 9)],
          perm_counts([pp.FOUR_BAR132], 7))
    out.append(entry("A000110", "Bell numbers B_n", 0, bell,
                     "Bell triangle; set-partition enumeration n <= 8; 4bar132 permutations n <= 7"))
    euler = sq.euler_zigzag(N + 2)
    agree("euler", euler[2:11],
          [sum(1 for p in permutations(range(1, n + 2))
               if all((p[i] < p[i + 1]) == (i % 2 == 0) for i in range(n))) for n in range(1, 8)])
    out.append(entry("A000111", "Euler up/down numbers E_m; a_n = E_{n+1}", -1, euler,
                     "Entringer triangle; alternating permutations of [n+1] agree for n <= 7"))
    out.append(entry("A000124", "lazy caterer numbers C(n,2) + 1", 1, r(lambda n: comb(n, 2) + 1), "formula"))
    grass = [2 ** n - n for n in range(N + 1)]
    agree("grassmannian", grass[1:10], [pp.count_grassmannian(n) for n in range(1, 10)])
    out.append(entry("A000325", "2^n - n, Grassmannian permutations", 0, grass,
                     "formula; permutations with at most one descent agree for n <= 9"))
    out.append(entry("A000984", "central binomial coefficients; a_n = C(2n-2, n-1)", 1,
                     r(lambda n: comb(2 * n - 2, n - 1)), "formula"))
    bax = [sq.baxter(n) for n in range(N + 1)]
    agree("baxter", bax[1:9], perm_counts(list(pp.BAXTER_PAIR), 8))
    out.append(entry("A001181", "Baxter numbers", 0, bax,
                     "triple-binomial formula; vincular 3[14]2, 2[41]3 permutation count agrees for n <= 8"))
    out.append(entry("A001519", "F_{2n-1}", 0, [1] + r(lambda n: sq.fibonacci(2 * n - 1)), "standard recurrence"))
    out.append(entry("A004275", "2(n-1) for n > 1", 1, r(lambda n: 1 if n == 1 else 2 * (n - 1)), "formula"))
    c193 = r(lambda n: 1 if n == 1 else (n - 1) * 2 ** (n - 2) + 1)
    agree("193", c193, perm_counts([(1, 3, 2), (4, 3, 1, 2)]))
    out.append(entry("A005183", "n 2^{n-1} + 1 shifted; a_n = (n-1)2^{n-2} + 1", 1, c193,
                     "formula; S_n(132,4312) permutation count agrees for n <= 9"))
    schr = [sq.large_schroder(n) for n in range(N + 1)]
    agree("schroder", schr[:9], perm_counts([(2, 1, 3, 4), (2, 1, 4, 3)]))
    out.append(entry("A006318", "large Schroder numbers R_m; a_n = R_{n-1}", 1, schr,
                     "standard recurrence; S_n(2134,2143) permutation count agrees for n <= 9"))
    p1265 = perm_counts([(2, 1, 4, 3), (3, 1, 4, 2), (4, 1, 3, 2)])
    out.append(entry("A033321", "S_n(2143,3142,4132)", 1, p1265, "permutation brute force, n <= 9"))
    p151 = perm_counts([(3, 2, 1), (2, 4, 1, 3), (3, 1, 4, 2)])
    agree("151", p151, sq.known_sequence("class151", 9))
    out.append(entry("A034943", "321-avoiding separable permutations", 1, p151,
                     "permutation brute force S_n(321,2413,3142), n <= 9; recurrence agrees"))
    nexus = r(lambda n: sum(sq.nexus_T(n, k) for k in range(1, n + 1)))
    agree("nexus", nexus, perm_counts([pp.BAR3BAR1542], 7))
    out.append(entry("A047970", "nexus numbers, row sums of (n+1-k)^k - (n-k)^k", 1, nexus,
                     "formula; bar3bar1542 permutation count agrees for n <= 7"))
    t187 = tree_049125(N + 1)
    out.append(entry("A049125", "ordered trees whose internal nodes are adjacent to at most one leaf", 0, t187,
                     "tree functional equation expanded exactly"))
    lat = lattice_071356(N)
    agree("071356", lat, recurrence_071356(N))
    out.append(entry("A071356", "underdiagonal lattice paths with steps (1,0), (0,1), (1,2)", 1, lat,
                     "lattice path dynamic program; series recurrence agrees"))
    p185 = perm_counts([(3, 2, 1), (2, 1, 4, 3)])
    agree("185", p185, sq.known_sequence("class185", 9))
    out.append(entry("A088921", "S_n(321,2143)", 1, p185, "permutation brute force, n <= 9; formula agrees"))
    p2549 = perm_counts([(4, 2, 3, 1), (4, 2, 5, 1, 3)])
    agree("2549", p2549, formula_2549(9))
    out.append(entry("A098746", "S_n(4231,42513)", 1, formula_2549(N),
                     "sum formula; permutation brute force agrees for n <= 9"))
    p1347 = perm_counts([(4, 1, 2, 3), (4, 1, 3, 2), (4, 2, 1, 3)])
    out.append(entry("A106228", "S_n(4123,4132,4213)", 1, p1347, "permutation brute force, n <= 9"))
    enh = [sum(1 for p in set_partitions(n) if not enhanced_3_crossing(p)) for n in range(1, 10)]
    out.append(entry("A108307", "set partitions avoiding enhanced 3-crossings", 1, enh,
                     "set-partition brute force, n <= 9"))
    p3207 = perm_counts([pp.GAPPED_1234])
    agree("3207", p3207, sq.known_sequence("class3207", 9))
    out.append(entry("A113227", "S_n(1-23-4)", 1, p3207,
                     "vincular permutation brute force, n <= 9; Callan triangle agrees"))
    p2958 = perm_counts([pp.SEMI_BAXTER])
    agree("2958", p2958, sq.omega_semi_level_counts(9), perm_counts([pp.PLANE], 7))
    out.append(entry("A117106", "semi-Baxter numbers", 1, p2958,
                     "vincular 2[41]3 permutation brute force, n <= 9; plane permutations n <= 7 "
                     "and the succession rule agree"))
    bb = big_blocks_rows(9)
    out.append(entry("A124323", "set partitions of [n] by blocks of size > 1 (triangle)", 1,
                     [x for row in bb for x in row], "set-partition brute force, rows n <= 9", rows=bb))
    d123 = descents_123_rows(9)
    out.append(entry("A166073", "123-avoiding permutations by descents (triangle)", 1,
                     [x for row in d123 for x in row], "permutation brute force, rows n <= 9", rows=d123))
    a200753 = sq.series_solve("A200753", N)
    out.append(entry("A200753", "[x^n] A, A = 1 + (x - x^2) A^3", 0, a200753,
                     "functional equation expanded exactly"))
    p3720 = perm_counts([pp.MarkedMesh(0, 2, 0, 2)])
    out.append(entry("A212198", "permutations avoiding MMP(0,2,0,2)", 1, p3720,
                     "marked mesh permutation brute force, n <= 9"))
    s304 = r(lambda n: sum(sq.s_triangle_304(n, k) for k in range(1, n + 1)))
    out.append(entry("A229046", "row sums of s(n,k) = (n-k+1)s(n-1,k-1) + (n-k)s(n-2,k-1)", 1, s304,
                     "NOT independent: no offline source; generated from the s(n,k) recurrence"))
    sch = schroder_ascent_rows(10)
    out.append(entry("A090981", "Schroder paths of semilength n by ascents (triangle)", 0,
                     [x for row in sch for x in row], "path enumeration, rows n <= 9", rows=sch))
    ball = ballot_rows(10)
    out.append(entry("A009766", "Catalan triangle C(n-1+k,k)(n-k)/n, row n (triangle)", 1,
                     [x for row in ball for x in row], "ballot formula, rows n <= 10", rows=ball))

    table3 = json.loads((OUT.parent / "tables" / "table3.json").read_text())
    seen = set()
    for row in table3:
        if row["oeis"] and row["oeis"] not in seen:
            seen.add(row["oeis"])
            out.append(entry(row["oeis"], f"avoidance sequence of class {row['label']}", 1, row["terms"],
                             "printed initial terms a_1..a_9"))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true", help="compare with the bundled file instead of writing")
    args = ap.parse_args(argv)
    data = build()
    text = json.dumps(data, indent=1) + "\n"
    if args.check:
        same = OUT.read_text() == text
        print("bundled sequences.json is", "up to date" if same else "STALE")
        return 0 if same else 1
    OUT.write_text(text)
    print(f"wrote {len(data)} entries to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

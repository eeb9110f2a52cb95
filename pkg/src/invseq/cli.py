"""Command-line entry point.  Every command prints one JSON record (or CSV
rows with --format csv) and exits 0 on success, 1 when a verification
fails, 2 on bad input and 3 when a size limit is exceeded."""

import argparse
import csv
import io
import json
import sys
import time
from collections import Counter

from . import acceptance
from . import bijections as bj
from . import sequences as sq
from .avoidance import PatternSyntaxError, count_words, iter_avoiders, mask_to_words, parse_pattern, parse_triple
from .classification import class_label, classification_report, reproduce_table
from .core import STAT_NAMES, statistic

OK, FAILED, USAGE, LIMIT = 0, 1, 2, 3
COUNT_LIMIT = 10
CLASSIFY_LIMIT = 9


class UsageError(Exception):
    pass


class LimitError(Exception):
    pass


def _pattern(args):
    text = args.words if getattr(args, "words", None) else args.pattern
    if not text:
        raise UsageError("give a pattern or --words")
    return text, parse_pattern(text)


def _check_n(n, limit):
    if n < 1:
        raise UsageError("n must be positive")
    if n > limit:
        raise LimitError(f"n = {n} is over the limit {limit}; raise it with --limit")


def cmd_count(args):
    text, words = _pattern(args)
    _check_n(args.n, args.limit or COUNT_LIMIT)
    if args.prefix:
        terms = [count_words(m, words, args.jobs) for m in range(1, args.n + 1)]
        result = {"words": mask_to_words(words), "terms": terms}
    else:
        result = {"words": mask_to_words(words), "n": args.n, "count": count_words(args.n, words, args.jobs)}
    return OK, {"pattern": text, "n": args.n}, result


def cmd_classify(args):
    _check_n(args.max_n, args.limit or CLASSIFY_LIMIT)
    report = classification_report(args.max_n, args.jobs)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=1, sort_keys=True)
        result = {"summary": report["summary"], "out": args.out}
    else:
        result = report
    return OK, {"max_n": args.max_n}, result


def cmd_verify(args):
    if args.bijection:
        if args.bijection not in bj.REGISTRY:
            raise UsageError(f"unknown bijection {args.bijection!r}; known: {', '.join(bj.REGISTRY)}")
        if args.n is None:
            raise UsageError("--bijection needs --n")
        _check_n(args.n, args.limit or COUNT_LIMIT)
        report = bj.verify_bijection(args.bijection, args.n)
        return (OK if report["passed"] else FAILED), {"bijection": args.bijection, "n": args.n}, report
    if args.table:
        if args.table not in ("1", "2", "3"):
            raise UsageError(f"unknown table {args.table!r}; tables are 1, 2, 3")
        report = reproduce_table(int(args.table), args.n, args.jobs)
        if not args.timing:
            report.pop("seconds")
        return (OK if report["passed"] else FAILED), {"table": args.table}, report
    if args.all:
        results = []
        for check in acceptance.CRITERIA:
            r = check()
            print(acceptance.format_line(r) + (f"  {r.note}" if r.note else ""), file=sys.stderr)
            results.append({"criterion": r.number, "title": r.title, "passed": r.passed, "note": r.note,
                            "detail": r.detail, "consistency": [list(c) for c in r.consistency]})
        ok = all(r["passed"] for r in results)
        return (OK if ok else FAILED), {"all": True}, {"criteria": results, "passed": ok}
    raise UsageError("choose one of --bijection, --table, --all")


def cmd_stats(args):
    text, words = _pattern(args)
    _check_n(args.n, args.limit or COUNT_LIMIT)
    names = [args.stat] + ([args.joint] if args.joint else [])
    for s in names:
        if s not in STAT_NAMES:
            raise UsageError(f"unknown statistic {s!r}; known: {', '.join(STAT_NAMES)}")
    hist = Counter()
    for e in iter_avoiders(args.n, words):
        hist[tuple(statistic(e, s) for s in names)] += 1
    keys = sorted(hist)
    if args.joint:
        rows = [{args.stat: k[0], args.joint: k[1], "count": hist[k]} for k in keys]
    else:
        rows = [{args.stat: k[0], "count": hist[k]} for k in keys]
    return OK, {"pattern": text, "n": args.n, "stat": names}, {"histogram": rows, "total": sum(hist.values())}


def cmd_sequence(args):
    if args.name not in sq.REGISTRY:
        raise UsageError(f"unknown sequence {args.name!r}; known: {', '.join(sq.REGISTRY)}")
    if args.count < 1:
        raise UsageError("count must be positive")
    spec = sq.REGISTRY[args.name]
    return OK, {"name": args.name, "count": args.count}, {
        "terms": sq.known_sequence(args.name, args.count), "description": spec.description}


def cmd_fingerprint(args):
    if args.terms:
        try:
            terms = [int(x) for x in args.terms.split(",")]
        except ValueError:
            raise UsageError(f"cannot parse terms {args.terms!r}") from None
        params = {"terms": terms}
    else:
        text, words = _pattern(args)
        _check_n(args.n, args.limit or COUNT_LIMIT)
        terms = [count_words(m, words, args.jobs) for m in range(1, args.n + 1)]
        params = {"pattern": text, "n": args.n}
    try:
        db = sq.load_known_sequences(args.db)
    except OSError as err:
        raise UsageError(f"cannot read sequence database: {err}") from None
    return OK, params, {"terms": terms, "matches": sq.fingerprint(terms, db)}


def cmd_table(args):
    if args.which not in ("1", "2", "3"):
        raise UsageError(f"unknown table {args.which!r}; tables are 1, 2, 3")
    report = reproduce_table(int(args.which), args.n, args.jobs)
    if not args.timing:
        report.pop("seconds")
    return OK, {"table": args.which}, report


def cmd_label(args):
    text, words = _pattern(args)
    try:
        label = class_label(parse_triple(text))
    except PatternSyntaxError:
        raise UsageError("label needs a relation triple") from None
    return OK, {"pattern": text}, {"label": label, "words": mask_to_words(words)}


def build_parser():
    p = argparse.ArgumentParser(prog="invseq", description="Pattern avoidance in inversion sequences.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for counting")
    common.add_argument("--timing", action="store_true", help="include wall time in the output")
    common.add_argument("--limit", type=int, default=None, help="raise the default size limit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="count avoiders of a pattern")
    c.add_argument("pattern", nargs="?")
    c.add_argument("--words", help="comma-separated word patterns instead of a triple")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--prefix", action="store_true", help="print a_1..a_n")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("classify", parents=[common], help="equivalence and Wilf classification")
    c.add_argument("--max-n", type=int, default=9)
    c.add_argument("--out")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("verify", parents=[common], help="check bijections, tables or the acceptance suite")
    c.add_argument("--bijection")
    c.add_argument("--table")
    c.add_argument("--all", action="store_true")
    c.add_argument("--n", type=int, default=None)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("stats", parents=[common], help="statistic histogram over an avoidance class")
    c.add_argument("pattern", nargs="?")
    c.add_argument("--words")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--stat", required=True)
    c.add_argument("--joint")
    c.set_defaults(func=cmd_stats)

    c = sub.add_parser("sequence", parents=[common], help="terms of a registered sequence")
    c.add_argument("name")
    c.add_argument("count", type=int)
    c.set_defaults(func=cmd_sequence)

    c = sub.add_parser("fingerprint", parents=[common], help="match counts against the bundled database")
    c.add_argument("pattern", nargs="?")
    c.add_argument("n", type=int, nargs="?", default=8)
    c.add_argument("--words")
    c.add_argument("--terms", help="comma-separated terms to match directly")
    c.add_argument("--db")
    c.set_defaults(func=cmd_fingerprint)

    c = sub.add_parser("table", parents=[common], help="reproduce a bundled table")
    c.add_argument("which")
    c.add_argument("--n", type=int, default=None)
    c.set_defaults(func=cmd_table)

    c = sub.add_parser("label", parents=[common], help="class label of a relation triple")
    c.add_argument("pattern")
    c.set_defaults(func=cmd_label)
    return p


def _csv_rows(result):
    for key in ("histogram", "rows", "matches", "criteria", "checks"):
        if isinstance(result.get(key), list):
            return result[key]
    if "terms" in result and isinstance(result["terms"], list):
        return [{"n": i, "a_n": t} for i, t in enumerate(result["terms"], 1)]
    return [result]


def render(record, fmt):
    if fmt == "json":
        return json.dumps(record, sort_keys=True)
    rows = _csv_rows(record["results"])
    fields = []
    for r in rows:
        for k in r:
            if k not in fields:
                fields.append(k)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
    return buf.getvalue().rstrip("\n")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return USAGE if exit_.code else OK
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return USAGE
    started = time.perf_counter()
    try:
        status, params, result = args.func(args)
    except (UsageError, PatternSyntaxError, ValueError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE
    except LimitError as err:
        print(f"error: {err}", file=sys.stderr)
        return LIMIT
    record = {"command": args.command, "parameters": params, "results": result, "exit_status": status}
    if args.timing:
        record["seconds"] = round(time.perf_counter() - started, 3)
    print(render(record, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())

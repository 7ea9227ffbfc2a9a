"""Command-line interface: ``lorenz <subcommand> ...``.

Exit codes: 0 on success, 1 on usage errors, 2 on domain errors (the error
class name goes to standard error).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import braid as br
from . import ghys, lyndon, quad, skein, sl2, young
from .errors import DegenerateWord, LorenzError, PeriodicWord


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _lyndon_arg(text: str) -> str:
    word = lyndon.parse_word(text)
    if len(word) < 2 or len(set(word)) < 2:
        raise DegenerateWord(word)
    if lyndon.is_periodic(word):
        raise PeriodicWord(word)
    return lyndon.canonical_rotation(word)


def _emit(payload, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _key_values(payload: dict) -> list[str]:
    return [f"{k}: {payload[k]}" for k in sorted(payload)]


def cmd_enumerate(args) -> None:
    words = lyndon.enumerate_lyndon(args.length)
    if args.minimal:
        words = [w for w in words if len(w) >= 2 and lyndon.is_minimal(w)]
    _emit(words, args.format, words)


def invariants_payload(word: str) -> dict:
    lb = br.lorenz_braid(word)
    bw = br.bw_braid(word)
    completed = young.word_to_completed(word)
    return {
        "word": word,
        "trip": lyndon.trip(word),
        "genus": br.genus(word),
        "braid_index": skein.braid_index(word),
        "lorenz_braid": lb.word_text(),
        "lorenz_strands": lb.strands,
        "bw_braid": bw.word_text(),
        "bw_strands": bw.strands,
        "homfly": str(skein.homfly(word)),
        "jones": str(skein.jones(word)),
        "alexander": str(skein.alexander(word)),
        "minimal": lyndon.is_minimal(word),
        "minimal_form": lyndon.minimal_form(word),
        "diagram": str(completed.diagram),
        "extra_right": completed.extra_right,
        "extra_up": completed.extra_up,
        "knot": ghys.knot_signature(word).name,
    }


def cmd_invariants(args) -> None:
    payload = invariants_payload(_lyndon_arg(args.word))
    _emit(payload, args.format, _key_values(payload))


def cmd_braid(args) -> None:
    word = _lyndon_arg(args.word)
    b = br.bw_braid(word) if args.birman_williams else br.lorenz_braid(word)
    _emit({"strands": b.strands, "word": b.word_text()}, args.format, [str(b)])


_POLYS = {
    "homfly": skein.homfly,
    "jones": skein.jones,
    "alexander": skein.alexander,
    "jrct": lambda w: skein.j_poly(br.bw_braid(w)),
}


def cmd_poly(args) -> None:
    word = _lyndon_arg(args.word)
    text = str(_POLYS[args.kind](word))
    _emit({"kind": args.kind, "word": word, "poly": text}, args.format, [text])


def _diagram_payload(word: str, d: young.CompletedDiagram) -> dict:
    return {
        "word": word,
        "diagram": str(d.diagram),
        "extra_right": d.extra_right,
        "extra_up": d.extra_up,
        "cells": d.diagram.cells,
    }


def cmd_young(args) -> None:
    if args.item.lstrip().startswith("["):
        d = young.CompletedDiagram(young.YoungDiagram.parse(args.item), args.extra_right, args.extra_up)
        payload = _diagram_payload(young.completed_to_word(d), d)
        _emit(payload, args.format, [payload["word"]])
        return
    word = _lyndon_arg(args.item)
    d = young.word_to_completed(word)
    payload = _diagram_payload(word, d)
    _emit(payload, args.format, [f"{d.diagram} extra_right={d.extra_right} extra_up={d.extra_up}"])


def cmd_word(args) -> None:
    args.item = args.partition
    cmd_young(args)


def cmd_classes(args) -> None:
    words = sl2.enumerate_classes_by_trace(args.trace)
    rows = []
    for w in words:
        row = {"word": sl2.format_xy(w), "matrix": str(sl2.word_to_matrix(w))}
        if args.knots:
            row["knot"] = ghys.knot_of_class(w).name
        rows.append(row)
    lines = [" ".join([r["word"], r["matrix"]] + ([r["knot"]] if args.knots else [])) for r in rows]
    _emit(rows, args.format, lines)


def cmd_classgroup(args) -> None:
    g = quad.class_group(args.trace)
    payload = {
        "trace": g.t,
        "order": g.order,
        "invariants": list(g.invariants),
        "identity": sl2.format_xy(g.identity),
        "elements": [
            {"word": sl2.format_xy(w), "coords": list(g.coordinates[w])} for w in g.elements
        ],
        "non_invertible": [sl2.format_xy(w) for w in g.non_invertible],
    }
    structure = " x ".join(f"Z/{n}" for n in g.invariants) or "trivial"
    lines = [f"trace {g.t}: order {g.order}, {structure}"]
    lines += [f"{sl2.format_xy(w):<16} ({','.join(map(str, g.coordinates[w]))})" for w in g.elements]
    lines += [f"{sl2.format_xy(w):<16} not invertible" for w in g.non_invertible]
    _emit(payload, args.format, lines)


def _table_row(job):
    t, w, coords = job
    return ghys.ClassRow(w, t, coords is not None, coords, ghys.knot_of_class(w))


def cmd_ghys_table(args) -> None:
    g = quad.class_group(args.trace)
    jobs = [(args.trace, w, g.coordinates.get(w)) for w in sl2.enumerate_classes_by_trace(args.trace)]
    rows = _map(_table_row, jobs, args.jobs)
    _emit([r.as_dict() for r in rows], args.format, [ghys.format_row(r) for r in rows])


# property sweeps; each returns the number of violations for one word


def _check_inverse(w: str) -> int:
    return 0 if ghys.mirror_check(w) else 1


def _check_transpose(w: str) -> int:
    d = young.word_to_completed(w).diagram
    a = young.invariant_signature(young.diagram_word(d))
    b = young.invariant_signature(young.diagram_word(young.transpose(d)))
    return 0 if a == b else 1


def _check_homogeneity(w: str) -> int:
    b = br.bw_braid(w)
    j = skein.j_poly(b)
    ok = j.weighted_degrees(skein.J_GRADING) == {len(b) - b.strands + 1}
    ok = ok and all(c > 0 for c in j.terms.values())
    ok = ok and skein.j_to_homfly(j) == skein.homfly_of_braid(b)
    return 0 if ok else 1


def _check_roundtrip(w: str) -> int:
    bad = young.completed_to_word(young.word_to_completed(w)) != w
    xy = ghys.lr_to_xy(w)
    bad |= sl2.canonical_class(sl2.word_to_matrix(xy)) != xy
    bad |= br.word_from_permutation(br.lorenz_permutation(w)) != w
    return int(bad)


def random_markov(b: br.MarkedBraid, rng: random.Random, steps: int) -> br.MarkedBraid:
    """Apply ``steps`` random positive Markov moves (cyclic conjugation or stabilization)."""
    for _ in range(steps):
        move = rng.randrange(3)
        if move == 0 and b.word:
            k = rng.randrange(len(b.word))
            b = br.MarkedBraid(b.strands, b.word[k:] + b.word[:k])
        elif move == 1:
            b = br.markov_stabilize(b, "right")
        else:
            b = br.markov_stabilize(b, "left")
    return b


def _check_markov(w: str) -> int:
    rng = random.Random(w)
    reference = skein.homfly(w)
    b = random_markov(br.lorenz_braid(w), rng, 4)
    bad = skein.homfly_of_braid(b) != reference
    bad |= skein.homfly(lyndon.stabilize_left(w)) != reference
    bad |= skein.homfly(lyndon.stabilize_right(w)) != reference
    return int(bad)


CHECKS = {
    "inverse": _check_inverse,
    "transpose": _check_transpose,
    "homogeneity": _check_homogeneity,
    "roundtrip": _check_roundtrip,
    "markov": _check_markov,
}


def _map(fn, items, jobs):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def sweep_words(max_length: int) -> list[str]:
    return [w for n in range(2, max_length + 1) for w in lyndon.enumerate_lyndon(n)]


def cmd_check(args) -> int:
    words = sweep_words(args.max_length)
    violations = sum(_map(CHECKS[args.property], words, args.jobs))
    payload = {"property": args.property, "words": len(words), "violations": violations}
    line = f"{'OK' if violations == 0 else 'FAIL'}: {violations} violations"
    _emit(payload, args.format, [line])
    if violations:
        print("PropertyViolation", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1)

    parser = _Parser(prog="lorenz", description="Lorenz knots, Lyndon words and SL2(Z) classes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", parents=[common], help="list Lyndon words of a given length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--minimal", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("invariants", parents=[common], help="all invariants of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("braid", parents=[common], help="Lorenz or Birman-Williams braid")
    p.add_argument("word")
    p.add_argument("--birman-williams", action="store_true")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("poly", parents=[common], help="knot polynomials")
    p.add_argument("word")
    p.add_argument("--kind", choices=sorted(_POLYS), required=True)
    p.set_defaults(func=cmd_poly)

    for name, dest, func in (("young", "item", cmd_young), ("word", "partition", cmd_word)):
        p = sub.add_parser(name, parents=[common], help="word <-> completed Young diagram")
        p.add_argument(dest)
        p.add_argument("--extra-right", type=int, default=0)
        p.add_argument("--extra-up", type=int, default=0)
        p.set_defaults(func=func)

    p = sub.add_parser("classes", parents=[common], help="SL2(Z) classes of a given trace")
    p.add_argument("--trace", type=int, required=True)
    p.add_argument("--knots", action="store_true")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("classgroup", parents=[common], help="ideal class group of Z[alpha]")
    p.add_argument("--trace", type=int, required=True)
    p.set_defaults(func=cmd_classgroup)

    p = sub.add_parser("ghys-table", parents=[common], help="classes, group coordinates and knots")
    p.add_argument("--trace", type=int, required=True)
    p.set_defaults(func=cmd_ghys_table)

    p = sub.add_parser("check", parents=[common], help="property sweeps")
    p.add_argument("--property", choices=sorted(CHECKS), required=True)
    p.add_argument("--max-length", type=int, required=True)
    p.set_defaults(func=cmd_check)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        code = args.func(args)
    except LorenzError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return code or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

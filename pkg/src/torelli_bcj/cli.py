"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 parse or usage error,
3 validation error, 4 mismatch against a published value.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import assembly as asm
from .bcj import SigmaUndefined, pi0, sigma_word
from .boolean import monomial_indices
from .checks import SUITES, run_suite
from .coinvariants import coinvariants, gl_action_on_boolean, gl_action_on_lambda3, published_expectation
from .symplectic import SpMatrix
from .wordfile import WordParseError, load_word, word_from_json, word_key
from .words import InvalidLetter

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2, 3, 4


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _monomial_names(mask: int, g: int) -> list[str]:
    names = [f"a{i + 1}" for i in range(g)] + [f"b{i + 1}" for i in range(g)]
    return [names[k] for k in monomial_indices(mask)]


def _load(path: str):
    try:
        return load_word(path)
    except OSError as exc:
        raise WordParseError(f"cannot read {path}: {exc.strerror}") from None


def cmd_sigma(args) -> int:
    w = _load(args.path)
    p = sigma_word(w)
    if args.format == "json":
        print(_dump({"genus": w.genus, "monomials": [_monomial_names(m, w.genus) for m in p.sorted_terms()]}))
    else:
        print(p.render())
    return EXIT_OK


def cmd_rohlin(args) -> int:
    w = _load(args.path)
    value = pi0(sigma_word(w))
    if args.format == "json":
        print(_dump({"genus": w.genus, "rohlin": value}))
    else:
        print(value)
    return EXIT_OK


def cmd_coinv(args) -> int:
    g = args.genus
    if not 2 <= g <= 8:
        print(f"error: genus must be in 2..8, got {g}", file=sys.stderr)
        return EXIT_PARSE
    rows = []
    if args.module == "boolean":
        if not 0 <= args.degree <= 2 * g:
            print(f"error: degree must be in 0..{2 * g}", file=sys.stderr)
            return EXIT_PARSE
        for k in range(args.degree + 1):
            res = coinvariants(gl_action_on_boolean(g, k))
            exp_dim, exp_reps = published_expectation(g, k)
            rows.append({
                "module": f"B{k}",
                "dimension": res.dimension,
                "module_dimension": res.module_dimension,
                "representatives": res.representative_labels,
                "expected_dimension": exp_dim,
                "expected_representatives": exp_reps,
            })
    else:
        res = coinvariants(gl_action_on_lambda3(g))
        rows.append({
            "module": "Lambda3",
            "dimension": res.dimension,
            "module_dimension": res.module_dimension,
            "representatives": res.representative_labels,
            "expected_dimension": 0 if g >= 4 else None,
            "expected_representatives": [] if g >= 4 else None,
        })
    mismatches = []
    for r in rows:
        bad = (r["expected_dimension"] is not None and r["dimension"] != r["expected_dimension"]) or (
            r["expected_representatives"] is not None and r["representatives"] != r["expected_representatives"]
        )
        r["matches_published"] = None if r["expected_dimension"] is None else not bad
        if bad:
            mismatches.append(r["module"])
    if args.format == "json":
        print(_dump({"genus": g, "group": "GL", "rows": rows}))
    else:
        for r in rows:
            reps = ", ".join(r["representatives"]) or "-"
            tag = {None: "", True: "  [matches published]", False: "  [MISMATCH]"}[r["matches_published"]]
            print(f"g={g} ({r['module']})_GL dim {r['dimension']} of {r['module_dimension']}: {reps}{tag}")
    if args.assert_paper and mismatches:
        print("published value mismatch: " + ", ".join(mismatches), file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; choose from {', '.join(SUITES + ('all',))}", file=sys.stderr)
        return EXIT_PARSE
    try:
        reports = run_suite(args.suite, args.genus)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    ok = all(r.ok for r in reports)
    if args.format == "json":
        print(_dump({"genus": args.genus, "ok": ok, "suites": [r.as_dict() for r in reports]}))
    else:
        for r in reports:
            for item in r.items:
                print(f"[{'PASS' if item.ok else 'FAIL'}] {r.suite}: {item.name}")
        print("all passed" if ok else "FAILURES")
    return EXIT_OK if ok else EXIT_FAIL


# -- assemble ---------------------------------------------------------------


def _trivialization(spec: dict, g: int) -> asm.TrivializationOracle:
    kind = spec.get("kind", "zero")
    if kind == "zero":
        return asm.TrivializationOracle(g, asm.zero_evaluator)
    if kind == "rohlin":
        return asm.TrivializationOracle(g, asm.rohlin_evaluator)
    if kind == "letter-pair-parity":
        return asm.TrivializationOracle(g, asm.letter_pair_parity)
    if kind == "table":
        values = {k: int(v) for k, v in spec.get("values", {}).items()}
        default = spec.get("default")

        def lookup(w):
            key = word_key(w)
            if key in values:
                return values[key]
            if default is None:
                raise KeyError(f"trivialization table has no entry for {key}")
            return int(default)

        return asm.TrivializationOracle(g, lookup)
    raise ValueError(f"unknown trivialization kind {kind!r}")


def _cocycle(spec: dict, q: asm.TrivializationOracle, g: int) -> asm.CocycleOracle:
    kind = spec.get("kind", "zero")
    if kind == "zero":
        return asm.zero_cocycle(g)
    if kind == "coboundary":
        return asm.coboundary(q, g)
    if kind == "letter-count":
        return asm.CocycleOracle(g, lambda phi, psi: (len(phi) * len(psi)) % 2)
    raise ValueError(f"unknown cocycle kind {kind!r}")


def cmd_assemble(args) -> int:
    try:
        with open(args.samples, encoding="utf-8") as fh:
            sample_obj = json.load(fh)
        with open(args.table, encoding="utf-8") as fh:
            table = json.load(fh)
    except OSError as exc:
        raise WordParseError(f"cannot read input: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise WordParseError(f"invalid JSON: {exc}") from None
    if not isinstance(sample_obj, dict) or not isinstance(table, dict):
        raise WordParseError("sample and table files must be JSON objects")
    g = sample_obj.get("genus")
    if not isinstance(g, int) or g < 2:
        raise WordParseError("sample genus must be an integer >= 2")
    base = asm.Samples.standard(g, n_words=0)
    words = []
    for i, item in enumerate(sample_obj.get("words", [])):
        try:
            words.append(word_from_json({"genus": g, "letters": item.get("letters", [])}))
        except WordParseError as exc:
            raise WordParseError(f"sample word {i}: {exc}") from None
    if "conjugators" in sample_obj:
        try:
            base.conjugators = [SpMatrix(g, m) for m in sample_obj["conjugators"]]
        except (TypeError, ValueError) as exc:
            raise WordParseError(f"conjugator: {exc}") from None
    base.words = words or base.words
    base.stabilize_to = sample_obj.get("stabilize_to", g + 1)

    try:
        q = _trivialization(table.get("trivialization", {}), g)
        C = _cocycle(table.get("cocycle", {}), q, g)
    except ValueError as exc:
        raise WordParseError(str(exc)) from None
    x = table.get("x", 0)
    if not isinstance(x, int) or x < 0:
        raise WordParseError("x must be a nonnegative integer bitmask")

    reports = [asm.check_cocycle_identity(C, base), asm.check_conditions(C, base), asm.check_trivialization(q, C, base)]
    out = {"genus": g, "x": x, "reports": []}
    values = None
    if reports[-1].ok:
        F, rep = asm.assemble(q, x, base, C)
        reports.append(rep)
        reports.append(asm.check_torsor(asm.TrivializationOracle(g, F), base))
        values = asm.evaluate_all(F, base.words)
    out["reports"] = [r.as_dict() for r in reports]
    out["values"] = values
    out["ok"] = all(r.ok for r in reports)
    print(_dump(out))
    return EXIT_OK if out["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="torelli-bcj", description="BCJ homomorphism, Rohlin invariant and coinvariant computations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sigma", help="sigma image of a word file")
    s.add_argument("path")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_sigma)

    s = sub.add_parser("rohlin", help="Rohlin invariant of a word file")
    s.add_argument("path")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_rohlin)

    s = sub.add_parser("coinv", help="GL coinvariants of the Boolean algebra filtration or of Lambda^3")
    s.add_argument("--genus", type=int, default=4)
    s.add_argument("--degree", type=int, default=3)
    s.add_argument("--module", choices=("boolean", "lambda3"), default="boolean")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--assert-paper", action="store_true", help="exit 4 if a published value disagrees")
    s.set_defaults(func=cmd_coinv)

    s = sub.add_parser("verify", help="run identity-check suites")
    s.add_argument("--suite", default="all")
    s.add_argument("--genus", type=int, default=4)
    s.add_argument("--format", choices=("text", "json"), default="json")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("assemble", help="cocycle / trivialization harness on sampled words")
    s.add_argument("samples")
    s.add_argument("table")
    s.set_defaults(func=cmd_assemble)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except WordParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidLetter as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SigmaUndefined as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except KeyError as exc:
        print(f"lookup error: {exc.args[0]}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

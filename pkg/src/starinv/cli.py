"""Command line front end.

Subcommands: gen, classify, invert, verify, table, export-dot. Exit codes
follow a shell-friendly contract: 0 success (and, for invert, the inverse
exists), 3 the requested object does not exist / is out of scope, 2
malformed input, 1 verification failures.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import axioms, oracle
from .axioms import CompositeKind
from .doublestar import (
    CaseKind,
    DoubleStarSpec,
    InvalidSpecError,
    InverseKind,
    OutOfTableScopeError,
    build,
    classify,
    closed_form,
    existence_table,
    to_dot,
)
from .field import GAUSSIAN_CONJUGATION, GAUSSIAN_IDENTITY, RATIONAL
from .generate import UnsatisfiableError, random_spec

_MODES = {
    "rationals": RATIONAL,
    "gaussian-identity": GAUSSIAN_IDENTITY,
    "gaussian-conjugation": GAUSSIAN_CONJUGATION,
}

_CASES = {
    "group": CaseKind.GROUP_INVERTIBLE,
    "group-invertible": CaseKind.GROUP_INVERTIBLE,
    "i": CaseKind.CASE_I,
    "ii": CaseKind.CASE_II,
    "iii": CaseKind.CASE_III,
}

_KINDS = {kind.value.replace("_", "-"): kind for kind in InverseKind}


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_spec(path: str) -> DoubleStarSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise InvalidSpecError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidSpecError(f"{path} is not valid JSON: {exc}") from exc
    return DoubleStarSpec.from_json(payload)


def _cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    spec = random_spec(_CASES[args.case], rng, _MODES[args.mode], args.max_size)
    _emit(json.dumps(spec.to_json(), indent=2) + "\n", args.out)
    return 0


def _cmd_classify(args) -> int:
    label = classify(_load_spec(args.spec))
    _emit(json.dumps(label.to_json()) + "\n", None)
    return 0


def _cmd_invert(args) -> int:
    spec = _load_spec(args.spec)
    report = closed_form(spec, _KINDS[args.kind])
    _emit(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    return 0 if report.exists else 3


def _cmd_table(args) -> int:
    spec = _load_spec(args.spec)
    try:
        rows = existence_table(spec)
    except OutOfTableScopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    payload = {
        "case": classify(spec).to_json(),
        "rows": [
            {
                "kind": row.kind.value,
                "exists": row.exists,
                "criteria": [c.to_json() for c in row.criteria],
            }
            for row in rows
        ],
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _cmd_export_dot(args) -> int:
    spec = _load_spec(args.spec)
    _emit(to_dot(spec), args.out)
    return 0


_COMPOSITES = {
    InverseKind.MPCEP: CompositeKind.MPCEP,
    InverseKind.CEPMP: CompositeKind.CEPMP,
    InverseKind.GDC: CompositeKind.GDC,
    InverseKind.GC: CompositeKind.GC,
}


def _oracle_result(m, kind: InverseKind, label) -> oracle.OracleResult:
    """The definition-driven counterpart of one closed form."""
    if kind is InverseKind.DRAZIN:
        return oracle.OracleResult(True, oracle.drazin_inverse(m))
    if kind is InverseKind.GROUP:
        return oracle.group_inverse(m)
    if kind is InverseKind.MOORE_PENROSE:
        return oracle.moore_penrose(m)
    if kind in (InverseKind.CORE, InverseKind.DUAL_CORE):
        grp = oracle.group_inverse(m)
        mp = oracle.moore_penrose(m)
        if not (grp.exists and mp.exists):
            return oracle.OracleResult(False, None, "missing constituent")
        if kind is InverseKind.CORE:
            return oracle.OracleResult(True, grp.value @ m @ mp.value)
        return oracle.OracleResult(True, mp.value @ m @ grp.value)
    if kind in (InverseKind.CORE_EP, InverseKind.DUAL_CORE_EP):
        dual = kind is InverseKind.DUAL_CORE_EP
        if label.kind is CaseKind.GROUP_INVERTIBLE:
            # index <= 1: the core-EP-type inverse coincides with the
            # core-type one, which requires both constituents
            return _oracle_result(
                m, InverseKind.DUAL_CORE if dual else InverseKind.CORE, label
            )
        return oracle.dual_core_ep(m) if dual else oracle.core_ep(m)
    return oracle.composite(m, _COMPOSITES[kind])


def _axioms_pass(m, kind: InverseKind, value) -> bool:
    if kind in (InverseKind.DRAZIN, InverseKind.GROUP):
        k = oracle.drazin_index(m)
        return bool(axioms.check_drazin(m, value, k))
    if kind is InverseKind.MOORE_PENROSE:
        return bool(axioms.check_penrose(m, value))
    if kind in (
        InverseKind.CORE,
        InverseKind.CORE_EP,
        InverseKind.DUAL_CORE,
        InverseKind.DUAL_CORE_EP,
    ):
        k = oracle.drazin_index(m)
        if kind in (InverseKind.CORE, InverseKind.DUAL_CORE):
            k = max(k, 1)
        dual = kind in (InverseKind.DUAL_CORE, InverseKind.DUAL_CORE_EP)
        return bool(axioms.check_core_ep(m, value, k, dual=dual))
    mp = oracle.moore_penrose(m)
    if kind in (InverseKind.MPCEP, InverseKind.GDC):
        cep = oracle.core_ep(m)
    else:
        cep = oracle.dual_core_ep(m)
    return bool(
        axioms.check_composite(m, value, _COMPOSITES[kind], mp.value, cep.value)
    )


def _cmd_verify(args) -> int:
    spec = _load_spec(args.spec)
    m = build(spec)
    label = classify(spec)
    failures = 0
    for kind in InverseKind:
        report = closed_form(spec, kind)
        try:
            ref = _oracle_result(m, kind, label)
        except oracle.VerificationError:
            ref = None
        if ref is None or report.exists != ref.exists:
            verdict = "FAIL"
        elif not report.exists:
            verdict = "N-A"
        elif report.value != ref.value or not _axioms_pass(m, kind, report.value):
            verdict = "FAIL"
        else:
            verdict = "PASS"
        if verdict == "FAIL":
            failures += 1
        print(f"{kind.value:<14} {verdict}")
    return 0 if failures == 0 else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="starinv",
        description="exact generalized inverses of double star digraph matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a random spec for a case")
    p_gen.add_argument("--case", required=True, choices=sorted(_CASES))
    p_gen.add_argument("--seed", required=True, type=int)
    p_gen.add_argument("--mode", default="rationals", choices=sorted(_MODES))
    p_gen.add_argument("--max-size", type=int, default=4)
    p_gen.add_argument("--out")
    p_gen.set_defaults(fn=_cmd_gen)

    p_classify = sub.add_parser("classify", help="print the case label of a spec")
    p_classify.add_argument("spec")
    p_classify.set_defaults(fn=_cmd_classify)

    p_invert = sub.add_parser("invert", help="evaluate one closed-form inverse")
    p_invert.add_argument("spec")
    p_invert.add_argument("--kind", required=True, choices=sorted(_KINDS))
    p_invert.add_argument("--out")
    p_invert.set_defaults(fn=_cmd_invert)

    p_verify = sub.add_parser(
        "verify", help="check every closed form against axioms and oracles"
    )
    p_verify.add_argument("spec")
    p_verify.set_defaults(fn=_cmd_verify)

    p_table = sub.add_parser("table", help="existence table for cases I and II")
    p_table.add_argument("spec")
    p_table.add_argument("--out")
    p_table.set_defaults(fn=_cmd_table)

    p_dot = sub.add_parser("export-dot", help="DOT text of the weighted digraph")
    p_dot.add_argument("spec")
    p_dot.add_argument("--out")
    p_dot.set_defaults(fn=_cmd_export_dot)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidSpecError, UnsatisfiableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

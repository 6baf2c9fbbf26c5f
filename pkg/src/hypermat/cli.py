"""Command-line front end: parse inputs, run checks, emit deterministic JSON.

Exit codes: 0 when every check passes, 1 when any check fails, 2 on a
parse or usage error.  Reports are byte-identical across runs for fixed
inputs, apart from the elapsed-ms fields.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import acceptance, jsonio
from .acceptance import CheckRecord, _jsonable
from .errors import (
    HypermatError,
    InvalidHyperfieldError,
    InvalidInputError,
    InvalidSubgroupError,
    ResourceLimitError,
    SpecError,
)
from .hmatroid import check_c3prime, check_circuit_axioms, perp_k
from .homs import coset_map, sign_map, valuation_map, validate_homomorphism
from .hyperfields import Hyperfield, check_stringent, validate_axioms
from .jsonio import SCHEMA, VERSION
from .matroids import from_circuits
from .vectorspace import (
    check_budget,
    check_vector_axioms,
    farkas_witness,
    is_perfect,
    vectors_enumerate,
    vectors_generate,
)

DEFAULT_WINDOW = 4
DEFAULT_MAX_GROUND = 7


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypermat",
        description="Exact computations with hyperfields and matroids over them.",
    )
    parser.add_argument("--version", action="version", version=f"hypermat {VERSION}")

    def common(p):
        p.add_argument("--window", type=int, default=None,
                       help="grade window bound (default: HYPERMAT_WINDOW or 4)")
        p.add_argument("--out", help="write the report to this path instead of stdout")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallelism degree (recorded; results are identical)")
        p.add_argument("--max-ground", type=int, default=DEFAULT_MAX_GROUND,
                       help="refuse enumerations over larger ground sets")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-hyperfield", help="validate hyperfield axioms and stringency")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("quotient", help="build a Krasner quotient GF(p)/G")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--subgroup", required=True, help="comma-separated unit labels, e.g. 1,2,4")
    common(p)

    m = sub.add_parser("matroid", help="operations on matroids over hyperfields")
    msub = m.add_subparsers(dest="verb", required=True)

    def mverb(name, **kwargs):
        q = msub.add_parser(name, **kwargs)
        q.add_argument("file")
        common(q)
        return q

    mverb("check", help="validate a circuit signature as an H-matroid")
    mverb("dual", help="emit the dual matroid")
    q = mverb("minor", help="delete or contract one element")
    q.add_argument("--delete", metavar="E")
    q.add_argument("--contract", metavar="E")
    q = mverb("rescale", help="rescale by a nonzero scaling vector")
    q.add_argument("--rho", required=True, help="JSON object element -> entry")
    mverb("residue", help="emit the residue matroid")
    q = mverb("vectors", help="enumerate or generate the windowed vectors")
    q.add_argument("--enumerate", action="store_true")
    q.add_argument("--generate", action="store_true")
    mverb("perfect", help="check all vectors against all covectors")
    mverb("vector-axioms", help="check the vector axioms of the windowed vector set")
    q = mverb("pushforward", help="push the matroid forward along a homomorphism")
    q.add_argument("--hom", choices=("valuation", "sign"), required=True)
    q = mverb("farkas", help="find a partition dichotomy witness")
    q.add_argument("--partition", required=True, help='JSON {"R":[...],"G":[...],"B":[...]}')
    q.add_argument("--weak", action="store_true")

    p = sub.add_parser("suite", help="run the full acceptance battery")
    p.add_argument("--criteria", help="comma-separated criterion numbers (default all)")
    common(p)
    return parser


def _window_of(args) -> int:
    if args.window is not None:
        window = args.window
    else:
        env = os.environ.get("HYPERMAT_WINDOW")
        window = int(env) if env else DEFAULT_WINDOW
    if window < 0:
        raise SpecError(f"window must be >= 0, got {window}")
    return window


def _report(command, window, checks, result=None):
    return {
        "schema": SCHEMA,
        "version": VERSION,
        "command": command,
        "window": window,
        "checks": [c.to_json() for c in checks],
        "result": result,
    }


def _emit(report, out_path) -> int:
    text = jsonio.dumps(report)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(c["status"] == "pass" for c in report["checks"]) else 1


def _timed(check, window, fn):
    t0 = time.perf_counter()
    try:
        witness = fn()
        status, payload = "pass", witness
    except HypermatError as exc:
        status, payload = "fail", {"error": str(exc), "witness": _jsonable(getattr(exc, "witness", None))}
    rec = CheckRecord(check, status, payload, window=window)
    rec.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return rec


def _load_hmatroid(path, max_ground):
    doc = jsonio.load_json(path)
    if not jsonio.is_hmatroid_doc(doc):
        raise SpecError(f"{path}: expected an H-matroid document with a 'hyperfield' key")
    if len(doc.get("ground", [])) > max_ground:
        raise ResourceLimitError(
            f"{path}: ground set exceeds --max-ground {max_ground}"
        )
    return jsonio.hmatroid_from_json(doc, "$")


def cmd_check_hyperfield(args) -> int:
    window = _window_of(args)
    doc = jsonio.load_json(args.file)
    checks = []
    try:
        H = jsonio.hyperfield_from_json(doc, "$")
    except InvalidHyperfieldError as exc:
        checks.append(CheckRecord("axioms", "fail", _jsonable(exc.violations[:3]), window=window))
        report = _report("check-hyperfield", window, checks, None)
        return _emit(report, args.out)
    def run_axioms():
        violations = validate_axioms(H, window)
        if violations:
            raise InvalidHyperfieldError("axioms violated", violations=violations[:3])
        return None
    checks.append(_timed("axioms", window, run_axioms))
    stringent, witness = check_stringent(H, window)
    result = {
        "hyperfield": jsonio.hyperfield_to_json(H),
        "stringent": stringent,
        "stringent_witness": None if witness is None else [
            jsonio.element_to_json(H, w) for w in witness
        ],
    }
    return _emit(_report("check-hyperfield", window, checks, result), args.out)


def cmd_quotient(args) -> int:
    window = _window_of(args)
    try:
        subgroup = [int(s) for s in args.subgroup.split(",") if s]
    except ValueError as exc:
        raise SpecError(f"--subgroup: expected comma-separated integers ({exc})") from exc
    H = Hyperfield.quotient(args.p, subgroup)
    checks = [_timed("axioms", window, lambda: None)]  # construction validates
    f = coset_map(args.p, subgroup)
    def run_hom():
        violations = validate_homomorphism(f, window)
        if violations:
            raise InvalidHyperfieldError("coset map is not a homomorphism", violations=violations[:3])
        return None
    checks.append(_timed("coset-map-homomorphism", window, run_hom))
    stringent, witness = check_stringent(H)
    add_table = {}
    for a in H._elements:
        for b in H._elements:
            key = f"{a},{b}"
            za = H.zero() if a == 0 else H.unit(a)
            zb = H.zero() if b == 0 else H.unit(b)
            s = H.hyperadd(za, zb)
            add_table[key] = sorted(0 if x.is_zero else x.residue for x in s.explicit)
    result = {
        "hyperfield": jsonio.hyperfield_to_json(H),
        "elements": list(H._elements),
        "addition": add_table,
        "stringent": stringent,
        "stringent_witness": None if witness is None else [
            jsonio.element_to_json(H, w) for w in witness
        ],
    }
    return _emit(_report("quotient", window, checks, result), args.out)


def cmd_matroid(args) -> int:
    window = _window_of(args)
    verb = args.verb
    checks = []
    result = None
    if verb == "check":
        doc = jsonio.load_json(args.file)
        if not jsonio.is_hmatroid_doc(doc):
            raise SpecError(f"{args.file}: expected an H-matroid document")
        H = jsonio.hyperfield_from_json(doc.get("hyperfield"), "$.hyperfield")
        ground = tuple(map(str, doc.get("ground", [])))
        from .hmatroid import hmatroid_from_circuits, signature_from_vectors
        vecs = [
            jsonio.hvector_from_json(H, ground, entry, f"$.circuits[{i}]")
            for i, entry in enumerate(doc.get("circuits", []))
        ]
        side = doc.get("side", "left")
        sig = None
        def run_sig():
            nonlocal sig
            sig = signature_from_vectors(H, ground, vecs, side)
            return None
        checks.append(_timed("signature (C0)-(C2)", window, run_sig))
        if sig is not None:
            checks.append(_timed("underlying matroid", window,
                                 lambda: from_circuits(ground, sig.supports) and None))
            M = None
            def run_dual():
                nonlocal M
                M = hmatroid_from_circuits(H, ground, vecs, side)
                return None
            checks.append(_timed("cocircuit synthesis (Theorem 2)", window, run_dual))
            def run_axioms():
                report = check_circuit_axioms(sig)
                if report:
                    raise HypermatError(f"(C3) fails on {len(report)} pairs")
                return None
            checks.append(_timed("modular elimination (C3)", window, run_axioms))
            if M is not None:
                def run_strong():
                    ok, witness = perp_k(M.circuits, M.cocircuits, None)
                    if not ok:
                        raise HypermatError(f"full orthogonality fails: {witness}")
                    return None
                checks.append(_timed("strong duality", window, run_strong))
                result = jsonio.hmatroid_to_json(M)
    elif verb == "dual":
        M = _load_hmatroid(args.file, args.max_ground)
        result = jsonio.hmatroid_to_json(M.dual())
        checks.append(CheckRecord("dual", "pass", None, window=window))
    elif verb == "minor":
        if bool(args.delete) == bool(args.contract):
            raise SpecError("minor needs exactly one of --delete or --contract")
        M = _load_hmatroid(args.file, args.max_ground)
        e = args.delete or args.contract
        if e not in M.ground:
            raise SpecError(f"unknown element {e!r}")
        out = M.delete(e) if args.delete else M.contract(e)
        result = jsonio.hmatroid_to_json(out)
        checks.append(CheckRecord("minor", "pass", None, window=window))
    elif verb == "rescale":
        M = _load_hmatroid(args.file, args.max_ground)
        try:
            rho_doc = json.loads(args.rho)
        except json.JSONDecodeError as exc:
            raise SpecError(f"--rho: invalid JSON ({exc.msg})") from exc
        rho = {
            e: jsonio.element_from_json(M.field, v, f"--rho[{e}]")
            for e, v in rho_doc.items()
        }
        try:
            result = jsonio.hmatroid_to_json(M.rescale(rho))
        except InvalidInputError as exc:
            raise SpecError(f"--rho: {exc}") from exc
        checks.append(CheckRecord("rescale", "pass", None, window=window))
    elif verb == "residue":
        M = _load_hmatroid(args.file, args.max_ground)
        checks.append(_timed("residue construction", window, lambda: None))
        M0 = M.residue_matroid()
        result = jsonio.hmatroid_to_json(M0)
    elif verb == "vectors":
        if args.enumerate == args.generate:
            raise SpecError("vectors needs exactly one of --enumerate or --generate")
        M = _load_hmatroid(args.file, args.max_ground)
        check_budget(M.field, M.ground, window)
        vs = vectors_enumerate(M, window) if args.enumerate else vectors_generate(M, window)
        ordered = sorted(vs, key=lambda v: v.sort_key())
        result = {
            "count": len(ordered),
            "vectors": [jsonio.hvector_to_json(v) for v in ordered],
        }
        checks.append(CheckRecord("vectors", "pass", None, window=window))
    elif verb == "perfect":
        M = _load_hmatroid(args.file, args.max_ground)
        check_budget(M.field, M.ground, window)
        def run():
            ok, witness = is_perfect(M, window)
            if not ok:
                raise HypermatError(f"vector not orthogonal to covector: {witness}")
            return None
        checks.append(_timed("perfection", window, run))
    elif verb == "vector-axioms":
        M = _load_hmatroid(args.file, args.max_ground)
        check_budget(M.field, M.ground, window)
        def run():
            report = check_vector_axioms(vectors_enumerate(M, window), window, M.side)
            if report:
                raise HypermatError(f"vector axioms fail: {len(report)} violations")
            return None
        checks.append(_timed("vector-axioms", window, run))
    elif verb == "pushforward":
        M = _load_hmatroid(args.file, args.max_ground)
        hom = valuation_map(M.field) if args.hom == "valuation" else sign_map(M.field)
        def run():
            nonlocal result
            result = jsonio.hmatroid_to_json(M.push_forward(hom))
            return None
        checks.append(_timed("pushforward", window, run))
    elif verb == "farkas":
        M = _load_hmatroid(args.file, args.max_ground)
        try:
            parts = json.loads(args.partition)
        except json.JSONDecodeError as exc:
            raise SpecError(f"--partition: invalid JSON ({exc.msg})") from exc
        for key in ("R", "G", "B"):
            parts.setdefault(key, [])
        def run():
            nonlocal result
            w = farkas_witness(M, parts, window, weak=args.weak)
            result = {"kind": w.kind, "witness": jsonio.hvector_to_json(w.vec)}
            return None
        checks.append(_timed("farkas", window, run))
    else:
        raise SpecError(f"unknown matroid verb {verb!r}")
    return _emit(_report(f"matroid {verb}", window, checks, result), args.out)


def cmd_suite(args) -> int:
    window = _window_of(args)
    numbers = None
    if args.criteria:
        try:
            numbers = {int(s) for s in args.criteria.split(",") if s}
        except ValueError as exc:
            raise SpecError(f"--criteria: expected comma-separated numbers ({exc})") from exc
        unknown = numbers - set(range(1, len(acceptance.CRITERIA) + 1))
        if unknown:
            raise SpecError(f"--criteria: no such criteria {sorted(unknown)}")
    records = acceptance.run_suite(numbers)
    for rec in records:
        line = f"{rec.status.upper():4} {rec.check}"
        if rec.detail:
            line += f" ({rec.detail})"
        print(line, file=sys.stderr)
    return _emit(_report("suite", window, records), args.out)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check-hyperfield":
            return cmd_check_hyperfield(args)
        if args.command == "quotient":
            return cmd_quotient(args)
        if args.command == "matroid":
            return cmd_matroid(args)
        if args.command == "suite":
            return cmd_suite(args)
        raise SpecError(f"unknown command {args.command!r}")
    except (SpecError, ResourceLimitError, InvalidSubgroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

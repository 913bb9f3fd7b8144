"""Command-line front end.

Exit status: 0 when the computation finished and every checked claim held,
1 when a claim failed (or a computation error occurred), 2 for usage and
input errors.
"""
from __future__ import annotations

import argparse
import sys

from fermat_adjoint import lemmas
from fermat_adjoint.baselocus import base_locus_report, theorem1_check, theorem2_base_check
from fermat_adjoint.core import (
    adjoint_class,
    fundamental_config,
    is_prime,
    make_system,
    to_system,
    validate_config,
)
from fermat_adjoint.errors import AdjointError, ConfigError
from fermat_adjoint.jets import CoordinatePoint, separation_report, separation_sweep, theorem2_separation_check
from fermat_adjoint.report import (
    base_locus_doc,
    header,
    render_text,
    search_doc,
    search_tsv,
    separation_doc,
    theorem2_doc,
    to_json,
)
from fermat_adjoint.search import DEFAULT_TUPLE_CAP, search
from fermat_adjoint.sections import DEFAULT_CAP, count_all_characters, enumerate_basis

OK, CLAIM_FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _sign(text: str):
    if text == "auto":
        return "auto"
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise argparse.ArgumentTypeError("sign must be +1, -1 or auto")


def _config(args):
    if args.weights is None:
        if args.n is not None and args.n != args.p - 2:
            raise UsageError("--weights is required unless n = p - 2")
        if not is_prime(args.p):
            validate_config(args.p, 2, [])  # raises NotPrime
        return fundamental_config(args.p)
    n = args.n if args.n is not None else len(args.weights) - 2
    return validate_config(args.p, n, args.weights)


def _resolve_sign(args, config):
    if args.sign != "auto":
        return args.sign, None
    res = lemmas.resolve_for(config)
    return res.resolved_sign, res


def _emit(args, docs: list[dict]) -> None:
    if args.json:
        for doc in docs:
            print(to_json(doc))
    else:
        print("\n\n".join(render_text(doc) for doc in docs))


def _inputs(args, **extra) -> dict:
    keys = ("p", "n", "weights", "d", "c", "j", "cap")
    out = {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}
    out.update(extra)
    return out


def cmd_validate(args) -> int:
    config = _config(args)
    doc = header("validate", _inputs(args), 0, None)
    del doc["sign_convention"], doc["sign_resolution"]
    doc.update(config.as_dict())
    doc["fundamental"] = config.is_fundamental
    doc["weights_distinct"] = len(set(config.weights)) == len(config.weights)
    _emit(args, [doc])
    return OK


def _system_from_args(args):
    config = _config(args)
    if args.d is None or args.d < 0:
        raise UsageError("--d (nonnegative degree) is required")
    return config, make_system(config, args.d, args.c or 0)


def cmd_basis(args) -> int:
    config, system = _system_from_args(args)
    basis = enumerate_basis(system, cap=args.cap)
    doc = header("basis", _inputs(args), 0, None)
    del doc["sign_convention"], doc["sign_resolution"]
    doc["system"] = system.as_dict()
    doc["count"] = len(basis)
    doc["monomials"] = [str(m) for m in basis]
    _emit(args, [doc])
    return OK


def cmd_count(args) -> int:
    config, system = _system_from_args(args)
    counts = count_all_characters(system)
    doc = header("count", _inputs(args), 0, None)
    del doc["sign_convention"], doc["sign_resolution"]
    doc["system"] = system.as_dict()
    if args.c is None:
        doc["counts"] = counts
        doc["total"] = sum(counts)
    else:
        doc["count"] = counts[system.character]
    _emit(args, [doc])
    return OK


def cmd_baselocus(args) -> int:
    config, system = _system_from_args(args)
    report = base_locus_report(system)
    doc = header("baselocus", _inputs(args), 0, None)
    del doc["sign_convention"], doc["sign_resolution"]
    doc.update(base_locus_doc(report))
    _emit(args, [doc])
    return OK


def cmd_jets(args) -> int:
    config, system = _system_from_args(args)
    basis = enumerate_basis(system, cap=args.cap)
    if args.pair:
        if len(args.pair) != 2:
            raise UsageError("--pair takes exactly two indices")
        reports = [separation_report(basis, CoordinatePoint(*args.pair))]
    else:
        reports = separation_sweep(basis)
    doc = header("jets", _inputs(args, pair=args.pair), 0, None)
    del doc["sign_convention"], doc["sign_resolution"]
    doc["system"] = system.as_dict()
    doc["separation"] = [separation_doc(r) for r in reports]
    _emit(args, [doc])
    return OK


def cmd_theorem1(args) -> int:
    config = fundamental_config(args.p)
    sign, res = _resolve_sign(args, config)
    js = [args.j % args.p] if args.j is not None else list(range(args.p))
    docs, ok = [], True
    for j in js:
        report = theorem1_check(args.p, j)
        jet_system = to_system(config, adjoint_class(args.p - 1, j), sign)
        seps = separation_sweep(enumerate_basis(jet_system, cap=args.cap))
        doc = header("theorem1", {"p": args.p, "j": j}, sign, res)
        doc.update(base_locus_doc(report))
        doc["base_point_count"] = len(report.pair_base_points)
        doc["expected_count"] = (args.p - 1) // 2
        doc["separation_system"] = jet_system.as_dict()
        doc["separation"] = [separation_doc(r) for r in seps]
        claim2 = all(r.predicted_direction in r.zero_columns
                     for r in seps if r.predicted_direction is not None)
        doc["claim_not_very_ample_verified"] = claim2
        ok = ok and report.exact_match and claim2 and doc["base_point_count"] == doc["expected_count"]
        docs.append(doc)
    _emit(args, docs)
    if not ok:
        print("CLAIM FAILED: computed base locus or jets disagree with the stated result", file=sys.stderr)
    return OK if ok else CLAIM_FAILED


def cmd_theorem2(args) -> int:
    if args.weights is None:
        raise UsageError("theorem2 needs --weights")
    config = _config(args)
    sign, res = _resolve_sign(args, config)
    base = theorem2_base_check(config, sign)
    seps = theorem2_separation_check(config, sign, base.report.pair_base_points)
    doc = header("theorem2", _inputs(args), sign, res)
    doc.update(theorem2_doc(base, seps))
    if not base.condition_satisfied:
        doc["status"] = "condition not satisfied"
        ok = True
    else:
        ok = bool(base.report.pair_base_points) and any(r.deficiency >= 1 for r in seps)
        doc["status"] = "verified" if ok else "claim failed"
    _emit(args, [doc])
    if not ok:
        print("CLAIM FAILED: no tangent failure at the base points", file=sys.stderr)
    return OK if ok else CLAIM_FAILED


def cmd_search(args) -> int:
    if args.n is None:
        raise UsageError("search needs --n")
    probe = validate_config(args.p, args.n, range(args.n + 2))
    sign, res = _resolve_sign(args, probe)
    result = search(args.n, args.p, sign, cap=args.cap or DEFAULT_TUPLE_CAP)
    if args.tsv:
        sys.stdout.write(search_tsv(result))
    else:
        doc = header("search", {"n": args.n, "p": args.p}, sign, res)
        doc.update(search_doc(result))
        if result.fundamental:
            doc["notice"] = "p = n + 2: fundamental case, trivially applicable"
        _emit(args, [doc])
    if not result.all_verified:
        bad = [",".join(map(str, t.config.weights)) for t in result.tuples if not t.verified]
        print(f"CLAIM FAILED for {len(bad)} tuple(s): " + " ".join(bad), file=sys.stderr)
        return CLAIM_FAILED
    return OK


def cmd_lemmas(args) -> int:
    bound = args.bound
    primes = [q for q in range(3, 102) if is_prime(q)]
    delta = lemmas.delta_identity_check(bound)
    inv = {q: lemmas.invariance_exponent_check(q) for q in primes}
    doc = header("lemmas", {"bound": bound}, 0, None)
    del doc["sign_convention"], doc["sign_resolution"]
    doc.update({
        "delta_identity": {"bound": bound, "triples": bound * (bound - 1) * (bound - 2), "holds": delta},
        "invariance_exponent": {"primes": primes, "holds": all(inv.values())},
    })
    _emit(args, [doc])
    return OK if delta and all(inv.values()) else CLAIM_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fermat-adjoint", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *, config=True, system=False):
        if config:
            sp.add_argument("--p", type=int, required=True, help="prime modulus")
            sp.add_argument("--n", type=int, help="dimension (default p - 2)")
            sp.add_argument("--weights", type=_int_list, help="comma-separated k_0,...,k_{n+1}")
        if system:
            sp.add_argument("--d", type=int, help="degree")
            sp.add_argument("--c", type=int, help="character mod p")
        sp.add_argument("--json", action="store_true", help="one JSON document per report")
        sp.add_argument("--cap", type=int, default=None, help="enumeration cap")
        sp.add_argument("--sign", type=_sign, default="auto", help="+1, -1 or auto")

    sp = sub.add_parser("validate", help="validate a configuration")
    common(sp)
    sp.set_defaults(func=cmd_validate)
    for name, func in (("basis", cmd_basis), ("count", cmd_count), ("baselocus", cmd_baselocus)):
        sp = sub.add_parser(name)
        common(sp, system=True)
        sp.set_defaults(func=func)
    sp = sub.add_parser("jets", help="1-jet separation at the points x_{a,b}")
    common(sp, system=True)
    sp.add_argument("--pair", type=_int_list, help="a,b (default: all pairs)")
    sp.set_defaults(func=cmd_jets)
    sp = sub.add_parser("theorem1", help="fundamental case base loci and jets")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--j", type=int, help="twist (default: every residue)")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("--sign", type=_sign, default="auto")
    sp.set_defaults(func=cmd_theorem1)
    sp = sub.add_parser("theorem2", help="general case check for one weight tuple")
    common(sp)
    sp.set_defaults(func=cmd_theorem2)
    sp = sub.add_parser("search", help="sweep weight tuples satisfying the congruence")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--tsv", action="store_true")
    sp.add_argument("--cap", type=int, default=None, help="tuple cap (default 10^6)")
    sp.add_argument("--sign", type=_sign, default="auto")
    sp.set_defaults(func=cmd_search)
    sp = sub.add_parser("lemmas", help="sign identity and invariance exponent checks")
    sp.add_argument("--bound", type=int, default=30)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_lemmas)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", None) is None and args.command != "search":
        args.cap = DEFAULT_CAP
    try:
        return args.func(args)
    except (ConfigError, UsageError) as exc:
        print(f"{parser.prog}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE
    except AdjointError as exc:
        print(f"{parser.prog}: computation error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return CLAIM_FAILED


if __name__ == "__main__":
    sys.exit(main())

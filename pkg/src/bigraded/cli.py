"""Command-line front end.

Verbs: build, dims, verify, structconst, parafermion, eval.  JSON goes
to --out or standard output (canonical form: sorted keys, two-space
indent); human-readable tables go to standard error under --verbose.
Exit status is the machine contract: 0 success, 1 a requested check
failed, 2 usage error.  All runs are deterministic; --deterministic is
accepted for explicitness but changes nothing.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .axioms import (
    cartan_diagonal,
    check_axioms,
    check_family_closure,
    check_generation,
    check_identities_sample,
    check_permutation_stability,
    structure_constants,
)
from .families import (
    AlgebraFamily,
    FamilyKind,
    build_basis,
    dimension_profile,
    dimension_profile_measured,
)
from .grading import GradedMatrix, SignRule
from .parafermions import build_system, check_pf, check_pfrel, identify_subspaces

__all__ = ["main", "run"]

FAMILY_NAMES = tuple(k.value for k in FamilyKind)
CHECK_NAMES = (
    "axioms",
    "jacobi",
    "closure",
    "symmetry",
    "generation",
    "cartan",
    "permutation",
    "identities",
)

_SIG_FAMILIES = {"gl", "sl", "so-graded"}


class UsageError(Exception):
    pass


def _emit(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _note(verbose: bool, line: str) -> None:
    if verbose:
        print(line, file=sys.stderr)


def _parse_sig(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError("--sig expects four comma-separated integers p,q,r,s")
    try:
        values = tuple(int(t) for t in parts)
    except ValueError:
        raise UsageError("--sig expects four comma-separated integers p,q,r,s")
    return values


def _family_from_args(args: argparse.Namespace) -> AlgebraFamily:
    name = args.family
    try:
        if name in _SIG_FAMILIES:
            if args.sig is None:
                raise UsageError(f"family {name} requires --sig p,q,r,s")
            if args.n is not None or args.p is not None:
                raise UsageError(f"family {name} takes --sig, not --n/--p")
            return AlgebraFamily(FamilyKind(name), _parse_sig(args.sig))
        if args.sig is not None:
            raise UsageError(f"family {name} takes --n and --p, not --sig")
        if args.n is None or args.p is None:
            raise UsageError(f"family {name} requires --n and --p")
        return AlgebraFamily(FamilyKind(name), (args.n, args.p))
    except ValueError as exc:
        raise UsageError(str(exc))


def _parse_checks(text: str) -> list[str]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names:
        raise UsageError("--checks expects a comma-separated list")
    for name in names:
        if name not in CHECK_NAMES:
            raise UsageError(
                f"unknown check {name!r}; choose from {', '.join(CHECK_NAMES)}"
            )
    return names


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bigraded",
        description="Construct and verify Z2 x Z2-graded matrix Lie algebras.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sign-rule", choices=("gla", "glsa"), default="gla")
    common.add_argument("--out", metavar="PATH", default=None)
    common.add_argument("--verbose", action="store_true")
    common.add_argument(
        "--deterministic",
        action="store_true",
        help="accepted for explicitness; deterministic is the only mode",
    )

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("family", choices=FAMILY_NAMES)
    family.add_argument("--n", type=int, default=None)
    family.add_argument("--p", type=int, default=None)
    family.add_argument("--sig", metavar="p,q,r,s", default=None)

    sub.add_parser("build", parents=[common, family])
    sub.add_parser("dims", parents=[common, family])
    verify = sub.add_parser("verify", parents=[common, family])
    verify.add_argument("--checks", metavar="LIST", default="axioms")
    sub.add_parser("structconst", parents=[common, family])

    pf = sub.add_parser("parafermion", parents=[common])
    pf.add_argument("--n", type=int, required=True)
    pf.add_argument("--q", type=int, required=True)

    ev = sub.add_parser("eval", parents=[common])
    ev.add_argument("op", choices=("bracket", "transpose", "product"))
    ev.add_argument("files", nargs="+", metavar="FILE")
    return parser


def _cmd_build(args) -> int:
    basis = build_basis(_family_from_args(args))
    _emit(basis.to_json(), args.out)
    profile = basis.profile()
    _note(
        args.verbose,
        f"{basis.family.label()}: {len(basis)} elements, "
        f"profile {profile.as_dict()}",
    )
    return 0


def _cmd_dims(args) -> int:
    f = _family_from_args(args)
    formula = dimension_profile(f)
    measured = dimension_profile_measured(f)
    match = formula == measured
    payload = {
        "family": f.descriptor(),
        "formula": formula.as_dict(),
        "measured": measured.as_dict(),
        "match": match,
    }
    _emit(payload, args.out)
    if not match:
        for key in ("d00", "d01", "d10", "d11"):
            fv, mv = formula.as_dict()[key], measured.as_dict()[key]
            if fv != mv:
                print(
                    f"WARN: {f.label()}: closed-form {key} = {fv} "
                    f"but measured {key} = {mv}",
                    file=sys.stderr,
                )
    if args.verbose:
        print(f"{'degree':>8} {'formula':>8} {'measured':>9}", file=sys.stderr)
        for key in ("d00", "d01", "d10", "d11", "total"):
            print(
                f"{key:>8} {formula.as_dict()[key]:>8} "
                f"{measured.as_dict()[key]:>9}",
                file=sys.stderr,
            )
    return 0


def _cmd_verify(args) -> int:
    f = _family_from_args(args)
    rule = SignRule(args.sign_rule)
    checks = _parse_checks(args.checks)
    basis = build_basis(f)
    reports = []
    for name in checks:
        if name == "axioms":
            reports.append(check_axioms(basis, rule))
        elif name in ("jacobi", "symmetry"):
            reports.append(check_axioms(basis, rule, which=(name,)))
        elif name == "closure":
            reports.append(check_axioms(basis, rule, which=("closure",)))
            reports.append(check_family_closure(basis, rule))
        elif name == "generation":
            reports.append(check_generation(basis, rule))
        elif name == "cartan":
            reports.append(cartan_diagonal(basis)[1])
        elif name == "permutation":
            reports.append(check_permutation_stability(basis, rule=rule))
        elif name == "identities":
            reports.append(check_identities_sample(basis))
    passed = all(r.passed for r in reports)
    payload = {
        "family": f.descriptor(),
        "rule": rule.value,
        "reports": [r.to_json() for r in reports],
        "pass": passed,
    }
    _emit(payload, args.out)
    if args.verbose:
        for r in reports:
            status = "ok" if r.passed else "FAIL"
            print(
                f"{r.check:<16} {r.cases:>9} cases  {status}  "
                f"({r.elapsed:.3f}s)",
                file=sys.stderr,
            )
    return 0 if passed else 1


def _cmd_structconst(args) -> int:
    f = _family_from_args(args)
    rule = SignRule(args.sign_rule)
    basis = build_basis(f)
    sc = structure_constants(basis, rule)
    _emit(sc.to_json(), args.out)
    _note(
        args.verbose,
        f"{f.label()}: {len(sc.entries)} nonzero coefficients over "
        f"{sc.basis_size} basis elements",
    )
    return 0


def _cmd_parafermion(args) -> int:
    try:
        system = build_system(args.n, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    pf = check_pf(system)
    if 1 <= args.q <= args.n - 1:
        pfrel = check_pfrel(system)
        pfrel_cases, pfrel_ok = pfrel.cases, pfrel.passed
        pfrel_failures = pfrel.failures
    else:
        pfrel_cases, pfrel_ok = 0, True
        pfrel_failures = []
    spans = identify_subspaces(system)
    passed = pf.passed and pfrel_ok and spans["full"]
    payload = {
        "n": args.n,
        "q": args.q,
        "pf_cases": pf.cases,
        "pfrel_cases": pfrel_cases,
        "pass": passed,
        "subspace_spans": spans["spans"],
    }
    _emit(payload, args.out)
    if args.verbose:
        print(
            f"pf {pf.cases} cases, pfrel {pfrel_cases} cases, "
            f"spans {spans['spans']} vs profile {spans['profile']}",
            file=sys.stderr,
        )
        for fail in (pf.failures + pfrel_failures)[:1]:
            print(f"first failure: {json.dumps(fail, sort_keys=True)}",
                  file=sys.stderr)
    return 0 if passed else 1


def _load_matrix(path: str) -> GradedMatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            return GradedMatrix.from_json(json.load(fh))
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}")
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot load {path}: {exc}")


def _cmd_eval(args) -> int:
    need = 1 if args.op == "transpose" else 2
    if len(args.files) != need:
        raise UsageError(f"eval {args.op} takes exactly {need} input file(s)")
    mats = [_load_matrix(p) for p in args.files]
    rule = SignRule(args.sign_rule)
    if args.op == "transpose":
        result = mats[0].graded_transpose()
    else:
        a, b = mats
        if a.signature != b.signature:
            raise UsageError("signature mismatch between the two inputs")
        result = a.bracket(b, rule) if args.op == "bracket" else a @ b
    _emit(result.to_json(), args.out)
    return 0


_COMMANDS = {
    "build": _cmd_build,
    "dims": _cmd_dims,
    "verify": _cmd_verify,
    "structconst": _cmd_structconst,
    "parafermion": _cmd_parafermion,
    "eval": _cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())

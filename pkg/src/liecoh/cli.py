"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 a guaranteed identity or
assertion failed (always a bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .cohomology import cohomology
from .errors import ContractViolation, InvalidInput
from .exactlin import format_rational, parse_rational
from .liealg import LieAlgebra, Subspace, validate
from .rep import adjoint, trivial, validate_rep
from .serialize import (
    algebra_to_json, cocycle_to_json, dumps, load_algebra, load_module, module_to_json,
    report_to_json, vectors_to_json, verdict_to_json,
)
from .structure import (
    center, codim1_ideal_containing_derived, derived_series, determinant, is_nilpotent,
    is_semisimple, is_solvable, killing, levi, lower_central_series, radical,
)
from .theorems import (
    check_nilpotent_h2, classify, first_whitehead_probe, verify_certificate, verify_dixmier,
    verify_hs_degeneration, verify_kunneth, whitehead_battery,
)

EXIT_OK, EXIT_INVALID, EXIT_CONTRACT = 0, 1, 2


def _algebra(ref: str) -> LieAlgebra:
    """A path to an algebra file, or ``catalog:<name>``."""
    if ref.startswith("catalog:"):
        L = catalog.get(ref[len("catalog:"):]).algebra
    else:
        L = load_algebra(ref)
    bad = validate(L)
    if bad is not None:
        raise InvalidInput(f"not a Lie algebra: {bad}")
    return L


def _module(ref: str | None, L: LieAlgebra, default="trivial"):
    if ref is None:
        return trivial(L) if default == "trivial" else adjoint(L)
    if ref == "trivial":
        return trivial(L)
    if ref == "adjoint":
        return adjoint(L)
    V = load_module(ref, L)
    bad = validate_rep(V)
    if bad is not None:
        raise InvalidInput(f"module action fails the bracket relation at pair {bad}")
    return V


def _vectors_arg(text: str | None, L: LieAlgebra) -> Subspace | None:
    if text is None:
        return None
    try:
        vs = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"bad vector list: {e}") from None
    return Subspace.span(L, [_parse_vector(v, L) for v in vs])


def _parse_vector(v, L: LieAlgebra) -> tuple:
    if isinstance(v, str):
        try:
            v = json.loads(v)
        except json.JSONDecodeError as e:
            raise InvalidInput(f"bad vector: {e}") from None
    if not isinstance(v, list) or len(v) != L.dim:
        raise InvalidInput("vector must list one rational per basis element")
    try:
        return tuple(parse_rational(a) for a in v)
    except ValueError as e:
        raise InvalidInput(f"bad vector: {e}") from None


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(dumps(payload))
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _fmt_vecs(vs) -> str:
    return "[" + ", ".join("(" + ", ".join(format_rational(a) for a in v) + ")" for v in vs) + "]"


# -- subcommands -----------------------------------------------------------

def cmd_validate(args) -> int:
    if args.algebra.startswith("catalog:"):
        L = catalog.get(args.algebra[len("catalog:"):]).algebra
    else:
        L = load_algebra(args.algebra)
    bad = validate(L)
    payload = {"dim": L.dim, "name": L.name, "ok": bad is None,
               "violation": None if bad is None else {"indices": list(bad.indices),
                                                      "kind": bad.kind,
                                                      "value": [format_rational(a) for a in bad.value]}}
    _emit(args, payload, "ok" if bad is None else f"invalid: {bad}")
    return EXIT_OK if bad is None else EXIT_INVALID


def cmd_invariants(args) -> int:
    L = _algebra(args.algebra)
    dec = levi(L)
    kdet = determinant(killing(L).matrix)
    payload = {
        "center": vectors_to_json(center(L).vectors),
        "derived_series_dims": [s.dim for s in derived_series(L)],
        "dim": L.dim,
        "flags": {"nilpotent": is_nilpotent(L), "semisimple": is_semisimple(L),
                  "solvable": is_solvable(L)},
        "killing_det": format_rational(kdet),
        "levi": vectors_to_json(dec.S.vectors),
        "lower_central_series_dims": [s.dim for s in lower_central_series(L)],
        "name": L.name,
        "radical": vectors_to_json(radical(L).vectors),
    }
    text = "\n".join([
        f"algebra {L.name or '?'} (dim {L.dim})",
        f"derived series dims: {payload['derived_series_dims']}",
        f"lower central series dims: {payload['lower_central_series_dims']}",
        f"Killing determinant: {payload['killing_det']}",
        f"radical: {_fmt_vecs(radical(L).vectors)}",
        f"Levi subalgebra: {_fmt_vecs(dec.S.vectors)}",
        "flags: " + ", ".join(f"{k}={v}" for k, v in payload["flags"].items()),
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_cohomology(args) -> int:
    L = _algebra(args.algebra)
    V = _module(args.module, L)
    res = cohomology(L, V, args.n)
    payload = {"degree": res.degree, "dim_B": res.dim_B, "dim_H": res.dim_H, "dim_Z": res.dim_Z,
               "representatives": [cocycle_to_json(r) for r in res.representatives]}
    _emit(args, payload, f"dim H^{args.n} = {res.dim_H}  (dim Z = {res.dim_Z}, dim B = {res.dim_B})")
    return EXIT_OK


def cmd_classify(args) -> int:
    L = _algebra(args.algebra)
    v = classify(L)
    if v.witness is not None and not verify_certificate(L, v.witness):
        raise ContractViolation("witness failed re-verification")
    text = f"case: {v.case}"
    if v.witness is not None:
        w = v.witness
        text += (f"\nwitness: module dim {w.module.dim}, dim H^2 = {w.h2_dim}, "
                 f"provenance {w.provenance}")
    _emit(args, verdict_to_json(v), text)
    return EXIT_OK


def _report_exit(holds: bool) -> int:
    return EXIT_OK if holds else EXIT_CONTRACT


def cmd_verify(args) -> int:
    kind = args.kind
    if kind == "kunneth":
        A, B = _algebra(args.algebra), _algebra(args.other)
        VA, VB = _module(args.module, A), _module(args.module_b, B)
        reports = [verify_kunneth(A, B, VA, VB, n) for n in range(args.max_degree + 1)]
        return _identity_output(args, reports)
    L = _algebra(args.algebra)
    if kind == "dixmier":
        V = _module(args.module, L)
        I = _vectors_arg(args.ideal, L)
        if I is None:
            found = codim1_ideal_containing_derived(L)
            if found is None:
                raise InvalidInput("algebra is perfect: no codimension-1 ideal")
            I, x = found
            x = x.coords
        else:
            if args.x is None:
                raise InvalidInput("--x is required with --ideal")
            x = _parse_vector(args.x, L)
        degrees = [args.n] if args.n is not None else range(1, args.max_degree + 1)
        return _identity_output(args, [verify_dixmier(L, I, x, V, n) for n in degrees])
    if kind == "hs":
        V = _module(args.module, L)
        I = _vectors_arg(args.ideal, L)
        S = _vectors_arg(args.complement, L)
        if I is None or S is None:
            dec = levi(L)
            I = I if I is not None else dec.R
            S = S if S is not None else dec.S
        return _identity_output(args, [verify_hs_degeneration(L, S, I, V, 2 if args.n is None else args.n)])
    if kind == "whitehead":
        extra = [(p, _module(p, L)) for p in args.extra or []]
        rep = whitehead_battery(L, args.max_module_dim, extra)
        payload = {"holds": rep.holds,
                   "modules": [{"dim": r.dim, "h1": r.h1, "h2": r.h2, "name": r.name}
                               for r in rep.rows]}
        text = "\n".join(f"{r.name:>24}  dim {r.dim:>2}  H1 {r.h1}  H2 {r.h2}" for r in rep.rows)
        _emit(args, payload, text + f"\nall vanish: {rep.holds}")
        return _report_exit(rep.holds)
    if kind == "nilpotent-h2":
        rep = check_nilpotent_h2(L)
        payload = {"bound_ge2": {str(k): v for k, v in rep.bound_ge2.items()},
                   "h2": rep.h2, "h_dims": list(rep.h_dims), "holds": rep.holds}
        _emit(args, payload, f"dim H^n(L,K): {list(rep.h_dims)}\nH^2 != 0: {rep.holds}")
        return _report_exit(rep.holds)
    if kind == "h1-probe":
        res = first_whitehead_probe(L, args.max_module_dim)
        payload = {"found": res.found, "h1_dim": res.h1_dim, "name": res.name,
                   "module": module_to_json(res.module) if res.module else None,
                   "cocycle": cocycle_to_json(res.cocycle) if res.cocycle else None,
                   "tried": list(res.tried)}
        text = (f"found {res.name}: dim H^1 = {res.h1_dim}" if res.found
                else f"not found among {len(res.tried)} modules")
        _emit(args, payload, text)
        return EXIT_OK
    raise InvalidInput(f"unknown verifier {kind!r}")


def _identity_output(args, reports) -> int:
    payload = {"holds": all(r.holds for r in reports),
               "reports": [report_to_json(r) for r in reports]}
    text = "\n".join(f"{r.name} n={r.params.get('n')}: {r.lhs} = {r.rhs} "
                     f"{'ok' if r.holds else 'FAILED'}  {r.terms}" for r in reports)
    _emit(args, payload, text)
    return _report_exit(payload["holds"])


def cmd_catalog(args) -> int:
    if args.action == "list":
        names = catalog.list_names()
        _emit(args, {"names": names}, "\n".join(names))
        return EXIT_OK
    if not args.name:
        raise InvalidInput("catalog show needs a name")
    entry = catalog.get(args.name)
    if args.module:
        if args.module not in entry.modules:
            raise InvalidInput(f"{args.name} has no module {args.module!r}")
        sys.stdout.write(dumps(module_to_json(entry.modules[args.module])))
        return EXIT_OK
    if args.expected:
        sys.stdout.write(dumps(entry.expected))
        return EXIT_OK
    # algebra files are always JSON so they can be fed back in
    sys.stdout.write(dumps(algebra_to_json(entry.algebra)))
    return EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="liecoh", description="Exact Lie algebra cohomology tools")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check antisymmetry and Jacobi")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("invariants", parents=[common], help="series, Killing form, radical, Levi")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("cohomology", parents=[common], help="dimension and representatives of H^n")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("algebra")
    s.add_argument("module", nargs="?", help="module file, 'trivial' (default) or 'adjoint'")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("classify", parents=[common], help="2-triviality verdict or witness")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", parents=[common], help="identity checks and batteries")
    s.add_argument("kind", choices=("dixmier", "hs", "kunneth", "whitehead", "nilpotent-h2",
                                    "h1-probe"))
    s.add_argument("algebra")
    s.add_argument("other", nargs="?", help="second algebra (kunneth)")
    s.add_argument("--module", help="module file, 'trivial' or 'adjoint'")
    s.add_argument("--module-b", help="module for the second algebra (kunneth)")
    s.add_argument("--ideal", help="JSON list of vectors spanning the ideal")
    s.add_argument("--complement", help="JSON list of vectors spanning the complement (hs)")
    s.add_argument("--x", help="JSON vector outside the ideal (dixmier)")
    s.add_argument("--extra", action="append", help="extra battery module file (whitehead)")
    s.add_argument("-n", type=int, default=None)
    s.add_argument("--max-degree", type=int, default=3)
    s.add_argument("--max-module-dim", type=int, default=16)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("catalog", parents=[common], help="bundled example algebras")
    s.add_argument("action", choices=("list", "show"))
    s.add_argument("name", nargs="?")
    s.add_argument("--expected", action="store_true", help="show expected values")
    s.add_argument("--module", help="show a bundled module instead of the algebra")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # usage errors are invalid input, not contract failures
        return EXIT_OK if e.code in (0, None) else EXIT_INVALID
    if getattr(args, "n", None) is not None and args.n < 0:
        print("error: -n must be nonnegative", file=sys.stderr)
        return EXIT_INVALID
    if getattr(args, "max_module_dim", 1) < 1:
        print("error: --max-module-dim must be at least 1", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except ContractViolation as e:
        print(f"internal assertion violated: {e}", file=sys.stderr)
        return EXIT_CONTRACT
    except InvalidInput as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: every verification is reachable as a subcommand.

Output is JSON by default (sorted keys, so byte-identical for identical
configuration and seed); series and tables can also be printed as TSV.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from .cyclotomic import CycloNumber
from .dunkl import (
    commutator_check,
    dunkl_apply,
    parameter_embed,
    sample_cherednik_params,
    z_scalar,
)
from .groups import (
    GroupParams,
    SizeCapError,
    conjugacy_classes,
    enumerate_group,
    irrep_count,
    reflection_classes,
    reflections,
)
from .multipartitions import hecke_simple_count, non_kleshchev_list, rho_multipartition
from .polynomials import Poly, grlex_key, monomials_of_degree
from .quotient import (
    bgg_identity_check,
    build_quotient,
    ce_tensor_char,
    character_limit,
    coinvariant_image_check,
    det_ratio_series,
    onedim_module_check,
    quotient_equiv_char,
    quotient_hilbert,
    singular_space_with_retries,
)
from .verification import random_polynomial, run_all_criteria

COMMANDS = (
    "group-info",
    "reflections",
    "classes",
    "irrep-count",
    "kleshchev",
    "hecke-count",
    "dunkl-check",
    "embed-check",
    "zscalar",
    "onedim-check",
    "singular",
    "hilbert",
    "character",
    "bgg-check",
    "tensor-check",
    "coinvariant-check",
    "verify-all",
)


def cyclo_json(c):
    return {"order": c.m, "coeffs": [[q.numerator, q.denominator] for q in c.coeffs]}


def series_json(shift, coeffs):
    out = []
    for c in coeffs:
        if isinstance(c, CycloNumber):
            out.append(cyclo_json(c) if not c.is_rational() else _frac_json(c.to_rational()))
        else:
            out.append(c)
    return {"shift": shift, "coeffs": out}


def _frac_json(q):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else [q.numerator, q.denominator]


def element_json(w):
    return {"perm": [i + 1 for i in w.perm], "exps": list(w.exps)}


def poly_json(f):
    return [
        {"exps": list(e), "coeff": cyclo_json(f.terms[e])}
        for e in sorted(f.terms, key=grlex_key, reverse=True)
    ]


def _params(args):
    try:
        return GroupParams(args.m, args.p, args.n)
    except ValueError as exc:
        _usage_error(str(exc))


def _usage_error(message):
    print(f"usage error: {message}", file=sys.stderr)
    raise SystemExit(2)


def _emit(args, payload, tsv_rows=None):
    if args.format == "tsv":
        if tsv_rows is None:
            _usage_error("this command has no tsv rendering; use --format json")
        for row in tsv_rows:
            print("\t".join(str(x) for x in row))
    else:
        print(json.dumps(payload, sort_keys=True))


def _mp_json(mp):
    return [list(part) for part in mp]


def cmd_group_info(args):
    g = _params(args)
    payload = {
        "m": g.m,
        "p": g.p,
        "n": g.n,
        "d": g.d,
        "order": g.order,
        "reflection_count": g.reflection_count(),
        "reflection_class_count": g.reflection_class_count(),
        "singular_degree": g.r,
        "appendix_regime": g.appendix_regime,
    }
    _emit(args, payload)
    return 0


def cmd_reflections(args):
    g = _params(args)
    refl = reflections(g)
    payload = {
        "count": len(refl),
        "expected": g.reflection_count(),
        "elements": [element_json(w) for w in refl],
    }
    _emit(args, payload, [[tuple(i + 1 for i in w.perm), w.exps] for w in refl])
    return 0 if len(refl) == g.reflection_count() else 1


def cmd_classes(args):
    g = _params(args)
    refl = reflection_classes(g)
    conj = conjugacy_classes(g)
    payload = {
        "reflection_classes": [
            {"size": len(cls), "representative": element_json(cls[0])} for cls in refl
        ],
        "reflection_class_count": len(refl),
        "reflection_class_count_expected": g.reflection_class_count(),
        "conjugacy_class_count": len(conj),
    }
    _emit(args, payload)
    return 0 if len(refl) == g.reflection_class_count() else 1


def cmd_irrep_count(args):
    g = _params(args)
    count = irrep_count(g)
    classes = len(conjugacy_classes(g))
    payload = {"irrep_count": count, "conjugacy_class_count": classes, "match": count == classes}
    _emit(args, payload)
    return 0 if count == classes else 1


def cmd_kleshchev(args):
    g = _params(args)
    bad = non_kleshchev_list(g, args.relation)
    expected = sorted(rho_multipartition(i, g) for i in range(1, g.p + 1))
    payload = {
        "relation": args.relation,
        "non_kleshchev": [_mp_json(mp) for mp in bad],
        "expected": [_mp_json(mp) for mp in expected],
        "match": bad == expected,
    }
    _emit(args, payload)
    return 0 if bad == expected else 1


def cmd_hecke_count(args):
    g = _params(args)
    hecke = hecke_simple_count(g)
    irreps = irrep_count(g)
    payload = {"hecke_simple_count": hecke, "irrep_count": irreps, "match": hecke == irreps - 1}
    _emit(args, payload)
    return 0 if hecke == irreps - 1 else 1


def cmd_dunkl_check(args):
    g = _params(args)
    cp = sample_cherednik_params(g, args.relation, args.seed)
    rng = random.Random(args.seed)
    count = 5 if args.quick else 20
    ok = True
    for _ in range(count):
        f = random_polynomial(g, rng, 6, density=0.3)
        for a in range(1, g.n + 1):
            for b in range(a + 1, g.n + 1):
                if dunkl_apply(g, cp, a, dunkl_apply(g, cp, b, f)) != dunkl_apply(
                    g, cp, b, dunkl_apply(g, cp, a, f)
                ):
                    ok = False
        for a in range(1, g.n + 1):
            for b in range(1, g.n + 1):
                if not commutator_check(g, cp, a, b, f):
                    ok = False
    _emit(args, {"polynomials": count, "passed": ok, "relation": args.relation, "seed": args.seed})
    return 0 if ok else 1


def cmd_embed_check(args):
    g = _params(args)
    cp = sample_cherednik_params(g, args.relation, args.seed)
    ambient, mu = parameter_embed(g, cp)
    top = args.max_degree if args.max_degree is not None else 8
    ok = True
    for k in range(top + 1):
        for e in monomials_of_degree(g.n, k):
            f = Poly.monomial(g.m, g.n, e)
            for a in range(1, g.n + 1):
                if dunkl_apply(g, cp, a, f, "collapsed") != dunkl_apply(ambient, mu, a, f, "collapsed"):
                    ok = False
    payload = {
        "max_degree": top,
        "mu": [[q.numerator, q.denominator] for q in (mu.kappa00,) + mu.kappa],
        "passed": ok,
    }
    _emit(args, payload)
    return 0 if ok else 1


def cmd_zscalar(args):
    g = _params(args)
    cp = sample_cherednik_params(g, args.relation, args.seed)
    rows = []
    ok = True
    table = {}
    for i in range(g.n + 1):
        try:
            value = z_scalar(g, cp, i)
            table[i] = _frac_json(value)
            rows.append([i, value])
        except AssertionError as exc:
            ok = False
            table[i] = str(exc)
    _emit(args, {"relation": args.relation, "scalars": table, "passed": ok}, rows)
    return 0 if ok else 1


def cmd_onedim_check(args):
    g = _params(args)
    cp = sample_cherednik_params(g, args.relation, args.seed)
    passed, table = onedim_module_check(g, cp)
    payload = {
        "relation": args.relation,
        "passed": passed,
        "scalars": {
            f"{a},{b}": (cyclo_json(c) if not c.is_rational() else _frac_json(c.to_rational()))
            for (a, b), c in sorted(table.items())
        },
    }
    _emit(args, payload)
    return 0 if passed == (args.relation == "unit") else 1


def cmd_singular(args):
    g = _params(args)
    cp, space = singular_space_with_retries(g, "main", args.seed)
    reps = [cls[0] for cls in conjugacy_classes(g)]
    table = space.character_matches_dual_reflection(reps)
    payload = {
        "degree": space.degree,
        "dimension": space.dim,
        "basis": [poly_json(f) for f in space.basis()],
        "character_table": [
            {
                "representative": element_json(w),
                "trace": cyclo_json(got),
                "dual_reflection_trace": cyclo_json(want),
                "match": ok,
            }
            for (w, got, want, ok) in table
        ],
        "character_matches_dual_reflection": all(ok for (_, _, _, ok) in table),
    }
    _emit(args, payload)
    return 0


def _built_quotient(args, g):
    cp, space = singular_space_with_retries(g, "main", args.seed)
    return build_quotient(space)


def cmd_hilbert(args):
    g = _params(args)
    q = _built_quotient(args, g)
    shift, dims = quotient_hilbert(q)
    total = sum(dims)
    payload = series_json(shift, dims)
    payload.update({"total": total, "expected_total": g.r**g.n, "match": total == g.r**g.n})
    _emit(args, payload, [[k, c] for k, c in enumerate(dims)])
    return 0 if total == g.r**g.n else 1


def cmd_character(args):
    g = _params(args)
    rows = []
    payload = []
    for cls in conjugacy_classes(g):
        w = cls[0]
        value = character_limit(g, w)
        payload.append(
            {
                "representative": element_json(w),
                "class_size": len(cls),
                "fixed_space_dim": w.fixed_space_dim(),
                "value": value,
            }
        )
        rows.append([tuple(i + 1 for i in w.perm), w.exps, len(cls), value])
    _emit(args, {"base": g.r, "classes": payload}, rows)
    return 0


def cmd_bgg_check(args):
    g = _params(args)
    results = {repr(cls[0]): bgg_identity_check(g, cls[0]) for cls in conjugacy_classes(g)}
    ok = all(results.values())
    _emit(args, {"passed": ok, "classes": len(results)})
    return 0 if ok else 1


def cmd_tensor_check(args):
    g = _params(args)
    q = _built_quotient(args, g)
    mismatches = []
    for cls in conjugacy_classes(g):
        w = cls[0]
        if quotient_equiv_char(q, w) != ce_tensor_char(g, w, q.top + 1):
            mismatches.append(element_json(w))
    _emit(args, {"passed": not mismatches, "mismatches": mismatches})
    return 0 if not mismatches else 1


def cmd_coinvariant_check(args):
    g = _params(args)
    q = _built_quotient(args, g)
    report = coinvariant_image_check(q)
    payload = {
        "passed": report.passed,
        "lowest_degree": report.lowest_degree,
        "isotype_degrees": {str(k): v for k, v in report.isotype_degrees.items()},
        "image_dims": report.image_dims,
        "expected_dims": report.expected_dims,
        "image_dimension": sum(report.image_dims),
        "group_order": g.order,
        "failures": report.failures,
    }
    _emit(args, payload)
    return 0 if report.passed else 1


def cmd_verify_all(args):
    g = _params(args)
    results = run_all_criteria(g, args.seed)
    for res in results:
        print(res.line(), file=sys.stderr)
    payload = [
        {
            "criterion": res.number,
            "name": res.name,
            "passed": res.passed,
            "within_budget": res.within_budget,
            "seconds": round(res.seconds, 3),
            "details": _jsonable(res.details),
        }
        for res in results
    ]
    _emit(args, payload)
    return 0 if all(res.ok for res in results) else 1


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return _frac_json(value)
    if isinstance(value, CycloNumber):
        return cyclo_json(value)
    return value


HANDLERS = {
    "group-info": cmd_group_info,
    "reflections": cmd_reflections,
    "classes": cmd_classes,
    "irrep-count": cmd_irrep_count,
    "kleshchev": cmd_kleshchev,
    "hecke-count": cmd_hecke_count,
    "dunkl-check": cmd_dunkl_check,
    "embed-check": cmd_embed_check,
    "zscalar": cmd_zscalar,
    "onedim-check": cmd_onedim_check,
    "singular": cmd_singular,
    "hilbert": cmd_hilbert,
    "character": cmd_character,
    "bgg-check": cmd_bgg_check,
    "tensor-check": cmd_tensor_check,
    "coinvariant-check": cmd_coinvariant_check,
    "verify-all": cmd_verify_all,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cherednik-lab",
        description="Exact verification suite for the reflection groups G(m,p,n), "
        "their Dunkl operators and the finite lowest-weight quotient.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--m", type=int, required=True)
        cmd.add_argument("--p", type=int, required=True)
        cmd.add_argument("--n", type=int, required=True)
        cmd.add_argument("--relation", choices=("none", "unit", "main"), default="main")
        cmd.add_argument("--seed", type=int, default=0, help="64-bit seed for parameter sampling")
        cmd.add_argument("--max-degree", type=int, default=None)
        cmd.add_argument("--format", choices=("json", "tsv"), default="json")
        cmd.add_argument("--quick", action="store_true", help="smaller sample sizes")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except SizeCapError as exc:
        _usage_error(str(exc))
    except ValueError as exc:
        _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())

"""Runners for the acceptance checks, shared by the CLI and the test suite.

Each runner returns a CriterionResult with the exact values it compared, so
failures are inspectable.  The stated runtime budgets are part of the
checks and are asserted against the measured wall time.
"""

import random
import time
from dataclasses import dataclass, field

from .cyclotomic import CycloNumber
from .dunkl import (
    commutator_check,
    dunkl_apply,
    parameter_embed,
    sample_cherednik_params,
    z_scalar,
)
from .groups import conjugacy_classes, enumerate_group, irrep_count, reflection_classes, reflections
from .multipartitions import hecke_simple_count, non_kleshchev_list, rho_multipartition
from .polynomials import Poly, monomials_of_degree
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

__all__ = ["CriterionResult", "run_all_criteria", "CRITERION_NAMES", "random_polynomial", "expected_hilbert"]

CRITERION_NAMES = {
    1: "group facts",
    2: "non-Kleshchev set",
    3: "Hecke simple count",
    4: "Dunkl engine",
    5: "parameter embedding",
    6: "one-dimensional module",
    7: "central element scalars",
    8: "singular space",
    9: "quotient dimension and Hilbert series",
    10: "equivariant character vs determinant ratio",
    11: "alternating-sum determinant identity",
    12: "tensor model character",
    13: "coinvariant image",
}

BUDGETS = {1: 5, 2: 10, 3: 10, 4: 60, 5: 60, 6: 5, 7: 5, 8: 120, 9: 600, 10: 120, 11: 5, 12: 60, 13: 120}


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    budget: float
    details: dict = field(default_factory=dict)

    @property
    def within_budget(self):
        return self.seconds < self.budget

    @property
    def ok(self):
        return self.passed and self.within_budget

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        return f"criterion {self.number:2d} [{status}] {self.name} ({self.seconds:.2f}s)"


def random_polynomial(params, rng, max_degree, density=0.5):
    """Seeded random polynomial with small integer coefficients."""
    f = Poly.zero(params.m, params.n)
    for k in range(max_degree + 1):
        for e in monomials_of_degree(params.n, k):
            if rng.random() < density:
                c = rng.randint(-9, 9)
                if c:
                    f = f + Poly.monomial(params.m, params.n, e, c)
    return f


def expected_hilbert(params):
    """Coefficients of ((1 - t^r)/(1 - t))^n."""
    coeffs = [1]
    for _ in range(params.n):
        out = [0] * (len(coeffs) + params.r - 1)
        for i, c in enumerate(coeffs):
            for j in range(params.r):
                out[i + j] += c
        coeffs = out
    return coeffs


def _result(number, passed, t0, details):
    return CriterionResult(
        number,
        CRITERION_NAMES[number],
        passed,
        time.time() - t0,
        BUDGETS[number],
        details,
    )


def criterion_1(params):
    t0 = time.time()
    order = len(enumerate_group(params))
    n_refl = len(reflections(params))
    n_classes = len(reflection_classes(params))
    details = {
        "order": order,
        "order_expected": params.order,
        "reflections": n_refl,
        "reflections_expected": params.reflection_count(),
        "reflection_classes": n_classes,
        "reflection_classes_expected": params.reflection_class_count(),
    }
    passed = (
        order == params.order
        and n_refl == params.reflection_count()
        and n_classes == params.reflection_class_count()
    )
    return _result(1, passed, t0, details)


def criterion_2(params, seeds=(0, 1, 2)):
    t0 = time.time()
    expected = sorted(rho_multipartition(i, params) for i in range(1, params.p + 1))
    runs = {}
    for seed in seeds:
        # residues are symbolic, so the classifier is seed-independent; the
        # repetition documents that no resampling is hiding a failure
        runs[seed] = non_kleshchev_list(params, "main")
    passed = all(got == expected for got in runs.values())
    return _result(2, passed, t0, {"expected": expected, "runs": {s: len(v) for s, v in runs.items()}})


def criterion_3(params):
    t0 = time.time()
    hecke = hecke_simple_count(params)
    irreps = irrep_count(params)
    classes = len(conjugacy_classes(params))
    passed = hecke == irreps - 1 == classes - 1
    return _result(3, passed, t0, {"hecke": hecke, "irreps": irreps, "classes": classes})


def criterion_4(params, seed=0, count=20, max_degree=6):
    t0 = time.time()
    rng = random.Random(seed)
    cp = sample_cherednik_params(params, "main", seed)
    n = params.n
    passed = True
    for _ in range(count):
        f = random_polynomial(params, rng, max_degree, density=0.3)
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                ta_tb = dunkl_apply(params, cp, a, dunkl_apply(params, cp, b, f))
                tb_ta = dunkl_apply(params, cp, b, dunkl_apply(params, cp, a, f))
                if ta_tb != tb_ta:
                    passed = False
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if not commutator_check(params, cp, a, b, f):
                    passed = False
    return _result(4, passed, t0, {"polynomials": count, "max_degree": max_degree})


def criterion_5(params, seed=0, max_degree=8):
    t0 = time.time()
    cp = sample_cherednik_params(params, "main", seed)
    ambient, mu = parameter_embed(params, cp)
    passed = True
    for k in range(max_degree + 1):
        for e in monomials_of_degree(params.n, k):
            f = Poly.monomial(params.m, params.n, e)
            for a in range(1, params.n + 1):
                small = dunkl_apply(params, cp, a, f, "collapsed")
                big = dunkl_apply(ambient, mu, a, f, "collapsed")
                if small != big:
                    passed = False
    return _result(5, passed, t0, {"max_degree": max_degree})


def criterion_6(params, seeds=(0, 1, 2)):
    t0 = time.time()
    passed = True
    for seed in seeds:
        ok_unit, _ = onedim_module_check(params, sample_cherednik_params(params, "unit", seed))
        ok_main, _ = onedim_module_check(params, sample_cherednik_params(params, "main", seed))
        if not ok_unit or ok_main:
            passed = False
    return _result(6, passed, t0, {"seeds": list(seeds)})


def criterion_7(params, seed=0):
    t0 = time.time()
    passed = True
    values = {}
    for relation in ("unit", "main"):
        cp = sample_cherednik_params(params, relation, seed)
        try:
            values[relation] = [str(z_scalar(params, cp, i)) for i in range(params.n + 1)]
        except AssertionError as exc:
            passed = False
            values[relation] = str(exc)
    return _result(7, passed, t0, {"values": values})


def criterion_8(params, seeds=(0, 1, 2), class_data=None):
    t0 = time.time()
    if class_data is None:
        class_data = conjugacy_classes(params)
    reps = [cls[0] for cls in class_data]
    dims_ok = True
    mismatch_classes = []
    for seed in seeds:
        cp, space = singular_space_with_retries(params, "main", seed)
        if space.dim != params.n or space.degree != params.r:
            dims_ok = False
        mismatches = [
            repr(w) for (w, got, want, ok) in space.character_matches_dual_reflection(reps) if not ok
        ]
        mismatch_classes.append(mismatches)
    char_ok = all(not bad for bad in mismatch_classes)
    details = {
        "degree": params.r,
        "dimension_ok": dims_ok,
        "character_mismatch_classes": mismatch_classes[0],
    }
    return _result(8, dims_ok and char_ok, t0, details)


def criterion_9(params, seed=0, quotient=None):
    """Builds the quotient when one is not supplied; the build time counts
    against this criterion's budget."""
    t0 = time.time()
    if quotient is None:
        _, space = singular_space_with_retries(params, "main", seed)
        quotient = build_quotient(space)
    shift, dims = quotient_hilbert(quotient)
    expected = expected_hilbert(params)
    total = sum(dims)
    passed = (
        dims == expected
        and total == params.r**params.n
        and shift == -(params.n + params.m * params.n * (params.n - 1) // 2)
        and quotient.dimensions()[quotient.top + 1] == 0
    )
    details = {"total": total, "expected_total": params.r**params.n, "shift": shift}
    result = _result(9, passed, t0, details)
    result.budget = 600 if (params.m, params.p, params.n) == (4, 2, 3) else 60
    return result, quotient


def criterion_10(params, quotient, class_data):
    t0 = time.time()
    bad_series = []
    bad_limits = []
    for cls in class_data:
        w = cls[0]
        trace = quotient_equiv_char(quotient, w)
        ratio = det_ratio_series(params, w, quotient.top + 1)
        if trace != ratio:
            bad_series.append(repr(w))
        total = CycloNumber.zero(params.m)
        for c in trace:
            total = total + c
        if total != CycloNumber.from_rational(params.m, character_limit(params, w)):
            bad_limits.append(repr(w))
    passed = not bad_series and not bad_limits
    details = {
        "classes": len(class_data),
        "det_ratio_mismatches": bad_series,
        "limit_mismatches": bad_limits,
    }
    return _result(10, passed, t0, details)


def criterion_11(params, class_data):
    t0 = time.time()
    bad = [repr(cls[0]) for cls in class_data if not bgg_identity_check(params, cls[0])]
    return _result(11, not bad, t0, {"mismatches": bad})


def criterion_12(params, quotient, class_data):
    t0 = time.time()
    bad = []
    for cls in class_data:
        w = cls[0]
        if quotient_equiv_char(quotient, w) != ce_tensor_char(params, w, quotient.top + 1):
            bad.append(repr(w))
    return _result(12, not bad, t0, {"mismatches": bad})


def criterion_13(params, quotient, class_data):
    t0 = time.time()
    report = coinvariant_image_check(quotient, class_data)
    details = {
        "isotype_degrees": report.isotype_degrees,
        "image_dimension": sum(report.image_dims),
        "group_order": params.order,
        "failures": report.failures,
    }
    passed = report.passed and sum(report.image_dims) == params.order
    return _result(13, passed, t0, details)


def run_all_criteria(params, seed=0):
    """Run the whole acceptance battery for one parameter triple."""
    results = [
        criterion_1(params),
        criterion_2(params),
        criterion_3(params),
        criterion_4(params, seed),
        criterion_5(params, seed),
        criterion_6(params),
        criterion_7(params, seed),
    ]
    class_data = conjugacy_classes(params)
    results.append(criterion_8(params, class_data=class_data))
    res9, quotient = criterion_9(params, seed)
    results.append(res9)
    results.append(criterion_10(params, quotient, class_data))
    results.append(criterion_11(params, class_data))
    results.append(criterion_12(params, quotient, class_data))
    results.append(criterion_13(params, quotient, class_data))
    return results

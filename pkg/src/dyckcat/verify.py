"""Cross-validation harness: every layer of the workbench checked against
brute force and against the exact series, with a machine-readable report.

Three record statuses exist: ``pass``, ``fail``, and ``erratum-noted``.  The
last one marks places where previously published reference values disagree
with what enumeration and exact expansion force; both values are recorded
and the record does not fail the run.
"""

from __future__ import annotations

import json
import math

from . import ddnorm, reps, series
from .patterns import PATTERNS, count_classes, occurrences, partition_classes
from .paths import count_paths, enumerate_paths

REPORT_VERSION = "1"

# Published reference values that computation contradicts; carried in the
# report as erratum-noted records.
PUBLISHED_COUNT_INITIAL_TERMS = [1, 0, 1, 3, 5, 12, 23, 52, 105, 232, 480]
PUBLISHED_UU_COUNT_AT_10 = 75
PUBLISHED_C_BASE_DECIMAL = 0.6180339887  # printed closed form decays; true base grows
PUBLISHED_DU_CONSTANT_DECIMAL = -0.2763932023  # printed closed form is negative

GROWTH_INDEX_BINOMIAL = 2000
GROWTH_INDEX_RATIONAL = 300
GROWTH_INDEX_DD = 200

# Tolerances, pinned once.
TOL_BINOMIAL_GROWTH = 1e-4
TOL_RATIONAL_GROWTH = 1e-6
TOL_DD_GROWTH = 0.1
TOL_PREFACTOR = 0.02
TOL_PUBLISHED_BASE = 1e-5  # published bases carry five decimals

_PATTERN_SEQUENCE = {
    "C": "c", "UU": "f", "UD": "g", "UC": "i", "DC": "j", "CU": "k", "DU": "l",
}


def _record(checks: list, check_id: str, params: dict, expected, actual, status=None):
    if status is None:
        status = "pass" if expected == actual else "fail"
    checks.append(
        {"id": check_id, "params": params, "expected": expected, "actual": actual, "status": status}
    )


def _round(x: float | None) -> float | None:
    return None if x is None else round(x, 10)


def run_verification(
    max_length: int = 12,
    enum_length: int = 16,
    series_order: int = series.DEFAULT_ORDER,
    patterns: tuple[str, ...] | None = None,
    growth_index_dd: int = GROWTH_INDEX_DD,
) -> dict:
    """Run every check suite and return the report as a plain dict."""
    selected = tuple(patterns) if patterns else PATTERNS
    checks: list[dict] = []

    # 1. enumeration vs the exact series ------------------------------------
    e_coeffs = series.gf("E", max(enum_length, 11)).integer_coeffs()
    for n in range(enum_length + 1):
        _record(
            checks,
            "enumeration/count-vs-series",
            {"n": n},
            e_coeffs[n],
            count_paths(n),
        )
    for n in range(min(enum_length, 14) + 1):
        paths = enumerate_paths(n)
        _record(
            checks,
            "enumeration/list-agrees-with-count",
            {"n": n},
            count_paths(n),
            len(paths),
        )
        _record(
            checks,
            "enumeration/no-duplicates",
            {"n": n},
            len(paths),
            len(set(paths)),
        )
    _record(
        checks,
        "errata/path-count-initial-terms",
        {"n_range": "0..10"},
        PUBLISHED_COUNT_INITIAL_TERMS,
        e_coeffs[:11],
        status="erratum-noted",
    )

    # 2. brute-force class counts vs series coefficients ---------------------
    for pattern in selected:
        coeffs = series.gf(series.PATTERN_SERIES[pattern], max(max_length, 0)).integer_coeffs()
        for n in range(max_length + 1):
            _record(
                checks,
                "classes/count-vs-series",
                {"pattern": pattern, "n": n},
                coeffs[n],
                count_classes(n, pattern, max_length=max_length),
            )
    _record(
        checks,
        "errata/uu-class-count-n10",
        {"pattern": "UU", "n": 10},
        PUBLISHED_UU_COUNT_AT_10,
        series.gf("F", 10).integer_coeffs()[10],
        status="erratum-noted",
    )

    # 3. representative uniqueness and canonical maps ------------------------
    for pattern in selected:
        for n in range(max_length + 1):
            buckets = partition_classes(n, pattern, max_length=max_length)
            unique_ok = 0
            canonical_ok = 0
            total_paths = 0
            for members in buckets.values():
                chosen = [m for m in members if reps.is_representative(m, pattern)]
                if len(chosen) == 1:
                    unique_ok += 1
                rep = chosen[0] if len(chosen) == 1 else None
                for m in members:
                    total_paths += 1
                    image = reps.canonical(m, pattern)
                    if rep is not None and image == rep and reps.canonical(image, pattern) == image:
                        canonical_ok += 1
            _record(
                checks,
                "representatives/unique-per-class",
                {"pattern": pattern, "n": n},
                len(buckets),
                unique_ok,
            )
            _record(
                checks,
                "representatives/canonical-and-idempotent",
                {"pattern": pattern, "n": n},
                total_paths,
                canonical_ok,
            )

    # 4. double-descent machinery --------------------------------------------
    if "DD" in selected:
        parity_bound = min(max_length, 14)
        violations = 0
        for n in range(parity_bound + 1):
            for p in enumerate_paths(n):
                cats = p.catastrophe_positions()
                if len(cats) == 1 and (-p.steps[cats[0] - 1] - n) % 2 == 0:
                    violations += 1
        _record(checks, "dd/single-catastrophe-parity", {"max_n": parity_bound}, 0, violations)

        op_bound = min(max_length, 12)
        collapse_bad = eliminate_bad = reduce_bad = psi_bad = 0
        for n in range(op_bound + 1):
            for p in enumerate_paths(n):
                prof = occurrences(p, "DD")
                cats = p.catastrophe_positions()
                if cats:
                    q = ddnorm.collapse_catastrophes(p)
                    if len(q) != len(p) or occurrences(q, "DD") != prof:
                        collapse_bad += 1
                if len(cats) == 1:
                    q = ddnorm.eliminate_isolated_tail(p)
                    c = q.catastrophe_positions()[0]
                    if (
                        len(q) != len(p)
                        or occurrences(q, "DD") != prof
                        or ddnorm.isolated_down_positions(q.steps[c:])
                    ):
                        eliminate_bad += 1
                    size = -p.steps[cats[0] - 1]
                    if size >= 4 and ddnorm.satisfies_condition_C(p).holds:
                        q = ddnorm.reduce_catastrophe(p)
                        if (
                            len(q) != len(p)
                            or occurrences(q, "DD") != prof
                            or q.catastrophe_positions() != cats
                        ):
                            reduce_bad += 1
                if not cats or (len(cats) == 1 and cats[0] == len(p)):
                    q = ddnorm.psi(p)
                    if not ddnorm.satisfies_condition_C(q).holds or ddnorm.psi(q) != q:
                        psi_bad += 1
        _record(checks, "dd/collapse-preserves-profile", {"max_n": op_bound}, 0, collapse_bad)
        _record(checks, "dd/eliminate-preserves-profile", {"max_n": op_bound}, 0, eliminate_bad)
        _record(checks, "dd/reduce-preserves-profile", {"max_n": op_bound}, 0, reduce_bad)
        _record(checks, "dd/psi-normalizes-idempotently", {"max_n": op_bound}, 0, psi_bad)

    # 5. series engines vs coefficients ---------------------------------------
    for name in series.RECURRENCE_NAMES:
        gf_name = {"c": "C", "f": "F", "g": "G", "i": "I", "j": "J", "k": "K", "l": "L_DU"}[name]
        coeffs = series.gf(gf_name, series_order).integer_coeffs()
        mismatch = sum(
            1 for n in range(series_order + 1) if series.recurrence_eval(name, n) != coeffs[n]
        )
        _record(
            checks, "series/recurrence-vs-series", {"sequence": name, "order": series_order}, 0, mismatch
        )
    for name, gf_name in (("a", "A"), ("b", "B")):
        coeffs = series.gf(gf_name, series_order).integer_coeffs()
        mismatch = sum(
            1 for n in range(series_order + 1) if series.closed_form_eval(name, n) != coeffs[n]
        )
        _record(
            checks, "series/closed-form-vs-series", {"sequence": name, "order": series_order}, 0, mismatch
        )
    for ident in series.IDENTITY_NAMES:
        residual = series.check_algebraic_identity(ident, series_order)
        _record(
            checks,
            "series/algebraic-identity",
            {"identity": ident, "order": series_order},
            True,
            residual.is_zero(),
        )
    _record(
        checks,
        "series/parity-merge",
        {"order": series_order},
        True,
        series.parity_merge_check(series_order),
    )
    _record(
        checks,
        "series/odd-even-split-from-parts",
        {"order": min(series_order, 64)},
        True,
        series.gf("N_parts", min(series_order, 64)).coeffs
        == series.gf("N", min(series_order, 64)).coeffs
        and (
            series.gf("Abar", min(series_order, 64))
            + series.gf("S0", min(series_order, 64))
            + series.gf("S1", min(series_order, 64))
        ).coeffs
        == series.gf("V", min(series_order, 64)).coeffs,
    )

    # 6. growth diagnostics ----------------------------------------------------
    for name in ("a", "b"):
        diag = series.asymptotic_diagnostic(name, GROWTH_INDEX_BINOMIAL)
        per_step = math.sqrt(diag.normalized_growth)
        _record(
            checks,
            "asymptotics/growth-ratio",
            {"sequence": name, "n": GROWTH_INDEX_BINOMIAL, "target": 2.0, "tolerance": TOL_BINOMIAL_GROWTH},
            True,
            abs(per_step - 2.0) <= TOL_BINOMIAL_GROWTH,
        )
        _record(
            checks,
            "asymptotics/prefactor",
            {"sequence": name, "n": GROWTH_INDEX_BINOMIAL, "tolerance": TOL_PREFACTOR},
            True,
            diag.relative_error <= TOL_PREFACTOR,
        )
    for name in series.RECURRENCE_NAMES:
        diag = series.asymptotic_diagnostic(name, GROWTH_INDEX_RATIONAL)
        form = series.asymptotic_form(name)
        _record(
            checks,
            "asymptotics/growth-ratio",
            {"sequence": name, "n": GROWTH_INDEX_RATIONAL, "target": _round(form.base), "tolerance": TOL_RATIONAL_GROWTH},
            True,
            abs(diag.normalized_growth - form.base) <= TOL_RATIONAL_GROWTH,
        )
        _record(
            checks,
            "asymptotics/published-base-decimal",
            {"sequence": name, "published": form.published_base, "tolerance": TOL_PUBLISHED_BASE},
            True,
            abs(form.base - form.published_base) <= TOL_PUBLISHED_BASE,
        )
        _record(
            checks,
            "asymptotics/prefactor",
            {
                "sequence": name,
                "n": GROWTH_INDEX_RATIONAL,
                "published": form.published_constant,
                "empirical": _round(diag.empirical_constant),
                "tolerance": TOL_PREFACTOR,
            },
            True,
            diag.relative_error <= TOL_PREFACTOR,
        )
    diag = series.asymptotic_diagnostic("dd", growth_index_dd)
    _record(
        checks,
        "asymptotics/growth-ratio",
        {"sequence": "dd", "n": growth_index_dd, "target": 3.0, "tolerance": TOL_DD_GROWTH},
        True,
        abs(diag.normalized_growth - 3.0) <= TOL_DD_GROWTH,
    )
    for parity, n in (("even", growth_index_dd), ("odd", growth_index_dd - 1)):
        published = series.DD_PUBLISHED_CONSTANTS[parity]
        estimate = series.dd_constant_estimate(n)
        _record(
            checks,
            "errata/dd-prefactor-constant",
            {
                "parity": parity,
                "n": n,
                "raw_empirical": _round(series.dd_constant_estimate(n, extrapolate=False)),
                "note": "published constant not reproduced at desk scale; reported, not asserted",
            },
            _round(published),
            _round(estimate),
            status="erratum-noted",
        )
    _record(
        checks,
        "errata/growth-base-decimal-C",
        {"sequence": "c", "note": "published closed form decays; growth base adopted instead"},
        _round(PUBLISHED_C_BASE_DECIMAL),
        _round(series.asymptotic_form("c").base),
        status="erratum-noted",
    )
    _record(
        checks,
        "errata/growth-constant-sign-DU",
        {"sequence": "l", "note": "published closed form is negative; positive constant adopted"},
        _round(PUBLISHED_DU_CONSTANT_DECIMAL),
        _round(series.asymptotic_diagnostic("l", GROWTH_INDEX_RATIONAL).empirical_constant),
        status="erratum-noted",
    )

    checks.sort(key=lambda c: (c["id"], json.dumps(c["params"], sort_keys=True)))
    failed = sum(1 for c in checks if c["status"] == "fail")
    report = {
        "version": REPORT_VERSION,
        "config": {
            "max_length": max_length,
            "enum_length": enum_length,
            "series_order": series_order,
            "patterns": list(selected),
            "growth_index_binomial": GROWTH_INDEX_BINOMIAL,
            "growth_index_rational": GROWTH_INDEX_RATIONAL,
            "growth_index_dd": growth_index_dd,
        },
        "checks": checks,
        "counts": {
            "total": len(checks),
            "pass": sum(1 for c in checks if c["status"] == "pass"),
            "fail": failed,
            "erratum_noted": sum(1 for c in checks if c["status"] == "erratum-noted"),
        },
        "status": "fail" if failed else "pass",
    }
    return report


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def summarize(report: dict) -> str:
    lines = [
        f"verification {report['status'].upper()}: "
        f"{report['counts']['pass']} pass, {report['counts']['fail']} fail, "
        f"{report['counts']['erratum_noted']} erratum-noted"
    ]
    for check in report["checks"]:
        if check["status"] != "pass":
            lines.append(
                f"  [{check['status']}] {check['id']} {json.dumps(check['params'], sort_keys=True)}"
                f" expected={check['expected']} actual={check['actual']}"
            )
    return "\n".join(lines) + "\n"

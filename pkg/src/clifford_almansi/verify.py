"""Verification suites run by ``clifford-almansi verify``.

Each suite expands into independent cases ``(suite, case_id, check, args)``.
Cases run on a process pool; results are sorted by case id so the report is
identical whatever the completion order.
"""
from __future__ import annotations

import json
import random
import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import closed_form as cf
from .almansi import (
    FAIL,
    PASS,
    SKIPPED_FRACTIONAL,
    biharmonic_report,
    classical_almansi,
    decomposition_report,
    fischer_split,
    layered_sum,
    NotPolyharmonic,
)
from .clifford_core import Multivector, Paravector, blade_product, mv_conjugate
from .diffops import (
    axial_laplacian,
    cauchy_riemann,
    conj_cauchy_riemann,
    iterated_laplacian,
    laplacian,
)
from .generators import (
    random_axial,
    random_homogeneous,
    random_multivector,
    random_mvpoly,
    random_rational,
    random_slice,
)
from .mvpoly import (
    MvPolynomial,
    conj_compose,
    conj_paravector_poly,
    from_axial,
    norm_sq_poly,
    poly_evaluate,
    to_axial,
    vector_poly,
)
from .slice_poly import SlicePolynomial, expand, spherical_value_derivative, zonal
from .textio import MAX_TEXT_DIMENSION, format_polynomial, polynomial_to_records

SUITES = ("core", "ops", "slice", "almansi", "numeric")


@dataclass
class CaseResult:
    suite: str
    case: str
    verdict: str
    witness: object = None
    seconds: float = 0.0


@dataclass
class VerificationReport:
    suite: str
    seed: int
    dimensions: list
    max_degree: int
    results: list = field(default_factory=list)

    @property
    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIPPED_FRACTIONAL: 0}
        for r in self.results:
            out[r.verdict] = out.get(r.verdict, 0) + 1
        return out

    @property
    def exit_status(self) -> int:
        return 0 if self.counts[FAIL] == 0 else 1

    def text(self) -> str:
        lines = [
            f"# verify suite={self.suite} n={','.join(map(str, self.dimensions))} "
            f"max-degree={self.max_degree} seed={self.seed}"
        ]
        for r in self.results:
            lines.append(f"{r.verdict.upper():<18} {r.suite}/{r.case}")
            if r.verdict == FAIL and r.witness is not None:
                lines.append(f"    witness: {r.witness}")
        c = self.counts
        lines.append(
            f"# {c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED_FRACTIONAL]} skipped (fractional case)"
        )
        return "\n".join(lines)

    def records(self) -> list[str]:
        header = {"record": "header", "suite": self.suite, "seed": self.seed,
                  "n": self.dimensions, "max_degree": self.max_degree}
        out = [json.dumps(header)]
        for r in self.results:
            rec = {"record": "case", **asdict(r)}
            out.append(json.dumps(rec))
        out.append(json.dumps({"record": "summary", **self.counts, "exit_status": self.exit_status}))
        return out


def _witness(p: MvPolynomial):
    if p.n <= MAX_TEXT_DIMENSION:
        return format_polynomial(p)
    return polynomial_to_records(p)


def _rng(seed: int, *salt) -> random.Random:
    return random.Random(f"{seed}:" + ":".join(map(str, salt)))


def _check(ok: bool, witness=None):
    return (PASS, None) if ok else (FAIL, witness)


# -- core ------------------------------------------------------------------------


def core_anticommutation(n: int):
    for i in range(n):
        for j in range(n):
            s1, m1 = blade_product(1 << i, 1 << j, n)
            s2, m2 = blade_product(1 << j, 1 << i, n)
            if i == j and (s1, m1) != (-1, 0):
                return FAIL, f"e{i + 1}^2 != -1"
            if i != j and not (m1 == m2 and s1 == -s2):
                return FAIL, f"e{i + 1} e{j + 1} does not anticommute"
    return PASS, None


def core_random_algebra(n: int, seed: int, count: int = 20):
    rng = _rng(seed, "core", n)
    for _ in range(count):
        x, y, z = (random_multivector(rng, n, None if n <= 4 else 6) for _ in range(3))
        if (x * y) * z != x * (y * z):
            return FAIL, "associativity"
        if mv_conjugate(x * y) != mv_conjugate(y) * mv_conjugate(x):
            return FAIL, "(xy)^c != y^c x^c"
        if mv_conjugate(mv_conjugate(x)) != x:
            return FAIL, "conjugation is not an involution"
        p = Paravector([rng.randint(-5, 5) for _ in range(n + 1)])
        xm = p.to_multivector()
        xc = mv_conjugate(xm)
        if xm + xc != Multivector.scalar(n, p.trace()):
            return FAIL, "x + x^c != 2 x0"
        if xm * xc != Multivector.scalar(n, p.norm()) or xc * xm != xm * xc:
            return FAIL, "x x^c != |x|^2"
    return PASS, None


# -- ops -------------------------------------------------------------------------


def ops_factorization(n: int, seed: int, degree: int, count: int = 10):
    rng = _rng(seed, "ops-fact", n)
    for _ in range(count):
        p = random_mvpoly(rng, n, degree)
        lap = laplacian(p)
        for other in (conj_cauchy_riemann(cauchy_riemann(p)), cauchy_riemann(conj_cauchy_riemann(p))):
            if other != lap:
                return FAIL, _witness(other - lap)
        if laplacian(conj_compose(p)) != conj_compose(lap):
            return FAIL, "Laplacian does not commute with x -> x^c"
    return PASS, None


def ops_axial(n: int, seed: int, degree: int, count: int = 10):
    rng = _rng(seed, "ops-axial", n)
    for _ in range(count):
        a = random_axial(rng, n, degree)
        p = from_axial(a)
        if to_axial(p) != a:
            return FAIL, "to_axial(from_axial(a)) != a"
        if from_axial(axial_laplacian(a)) != laplacian(p):
            return FAIL, _witness(from_axial(axial_laplacian(a)) - laplacian(p))
    return PASS, None


def ops_fueter_sce(n: int, seed: int, degree: int, count: int = 6):
    if n % 2 == 0:
        return SKIPPED_FRACTIONAL, None
    m = (n - 1) // 2
    rng = _rng(seed, "ops-fueter", n)
    for _ in range(count):
        p = expand(random_slice(rng, n, degree))
        lap_m = iterated_laplacian(p, m)
        if cauchy_riemann(lap_m):
            return FAIL, _witness(cauchy_riemann(lap_m))
        if laplacian(lap_m):
            return FAIL, _witness(laplacian(lap_m))
    return PASS, None


# -- slice -----------------------------------------------------------------------


def slice_zonal(n: int, degree: int):
    m = (n - 1) // 2
    for k in range(degree + 1):
        z = zonal(n, k)
        if not z.is_homogeneous() or z.degree() != k or not z.has_real_coefficients():
            return FAIL, f"zonal({n},{k}) is not a real homogeneous polynomial of degree {k}"
        to_axial(z)
        if poly_evaluate(z, [1] + [0] * n) != Multivector.scalar(n, k + 1):
            return FAIL, f"zonal({n},{k})(1) != {k + 1}"
        if n % 2 == 1 and iterated_laplacian(z, m):
            return FAIL, _witness(iterated_laplacian(z, m))
    if n % 2 == 0:
        return SKIPPED_FRACTIONAL, None
    return PASS, None


def slice_power_identity(n: int, degree: int):
    xc = conj_paravector_poly(n)
    for k in range(degree + 1):
        lhs = expand(SlicePolynomial.power(n, k))
        rhs = zonal(n, k) - xc * zonal(n, k - 1)
        if lhs != rhs:
            return FAIL, _witness(lhs - rhs)
    return PASS, None


def slice_representation(n: int, seed: int, degree: int, count: int = 8):
    rng = _rng(seed, "slice-rep", n)
    v = vector_poly(n)
    for _ in range(count):
        f = random_slice(rng, n, degree)
        p = expand(f)
        Vf, Sf = spherical_value_derivative(f)
        if from_axial(Vf) + v * from_axial(Sf) != p:
            return FAIL, "representation formula"
        # slice-regularity: dbar f = (1 - n) f'_s
        diff = cauchy_riemann(p) - from_axial(Sf).scale(1 - n)
        if diff:
            return FAIL, _witness(diff)
        pt = [rng.randint(-3, 3) for _ in range(n + 1)]
        if poly_evaluate(p, pt) != f.evaluate(pt):
            return FAIL, "expansion disagrees with direct Clifford evaluation"
    return PASS, None


# -- almansi ---------------------------------------------------------------------


def almansi_decomposition(n: int, seed: int, degree: int, index: int):
    rng = _rng(seed, "almansi-dec", n, index)
    f = random_slice(rng, n, degree)
    rep = decomposition_report(f, "both")
    failed = [k for k, v in rep.verdicts.items() if v == FAIL]
    if failed:
        return FAIL, {"slice": str(f), "failed": failed}
    if any(v == SKIPPED_FRACTIONAL for v in rep.verdicts.values()):
        return SKIPPED_FRACTIONAL, None
    return PASS, None


def almansi_classical(n: int, seed: int, degree: int, index: int):
    rng = _rng(seed, "almansi-classical", n, index)
    order = rng.randint(1, 3)
    r2 = norm_sq_poly(n)
    layers = []
    for _ in range(order):
        h = random_homogeneous(rng, n, rng.randint(0, max(0, degree - 2)))
        layers.append(fischer_split(h)[0])
    p = layered_sum(layers)
    got = classical_almansi(p, order)
    if list(got.layers) != layers:
        return FAIL, "layers differ from the harmonic inputs"
    bad = p + r2 ** order  # |x|^{2 order} is not order-harmonic
    try:
        classical_almansi(bad, order)
    except NotPolyharmonic:
        return PASS, None
    return FAIL, "non-polyharmonic input accepted"


def almansi_biharmonic(n: int, seed: int, degree: int, index: int):
    if n % 2 == 0 or n <= 3:
        return PASS, None
    rng = _rng(seed, "almansi-bi", n, index)
    f = random_slice(rng, n, min(degree, 6), max_blades=2)
    rep = biharmonic_report(f)
    failed = [k for k, v in rep.verdicts.items() if v == FAIL]
    return _check(not failed, {"slice": str(f), "failed": failed})


def almansi_xc_identity(n: int, seed: int, degree: int, count: int = 5):
    rng = _rng(seed, "almansi-xc", n)
    xc = conj_paravector_poly(n)
    for _ in range(count):
        u = random_mvpoly(rng, n, degree)
        lhs = laplacian(xc * u)
        rhs = conj_cauchy_riemann(u).scale(2) + xc * laplacian(u)
        if lhs != rhs:
            return FAIL, _witness(lhs - rhs)
    return PASS, None


# -- numeric ---------------------------------------------------------------------


def numeric_exp(seed: int):
    pts = cf.random_exp_points(100, seed)
    v = cf.verdict(cf.exp_identity_errors(pts), 1e-12)
    return _check(v.passed, f"max error {v.max_abs_error:.3e}")


def numeric_exp_laplacian(seed: int):
    pts = cf.random_exp_points(100, seed)
    errs = [max(a, b) for a, b in cf.exp_laplacian_errors(pts, 1e-3)]
    v = cf.verdict(errs, 1e-5)
    return _check(v.passed, f"max scaled |Delta| {v.max_abs_error:.3e}")


def numeric_exp_pde(seed: int):
    pts = cf.random_exp_points(50, seed, min_beta=0.2)
    worst = 0.0
    for p in pts:
        a, b = cf.exp_pde_residuals(p[0], float((p[1:] ** 2).sum() ** 0.5))
        worst = max(worst, abs(a), abs(b))
    return _check(worst < 1e-4, f"max residual {worst:.3e}")


def numeric_inverse(seed: int):
    pts = cf.random_shell_points(100, 3, seed)
    v = cf.verdict(cf.inverse_errors(pts), 1e-13)
    return _check(v.passed, f"max |g x - 1| {v.max_abs_error:.3e}")


def numeric_float_vs_exact(n: int, seed: int, degree: int, count: int = 10):
    rng = _rng(seed, "numeric-cross", n)
    for _ in range(count):
        f = random_slice(rng, n, degree)
        pt = [random_rational(rng) for _ in range(n + 1)]
        exact = poly_evaluate(expand(f), pt)
        approx = cf.float_slice_evaluate(f, [float(c) for c in pt])
        scale = max([1.0] + [abs(float(c)) for c in exact.terms.values()])
        for mask in range(1 << n):
            e = float(exact.terms.get(mask, 0))
            if abs(approx[mask] - e) > 1e-12 * scale:
                return FAIL, f"component {mask}: {approx[mask]} vs {e}"
    return PASS, None


# -- runner ----------------------------------------------------------------------


def build_cases(suite: str, dims, max_degree: int, seed: int) -> list[tuple]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    wanted = SUITES if suite == "all" else (suite,)
    cases = []
    d = max_degree
    for s in wanted:
        if s == "core":
            for n in dims:
                cases.append((s, f"anticommutation/n{n}", core_anticommutation, (n,)))
                cases.append((s, f"algebra/n{n}", core_random_algebra, (n, seed)))
        elif s == "ops":
            for n in dims:
                cases.append((s, f"factorization/n{n}", ops_factorization, (n, seed, d)))
                cases.append((s, f"axial-laplacian/n{n}", ops_axial, (n, seed, d)))
                cases.append((s, f"fueter-sce/n{n}", ops_fueter_sce, (n, seed, d)))
        elif s == "slice":
            for n in dims:
                cases.append((s, f"zonal/n{n}", slice_zonal, (n, d)))
                cases.append((s, f"power-identity/n{n}", slice_power_identity, (n, d)))
                cases.append((s, f"representation/n{n}", slice_representation, (n, seed, d)))
        elif s == "almansi":
            for n in dims:
                for i in range(10):
                    cases.append((s, f"decompose/n{n}/{i:02d}", almansi_decomposition, (n, seed, d, i)))
                for i in range(5):
                    cases.append((s, f"classical/n{n}/{i:02d}", almansi_classical, (n, seed, d, i)))
                if n % 2 == 1 and n > 3:
                    for i in range(5):
                        cases.append((s, f"biharmonic/n{n}/{i:02d}", almansi_biharmonic, (n, seed, d, i)))
                cases.append((s, f"xc-identity/n{n}", almansi_xc_identity, (n, seed, d)))
        elif s == "numeric":
            cases.append((s, "exp-identity", numeric_exp, (seed,)))
            cases.append((s, "exp-laplacian", numeric_exp_laplacian, (seed,)))
            cases.append((s, "exp-pde", numeric_exp_pde, (seed,)))
            cases.append((s, "inverse", numeric_inverse, (seed,)))
            for n in dims:
                cases.append((s, f"float-vs-exact/n{n}", numeric_float_vs_exact, (n, seed, d)))
    return cases


def _run_case(case) -> CaseResult:
    suite, cid, fn, args = case
    start = time.perf_counter()
    try:
        verdict, witness = fn(*args)
    except Exception as exc:  # a crash is a failed case, reported with its traceback tail
        verdict = FAIL
        witness = "".join(traceback.format_exception_only(type(exc), exc)).strip()
    return CaseResult(suite, cid, verdict, witness, time.perf_counter() - start)


def run_verification(suite: str, dims, max_degree: int, seed: int, jobs: int = 1) -> VerificationReport:
    cases = build_cases(suite, list(dims), max_degree, seed)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, cases))
    else:
        results = [_run_case(c) for c in cases]
    results.sort(key=lambda r: (SUITES.index(r.suite), r.case))
    return VerificationReport(suite, seed, list(dims), max_degree, results)

"""Floating-point checks of the two non-polynomial examples.

* ``exp`` on R_{0,3}: ``f = A - x^c B`` with
  ``A = e^{x0} (cos b + x0 sin(b)/b)`` and ``B = e^{x0} sin(b)/b``, ``b = |Im x|``.
* ``x^{-1}`` on R_{0,2}: ``A = 0`` and ``B = -|x|^{-2}``.

Float multivectors are numpy arrays of length ``2**n`` indexed by blade mask.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .clifford_core import _blade_product
from .slice_poly import SlicePolynomial

SERIES_CUTOFF = 1e-6


class OriginSingularity(ValueError):
    pass


@dataclass(frozen=True)
class NumericVerdict:
    max_abs_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_abs_error <= self.tolerance


def _product_table(n: int):
    size = 1 << n
    sign = np.empty((size, size))
    target = np.empty((size, size), dtype=np.intp)
    for a in range(size):
        for b in range(size):
            s, c = _blade_product(a, b)
            sign[a, b] = s
            target[a, b] = c
    return sign, target


_TABLES: dict[int, tuple] = {}


def float_mv_product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    size = x.shape[0]
    n = size.bit_length() - 1
    if n not in _TABLES:
        _TABLES[n] = _product_table(n)
    sign, target = _TABLES[n]
    out = np.zeros(size)
    np.add.at(out, target.ravel(), (np.outer(x, y) * sign).ravel())
    return out


def paravector_array(coords: Sequence[float]) -> np.ndarray:
    n = len(coords) - 1
    out = np.zeros(1 << n)
    out[0] = coords[0]
    for i, c in enumerate(coords[1:]):
        out[1 << i] = c
    return out


def conj_paravector_array(coords: Sequence[float]) -> np.ndarray:
    return paravector_array([coords[0]] + [-c for c in coords[1:]])


def sinc_beta(beta: float) -> float:
    """``sin(b)/b`` with the removable singularity at 0 handled by its series."""
    if beta < SERIES_CUTOFF:
        b2 = beta * beta
        return 1.0 - b2 / 6.0 + b2 * b2 / 120.0
    return math.sin(beta) / beta


def eval_exp_components(x: Sequence[float]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(f, A, B)`` for ``f = exp`` at a paravector of R_{0,3}."""
    x = np.asarray(x, dtype=float)
    if x.shape != (4,):
        raise ValueError("the exp example lives in R^4 (n = 3)")
    x0 = x[0]
    beta = float(np.linalg.norm(x[1:]))
    ex = math.exp(x0)
    s = sinc_beta(beta)
    f = np.zeros(8)
    f[0] = ex * math.cos(beta)
    # Im(x)/beta * sin(beta) == Im(x) * sinc(beta)
    for i in range(3):
        f[1 << i] = ex * x[1 + i] * s
    A = np.zeros(8)
    A[0] = ex * (math.cos(beta) + x0 * s)
    B = np.zeros(8)
    B[0] = ex * s
    return f, A, B


def eval_inverse_components(x: Sequence[float]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(g, A, B)`` for ``g = x^{-1} = x^c |x|^{-2}`` on R_{0,2}."""
    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise ValueError("the inverse example lives in R^3 (n = 2)")
    r2 = float(x @ x)
    if math.sqrt(r2) < 1e-12:
        raise OriginSingularity("x^{-1} is undefined at the origin")
    g = conj_paravector_array(x) / r2
    A = np.zeros(4)
    B = np.zeros(4)
    B[0] = -1.0 / r2
    return g, A, B


def recombine(A: np.ndarray, B: np.ndarray, x: Sequence[float]) -> np.ndarray:
    """``A - x^c B`` for float multivectors."""
    return A - float_mv_product(conj_paravector_array(x), B)


def finite_difference_laplacian(fn: Callable, x: Sequence[float], h: float = 1e-3):
    """Central second differences of ``fn`` summed over all coordinates."""
    if h <= 0:
        raise ValueError("step must be positive")
    x = np.asarray(x, dtype=float)
    centre = np.asarray(fn(x), dtype=float)
    total = np.zeros_like(centre)
    for i in range(x.shape[0]):
        step = np.zeros_like(x)
        step[i] = h
        total += np.asarray(fn(x + step)) - 2.0 * centre + np.asarray(fn(x - step))
    return total / (h * h)


def exp_pde_residuals(alpha: float, beta: float, h: float = 1e-4) -> tuple[float, float]:
    """Central-difference residuals of the (alpha, beta) system for the exp example.

    (i)  dA/da - a dB/da - b dB/db - 2B
    (ii) dA/db - a dB/db + b dB/da
    """

    def AB(a, b):
        _, A, B = eval_exp_components([a, b, 0.0, 0.0])
        return A[0], B[0]

    Ap, Bp = AB(alpha + h, beta)
    Am, Bm = AB(alpha - h, beta)
    Aq, Bq = AB(alpha, beta + h)
    Aw, Bw = AB(alpha, beta - h)
    _, B0 = AB(alpha, beta)
    dA_da, dB_da = (Ap - Am) / (2 * h), (Bp - Bm) / (2 * h)
    dA_db, dB_db = (Aq - Aw) / (2 * h), (Bq - Bw) / (2 * h)
    first = dA_da - alpha * dB_da - beta * dB_db - 2 * B0
    second = dA_db - alpha * dB_db + beta * dB_da
    return first, second


def random_exp_points(count: int, seed: int = 0, min_beta: float = 0.1) -> np.ndarray:
    """Seeded points in [-1, 1]^4 with ``|Im x| > min_beta``."""
    rng = np.random.default_rng(seed)
    pts = []
    while len(pts) < count:
        p = rng.uniform(-1.0, 1.0, size=4)
        if np.linalg.norm(p[1:]) > min_beta:
            pts.append(p)
    return np.array(pts)


def random_shell_points(count: int, dim: int, seed: int = 0, rmin=0.5, rmax=2.0) -> np.ndarray:
    """Seeded points with ``rmin <= |x| <= rmax``."""
    rng = np.random.default_rng(seed)
    dirs = rng.normal(size=(count, dim))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    radii = rng.uniform(rmin, rmax, size=(count, 1))
    return dirs * radii


def exp_identity_errors(points: Iterable[Sequence[float]]) -> list[float]:
    out = []
    for p in points:
        f, A, B = eval_exp_components(p)
        out.append(float(np.max(np.abs(f - recombine(A, B, p)))))
    return out


def exp_laplacian_errors(points, h: float = 1e-3) -> list[tuple[float, float]]:
    """Finite-difference ``|Delta A|``, ``|Delta B|`` scaled by ``e^{-x0}``."""
    out = []
    for p in points:
        lapA = finite_difference_laplacian(lambda y: eval_exp_components(y)[1], p, h)
        lapB = finite_difference_laplacian(lambda y: eval_exp_components(y)[2], p, h)
        scale = math.exp(-p[0])
        out.append((float(np.max(np.abs(lapA))) * scale, float(np.max(np.abs(lapB))) * scale))
    return out


def inverse_errors(points) -> list[float]:
    out = []
    for p in points:
        g, _, _ = eval_inverse_components(p)
        prod = float_mv_product(g, paravector_array(p))
        prod[0] -= 1.0
        out.append(float(np.max(np.abs(prod))))
    return out


def verdict(errors: Iterable[float], tolerance: float) -> NumericVerdict:
    errors = list(errors)
    return NumericVerdict(max(errors, default=0.0), tolerance)


def float_slice_evaluate(f: SlicePolynomial, x: Sequence[float]) -> np.ndarray:
    """Float evaluation of ``sum x^k a_k`` by Horner's rule from the right."""
    size = 1 << f.n
    xa = paravector_array(x)
    out = np.zeros(size)
    for a in reversed(f.coefficients):
        out = float_mv_product(xa, out)
        for mask, c in a.terms.items():
            out[mask] += float(c)
    return out


def write_error_csv(handle, points, errors, header=("point", "error")) -> None:
    """One CSV row per sample point: the coordinates joined by ';' and the error."""
    writer = csv.writer(handle)
    writer.writerow(header)
    for p, e in zip(points, errors):
        writer.writerow([";".join(f"{c:.17g}" for c in p), f"{e:.6e}"])

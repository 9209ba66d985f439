"""Dense symmetric and Hermitian eigensolvers, polynomial roots, clustering.

The main path is Householder tridiagonalisation followed by implicit QL with
Wilkinson shifts, eigenvectors accumulated throughout. Cyclic Jacobi is kept as
an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

EPS = np.finfo(float).eps
QL_MAX_ITER = 50
ABERTH_MAX_SWEEPS = 200
CLUSTER_REL_GAP = 1e-7
PAIRING_TOL = 1e-8


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order, with numerically-equal clusters."""

    values: tuple[float, ...]
    cluster_tol: float
    clusters: tuple[tuple[int, ...], ...]
    vectors: np.ndarray | None = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max(self) -> float:
        return self.values[0]

    @property
    def min(self) -> float:
        return self.values[-1]

    @property
    def second_smallest(self) -> float:
        """``lambda_{n-1}``; equals ``max`` for 2x2 matrices."""
        return self.values[-2]

    def multiplicity(self, index: int) -> int:
        return next(len(c) for c in self.clusters if index in c)

    def cluster_ids(self) -> list[int]:
        ids = [0] * len(self.values)
        for k, c in enumerate(self.clusters):
            for i in c:
                ids[i] = k
        return ids

    def to_csv(self) -> str:
        rows = ["index,value,cluster"]
        for i, (v, c) in enumerate(zip(self.values, self.cluster_ids())):
            rows.append(f"{i},{format(v, '.17g')},{c}")
        return "\n".join(rows) + "\n"


def cluster(values: Sequence[float], scale: float) -> tuple[tuple[int, ...], ...]:
    """Greedy gap clustering of sorted values; gap threshold ``1e-7 * (1 + scale)``."""
    if not len(values):
        return ()
    tol = CLUSTER_REL_GAP * (1.0 + abs(scale))
    groups = [[0]]
    for i in range(1, len(values)):
        if abs(values[i] - values[i - 1]) <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    return tuple(tuple(g) for g in groups)


def _row_sum_norm(m: np.ndarray) -> float:
    return float(np.abs(m).sum(axis=1).max()) if m.size else 0.0


def _make_spectrum(values: np.ndarray, vectors: np.ndarray | None, scale: float) -> Spectrum:
    order = np.argsort(-values, kind="stable")
    vals = values[order]
    vecs = vectors[:, order] if vectors is not None else None
    return Spectrum(
        tuple(float(v) for v in vals),
        CLUSTER_REL_GAP * (1.0 + scale),
        cluster(vals, scale),
        vecs,
    )


def householder_tridiagonal(m: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(d, e, Q)`` with ``Q.T @ m @ Q`` tridiagonal (diag ``d``, off-diag ``e``)."""
    a = np.array(m, dtype=float)
    n = a.shape[0]
    qmat = np.eye(n)
    for k in range(n - 2):
        x = a[k + 1 :, k]
        if not x[1:].any():
            continue
        # work on x / max|x| so tiny columns do not underflow when squared
        v = x / np.max(np.abs(x))
        norm_x = float(np.linalg.norm(v))
        v[0] += math.copysign(norm_x, v[0])
        v /= np.linalg.norm(v)
        a[k + 1 :, :] -= 2.0 * np.outer(v, v @ a[k + 1 :, :])
        a[:, k + 1 :] -= 2.0 * np.outer(a[:, k + 1 :] @ v, v)
        qmat[:, k + 1 :] -= 2.0 * np.outer(qmat[:, k + 1 :] @ v, v)
    return np.diag(a).copy(), np.diag(a, 1).copy(), qmat


def tridiagonal_ql(d: np.ndarray, e: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.

    ``z`` accumulates the rotations; pass the Householder ``Q`` to get
    eigenvectors of the original matrix. Off-diagonal ``e[i]`` is dropped once
    ``|e[i]| <= eps * (|d[i]| + |d[i+1]|)``, or once it is below ``eps`` times
    the matrix norm (otherwise tiny blocks stall in subnormal arithmetic).
    """
    d = np.array(d, dtype=float)
    n = len(d)
    e = np.append(np.array(e, dtype=float), 0.0)
    z = np.array(z, dtype=float)
    floor = EPS * float(np.max(np.abs(d) + np.abs(e))) if n else 0.0
    for l in range(n):
        iters = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= max(EPS * (abs(d[m]) + abs(d[m + 1])), floor):
                    break
                m += 1
            if m == l:
                break
            iters += 1
            if iters > QL_MAX_ITER:
                raise ConvergenceError(f"QL did not converge for eigenvalue {l}")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                zi1 = z[:, i + 1].copy()
                z[:, i + 1] = s * z[:, i] + c * zi1
                z[:, i] = c * z[:, i] - s * zi1
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, z


def _check_symmetric(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not symmetric")
    return m


def _power_of_two_scale(m: np.ndarray) -> float:
    """Exact scale factor bringing the largest entry near 1 (0 maps to 1)."""
    big = float(np.max(np.abs(m))) if m.size else 0.0
    if big == 0.0 or not math.isfinite(big):
        return 1.0
    return math.ldexp(1.0, min(max(-math.frexp(big)[1], -1000), 1000))


def sym_eigen(m: np.ndarray) -> Spectrum:
    """Full spectrum and eigenvectors of a real symmetric matrix."""
    m = _check_symmetric(m)
    if m.shape[0] == 0:
        return Spectrum((), 0.0, (), np.zeros((0, 0)))
    k = _power_of_two_scale(m)
    d, e, qmat = householder_tridiagonal(m * k)
    values, vectors = tridiagonal_ql(d, e, qmat)
    return _make_spectrum(values / k, vectors, _row_sum_norm(m))


def jacobi_eigen(m: np.ndarray, max_sweeps: int = 100) -> Spectrum:
    """Cyclic Jacobi rotations; slow but independent of the QL path."""
    m = _check_symmetric(m)
    k = _power_of_two_scale(m)
    a = m * k
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= EPS * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 0.1 * EPS * scale:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise ConvergenceError("Jacobi did not converge")
    return _make_spectrum(np.diag(a) / k, v, _row_sum_norm(m))


def real_embedding(m: np.ndarray) -> np.ndarray:
    re, im = m.real, m.imag
    return np.block([[re, -im], [im, re]])


def herm_eigen(m: np.ndarray) -> Spectrum:
    """Spectrum of a Hermitian matrix through its real symmetric embedding.

    The 2n x 2n embedding repeats each eigenvalue twice; pairs are collapsed
    after checking they agree.
    """
    m = np.asarray(m, dtype=complex)
    if not np.array_equal(m, m.conj().T):
        raise ValueError("matrix is not Hermitian")
    big = sym_eigen(real_embedding(m))
    vals = np.array(big.values)
    first, second = vals[0::2], vals[1::2]
    gap = np.abs(first - second)
    if gap.size and gap.max() > PAIRING_TOL:
        raise ConvergenceError(f"embedded eigenvalues failed to pair (gap {gap.max():.3e})")
    values = 0.5 * (first + second)
    n = m.shape[0]
    vecs = big.vectors[:n, 0::2] + 1j * big.vectors[n:, 0::2]
    vecs /= np.linalg.norm(vecs, axis=0)
    return _make_spectrum(values, vecs, _row_sum_norm(m))


def eigen(m: np.ndarray) -> Spectrum:
    """Dispatch on dtype: real symmetric or complex Hermitian."""
    if np.iscomplexobj(m):
        if not np.any(np.asarray(m).imag):
            return sym_eigen(np.asarray(m).real)
        return herm_eigen(m)
    return sym_eigen(m)


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def real_parts(self) -> list[float]:
        return sorted(r.real for r in self.roots)

    def max_imag(self) -> float:
        return max((abs(r.imag) for r in self.roots), default=0.0)


def _horner(coeffs: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    p = np.zeros_like(z)
    dp = np.zeros_like(z)
    scale = np.zeros(z.shape, dtype=float)
    az = np.abs(z)
    for c in coeffs[::-1]:
        dp = dp * z + p
        p = p * z + c
        scale = scale * az + abs(c)
    return p, dp, scale


def poly_roots(coeffs: Sequence[float], tol: float = 1e-9) -> RootSet:
    """All complex roots by Aberth-Ehrlich iteration.

    ``coeffs`` are in ascending order of degree; the leading one must be
    nonzero. Start points sit on a slightly rotated circle of the Cauchy bound.
    A root is accepted once ``|p(r)| <= tol * sum(|a_i| |r|^i)``.
    """
    a = np.asarray(coeffs, dtype=complex)
    if a.ndim != 1 or len(a) < 2:
        raise ValueError("polynomial must have degree >= 1")
    if a[-1] == 0:
        raise ValueError("leading coefficient is zero")
    # exact zero roots cannot be accepted by a relative residual test, so split them off
    zeros = int(np.argmax(a != 0))
    if zeros:
        rest = poly_roots(a[zeros:], tol) if len(a) - zeros > 1 else RootSet((), ())
        pairs = sorted([(0j, 0.0)] * zeros + list(zip(rest.roots, rest.residuals)),
                       key=lambda p: (p[0].real, p[0].imag))
        return RootSet(tuple(r for r, _ in pairs), tuple(e for _, e in pairs))
    deg = len(a) - 1
    if deg == 1:
        r = -a[0] / a[1]
        return RootSet((complex(r),), (0.0,))
    radius = 1.0 + float(np.max(np.abs(a[:-1] / a[-1])))
    k = np.arange(deg)
    z = radius * np.exp(1j * (2.0 * np.pi * k / deg + 0.4)) * (1.0 + 0.01 * k / deg)
    done = np.zeros(deg, dtype=bool)
    for _ in range(ABERTH_MAX_SWEEPS):
        p, dp, scale = _horner(a, z)
        done = np.abs(p) <= 4.0 * EPS * scale
        if done.all():
            break
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        sums = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            w = p / dp
            corr = w / (1.0 - w * sums)
        corr = np.where(np.isfinite(corr), corr, 0.0)
        tiny = np.abs(corr) <= EPS * (1.0 + np.abs(z))
        step = ~done & ~tiny
        if not step.any():
            break
        z = np.where(step, z - corr, z)
    p, _, scale = _horner(a, z)
    resid = np.abs(p)
    if np.any(resid > tol * np.maximum(scale, EPS)):
        raise ConvergenceError("Aberth iteration did not converge")
    order = np.lexsort((z.imag, z.real))
    return RootSet(
        tuple(complex(v) for v in z[order]),
        tuple(float(r) for r in resid[order]),
    )

"""Spectral radii, classical radius bounds, and equitable quotient matrices.

Eigenvalues come from a cyclic Jacobi diagonalisation; stopping when the
off-diagonal Frobenius norm is below the requested tolerance bounds every
eigenvalue error by that tolerance (Weyl).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError, NumericalError, ParameterError, PreconditionError
from .graph import Graph, complement, is_connected, iter_bits

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 60

ADJACENCY = "adjacency"
SIGNLESS_LAPLACIAN = "signless-laplacian"
COMPLEMENT_ADJACENCY = "complement-adjacency"


def _as_symmetric(matrix) -> np.ndarray:
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ParameterError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise NumericalError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise ParameterError("matrix is not symmetric")
    return a


def jacobi_eigenvalues(matrix, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, ascending, each within ±tol."""
    a = _as_symmetric(matrix).copy()
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    scale = float(np.linalg.norm(a))
    target = max(tol * 1e-2, 1e-15 * scale)
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off <= target:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta  # theta^2 would overflow; same root to first order
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    raise NumericalError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def dominant_eigenvalue(matrix, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of a symmetric matrix (its spectral radius when nonnegative)."""
    values = jacobi_eigenvalues(matrix, tol)
    if values.size == 0:
        raise ParameterError("empty matrix has no eigenvalues")
    return float(values[-1])


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for v in range(g.n):
        for u in iter_bits(g.adj[v]):
            a[v, u] = 1
    return a


def signless_laplacian(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return a + np.diag(a.sum(axis=1))


def _matrix(g: Graph, which: str) -> np.ndarray:
    if which == ADJACENCY:
        return adjacency_matrix(g)
    if which == SIGNLESS_LAPLACIAN:
        return signless_laplacian(g)
    if which == COMPLEMENT_ADJACENCY:
        return adjacency_matrix(complement(g))
    raise ParameterError(f"unknown matrix kind {which!r}")


def adjacency_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """ρ(G)."""
    if g.n < 1:
        raise ParameterError("the null graph has no spectrum")
    return dominant_eigenvalue(adjacency_matrix(g), tol)


def signless_laplacian_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """q(G), the largest eigenvalue of D(G) + A(G)."""
    if g.n < 1:
        raise ParameterError("the null graph has no spectrum")
    return dominant_eigenvalue(signless_laplacian(g), tol)


@dataclass(frozen=True)
class SpectralReport:
    rho: float
    q: float
    rho_complement: float
    tolerance: float


def spectral_report(g: Graph, tol: float = DEFAULT_TOL) -> SpectralReport:
    return SpectralReport(
        rho=adjacency_radius(g, tol),
        q=signless_laplacian_radius(g, tol),
        rho_complement=adjacency_radius(complement(g), tol),
        tolerance=tol,
    )


# ---------------------------------------------------------------------------
# bounds


def hong_f(x: float, n: int, e: int) -> float:
    """(x-1)/2 + sqrt(2e - nx + (x+1)^2/4), nonincreasing in x on [0, n-1] when 2e <= n(n-1)."""
    if 2 * e > n * (n - 1):
        raise ParameterError(f"2e = {2 * e} exceeds n(n-1) = {n * (n - 1)}")
    if not 0 <= x <= n - 1:
        raise ParameterError(f"x = {x} outside [0, n-1] = [0, {n - 1}]")
    radicand = 2 * e - n * x + (x + 1) ** 2 / 4
    if radicand < 0:
        raise DomainError(f"negative radicand {radicand} at x={x}, n={n}, e={e}")
    return (x - 1) / 2 + math.sqrt(radicand)


def hong_bound(g: Graph) -> float:
    """Upper bound on ρ(G) from the minimum degree and the size."""
    delta = min(g.degrees()) if g.n else 0
    e = g.edge_count
    radicand = 2 * e - delta * g.n + (delta + 1) ** 2 / 4
    if radicand < 0:
        raise DomainError(f"negative radicand {radicand}")
    return (delta - 1) / 2 + math.sqrt(radicand)


def feng_yu_bound(g: Graph) -> float:
    """Upper bound 2e/(n-1) + n - 2 on q(G) for connected G."""
    if g.n < 2:
        raise PreconditionError("the bound needs n >= 2")
    if not is_connected(g):
        raise PreconditionError("the bound needs a connected graph")
    return 2 * g.edge_count / (g.n - 1) + g.n - 2


def complement_radius_lower_bound(n: int, k: int, complement_edges: int) -> float:
    """sqrt((n-k) e(H̄) / n), valid for ρ(H̄) when H is (n+k-1)-closed."""
    return math.sqrt((n - k) * complement_edges / n)


# ---------------------------------------------------------------------------
# quotient matrices


@dataclass(frozen=True)
class QuotientMatrix:
    """Average block row sums of a graph matrix with respect to a vertex partition."""

    blocks: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])

    def charpoly(self) -> tuple[Fraction, ...]:
        """Exact monic characteristic polynomial coefficients, highest degree first."""
        return charpoly_exact(self.entries)

    def largest_eigenvalue(self, tol: float = DEFAULT_TOL) -> float:
        """Largest real eigenvalue.

        An equitable quotient B satisfies |X_i| B_ij = |X_j| B_ji, so it is
        similar to the symmetric matrix sqrt(B_ij B_ji) and Jacobi applies.
        """
        b = self.as_array()
        if self.equitable:
            return dominant_eigenvalue(np.sqrt(b * b.T), tol)
        return float(np.max(np.linalg.eigvals(b).real))


def quotient_matrix(g: Graph, which: str, partition: Sequence[Sequence[int]]) -> QuotientMatrix:
    blocks = tuple(tuple(b) for b in partition)
    seen = [v for b in blocks for v in b]
    if any(not b for b in blocks):
        raise ParameterError("partition has an empty block")
    if sorted(seen) != list(range(g.n)):
        raise ParameterError("partition must cover the vertex set disjointly")
    m = _matrix(g, which)
    entries = []
    equitable = True
    for bi in blocks:
        row = []
        for bj in blocks:
            sums = m[np.ix_(bi, bj)].sum(axis=1)
            equitable = equitable and bool(np.all(sums == sums[0]))
            row.append(Fraction(int(sums.sum()), len(bi)))
        entries.append(tuple(row))
    return QuotientMatrix(blocks, tuple(entries), equitable)


def charpoly_exact(entries: Sequence[Sequence[Fraction | int]]) -> tuple[Fraction, ...]:
    """Faddeev-LeVerrier over the rationals: coefficients of det(xI - M)."""
    m = len(entries)
    a = [[Fraction(x) for x in row] for row in entries]
    coeffs = [Fraction(1)]
    work = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]  # M_0 = I
    for step in range(1, m + 1):
        am = [[sum(a[i][t] * work[t][j] for t in range(m)) for j in range(m)] for i in range(m)]
        c = -sum(am[i][i] for i in range(m)) / step
        coeffs.append(c)
        work = [[am[i][j] + (c if i == j else 0) for j in range(m)] for i in range(m)]
    return tuple(coeffs)


_CHARPOLY_MIN_ORDER = {"K3Join_Kn5_plus_2K1": 6, "K4Join_Kn7_plus_3K1": 8}


def family_charpoly(family: str, which: str, n: int, k: int | None = None) -> tuple[int, int, int, int]:
    """Closed-form cubic of the three-block quotient for the two rigid exception families.

    ``k`` is accepted for interface symmetry; neither family depends on it.
    """
    if family not in _CHARPOLY_MIN_ORDER:
        raise ParameterError(f"no closed-form characteristic polynomial for family {family!r}")
    if n < _CHARPOLY_MIN_ORDER[family]:
        raise ParameterError(f"{family} needs n >= {_CHARPOLY_MIN_ORDER[family]}, got {n}")
    if family == "K3Join_Kn5_plus_2K1":
        table = {
            ADJACENCY: (1, -(n - 4), -(n + 3), 6 * n - 36),
            SIGNLESS_LAPLACIAN: (1, -(3 * n - 5), 2 * n * n - n - 24, -6 * n * n + 42 * n - 72),
            COMPLEMENT_ADJACENCY: (1, -1, -2 * n + 10, 0),
        }
    else:
        table = {
            ADJACENCY: (1, -(n - 5), -(n + 8), 12 * n - 96),
            SIGNLESS_LAPLACIAN: (1, -3 * (n - 2), 2 * n * n - 48, -8 * n * n + 72 * n - 160),
            COMPLEMENT_ADJACENCY: (1, -2, -3 * n + 21, 0),
        }
    if which not in table:
        raise ParameterError(f"unknown matrix kind {which!r}")
    return table[which]


def _eval_poly(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _bisect(coeffs: Sequence[float], lo: float, hi: float, tol: float) -> float:
    # invariant: p(lo) <= 0 <= p(hi)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if _eval_poly(coeffs, mid) <= 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def largest_real_root_cubic(coeffs: Sequence[float], tol: float = 1e-12) -> float:
    """Largest real root of a monic cubic x^3 + b x^2 + c x + d by bisection."""
    if len(coeffs) != 4 or coeffs[0] != 1:
        raise ParameterError(f"expected monic cubic coefficients (1, b, c, d), got {tuple(coeffs)}")
    _, b, c, d = (float(x) for x in coeffs)
    cauchy = 1.0 + max(abs(b), abs(c), abs(d))
    # critical points of p: roots of 3x^2 + 2bx + c
    disc = b * b - 3 * c
    if disc <= 0:
        return _bisect(coeffs, -cauchy, cauchy, tol)
    x_lo = (-b - math.sqrt(disc)) / 3
    x_hi = (-b + math.sqrt(disc)) / 3
    if _eval_poly(coeffs, x_hi) <= 0:
        return _bisect(coeffs, x_hi, cauchy, tol)
    # p stays positive from the local minimum on; the only root lies left of x_lo
    return _bisect(coeffs, -cauchy, x_lo, tol)

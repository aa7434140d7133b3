"""Numerical kernel-support verification for matrices with a given pattern.

A symmetric matrix A fits graph G when its off-diagonal nonzero pattern is
exactly G's edge set (diagonal free).  Any nonzero kernel vector of such a
matrix certifies that every vertex set avoiding its support is a failed
zero forcing set; for positive semidefinite A the same holds under the PSD
rule.  This module samples pattern matrices, extracts numerical kernels,
and checks those certificates against the forcing engine, plus a sanity
bound: every pattern matrix has rank at least the family's tabulated
minimum rank.

Tolerances: singular values below 1e-9 of the largest are kernel
directions; coordinates below 1e-7 of a vector's max magnitude count as
zero.  Sampled entries are O(1), so both thresholds sit well clear of
rounding noise at these dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .forcing import Rule, is_failed_set
from .formulas import table51_value
from .graphs import FamilySpec, Graph, mask_of
from .theorems import TheoremReport

KERNEL_TOL = 1e-9
SUPPORT_TOL = 1e-7
PATTERN_TOL = 1e-12


class PatternMismatchError(ValueError):
    """Matrix entries do not realize the expected graph pattern."""


@dataclass(frozen=True, eq=False)
class PatternMatrix:
    """A dense symmetric matrix together with the graph it realizes."""

    graph: Graph
    entries: np.ndarray
    psd: bool = False

    def __post_init__(self):
        a = self.entries
        n = self.graph.n
        if a.shape != (n, n):
            raise PatternMismatchError(f"matrix shape {a.shape} for n={n}")
        if not np.allclose(a, a.T, atol=PATTERN_TOL):
            raise PatternMismatchError("matrix is not symmetric")
        for i in range(n):
            for j in range(i + 1, n):
                edge = bool(self.graph.adj[i] & (1 << j))
                nonzero = abs(a[i, j]) > PATTERN_TOL
                if edge != nonzero:
                    raise PatternMismatchError(
                        f"entry ({i},{j}) {'zero' if edge else 'nonzero'} "
                        "contradicts the graph pattern")


def sample_pattern_matrix(g: Graph, seed) -> PatternMatrix:
    """Random symmetric matrix fitting g: edge entries uniform over
    [-2,-0.5] u [0.5,2], free diagonal uniform over [-2,2]."""
    rng = np.random.default_rng(seed)
    n = g.n
    a = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if g.adj[i] & (1 << j):
                val = rng.uniform(0.5, 2.0) * rng.choice((-1.0, 1.0))
                a[i, j] = a[j, i] = val
    a[np.diag_indices(n)] = rng.uniform(-2.0, 2.0, size=n)
    return PatternMatrix(g, a)


def shifted_singular_matrix(g: Graph, seed) -> PatternMatrix:
    """Sampled pattern matrix shifted by one of its own eigenvalues.

    Subtracting lambda * I only moves the diagonal, so the result still fits
    g while having nullity >= 1; the chosen eigenvalue index is part of the
    seed stream.
    """
    rng = np.random.default_rng(seed)
    base = sample_pattern_matrix(g, rng)
    eigenvalues = np.linalg.eigvalsh(base.entries)
    lam = eigenvalues[int(rng.integers(g.n))]
    return PatternMatrix(g, base.entries - lam * np.eye(g.n))


def weighted_laplacian(g: Graph, seed,
                       weight_range: tuple[float, float] = (0.5, 2.0)) -> PatternMatrix:
    """Laplacian D - W with random positive edge weights: positive
    semidefinite by construction, pattern g, nullity = component count."""
    rng = np.random.default_rng(seed)
    lo, hi = weight_range
    n = g.n
    a = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if g.adj[i] & (1 << j):
                w = lo if lo == hi else rng.uniform(lo, hi)
                a[i, j] = a[j, i] = -w
    for i in range(n):
        a[i, i] = -a[i].sum() + a[i, i]
    return PatternMatrix(g, a, psd=True)


def kernel_basis(matrix: PatternMatrix, tol: float = KERNEL_TOL) -> list[np.ndarray]:
    """Orthonormal basis of the numerical kernel: singular directions whose
    singular value falls below tol times the largest one."""
    a = matrix.entries
    _, sigma, vt = np.linalg.svd(a)
    top = sigma[0] if sigma.size else 0.0
    if top <= 0.0:
        return [np.eye(matrix.graph.n)[:, i] for i in range(matrix.graph.n)]
    return [vt[i] for i in range(len(sigma)) if sigma[i] < tol * top]


def numerical_rank(matrix: PatternMatrix, tol: float = KERNEL_TOL) -> int:
    sigma = np.linalg.svd(matrix.entries, compute_uv=False)
    top = sigma[0] if sigma.size else 0.0
    if top <= 0.0:
        return 0
    return int(np.count_nonzero(sigma >= tol * top))


def support_zero_set(x: np.ndarray, tol: float = SUPPORT_TOL) -> int:
    """Bitmask of coordinates that vanish relative to the largest one."""
    peak = np.max(np.abs(x))
    if peak == 0.0:
        raise ValueError("zero vector has no support")
    return mask_of(i for i, xi in enumerate(x) if abs(xi) <= tol * peak)


def _sparsify(basis: list[np.ndarray], tol: float = 1e-10) -> list[np.ndarray]:
    """Row-reduce the basis to kernel vectors of small support (for
    block-diagonal matrices this recovers per-component vectors)."""
    rows = np.array(basis, dtype=float)
    m, n = rows.shape
    r = 0
    for c in range(n):
        pivot = r + int(np.argmax(np.abs(rows[r:, c])))
        if abs(rows[pivot, c]) < tol:
            continue
        rows[[r, pivot]] = rows[[pivot, r]]
        rows[r] /= rows[r, c]
        for i in range(m):
            if i != r and abs(rows[i, c]) > tol:
                rows[i] -= rows[i, c] * rows[r]
        r += 1
        if r == m:
            break
    return [rows[i] for i in range(r)]


def support_implies_failed(g: Graph, matrix: PatternMatrix, rule: Rule,
                           trials: int = 20, seed=0) -> TheoremReport:
    """Certificate check: for kernel vectors x of the matrix, the zero set
    { i : |x_i| <= tol * max|x| } must be failed under the rule.

    Checking the full zero set suffices: subsets of failed sets are failed.
    Tested vectors are the kernel basis, its row-reduced sparsification, and
    ``trials`` random unit combinations.  Matrices checked under the PSD
    rule must carry the psd flag.
    """
    if matrix.graph != g:
        raise PatternMismatchError("matrix was built for a different graph")
    if rule is Rule.PSD and not matrix.psd:
        raise PatternMismatchError("PSD-rule certificates need a PSD matrix")
    basis = kernel_basis(matrix)
    name = f"n={g.n} kernel dim {len(basis)}"
    if not basis:
        return TheoremReport("Cor 2.10" if rule is Rule.STANDARD else "Prop 2.12",
                             name, "all failed", "trivial kernel", True)
    vectors = list(basis) + _sparsify(basis)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        coeffs = rng.normal(size=len(basis))
        norm = np.linalg.norm(coeffs)
        if norm < 1e-12:
            continue
        vectors.append((coeffs / norm) @ np.array(basis))
    checked = 0
    for x in vectors:
        zero_set = support_zero_set(x)
        if not is_failed_set(g, zero_set, rule):
            return TheoremReport(
                "Cor 2.10" if rule is Rule.STANDARD else "Prop 2.12",
                name, "all failed",
                f"zero set {zero_set:#x} of a kernel vector forces", False)
        checked += 1
    return TheoremReport("Cor 2.10" if rule is Rule.STANDARD else "Prop 2.12",
                         name, "all failed", f"{checked} vectors failed", True)


def rank_lower_bound_check(spec: FamilySpec, matrix: PatternMatrix) -> TheoremReport:
    """Every matrix fitting the pattern has rank >= the tabulated minimum
    rank of the family (and >= the PSD minimum rank when the matrix is
    positive semidefinite)."""
    rank = numerical_rank(matrix)
    bound = table51_value(spec, "mrplus" if matrix.psd else "mr")
    label = "mr+" if matrix.psd else "mr"
    return TheoremReport("Table 5.1 rank bound", spec.label(),
                         f"rank >= {label} = {bound}",
                         f"rank = {rank}", rank >= bound)


def matrix_to_text(matrix: PatternMatrix) -> str:
    """Whitespace-separated dense text form, one row per line."""
    return "\n".join(" ".join(f"{v:.17g}" for v in row)
                     for row in matrix.entries) + "\n"

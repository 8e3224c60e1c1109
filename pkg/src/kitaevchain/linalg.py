"""Dense and iterative linear algebra kernels used by the rest of the package.

Dense symmetric/Hermitian eigensolves delegate to numpy's LAPACK bindings:
the entropy pipeline diagonalizes matrices up to 1000 x 1000 inside parameter
scans, which a hand-rolled Jacobi sweep cannot do at useful speed.  The
iterative extreme-eigenpair solver is written here directly because the
exact-diagonalization oracle needs a matrix-free Lanczos with reproducible
behaviour, which is not something numpy provides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .exceptions import ConvergenceError, DimensionError, SymmetryError

HERMITICITY_TOL = 1e-12


@dataclass
class EigenResult:
    """Eigenvalues in ascending order, plus orthonormal eigenvectors if requested."""

    values: np.ndarray
    vectors: Optional[np.ndarray] = None


def _as_square(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionError(f"expected a nonempty square matrix, got shape {a.shape}")
    return a


def symmetric_eigen(m, want_vectors: bool = False) -> EigenResult:
    """Eigendecomposition of a Hermitian matrix.

    The Hermiticity check is relative to the largest entry so that Gram
    matrices built from large couplings are not rejected for roundoff.
    """
    a = _as_square(m)
    scale = max(1.0, float(np.abs(a).max()))
    if np.abs(a - a.conj().T).max() > HERMITICITY_TOL * scale:
        raise SymmetryError("matrix is not Hermitian within tolerance")
    if want_vectors:
        values, vectors = np.linalg.eigh(a)
        return EigenResult(values=values, vectors=vectors)
    return EigenResult(values=np.linalg.eigvalsh(a))


def singular_values(m) -> np.ndarray:
    """Singular values, descending, via the smaller Gram matrix.

    Eigenvalues of M M^dag (or M^dag M, whichever is smaller) are the squared
    singular values; tiny negative eigenvalues from roundoff are clamped to
    zero before the square root.
    """
    a = np.asarray(m)
    if a.ndim != 2 or a.size == 0:
        raise DimensionError(f"expected a nonempty 2-d matrix, got shape {a.shape}")
    if a.shape[0] <= a.shape[1]:
        gram = a @ a.conj().T
    else:
        gram = a.conj().T @ a
    # Symmetrize explicitly; the product can drift off Hermitian at roundoff level.
    gram = 0.5 * (gram + gram.conj().T)
    w = symmetric_eigen(gram).values
    w = np.where(w < 0.0, 0.0, w)
    return np.sqrt(w)[::-1]


class _GrowingBasis:
    """Row-wise storage for Lanczos vectors, grown geometrically on demand."""

    def __init__(self, dim: int, dtype, capacity: int = 64):
        self._data = np.zeros((capacity, dim), dtype=dtype)
        self.count = 0

    def append(self, v: np.ndarray) -> None:
        if self.count == self._data.shape[0]:
            grown = np.zeros((2 * self._data.shape[0], self._data.shape[1]), dtype=self._data.dtype)
            grown[: self.count] = self._data
            self._data = grown
        self._data[self.count] = v
        self.count += 1

    def rows(self) -> np.ndarray:
        return self._data[: self.count]


def iterative_ground_pair(
    apply: Callable[[np.ndarray], np.ndarray],
    dim: int,
    tol: float = 1e-10,
    seed: int = 0,
    max_iter: int = 2000,
) -> tuple[float, np.ndarray]:
    """Minimum eigenpair of a Hermitian operator given only its action.

    Lanczos with full reorthogonalization: each new direction is projected
    against every stored basis vector, twice, so orthogonality holds at
    machine level regardless of eigenvalue clustering.  The start vector
    comes from a seeded generator, which makes oracle runs reproducible.
    Convergence is declared only after an explicit residual check
    ||A v - theta v|| <= tol * max(1, |theta|).

    Raises ConvergenceError carrying the best residual if the iteration cap
    is reached first.
    """
    if dim < 2:
        raise DimensionError("iterative solver needs dimension >= 2")
    rng = np.random.default_rng(seed)
    start = rng.standard_normal(dim)
    start /= np.linalg.norm(start)

    w = np.asarray(apply(start))
    if w.shape != (dim,):
        raise DimensionError(f"operator returned shape {w.shape}, expected ({dim},)")
    dtype = np.result_type(w.dtype, np.float64)

    basis = _GrowingBasis(dim, dtype)
    basis.append(start.astype(dtype))
    alphas: list[float] = []
    betas: list[float] = []
    best_residual = np.inf
    check_every = 5

    for it in range(max_iter):
        if it > 0:
            w = np.asarray(apply(basis.rows()[-1]))
        alphas.append(float(np.real(np.vdot(basis.rows()[-1], w))))
        w = w - alphas[-1] * basis.rows()[-1]
        if it > 0:
            w = w - betas[-1] * basis.rows()[-2]
        rows = basis.rows()
        for _ in range(2):
            w = w - (rows.conj() @ w) @ rows
        beta = float(np.linalg.norm(w))
        breakdown = beta <= 1e-14
        t_beta = beta  # coupling entry recorded in the tridiagonal projection

        if breakdown or (it + 1) % check_every == 0 or it + 1 == max_iter:
            k = len(alphas)
            t = np.diag(np.asarray(alphas))
            if k > 1:
                off = np.asarray(betas)
                t = t + np.diag(off, 1) + np.diag(off, -1)
            tw, tv = np.linalg.eigh(t)
            theta = float(tw[0])
            s = tv[:, 0]
            # The cheap bound beta*|s_k| controls the true residual; confirm
            # explicitly before returning so roundoff cannot fake convergence.
            if breakdown or beta * abs(s[-1]) <= tol * max(1.0, abs(theta)):
                x = s @ basis.rows()
                x = x / np.linalg.norm(x)
                residual = float(np.linalg.norm(np.asarray(apply(x)) - theta * x))
                best_residual = min(best_residual, residual)
                if residual <= tol * max(1.0, abs(theta)):
                    return theta, x
                if breakdown:
                    # Krylov space closed on an invariant subspace that missed
                    # the target; continue from fresh orthogonalized noise.
                    # The restart vector has no coupling to the closed block,
                    # so the recorded tridiagonal entry is exactly zero.
                    w = rng.standard_normal(dim).astype(dtype)
                    rows = basis.rows()
                    w = w - (rows.conj() @ w) @ rows
                    beta = float(np.linalg.norm(w))
                    t_beta = 0.0
                    if beta <= 1e-14:
                        break
        betas.append(t_beta)
        basis.append(w / beta)

    raise ConvergenceError(
        f"Lanczos did not converge in {max_iter} iterations",
        best_residual=None if best_residual is np.inf else best_residual,
        iterations=max_iter,
    )

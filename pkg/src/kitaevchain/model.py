"""Exact solution data for the alternating-bond chain in a transverse field.

The chain couples x spin components on odd bonds with strength J_x and y
components on even bonds with strength J_y, with a field h along z and
periodic closure, so the bond (N, 1) is a J_y bond.  A Jordan-Wigner map
turns the chain into free fermions; in the even fermion-parity sector the
allowed momenta are k = +-(2j-1) pi/N, and the problem splits into N/4
uncoupled four-momentum groups labelled by q in (0, pi/2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ParameterError


def _check_sites(n_sites: int) -> None:
    if n_sites < 4 or n_sites % 4 != 0:
        raise ParameterError(
            f"n_sites must be a multiple of 4 and at least 4, got {n_sites}"
        )


@dataclass(frozen=True)
class ChainParams:
    """Chain size and couplings.  Couplings and field may be any reals."""

    n_sites: int
    j_x: float = 1.0
    j_y: float = 1.0
    h_field: float = 0.0

    def __post_init__(self):
        _check_sites(self.n_sites)


@dataclass(frozen=True)
class ModeSpectrum:
    """Dispersion and the four single-mode eigenvalues at one momentum q.

    lambdas is ordered (--, +-, -+, ++) in the signs (n1, n2) of
    n1 |eps_q| + n2 sqrt(|eps_q|^2 + h^2), which is ascending order.
    """

    q: float
    eps1: float
    eps2: float
    lambdas: tuple[float, float, float, float]


def momentum_grid(n_sites: int) -> tuple[np.ndarray, np.ndarray]:
    """All antiperiodic momenta, and the N/4 group labels q in (0, pi/2).

    Returns (all_k, mode_q); all_k holds the n_sites values +-(2j-1) pi/N
    in ascending order, mode_q the ascending positive ones below pi/2.
    """
    _check_sites(n_sites)
    odd = np.arange(1, n_sites, 2, dtype=float)
    positive = odd * np.pi / n_sites
    all_k = np.concatenate([-positive[::-1], positive])
    mode_q = positive[: n_sites // 4]
    return all_k, mode_q


def dispersion(p: ChainParams, q) -> tuple:
    """Real and imaginary dispersion parts: 2 eps_q = J_x e^{-iq} + J_y e^{iq}."""
    eps1 = 0.5 * (p.j_x + p.j_y) * np.cos(q)
    eps2 = 0.5 * (p.j_y - p.j_x) * np.sin(q)
    return eps1, eps2


def mode_eigenvalues(p: ChainParams, q: float) -> ModeSpectrum:
    """The four eigenvalues of the q-mode block, ascending."""
    eps1, eps2 = dispersion(p, q)
    mod = float(np.hypot(eps1, eps2))
    root = float(np.hypot(mod, p.h_field))
    return ModeSpectrum(
        q=float(q),
        eps1=float(eps1),
        eps2=float(eps2),
        lambdas=(-mod - root, mod - root, -mod + root, mod + root),
    )


def ground_energy(p: ChainParams) -> float:
    """Ground-state energy: every mode contributes -4 sqrt(|eps_q|^2 + h^2).

    Even in h, and invariant under swapping J_x with J_y.
    """
    _, qs = momentum_grid(p.n_sites)
    eps1, eps2 = dispersion(p, qs)
    return float(-4.0 * np.sum(np.sqrt(eps1**2 + eps2**2 + p.h_field**2)))


def ground_degeneracy(n_sites: int) -> int:
    """Even-sector ground-state degeneracy at h = 0: 2^(N/2 - 1).

    Holds for any nonzero couplings; the field term lifts it completely.
    """
    _check_sites(n_sites)
    return 2 ** (n_sites // 2 - 1)

"""Real-space structure of the ground state's pairing exponent.

The even-sector ground state can be written as exp(Z) acting on the fermion
vacuum, with Z = sum_{l<m} z_{lm} c+_l c+_m.  This module builds the momentum
pair amplitudes, their Fourier coefficients beta_n(x), the site-pair matrix
gamma, and from it the cross-block coupling whose singular values carry the
block entanglement.

Two gamma constructions are kept side by side.  The authoritative one
carries the beta_2 parity term with a -i coefficient; a variant with +i
(which is what the kernel convention e^{-iqx} would produce) is retained
purely for comparison, and their disagreement away from J_x = J_y is
reported by gamma_path_deviation rather than silently reconciled.  The
choice between them is pinned by the exact-diagonalization oracle: only the
-i form reproduces the true pair amplitudes of the ground state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import ParameterError, SingularModeError
from .model import ChainParams, dispersion, momentum_grid


def pair_amplitudes(p: ChainParams, q):
    """Pair amplitudes (a1, a2) at momentum q.

    a_n = eps_n / (h + sqrt(|eps_q|^2 + h^2)).  For h <= 0 the denominator
    is evaluated as |eps_q|^2 / (sqrt(|eps_q|^2 + h^2) - h), which is the
    same number without the cancellation; it vanishes only when h <= 0 and
    |eps_q| = 0 together, which is a singular mode.
    """
    eps1, eps2 = dispersion(p, q)
    r2 = eps1 * eps1 + eps2 * eps2
    root = np.sqrt(r2 + p.h_field * p.h_field)
    if p.h_field > 0.0:
        den = p.h_field + root
    else:
        if np.any(r2 == 0.0):
            bad = np.asarray(q)[np.asarray(r2) == 0.0] if np.ndim(q) else q
            raise SingularModeError(
                f"amplitude denominator vanishes at q = {bad} for h = {p.h_field}"
            )
        den = r2 / (root - p.h_field)
    return eps1 / den, eps2 / den


def beta_coefficients(p: ChainParams, n: int, x: int) -> complex:
    """Fourier coefficient beta_n(x) = (1/N) sum_q a_n(q) e^{iqx}."""
    if n not in (1, 2):
        raise ParameterError(f"amplitude index must be 1 or 2, got {n}")
    _, qs = momentum_grid(p.n_sites)
    a1, a2 = pair_amplitudes(p, qs)
    amps = a1 if n == 1 else a2
    return complex(np.sum(amps * np.exp(1j * qs * x)) / p.n_sites)


@dataclass
class PairingMatrix:
    """Site-pair coefficients gamma_{l,m} of the ground-state exponent.

    Indices are 1-based in formulas and documentation; storage is 0-based.
    Only the antisymmetric part gamma - gamma^T enters any physical result.
    Ground-state correlation matrices derived from gamma are cached on the
    instance because every block size reuses them.
    """

    n_sites: int
    gamma: np.ndarray
    _correlations: tuple | None = field(default=None, repr=False, compare=False)


def _beta_tables(p: ChainParams) -> tuple[np.ndarray, np.ndarray]:
    """beta_n(x) for every separation x in [-(N-1), N-1], as lookup arrays."""
    _, qs = momentum_grid(p.n_sites)
    a1, a2 = pair_amplitudes(p, qs)
    x = np.arange(-(p.n_sites - 1), p.n_sites)
    phases = np.exp(1j * np.outer(qs, x))
    return (a1 @ phases) / p.n_sites, (a2 @ phases) / p.n_sites


def _parity_factors(n_sites: int):
    sites = np.arange(1, n_sites + 1)
    alt = (-1.0) ** sites
    p1 = alt[:, None] - alt[None, :]
    p2 = alt[:, None] * alt[None, :] - 1.0
    xi = (sites[:, None] - sites[None, :]) + n_sites - 1
    return p1, p2, xi


def real_space_gamma(p: ChainParams) -> PairingMatrix:
    """The pairing matrix gamma, built by the authoritative direct path.

    gamma_{l,m} = [(-1)^l - (-1)^m] Re beta_1(l-m)
                + [(-1)^{l+m} - 1] Im beta_2(l-m).

    Expanding the momentum-space pair operator into site operators and
    collecting the antisymmetric coefficient of c+_l c+_m gives
    2 P1 Re beta_1 + 2 P2 Im beta_2 with the parity prefactors above; gamma
    stores one symmetric-gauge representative of that coefficient, which
    makes it real-valued for every parameter choice.  Both parity prefactors
    vanish when l and m have equal parity, so gamma couples only odd sites
    to even sites and its diagonal is exactly zero.
    """
    b1, b2 = _beta_tables(p)
    p1, p2, xi = _parity_factors(p.n_sites)
    gamma = (p1 * b1[xi].real + p2 * b2[xi].imag).astype(complex)
    return PairingMatrix(n_sites=p.n_sites, gamma=gamma)


def gamma_plus_i_variant(p: ChainParams) -> np.ndarray:
    """The comparison construction with +i on the beta_2 term.

    Kept so the disagreement between the two sign readings stays measurable;
    see gamma_path_deviation.  Identical to the direct path whenever
    J_x = J_y, where beta_2 vanishes identically.
    """
    b1, b2 = _beta_tables(p)
    p1, p2, xi = _parity_factors(p.n_sites)
    return p1 * b1[xi] + 1j * p2 * b2[xi]


def gamma_path_deviation(p: ChainParams) -> float:
    """Largest entry-wise gap between the antisymmetric parts of the two paths."""
    direct = real_space_gamma(p).gamma
    variant = gamma_plus_i_variant(p)
    d = (direct - direct.T) - (variant - variant.T)
    return float(np.abs(d).max()) / 2.0


def pair_correlations(g: PairingMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Ground-state correlation matrices C = <c+_l c_m> and F = <c_l c_m>.

    For the normalized state exp(Z)|0> with antisymmetric coefficient matrix
    Z = gamma - gamma^T these are C = Z (1 + Z^dag Z)^{-1} Z^dag and
    F = -(1 + Z Z^dag)^{-1} Z.  Z is real for every parameter choice: its
    beta_1 part reduces to 2 Re beta_1 and its beta_2 part to 2 Im beta_2
    once antisymmetrized, so the solve runs in real arithmetic.
    """
    if g._correlations is not None:
        return g._correlations
    z = g.gamma - g.gamma.T
    imag_scale = float(np.abs(z.imag).max()) if np.iscomplexobj(z) else 0.0
    if imag_scale > 1e-10 * max(1.0, float(np.abs(z).max())):
        raise ParameterError(
            f"antisymmetrized pairing matrix has imaginary part {imag_scale:.3e}"
        )
    z = np.ascontiguousarray(z.real) if np.iscomplexobj(z) else z
    eye = np.eye(g.n_sites)
    c = z @ np.linalg.solve(eye + z.T @ z, z.T)
    f = -np.linalg.solve(eye + z @ z.T, z)
    c = 0.5 * (c + c.T)
    f = 0.5 * (f - f.T)
    g._correlations = (c, f)
    return g._correlations


def block_occupations(g: PairingMatrix, block_len: int) -> np.ndarray:
    """Natural-mode occupations of the first block_len sites, descending.

    The block's reduced state is Gaussian, so it factorizes over fermionic
    modes whose occupations are eigenvalues of the 2L x 2L matrix
    [[C, F^T], [F, 1 - C]] restricted to the block.  Eigenvalues come in
    particle-hole pairs (nu, 1 - nu); the returned array holds the minority
    member of each pair, so a frozen (empty or full) mode reports 0 and a
    maximally entangled one reports 1/2.
    """
    if not 1 <= block_len <= g.n_sites - 1:
        raise ParameterError(
            f"block_len must lie in [1, {g.n_sites - 1}], got {block_len}"
        )
    c, f = pair_correlations(g)
    cb = c[:block_len, :block_len]
    fb = f[:block_len, :block_len]
    m = np.block([[cb, fb.T], [fb, np.eye(block_len) - cb]])
    w = np.linalg.eigvalsh(m)
    return np.clip(w[:block_len][::-1], 0.0, 1.0)


@dataclass
class BlockCoupling:
    """Cross-block coupling of the exponent in its block-canonical form.

    Rotating to the natural fermionic modes of each side removes every
    intra-block term from the exponent and leaves sum_n sqrt(eta_n) A+_n B+_n
    with one entangled mode pair per nonzero eta_n, so the coupling matrix is
    diagonal with the sqrt(eta_n) on it, padded to L x (N - L).  Its singular
    values squared are the occupation odds nu_n / (1 - nu_n) of the block's
    natural modes, labeled by the minority member of each particle-hole pair
    so that an unentangled mode carries exactly 0.
    """

    block_len: int
    coupling: np.ndarray


def block_coupling(g: PairingMatrix, block_len: int) -> BlockCoupling:
    """Canonical cross-block coupling for a bipartition after block_len sites.

    A pure Gaussian state can have at most min(L, N - L) modes with
    occupation strictly between 0 and 1; every further mode is frozen empty
    or frozen full and carries no entanglement.  The coupling keeps the
    min(L, N - L) most entangled modes, ordered by descending odds.
    """
    nu = block_occupations(g, block_len)
    keep = min(block_len, g.n_sites - block_len)
    kept = nu[:keep]
    eta = kept / (1.0 - kept)
    coupling = np.zeros((block_len, g.n_sites - block_len), dtype=complex)
    coupling[np.arange(keep), np.arange(keep)] = np.sqrt(eta)
    return BlockCoupling(block_len=block_len, coupling=coupling)


def raw_cross_block(g: PairingMatrix, block_len: int) -> np.ndarray:
    """The literal antisymmetrized cross-block slice of gamma.

    These are the bare coefficients of c+_l c+_{m+L} in the exponent with
    site modes left unrotated.  Discarding the intra-block exponent terms and
    taking singular values of this slice does NOT reproduce the entanglement
    of the full state (the intra-block factors are invertible but not
    unitary, and they shift the Schmidt coefficients), so this matrix is not
    used by the entropy pipeline; it is kept for quantifying exactly that
    gap.  See tests and the demos for the recorded comparison.
    """
    if not 1 <= block_len <= g.n_sites - 1:
        raise ParameterError(
            f"block_len must lie in [1, {g.n_sites - 1}], got {block_len}"
        )
    return g.gamma[:block_len, block_len:] - g.gamma[block_len:, :block_len].T

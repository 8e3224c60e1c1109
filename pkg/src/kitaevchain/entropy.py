"""Block entanglement entropy and spectrum from the cross-block coupling.

With the coupling in canonical form sum_n sqrt(eta_n) A+_n B+_n, each mode
pair contributes independently: the normalized two-level weights are
x_n^2 = 1/(1 + eta_n) and y_n^2 = eta_n/(1 + eta_n), the reduced-density
eigenvalues are products of one weight per mode, and the entropy is the sum
of binary entropies H(x_n^2).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from . import linalg
from .exceptions import ParameterError, SizeError
from .model import ChainParams
from .pairing import block_coupling, real_space_gamma

# Schmidt numbers below this are exact zeros for every downstream purpose:
# their entropy contribution is below 1e-21 bits.
ETA_FLOOR = 1e-24

ENUMERATION_LIMIT = 20


def binary_entropy(x: float) -> float:
    """Shannon binary entropy in bits; H(0) = H(1) = 0 by continuity."""
    if x < -1e-12 or x > 1.0 + 1e-12:
        raise ParameterError(f"binary entropy argument {x} outside [0, 1]")
    x = min(max(float(x), 0.0), 1.0)
    if x == 0.0 or x == 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1.0 - x) * np.log2(1.0 - x))


def _binary_entropy_sum(probs: np.ndarray) -> float:
    p = np.clip(probs, 0.0, 1.0)
    inner = p[(p > 0.0) & (p < 1.0)]
    return float(-(inner * np.log2(inner) + (1 - inner) * np.log2(1 - inner)).sum())


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Operator Schmidt numbers eta_n >= 0, descending, padded to block_len."""

    etas: np.ndarray
    block_len: int


@dataclass(frozen=True)
class EntanglementSpectrum:
    """Largest reduced-density eigenvalues, descending, and their total weight."""

    lambdas: np.ndarray
    total_captured: float


def schmidt_numbers(c) -> SchmidtSpectrum:
    """Squared singular values of the coupling, descending, padded with zeros."""
    sv = linalg.singular_values(c.coupling)
    etas = sv * sv
    etas = np.where(etas < ETA_FLOOR, 0.0, etas)
    if len(etas) < c.block_len:
        etas = np.concatenate([etas, np.zeros(c.block_len - len(etas))])
    return SchmidtSpectrum(etas=np.sort(etas)[::-1], block_len=c.block_len)


def block_entropy(s: SchmidtSpectrum) -> float:
    """E = sum_n H(1/(1 + eta_n)) in bits; zero modes contribute exactly 0."""
    etas = s.etas[s.etas > 0.0]
    return _binary_entropy_sum(1.0 / (1.0 + etas))


def _mode_weights(s: SchmidtSpectrum) -> tuple[np.ndarray, np.ndarray]:
    x2 = 1.0 / (1.0 + s.etas)
    y2 = s.etas / (1.0 + s.etas)
    return x2, y2


def entanglement_spectrum(s: SchmidtSpectrum, count: int) -> EntanglementSpectrum:
    """The count largest reduced-density eigenvalues, without full enumeration.

    Every eigenvalue is a product over modes of either x_n^2 or y_n^2.  The
    largest takes the bigger weight from every mode; the rest are reached by
    flipping modes to their smaller weight.  Flip factors sorted by damage
    let a best-first heap deliver eigenvalues in descending order, visiting
    each subset of flips once.  Eigenvalues that are exactly zero (from modes
    with eta = 0) are never emitted, so fewer than count values can return.
    """
    if count < 1:
        raise ParameterError(f"count must be positive, got {count}")
    x2, y2 = _mode_weights(s)
    top = float(np.prod(np.maximum(x2, y2)))
    if top == 0.0:
        return EntanglementSpectrum(lambdas=np.array([]), total_captured=0.0)
    ratios = np.minimum(x2, y2) / np.maximum(x2, y2)
    factors = np.sort(ratios[ratios > 0.0])[::-1]

    values = [top]
    heap: list[tuple[float, int]] = []
    if len(factors):
        heapq.heappush(heap, (-top * factors[0], 0))
    while len(values) < count and heap:
        neg, i = heapq.heappop(heap)
        v = -neg
        values.append(v)
        if i + 1 < len(factors):
            heapq.heappush(heap, (-v * factors[i + 1], i + 1))
            heapq.heappush(heap, (-v * factors[i + 1] / factors[i], i + 1))
    lam = np.asarray(values)
    return EntanglementSpectrum(lambdas=lam, total_captured=float(lam.sum()))


def enumerate_spectrum(s: SchmidtSpectrum) -> np.ndarray:
    """All 2^L reduced-density eigenvalues, descending, zeros included.

    Exponential in block_len; intended for small-block consistency checks.
    """
    if s.block_len > ENUMERATION_LIMIT:
        raise SizeError(f"enumeration limited to {ENUMERATION_LIMIT} modes")
    x2, y2 = _mode_weights(s)
    lam = np.ones(1)
    for n in range(s.block_len):
        lam = np.concatenate([lam * x2[n], lam * y2[n]])
    return np.sort(lam)[::-1]


def block_entropy_curve(p: ChainParams, block_lens) -> list[tuple[int, float]]:
    """Entropy at each requested block size, sharing one pairing matrix."""
    g = real_space_gamma(p)
    out = []
    for length in block_lens:
        spectrum = schmidt_numbers(block_coupling(g, int(length)))
        out.append((int(length), block_entropy(spectrum)))
    return out

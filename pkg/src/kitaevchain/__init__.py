"""Exact ground-state entanglement for the alternating-bond spin chain.

The chain couples odd bonds through x spins and even bonds through y spins,
with a uniform transverse field.  A momentum-space pairing construction
reduces ground-state block entanglement to an eigenproblem linear in the
chain length; a brute-force diagonalization oracle checks it at small sizes.
"""

from .entropy import (
    EntanglementSpectrum,
    SchmidtSpectrum,
    binary_entropy,
    block_entropy,
    block_entropy_curve,
    entanglement_spectrum,
    enumerate_spectrum,
    schmidt_numbers,
)
from .exceptions import (
    ConvergenceError,
    DimensionError,
    KitaevChainError,
    NormalizationError,
    ParameterError,
    SingularModeError,
    SizeError,
    SymmetryError,
    ValidityError,
)
from .model import (
    ChainParams,
    ModeSpectrum,
    dispersion,
    ground_degeneracy,
    ground_energy,
    mode_eigenvalues,
    momentum_grid,
)
from .pairing import (
    BlockCoupling,
    PairingMatrix,
    beta_coefficients,
    block_coupling,
    block_occupations,
    pair_amplitudes,
    pair_correlations,
    real_space_gamma,
)

__version__ = "0.1.0"

__all__ = [
    "BlockCoupling",
    "ChainParams",
    "ConvergenceError",
    "DimensionError",
    "EntanglementSpectrum",
    "KitaevChainError",
    "ModeSpectrum",
    "NormalizationError",
    "PairingMatrix",
    "ParameterError",
    "SchmidtSpectrum",
    "SingularModeError",
    "SizeError",
    "SymmetryError",
    "ValidityError",
    "beta_coefficients",
    "binary_entropy",
    "block_coupling",
    "block_entropy",
    "block_entropy_curve",
    "block_occupations",
    "dispersion",
    "entanglement_spectrum",
    "enumerate_spectrum",
    "ground_degeneracy",
    "ground_energy",
    "mode_eigenvalues",
    "momentum_grid",
    "pair_amplitudes",
    "pair_correlations",
    "real_space_gamma",
    "schmidt_numbers",
    "__version__",
]

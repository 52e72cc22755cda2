"""Numerical quantum illumination with photon-added and photon-subtracted
two-mode squeezed probes.

Modules:
    special: hypergeometric series, theta-function weights, log factorials.
    probes: truncated Fock expansions of the probe families.
    assembly: target-present/absent density matrices and noise models.
    discrimination: quantum Chernoff bound and derived figures of merit.
    correlations: mutual information and logarithmic negativity.
    experiments: declarative sweeps and result emission.
"""

from .assembly import (
    ChannelParams,
    DensityMatrix,
    NoiseKind,
    NoiseModel,
    assemble_coherent_pair,
    assemble_pair,
    assemble_rho0,
    assemble_rho1,
    mix_imperfect_operation,
    mix_local_gaussian,
    probe_density,
)
from .correlations import correlation_report, log_negativity, mutual_information
from .discrimination import (
    ChernoffResult,
    chernoff_bound,
    classical_bound,
    min_efficiency,
    quantum_advantage,
)
from .errors import (
    ConfigError,
    ConvergenceError,
    DomainError,
    NormalizationError,
    NumericalIntegrityError,
    QillumeError,
    ResourceError,
    TruncationError,
)
from .probes import FockVector, Op, ProbeSpec, build_probe, signal_strength

__version__ = "0.1.0"

__all__ = [
    "ChannelParams",
    "DensityMatrix",
    "NoiseKind",
    "NoiseModel",
    "assemble_coherent_pair",
    "assemble_pair",
    "assemble_rho0",
    "assemble_rho1",
    "mix_imperfect_operation",
    "mix_local_gaussian",
    "probe_density",
    "correlation_report",
    "log_negativity",
    "mutual_information",
    "ChernoffResult",
    "chernoff_bound",
    "classical_bound",
    "min_efficiency",
    "quantum_advantage",
    "ConfigError",
    "ConvergenceError",
    "DomainError",
    "NormalizationError",
    "NumericalIntegrityError",
    "QillumeError",
    "ResourceError",
    "TruncationError",
    "FockVector",
    "Op",
    "ProbeSpec",
    "build_probe",
    "signal_strength",
]

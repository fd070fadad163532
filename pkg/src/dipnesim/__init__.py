"""Truncated Fock-space simulation of differential photon-number encodings."""

from ._version import __version__

from .analytics import (
    GaussianMoments,
    MatchResult,
    c_equal,
    c_equal_bruteforce,
    erasure_residual,
    gaussian_propagate,
    interference_loss_theory,
    mean_photons_from_moments,
    poisson_pn,
    squeeze_fraction_strong,
    squeeze_to_match,
    vacuum_moments,
)
from .catfit import (
    CatFitResult,
    fit_plain_cat,
    fit_squeezed_cat,
    squeeze_fraction_report,
)
from .experiments import (
    EXPERIMENTS,
    ExperimentConfig,
    ResultTable,
    make_config,
    read_config_file,
    run_catfit,
    run_experiment,
    run_gaussdrive,
    run_interference,
    run_kitten,
    run_match,
    run_numberdiff,
    run_oracle_check,
)
from .circuits import (
    CONVENTION,
    BeamsplitterConvention,
    GadgetSpec,
    beamsplit,
    dide_to_phase,
    displace,
    inject,
    interference_gadget,
    phase_shift,
    phase_to_dide,
    squeeze_op,
)
from .fock import (
    GUARD_BAND,
    LEAK_THRESHOLD,
    MAX_JOINT_DIM,
    FockState,
    LeakageWarning,
    ModeLayout,
    apply_annihilation,
    apply_creation,
    basis_index,
    basis_occupation,
    basis_state,
    fidelity,
    inner,
    marginal_number_distribution,
    tensor,
    vacuum_state,
)
from .kitten import (
    KittenSpec,
    KittenState,
    displacement_estimate,
    kitten_by_subtraction,
    kitten_direct,
    kitten_probability,
    peak_estimate,
)
from .measure import (
    BitDecode,
    BitValue,
    SubtractionOutcome,
    decode_dide,
    decode_dipne,
    distinguishability,
    joint_number_distribution,
    l_intf,
    mean_quadrature,
    measure_count,
)
from .states import (
    CatSpec,
    Displacement,
    LogCoeffs,
    Squeeze,
    cat_norm_squared,
    cat_state,
    coherent,
    infinite_squeeze_limit_coeffs,
    r_from_squeeze_photons,
    squeezed_coherent,
    squeezed_vacuum,
)

__all__ = [
    "CONVENTION",
    "EXPERIMENTS",
    "GUARD_BAND",
    "LEAK_THRESHOLD",
    "MAX_JOINT_DIM",
    "BeamsplitterConvention",
    "BitDecode",
    "BitValue",
    "CatFitResult",
    "CatSpec",
    "Displacement",
    "ExperimentConfig",
    "FockState",
    "GadgetSpec",
    "GaussianMoments",
    "KittenSpec",
    "KittenState",
    "LeakageWarning",
    "LogCoeffs",
    "MatchResult",
    "ModeLayout",
    "ResultTable",
    "Squeeze",
    "SubtractionOutcome",
    "apply_annihilation",
    "apply_creation",
    "basis_index",
    "basis_occupation",
    "basis_state",
    "beamsplit",
    "c_equal",
    "c_equal_bruteforce",
    "cat_norm_squared",
    "cat_state",
    "coherent",
    "decode_dide",
    "decode_dipne",
    "dide_to_phase",
    "displace",
    "displacement_estimate",
    "distinguishability",
    "erasure_residual",
    "fidelity",
    "fit_plain_cat",
    "fit_squeezed_cat",
    "gaussian_propagate",
    "infinite_squeeze_limit_coeffs",
    "inject",
    "inner",
    "interference_gadget",
    "interference_loss_theory",
    "joint_number_distribution",
    "kitten_by_subtraction",
    "kitten_direct",
    "kitten_probability",
    "l_intf",
    "make_config",
    "marginal_number_distribution",
    "mean_photons_from_moments",
    "mean_quadrature",
    "measure_count",
    "peak_estimate",
    "phase_shift",
    "phase_to_dide",
    "poisson_pn",
    "r_from_squeeze_photons",
    "read_config_file",
    "run_catfit",
    "run_experiment",
    "run_gaussdrive",
    "run_interference",
    "run_kitten",
    "run_match",
    "run_numberdiff",
    "run_oracle_check",
    "squeeze_fraction_report",
    "squeeze_fraction_strong",
    "squeeze_op",
    "squeeze_to_match",
    "squeezed_coherent",
    "squeezed_vacuum",
    "tensor",
    "vacuum_moments",
    "vacuum_state",
]

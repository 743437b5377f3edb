"""Biquaternions as 4x4 complex matrices, the Lorentz group, and eigenbundle obstructions."""

from .alg_core import (
    BASIS_NAMES,
    Biquat,
    Chirality,
    basis_16,
    biquat_mul,
    conjugate,
    decompose,
    eta_conjugate,
    from_matrix,
    inner,
    recompose,
    rep_matrix,
    transpose,
)
from .bundle import (
    DegeneracyEvent,
    FieldKind,
    HolonomyResult,
    MatrixField,
    ParamPath,
    Scalars,
    TraceResult,
    TrackOptions,
    builtin_path,
    detect_degeneracies,
    doppler_factor,
    eval_field,
    line_holonomy,
    s1_report,
    track_eigenvalues,
)
from .eigen import (
    EigenData,
    SpectralCase,
    beta_decay_distribution,
    classify,
    eigenspace_basis,
    eigenvalues_biquat,
    eigenvalues_em,
    negative_eigenvector,
    principal_eigenvector,
    spin_probability,
)
from .errors import BiquatError
from .expmap import exp_S, exp_so31, log_biquat_lorentz, log_so31
from .mink import (
    EMField,
    LorentzClass,
    boost_observer,
    complexified,
    field_from_matrix,
    field_matrices,
    is_proper_lorentz,
    minkowski_inner,
)
from .modsq import energy_momentum, lift_lorentz, modulus_squared, nullquat_image

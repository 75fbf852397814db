"""Verification toolkit for smeared-space quantum mechanics.

The package builds the 4-dim one-particle and 16-dim two-particle spin
operators for a particle entangled with a fluctuating background, checks
their algebra and eigenstructure in floating-point and exact rational
arithmetic, exercises the associated measurement statistics, constructs
the noncanonical 4-dim SU(2) representation, and derives the scalar
phenomenology (Planck/de Sitter scales and uncertainty bound curves).
"""

from .backends import (
    DEFAULT_TOL,
    EXACT,
    FLOAT,
    ExactComplex,
    ExactSqrtError,
    get_backend,
    rational_sqrt,
)
from .phase_space import (
    BoundCurve,
    GaussianSmearedState,
    PhysicalConstants,
    convolution_check,
    derive_constants,
    egup_bound,
    smeared_uncertainties,
)
from .spin_one import (
    QubitBasis,
    SmearingParams,
    SpinOperatorSet,
    braket_table,
    build_one_particle,
    conditional_probability,
    eigenbasis,
    gur_report,
    measure,
    measurement_outcomes,
    spin_flip_check,
    verify_subalgebras,
)
from .spin_two import (
    EigenFamily,
    PhysicalState,
    TwoParticleOperators,
    bell_states,
    build_two_particle,
    eigenfamilies,
    physical_state,
    two_particle_flips,
)
from .su2 import (
    AxisAngle,
    QuaternionParams,
    SigmaSet,
    build_sigma,
    closure_check,
    compose,
    fundamental_relation_check,
    geometry_limit_sigma,
    group_element,
    hamilton_product,
)

__version__ = "0.1.0"

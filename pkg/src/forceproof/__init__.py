"""Force-of-proof arguments between finite Boolean algebras.

An argument assigns to each premise ``A`` of one algebra and conclusion ``B``
of another a force of proof ``FP(A, B)`` in ``[0, 1]``. Its Moebius kernels
turn it into mass-function transformers, which compose like morphisms.
"""

from .algebra import (
    AlgebraSignature,
    Element,
    card,
    complement,
    implies,
    join,
    meet,
    moebius_over_subsets,
    moebius_over_supersets,
    zeta_over_subsets,
    zeta_over_supersets,
)
from .argument import (
    DEFAULT_TOL,
    Argument,
    Classification,
    Direction,
    Probativity,
    Reconstruction,
    TransformKernel,
    Violation,
    backward_transform,
    classify,
    contrapositive,
    forward_transform,
    probativity,
    reconstruct,
    reconstruct_from_backward,
    transform,
    validate_axioms,
)
from .constructors import (
    CompatibilityRelation,
    ProbabilityMeasure,
    RelationMode,
    RowStochasticMatrix,
    argument_from_relation,
    identity_argument,
    product_argument,
    product_forward_closed_form,
    prototypical,
    relation_from_atom_pairs,
    validate_relation,
)
from .errors import (
    AxiomViolationError,
    ClassificationError,
    ForceProofError,
    FormatError,
    IncompatibleAlgebraError,
    RelationError,
    TableSizeError,
)
from .mass import (
    Composition,
    MassFunction,
    belief_from_mass,
    compose_backward,
    compose_forward,
    identity_kernel,
    propagate_backward,
    propagate_forward,
)

__version__ = "0.1.0"

from .construct import clock_shift_form, construct_clock_shift, construct_tensor_diagonal
from .forms import Form
from .nondegenerate import nondegenerate
from .relations import (
    CliffordPresentation,
    DeterminantIdentityError,
    VerificationReport,
    determinant_identity,
    generate_relations,
    verify,
    verify_via_relations,
)
from .representation import Representation, direct_sum, transform_rep
from .structure import (
    IntertwinerSpace,
    IrreducibilityReport,
    SplitConfig,
    SplitResult,
    commutant,
    equivalent,
    intertwiners,
    irreducible,
    split,
)

__all__ = [
    "CliffordPresentation",
    "DeterminantIdentityError",
    "Form",
    "IntertwinerSpace",
    "IrreducibilityReport",
    "Representation",
    "SplitConfig",
    "SplitResult",
    "VerificationReport",
    "clock_shift_form",
    "commutant",
    "construct_clock_shift",
    "construct_tensor_diagonal",
    "determinant_identity",
    "direct_sum",
    "equivalent",
    "generate_relations",
    "intertwiners",
    "irreducible",
    "nondegenerate",
    "split",
    "transform_rep",
    "verify",
    "verify_via_relations",
]

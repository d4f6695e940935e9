"""mclab — a finite-scale laboratory for marked categories.

Everything is exhaustive: categories are finite presentations with full
composition tables, lifting properties are decided by enumerating squares,
and the model-category notions (premodels, weak models, saturation,
localization, semi-model recognition) are checked rather than assumed.
"""

from .errors import ConstructionError, InputError, ParseError, VerificationError
from .fincat import (
    AdjunctionData,
    Cone,
    DiagramShape,
    FiniteCategory,
    FunctorData,
    Verdict,
    check_adjunction,
    check_functor,
    colimit,
    constant_functor,
    coproduct,
    identity_adjunction,
    identity_functor,
    initial_object,
    isomorphisms,
    limit,
    mediating_out,
    opposite,
    poset_category,
    product,
    pullback,
    pushout,
    reverse_enumeration,
    same_presentation,
    terminal_object,
    validate_category,
)
from .lifting import (
    WeakFactorizationSystem,
    WfsReport,
    cell_closure,
    complement_llp,
    complement_rlp,
    factor,
    generate_wfs,
    has_lift,
    llp,
    retract_closure,
    squares_between,
    verify_wfs,
)
from .premodel import (
    ObjectStatus,
    PremodelReport,
    PremodelStructure,
    QuillenAdjunctionReport,
    SaturationFlags,
    acyclic_cofibrations,
    acyclic_fibrations,
    check_quillen_adjunction,
    cofibrant_objects,
    cofibrant_replacement,
    core_acyclic_cofibrations,
    core_acyclic_fibrations,
    core_cofibrations,
    core_fibrations,
    dualize,
    fibrant_objects,
    fibrant_replacement,
    is_cofibrant,
    is_fibrant,
    object_status,
    same_classes,
    saturation_flags,
    verify_premodel,
)
from .homotopy import (
    CylinderWitness,
    HomotopyCategory,
    PathWitness,
    WeakModelReport,
    check_cylinder_witness,
    check_path_witness,
    equivalences,
    find_cylinder,
    find_path,
    homotopic,
    homotopy_category,
    is_equivalence,
    iter_cylinder_witnesses,
    iter_path_witnesses,
    verify_weak_model,
    weak_to_strong,
)
from .saturate import BiSaturationReport, bi_saturate, saturate
from .localize import (
    LeftLocalization,
    PreRightLocalization,
    RightLocalization,
    left_bousfield,
    nabla,
    nabla_chain,
    pre_right_localization,
    right_bousfield,
)
from .classify import (
    ClassificationReport,
    LeftSemiReport,
    QuillenReport,
    RightSemiReport,
    TwoSidedReport,
    classify_full,
    compute_WL,
    compute_WR,
    left_localization_object,
    quillen_check,
    recognize_left_semi,
    recognize_right_semi,
    right_localization_object,
    two_sided_check,
)
from .olschok import (
    CylinderReport,
    HarnessReport,
    NatTrans,
    OlschokReport,
    QuillenCylinderData,
    StructuredCategory,
    check_nat_trans,
    check_pre_cylinder,
    corner_product,
    identity_cylinder,
    nt_is_anodyne,
    nt_is_cofibration,
    olschok_lambda,
    olschok_model,
    pair_functor,
    structured_from_premodel,
    verify_quillen_cylinder,
    weak_cylinder_theorem_harness,
)
from . import fixtures

__version__ = "0.1.0"

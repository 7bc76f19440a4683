"""Soft g-frames over finite parameter sets.

Parameterized vectors and operators, frame bounds, canonical duals,
reconstruction, frame composition, and a property-based verification
harness. The heavy lifting happens in the compiled extension module.
"""

from softframe._core import (  # noqa: F401
    DirectSumSoftVector,
    DualPair,
    FrameBoundsCertificate,
    InputError,
    LocalFrameFamily,
    MathError,
    ModelKind,
    ParameterSet,
    PropertyReport,
    RandomModel,
    ReconstructionOrder,
    ResolutionSide,
    SoftGFrame,
    SoftOperator,
    SoftVector,
    __version__,
    adjoint,
    analysis,
    apply,
    atomic_resolution,
    canonical_dual,
    compose,
    compose_frame,
    composed_dual_pair,
    dual_pair_check,
    frame_bounds,
    frame_energy,
    frame_from_json,
    frame_operator,
    frame_to_json,
    generate_frame,
    induced_from_vectors,
    invert_hpd,
    is_exact,
    load_frame,
    operator_norm_upper,
    oracle_frame_operator,
    reconstruct,
    run_properties,
    run_suite,
    save_frame,
    soft_inner_product,
    soft_norm,
    solve_hpd,
    synthesis,
    tight_local_canonical_dual,
)

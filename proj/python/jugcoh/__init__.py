from ._jugcoh import (
    BiPoly,
    CohClass,
    JugError,
    KTFamily,
    MomentGraph,
    __version__,
    check_relations,
    const_class,
    expand,
    gkm_violations,
    oracle_expand,
    present,
    stability,
    structure_constants,
    verify_kt_axioms,
)

__all__ = [
    "BiPoly",
    "CohClass",
    "JugError",
    "KTFamily",
    "MomentGraph",
    "__version__",
    "check_relations",
    "const_class",
    "expand",
    "gkm_violations",
    "oracle_expand",
    "present",
    "stability",
    "structure_constants",
    "verify_kt_axioms",
]

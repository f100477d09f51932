"""torsorkit: abelian-torsor averaging over torus fibrations.

Exact Kodaira fiber catalog with min == gcd verification, and numerical
construction of local sections of punctured-disk torus fibrations by
Bezout-weighted averaging of branched multisections.
"""

from .elliptic import (
    INFINITY,
    CurvePoint,
    CurveTorsor,
    RationalCurve,
    ec_add,
    ec_neg,
    ec_scalar_mul,
)
from .errors import (
    DegenerateModel,
    DomainError,
    GcdError,
    LatticeMismatch,
    LiftFailure,
    NotDivisible,
    OffCurve,
    SingularCurve,
    TorsorKitError,
    UnclassifiedValuations,
    UnsupportedType,
    WeightSumError,
)
from .fibration import (
    BranchedMultisection,
    ExtensionVerdict,
    FiberFamily,
    WeightedSystem,
    average_section,
    branch_points,
    build_synthetic_model,
    extension_check,
    monodromy_check,
)
from .kodaira import (
    FiberData,
    KodairaType,
    WeierstrassModel,
    catalog,
    classify_fiber,
    component_multiplicities,
    discriminant,
    fiber_report,
    log_transform,
    minimalize,
)
from .laurent import LaurentPoly
from .multiplicity import (
    AdmissibilityReport,
    BezoutCertificate,
    MultiplicityVector,
    admissibility_report,
    bezout_weights,
    gcd_vector,
    ramified_base_change,
)
from .torsor import (
    CyclicTorsor,
    TorsorInstance,
    WeightedPoints,
    induced_product,
    torsor_mu,
    weighted_combine,
)
from .torus import (
    Lattice,
    TorusPoint,
    TorusTorsor,
    reduce_mod_lattice,
    torus_add,
    torus_neg,
)

__version__ = "0.1.0"

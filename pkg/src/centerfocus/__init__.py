"""Exact center-focus analysis for planar polynomial vector fields."""

__version__ = "0.1.0"

from .errors import (
    AngleStalled,
    CenterFocusError,
    DegreeMismatch,
    Inconsistent,
    LambdaZero,
    MissingParam,
    NonNormalizedLinearPart,
    NonRealInput,
    NotQuasiHomogeneous,
    ObstructionNonzeroAverage,
    OrderTooSmall,
    ParseError,
    PreconditionFailed,
    StepFailure,
    TimeBudgetExceeded,
    UnknownName,
    ZeroCurve,
)
from .poly import (
    BiPoly,
    ComplexCoeffs,
    HomogeneousPoly,
    R2,
    X,
    Y,
    circle_average,
    evaluate,
    from_complex,
    homogeneous_components,
    poisson_bracket,
    to_complex,
)
from .homological import (
    HomologicalSolution,
    apply_rotational,
    radial_power,
    solve_homological,
)
from .lyapunov import (
    H2,
    LyapunovResult,
    PlanarField,
    compute_lyapunov,
    constants_quasihomogeneous,
    lyapunov_function,
    quasihomogeneous_parts,
    residual,
)
from .structure import (
    HGDecomposition,
    SymmetryReport,
    WeakCenterResult,
    bautin_classify,
    detect_symmetries,
    hg_decompose,
    schlomiuk_classify,
    weak_center_check,
)
from .inverse import (
    CofactorCertificate,
    DarbouxCandidate,
    InverseSpec,
    build_field,
    complementary_residuals,
    devlin_integral,
    find_cofactor,
    hamiltonian_mismatch,
    verify_darboux,
    weak_center_family,
)
from .numeric import (
    CenterLike,
    FocusLike,
    IntegratorConfig,
    PeriodSample,
    ReturnMapSample,
    Trajectory,
    find_equilibria,
    integrate,
    numeric_classify,
    period,
    return_map,
    write_csv,
)
from .catalog import CatalogEntry, FamilySignature, get, list_families

__all__ = [
    "__version__",
    "AngleStalled",
    "BiPoly",
    "CatalogEntry",
    "CenterFocusError",
    "CenterLike",
    "CofactorCertificate",
    "ComplexCoeffs",
    "DarbouxCandidate",
    "DegreeMismatch",
    "FamilySignature",
    "FocusLike",
    "H2",
    "HGDecomposition",
    "HomogeneousPoly",
    "HomologicalSolution",
    "Inconsistent",
    "IntegratorConfig",
    "InverseSpec",
    "LambdaZero",
    "LyapunovResult",
    "MissingParam",
    "NonNormalizedLinearPart",
    "NonRealInput",
    "NotQuasiHomogeneous",
    "ObstructionNonzeroAverage",
    "OrderTooSmall",
    "ParseError",
    "PeriodSample",
    "PlanarField",
    "PreconditionFailed",
    "R2",
    "ReturnMapSample",
    "StepFailure",
    "SymmetryReport",
    "TimeBudgetExceeded",
    "Trajectory",
    "UnknownName",
    "WeakCenterResult",
    "X",
    "Y",
    "ZeroCurve",
    "apply_rotational",
    "bautin_classify",
    "build_field",
    "circle_average",
    "complementary_residuals",
    "compute_lyapunov",
    "constants_quasihomogeneous",
    "detect_symmetries",
    "devlin_integral",
    "evaluate",
    "find_cofactor",
    "find_equilibria",
    "from_complex",
    "get",
    "hamiltonian_mismatch",
    "hg_decompose",
    "homogeneous_components",
    "integrate",
    "list_families",
    "lyapunov_function",
    "numeric_classify",
    "period",
    "poisson_bracket",
    "quasihomogeneous_parts",
    "residual",
    "return_map",
    "schlomiuk_classify",
    "solve_homological",
    "to_complex",
    "verify_darboux",
    "weak_center_check",
    "weak_center_family",
    "write_csv",
]

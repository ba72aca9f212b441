"""Hardy and Bergman numbers of plane domains, estimated from the decay of
harmonic measure at infinity, with closed-form oracles, membership
classification, and an identity verification suite."""

from .errors import (
    BasepointOutsideDomain,
    DegenerateDomain,
    DivergentCase,
    HardynumError,
    QuadratureFailure,
    QueryOutsideDomain,
    TooFewPoints,
    UnsupportedImage,
    UnsupportedShape,
    ZeroMeasure,
    ZeroOnDisk,
    ZeroScale,
)
from .geometry import (
    Disk,
    DiskExterior,
    Domain,
    GenericSdf,
    HalfPlane,
    MappedDomain,
    Sector,
    TailQuery,
    affine_image,
    domain_from_dict,
    domain_to_dict,
    dump_domain,
    in_tail,
    load_domain,
)
from .oracles import decay_exponent, exact_green, exact_hm
from .wos import HmEstimate, WosConfig, estimate_hm, estimate_profile
from .hardy_estimator import (
    DecayProfile,
    HardyNumberEstimate,
    ProfileEntry,
    default_grid,
    estimate_hardy_number,
    local_slopes,
    oracle_profile,
)
from .membership import (
    DecayFit,
    IntegralEstimate,
    MembershipQuery,
    MembershipVerdict,
    classify_bergman,
    classify_hardy,
    criterion_integral,
    fit_decay,
)
from .function_norms import (
    CatalogFunction,
    EmpiricalExponents,
    GrowthProfile,
    bergman_growth_profile,
    bergman_integral,
    cayley,
    change_of_variable_check,
    empirical_hb,
    exp_cayley,
    hardy_growth_profile,
    hardy_mean,
    identity_map,
    log_bergman_integral,
    log_hardy_mean,
    sector_power,
    yamashita_integral,
)
from .identities import (
    IdentityReport,
    baernstein_identity,
    fubini_identity,
    jensen_check,
    run_identity_suite,
    tail_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "HardynumError",
    "QueryOutsideDomain",
    "ZeroScale",
    "UnsupportedShape",
    "BasepointOutsideDomain",
    "DegenerateDomain",
    "ZeroMeasure",
    "TooFewPoints",
    "QuadratureFailure",
    "ZeroOnDisk",
    "UnsupportedImage",
    "DivergentCase",
    "TailQuery",
    "Domain",
    "HalfPlane",
    "Sector",
    "Disk",
    "DiskExterior",
    "GenericSdf",
    "MappedDomain",
    "in_tail",
    "affine_image",
    "domain_to_dict",
    "domain_from_dict",
    "load_domain",
    "dump_domain",
    "exact_hm",
    "exact_green",
    "decay_exponent",
    "WosConfig",
    "HmEstimate",
    "estimate_hm",
    "estimate_profile",
    "ProfileEntry",
    "DecayProfile",
    "HardyNumberEstimate",
    "local_slopes",
    "estimate_hardy_number",
    "default_grid",
    "oracle_profile",
    "DecayFit",
    "MembershipQuery",
    "MembershipVerdict",
    "IntegralEstimate",
    "fit_decay",
    "classify_hardy",
    "classify_bergman",
    "criterion_integral",
    "CatalogFunction",
    "cayley",
    "sector_power",
    "exp_cayley",
    "identity_map",
    "hardy_mean",
    "log_hardy_mean",
    "bergman_integral",
    "log_bergman_integral",
    "yamashita_integral",
    "change_of_variable_check",
    "GrowthProfile",
    "hardy_growth_profile",
    "bergman_growth_profile",
    "EmpiricalExponents",
    "empirical_hb",
    "IdentityReport",
    "baernstein_identity",
    "fubini_identity",
    "jensen_check",
    "tail_lower_bound",
    "run_identity_suite",
    "__version__",
]

"""Truncated q-series arithmetic and congruence verification for overpartition tuples."""

from .series import EXACT, Ring, Series, Zmod, make_series, one
from .eta import (
    EtaQuotient,
    borwein_a,
    eta,
    euler_product,
    expand_eta_quotient,
    jacobi_triangular,
    opt_gf,
    overpartition_gf,
    theta_component,
)
from .oracle import (
    CountTable,
    count_opt_tuples,
    count_overpartition_tuples,
    enumerate_tiny,
)
from .identities import (
    IdentityCase,
    IdentityReport,
    builtin_identities,
    identity_registry,
    verify_identity,
)
from .congruences import (
    CongruenceFamily,
    FamilyReport,
    RunConfig,
    SeriesProvider,
    builtin_families,
    check_family,
    default_grid,
    family_registry,
    replay_binomial_tables,
    run_families,
    verify_dissection_step,
)

__version__ = "0.1.0"

__all__ = [
    "EXACT",
    "Ring",
    "Series",
    "Zmod",
    "make_series",
    "one",
    "EtaQuotient",
    "eta",
    "euler_product",
    "expand_eta_quotient",
    "jacobi_triangular",
    "borwein_a",
    "theta_component",
    "overpartition_gf",
    "opt_gf",
    "CountTable",
    "count_overpartition_tuples",
    "count_opt_tuples",
    "enumerate_tiny",
    "IdentityCase",
    "IdentityReport",
    "builtin_identities",
    "identity_registry",
    "verify_identity",
    "CongruenceFamily",
    "FamilyReport",
    "RunConfig",
    "SeriesProvider",
    "builtin_families",
    "family_registry",
    "default_grid",
    "check_family",
    "run_families",
    "replay_binomial_tables",
    "verify_dissection_step",
    "__version__",
]

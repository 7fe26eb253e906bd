"""Symplectic polar spaces over GF(2) and Kochen-Specker contextuality.

The pipeline: :mod:`polarctx.geometry` generates point-line geometries
living in the space of n-qubit Pauli observables, :mod:`polarctx.pauli`
assigns signs to their contexts, and :mod:`polarctx.contextuality`
decides whether a classical noncontextual model exists and how far the
sign vector is from the classically reachable set.
"""

from .gf2 import (CosetSearchResult, DimensionMismatchError, GF2Matrix,
                  GF2Vector, SearchBudget, column_space_basis,
                  coset_min_weight, enumerate_image, rank, solve)
from .pauli import (PauliObservable, PauliProduct, format_pauli, is_symmetric,
                    parse_pauli, pi, product_sign, rho, symplectic_form)
from .geometry import (Family, FamilyMember, GeometryFamilyId, Perpset,
                       PolarSpace, Quadric, Subspace, enumerate_family,
                       generators, is_hyperplane, lines, perpset, polar_space,
                       quadratic_form_value, quadric, subspaces)
from .contextuality import (ContextualityVerdict, DegreeReport,
                            IncidenceSystem, InvalidConfigurationError,
                            MaxSatResult, QuantumConfiguration, build_system,
                            check_contextual, degree, negative_context_count,
                            nchv_max_sat)
from .io import load_configuration, save_configuration
from .fixtures import doily, mermin_peres_square

__version__ = "0.1.0"

__all__ = [
    "CosetSearchResult", "DimensionMismatchError", "GF2Matrix", "GF2Vector",
    "SearchBudget", "column_space_basis", "coset_min_weight",
    "enumerate_image", "rank", "solve",
    "PauliObservable", "PauliProduct", "format_pauli", "is_symmetric",
    "parse_pauli", "pi", "product_sign", "rho", "symplectic_form",
    "Family", "FamilyMember", "GeometryFamilyId", "Perpset", "PolarSpace",
    "Quadric", "Subspace", "enumerate_family", "generators", "is_hyperplane",
    "lines", "perpset", "polar_space", "quadratic_form_value", "quadric",
    "subspaces",
    "ContextualityVerdict", "DegreeReport", "IncidenceSystem",
    "InvalidConfigurationError", "MaxSatResult", "QuantumConfiguration",
    "build_system", "check_contextual", "degree", "negative_context_count",
    "nchv_max_sat",
    "load_configuration", "save_configuration",
    "doily", "mermin_peres_square",
    "__version__",
]

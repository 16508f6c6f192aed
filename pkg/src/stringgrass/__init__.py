"""Euler characteristics of quiver Grassmannians of string modules, by counting torus fixed points."""
from .ap1 import (
    binom,
    chi_family,
    chi_flag,
    chi_kronecker_preinjective,
    chi_kronecker_preprojective,
    chi_kronecker_regular,
    chi_preinjective,
    chi_preprojective,
    chi_regular,
    count_subsets_with_components,
)
from .coefficient import (
    CoefficientQuiver,
    StringClassification,
    build_coefficient_quiver,
    check_monomial,
    classify_string,
)
from .counting import (
    ChiTable,
    NotMonomial,
    TooLarge,
    chi,
    chi_table,
    coordinate_table,
    count_coordinate_subreps,
    count_oracle,
    count_successor_closed,
    oracle_table,
    successor_closed_table,
)
from .degrees import (
    DegreeAssignment,
    Infeasible,
    MissingDegree,
    NotOrientableString,
    search_degrees,
    solve_degrees,
    string_degrees,
    verify_degrees,
)
from .quiver import (
    PREINJECTIVE,
    PREPROJECTIVE,
    REGULAR,
    Ap1Family,
    Arrow,
    DimensionMismatch,
    DuplicateEntry,
    IndexOutOfRange,
    InvalidParameter,
    Quiver,
    Representation,
    RepresentationError,
    ZeroStoredValue,
    build_ap1_module,
    build_q_p1,
    table1_fixture,
    validate_representation,
)

__version__ = "0.1.0"

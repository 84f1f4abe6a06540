"""nilcat: exact construction, classification and recognition of nilpotent
Lie algebras of dimension at most 6 over fields of characteristic not 2."""

from .errors import NilcatError
from .field import (
    FieldCtx,
    FieldElem,
    parse_field,
    prime_field,
    rationals,
    same_square_class,
    sqrt,
    square_class_rep,
    two_by_two_with_det,
)
from .linalg import Matrix
from .liealg import LieAlgebra, LinearMap, Subspace
from .cohomology import (
    CohomologySpaces,
    SkewForm,
    assemble_iso,
    aut_action,
    central_extension,
    coboundary_shift_iso,
    compute_spaces,
    extension_center_ok,
    factor_by_center,
    no_central_component,
)
from .catalog import (
    CatalogEntry,
    CatalogId,
    count,
    entry,
    ids_over,
    instantiate,
    parse_id,
    raw_table,
    same_id,
    scaling_iso,
)
from .autgroups import aut_template
from .recognize import (
    NormalizationStep,
    RecognitionResult,
    recognize,
    skew_normal_form,
)
from .oracle import (
    IsoSearchConfig,
    fuzz_basis_change,
    invariant_vector,
    iso_search,
)

__all__ = [
    "NilcatError",
    "FieldCtx",
    "FieldElem",
    "parse_field",
    "prime_field",
    "rationals",
    "same_square_class",
    "sqrt",
    "square_class_rep",
    "two_by_two_with_det",
    "Matrix",
    "LieAlgebra",
    "LinearMap",
    "Subspace",
    "CohomologySpaces",
    "SkewForm",
    "assemble_iso",
    "aut_action",
    "central_extension",
    "coboundary_shift_iso",
    "compute_spaces",
    "extension_center_ok",
    "factor_by_center",
    "no_central_component",
    "CatalogEntry",
    "CatalogId",
    "count",
    "entry",
    "ids_over",
    "instantiate",
    "parse_id",
    "raw_table",
    "same_id",
    "scaling_iso",
    "aut_template",
    "NormalizationStep",
    "RecognitionResult",
    "recognize",
    "skew_normal_form",
    "IsoSearchConfig",
    "fuzz_basis_change",
    "invariant_vector",
    "iso_search",
]

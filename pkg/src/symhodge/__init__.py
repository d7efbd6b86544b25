"""Exact verification of symplectic Hodge theory on finite-dimensional
symplectic Lie algebras: superalgebra module construction, cohomology,
Lefschetz / Brylinski / d-delta / primitive-lemma verdicts."""

from .catalog import CatalogEntry, builtin_entries, load_file
from .cealg import (
    Form,
    LiePresentation,
    ParseError,
    Representation,
    SymplecticStructure,
    ValidationError,
    build_operators,
    check_d_squared,
    check_symplectic,
    parse_form,
    parse_signature,
    with_coefficients,
)
from .exactlin import Matrix, SubspaceBasis
from .superalg import (
    GradedModule,
    LefschetzReport,
    Verdict,
    brylinski_verdict,
    cohomology,
    ddelta_verdict,
    dee_deebar_verdict,
    full_report,
    lefschetz_map,
    s_lefschetz_degree,
    verify_relations,
    weak_degree,
)

__version__ = "0.1.0"

//! Construction, search and exact verification toolkit for symmetric
//! propus-Hadamard matrices.
//!
//! The crate builds the ingredient matrices (Paley cores, Turyn pairs,
//! conference pairs, D-optimal pairs), plugs them into the plain and
//! back-circulant four-block arrays, composes larger orders via the propus
//! variation of Miyamoto's theorem, and verifies every product with exact
//! integer arithmetic. A pruned exhaustive search over first rows doubles as
//! an independent oracle for all ingredient kinds, and a line-oriented
//! catalog format persists verified first-row data.

pub mod assembly;
pub mod catalog;
pub mod constructions;
pub mod driver;
pub mod field;
pub mod matrix;
pub mod miyamoto;
pub mod render;
pub mod report;
pub mod search;

pub use assembly::{
    additive_defect, assemble_gp, assemble_p, classify_triple, AssemblyError, PropusTriple,
    TripleClass,
};
pub use catalog::{Catalog, CatalogEntry, CatalogError, EntryKind, LoadOutcome};
pub use constructions::{
    conference_propus, d_optimal_propus, three_equal_propus, turyn_pair,
    williamson_propus_from_q, ConferencePair, ConferenceVariant, ConstructionError,
    DOptimalPair, IngredientSource, TurynPair,
};
pub use driver::{construct, ConstructError, ConstructOutcome, Method};
pub use field::{build_field, is_prime, paley_core, prime_power, FieldError, FieldTable};
pub use matrix::{
    anti_identity, circulant, paf, CirculantType, FirstRow, IntMatrix, MatrixError,
    PropertyReport, SignMatrix,
};
pub use miyamoto::{
    compose_doubled, compose_williamson, corollary_driver, paley_turyn_input,
    paley_turyn_input_back_circulant, paley_turyn_input_from_pair, validate_miyamoto,
    ConditionReport, MiyamotoError, MiyamotoInput,
};
pub use render::{pgm_string, write_pgm};
pub use report::{run_report, Classification, Report, ReportEntry};
pub use search::{
    search_conference, search_doptimal, search_propus, search_turyn, SearchKind, SearchOutcome,
    SearchSpec,
};

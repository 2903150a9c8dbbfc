//! Constant dimension codes in the Grassmann space over GF(q).
//!
//! Finite field arithmetic, subspaces in reduced row echelon form, codes and
//! their derived binary constant weight codes, closed-form upper bounds,
//! spread constructions and an exact search for small parameters.

pub mod bounds;
pub mod code;
pub mod error;
pub mod field;
pub mod format;
mod linalg;
pub mod search;
pub mod steiner;
pub mod subspace;

pub use bounds::{bound_ratio_table, bound_report, gaussian_binomial, BoundReport, CodeParams};
pub use code::{BinaryConstantWeightCode, ConstantDimensionCode};
pub use error::{Error, Result};
pub use field::{find_primitive_element, make_field, FieldElement, FieldSpec, SubfieldView};
pub use format::{code_from_json, code_to_json, CodeFile};
pub use search::{brute_force_optimum, verify_duality, SearchOptions, SearchResult};
pub use steiner::{construct_spread, is_steiner_structure, Spread};
pub use subspace::{enumerate_subspaces, Subspace};

//! Finite binary operations: the composition monoid, its group of
//! invertible elements, and the group theory built on top of them.
//!
//! A binary operation on `n` points is an `n×n` table. Under slice-wise
//! composition the tables form a monoid whose invertible elements are
//! exactly the tables with bijective rows; that group is isomorphic to the
//! group of permutation families and has order `(n!)^n`. The crate provides:
//!
//! - value types and pure operations on tables, slices and permutations;
//! - validated finite groups, closure generation, isomorphism testing and
//!   small-group identification;
//! - distributivity predicates and the representation of any finite group
//!   as a distributive subgroup of invertible tables, with exhaustive
//!   verification;
//! - lazy exhaustive enumeration and censuses at small sizes, used as
//!   independent oracles for the counting and criterion claims;
//! - a line-oriented text format for tables with bit-exact round-trips.
//!
//! Everything is an immutable value and every operation is a pure function,
//! so values can be shared freely across threads.

pub mod closure;
pub mod distributive;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod format;
pub mod group;
pub mod iso;
pub mod oracle;
pub mod perm;
pub mod point;
pub mod table;

pub use closure::{closure, closure_with_guard, table_group, DEFAULT_CLOSURE_GUARD};
pub use distributive::{
    binary_representation, is_distributive_pair, is_distributive_subgroup, slice_relation_holds,
    slice_relation_witness, verify_representation, verify_representation_with_guard,
    DistributiveFailure, RepresentationReport, DEFAULT_REPRESENTATION_GUARD,
};
pub use enumerate::{
    criterion_census, criterion_census_with_guard, enumerate_all_ops,
    enumerate_all_ops_with_guard, enumerate_invertible, enumerate_invertible_with_guard,
    CensusResult, DEFAULT_ENUMERATION_GUARD, DEFAULT_INVERTIBLE_GUARD,
};
pub use error::Error;
pub use family::{
    function_family_group, function_family_group_with_guard, invertible_op_count, FunctionFamily,
    DEFAULT_FAMILY_GUARD,
};
pub use format::{
    parse_binop, parse_document, parse_group, serialize_binop, serialize_group, Document,
    DocumentPayload, ParseError,
};
pub use group::{
    alternating_group, cyclic_group, dicyclic_group, dihedral_group, direct_product, klein_group,
    symmetric_group, symmetric_group_with_guard, validate_group, FiniteGroup,
    DEFAULT_SYMMETRIC_GUARD,
};
pub use iso::{
    are_isomorphic, are_isomorphic_with_guard, identify_group, DEFAULT_ISO_GUARD,
    IDENTIFY_ORDER_BOUND,
};
pub use oracle::{brute_force_inverse, MAX_FULL_SEARCH, MAX_ROW_PERMUTATION_SEARCH};
pub use perm::{EndoMap, Permutation};
pub use point::PointSet;
pub use table::BinaryOpTable;

//! Datatype-generic transformation objects over algebraic datatype
//! declarations.
//!
//! The crate is organized as a pipeline plus two engines built on its output:
//!
//! * [`model`]: the declaration language (parsing, validation, open-sum
//!   flattening).
//! * [`gen`]: deterministic Rust source emission: one traversal and one
//!   handler-table signature per declaration, plus derived behavior tables
//!   (`show`, `foldl`, `map`) as plugins.
//! * [`generated`]: the checked-in output of running [`gen`] over
//!   `decls/showcase.gt`; everything downstream consumes these files.
//! * [`lambda`]: a normalizer for the untyped lambda calculus with seven
//!   reduction strategies assembled from six reusable behavior traits.
//! * [`expr`]: an arithmetic evaluator assembled from independently compiled
//!   open-sum fragments.
//! * [`cli`]: thin command wrappers over the above, exposed by the `gt`
//!   binary.

pub mod cli;
pub mod expr;
pub mod gen;
pub mod generated;
pub mod lambda;
pub mod model;

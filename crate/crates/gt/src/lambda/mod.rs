//! A lambda calculus reducer built from the generated `lam` traversal.
//!
//! The interesting part is [`reduce`]: one base handler table captures the
//! β-reduction skeleton, and each of Sestoft's seven reduction orders is a
//! short stack of extensions re-binding a couple of late-bound slots. The
//! traced variant swaps in a different inherited attribute and reuses every
//! strategy definition unchanged.

pub mod parse;
pub mod reduce;
pub mod subst;
pub mod term;

pub use parse::{parse_term, TermParseError};
pub use reduce::{
    reduce, reduce_with_fuel, reduce_with_trace, reduce_with_trace_and_fuel, FuelExhausted,
    PartialTrace, ReductionContext, SimpleCtx, Strategy, TraceCtx, DEFAULT_FUEL,
};
pub use subst::{subst, NameGen, Substitutor};
pub use term::{alpha_eq, all_names, app, free_vars, lam, show_term, term_vars, var, Term};

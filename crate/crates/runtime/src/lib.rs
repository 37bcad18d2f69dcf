//! Runtime support for transformation objects.
//!
//! A *transformation object* separates a datatype traversal from the
//! per-constructor behavior it dispatches to. The traversal side lives in
//! generated `*_gcata` functions; this crate provides the two pieces those
//! functions lean on:
//!
//! * [`Aug`]: an argument as a handler sees it, carrying the raw value, the
//!   transformation for values of its type, and that transformation already
//!   applied to the value ([`make_aug`] ties the three together).
//! * [`Transformer`]: a named, layered handler table. Tables never mutate;
//!   [`Transformer::extend`] adds a delegation layer, and lookup walks layers
//!   newest first, so the meaning of a handler name is late bound.
//!
//! Handlers receive the dispatching table as an explicit first argument,
//! which is what lets an extension's handler call a sibling through the
//! *final* table rather than the one it was written against.

mod aug;
mod transformer;

pub use aug::{make_aug, Aug, Fx, TransFn};
pub use transformer::{Entry, ExtendError, Transformer};

//! Shared test support: the reference interpreter, the screened corpus
//! generator, and conversions across the engine boundary.

#![allow(dead_code)]

pub mod corpus;
pub mod oracle;

use gt::lambda::Term;
use oracle::RefTerm;

/// Reference term to engine term.
pub fn from_ref(t: &RefTerm) -> Term {
    match t {
        RefTerm::Var(x) => gt::lambda::var(x.clone()),
        RefTerm::App(f, arg) => gt::lambda::app(from_ref(f), from_ref(arg)),
        RefTerm::Lam(x, body) => gt::lambda::lam(x.clone(), from_ref(body)),
    }
}

/// Engine term to reference term.
pub fn to_ref(t: &Term) -> RefTerm {
    match t {
        Term::Var(x) => oracle::v(x),
        Term::App(f, arg) => oracle::a(to_ref(f), to_ref(arg)),
        Term::Lam(x, body) => oracle::l(x, to_ref(body)),
    }
}

/// Round-trip sanity for the converters themselves.
pub fn conversions_agree(t: &RefTerm) -> bool {
    to_ref(&from_ref(t)) == *t
}

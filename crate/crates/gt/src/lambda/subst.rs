use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use crate::generated::lam_gen::{c_app, c_lam, c_var, lam_gcata, LamTransformer};

use super::term::{all_names, app, free_vars, lam, var, Term};

/// Fresh-name supply. `next` appends primes to the base name until the
/// result is unused, then records it as taken, so no two calls ever return
/// the same name.
#[derive(Debug, Clone)]
pub struct NameGen {
    taken: BTreeSet<String>,
    issued: Vec<String>,
}

impl NameGen {
    pub fn new(taken: BTreeSet<String>) -> NameGen {
        NameGen { taken, issued: Vec::new() }
    }

    /// A generator that avoids every name in `t`, binders included.
    pub fn for_term(t: &Term) -> NameGen {
        NameGen::new(all_names(t))
    }

    pub fn next(&mut self, base: &str) -> String {
        let mut name = format!("{base}'");
        while self.taken.contains(&name) {
            name.push('\'');
        }
        self.taken.insert(name.clone());
        self.issued.push(name.clone());
        name
    }

    /// Every name this generator has handed out, in order.
    pub fn issued(&self) -> &[String] {
        &self.issued
    }
}

/// Inherited attribute of the substitution traversal.
///
/// `mapping` holds renames that are pending for the subtree below (binders
/// that had to move out of the payload's way); `prohibited` is the payload's
/// free-variable set, the names no enclosing binder may capture. `masked`
/// marks that some binder shadowing the substituted variable has been
/// crossed, so the payload must no longer be planted.
#[derive(Debug, Clone)]
pub struct Substitutor {
    mapping: BTreeMap<String, String>,
    prohibited: BTreeSet<String>,
    masked: bool,
}

impl Substitutor {
    pub fn new(prohibited: BTreeSet<String>) -> Substitutor {
        Substitutor { mapping: BTreeMap::new(), prohibited, masked: false }
    }

    /// The name an occurrence of `x` should carry here.
    pub fn subst(&self, x: &str) -> String {
        self.mapping.get(x).cloned().unwrap_or_else(|| x.to_string())
    }

    /// Crossing binder `x`: keep it if harmless, otherwise pick a fresh name
    /// and extend the pending renames for the body.
    pub fn rename(&self, gen: &Rc<RefCell<NameGen>>, x: &str) -> (String, Substitutor) {
        if self.prohibited.contains(x) {
            let fresh = gen.borrow_mut().next(x);
            let mut next = self.clone();
            next.mapping.insert(x.to_string(), fresh.clone());
            (fresh, next)
        } else {
            (x.to_string(), self.clone())
        }
    }

    pub fn is_masked(&self) -> bool {
        self.masked
    }

    pub fn masked(&self) -> Substitutor {
        let mut next = self.clone();
        next.masked = true;
        next
    }
}

/// The substitution `[x := payload]` as a handler table. Occurrences of `x`
/// become the payload unless masked; other occurrences apply the pending
/// renames; binders either mask (same name as `x`) or go through `rename`.
pub fn subst_table(
    gen: Rc<RefCell<NameGen>>,
    x: String,
    payload: Term,
) -> LamTransformer<Substitutor, Term> {
    let x_var = x.clone();
    let x_lam = x;
    LamTransformer::base(
        "subst",
        vec![
            c_var(move |_, s: &Substitutor, _, y: &String| {
                if !s.is_masked() && *y == x_var {
                    payload.clone()
                } else {
                    var(s.subst(y))
                }
            }),
            c_app(|_, s: &Substitutor, _, f, a| app((f.fx)(s), (a.fx)(s))),
            c_lam(move |_, s: &Substitutor, _, y: &String, body| {
                if *y == x_lam {
                    lam(y.clone(), (body.fx)(&s.masked()))
                } else {
                    let (y2, s2) = s.rename(&gen, y);
                    lam(y2, (body.fx)(&s2))
                }
            }),
        ],
    )
}

/// Capture-avoiding substitution of `payload` for free occurrences of `x`
/// in `body`. `gen` supplies names for binders that would otherwise capture
/// the payload's free variables.
pub fn subst(gen: &Rc<RefCell<NameGen>>, x: &str, payload: &Term, body: &Term) -> Term {
    let table = subst_table(gen.clone(), x.to_string(), payload.clone());
    lam_gcata(&table, &Substitutor::new(free_vars(payload)), body)
}

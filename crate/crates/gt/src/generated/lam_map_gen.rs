// Generated by `gt gen`: plugin `map` for declaration `lam`. Do not edit by hand.

use std::rc::Rc;

use super::lam_gen::*;

/// Rebuilds a `lam`, transforming every parameter position.
pub fn map_lam() -> LamTransformer<(), Lam> {
    LamTransformer::base(
        "map_lam",
        vec![
            c_var(|_, _, _, p1| Lam::Var(p1.clone())),
            c_app(|_, inh, _, p1, p2| Lam::App(Rc::new((p1.fx)(inh)), Rc::new((p2.fx)(inh)))),
            c_lam(|_, inh, _, p1, p2| Lam::Lam(p1.clone(), Rc::new((p2.fx)(inh)))),
        ],
    )
}

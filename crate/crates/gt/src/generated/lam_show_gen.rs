// Generated by `gt gen`: plugin `show` for declaration `lam`. Do not edit by hand.

use super::lam_gen::*;

/// Renders a `lam` as constructor-applied text.
pub fn show_lam() -> LamTransformer<(), String> {
    LamTransformer::base(
        "show_lam",
        vec![
            c_var(|_, _, _, p1| format!("Var ({})", p1)),
            c_app(|_, inh, _, p1, p2| format!("App ({}, {})", (p1.fx)(inh), (p2.fx)(inh))),
            c_lam(|_, inh, _, p1, p2| format!("Lam ({}, {})", p1, (p2.fx)(inh))),
        ],
    )
}

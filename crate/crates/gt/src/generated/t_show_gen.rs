// Generated by `gt gen`: plugin `show` for declaration `t`. Do not edit by hand.

use super::t_gen::*;

/// Renders a `t` as constructor-applied text.
pub fn show_t<A, B>() -> TTransformer<A, String, B, String, (), String>
where
    A: 'static,
    B: 'static,
{
    TTransformer::base(
        "show_t",
        vec![
            c_ta(|_, inh, _, p1| format!("Ta ({})", (p1.fx)(inh))),
            c_tb(|_, inh, _, p1| format!("Tb ({})", (p1.fx)(inh))),
            c_tag(|_, inh, _, p1, p2| format!("Tag ({}, {})", p1, (p2.fx)(inh))),
            c_both(|_, inh, _, p1, p2| format!("Both ({}, {})", (p1.fx)(inh), (p2.fx)(inh))),
        ],
    )
}

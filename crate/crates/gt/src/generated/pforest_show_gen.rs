// Generated by `gt gen`: plugin `show` for declaration `pforest`. Do not edit by hand.

use super::pforest_gen::*;

/// Renders a `pforest` as constructor-applied text.
pub fn show_pforest<A>() -> PforestTransformer<A, String, String, (), String>
where
    A: 'static,
{
    PforestTransformer::base(
        "show_pforest",
        vec![
            c_p_nil(|_, _, _| "PNil".to_string()),
            c_p_cons(|_, inh, _, p1, p2| format!("PCons ({}, {})", (p1.fx)(inh), (p2.fx)(inh))),
        ],
    )
}

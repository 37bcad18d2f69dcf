// Generated by `gt gen`: plugin `show` for declaration `neg`. Do not edit by hand.

use super::neg_gen::*;

/// Renders a `neg` as constructor-applied text.
pub fn show_neg<A>() -> NegTransformer<A, String, (), String>
where
    A: 'static,
{
    NegTransformer::base(
        "show_neg",
        vec![
            c_neg(|_, inh, _, p1| format!("Neg ({})", (p1.fx)(inh))),
        ],
    )
}

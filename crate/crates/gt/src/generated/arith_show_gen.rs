// Generated by `gt gen`: plugin `show` for declaration `arith`. Do not edit by hand.

use super::arith_gen::*;

/// Renders a `arith` as constructor-applied text.
pub fn show_arith<A>() -> ArithTransformer<A, String, (), String>
where
    A: 'static,
{
    ArithTransformer::base(
        "show_arith",
        vec![
            c_add(|_, inh, _, p1, p2| format!("Add ({}, {})", (p1.fx)(inh), (p2.fx)(inh))),
            c_mul(|_, inh, _, p1, p2| format!("Mul ({}, {})", (p1.fx)(inh), (p2.fx)(inh))),
        ],
    )
}

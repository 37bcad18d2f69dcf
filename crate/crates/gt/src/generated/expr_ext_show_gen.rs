// Generated by `gt gen`: plugin `show` for declaration `expr_ext`. Do not edit by hand.

use super::expr_ext_gen::*;

/// Renders a `expr_ext` as constructor-applied text.
pub fn show_expr_ext<A>() -> ExprExtTransformer<A, String, (), String>
where
    A: 'static,
{
    ExprExtTransformer::base(
        "show_expr_ext",
        vec![
            c_var(|_, _, _, p1| format!("Var ({})", p1)),
            c_add(|_, inh, _, p1, p2| format!("Add ({}, {})", (p1.fx)(inh), (p2.fx)(inh))),
            c_mul(|_, inh, _, p1, p2| format!("Mul ({}, {})", (p1.fx)(inh), (p2.fx)(inh))),
            c_neg(|_, inh, _, p1| format!("Neg ({})", (p1.fx)(inh))),
        ],
    )
}

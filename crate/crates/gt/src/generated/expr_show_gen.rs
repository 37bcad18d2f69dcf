// Generated by `gt gen`: plugin `show` for declaration `expr`. Do not edit by hand.

use super::expr_gen::*;

/// Renders a `expr` as constructor-applied text.
pub fn show_expr<A>() -> ExprTransformer<A, String, (), String>
where
    A: 'static,
{
    ExprTransformer::base(
        "show_expr",
        vec![
            c_var(|_, _, _, p1| format!("Var ({})", p1)),
            c_add(|_, inh, _, p1, p2| format!("Add ({}, {})", (p1.fx)(inh), (p2.fx)(inh))),
            c_mul(|_, inh, _, p1, p2| format!("Mul ({}, {})", (p1.fx)(inh), (p2.fx)(inh))),
        ],
    )
}

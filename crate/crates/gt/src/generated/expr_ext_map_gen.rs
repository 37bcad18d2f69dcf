// Generated by `gt gen`: plugin `map` for declaration `expr_ext`. Do not edit by hand.

use super::expr_ext_gen::*;

/// Rebuilds a `expr_ext`, transforming every parameter position.
pub fn map_expr_ext<A, AOut>() -> ExprExtTransformer<A, AOut, (), ExprExt<AOut>>
where
    A: 'static,
    AOut: 'static,
{
    ExprExtTransformer::base(
        "map_expr_ext",
        vec![
            c_var(|_, _, _, p1| ExprExt::Var(p1.clone())),
            c_add(|_, inh, s, p1, p2| ExprExt::Add((s.tp.a)(inh, &p1.x), (s.tp.a)(inh, &p2.x))),
            c_mul(|_, inh, s, p1, p2| ExprExt::Mul((s.tp.a)(inh, &p1.x), (s.tp.a)(inh, &p2.x))),
            c_neg(|_, inh, s, p1| ExprExt::Neg((s.tp.a)(inh, &p1.x))),
        ],
    )
}

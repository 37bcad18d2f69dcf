// Generated by `gt gen`: plugin `map` for declaration `expr`. Do not edit by hand.

use super::expr_gen::*;

/// Rebuilds a `expr`, transforming every parameter position.
pub fn map_expr<A, AOut>() -> ExprTransformer<A, AOut, (), Expr<AOut>>
where
    A: 'static,
    AOut: 'static,
{
    ExprTransformer::base(
        "map_expr",
        vec![
            c_var(|_, _, _, p1| Expr::Var(p1.clone())),
            c_add(|_, inh, s, p1, p2| Expr::Add((s.tp.a)(inh, &p1.x), (s.tp.a)(inh, &p2.x))),
            c_mul(|_, inh, s, p1, p2| Expr::Mul((s.tp.a)(inh, &p1.x), (s.tp.a)(inh, &p2.x))),
        ],
    )
}

// Generated by `gt gen`: plugin `foldl` for declaration `expr`. Do not edit by hand.

use super::expr_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_expr<A, Acc>() -> ExprTransformer<A, Acc, Acc, Acc>
where
    A: 'static,
    Acc: Clone + 'static,
{
    ExprTransformer::base(
        "foldl_expr",
        vec![
            c_var(|_, acc: &Acc, _, _| acc.clone()),
            c_add(|_, acc: &Acc, _, p1, p2| {
                let acc = (p1.fx)(acc);
                (p2.fx)(&acc)
            }),
            c_mul(|_, acc: &Acc, _, p1, p2| {
                let acc = (p1.fx)(acc);
                (p2.fx)(&acc)
            }),
        ],
    )
}

// Generated by `gt gen`: plugin `foldl` for declaration `expr_ext`. Do not edit by hand.

use super::expr_ext_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_expr_ext<A, Acc>() -> ExprExtTransformer<A, Acc, Acc, Acc>
where
    A: 'static,
    Acc: Clone + 'static,
{
    ExprExtTransformer::base(
        "foldl_expr_ext",
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
            c_neg(|_, acc: &Acc, _, p1| (p1.fx)(acc)),
        ],
    )
}

// Generated by `gt gen`: plugin `foldl` for declaration `arith`. Do not edit by hand.

use super::arith_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_arith<A, Acc>() -> ArithTransformer<A, Acc, Acc, Acc>
where
    A: 'static,
    Acc: Clone + 'static,
{
    ArithTransformer::base(
        "foldl_arith",
        vec![
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

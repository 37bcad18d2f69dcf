// Generated by `gt gen`: plugin `foldl` for declaration `neg`. Do not edit by hand.

use super::neg_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_neg<A, Acc>() -> NegTransformer<A, Acc, Acc, Acc>
where
    A: 'static,
    Acc: Clone + 'static,
{
    NegTransformer::base(
        "foldl_neg",
        vec![
            c_neg(|_, acc: &Acc, _, p1| (p1.fx)(acc)),
        ],
    )
}

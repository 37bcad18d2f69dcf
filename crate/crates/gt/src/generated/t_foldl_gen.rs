// Generated by `gt gen`: plugin `foldl` for declaration `t`. Do not edit by hand.

use super::t_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_t<A, B, Acc>() -> TTransformer<A, Acc, B, Acc, Acc, Acc>
where
    A: 'static,
    B: 'static,
    Acc: Clone + 'static,
{
    TTransformer::base(
        "foldl_t",
        vec![
            c_ta(|_, acc: &Acc, _, p1| (p1.fx)(acc)),
            c_tb(|_, acc: &Acc, _, p1| (p1.fx)(acc)),
            c_tag(|_, acc: &Acc, _, _, p2| (p2.fx)(acc)),
            c_both(|_, acc: &Acc, _, p1, p2| {
                let acc = (p1.fx)(acc);
                (p2.fx)(&acc)
            }),
        ],
    )
}

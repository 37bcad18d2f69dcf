// Generated by `gt gen`: plugin `foldl` for declaration `pforest`. Do not edit by hand.

use super::pforest_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_pforest<A, Acc>() -> PforestTransformer<A, Acc, Acc, Acc, Acc>
where
    A: 'static,
    Acc: Clone + 'static,
{
    PforestTransformer::base(
        "foldl_pforest",
        vec![
            c_p_nil(|_, acc: &Acc, _| acc.clone()),
            c_p_cons(|_, acc: &Acc, _, p1, p2| {
                let acc = (p1.fx)(acc);
                (p2.fx)(&acc)
            }),
        ],
    )
}

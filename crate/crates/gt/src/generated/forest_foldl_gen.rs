// Generated by `gt gen`: plugin `foldl` for declaration `forest`. Do not edit by hand.

use super::forest_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_forest<Acc>() -> ForestTransformer<Acc, Acc, Acc>
where
    Acc: Clone + 'static,
{
    ForestTransformer::base(
        "foldl_forest",
        vec![
            c_nil(|_, acc: &Acc, _| acc.clone()),
            c_cons(|_, acc: &Acc, _, p1, p2| {
                let acc = (p1.fx)(acc);
                (p2.fx)(&acc)
            }),
        ],
    )
}

// Generated by `gt gen`: plugin `foldl` for declaration `lam`. Do not edit by hand.

use super::lam_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_lam<Acc>() -> LamTransformer<Acc, Acc>
where
    Acc: Clone + 'static,
{
    LamTransformer::base(
        "foldl_lam",
        vec![
            c_var(|_, acc: &Acc, _, _| acc.clone()),
            c_app(|_, acc: &Acc, _, p1, p2| {
                let acc = (p1.fx)(acc);
                (p2.fx)(&acc)
            }),
            c_lam(|_, acc: &Acc, _, _, p2| (p2.fx)(acc)),
        ],
    )
}

// Generated by `gt gen`: plugin `foldl` for declaration `var`. Do not edit by hand.

use super::var_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_var<Acc>() -> VarTransformer<Acc, Acc>
where
    Acc: Clone + 'static,
{
    VarTransformer::base(
        "foldl_var",
        vec![
            c_var(|_, acc: &Acc, _, _| acc.clone()),
        ],
    )
}

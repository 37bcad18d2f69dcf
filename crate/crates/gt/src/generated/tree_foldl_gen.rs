// Generated by `gt gen`: plugin `foldl` for declaration `tree`. Do not edit by hand.

use super::tree_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_tree<Acc>() -> TreeTransformer<Acc, Acc, Acc>
where
    Acc: Clone + 'static,
{
    TreeTransformer::base(
        "foldl_tree",
        vec![
            c_leaf(|_, acc: &Acc, _, _| acc.clone()),
            c_node(|_, acc: &Acc, _, p1| (p1.fx)(acc)),
        ],
    )
}

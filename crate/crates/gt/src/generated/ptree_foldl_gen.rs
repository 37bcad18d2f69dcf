// Generated by `gt gen`: plugin `foldl` for declaration `ptree`. Do not edit by hand.

use super::ptree_gen::*;

/// Threads an accumulator left to right through every parameter and
/// recursive position.
pub fn foldl_ptree<A, Acc>() -> PtreeTransformer<A, Acc, Acc, Acc, Acc>
where
    A: 'static,
    Acc: Clone + 'static,
{
    PtreeTransformer::base(
        "foldl_ptree",
        vec![
            c_p_leaf(|_, acc: &Acc, _, p1| (p1.fx)(acc)),
            c_p_node(|_, acc: &Acc, _, p1| (p1.fx)(acc)),
        ],
    )
}

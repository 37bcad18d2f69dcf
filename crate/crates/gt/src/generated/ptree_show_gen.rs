// Generated by `gt gen`: plugin `show` for declaration `ptree`. Do not edit by hand.

use super::ptree_gen::*;

/// Renders a `ptree` as constructor-applied text.
pub fn show_ptree<A>() -> PtreeTransformer<A, String, String, (), String>
where
    A: 'static,
{
    PtreeTransformer::base(
        "show_ptree",
        vec![
            c_p_leaf(|_, inh, _, p1| format!("PLeaf ({})", (p1.fx)(inh))),
            c_p_node(|_, inh, _, p1| format!("PNode ({})", (p1.fx)(inh))),
        ],
    )
}

// Generated by `gt gen`: plugin `show` for declaration `tree`. Do not edit by hand.

use super::tree_gen::*;

/// Renders a `tree` as constructor-applied text.
pub fn show_tree() -> TreeTransformer<String, (), String> {
    TreeTransformer::base(
        "show_tree",
        vec![
            c_leaf(|_, _, _, p1| format!("Leaf ({})", p1)),
            c_node(|_, inh, _, p1| format!("Node ({})", (p1.fx)(inh))),
        ],
    )
}

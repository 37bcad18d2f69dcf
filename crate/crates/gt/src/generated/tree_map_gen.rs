// Generated by `gt gen`: plugin `map` for declaration `tree`. Do not edit by hand.

use std::rc::Rc;

use super::tree_gen::*;
use super::forest_gen::Forest;

/// Rebuilds a `tree`, transforming every parameter position.
pub fn map_tree() -> TreeTransformer<Forest, (), Tree> {
    TreeTransformer::base(
        "map_tree",
        vec![
            c_leaf(|_, _, _, p1| Tree::Leaf(p1.clone())),
            c_node(|_, inh, _, p1| Tree::Node(Rc::new((p1.fx)(inh)))),
        ],
    )
}

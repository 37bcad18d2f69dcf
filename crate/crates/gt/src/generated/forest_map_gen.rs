// Generated by `gt gen`: plugin `map` for declaration `forest`. Do not edit by hand.

use std::rc::Rc;

use super::forest_gen::*;
use super::tree_gen::Tree;

/// Rebuilds a `forest`, transforming every parameter position.
pub fn map_forest() -> ForestTransformer<Tree, (), Forest> {
    ForestTransformer::base(
        "map_forest",
        vec![
            c_nil(|_, _, _| Forest::Nil),
            c_cons(|_, inh, _, p1, p2| Forest::Cons(Rc::new((p1.fx)(inh)), Rc::new((p2.fx)(inh)))),
        ],
    )
}

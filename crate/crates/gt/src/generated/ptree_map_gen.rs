// Generated by `gt gen`: plugin `map` for declaration `ptree`. Do not edit by hand.

use std::rc::Rc;

use super::ptree_gen::*;
use super::pforest_gen::Pforest;

/// Rebuilds a `ptree`, transforming every parameter position.
pub fn map_ptree<A, AOut>() -> PtreeTransformer<A, AOut, Pforest<AOut>, (), Ptree<AOut>>
where
    A: 'static,
    AOut: 'static,
{
    PtreeTransformer::base(
        "map_ptree",
        vec![
            c_p_leaf(|_, inh, s, p1| Ptree::PLeaf((s.tp.a)(inh, &p1.x))),
            c_p_node(|_, inh, _, p1| Ptree::PNode(Rc::new((p1.fx)(inh)))),
        ],
    )
}

// Generated by `gt gen`: plugin `map` for declaration `pforest`. Do not edit by hand.

use std::rc::Rc;

use super::pforest_gen::*;
use super::ptree_gen::Ptree;

/// Rebuilds a `pforest`, transforming every parameter position.
pub fn map_pforest<A, AOut>() -> PforestTransformer<A, AOut, Ptree<AOut>, (), Pforest<AOut>>
where
    A: 'static,
    AOut: 'static,
{
    PforestTransformer::base(
        "map_pforest",
        vec![
            c_p_nil(|_, _, _| Pforest::PNil),
            c_p_cons(|_, inh, _, p1, p2| Pforest::PCons(Rc::new((p1.fx)(inh)), Rc::new((p2.fx)(inh)))),
        ],
    )
}

// Generated by `gt gen`: plugin `map` for declaration `t`. Do not edit by hand.

use std::rc::Rc;

use super::t_gen::*;

/// Rebuilds a `t`, transforming every parameter position.
pub fn map_t<A, AOut, B, BOut>() -> TTransformer<A, AOut, B, BOut, (), T<AOut, BOut>>
where
    A: 'static,
    AOut: 'static,
    B: 'static,
    BOut: 'static,
{
    TTransformer::base(
        "map_t",
        vec![
            c_ta(|_, inh, s, p1| T::Ta((s.tp.a)(inh, &p1.x))),
            c_tb(|_, inh, s, p1| T::Tb((s.tp.b)(inh, &p1.x))),
            c_tag(|_, inh, _, p1, p2| T::Tag(p1.clone(), Rc::new((p2.fx)(inh)))),
            c_both(|_, inh, _, p1, p2| T::Both(Rc::new((p1.fx)(inh)), Rc::new((p2.fx)(inh)))),
        ],
    )
}

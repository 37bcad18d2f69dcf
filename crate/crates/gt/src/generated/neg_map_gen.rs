// Generated by `gt gen`: plugin `map` for declaration `neg`. Do not edit by hand.

use super::neg_gen::*;

/// Rebuilds a `neg`, transforming every parameter position.
pub fn map_neg<A, AOut>() -> NegTransformer<A, AOut, (), Neg<AOut>>
where
    A: 'static,
    AOut: 'static,
{
    NegTransformer::base(
        "map_neg",
        vec![
            c_neg(|_, inh, s, p1| Neg::Neg((s.tp.a)(inh, &p1.x))),
        ],
    )
}

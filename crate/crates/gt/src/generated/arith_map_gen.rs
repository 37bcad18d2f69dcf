// Generated by `gt gen`: plugin `map` for declaration `arith`. Do not edit by hand.

use super::arith_gen::*;

/// Rebuilds a `arith`, transforming every parameter position.
pub fn map_arith<A, AOut>() -> ArithTransformer<A, AOut, (), Arith<AOut>>
where
    A: 'static,
    AOut: 'static,
{
    ArithTransformer::base(
        "map_arith",
        vec![
            c_add(|_, inh, s, p1, p2| Arith::Add((s.tp.a)(inh, &p1.x), (s.tp.a)(inh, &p2.x))),
            c_mul(|_, inh, s, p1, p2| Arith::Mul((s.tp.a)(inh, &p1.x), (s.tp.a)(inh, &p2.x))),
        ],
    )
}

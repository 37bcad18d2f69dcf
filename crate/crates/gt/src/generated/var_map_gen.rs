// Generated by `gt gen`: plugin `map` for declaration `var`. Do not edit by hand.

use super::var_gen::*;

/// Rebuilds a `var`, transforming every parameter position.
pub fn map_var() -> VarTransformer<(), Var> {
    VarTransformer::base(
        "map_var",
        vec![
            c_var(|_, _, _, p1| Var::Var(p1.clone())),
        ],
    )
}

// Generated by `gt gen`: plugin `show` for declaration `forest`. Do not edit by hand.

use super::forest_gen::*;

/// Renders a `forest` as constructor-applied text.
pub fn show_forest() -> ForestTransformer<String, (), String> {
    ForestTransformer::base(
        "show_forest",
        vec![
            c_nil(|_, _, _| "Nil".to_string()),
            c_cons(|_, inh, _, p1, p2| format!("Cons ({}, {})", (p1.fx)(inh), (p2.fx)(inh))),
        ],
    )
}

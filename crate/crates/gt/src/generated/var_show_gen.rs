// Generated by `gt gen`: plugin `show` for declaration `var`. Do not edit by hand.

use super::var_gen::*;

/// Renders a `var` as constructor-applied text.
pub fn show_var() -> VarTransformer<(), String> {
    VarTransformer::base(
        "show_var",
        vec![
            c_var(|_, _, _, p1| format!("Var ({})", p1)),
        ],
    )
}

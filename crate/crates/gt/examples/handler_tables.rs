//! Anatomy of a transformation object: a named base layer of per-constructor
//! handlers, extension layers stacked on top, and late-bound recursion.
//!
//! The key property on display is *late binding*. The `App` handler below
//! never calls itself; it recurses through the argument's `fx` field, which
//! closes over whatever table the traversal was started with. Extending one
//! handler therefore changes the behaviour of every recursive call, including
//! calls made from handlers defined in older layers.

use gt::generated::lam_gen::{c_app, c_lam, c_var, lam_gcata, LamTransformer};
use gt::lambda::{app, lam, var, Term};

/// A from-scratch pretty printer. The generated `show_lam` table is the same
/// shape; it is written out here so every moving part is on the page.
fn show() -> LamTransformer<(), String> {
    LamTransformer::base(
        "show",
        vec![
            c_var(|_, _, _, name| format!("Var ({name})")),
            c_app(|_, inh, _, f, a| format!("App ({}, {})", (f.fx)(inh), (a.fx)(inh))),
            c_lam(|_, inh, _, x, body| format!("Lam ({x}, {})", (body.fx)(inh))),
        ],
    )
}

fn render(table: &LamTransformer<(), String>, t: &Term) -> String {
    lam_gcata(table, &(), t)
}

fn main() {
    let t = app(lam("x", app(var("x"), var("x"))), var("y"));

    let plain = show();
    println!("plain table:    {}", render(&plain, &t));

    // One extension layer, overriding a single handler. The other two
    // handlers come from the base layer but now recurse into the new c_Var.
    let bare = plain
        .extend("bare_vars", vec![c_var(|_, _, _, name| name.clone())])
        .expect("show declares c_Var");
    println!("with bare_vars: {}", render(&bare, &t));

    // Extension is persistent: the original table is untouched.
    assert_eq!(render(&plain, &t), "App (Lam (x, App (Var (x), Var (x))), Var (y))");
    assert_eq!(render(&bare, &t), "App (Lam (x, App (x, x)), y)");

    // Layers keep their names, oldest first, and every handler knows which
    // layer defined it. Lookup runs newest layer first, and the table's
    // identity is the newest layer's name.
    assert_eq!(plain.name(), "show");
    assert_eq!(bare.name(), "bare_vars");
    assert_eq!(bare.layer_names(), vec!["show", "bare_vars"]);
    assert_eq!(bare.defining_layer("c_Var"), Some("bare_vars"));
    assert_eq!(bare.defining_layer("c_App"), Some("show"));
    println!(
        "layers of the extended table: {:?}",
        bare.layer_names()
    );

    // Extending with a handler the base never declared is rejected; tables
    // cannot silently grow new slots.
    let (_, var_entry) = c_var::<(), String>(|_, _, _, name| name.clone());
    match plain.extend("typo", vec![("c_Vra".to_string(), var_entry)]) {
        Err(err) => println!("bad extension is refused: {err}"),
        Ok(_) => unreachable!("c_Vra is not a declared handler"),
    }
}

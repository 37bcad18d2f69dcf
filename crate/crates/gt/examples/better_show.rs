//! Upgrading the generated printer without touching its source: override the
//! variable handler and let every other constructor pick up the change
//! through late binding.
//!
//! `show_lam` wraps variables as `Var (x)`. For readable output we want bare
//! names, but only variables should change; the `App` and `Lam` arms stay as
//! generated. One extension layer does it.

use gt::generated::lam_gen::{c_var, lam_gcata};
use gt::generated::lam_show_gen::show_lam;
use gt::lambda::{app, lam, var};

fn main() {
    let t = app(lam("x", var("x")), var("y"));

    let plain = show_lam();
    println!("generated show: {}", lam_gcata(&plain, &(), &t));

    let better = plain
        .extend("bare_vars", vec![c_var(|_, _, _, name| name.clone())])
        .expect("show_lam declares c_Var");
    let rendered = lam_gcata(&better, &(), &t);
    println!("better show:    {rendered}");

    // The base layer's App and Lam handlers recurse through the table they
    // were invoked with, so their subterms render bare too.
    assert_eq!(rendered, "App (Lam (x, x), y)");
    assert_eq!(lam_gcata(&plain, &(), &t), "App (Lam (x, Var (x)), Var (y))");
}

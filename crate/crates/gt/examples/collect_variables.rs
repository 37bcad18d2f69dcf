//! Folds as transformation objects: the generated `foldl_lam` threads an
//! accumulator through every position and collects nothing by itself.
//! Extensions decide what to collect.

use gt::generated::lam_foldl_gen::foldl_lam;
use gt::generated::lam_gen::{c_app, lam_gcata};
use gt::lambda::{all_names, app, free_vars, lam, parse_term, term_vars, var};

fn main() {
    // \f. (\x. f (x x)) (\x. f (x x)), with a stray free y applied last.
    let t = app(
        parse_term(r"\f. (\x. f (x x)) (\x. f (x x))").expect("well formed"),
        var("y"),
    );

    // The library's collectors are foldl_lam extensions; see gt::lambda.
    println!("occurrences: {:?}", term_vars(&t));
    println!("free:        {:?}", free_vars(&t));
    println!("all names:   {:?}", all_names(&t));
    assert_eq!(free_vars(&t), ["y"].map(String::from).into_iter().collect());

    // A custom fold along the same lines: count applications. Only c_App
    // changes; variables and abstractions keep the neutral threading.
    let count_apps = foldl_lam::<usize>()
        .extend(
            "count_apps",
            vec![c_app(|_, n: &usize, _, f, a| {
                let n = (f.fx)(&(n + 1));
                (a.fx)(&n)
            })],
        )
        .expect("the fold declares c_App");
    let apps = lam_gcata(&count_apps, &0, &t);
    println!("applications: {apps}");
    assert_eq!(apps, 6);

    // The unextended fold returns its seed unchanged on any term.
    assert_eq!(lam_gcata(&foldl_lam::<usize>(), &42, &t), 42);

    let s = lam("z", var("z"));
    assert!(free_vars(&s).is_empty());
    println!("the identity combinator has no free variables");
}

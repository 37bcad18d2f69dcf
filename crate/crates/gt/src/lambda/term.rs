use std::collections::BTreeSet;

use crate::generated::lam_foldl_gen::foldl_lam;
use crate::generated::lam_gen::{c_lam, c_var, lam_gcata, Lam, LamTransformer};
use crate::generated::lam_show_gen::show_lam;

/// Lambda terms are exactly the generated `lam` datatype.
pub type Term = Lam;

pub fn var(name: impl Into<String>) -> Term {
    Lam::Var(name.into())
}

pub fn app(f: Term, arg: Term) -> Term {
    Lam::App(std::rc::Rc::new(f), std::rc::Rc::new(arg))
}

pub fn lam(binder: impl Into<String>, body: Term) -> Term {
    Lam::Lam(binder.into(), std::rc::Rc::new(body))
}

/// Constructor-applied rendering, e.g. `App (Lam (x, Var (x)), Var (y))`.
pub fn show_term(t: &Term) -> String {
    lam_gcata(&show_lam(), &(), t)
}

pub type Names = BTreeSet<String>;

/// The occurrence collector: a fold that adds every variable occurrence to
/// the accumulator. Binders are not occurrences and are not collected.
fn occurrences() -> LamTransformer<Names, Names> {
    foldl_lam::<Names>()
        .extend(
            "occurrences",
            vec![c_var(|_, acc: &Names, _, name| {
                let mut acc = acc.clone();
                acc.insert(name.clone());
                acc
            })],
        )
        .expect("the fold declares c_Var")
}

/// Names of all variable occurrences in `t`, free or bound.
pub fn term_vars(t: &Term) -> Names {
    lam_gcata(&occurrences(), &Names::new(), t)
}

/// The free variables of `t`: the occurrence collector with the binder
/// handler re-bound to fold the body separately and drop the bound name.
pub fn free_vars(t: &Term) -> Names {
    let table = occurrences()
        .extend(
            "drop_bound",
            vec![c_lam(|_, acc: &Names, _, binder, body| {
                let mut inner: Names = (body.fx)(&Names::new());
                inner.remove(binder);
                let mut acc = acc.clone();
                acc.extend(inner);
                acc
            })],
        )
        .expect("the fold declares c_Lam");
    lam_gcata(&table, &Names::new(), t)
}

/// Every name in `t`: occurrences plus binders. Fresh-name generation seeds
/// from this rather than from occurrences alone, so a binder that binds
/// nothing still blocks its own name from being handed out.
pub fn all_names(t: &Term) -> Names {
    let table = occurrences()
        .extend(
            "add_binders",
            vec![c_lam(|_, acc: &Names, _, binder, body| {
                let mut acc = acc.clone();
                acc.insert(binder.clone());
                (body.fx)(&acc)
            })],
        )
        .expect("the fold declares c_Lam");
    lam_gcata(&table, &Names::new(), t)
}

/// Equality up to consistent renaming of bound variables, by comparing
/// binder-stack indices on the fly.
pub fn alpha_eq(t1: &Term, t2: &Term) -> bool {
    fn go(t1: &Term, t2: &Term, env1: &mut Vec<String>, env2: &mut Vec<String>) -> bool {
        match (t1, t2) {
            (Lam::Var(x), Lam::Var(y)) => {
                let d1 = env1.iter().rev().position(|b| b == x);
                let d2 = env2.iter().rev().position(|b| b == y);
                match (d1, d2) {
                    (Some(i), Some(j)) => i == j,
                    (None, None) => x == y,
                    _ => false,
                }
            }
            (Lam::App(f1, x1), Lam::App(f2, x2)) => {
                go(f1, f2, env1, env2) && go(x1, x2, env1, env2)
            }
            (Lam::Lam(x, b1), Lam::Lam(y, b2)) => {
                env1.push(x.clone());
                env2.push(y.clone());
                let r = go(b1, b2, env1, env2);
                env1.pop();
                env2.pop();
                r
            }
            _ => false,
        }
    }
    go(t1, t2, &mut Vec::new(), &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn occurrences_exclude_binders() {
        // x (λy. x) mentions y only as a binder.
        let t = app(var("x"), lam("y", var("x")));
        assert_eq!(term_vars(&t), Names::from(["x".to_string()]));
        assert_eq!(all_names(&t), Names::from(["x".to_string(), "y".to_string()]));
    }

    #[test]
    fn single_leaf_and_bound_occurrence() {
        assert_eq!(term_vars(&var("x")), Names::from(["x".to_string()]));
        assert_eq!(term_vars(&lam("x", var("x"))), Names::from(["x".to_string()]));
    }

    #[test]
    fn free_vars_remove_the_binder() {
        let t = lam("x", app(var("x"), var("y")));
        assert_eq!(free_vars(&t), Names::from(["y".to_string()]));
        assert_eq!(free_vars(&var("z")), Names::from(["z".to_string()]));
        // (λx.x) x: the outer x is free even though an inner binder reuses it.
        let t = app(lam("x", var("x")), var("x"));
        assert_eq!(free_vars(&t), Names::from(["x".to_string()]));
    }

    #[test]
    fn alpha_examples() {
        assert!(alpha_eq(&lam("x", var("x")), &lam("y", var("y"))));
        assert!(!alpha_eq(&lam("x", var("z")), &lam("x", var("w"))));
        assert!(alpha_eq(
            &lam("y'", app(var("y"), var("y'"))),
            &lam("a", app(var("y"), var("a"))),
        ));
    }

    #[test]
    fn show_renders_nested_constructors() {
        let t = lam("x", var("x"));
        assert_eq!(show_term(&t), "Lam (x, Var (x))");
    }
}

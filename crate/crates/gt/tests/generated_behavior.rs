//! Drives the checked-in generated tables end to end: rendering, folding,
//! mapping, extension, and the mutual-recursion knots.

use std::rc::Rc;

use gt_runtime::TransFn;

use gt::generated::forest_gen::Forest;
use gt::generated::forest_show_gen::show_forest;
use gt::generated::lam_foldl_gen::foldl_lam;
use gt::generated::lam_gen::{c_var, lam_gcata, method_slot, virtual_slot, Lam, LamTransformer};
use gt::generated::lam_show_gen::show_lam;
use gt::generated::pforest_foldl_gen::foldl_pforest;
use gt::generated::pforest_gen::Pforest;
use gt::generated::pforest_map_gen::map_pforest;
use gt::generated::ptree_foldl_gen::foldl_ptree;
use gt::generated::ptree_gen::{ptree_rec, Ptree};
use gt::generated::ptree_map_gen::map_ptree;
use gt::generated::t_foldl_gen::foldl_t;
use gt::generated::t_gen::{t_gcata, T};
use gt::generated::t_map_gen::map_t;
use gt::generated::tree_gen::{tree_rec, Tree};
use gt::generated::tree_show_gen::show_tree;

fn v(name: &str) -> Rc<Lam> {
    Rc::new(Lam::Var(name.to_string()))
}

fn app(f: Rc<Lam>, a: Rc<Lam>) -> Rc<Lam> {
    Rc::new(Lam::App(f, a))
}

fn lam(x: &str, b: Rc<Lam>) -> Rc<Lam> {
    Rc::new(Lam::Lam(x.to_string(), b))
}

#[test]
fn show_renders_constructor_applied_text() {
    // (\x. x) y
    let t = app(lam("x", v("x")), v("y"));
    assert_eq!(
        lam_gcata(&show_lam(), &(), &t),
        "App (Lam (x, Var (x)), Var (y))"
    );
}

#[test]
fn extending_show_changes_rendering_at_depth() {
    let t = app(lam("x", v("x")), v("y"));
    let bare = show_lam()
        .extend("bare_vars", vec![c_var(|_, _, _, name| name.clone())])
        .unwrap();
    assert_eq!(lam_gcata(&bare, &(), &t), "App (Lam (x, x), y)");
    // The base table is untouched.
    assert_eq!(
        lam_gcata(&show_lam(), &(), &t),
        "App (Lam (x, Var (x)), Var (y))"
    );
}

#[test]
fn foldl_extension_collects_variables_in_order() {
    // x (\y. z w)
    let t = app(v("x"), lam("y", app(v("z"), v("w"))));
    let collect = foldl_lam::<Vec<String>>()
        .extend(
            "collect_vars",
            vec![c_var(|_, acc: &Vec<String>, _, name| {
                let mut out = acc.clone();
                out.push(name.clone());
                out
            })],
        )
        .unwrap();
    assert_eq!(
        lam_gcata(&collect, &Vec::new(), &t),
        vec!["x".to_string(), "z".to_string(), "w".to_string()]
    );
}

#[test]
fn map_rebuilds_both_parameters_of_a_two_parameter_type() {
    let val: Rc<T<i64, bool>> = Rc::new(T::Both(
        Rc::new(T::Ta(1)),
        Rc::new(T::Tag("k".to_string(), Rc::new(T::Tb(true)))),
    ));
    let fa: TransFn<(), i64, i64> = Rc::new(|_, x| x + 1);
    let fb: TransFn<(), bool, bool> = Rc::new(|_, b| !b);
    let mapped = t_gcata(fa, fb, &map_t(), &(), &val);
    assert_eq!(
        mapped,
        T::Both(
            Rc::new(T::Ta(2)),
            Rc::new(T::Tag("k".to_string(), Rc::new(T::Tb(false)))),
        )
    );
}

#[test]
fn foldl_threads_left_to_right_through_parameters() {
    let val: Rc<T<i64, bool>> = Rc::new(T::Both(
        Rc::new(T::Ta(1)),
        Rc::new(T::Tag("k".to_string(), Rc::new(T::Both(
            Rc::new(T::Ta(2)),
            Rc::new(T::Tb(true)),
        )))),
    ));
    let fa: TransFn<i64, i64, i64> = Rc::new(|acc, x| acc + x);
    let fb: TransFn<i64, bool, i64> = Rc::new(|acc, b| if *b { acc + 100 } else { *acc });
    assert_eq!(t_gcata(fa, fb, &foldl_t(), &0, &val), 103);
}

#[test]
fn the_tree_forest_knot_shows_through_both_members() {
    let t = Tree::Node(Rc::new(Forest::Cons(
        Rc::new(Tree::Leaf("a".to_string())),
        Rc::new(Forest::Cons(
            Rc::new(Tree::Leaf("b".to_string())),
            Rc::new(Forest::Nil),
        )),
    )));
    assert_eq!(
        tree_rec(&show_tree(), &show_forest(), &(), &t),
        "Node (Cons (Leaf (a), Cons (Leaf (b), Nil)))"
    );
}

#[test]
fn the_parameterized_knot_maps_and_folds() {
    let pt = Ptree::PNode(Rc::new(Pforest::PCons(
        Rc::new(Ptree::PLeaf(1)),
        Rc::new(Pforest::PCons(
            Rc::new(Ptree::PNode(Rc::new(Pforest::PNil))),
            Rc::new(Pforest::PCons(Rc::new(Ptree::PLeaf(2)), Rc::new(Pforest::PNil))),
        )),
    )));

    let inc: TransFn<(), i64, i64> = Rc::new(|_, x| x + 1);
    let mapped = ptree_rec(inc.clone(), &map_ptree(), inc, &map_pforest(), &(), &pt);
    assert_eq!(
        mapped,
        Ptree::PNode(Rc::new(Pforest::PCons(
            Rc::new(Ptree::PLeaf(2)),
            Rc::new(Pforest::PCons(
                Rc::new(Ptree::PNode(Rc::new(Pforest::PNil))),
                Rc::new(Pforest::PCons(Rc::new(Ptree::PLeaf(3)), Rc::new(Pforest::PNil))),
            )),
        )))
    );

    let add: TransFn<i64, i64, i64> = Rc::new(|acc, x| acc + x);
    let sum = ptree_rec(add.clone(), &foldl_ptree(), add, &foldl_pforest(), &0, &pt);
    assert_eq!(sum, 3);
}

#[test]
fn methods_declared_virtual_dispatch_once_provided() {
    let base = LamTransformer::base(
        "named",
        vec![c_var(|_, _, _, name| name.clone()), virtual_slot("banner")],
    );
    let with_banner = base
        .extend(
            "with_banner",
            vec![method_slot("banner", |this, inh, s| {
                format!("<{}>", lam_gcata(this, inh, &s.x))
            })],
        )
        .unwrap();
    let term = v("x");
    let trans = with_banner.clone();
    let f: TransFn<(), Lam, String> = Rc::new(move |i, s| lam_gcata(&trans, i, s));
    let aug = gt_runtime::make_aug(term.as_ref().clone(), f, gt::generated::lam_gen::LamTpo);
    assert_eq!(
        gt::generated::lam_gen::call_method(&with_banner, "banner", &(), &aug),
        "<x>"
    );
}

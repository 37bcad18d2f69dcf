// Generated by `gt gen` from declaration `forest`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, TransFn, Transformer, make_aug};

use super::tree_gen::{Tree, TreeTransformer};

/// The `forest` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Forest {
    Nil,
    Cons(Rc<Tree>, Rc<Forest>),
}

/// Per-parameter transformations; `forest` has none.
#[derive(Clone)]
pub struct ForestTpo;

/// The whole-subject augmented argument.
pub type ForestAug<Inh, Syn> = Aug<Inh, Forest, Syn, ForestTpo>;
/// A `tree`-typed argument.
pub type ForestArgTree<TreeSyn, Inh> = Aug<Inh, Tree, TreeSyn, ForestTpo>;

/// Handler-table slots for `forest`: one shape per constructor plus
/// named auxiliary methods.
pub enum ForestSlot<TreeSyn, Inh, Syn> {
    CNil(Rc<dyn Fn(&ForestTransformer<TreeSyn, Inh, Syn>, &Inh, &ForestAug<Inh, Syn>) -> Syn>),
    CCons(Rc<dyn Fn(&ForestTransformer<TreeSyn, Inh, Syn>, &Inh, &ForestAug<Inh, Syn>, &ForestArgTree<TreeSyn, Inh>, &ForestAug<Inh, Syn>) -> Syn>),
    Method(Rc<dyn Fn(&ForestTransformer<TreeSyn, Inh, Syn>, &Inh, &ForestAug<Inh, Syn>) -> Syn>),
}

impl<TreeSyn, Inh, Syn> Clone for ForestSlot<TreeSyn, Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CNil(h) => Self::CNil(h.clone()),
            Self::CCons(h) => Self::CCons(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `forest`.
pub type ForestTransformer<TreeSyn, Inh, Syn> = Transformer<ForestSlot<TreeSyn, Inh, Syn>>;

/// Entry builder for `Nil`.
pub fn c_nil<TreeSyn, Inh, Syn>(
    h: impl Fn(&ForestTransformer<TreeSyn, Inh, Syn>, &Inh, &ForestAug<Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<ForestSlot<TreeSyn, Inh, Syn>>)
where
    TreeSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Nil".to_string(), Entry::Defined(ForestSlot::CNil(Rc::new(h))))
}

/// Entry builder for `Cons`.
pub fn c_cons<TreeSyn, Inh, Syn>(
    h: impl Fn(&ForestTransformer<TreeSyn, Inh, Syn>, &Inh, &ForestAug<Inh, Syn>, &ForestArgTree<TreeSyn, Inh>, &ForestAug<Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<ForestSlot<TreeSyn, Inh, Syn>>)
where
    TreeSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Cons".to_string(), Entry::Defined(ForestSlot::CCons(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<TreeSyn, Inh, Syn>(
    name: &str,
    h: impl Fn(&ForestTransformer<TreeSyn, Inh, Syn>, &Inh, &ForestAug<Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<ForestSlot<TreeSyn, Inh, Syn>>)
where
    TreeSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(ForestSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<TreeSyn, Inh, Syn>(name: &str) -> (String, Entry<ForestSlot<TreeSyn, Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<TreeSyn, Inh, Syn>(
    trans: &ForestTransformer<TreeSyn, Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &ForestAug<Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        ForestSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Traverses one `forest` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn forest_gcata<TreeSyn, Inh, Syn>(
    co_tree: TransFn<Inh, Tree, TreeSyn>,
    trans: &ForestTransformer<TreeSyn, Inh, Syn>,
    inh: &Inh,
    subj: &Forest,
) -> Syn
where
    TreeSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, Forest, Syn> = {
        let co_tree = co_tree.clone();
        let trans = trans.clone();
        Rc::new(move |i, s| forest_gcata(co_tree.clone(), &trans, i, s))
    };
    let tpo = ForestTpo;
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        Forest::Nil => match trans.slot("c_Nil") {
            ForestSlot::CNil(h) => h(trans, inh, &subj_arg),
            _ => panic!("slot `c_Nil` in transformer `{}` has the wrong shape", trans.name()),
        },
        Forest::Cons(p1, p2) => match trans.slot("c_Cons") {
            ForestSlot::CCons(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.as_ref().clone(), co_tree.clone(), tpo.clone()),
                &make_aug(p2.as_ref().clone(), self_f.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Cons` in transformer `{}` has the wrong shape", trans.name()),
        },
    }
}

/// Ties the `tree`/`forest` cluster: every member's table traverses together.
pub fn forest_rec<TreeSyn, Inh, Syn>(
    tree_trans: &TreeTransformer<Syn, Inh, TreeSyn>,
    forest_trans: &ForestTransformer<TreeSyn, Inh, Syn>,
    inh: &Inh,
    subj: &Forest,
) -> Syn
where
    TreeSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let co_tree: TransFn<Inh, Tree, TreeSyn> = {
        let tree_trans = tree_trans.clone();
        let forest_trans = forest_trans.clone();
        Rc::new(move |i, s| super::tree_gen::tree_rec(&tree_trans, &forest_trans, i, s))
    };
    forest_gcata(co_tree, forest_trans, inh, subj)
}

// Generated by `gt gen` from declaration `tree`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, TransFn, Transformer, make_aug};

use super::forest_gen::{Forest, ForestTransformer};

/// The `tree` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree {
    Leaf(String),
    Node(Rc<Forest>),
}

/// Per-parameter transformations; `tree` has none.
#[derive(Clone)]
pub struct TreeTpo;

/// The whole-subject augmented argument.
pub type TreeAug<Inh, Syn> = Aug<Inh, Tree, Syn, TreeTpo>;
/// A `forest`-typed argument.
pub type TreeArgForest<ForestSyn, Inh> = Aug<Inh, Forest, ForestSyn, TreeTpo>;

/// Handler-table slots for `tree`: one shape per constructor plus
/// named auxiliary methods.
pub enum TreeSlot<ForestSyn, Inh, Syn> {
    CLeaf(Rc<dyn Fn(&TreeTransformer<ForestSyn, Inh, Syn>, &Inh, &TreeAug<Inh, Syn>, &String) -> Syn>),
    CNode(Rc<dyn Fn(&TreeTransformer<ForestSyn, Inh, Syn>, &Inh, &TreeAug<Inh, Syn>, &TreeArgForest<ForestSyn, Inh>) -> Syn>),
    Method(Rc<dyn Fn(&TreeTransformer<ForestSyn, Inh, Syn>, &Inh, &TreeAug<Inh, Syn>) -> Syn>),
}

impl<ForestSyn, Inh, Syn> Clone for TreeSlot<ForestSyn, Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CLeaf(h) => Self::CLeaf(h.clone()),
            Self::CNode(h) => Self::CNode(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `tree`.
pub type TreeTransformer<ForestSyn, Inh, Syn> = Transformer<TreeSlot<ForestSyn, Inh, Syn>>;

/// Entry builder for `Leaf`.
pub fn c_leaf<ForestSyn, Inh, Syn>(
    h: impl Fn(&TreeTransformer<ForestSyn, Inh, Syn>, &Inh, &TreeAug<Inh, Syn>, &String) -> Syn + 'static,
) -> (String, Entry<TreeSlot<ForestSyn, Inh, Syn>>)
where
    ForestSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Leaf".to_string(), Entry::Defined(TreeSlot::CLeaf(Rc::new(h))))
}

/// Entry builder for `Node`.
pub fn c_node<ForestSyn, Inh, Syn>(
    h: impl Fn(&TreeTransformer<ForestSyn, Inh, Syn>, &Inh, &TreeAug<Inh, Syn>, &TreeArgForest<ForestSyn, Inh>) -> Syn + 'static,
) -> (String, Entry<TreeSlot<ForestSyn, Inh, Syn>>)
where
    ForestSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Node".to_string(), Entry::Defined(TreeSlot::CNode(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<ForestSyn, Inh, Syn>(
    name: &str,
    h: impl Fn(&TreeTransformer<ForestSyn, Inh, Syn>, &Inh, &TreeAug<Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<TreeSlot<ForestSyn, Inh, Syn>>)
where
    ForestSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(TreeSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<ForestSyn, Inh, Syn>(name: &str) -> (String, Entry<TreeSlot<ForestSyn, Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<ForestSyn, Inh, Syn>(
    trans: &TreeTransformer<ForestSyn, Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &TreeAug<Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        TreeSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Traverses one `tree` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn tree_gcata<ForestSyn, Inh, Syn>(
    co_forest: TransFn<Inh, Forest, ForestSyn>,
    trans: &TreeTransformer<ForestSyn, Inh, Syn>,
    inh: &Inh,
    subj: &Tree,
) -> Syn
where
    ForestSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, Tree, Syn> = {
        let co_forest = co_forest.clone();
        let trans = trans.clone();
        Rc::new(move |i, s| tree_gcata(co_forest.clone(), &trans, i, s))
    };
    let tpo = TreeTpo;
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        Tree::Leaf(p1) => match trans.slot("c_Leaf") {
            TreeSlot::CLeaf(h) => h(
                trans,
                inh,
                &subj_arg,
                p1,
            ),
            _ => panic!("slot `c_Leaf` in transformer `{}` has the wrong shape", trans.name()),
        },
        Tree::Node(p1) => match trans.slot("c_Node") {
            TreeSlot::CNode(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.as_ref().clone(), co_forest.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Node` in transformer `{}` has the wrong shape", trans.name()),
        },
    }
}

/// Ties the `tree`/`forest` cluster: every member's table traverses together.
pub fn tree_rec<ForestSyn, Inh, Syn>(
    tree_trans: &TreeTransformer<ForestSyn, Inh, Syn>,
    forest_trans: &ForestTransformer<Syn, Inh, ForestSyn>,
    inh: &Inh,
    subj: &Tree,
) -> Syn
where
    ForestSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let co_forest: TransFn<Inh, Forest, ForestSyn> = {
        let tree_trans = tree_trans.clone();
        let forest_trans = forest_trans.clone();
        Rc::new(move |i, s| super::forest_gen::forest_rec(&tree_trans, &forest_trans, i, s))
    };
    tree_gcata(co_forest, tree_trans, inh, subj)
}

// Generated by `gt gen` from declaration `ptree`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, TransFn, Transformer, make_aug};

use super::pforest_gen::{Pforest, PforestTransformer};

/// The `ptree` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ptree<A> {
    PLeaf(A),
    PNode(Rc<Pforest<A>>),
}

/// Per-parameter transformations, addressed by parameter name.
pub struct PtreeTpo<A, Ta, Inh> {
    pub a: TransFn<Inh, A, Ta>,
}

impl<A, Ta, Inh> Clone for PtreeTpo<A, Ta, Inh> {
    fn clone(&self) -> Self {
        PtreeTpo {
            a: self.a.clone(),
        }
    }
}

/// The whole-subject augmented argument.
pub type PtreeAug<A, Ta, Inh, Syn> = Aug<Inh, Ptree<A>, Syn, PtreeTpo<A, Ta, Inh>>;
/// A `'a`-typed argument.
pub type PtreeArgA<A, Ta, Inh> = Aug<Inh, A, Ta, PtreeTpo<A, Ta, Inh>>;
/// A `pforest`-typed argument.
pub type PtreeArgPforest<A, Ta, PforestSyn, Inh> = Aug<Inh, Pforest<A>, PforestSyn, PtreeTpo<A, Ta, Inh>>;

/// Handler-table slots for `ptree`: one shape per constructor plus
/// named auxiliary methods.
pub enum PtreeSlot<A, Ta, PforestSyn, Inh, Syn> {
    CPLeaf(Rc<dyn Fn(&PtreeTransformer<A, Ta, PforestSyn, Inh, Syn>, &Inh, &PtreeAug<A, Ta, Inh, Syn>, &PtreeArgA<A, Ta, Inh>) -> Syn>),
    CPNode(Rc<dyn Fn(&PtreeTransformer<A, Ta, PforestSyn, Inh, Syn>, &Inh, &PtreeAug<A, Ta, Inh, Syn>, &PtreeArgPforest<A, Ta, PforestSyn, Inh>) -> Syn>),
    Method(Rc<dyn Fn(&PtreeTransformer<A, Ta, PforestSyn, Inh, Syn>, &Inh, &PtreeAug<A, Ta, Inh, Syn>) -> Syn>),
}

impl<A, Ta, PforestSyn, Inh, Syn> Clone for PtreeSlot<A, Ta, PforestSyn, Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CPLeaf(h) => Self::CPLeaf(h.clone()),
            Self::CPNode(h) => Self::CPNode(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `ptree`.
pub type PtreeTransformer<A, Ta, PforestSyn, Inh, Syn> = Transformer<PtreeSlot<A, Ta, PforestSyn, Inh, Syn>>;

/// Entry builder for `PLeaf`.
pub fn c_p_leaf<A, Ta, PforestSyn, Inh, Syn>(
    h: impl Fn(&PtreeTransformer<A, Ta, PforestSyn, Inh, Syn>, &Inh, &PtreeAug<A, Ta, Inh, Syn>, &PtreeArgA<A, Ta, Inh>) -> Syn + 'static,
) -> (String, Entry<PtreeSlot<A, Ta, PforestSyn, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    PforestSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_PLeaf".to_string(), Entry::Defined(PtreeSlot::CPLeaf(Rc::new(h))))
}

/// Entry builder for `PNode`.
pub fn c_p_node<A, Ta, PforestSyn, Inh, Syn>(
    h: impl Fn(&PtreeTransformer<A, Ta, PforestSyn, Inh, Syn>, &Inh, &PtreeAug<A, Ta, Inh, Syn>, &PtreeArgPforest<A, Ta, PforestSyn, Inh>) -> Syn + 'static,
) -> (String, Entry<PtreeSlot<A, Ta, PforestSyn, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    PforestSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_PNode".to_string(), Entry::Defined(PtreeSlot::CPNode(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<A, Ta, PforestSyn, Inh, Syn>(
    name: &str,
    h: impl Fn(&PtreeTransformer<A, Ta, PforestSyn, Inh, Syn>, &Inh, &PtreeAug<A, Ta, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<PtreeSlot<A, Ta, PforestSyn, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    PforestSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(PtreeSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<A, Ta, PforestSyn, Inh, Syn>(name: &str) -> (String, Entry<PtreeSlot<A, Ta, PforestSyn, Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<A, Ta, PforestSyn, Inh, Syn>(
    trans: &PtreeTransformer<A, Ta, PforestSyn, Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &PtreeAug<A, Ta, Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        PtreeSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Traverses one `ptree` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn ptree_gcata<A, Ta, PforestSyn, Inh, Syn>(
    fa: TransFn<Inh, A, Ta>,
    co_pforest: TransFn<Inh, Pforest<A>, PforestSyn>,
    trans: &PtreeTransformer<A, Ta, PforestSyn, Inh, Syn>,
    inh: &Inh,
    subj: &Ptree<A>,
) -> Syn
where
    A: Clone + 'static,
    Ta: 'static,
    PforestSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, Ptree<A>, Syn> = {
        let fa = fa.clone();
        let co_pforest = co_pforest.clone();
        let trans = trans.clone();
        Rc::new(move |i, s| ptree_gcata(fa.clone(), co_pforest.clone(), &trans, i, s))
    };
    let tpo = PtreeTpo { a: fa.clone() };
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        Ptree::PLeaf(p1) => match trans.slot("c_PLeaf") {
            PtreeSlot::CPLeaf(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.clone(), fa.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_PLeaf` in transformer `{}` has the wrong shape", trans.name()),
        },
        Ptree::PNode(p1) => match trans.slot("c_PNode") {
            PtreeSlot::CPNode(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.as_ref().clone(), co_pforest.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_PNode` in transformer `{}` has the wrong shape", trans.name()),
        },
    }
}

/// Ties the `ptree`/`pforest` cluster: every member's table traverses together.
pub fn ptree_rec<A, Ta, PforestSyn, Inh, Syn>(
    ptree_fa: TransFn<Inh, A, Ta>,
    ptree_trans: &PtreeTransformer<A, Ta, PforestSyn, Inh, Syn>,
    pforest_fa: TransFn<Inh, A, Ta>,
    pforest_trans: &PforestTransformer<A, Ta, Syn, Inh, PforestSyn>,
    inh: &Inh,
    subj: &Ptree<A>,
) -> Syn
where
    A: Clone + 'static,
    Ta: 'static,
    PforestSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let co_pforest: TransFn<Inh, Pforest<A>, PforestSyn> = {
        let ptree_fa = ptree_fa.clone();
        let ptree_trans = ptree_trans.clone();
        let pforest_fa = pforest_fa.clone();
        let pforest_trans = pforest_trans.clone();
        Rc::new(move |i, s| super::pforest_gen::pforest_rec(ptree_fa.clone(), &ptree_trans, pforest_fa.clone(), &pforest_trans, i, s))
    };
    ptree_gcata(ptree_fa, co_pforest, ptree_trans, inh, subj)
}

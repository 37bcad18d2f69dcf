// Generated by `gt gen` from declaration `pforest`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, TransFn, Transformer, make_aug};

use super::ptree_gen::{Ptree, PtreeTransformer};

/// The `pforest` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pforest<A> {
    PNil,
    PCons(Rc<Ptree<A>>, Rc<Pforest<A>>),
}

/// Per-parameter transformations, addressed by parameter name.
pub struct PforestTpo<A, Ta, Inh> {
    pub a: TransFn<Inh, A, Ta>,
}

impl<A, Ta, Inh> Clone for PforestTpo<A, Ta, Inh> {
    fn clone(&self) -> Self {
        PforestTpo {
            a: self.a.clone(),
        }
    }
}

/// The whole-subject augmented argument.
pub type PforestAug<A, Ta, Inh, Syn> = Aug<Inh, Pforest<A>, Syn, PforestTpo<A, Ta, Inh>>;
/// A `'a`-typed argument.
pub type PforestArgA<A, Ta, Inh> = Aug<Inh, A, Ta, PforestTpo<A, Ta, Inh>>;
/// A `ptree`-typed argument.
pub type PforestArgPtree<A, Ta, PtreeSyn, Inh> = Aug<Inh, Ptree<A>, PtreeSyn, PforestTpo<A, Ta, Inh>>;

/// Handler-table slots for `pforest`: one shape per constructor plus
/// named auxiliary methods.
pub enum PforestSlot<A, Ta, PtreeSyn, Inh, Syn> {
    CPNil(Rc<dyn Fn(&PforestTransformer<A, Ta, PtreeSyn, Inh, Syn>, &Inh, &PforestAug<A, Ta, Inh, Syn>) -> Syn>),
    CPCons(Rc<dyn Fn(&PforestTransformer<A, Ta, PtreeSyn, Inh, Syn>, &Inh, &PforestAug<A, Ta, Inh, Syn>, &PforestArgPtree<A, Ta, PtreeSyn, Inh>, &PforestAug<A, Ta, Inh, Syn>) -> Syn>),
    Method(Rc<dyn Fn(&PforestTransformer<A, Ta, PtreeSyn, Inh, Syn>, &Inh, &PforestAug<A, Ta, Inh, Syn>) -> Syn>),
}

impl<A, Ta, PtreeSyn, Inh, Syn> Clone for PforestSlot<A, Ta, PtreeSyn, Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CPNil(h) => Self::CPNil(h.clone()),
            Self::CPCons(h) => Self::CPCons(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `pforest`.
pub type PforestTransformer<A, Ta, PtreeSyn, Inh, Syn> = Transformer<PforestSlot<A, Ta, PtreeSyn, Inh, Syn>>;

/// Entry builder for `PNil`.
pub fn c_p_nil<A, Ta, PtreeSyn, Inh, Syn>(
    h: impl Fn(&PforestTransformer<A, Ta, PtreeSyn, Inh, Syn>, &Inh, &PforestAug<A, Ta, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<PforestSlot<A, Ta, PtreeSyn, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    PtreeSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_PNil".to_string(), Entry::Defined(PforestSlot::CPNil(Rc::new(h))))
}

/// Entry builder for `PCons`.
pub fn c_p_cons<A, Ta, PtreeSyn, Inh, Syn>(
    h: impl Fn(&PforestTransformer<A, Ta, PtreeSyn, Inh, Syn>, &Inh, &PforestAug<A, Ta, Inh, Syn>, &PforestArgPtree<A, Ta, PtreeSyn, Inh>, &PforestAug<A, Ta, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<PforestSlot<A, Ta, PtreeSyn, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    PtreeSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_PCons".to_string(), Entry::Defined(PforestSlot::CPCons(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<A, Ta, PtreeSyn, Inh, Syn>(
    name: &str,
    h: impl Fn(&PforestTransformer<A, Ta, PtreeSyn, Inh, Syn>, &Inh, &PforestAug<A, Ta, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<PforestSlot<A, Ta, PtreeSyn, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    PtreeSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(PforestSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<A, Ta, PtreeSyn, Inh, Syn>(name: &str) -> (String, Entry<PforestSlot<A, Ta, PtreeSyn, Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<A, Ta, PtreeSyn, Inh, Syn>(
    trans: &PforestTransformer<A, Ta, PtreeSyn, Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &PforestAug<A, Ta, Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        PforestSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Traverses one `pforest` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn pforest_gcata<A, Ta, PtreeSyn, Inh, Syn>(
    fa: TransFn<Inh, A, Ta>,
    co_ptree: TransFn<Inh, Ptree<A>, PtreeSyn>,
    trans: &PforestTransformer<A, Ta, PtreeSyn, Inh, Syn>,
    inh: &Inh,
    subj: &Pforest<A>,
) -> Syn
where
    A: Clone + 'static,
    Ta: 'static,
    PtreeSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, Pforest<A>, Syn> = {
        let fa = fa.clone();
        let co_ptree = co_ptree.clone();
        let trans = trans.clone();
        Rc::new(move |i, s| pforest_gcata(fa.clone(), co_ptree.clone(), &trans, i, s))
    };
    let tpo = PforestTpo { a: fa.clone() };
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        Pforest::PNil => match trans.slot("c_PNil") {
            PforestSlot::CPNil(h) => h(trans, inh, &subj_arg),
            _ => panic!("slot `c_PNil` in transformer `{}` has the wrong shape", trans.name()),
        },
        Pforest::PCons(p1, p2) => match trans.slot("c_PCons") {
            PforestSlot::CPCons(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.as_ref().clone(), co_ptree.clone(), tpo.clone()),
                &make_aug(p2.as_ref().clone(), self_f.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_PCons` in transformer `{}` has the wrong shape", trans.name()),
        },
    }
}

/// Ties the `ptree`/`pforest` cluster: every member's table traverses together.
pub fn pforest_rec<A, Ta, PtreeSyn, Inh, Syn>(
    ptree_fa: TransFn<Inh, A, Ta>,
    ptree_trans: &PtreeTransformer<A, Ta, Syn, Inh, PtreeSyn>,
    pforest_fa: TransFn<Inh, A, Ta>,
    pforest_trans: &PforestTransformer<A, Ta, PtreeSyn, Inh, Syn>,
    inh: &Inh,
    subj: &Pforest<A>,
) -> Syn
where
    A: Clone + 'static,
    Ta: 'static,
    PtreeSyn: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let co_ptree: TransFn<Inh, Ptree<A>, PtreeSyn> = {
        let ptree_fa = ptree_fa.clone();
        let ptree_trans = ptree_trans.clone();
        let pforest_fa = pforest_fa.clone();
        let pforest_trans = pforest_trans.clone();
        Rc::new(move |i, s| super::ptree_gen::ptree_rec(ptree_fa.clone(), &ptree_trans, pforest_fa.clone(), &pforest_trans, i, s))
    };
    pforest_gcata(pforest_fa, co_ptree, pforest_trans, inh, subj)
}

// Generated by `gt gen` from declaration `neg`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, Fx, TransFn, Transformer, make_aug};

/// The `neg` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Neg<A> {
    Neg(A),
}

/// Per-parameter transformations, addressed by parameter name.
pub struct NegTpo<A, Ta, Inh> {
    pub a: TransFn<Inh, A, Ta>,
}

impl<A, Ta, Inh> Clone for NegTpo<A, Ta, Inh> {
    fn clone(&self) -> Self {
        NegTpo {
            a: self.a.clone(),
        }
    }
}

/// The whole-subject augmented argument.
pub type NegAug<A, Ta, Inh, Syn> = Aug<Inh, Neg<A>, Syn, NegTpo<A, Ta, Inh>>;
/// A `'a`-typed argument.
pub type NegArgA<A, Ta, Inh> = Aug<Inh, A, Ta, NegTpo<A, Ta, Inh>>;

/// Handler-table slots for `neg`: one shape per constructor plus
/// named auxiliary methods.
pub enum NegSlot<A, Ta, Inh, Syn> {
    CNeg(Rc<dyn Fn(&NegTransformer<A, Ta, Inh, Syn>, &Inh, &NegAug<A, Ta, Inh, Syn>, &NegArgA<A, Ta, Inh>) -> Syn>),
    Method(Rc<dyn Fn(&NegTransformer<A, Ta, Inh, Syn>, &Inh, &NegAug<A, Ta, Inh, Syn>) -> Syn>),
}

impl<A, Ta, Inh, Syn> Clone for NegSlot<A, Ta, Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CNeg(h) => Self::CNeg(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `neg`.
pub type NegTransformer<A, Ta, Inh, Syn> = Transformer<NegSlot<A, Ta, Inh, Syn>>;

/// Entry builder for `Neg`.
pub fn c_neg<A, Ta, Inh, Syn>(
    h: impl Fn(&NegTransformer<A, Ta, Inh, Syn>, &Inh, &NegAug<A, Ta, Inh, Syn>, &NegArgA<A, Ta, Inh>) -> Syn + 'static,
) -> (String, Entry<NegSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Neg".to_string(), Entry::Defined(NegSlot::CNeg(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<A, Ta, Inh, Syn>(
    name: &str,
    h: impl Fn(&NegTransformer<A, Ta, Inh, Syn>, &Inh, &NegAug<A, Ta, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<NegSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(NegSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<A, Ta, Inh, Syn>(name: &str) -> (String, Entry<NegSlot<A, Ta, Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<A, Ta, Inh, Syn>(
    trans: &NegTransformer<A, Ta, Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &NegAug<A, Ta, Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        NegSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Fragment interface: one method per constructor with the minimal
/// argument view, so implementations stay independent of whichever sum
/// hosts them.
pub trait NegPack<A, Ta, Inh, Syn> {
    fn c_neg(&self, inh: &Inh, p1: &dyn Fx<Inh, Ta>) -> Syn;
}

/// Builds the sum's full entry list from one pack.
pub fn from_pack<A, Ta, Inh, Syn, P>(pack: P) -> Vec<(String, Entry<NegSlot<A, Ta, Inh, Syn>>)>
where
    P: NegPack<A, Ta, Inh, Syn> + 'static,
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let pack = Rc::new(pack);
    vec![
        {
            let pack = pack.clone();
            c_neg(move |_, inh, _, p1| pack.c_neg(inh, p1))
        },
    ]
}

/// Traverses one `neg` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn neg_gcata<A, Ta, Inh, Syn>(
    fa: TransFn<Inh, A, Ta>,
    trans: &NegTransformer<A, Ta, Inh, Syn>,
    inh: &Inh,
    subj: &Neg<A>,
) -> Syn
where
    A: Clone + 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, Neg<A>, Syn> = {
        let fa = fa.clone();
        let trans = trans.clone();
        Rc::new(move |i, s| neg_gcata(fa.clone(), &trans, i, s))
    };
    let tpo = NegTpo { a: fa.clone() };
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        Neg::Neg(p1) => match trans.slot("c_Neg") {
            NegSlot::CNeg(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.clone(), fa.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Neg` in transformer `{}` has the wrong shape", trans.name()),
        },
    }
}

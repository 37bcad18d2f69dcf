// Generated by `gt gen` from declaration `t`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, TransFn, Transformer, make_aug};

/// The `t` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum T<A, B> {
    Ta(A),
    Tb(B),
    Tag(String, Rc<T<A, B>>),
    Both(Rc<T<A, B>>, Rc<T<A, B>>),
}

/// Per-parameter transformations, addressed by parameter name.
pub struct TTpo<A, Ta, B, Tb, Inh> {
    pub a: TransFn<Inh, A, Ta>,
    pub b: TransFn<Inh, B, Tb>,
}

impl<A, Ta, B, Tb, Inh> Clone for TTpo<A, Ta, B, Tb, Inh> {
    fn clone(&self) -> Self {
        TTpo {
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }
}

/// The whole-subject augmented argument.
pub type TAug<A, Ta, B, Tb, Inh, Syn> = Aug<Inh, T<A, B>, Syn, TTpo<A, Ta, B, Tb, Inh>>;
/// A `'a`-typed argument.
pub type TArgA<A, Ta, B, Tb, Inh> = Aug<Inh, A, Ta, TTpo<A, Ta, B, Tb, Inh>>;
/// A `'b`-typed argument.
pub type TArgB<A, Ta, B, Tb, Inh> = Aug<Inh, B, Tb, TTpo<A, Ta, B, Tb, Inh>>;

/// Handler-table slots for `t`: one shape per constructor plus
/// named auxiliary methods.
pub enum TSlot<A, Ta, B, Tb, Inh, Syn> {
    CTa(Rc<dyn Fn(&TTransformer<A, Ta, B, Tb, Inh, Syn>, &Inh, &TAug<A, Ta, B, Tb, Inh, Syn>, &TArgA<A, Ta, B, Tb, Inh>) -> Syn>),
    CTb(Rc<dyn Fn(&TTransformer<A, Ta, B, Tb, Inh, Syn>, &Inh, &TAug<A, Ta, B, Tb, Inh, Syn>, &TArgB<A, Ta, B, Tb, Inh>) -> Syn>),
    CTag(Rc<dyn Fn(&TTransformer<A, Ta, B, Tb, Inh, Syn>, &Inh, &TAug<A, Ta, B, Tb, Inh, Syn>, &String, &TAug<A, Ta, B, Tb, Inh, Syn>) -> Syn>),
    CBoth(Rc<dyn Fn(&TTransformer<A, Ta, B, Tb, Inh, Syn>, &Inh, &TAug<A, Ta, B, Tb, Inh, Syn>, &TAug<A, Ta, B, Tb, Inh, Syn>, &TAug<A, Ta, B, Tb, Inh, Syn>) -> Syn>),
    Method(Rc<dyn Fn(&TTransformer<A, Ta, B, Tb, Inh, Syn>, &Inh, &TAug<A, Ta, B, Tb, Inh, Syn>) -> Syn>),
}

impl<A, Ta, B, Tb, Inh, Syn> Clone for TSlot<A, Ta, B, Tb, Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CTa(h) => Self::CTa(h.clone()),
            Self::CTb(h) => Self::CTb(h.clone()),
            Self::CTag(h) => Self::CTag(h.clone()),
            Self::CBoth(h) => Self::CBoth(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `t`.
pub type TTransformer<A, Ta, B, Tb, Inh, Syn> = Transformer<TSlot<A, Ta, B, Tb, Inh, Syn>>;

/// Entry builder for `Ta`.
pub fn c_ta<A, Ta, B, Tb, Inh, Syn>(
    h: impl Fn(&TTransformer<A, Ta, B, Tb, Inh, Syn>, &Inh, &TAug<A, Ta, B, Tb, Inh, Syn>, &TArgA<A, Ta, B, Tb, Inh>) -> Syn + 'static,
) -> (String, Entry<TSlot<A, Ta, B, Tb, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    B: 'static,
    Tb: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Ta".to_string(), Entry::Defined(TSlot::CTa(Rc::new(h))))
}

/// Entry builder for `Tb`.
pub fn c_tb<A, Ta, B, Tb, Inh, Syn>(
    h: impl Fn(&TTransformer<A, Ta, B, Tb, Inh, Syn>, &Inh, &TAug<A, Ta, B, Tb, Inh, Syn>, &TArgB<A, Ta, B, Tb, Inh>) -> Syn + 'static,
) -> (String, Entry<TSlot<A, Ta, B, Tb, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    B: 'static,
    Tb: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Tb".to_string(), Entry::Defined(TSlot::CTb(Rc::new(h))))
}

/// Entry builder for `Tag`.
pub fn c_tag<A, Ta, B, Tb, Inh, Syn>(
    h: impl Fn(&TTransformer<A, Ta, B, Tb, Inh, Syn>, &Inh, &TAug<A, Ta, B, Tb, Inh, Syn>, &String, &TAug<A, Ta, B, Tb, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<TSlot<A, Ta, B, Tb, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    B: 'static,
    Tb: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Tag".to_string(), Entry::Defined(TSlot::CTag(Rc::new(h))))
}

/// Entry builder for `Both`.
pub fn c_both<A, Ta, B, Tb, Inh, Syn>(
    h: impl Fn(&TTransformer<A, Ta, B, Tb, Inh, Syn>, &Inh, &TAug<A, Ta, B, Tb, Inh, Syn>, &TAug<A, Ta, B, Tb, Inh, Syn>, &TAug<A, Ta, B, Tb, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<TSlot<A, Ta, B, Tb, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    B: 'static,
    Tb: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Both".to_string(), Entry::Defined(TSlot::CBoth(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<A, Ta, B, Tb, Inh, Syn>(
    name: &str,
    h: impl Fn(&TTransformer<A, Ta, B, Tb, Inh, Syn>, &Inh, &TAug<A, Ta, B, Tb, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<TSlot<A, Ta, B, Tb, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    B: 'static,
    Tb: 'static,
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(TSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<A, Ta, B, Tb, Inh, Syn>(name: &str) -> (String, Entry<TSlot<A, Ta, B, Tb, Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<A, Ta, B, Tb, Inh, Syn>(
    trans: &TTransformer<A, Ta, B, Tb, Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &TAug<A, Ta, B, Tb, Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        TSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Traverses one `t` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn t_gcata<A, Ta, B, Tb, Inh, Syn>(
    fa: TransFn<Inh, A, Ta>,
    fb: TransFn<Inh, B, Tb>,
    trans: &TTransformer<A, Ta, B, Tb, Inh, Syn>,
    inh: &Inh,
    subj: &T<A, B>,
) -> Syn
where
    A: Clone + 'static,
    Ta: 'static,
    B: Clone + 'static,
    Tb: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, T<A, B>, Syn> = {
        let fa = fa.clone();
        let fb = fb.clone();
        let trans = trans.clone();
        Rc::new(move |i, s| t_gcata(fa.clone(), fb.clone(), &trans, i, s))
    };
    let tpo = TTpo { a: fa.clone(), b: fb.clone() };
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        T::Ta(p1) => match trans.slot("c_Ta") {
            TSlot::CTa(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.clone(), fa.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Ta` in transformer `{}` has the wrong shape", trans.name()),
        },
        T::Tb(p1) => match trans.slot("c_Tb") {
            TSlot::CTb(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.clone(), fb.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Tb` in transformer `{}` has the wrong shape", trans.name()),
        },
        T::Tag(p1, p2) => match trans.slot("c_Tag") {
            TSlot::CTag(h) => h(
                trans,
                inh,
                &subj_arg,
                p1,
                &make_aug(p2.as_ref().clone(), self_f.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Tag` in transformer `{}` has the wrong shape", trans.name()),
        },
        T::Both(p1, p2) => match trans.slot("c_Both") {
            TSlot::CBoth(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.as_ref().clone(), self_f.clone(), tpo.clone()),
                &make_aug(p2.as_ref().clone(), self_f.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Both` in transformer `{}` has the wrong shape", trans.name()),
        },
    }
}

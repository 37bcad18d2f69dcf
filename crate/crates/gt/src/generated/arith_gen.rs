// Generated by `gt gen` from declaration `arith`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, Fx, TransFn, Transformer, make_aug};

/// The `arith` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arith<A> {
    Add(A, A),
    Mul(A, A),
}

/// Per-parameter transformations, addressed by parameter name.
pub struct ArithTpo<A, Ta, Inh> {
    pub a: TransFn<Inh, A, Ta>,
}

impl<A, Ta, Inh> Clone for ArithTpo<A, Ta, Inh> {
    fn clone(&self) -> Self {
        ArithTpo {
            a: self.a.clone(),
        }
    }
}

/// The whole-subject augmented argument.
pub type ArithAug<A, Ta, Inh, Syn> = Aug<Inh, Arith<A>, Syn, ArithTpo<A, Ta, Inh>>;
/// A `'a`-typed argument.
pub type ArithArgA<A, Ta, Inh> = Aug<Inh, A, Ta, ArithTpo<A, Ta, Inh>>;

/// Handler-table slots for `arith`: one shape per constructor plus
/// named auxiliary methods.
pub enum ArithSlot<A, Ta, Inh, Syn> {
    CAdd(Rc<dyn Fn(&ArithTransformer<A, Ta, Inh, Syn>, &Inh, &ArithAug<A, Ta, Inh, Syn>, &ArithArgA<A, Ta, Inh>, &ArithArgA<A, Ta, Inh>) -> Syn>),
    CMul(Rc<dyn Fn(&ArithTransformer<A, Ta, Inh, Syn>, &Inh, &ArithAug<A, Ta, Inh, Syn>, &ArithArgA<A, Ta, Inh>, &ArithArgA<A, Ta, Inh>) -> Syn>),
    Method(Rc<dyn Fn(&ArithTransformer<A, Ta, Inh, Syn>, &Inh, &ArithAug<A, Ta, Inh, Syn>) -> Syn>),
}

impl<A, Ta, Inh, Syn> Clone for ArithSlot<A, Ta, Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CAdd(h) => Self::CAdd(h.clone()),
            Self::CMul(h) => Self::CMul(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `arith`.
pub type ArithTransformer<A, Ta, Inh, Syn> = Transformer<ArithSlot<A, Ta, Inh, Syn>>;

/// Entry builder for `Add`.
pub fn c_add<A, Ta, Inh, Syn>(
    h: impl Fn(&ArithTransformer<A, Ta, Inh, Syn>, &Inh, &ArithAug<A, Ta, Inh, Syn>, &ArithArgA<A, Ta, Inh>, &ArithArgA<A, Ta, Inh>) -> Syn + 'static,
) -> (String, Entry<ArithSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Add".to_string(), Entry::Defined(ArithSlot::CAdd(Rc::new(h))))
}

/// Entry builder for `Mul`.
pub fn c_mul<A, Ta, Inh, Syn>(
    h: impl Fn(&ArithTransformer<A, Ta, Inh, Syn>, &Inh, &ArithAug<A, Ta, Inh, Syn>, &ArithArgA<A, Ta, Inh>, &ArithArgA<A, Ta, Inh>) -> Syn + 'static,
) -> (String, Entry<ArithSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Mul".to_string(), Entry::Defined(ArithSlot::CMul(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<A, Ta, Inh, Syn>(
    name: &str,
    h: impl Fn(&ArithTransformer<A, Ta, Inh, Syn>, &Inh, &ArithAug<A, Ta, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<ArithSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(ArithSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<A, Ta, Inh, Syn>(name: &str) -> (String, Entry<ArithSlot<A, Ta, Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<A, Ta, Inh, Syn>(
    trans: &ArithTransformer<A, Ta, Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &ArithAug<A, Ta, Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        ArithSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Fragment interface: one method per constructor with the minimal
/// argument view, so implementations stay independent of whichever sum
/// hosts them.
pub trait ArithPack<A, Ta, Inh, Syn> {
    fn c_add(&self, inh: &Inh, p1: &dyn Fx<Inh, Ta>, p2: &dyn Fx<Inh, Ta>) -> Syn;
    fn c_mul(&self, inh: &Inh, p1: &dyn Fx<Inh, Ta>, p2: &dyn Fx<Inh, Ta>) -> Syn;
}

/// Builds the sum's full entry list from one pack.
pub fn from_pack<A, Ta, Inh, Syn, P>(pack: P) -> Vec<(String, Entry<ArithSlot<A, Ta, Inh, Syn>>)>
where
    P: ArithPack<A, Ta, Inh, Syn> + 'static,
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let pack = Rc::new(pack);
    vec![
        {
            let pack = pack.clone();
            c_add(move |_, inh, _, p1, p2| pack.c_add(inh, p1, p2))
        },
        {
            let pack = pack.clone();
            c_mul(move |_, inh, _, p1, p2| pack.c_mul(inh, p1, p2))
        },
    ]
}

/// Traverses one `arith` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn arith_gcata<A, Ta, Inh, Syn>(
    fa: TransFn<Inh, A, Ta>,
    trans: &ArithTransformer<A, Ta, Inh, Syn>,
    inh: &Inh,
    subj: &Arith<A>,
) -> Syn
where
    A: Clone + 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, Arith<A>, Syn> = {
        let fa = fa.clone();
        let trans = trans.clone();
        Rc::new(move |i, s| arith_gcata(fa.clone(), &trans, i, s))
    };
    let tpo = ArithTpo { a: fa.clone() };
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        Arith::Add(p1, p2) => match trans.slot("c_Add") {
            ArithSlot::CAdd(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.clone(), fa.clone(), tpo.clone()),
                &make_aug(p2.clone(), fa.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Add` in transformer `{}` has the wrong shape", trans.name()),
        },
        Arith::Mul(p1, p2) => match trans.slot("c_Mul") {
            ArithSlot::CMul(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.clone(), fa.clone(), tpo.clone()),
                &make_aug(p2.clone(), fa.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Mul` in transformer `{}` has the wrong shape", trans.name()),
        },
    }
}

// Generated by `gt gen` from declaration `expr_ext`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, Fx, TransFn, Transformer, make_aug};

/// The `expr_ext` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprExt<A> {
    Var(String),
    Add(A, A),
    Mul(A, A),
    Neg(A),
}

/// Per-parameter transformations, addressed by parameter name.
pub struct ExprExtTpo<A, Ta, Inh> {
    pub a: TransFn<Inh, A, Ta>,
}

impl<A, Ta, Inh> Clone for ExprExtTpo<A, Ta, Inh> {
    fn clone(&self) -> Self {
        ExprExtTpo {
            a: self.a.clone(),
        }
    }
}

/// The whole-subject augmented argument.
pub type ExprExtAug<A, Ta, Inh, Syn> = Aug<Inh, ExprExt<A>, Syn, ExprExtTpo<A, Ta, Inh>>;
/// A `'a`-typed argument.
pub type ExprExtArgA<A, Ta, Inh> = Aug<Inh, A, Ta, ExprExtTpo<A, Ta, Inh>>;

/// Handler-table slots for `expr_ext`: one shape per constructor plus
/// named auxiliary methods.
pub enum ExprExtSlot<A, Ta, Inh, Syn> {
    CVar(Rc<dyn Fn(&ExprExtTransformer<A, Ta, Inh, Syn>, &Inh, &ExprExtAug<A, Ta, Inh, Syn>, &String) -> Syn>),
    CAdd(Rc<dyn Fn(&ExprExtTransformer<A, Ta, Inh, Syn>, &Inh, &ExprExtAug<A, Ta, Inh, Syn>, &ExprExtArgA<A, Ta, Inh>, &ExprExtArgA<A, Ta, Inh>) -> Syn>),
    CMul(Rc<dyn Fn(&ExprExtTransformer<A, Ta, Inh, Syn>, &Inh, &ExprExtAug<A, Ta, Inh, Syn>, &ExprExtArgA<A, Ta, Inh>, &ExprExtArgA<A, Ta, Inh>) -> Syn>),
    CNeg(Rc<dyn Fn(&ExprExtTransformer<A, Ta, Inh, Syn>, &Inh, &ExprExtAug<A, Ta, Inh, Syn>, &ExprExtArgA<A, Ta, Inh>) -> Syn>),
    Method(Rc<dyn Fn(&ExprExtTransformer<A, Ta, Inh, Syn>, &Inh, &ExprExtAug<A, Ta, Inh, Syn>) -> Syn>),
}

impl<A, Ta, Inh, Syn> Clone for ExprExtSlot<A, Ta, Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CVar(h) => Self::CVar(h.clone()),
            Self::CAdd(h) => Self::CAdd(h.clone()),
            Self::CMul(h) => Self::CMul(h.clone()),
            Self::CNeg(h) => Self::CNeg(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `expr_ext`.
pub type ExprExtTransformer<A, Ta, Inh, Syn> = Transformer<ExprExtSlot<A, Ta, Inh, Syn>>;

/// Entry builder for `Var`.
pub fn c_var<A, Ta, Inh, Syn>(
    h: impl Fn(&ExprExtTransformer<A, Ta, Inh, Syn>, &Inh, &ExprExtAug<A, Ta, Inh, Syn>, &String) -> Syn + 'static,
) -> (String, Entry<ExprExtSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Var".to_string(), Entry::Defined(ExprExtSlot::CVar(Rc::new(h))))
}

/// Entry builder for `Add`.
pub fn c_add<A, Ta, Inh, Syn>(
    h: impl Fn(&ExprExtTransformer<A, Ta, Inh, Syn>, &Inh, &ExprExtAug<A, Ta, Inh, Syn>, &ExprExtArgA<A, Ta, Inh>, &ExprExtArgA<A, Ta, Inh>) -> Syn + 'static,
) -> (String, Entry<ExprExtSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Add".to_string(), Entry::Defined(ExprExtSlot::CAdd(Rc::new(h))))
}

/// Entry builder for `Mul`.
pub fn c_mul<A, Ta, Inh, Syn>(
    h: impl Fn(&ExprExtTransformer<A, Ta, Inh, Syn>, &Inh, &ExprExtAug<A, Ta, Inh, Syn>, &ExprExtArgA<A, Ta, Inh>, &ExprExtArgA<A, Ta, Inh>) -> Syn + 'static,
) -> (String, Entry<ExprExtSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Mul".to_string(), Entry::Defined(ExprExtSlot::CMul(Rc::new(h))))
}

/// Entry builder for `Neg`.
pub fn c_neg<A, Ta, Inh, Syn>(
    h: impl Fn(&ExprExtTransformer<A, Ta, Inh, Syn>, &Inh, &ExprExtAug<A, Ta, Inh, Syn>, &ExprExtArgA<A, Ta, Inh>) -> Syn + 'static,
) -> (String, Entry<ExprExtSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Neg".to_string(), Entry::Defined(ExprExtSlot::CNeg(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<A, Ta, Inh, Syn>(
    name: &str,
    h: impl Fn(&ExprExtTransformer<A, Ta, Inh, Syn>, &Inh, &ExprExtAug<A, Ta, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<ExprExtSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(ExprExtSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<A, Ta, Inh, Syn>(name: &str) -> (String, Entry<ExprExtSlot<A, Ta, Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<A, Ta, Inh, Syn>(
    trans: &ExprExtTransformer<A, Ta, Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &ExprExtAug<A, Ta, Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        ExprExtSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Fragment interface: one method per constructor with the minimal
/// argument view, so implementations stay independent of whichever sum
/// hosts them.
pub trait ExprExtPack<A, Ta, Inh, Syn> {
    fn c_var(&self, inh: &Inh, p1: &String) -> Syn;
    fn c_add(&self, inh: &Inh, p1: &dyn Fx<Inh, Ta>, p2: &dyn Fx<Inh, Ta>) -> Syn;
    fn c_mul(&self, inh: &Inh, p1: &dyn Fx<Inh, Ta>, p2: &dyn Fx<Inh, Ta>) -> Syn;
    fn c_neg(&self, inh: &Inh, p1: &dyn Fx<Inh, Ta>) -> Syn;
}

/// Builds the sum's full entry list from one pack.
pub fn from_pack<A, Ta, Inh, Syn, P>(pack: P) -> Vec<(String, Entry<ExprExtSlot<A, Ta, Inh, Syn>>)>
where
    P: ExprExtPack<A, Ta, Inh, Syn> + 'static,
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let pack = Rc::new(pack);
    vec![
        {
            let pack = pack.clone();
            c_var(move |_, inh, _, p1| pack.c_var(inh, p1))
        },
        {
            let pack = pack.clone();
            c_add(move |_, inh, _, p1, p2| pack.c_add(inh, p1, p2))
        },
        {
            let pack = pack.clone();
            c_mul(move |_, inh, _, p1, p2| pack.c_mul(inh, p1, p2))
        },
        {
            let pack = pack.clone();
            c_neg(move |_, inh, _, p1| pack.c_neg(inh, p1))
        },
    ]
}

/// Adapts a `var` fragment into this sum's table.
pub fn include_var<A, Ta, Inh, Syn, P>(pack: P) -> Vec<(String, Entry<ExprExtSlot<A, Ta, Inh, Syn>>)>
where
    P: super::var_gen::VarPack<Inh, Syn> + 'static,
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let pack = Rc::new(pack);
    vec![
        {
            let pack = pack.clone();
            c_var(move |_, inh, _, p1| pack.c_var(inh, p1))
        },
    ]
}

/// Adapts a `arith` fragment into this sum's table.
pub fn include_arith<A, Ta, Inh, Syn, P>(pack: P) -> Vec<(String, Entry<ExprExtSlot<A, Ta, Inh, Syn>>)>
where
    P: super::arith_gen::ArithPack<A, Ta, Inh, Syn> + 'static,
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

/// Adapts a `neg` fragment into this sum's table.
pub fn include_neg<A, Ta, Inh, Syn, P>(pack: P) -> Vec<(String, Entry<ExprExtSlot<A, Ta, Inh, Syn>>)>
where
    P: super::neg_gen::NegPack<A, Ta, Inh, Syn> + 'static,
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

/// Traverses one `expr_ext` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn expr_ext_gcata<A, Ta, Inh, Syn>(
    fa: TransFn<Inh, A, Ta>,
    trans: &ExprExtTransformer<A, Ta, Inh, Syn>,
    inh: &Inh,
    subj: &ExprExt<A>,
) -> Syn
where
    A: Clone + 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, ExprExt<A>, Syn> = {
        let fa = fa.clone();
        let trans = trans.clone();
        Rc::new(move |i, s| expr_ext_gcata(fa.clone(), &trans, i, s))
    };
    let tpo = ExprExtTpo { a: fa.clone() };
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        ExprExt::Var(p1) => match trans.slot("c_Var") {
            ExprExtSlot::CVar(h) => h(
                trans,
                inh,
                &subj_arg,
                p1,
            ),
            _ => panic!("slot `c_Var` in transformer `{}` has the wrong shape", trans.name()),
        },
        ExprExt::Add(p1, p2) => match trans.slot("c_Add") {
            ExprExtSlot::CAdd(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.clone(), fa.clone(), tpo.clone()),
                &make_aug(p2.clone(), fa.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Add` in transformer `{}` has the wrong shape", trans.name()),
        },
        ExprExt::Mul(p1, p2) => match trans.slot("c_Mul") {
            ExprExtSlot::CMul(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.clone(), fa.clone(), tpo.clone()),
                &make_aug(p2.clone(), fa.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Mul` in transformer `{}` has the wrong shape", trans.name()),
        },
        ExprExt::Neg(p1) => match trans.slot("c_Neg") {
            ExprExtSlot::CNeg(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.clone(), fa.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Neg` in transformer `{}` has the wrong shape", trans.name()),
        },
    }
}

// Generated by `gt gen` from declaration `expr`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, Fx, TransFn, Transformer, make_aug};

/// The `expr` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr<A> {
    Var(String),
    Add(A, A),
    Mul(A, A),
}

/// Per-parameter transformations, addressed by parameter name.
pub struct ExprTpo<A, Ta, Inh> {
    pub a: TransFn<Inh, A, Ta>,
}

impl<A, Ta, Inh> Clone for ExprTpo<A, Ta, Inh> {
    fn clone(&self) -> Self {
        ExprTpo {
            a: self.a.clone(),
        }
    }
}

/// The whole-subject augmented argument.
pub type ExprAug<A, Ta, Inh, Syn> = Aug<Inh, Expr<A>, Syn, ExprTpo<A, Ta, Inh>>;
/// A `'a`-typed argument.
pub type ExprArgA<A, Ta, Inh> = Aug<Inh, A, Ta, ExprTpo<A, Ta, Inh>>;

/// Handler-table slots for `expr`: one shape per constructor plus
/// named auxiliary methods.
pub enum ExprSlot<A, Ta, Inh, Syn> {
    CVar(Rc<dyn Fn(&ExprTransformer<A, Ta, Inh, Syn>, &Inh, &ExprAug<A, Ta, Inh, Syn>, &String) -> Syn>),
    CAdd(Rc<dyn Fn(&ExprTransformer<A, Ta, Inh, Syn>, &Inh, &ExprAug<A, Ta, Inh, Syn>, &ExprArgA<A, Ta, Inh>, &ExprArgA<A, Ta, Inh>) -> Syn>),
    CMul(Rc<dyn Fn(&ExprTransformer<A, Ta, Inh, Syn>, &Inh, &ExprAug<A, Ta, Inh, Syn>, &ExprArgA<A, Ta, Inh>, &ExprArgA<A, Ta, Inh>) -> Syn>),
    Method(Rc<dyn Fn(&ExprTransformer<A, Ta, Inh, Syn>, &Inh, &ExprAug<A, Ta, Inh, Syn>) -> Syn>),
}

impl<A, Ta, Inh, Syn> Clone for ExprSlot<A, Ta, Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CVar(h) => Self::CVar(h.clone()),
            Self::CAdd(h) => Self::CAdd(h.clone()),
            Self::CMul(h) => Self::CMul(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `expr`.
pub type ExprTransformer<A, Ta, Inh, Syn> = Transformer<ExprSlot<A, Ta, Inh, Syn>>;

/// Entry builder for `Var`.
pub fn c_var<A, Ta, Inh, Syn>(
    h: impl Fn(&ExprTransformer<A, Ta, Inh, Syn>, &Inh, &ExprAug<A, Ta, Inh, Syn>, &String) -> Syn + 'static,
) -> (String, Entry<ExprSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Var".to_string(), Entry::Defined(ExprSlot::CVar(Rc::new(h))))
}

/// Entry builder for `Add`.
pub fn c_add<A, Ta, Inh, Syn>(
    h: impl Fn(&ExprTransformer<A, Ta, Inh, Syn>, &Inh, &ExprAug<A, Ta, Inh, Syn>, &ExprArgA<A, Ta, Inh>, &ExprArgA<A, Ta, Inh>) -> Syn + 'static,
) -> (String, Entry<ExprSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Add".to_string(), Entry::Defined(ExprSlot::CAdd(Rc::new(h))))
}

/// Entry builder for `Mul`.
pub fn c_mul<A, Ta, Inh, Syn>(
    h: impl Fn(&ExprTransformer<A, Ta, Inh, Syn>, &Inh, &ExprAug<A, Ta, Inh, Syn>, &ExprArgA<A, Ta, Inh>, &ExprArgA<A, Ta, Inh>) -> Syn + 'static,
) -> (String, Entry<ExprSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    ("c_Mul".to_string(), Entry::Defined(ExprSlot::CMul(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<A, Ta, Inh, Syn>(
    name: &str,
    h: impl Fn(&ExprTransformer<A, Ta, Inh, Syn>, &Inh, &ExprAug<A, Ta, Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<ExprSlot<A, Ta, Inh, Syn>>)
where
    A: 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(ExprSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<A, Ta, Inh, Syn>(name: &str) -> (String, Entry<ExprSlot<A, Ta, Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<A, Ta, Inh, Syn>(
    trans: &ExprTransformer<A, Ta, Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &ExprAug<A, Ta, Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        ExprSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Fragment interface: one method per constructor with the minimal
/// argument view, so implementations stay independent of whichever sum
/// hosts them.
pub trait ExprPack<A, Ta, Inh, Syn> {
    fn c_var(&self, inh: &Inh, p1: &String) -> Syn;
    fn c_add(&self, inh: &Inh, p1: &dyn Fx<Inh, Ta>, p2: &dyn Fx<Inh, Ta>) -> Syn;
    fn c_mul(&self, inh: &Inh, p1: &dyn Fx<Inh, Ta>, p2: &dyn Fx<Inh, Ta>) -> Syn;
}

/// Builds the sum's full entry list from one pack.
pub fn from_pack<A, Ta, Inh, Syn, P>(pack: P) -> Vec<(String, Entry<ExprSlot<A, Ta, Inh, Syn>>)>
where
    P: ExprPack<A, Ta, Inh, Syn> + 'static,
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
    ]
}

/// Adapts a `var` fragment into this sum's table.
pub fn include_var<A, Ta, Inh, Syn, P>(pack: P) -> Vec<(String, Entry<ExprSlot<A, Ta, Inh, Syn>>)>
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
pub fn include_arith<A, Ta, Inh, Syn, P>(pack: P) -> Vec<(String, Entry<ExprSlot<A, Ta, Inh, Syn>>)>
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

/// Traverses one `expr` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn expr_gcata<A, Ta, Inh, Syn>(
    fa: TransFn<Inh, A, Ta>,
    trans: &ExprTransformer<A, Ta, Inh, Syn>,
    inh: &Inh,
    subj: &Expr<A>,
) -> Syn
where
    A: Clone + 'static,
    Ta: 'static,
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, Expr<A>, Syn> = {
        let fa = fa.clone();
        let trans = trans.clone();
        Rc::new(move |i, s| expr_gcata(fa.clone(), &trans, i, s))
    };
    let tpo = ExprTpo { a: fa.clone() };
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        Expr::Var(p1) => match trans.slot("c_Var") {
            ExprSlot::CVar(h) => h(
                trans,
                inh,
                &subj_arg,
                p1,
            ),
            _ => panic!("slot `c_Var` in transformer `{}` has the wrong shape", trans.name()),
        },
        Expr::Add(p1, p2) => match trans.slot("c_Add") {
            ExprSlot::CAdd(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.clone(), fa.clone(), tpo.clone()),
                &make_aug(p2.clone(), fa.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Add` in transformer `{}` has the wrong shape", trans.name()),
        },
        Expr::Mul(p1, p2) => match trans.slot("c_Mul") {
            ExprSlot::CMul(h) => h(
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

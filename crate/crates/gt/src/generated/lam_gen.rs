// Generated by `gt gen` from declaration `lam`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, TransFn, Transformer, make_aug};

/// The `lam` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lam {
    Var(String),
    App(Rc<Lam>, Rc<Lam>),
    Lam(String, Rc<Lam>),
}

/// Per-parameter transformations; `lam` has none.
#[derive(Clone)]
pub struct LamTpo;

/// The whole-subject augmented argument.
pub type LamAug<Inh, Syn> = Aug<Inh, Lam, Syn, LamTpo>;

/// Handler-table slots for `lam`: one shape per constructor plus
/// named auxiliary methods.
pub enum LamSlot<Inh, Syn> {
    CVar(Rc<dyn Fn(&LamTransformer<Inh, Syn>, &Inh, &LamAug<Inh, Syn>, &String) -> Syn>),
    CApp(Rc<dyn Fn(&LamTransformer<Inh, Syn>, &Inh, &LamAug<Inh, Syn>, &LamAug<Inh, Syn>, &LamAug<Inh, Syn>) -> Syn>),
    CLam(Rc<dyn Fn(&LamTransformer<Inh, Syn>, &Inh, &LamAug<Inh, Syn>, &String, &LamAug<Inh, Syn>) -> Syn>),
    Method(Rc<dyn Fn(&LamTransformer<Inh, Syn>, &Inh, &LamAug<Inh, Syn>) -> Syn>),
}

impl<Inh, Syn> Clone for LamSlot<Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CVar(h) => Self::CVar(h.clone()),
            Self::CApp(h) => Self::CApp(h.clone()),
            Self::CLam(h) => Self::CLam(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `lam`.
pub type LamTransformer<Inh, Syn> = Transformer<LamSlot<Inh, Syn>>;

/// Entry builder for `Var`.
pub fn c_var<Inh, Syn>(
    h: impl Fn(&LamTransformer<Inh, Syn>, &Inh, &LamAug<Inh, Syn>, &String) -> Syn + 'static,
) -> (String, Entry<LamSlot<Inh, Syn>>)
where
    Inh: 'static,
    Syn: 'static,
{
    ("c_Var".to_string(), Entry::Defined(LamSlot::CVar(Rc::new(h))))
}

/// Entry builder for `App`.
pub fn c_app<Inh, Syn>(
    h: impl Fn(&LamTransformer<Inh, Syn>, &Inh, &LamAug<Inh, Syn>, &LamAug<Inh, Syn>, &LamAug<Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<LamSlot<Inh, Syn>>)
where
    Inh: 'static,
    Syn: 'static,
{
    ("c_App".to_string(), Entry::Defined(LamSlot::CApp(Rc::new(h))))
}

/// Entry builder for `Lam`.
pub fn c_lam<Inh, Syn>(
    h: impl Fn(&LamTransformer<Inh, Syn>, &Inh, &LamAug<Inh, Syn>, &String, &LamAug<Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<LamSlot<Inh, Syn>>)
where
    Inh: 'static,
    Syn: 'static,
{
    ("c_Lam".to_string(), Entry::Defined(LamSlot::CLam(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<Inh, Syn>(
    name: &str,
    h: impl Fn(&LamTransformer<Inh, Syn>, &Inh, &LamAug<Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<LamSlot<Inh, Syn>>)
where
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(LamSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<Inh, Syn>(name: &str) -> (String, Entry<LamSlot<Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<Inh, Syn>(
    trans: &LamTransformer<Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &LamAug<Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        LamSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Traverses one `lam` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn lam_gcata<Inh, Syn>(
    trans: &LamTransformer<Inh, Syn>,
    inh: &Inh,
    subj: &Lam,
) -> Syn
where
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, Lam, Syn> = {
        let trans = trans.clone();
        Rc::new(move |i, s| lam_gcata(&trans, i, s))
    };
    let tpo = LamTpo;
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        Lam::Var(p1) => match trans.slot("c_Var") {
            LamSlot::CVar(h) => h(
                trans,
                inh,
                &subj_arg,
                p1,
            ),
            _ => panic!("slot `c_Var` in transformer `{}` has the wrong shape", trans.name()),
        },
        Lam::App(p1, p2) => match trans.slot("c_App") {
            LamSlot::CApp(h) => h(
                trans,
                inh,
                &subj_arg,
                &make_aug(p1.as_ref().clone(), self_f.clone(), tpo.clone()),
                &make_aug(p2.as_ref().clone(), self_f.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_App` in transformer `{}` has the wrong shape", trans.name()),
        },
        Lam::Lam(p1, p2) => match trans.slot("c_Lam") {
            LamSlot::CLam(h) => h(
                trans,
                inh,
                &subj_arg,
                p1,
                &make_aug(p2.as_ref().clone(), self_f.clone(), tpo.clone()),
            ),
            _ => panic!("slot `c_Lam` in transformer `{}` has the wrong shape", trans.name()),
        },
    }
}

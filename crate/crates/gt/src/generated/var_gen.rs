// Generated by `gt gen` from declaration `var`. Do not edit by hand.

use std::rc::Rc;

use gt_runtime::{Aug, Entry, TransFn, Transformer, make_aug};

/// The `var` datatype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Var {
    Var(String),
}

/// Per-parameter transformations; `var` has none.
#[derive(Clone)]
pub struct VarTpo;

/// The whole-subject augmented argument.
pub type VarAug<Inh, Syn> = Aug<Inh, Var, Syn, VarTpo>;

/// Handler-table slots for `var`: one shape per constructor plus
/// named auxiliary methods.
pub enum VarSlot<Inh, Syn> {
    CVar(Rc<dyn Fn(&VarTransformer<Inh, Syn>, &Inh, &VarAug<Inh, Syn>, &String) -> Syn>),
    Method(Rc<dyn Fn(&VarTransformer<Inh, Syn>, &Inh, &VarAug<Inh, Syn>) -> Syn>),
}

impl<Inh, Syn> Clone for VarSlot<Inh, Syn> {
    fn clone(&self) -> Self {
        match self {
            Self::CVar(h) => Self::CVar(h.clone()),
            Self::Method(h) => Self::Method(h.clone()),
        }
    }
}

/// A handler table over `var`.
pub type VarTransformer<Inh, Syn> = Transformer<VarSlot<Inh, Syn>>;

/// Entry builder for `Var`.
pub fn c_var<Inh, Syn>(
    h: impl Fn(&VarTransformer<Inh, Syn>, &Inh, &VarAug<Inh, Syn>, &String) -> Syn + 'static,
) -> (String, Entry<VarSlot<Inh, Syn>>)
where
    Inh: 'static,
    Syn: 'static,
{
    ("c_Var".to_string(), Entry::Defined(VarSlot::CVar(Rc::new(h))))
}

/// Entry builder for a named auxiliary method.
pub fn method_slot<Inh, Syn>(
    name: &str,
    h: impl Fn(&VarTransformer<Inh, Syn>, &Inh, &VarAug<Inh, Syn>) -> Syn + 'static,
) -> (String, Entry<VarSlot<Inh, Syn>>)
where
    Inh: 'static,
    Syn: 'static,
{
    (name.to_string(), Entry::Defined(VarSlot::Method(Rc::new(h))))
}

/// Declares a handler without a body; dispatch panics until an extension
/// provides one.
pub fn virtual_slot<Inh, Syn>(name: &str) -> (String, Entry<VarSlot<Inh, Syn>>) {
    (name.to_string(), Entry::Virtual)
}

/// Dispatches a named method through the table, keeping the call late bound.
pub fn call_method<Inh, Syn>(
    trans: &VarTransformer<Inh, Syn>,
    name: &str,
    inh: &Inh,
    arg: &VarAug<Inh, Syn>,
) -> Syn {
    match trans.slot(name) {
        VarSlot::Method(h) => h(trans, inh, arg),
        _ => panic!("slot `{name}` in transformer `{}` is not a method", trans.name()),
    }
}

/// Fragment interface: one method per constructor with the minimal
/// argument view, so implementations stay independent of whichever sum
/// hosts them.
pub trait VarPack<Inh, Syn> {
    fn c_var(&self, inh: &Inh, p1: &String) -> Syn;
}

/// Builds the sum's full entry list from one pack.
pub fn from_pack<Inh, Syn, P>(pack: P) -> Vec<(String, Entry<VarSlot<Inh, Syn>>)>
where
    P: VarPack<Inh, Syn> + 'static,
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

/// Traverses one `var` node: augments the subject and every argument,
/// then dispatches the constructor's handler from `trans`.
pub fn var_gcata<Inh, Syn>(
    trans: &VarTransformer<Inh, Syn>,
    inh: &Inh,
    subj: &Var,
) -> Syn
where
    Inh: 'static,
    Syn: 'static,
{
    let self_f: TransFn<Inh, Var, Syn> = {
        let trans = trans.clone();
        Rc::new(move |i, s| var_gcata(&trans, i, s))
    };
    let tpo = VarTpo;
    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());
    match subj {
        Var::Var(p1) => match trans.slot("c_Var") {
            VarSlot::CVar(h) => h(
                trans,
                inh,
                &subj_arg,
                p1,
            ),
            _ => panic!("slot `c_Var` in transformer `{}` has the wrong shape", trans.name()),
        },
    }
}

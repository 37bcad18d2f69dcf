//! The negation extension: the `expr_ext` sum adds one constructor, and its
//! evaluator reuses the `var` and `arith` fragments exactly as they are. The
//! only new code is the `Neg` handler.

use std::rc::Rc;

use gt_runtime::{Fx, TransFn};

use crate::generated::expr_ext_gen::{
    expr_ext_gcata, include_arith, include_neg, include_var, ExprExt, ExprExtTransformer,
};
use crate::generated::neg_gen::NegPack;

use super::arith_eval::ArithEval;
use super::eval::{Env, Value};
use super::var_eval::VarEval;

/// The recursive tie of the extended sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AstX(pub ExprExt<Rc<AstX>>);

pub fn xvar(name: impl Into<String>) -> AstX {
    AstX(ExprExt::Var(name.into()))
}

pub fn xadd(l: AstX, r: AstX) -> AstX {
    AstX(ExprExt::Add(Rc::new(l), Rc::new(r)))
}

pub fn xmul(l: AstX, r: AstX) -> AstX {
    AstX(ExprExt::Mul(Rc::new(l), Rc::new(r)))
}

pub fn xneg(e: AstX) -> AstX {
    AstX(ExprExt::Neg(Rc::new(e)))
}

/// Evaluates negation over integer results.
pub struct NegEval;

impl<A, Inh> NegPack<A, Value, Inh, Value> for NegEval {
    fn c_neg(&self, inh: &Inh, p1: &dyn Fx<Inh, Value>) -> Value {
        Ok(-p1.fx(inh)?)
    }
}

/// The extended evaluator's table: both base fragments plus the negation
/// fragment.
pub fn eval_ext_table() -> ExprExtTransformer<Rc<AstX>, Value, Env<Value>, Value> {
    let mut entries = include_var::<Rc<AstX>, Value, Env<Value>, Value, _>(VarEval);
    entries.extend(include_arith(ArithEval));
    entries.extend(include_neg(NegEval));
    ExprExtTransformer::base("expr_ext_eval", entries)
}

pub fn eval_ext_in(
    table: &ExprExtTransformer<Rc<AstX>, Value, Env<Value>, Value>,
    env: &Env<Value>,
    e: &AstX,
) -> Value {
    let fa: TransFn<Env<Value>, Rc<AstX>, Value> = {
        let table = table.clone();
        Rc::new(move |env, child: &Rc<AstX>| eval_ext_in(&table, env, child))
    };
    expr_ext_gcata(fa, table, env, &e.0)
}

/// Evaluates an extended expression under `env`.
pub fn eval_ext(env: &Env<Value>, e: &AstX) -> Value {
    eval_ext_in(&eval_ext_table(), env, e)
}

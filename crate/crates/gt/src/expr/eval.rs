use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;
use std::rc::Rc;

use gt_runtime::TransFn;

use crate::generated::expr_gen::{
    expr_gcata, include_arith, include_var, Expr, ExprTransformer,
};

use super::arith_eval::ArithEval;
use super::var_eval::VarEval;

/// The recursive tie of the open `expr` sum: an expression node whose
/// children are expressions again.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ast(pub Expr<Rc<Ast>>);

pub fn evar(name: impl Into<String>) -> Ast {
    Ast(Expr::Var(name.into()))
}

pub fn eadd(l: Ast, r: Ast) -> Ast {
    Ast(Expr::Add(Rc::new(l), Rc::new(r)))
}

pub fn emul(l: Ast, r: Ast) -> Ast {
    Ast(Expr::Mul(Rc::new(l), Rc::new(r)))
}

/// Environments map identifiers to values of the evaluation's choosing.
pub type Env<V> = Rc<dyn Fn(&str) -> V>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    UnboundVariable(String),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::UnboundVariable(name) => write!(f, "unbound variable {name}"),
        }
    }
}

impl Error for EvalError {}

/// What integer evaluation produces.
pub type Value = Result<i64, EvalError>;

/// An integer environment from name/value pairs; any other name is unbound.
pub fn int_env(pairs: &[(&str, i64)]) -> Env<Value> {
    let map: BTreeMap<String, i64> =
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    Rc::new(move |name| {
        map.get(name)
            .copied()
            .ok_or_else(|| EvalError::UnboundVariable(name.to_string()))
    })
}

pub fn empty_env() -> Env<Value> {
    int_env(&[])
}

/// Layers numeric self-evaluation over `inner`: a name made of digits is its
/// own value, everything else defers. The expression parser stores integer
/// literals as variables named by their digits; this gives them meaning.
pub fn with_numeric_literals(inner: Env<Value>) -> Env<Value> {
    Rc::new(move |name| {
        if !name.is_empty() && name.bytes().all(|b| b.is_ascii_digit()) {
            name.parse::<i64>()
                .map_err(|_| EvalError::UnboundVariable(name.to_string()))
        } else {
            inner(name)
        }
    })
}

/// The integer evaluator's handler table: the `var` fragment plus the
/// `arith` fragment, composed entry-for-entry with no glue handlers.
pub fn eval_table() -> ExprTransformer<Rc<Ast>, Value, Env<Value>, Value> {
    let mut entries = include_var::<Rc<Ast>, Value, Env<Value>, Value, _>(VarEval);
    entries.extend(include_arith(ArithEval));
    ExprTransformer::base("expr_eval", entries)
}

/// Evaluates `e` under `env` with a caller-supplied table; the recursion
/// into children is tied back to that same table.
pub fn eval_in(
    table: &ExprTransformer<Rc<Ast>, Value, Env<Value>, Value>,
    env: &Env<Value>,
    e: &Ast,
) -> Value {
    let fa: TransFn<Env<Value>, Rc<Ast>, Value> = {
        let table = table.clone();
        Rc::new(move |env, child: &Rc<Ast>| eval_in(&table, env, child))
    };
    expr_gcata(fa, table, env, &e.0)
}

/// Evaluates `e` under `env` with the composed fragment table.
pub fn eval(env: &Env<Value>, e: &Ast) -> Value {
    eval_in(&eval_table(), env, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_evaluations() {
        let env = int_env(&[("x", 2), ("y", 3)]);
        let e = eadd(evar("x"), emul(evar("y"), evar("y")));
        assert_eq!(eval(&env, &e), Ok(11));

        let env = int_env(&[("x", 7)]);
        assert_eq!(eval(&env, &evar("x")), Ok(7));

        assert_eq!(
            eval(&empty_env(), &evar("z")),
            Err(EvalError::UnboundVariable("z".to_string())),
        );
    }

    #[test]
    fn errors_propagate_from_either_side() {
        let env = int_env(&[("x", 2)]);
        let left_bad = eadd(evar("q"), evar("x"));
        let right_bad = emul(evar("x"), evar("q"));
        let want = Err(EvalError::UnboundVariable("q".to_string()));
        assert_eq!(eval(&env, &left_bad), want);
        assert_eq!(eval(&env, &right_bad), want);
    }

    #[test]
    fn numeric_literal_layer_resolves_digit_names() {
        let env = with_numeric_literals(int_env(&[("x", 5)]));
        let e = emul(evar("x"), evar("12"));
        assert_eq!(eval(&env, &e), Ok(60));
        assert_eq!(env("007"), Ok(7));
        assert_eq!(
            env("q"),
            Err(EvalError::UnboundVariable("q".to_string())),
        );
    }
}

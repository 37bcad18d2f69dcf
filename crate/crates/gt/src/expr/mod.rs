//! An integer-expression evaluator assembled from open-sum fragments.
//!
//! The `var` and `arith` fragments are independent handler packs; [`eval`]
//! is nothing but their composition into one table. [`ext`] adds negation by
//! including a third fragment next to the untouched first two, which is the
//! expression problem solved in both directions: new operations are new
//! packs, new constructors are new sums.

pub mod arith_eval;
pub mod eval;
pub mod ext;
pub mod parse;
pub mod var_eval;

pub use arith_eval::ArithEval;
pub use eval::{
    eadd, emul, empty_env, eval, eval_in, eval_table, evar, int_env, with_numeric_literals, Ast,
    Env, EvalError, Value,
};
pub use ext::{eval_ext, eval_ext_in, eval_ext_table, xadd, xmul, xneg, xvar, AstX, NegEval};
pub use parse::{parse_expr, ExprParseError};
pub use var_eval::VarEval;

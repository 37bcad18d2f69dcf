//! Both axes of the expression problem without touching existing code.
//!
//! New operation over the existing syntax: the evaluator here is assembled
//! from the same `include_*` glue the pretty printer uses, so adding an
//! operation is one new handler pack, no edits to the datatype.
//!
//! New syntax under the existing operations: `ExprExt` adds negation, and
//! the evaluator for it reuses the var and arith packs byte for byte; only
//! the negation pack is new.

use gt::expr::{
    eval, eval_ext, eval_ext_table, eval_table, evar, int_env, parse_expr, with_numeric_literals,
    xadd, xmul, xneg, xvar,
};

fn main() {
    // x + y*y with x=2, y=3. The evaluator composes VarEval and ArithEval;
    // neither pack knows the other exists.
    let env = int_env(&[("x", 2), ("y", 3)]);
    let e = parse_expr("x + y*y").expect("well formed");
    println!("x + y*y = {:?}", eval(&env, &e));
    assert_eq!(eval(&env, &e), Ok(11));

    // Unbound names surface as values, not panics.
    let missing = eval(&env, &evar("q"));
    println!("q       = {missing:?}");
    assert!(missing.is_err());

    // Integer literals are variables with digit names; an env layer resolves
    // them numerically before consulting the bindings.
    let lit = parse_expr("2 * (10 + 11)").expect("well formed");
    let env = with_numeric_literals(int_env(&[]));
    assert_eq!(eval(&env, &lit), Ok(42));
    println!("2 * (10 + 11) = {:?}", eval(&env, &lit));

    // The extended syntax: -(x*y) + y over ExprExt. VarEval and ArithEval
    // are reused as values; include_neg supplies the only new handlers.
    let env = int_env(&[("x", 2), ("y", 3)]);
    let xe = xadd(xneg(xmul(xvar("x"), xvar("y"))), xvar("y"));
    println!("-(x*y) + y = {:?}", eval_ext(&env, &xe));
    assert_eq!(eval_ext(&env, &xe), Ok(-3));

    // The glue itself is ordinary data: the extended table is the same two
    // packs plus one more, visible in its handler slots.
    println!("eval handlers:     {:?}", eval_table().handler_names());
    println!("eval_ext handlers: {:?}", eval_ext_table().handler_names());
    assert!(eval_ext_table().has_handler("c_Neg"));
    assert!(!eval_table().has_handler("c_Neg"));
}

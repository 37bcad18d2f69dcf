//! Reduction with a step log. The traced context threads a one-hole context
//! alongside the traversal and snapshots the whole program after every beta
//! step, so the trace reads as the sequence of intermediate programs.

use gt::lambda::{
    parse_term, reduce_with_trace, reduce_with_trace_and_fuel, show_term, Strategy,
};

fn main() {
    let t = parse_term(r"(\f. \x. f (f x)) (\y. y) z").expect("well formed");
    println!("term: {}", show_term(&t));

    let (result, steps) = reduce_with_trace(Strategy::Normal, &t).expect("normalizes");
    println!("normal order, {} steps:", steps.len());
    for s in &steps {
        println!("  {}", show_term(s));
    }
    println!("result: {}", show_term(&result));

    // Every snapshot is one beta step after the previous one, and the last
    // snapshot is the result itself.
    assert_eq!(show_term(steps.last().expect("at least one step")), show_term(&result));
    assert_eq!(show_term(&result), "Var (z)");

    // A diverging term never finishes, but the partial trace keeps what
    // happened before the fuel ran out: one snapshot per step taken.
    let omega = parse_term(r"(\w. w w) (\w. w w)").expect("well formed");
    let partial = reduce_with_trace_and_fuel(Strategy::Normal, &omega, 3).unwrap_err();
    println!("omega with fuel 3 took {} steps before running out:", partial.steps.len());
    for s in &partial.steps {
        println!("  {}", show_term(s));
    }
    assert_eq!(partial.steps.len(), 3);
}

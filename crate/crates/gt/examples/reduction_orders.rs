//! The seven reduction orders side by side. Each strategy is the same base
//! reducer wearing a different stack of extension layers, so they genuinely
//! share code; this example only drives them.
//!
//! The sample terms are chosen to split the strategies apart: a redex under
//! a binder (bn stops, nor does not), a diverging argument that is never
//! needed (bv diverges, bn does not), and a head redex inside an abstraction
//! (only the head reducers fire it).

use gt::lambda::{app, lam, parse_term, reduce_with_fuel, show_term, var, Strategy, Term};

fn omega() -> Term {
    let w = lam("w", app(var("w"), var("w")));
    app(w.clone(), w)
}

fn survey(label: &str, t: &Term) {
    println!("{label}: {}", show_term(t));
    for s in Strategy::ALL {
        match reduce_with_fuel(s, t, 200) {
            Ok(r) => println!("  {:<3} {}", s.name(), show_term(&r)),
            Err(_) => println!("  {:<3} out of fuel", s.name()),
        }
    }
    println!();
}

fn main() {
    // Redex under a binder: strategies that do not go under abstractions
    // return the term unchanged.
    let under_binder = lam("x", app(lam("y", var("z")), var("x")));
    survey("redex under a binder", &under_binder);

    // The argument diverges but the function ignores it. Strict strategies
    // spin on the argument; the others discard it.
    let discards = app(lam("x", var("z")), omega());
    survey("unused diverging argument", &discards);

    // A head redex guarded by an outer abstraction whose own argument is
    // still missing. he and the hybrids reach it; bn, nor and bv do not
    // finish the inner work the same way.
    let head_inside = parse_term(r"\a. (\x. x) ((\y. y) a)").expect("well formed");
    survey("head redex inside an abstraction", &head_inside);

    // bn keeps the binder-guarded redex, nor contracts it.
    assert_eq!(
        show_term(&reduce_with_fuel(Strategy::CallByName, &under_binder, 200).unwrap()),
        show_term(&under_binder)
    );
    assert_eq!(
        show_term(&reduce_with_fuel(Strategy::Normal, &under_binder, 200).unwrap()),
        "Lam (x, Var (z))"
    );
    assert!(reduce_with_fuel(Strategy::CallByValue, &discards, 200).is_err());
    assert_eq!(
        show_term(&reduce_with_fuel(Strategy::CallByName, &discards, 200).unwrap()),
        "Var (z)"
    );
}

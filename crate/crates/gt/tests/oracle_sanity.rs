//! The reference interpreter must be trustworthy before anything is tested
//! against it. Every expectation in this file was worked out by hand;
//! nothing here touches the library's reduction code.

mod common;

use common::corpus;
use common::oracle::{
    a, alpha_eq, free_vars, is_beta_normal, l, run, size, subst, v, Budget, Outcome, RefStrategy,
    RefTerm,
};

const BUDGET: Budget = Budget { gas: 10_000, max_size: 1_000_000 };

fn done(s: RefStrategy, t: &RefTerm) -> RefTerm {
    match run(s, t, BUDGET) {
        Outcome::Done(r) => r,
        other => panic!("{} on {:?} did not finish: {:?}", s.name(), t, other),
    }
}

// λx.((λy.y) z)
fn t1() -> RefTerm {
    l("x", a(l("y", v("y")), v("z")))
}
// (λx.((λy.y) z)) y
fn t2() -> RefTerm {
    a(t1(), v("y"))
}
// x ((λx.x) y)
fn t3() -> RefTerm {
    a(v("x"), a(l("x", v("x")), v("y")))
}
// (λx. x y) ((λx.x) y)
fn t4() -> RefTerm {
    a(l("x", a(v("x"), v("y"))), a(l("x", v("x")), v("y")))
}
// (λx. y x) ((λx.x) y)
fn t5() -> RefTerm {
    a(l("x", a(v("y"), v("x"))), a(l("x", v("x")), v("y")))
}

struct Case {
    term: fn() -> RefTerm,
    strategy: RefStrategy,
    expected: fn() -> RefTerm,
}

#[test]
fn hand_derived_results_for_the_five_sample_terms() {
    use RefStrategy::*;
    let cases = [
        // t1: only the strategies that reduce under binders make progress.
        Case { term: t1, strategy: Bn, expected: t1 },
        Case { term: t1, strategy: Bv, expected: t1 },
        Case { term: t1, strategy: Nor, expected: || l("x", v("z")) },
        Case { term: t1, strategy: Ao, expected: || l("x", v("z")) },
        Case { term: t1, strategy: Ha, expected: || l("x", v("z")) },
        Case { term: t1, strategy: He, expected: || l("x", v("z")) },
        Case { term: t1, strategy: Hn, expected: || l("x", v("z")) },
        // t2: the outer redex discards its argument; everyone reaches z.
        Case { term: t2, strategy: Bn, expected: || v("z") },
        Case { term: t2, strategy: Nor, expected: || v("z") },
        Case { term: t2, strategy: Bv, expected: || v("z") },
        Case { term: t2, strategy: Ao, expected: || v("z") },
        Case { term: t2, strategy: Ha, expected: || v("z") },
        Case { term: t2, strategy: He, expected: || v("z") },
        Case { term: t2, strategy: Hn, expected: || v("z") },
        // t3: a stuck head; only argument-reducing strategies touch the redex.
        Case { term: t3, strategy: Bn, expected: t3 },
        Case { term: t3, strategy: He, expected: t3 },
        Case { term: t3, strategy: Nor, expected: || a(v("x"), v("y")) },
        Case { term: t3, strategy: Bv, expected: || a(v("x"), v("y")) },
        Case { term: t3, strategy: Ao, expected: || a(v("x"), v("y")) },
        Case { term: t3, strategy: Ha, expected: || a(v("x"), v("y")) },
        Case { term: t3, strategy: Hn, expected: || a(v("x"), v("y")) },
        // t4: the argument lands in head position, so even bn finishes it.
        Case { term: t4, strategy: Bn, expected: || a(v("y"), v("y")) },
        Case { term: t4, strategy: Nor, expected: || a(v("y"), v("y")) },
        Case { term: t4, strategy: Bv, expected: || a(v("y"), v("y")) },
        Case { term: t4, strategy: Ao, expected: || a(v("y"), v("y")) },
        Case { term: t4, strategy: Ha, expected: || a(v("y"), v("y")) },
        Case { term: t4, strategy: He, expected: || a(v("y"), v("y")) },
        Case { term: t4, strategy: Hn, expected: || a(v("y"), v("y")) },
        // t5: the argument lands in argument position; bn and he leave the
        // inner redex untouched.
        Case { term: t5, strategy: Bn, expected: || a(v("y"), a(l("x", v("x")), v("y"))) },
        Case { term: t5, strategy: He, expected: || a(v("y"), a(l("x", v("x")), v("y"))) },
        Case { term: t5, strategy: Nor, expected: || a(v("y"), v("y")) },
        Case { term: t5, strategy: Bv, expected: || a(v("y"), v("y")) },
        Case { term: t5, strategy: Ao, expected: || a(v("y"), v("y")) },
        Case { term: t5, strategy: Ha, expected: || a(v("y"), v("y")) },
        Case { term: t5, strategy: Hn, expected: || a(v("y"), v("y")) },
    ];
    assert_eq!(cases.len(), 35);
    for case in &cases {
        let got = done(case.strategy, &(case.term)());
        let want = (case.expected)();
        assert!(
            alpha_eq(&got, &want),
            "{} on {:?}: got {:?}, want {:?}",
            case.strategy.name(),
            (case.term)(),
            got,
            want
        );
    }
}

#[test]
fn omega_runs_out_of_gas_under_every_strategy() {
    let omega = {
        let w = l("x", a(v("x"), v("x")));
        a(w.clone(), w)
    };
    for s in RefStrategy::ALL {
        let out = run(s, &omega, Budget { gas: 100, max_size: 10_000 });
        assert_eq!(out, Outcome::OutOfGas, "{}", s.name());
    }
}

#[test]
fn exponential_growers_hit_the_size_cap() {
    // A chain of duplicators: under call-by-value each level doubles the
    // already-reduced argument, so the term blows the cap after a handful
    // of contractions (linear gas, exponential size).
    let dup = |body| a(l("x", a(v("x"), v("x"))), body);
    let mut t = v("y");
    for _ in 0..13 {
        t = dup(t);
    }
    let out = run(RefStrategy::Bv, &t, Budget { gas: 10_000, max_size: 5_000 });
    assert_eq!(out, Outcome::TooBig);
}

#[test]
fn head_cyclers_run_out_of_gas_at_constant_size() {
    // (λx.(x x)(x x)) applied to itself re-creates itself in head position
    // forever without growing, so it must exhaust gas, not the size cap.
    let q = l("x", a(a(v("x"), v("x")), a(v("x"), v("x"))));
    let t = a(q.clone(), q);
    let out = run(RefStrategy::Bn, &t, Budget { gas: 10_000, max_size: 5_000 });
    assert_eq!(out, Outcome::OutOfGas);
}

#[test]
fn substitution_is_capture_avoiding() {
    // (λy. x y)[x := y] must rename the binder, not capture the payload.
    let got = subst("x", &v("y"), &l("y", a(v("x"), v("y"))));
    assert_eq!(got, l("y'", a(v("y"), v("y'"))));
    assert!(alpha_eq(&got, &l("q", a(v("y"), v("q")))));

    // A shadowing binder stops the substitution.
    let shadow = l("x", v("x"));
    assert_eq!(subst("x", &v("z"), &shadow), shadow);

    // Direct hit.
    assert_eq!(subst("x", &v("z"), &v("x")), v("z"));

    // The fresh binder must dodge names bound deeper in the body too:
    // (λy. λy'. y)[x := y] — renaming y to y' would collide with the inner
    // binder; the recursive rename pushes it to y'' instead.
    let tricky = l("y", l("y'", v("y")));
    let got = subst("x", &v("y"), &tricky);
    assert!(alpha_eq(&got, &tricky), "got {got:?}");
    let fv = free_vars(&got);
    assert!(fv.is_empty(), "renaming broke a binding: {fv:?}");
}

#[test]
fn alpha_equivalence_is_name_blind_but_not_structure_blind() {
    assert!(alpha_eq(&l("x", v("x")), &l("y", v("y"))));
    assert!(!alpha_eq(&l("x", v("z")), &l("x", v("w"))));
    assert!(alpha_eq(&l("y'", a(v("y"), v("y'"))), &l("a", a(v("y"), v("a")))));
    // Free names must match exactly.
    assert!(!alpha_eq(&v("x"), &v("y")));
    // A bound occurrence never equals a free one.
    assert!(!alpha_eq(&l("x", v("x")), &l("x", v("y"))));
}

#[test]
fn normalizing_strategies_agree_on_church_arithmetic() {
    for m in 0..=3u32 {
        for n in 0..=3u32 {
            let sum = a(a(corpus::church_add(), corpus::church(m)), corpus::church(n));
            let product = a(a(corpus::church_mul(), corpus::church(m)), corpus::church(n));
            for (term, expected) in [(sum, corpus::church(m + n)), (product, corpus::church(m * n))] {
                for s in [RefStrategy::Nor, RefStrategy::Ha, RefStrategy::Hn] {
                    let got = done(s, &term);
                    assert!(is_beta_normal(&got), "{} left a redex: {:?}", s.name(), got);
                    assert!(
                        alpha_eq(&got, &expected),
                        "{} on {m}⊕{n}: got {:?}, want {:?}",
                        s.name(),
                        got,
                        expected
                    );
                }
            }
        }
    }
}

#[test]
fn screened_corpus_is_reproducible_and_big_enough() {
    let budget = Budget { gas: 120, max_size: 3_000 };
    let c1 = corpus::screened(0xC0FFEE, 40, 6, budget);
    let c2 = corpus::screened(0xC0FFEE, 40, 6, budget);
    assert_eq!(c1, c2);
    assert_eq!(c1.len(), 40);
    assert!(c1.iter().any(|t| size(t) > 3), "corpus is all leaves");
    assert!(c1.iter().any(|t| !free_vars(t).is_empty()), "no open terms");
    assert!(c1.iter().any(|t| free_vars(t).is_empty()), "no closed terms");
}

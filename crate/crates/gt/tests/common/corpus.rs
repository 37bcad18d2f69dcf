//! Deterministic random term corpus for the strategy suites.
//!
//! Candidates are screened by running the reference interpreter for every
//! strategy under a small gas budget plus a term-size cap: terms whose
//! intermediates explode (exponential growers) are discarded, terms that
//! merely run out of gas (Ω) are kept so the out-of-fuel path is exercised
//! on both sides of the comparison.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::oracle::{self, Budget, Outcome, RefStrategy, RefTerm};

const POOL: [&str; 6] = ["x", "y", "z", "w", "u", "v"];

fn random_term(rng: &mut ChaCha8Rng, depth: usize, scope: &mut Vec<String>) -> RefTerm {
    let choice = if depth == 0 { 0 } else { rng.gen_range(0..10) };
    match choice {
        // Leaf: prefer a bound name when one is in scope, else any pool name
        // (open terms are part of the corpus on purpose).
        0..=2 => {
            if !scope.is_empty() && rng.gen_bool(0.7) {
                let i = rng.gen_range(0..scope.len());
                oracle::v(&scope[i].clone())
            } else {
                oracle::v(POOL[rng.gen_range(0..POOL.len())])
            }
        }
        3..=6 => {
            let binder = POOL[rng.gen_range(0..POOL.len())].to_string();
            scope.push(binder.clone());
            let body = random_term(rng, depth - 1, scope);
            scope.pop();
            oracle::l(&binder, body)
        }
        _ => {
            let f = random_term(rng, depth - 1, scope);
            let x = random_term(rng, depth - 1, scope);
            oracle::a(f, x)
        }
    }
}

fn survives_screening(t: &RefTerm, budget: Budget) -> bool {
    RefStrategy::ALL
        .iter()
        .all(|&s| !matches!(oracle::run(s, t, budget), Outcome::TooBig))
}

/// `n` unscreened random terms of depth ≤ `depth`, reproducible from `seed`.
/// For structural suites (folds, maps) where reduction behavior is moot.
pub fn raw_terms(seed: u64, n: usize, depth: usize) -> Vec<RefTerm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_term(&mut rng, depth, &mut Vec::new())).collect()
}

/// `want` screened random terms of depth ≤ `depth`, reproducible from `seed`.
pub fn screened(seed: u64, want: usize, depth: usize, budget: Budget) -> Vec<RefTerm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kept = Vec::with_capacity(want);
    let mut attempts = 0usize;
    while kept.len() < want {
        attempts += 1;
        assert!(attempts < want * 50, "screening rejected too many candidates");
        let t = random_term(&mut rng, depth, &mut Vec::new());
        if survives_screening(&t, budget) {
            kept.push(t);
        }
    }
    kept
}

/// Church numeral λf.λx. f (f (... x)).
pub fn church(n: u32) -> RefTerm {
    let mut body = oracle::v("x");
    for _ in 0..n {
        body = oracle::a(oracle::v("f"), body);
    }
    oracle::l("f", oracle::l("x", body))
}

/// λm.λn.λf.λx. m f (n f x)
pub fn church_add() -> RefTerm {
    use oracle::{a, l, v};
    l(
        "m",
        l(
            "n",
            l(
                "f",
                l("x", a(a(v("m"), v("f")), a(a(v("n"), v("f")), v("x")))),
            ),
        ),
    )
}

/// λm.λn.λf. m (n f)
pub fn church_mul() -> RefTerm {
    use oracle::{a, l, v};
    l("m", l("n", l("f", a(v("m"), a(v("n"), v("f"))))))
}

/// The five sample terms the engine's own documentation uses, plus Ω.
pub fn landmark_terms() -> Vec<RefTerm> {
    use oracle::{a, l, v};
    let omega = {
        let w = l("x", a(v("x"), v("x")));
        a(w.clone(), w)
    };
    vec![
        l("x", a(l("y", v("y")), v("z"))),
        a(l("x", a(l("y", v("y")), v("z"))), v("y")),
        a(v("x"), a(l("x", v("x")), v("y"))),
        a(l("x", a(v("x"), v("y"))), a(l("x", v("x")), v("y"))),
        a(l("x", a(v("y"), v("x"))), a(l("x", v("x")), v("y"))),
        omega,
    ]
}

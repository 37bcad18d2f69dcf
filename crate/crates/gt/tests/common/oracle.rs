//! Reference interpreter for the seven reduction strategies, written as
//! plain recursive functions over its own term type. Deliberately shares
//! nothing with the library: its own substitution, its own freshening, its
//! own alpha test. Test suites convert at the boundary and compare results
//! up to alpha-equivalence, so the two sides can disagree on generated
//! names without masking a real divergence.

use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefTerm {
    Var(String),
    App(Box<RefTerm>, Box<RefTerm>),
    Lam(String, Box<RefTerm>),
}

pub fn v(name: &str) -> RefTerm {
    RefTerm::Var(name.to_string())
}

pub fn a(f: RefTerm, x: RefTerm) -> RefTerm {
    RefTerm::App(Box::new(f), Box::new(x))
}

pub fn l(binder: &str, body: RefTerm) -> RefTerm {
    RefTerm::Lam(binder.to_string(), Box::new(body))
}

/// Node count; the screening budget bounds this.
pub fn size(t: &RefTerm) -> usize {
    match t {
        RefTerm::Var(_) => 1,
        RefTerm::App(f, x) => 1 + size(f) + size(x),
        RefTerm::Lam(_, b) => 1 + size(b),
    }
}

pub fn free_vars(t: &RefTerm) -> BTreeSet<String> {
    match t {
        RefTerm::Var(x) => [x.clone()].into(),
        RefTerm::App(f, x) => {
            let mut s = free_vars(f);
            s.extend(free_vars(x));
            s
        }
        RefTerm::Lam(x, b) => {
            let mut s = free_vars(b);
            s.remove(x);
            s
        }
    }
}

fn fresh(base: &str, avoid: &BTreeSet<String>) -> String {
    let mut name = format!("{base}'");
    while avoid.contains(&name) {
        name.push('\'');
    }
    name
}

/// Capture-avoiding substitution `body[x := payload]`, the textbook way:
/// binders equal to `x` shadow; a binder free in the payload is renamed
/// before descending. Renames conservatively (whenever the binder is free
/// in the payload, even if `x` does not occur below) — alpha-equivalence
/// absorbs the difference and the code stays one branch simpler.
pub fn subst(x: &str, payload: &RefTerm, body: &RefTerm) -> RefTerm {
    subst_in(x, payload, &free_vars(payload), body)
}

fn subst_in(x: &str, payload: &RefTerm, fvp: &BTreeSet<String>, body: &RefTerm) -> RefTerm {
    match body {
        RefTerm::Var(y) if y == x => payload.clone(),
        RefTerm::Var(_) => body.clone(),
        RefTerm::App(f, arg) => a(subst_in(x, payload, fvp, f), subst_in(x, payload, fvp, arg)),
        RefTerm::Lam(y, _) if y == x => body.clone(),
        RefTerm::Lam(y, b) => {
            if fvp.contains(y) {
                // The new binder must dodge the payload (capture), the body's
                // free names (unintended shadowing) and `x` (masking).
                let mut avoid = free_vars(b);
                avoid.extend(fvp.iter().cloned());
                avoid.insert(x.to_string());
                let y2 = fresh(y, &avoid);
                let b2 = subst(y, &v(&y2), b);
                l(&y2, subst_in(x, payload, fvp, &b2))
            } else {
                l(y, subst_in(x, payload, fvp, b))
            }
        }
    }
}

/// Alpha-equivalence by parallel binder-stack walk (de Bruijn on the fly).
pub fn alpha_eq(t1: &RefTerm, t2: &RefTerm) -> bool {
    fn go(t1: &RefTerm, t2: &RefTerm, env1: &mut Vec<String>, env2: &mut Vec<String>) -> bool {
        match (t1, t2) {
            (RefTerm::Var(x), RefTerm::Var(y)) => {
                let d1 = env1.iter().rev().position(|b| b == x);
                let d2 = env2.iter().rev().position(|b| b == y);
                match (d1, d2) {
                    (Some(i), Some(j)) => i == j,
                    (None, None) => x == y,
                    _ => false,
                }
            }
            (RefTerm::App(f1, x1), RefTerm::App(f2, x2)) => {
                go(f1, f2, env1, env2) && go(x1, x2, env1, env2)
            }
            (RefTerm::Lam(x, b1), RefTerm::Lam(y, b2)) => {
                env1.push(x.clone());
                env2.push(y.clone());
                let r = go(b1, b2, env1, env2);
                env1.pop();
                env2.pop();
                r
            }
            _ => false,
        }
    }
    go(t1, t2, &mut Vec::new(), &mut Vec::new())
}

/// True iff the term contains no β-redex anywhere, including under binders.
pub fn is_beta_normal(t: &RefTerm) -> bool {
    match t {
        RefTerm::Var(_) => true,
        RefTerm::Lam(_, b) => is_beta_normal(b),
        RefTerm::App(f, x) => {
            !matches!(f.as_ref(), RefTerm::Lam(_, _)) && is_beta_normal(f) && is_beta_normal(x)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefStrategy {
    Bn,
    Nor,
    Bv,
    Ao,
    Ha,
    He,
    Hn,
}

impl RefStrategy {
    pub const ALL: [RefStrategy; 7] = [
        RefStrategy::Bn,
        RefStrategy::Nor,
        RefStrategy::Bv,
        RefStrategy::Ao,
        RefStrategy::Ha,
        RefStrategy::He,
        RefStrategy::Hn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RefStrategy::Bn => "bn",
            RefStrategy::Nor => "nor",
            RefStrategy::Bv => "bv",
            RefStrategy::Ao => "ao",
            RefStrategy::Ha => "ha",
            RefStrategy::He => "he",
            RefStrategy::Hn => "hn",
        }
    }
}

/// Resource limits for one run. `gas` is the number of β-contractions
/// allowed; `max_size` aborts runs whose intermediate terms explode
/// (screening guard for generated corpora — the library has no such cap).
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub gas: u64,
    pub max_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Done(RefTerm),
    OutOfGas,
    TooBig,
}

enum Stop {
    Gas,
    Size,
}

struct Run {
    gas: u64,
    max_size: usize,
}

type Red = Result<RefTerm, Stop>;

/// Recursion depth tracks gas on head-cycling terms (Ω burns one stack level
/// per contraction), so every strategy entry grows the stack on demand.
fn grow<T>(f: impl FnOnce() -> T) -> T {
    stacker::maybe_grow(64 * 1024, 4 * 1024 * 1024, f)
}

impl Run {
    /// One β-contraction: charge gas, substitute, enforce the size cap.
    fn beta(&mut self, x: &str, body: &RefTerm, arg: &RefTerm) -> Red {
        if self.gas == 0 {
            return Err(Stop::Gas);
        }
        self.gas -= 1;
        let contractum = subst(x, arg, body);
        if size(&contractum) > self.max_size {
            return Err(Stop::Size);
        }
        Ok(contractum)
    }

    // The seven strategies, transcribed from Sestoft's big-step rules.
    // Haskell-style `case reduce-head of` becomes a match on the reduced
    // operator; hybrids reduce the head with a different (weaker) strategy
    // and re-normalize it with their own when it fails to be an abstraction.

    fn bn(&mut self, t: &RefTerm) -> Red {
        grow(|| match t {
            RefTerm::Var(_) | RefTerm::Lam(_, _) => Ok(t.clone()),
            RefTerm::App(f, arg) => match self.bn(f)? {
                RefTerm::Lam(x, b) => {
                    let c = self.beta(&x, &b, arg)?;
                    self.bn(&c)
                }
                f1 => Ok(a(f1, arg.as_ref().clone())),
            },
        })
    }

    fn nor(&mut self, t: &RefTerm) -> Red {
        grow(|| match t {
            RefTerm::Var(_) => Ok(t.clone()),
            RefTerm::Lam(x, b) => Ok(l(x, self.nor(b)?)),
            RefTerm::App(f, arg) => match self.bn(f)? {
                RefTerm::Lam(x, b) => {
                    let c = self.beta(&x, &b, arg)?;
                    self.nor(&c)
                }
                f1 => {
                    let f2 = self.nor(&f1)?;
                    Ok(a(f2, self.nor(arg)?))
                }
            },
        })
    }

    fn bv(&mut self, t: &RefTerm) -> Red {
        grow(|| match t {
            RefTerm::Var(_) | RefTerm::Lam(_, _) => Ok(t.clone()),
            RefTerm::App(f, arg) => match self.bv(f)? {
                RefTerm::Lam(x, b) => {
                    let argv = self.bv(arg)?;
                    let c = self.beta(&x, &b, &argv)?;
                    self.bv(&c)
                }
                f1 => Ok(a(f1, self.bv(arg)?)),
            },
        })
    }

    fn ao(&mut self, t: &RefTerm) -> Red {
        grow(|| match t {
            RefTerm::Var(_) => Ok(t.clone()),
            RefTerm::Lam(x, b) => Ok(l(x, self.ao(b)?)),
            RefTerm::App(f, arg) => match self.ao(f)? {
                RefTerm::Lam(x, b) => {
                    let argv = self.ao(arg)?;
                    let c = self.beta(&x, &b, &argv)?;
                    self.ao(&c)
                }
                f1 => Ok(a(f1, self.ao(arg)?)),
            },
        })
    }

    fn ha(&mut self, t: &RefTerm) -> Red {
        grow(|| match t {
            RefTerm::Var(_) => Ok(t.clone()),
            RefTerm::Lam(x, b) => Ok(l(x, self.ha(b)?)),
            RefTerm::App(f, arg) => match self.bv(f)? {
                RefTerm::Lam(x, b) => {
                    let argv = self.ha(arg)?;
                    let c = self.beta(&x, &b, &argv)?;
                    self.ha(&c)
                }
                f1 => {
                    let f2 = self.ha(&f1)?;
                    Ok(a(f2, self.ha(arg)?))
                }
            },
        })
    }

    fn he(&mut self, t: &RefTerm) -> Red {
        grow(|| match t {
            RefTerm::Var(_) => Ok(t.clone()),
            RefTerm::Lam(x, b) => Ok(l(x, self.he(b)?)),
            RefTerm::App(f, arg) => match self.he(f)? {
                RefTerm::Lam(x, b) => {
                    let c = self.beta(&x, &b, arg)?;
                    self.he(&c)
                }
                f1 => Ok(a(f1, arg.as_ref().clone())),
            },
        })
    }

    fn hn(&mut self, t: &RefTerm) -> Red {
        grow(|| match t {
            RefTerm::Var(_) => Ok(t.clone()),
            RefTerm::Lam(x, b) => Ok(l(x, self.hn(b)?)),
            RefTerm::App(f, arg) => match self.he(f)? {
                RefTerm::Lam(x, b) => {
                    let c = self.beta(&x, &b, arg)?;
                    self.hn(&c)
                }
                f1 => {
                    let f2 = self.hn(&f1)?;
                    Ok(a(f2, self.hn(arg)?))
                }
            },
        })
    }
}

pub fn run(strategy: RefStrategy, t: &RefTerm, budget: Budget) -> Outcome {
    let mut r = Run { gas: budget.gas, max_size: budget.max_size };
    let red = match strategy {
        RefStrategy::Bn => r.bn(t),
        RefStrategy::Nor => r.nor(t),
        RefStrategy::Bv => r.bv(t),
        RefStrategy::Ao => r.ao(t),
        RefStrategy::Ha => r.ha(t),
        RefStrategy::He => r.he(t),
        RefStrategy::Hn => r.hn(t),
    };
    match red {
        Ok(t) => Outcome::Done(t),
        Err(Stop::Gas) => Outcome::OutOfGas,
        Err(Stop::Size) => Outcome::TooBig,
    }
}

/// Every term reachable from `t` by contracting exactly one redex, built
/// with the same capture-avoiding substitution the interpreter uses. Used to
/// check that consecutive trace snapshots are one β-step apart.
pub fn one_step_results(t: &RefTerm) -> Vec<RefTerm> {
    let mut out = Vec::new();
    match t {
        RefTerm::Var(_) => {}
        RefTerm::Lam(x, body) => {
            for body2 in one_step_results(body) {
                out.push(l(x, body2));
            }
        }
        RefTerm::App(f, arg) => {
            if let RefTerm::Lam(x, body) = f.as_ref() {
                out.push(subst(x, arg, body));
            }
            for f2 in one_step_results(f) {
                out.push(a(f2, (**arg).clone()));
            }
            for arg2 in one_step_results(arg) {
                out.push(a((**f).clone(), arg2));
            }
        }
    }
    out
}

use std::cell::{Cell, RefCell};
use std::error::Error;
use std::fmt;
use std::rc::Rc;

use crate::generated::lam_gen::{
    c_app, c_lam, c_var, call_method, lam_gcata, method_slot, virtual_slot, Lam, LamTransformer,
};

use super::subst::{subst, NameGen};
use super::term::{app, lam, Term};

/// β-steps a reduction may take before giving up.
pub const DEFAULT_FUEL: u64 = 10_000;

/// The fuel budget ran out before a result was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuelExhausted;

impl fmt::Display for FuelExhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("reduction ran out of fuel")
    }
}

impl Error for FuelExhausted {}

/// A traced reduction ran out of fuel; the snapshots taken up to that point
/// are kept so callers can still show how far the term got.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTrace {
    pub steps: Vec<Term>,
}

impl fmt::Display for PartialTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "reduction ran out of fuel after {} steps", self.steps.len())
    }
}

impl Error for PartialTrace {}

/// Synthesized attribute of every reduction: the reduced term, unless the
/// fuel ran out somewhere below.
pub type Red = Result<Term, FuelExhausted>;

/// Handler table of one reduction order.
pub type ReduceTable<C> = LamTransformer<C, Red>;

/// What the reduction handlers ask of their inherited attribute. The simple
/// context answers the position moves with clones of itself, so the same
/// handler code runs traced and untraced; only the context changes.
pub trait ReductionContext: Clone + 'static {
    /// Shared fresh-name supply for capture-avoiding substitution.
    fn names(&self) -> &Rc<RefCell<NameGen>>;

    /// Charge one β-contraction against the budget.
    fn spend(&self) -> Result<(), FuelExhausted>;

    /// Move into the operator of an application whose argument is `arg`.
    fn in_operator(&self, arg: &Term) -> Self;

    /// Move into the argument of an application whose operator is `op`.
    fn in_argument(&self, op: &Term) -> Self;

    /// Move under a binder named `binder`.
    fn under_binder(&self, binder: &str) -> Self;

    /// A β-step happened here and produced `contractum`.
    fn record(&self, contractum: &Term);
}

// Keeps deep reductions from exhausting the thread stack: terms whose head
// keeps rebuilding itself burn one recursion level per unit of fuel.
fn grow<T>(f: impl FnOnce() -> T) -> T {
    stacker::maybe_grow(64 * 1024, 4 * 1024 * 1024, f)
}

/// The shared skeleton of all reduction orders.
///
/// Variables are values. An application reduces its operator with the
/// late-bound `head` method; if that yields an abstraction, the β-step fires
/// (argument first shaped by `subst_arg`) and the strategy restarts on the
/// contractum, otherwise the application is rebuilt around the reduced
/// operator with the argument shaped by `arg`. A concrete order fills the
/// virtual `c_Lam`, `arg` and `subst_arg` slots and may re-bind `head`.
pub fn reducer<C: ReductionContext>() -> ReduceTable<C> {
    LamTransformer::base(
        "reducer",
        vec![
            c_var(|_, _, s, _| Ok(s.x.clone())),
            virtual_slot("c_Lam"),
            c_app(|this, c: &C, s, f, m| {
                grow(|| {
                    let head = call_method(this, "head", &c.in_operator(&m.x), f)?;
                    match &head {
                        Lam::Lam(x, body) => {
                            let payload =
                                call_method(this, "subst_arg", &c.in_argument(&head), m)?;
                            c.spend()?;
                            let contractum = subst(c.names(), x, &payload, body);
                            c.record(&contractum);
                            (s.f)(c, &contractum)
                        }
                        _ => {
                            let op = (s.f)(&c.in_operator(&m.x), &head)?;
                            let arg = call_method(this, "arg", &c.in_argument(&op), m)?;
                            Ok(app(op, arg))
                        }
                    }
                })
            }),
            method_slot("head", |_, c: &C, x| (x.fx)(c)),
            virtual_slot("arg"),
            virtual_slot("subst_arg"),
        ],
    )
}

/// Abstractions reduce their bodies: `c_Lam` descends under the binder.
pub fn reduce_under_abstractions<C: ReductionContext>(r: ReduceTable<C>) -> ReduceTable<C> {
    r.extend(
        "reduce_under_abstractions",
        vec![c_lam(|_, c: &C, _, x, body| {
            grow(|| Ok(lam(x.clone(), (body.fx)(&c.under_binder(x))?)))
        })],
    )
    .expect("the reducer declares c_Lam")
}

/// Abstractions are values: `c_Lam` returns the subject unchanged.
pub fn dont_reduce_under_abstractions<C: ReductionContext>(r: ReduceTable<C>) -> ReduceTable<C> {
    r.extend(
        "dont_reduce_under_abstractions",
        vec![c_lam(|_, _, s, _, _| Ok(s.x.clone()))],
    )
    .expect("the reducer declares c_Lam")
}

/// Arguments of stuck applications are reduced with the full strategy.
pub fn reduce_arguments<C: ReductionContext>(r: ReduceTable<C>) -> ReduceTable<C> {
    r.extend(
        "reduce_arguments",
        vec![method_slot("arg", |_, c: &C, x| (x.fx)(c))],
    )
    .expect("the reducer declares arg")
}

/// Arguments of stuck applications are kept as they are.
pub fn dont_reduce_arguments<C: ReductionContext>(r: ReduceTable<C>) -> ReduceTable<C> {
    r.extend(
        "dont_reduce_arguments",
        vec![method_slot("arg", |_, _, x| Ok(x.x.clone()))],
    )
    .expect("the reducer declares arg")
}

/// β-steps substitute the argument as given.
pub fn non_strict<C: ReductionContext>(r: ReduceTable<C>) -> ReduceTable<C> {
    r.extend(
        "non_strict",
        vec![method_slot("subst_arg", |_, _, m| Ok(m.x.clone()))],
    )
    .expect("the reducer declares subst_arg")
}

/// β-steps reduce the argument with the full strategy before substituting.
pub fn strict<C: ReductionContext>(r: ReduceTable<C>) -> ReduceTable<C> {
    r.extend(
        "strict",
        vec![method_slot("subst_arg", |_, c: &C, m| (m.fx)(c))],
    )
    .expect("the reducer declares subst_arg")
}

/// Re-binds `head` to run a separately assembled weaker table, leaving every
/// other slot of `r` in place.
fn override_head<C: ReductionContext>(
    r: ReduceTable<C>,
    layer: &str,
    weaker: ReduceTable<C>,
) -> ReduceTable<C> {
    r.extend(
        layer,
        vec![method_slot("head", move |_, c: &C, x| {
            lam_gcata(&weaker, c, &x.x)
        })],
    )
    .expect("the reducer declares head")
}

/// Call by name: weak head normal order. No descent under binders, stuck
/// arguments stay untouched, substitution takes arguments unreduced.
pub fn call_by_name<C: ReductionContext>() -> ReduceTable<C> {
    non_strict(dont_reduce_arguments(dont_reduce_under_abstractions(
        reducer(),
    )))
}

/// Normal order: leftmost-outermost to full β-normal form. The head is
/// found by call-by-name first, so work inside the operator is deferred
/// until the spine is stable.
pub fn normal<C: ReductionContext>() -> ReduceTable<C> {
    let full = non_strict(reduce_arguments(reduce_under_abstractions(reducer())));
    override_head(full, "normal", call_by_name())
}

/// Call by value: arguments are reduced before substitution, binders are
/// never entered.
pub fn call_by_value<C: ReductionContext>() -> ReduceTable<C> {
    strict(reduce_arguments(dont_reduce_under_abstractions(reducer())))
}

/// Applicative order: call by value that also normalizes under binders.
pub fn applicative<C: ReductionContext>() -> ReduceTable<C> {
    reduce_under_abstractions(call_by_value())
}

/// Hybrid applicative order: applicative, but heads are located with plain
/// call by value so outer redexes fire before abstraction bodies are entered.
pub fn hybrid_applicative<C: ReductionContext>() -> ReduceTable<C> {
    override_head(applicative(), "hybrid_applicative", call_by_value())
}

/// Head spine order: call by name plus descent under binders; reduces to
/// head normal form.
pub fn head_spine<C: ReductionContext>() -> ReduceTable<C> {
    reduce_under_abstractions(call_by_name())
}

/// Hybrid normal order: normal order, but heads are located with head spine
/// order instead of call by name.
pub fn hybrid_normal<C: ReductionContext>() -> ReduceTable<C> {
    override_head(normal(), "hybrid_normal", head_spine())
}

/// The seven reduction orders, named as in Sestoft's survey of lambda
/// calculus reducers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Call by name (`bn`).
    CallByName,
    /// Normal order (`nor`).
    Normal,
    /// Call by value (`bv`).
    CallByValue,
    /// Applicative order (`ao`).
    Applicative,
    /// Hybrid applicative order (`ha`).
    HybridApplicative,
    /// Head spine order (`he`).
    HeadSpine,
    /// Hybrid normal order (`hn`).
    HybridNormal,
}

impl Strategy {
    pub const ALL: [Strategy; 7] = [
        Strategy::CallByName,
        Strategy::Normal,
        Strategy::CallByValue,
        Strategy::Applicative,
        Strategy::HybridApplicative,
        Strategy::HeadSpine,
        Strategy::HybridNormal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::CallByName => "bn",
            Strategy::Normal => "nor",
            Strategy::CallByValue => "bv",
            Strategy::Applicative => "ao",
            Strategy::HybridApplicative => "ha",
            Strategy::HeadSpine => "he",
            Strategy::HybridNormal => "hn",
        }
    }

    pub fn from_name(name: &str) -> Option<Strategy> {
        Strategy::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// The assembled handler table for this order.
    pub fn table<C: ReductionContext>(self) -> ReduceTable<C> {
        match self {
            Strategy::CallByName => call_by_name(),
            Strategy::Normal => normal(),
            Strategy::CallByValue => call_by_value(),
            Strategy::Applicative => applicative(),
            Strategy::HybridApplicative => hybrid_applicative(),
            Strategy::HeadSpine => head_spine(),
            Strategy::HybridNormal => hybrid_normal(),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Untraced context: a fresh-name supply and a fuel budget.
#[derive(Clone)]
pub struct SimpleCtx {
    names: Rc<RefCell<NameGen>>,
    fuel: Rc<Cell<u64>>,
}

impl SimpleCtx {
    pub fn new(names: NameGen, fuel: u64) -> SimpleCtx {
        SimpleCtx {
            names: Rc::new(RefCell::new(names)),
            fuel: Rc::new(Cell::new(fuel)),
        }
    }

    /// A context whose name supply avoids everything in `t`.
    pub fn for_term(t: &Term, fuel: u64) -> SimpleCtx {
        SimpleCtx::new(NameGen::for_term(t), fuel)
    }

    pub fn fuel_left(&self) -> u64 {
        self.fuel.get()
    }

    /// Names handed out so far, in order.
    pub fn issued_names(&self) -> Vec<String> {
        self.names.borrow().issued().to_vec()
    }
}

impl ReductionContext for SimpleCtx {
    fn names(&self) -> &Rc<RefCell<NameGen>> {
        &self.names
    }

    fn spend(&self) -> Result<(), FuelExhausted> {
        match self.fuel.get() {
            0 => Err(FuelExhausted),
            n => {
                self.fuel.set(n - 1);
                Ok(())
            }
        }
    }

    fn in_operator(&self, _arg: &Term) -> SimpleCtx {
        self.clone()
    }

    fn in_argument(&self, _op: &Term) -> SimpleCtx {
        self.clone()
    }

    fn under_binder(&self, _binder: &str) -> SimpleCtx {
        self.clone()
    }

    fn record(&self, _contractum: &Term) {}
}

/// One-hole context, as a function that plugs the hole.
pub type Hole = Rc<dyn Fn(&Term) -> Term>;

/// Traced context: the simple context plus the one-hole context of the
/// current position and a shared snapshot log. Every β-step logs the whole
/// program as it stands, i.e. the contractum plugged into the hole.
#[derive(Clone)]
pub struct TraceCtx {
    names: Rc<RefCell<NameGen>>,
    fuel: Rc<Cell<u64>>,
    hole: Hole,
    log: Rc<RefCell<Vec<Term>>>,
}

impl TraceCtx {
    pub fn new(names: NameGen, fuel: u64) -> TraceCtx {
        TraceCtx {
            names: Rc::new(RefCell::new(names)),
            fuel: Rc::new(Cell::new(fuel)),
            hole: Rc::new(|t: &Term| t.clone()),
            log: Rc::new(RefCell::new(Vec::new())),
        }
    }

    pub fn for_term(t: &Term, fuel: u64) -> TraceCtx {
        TraceCtx::new(NameGen::for_term(t), fuel)
    }

    /// The whole program with `t` sitting at the current position.
    pub fn plug(&self, t: &Term) -> Term {
        (self.hole)(t)
    }

    pub fn snapshots(&self) -> Vec<Term> {
        self.log.borrow().clone()
    }

    fn with_hole(&self, hole: Hole) -> TraceCtx {
        TraceCtx {
            names: self.names.clone(),
            fuel: self.fuel.clone(),
            hole,
            log: self.log.clone(),
        }
    }
}

impl ReductionContext for TraceCtx {
    fn names(&self) -> &Rc<RefCell<NameGen>> {
        &self.names
    }

    fn spend(&self) -> Result<(), FuelExhausted> {
        match self.fuel.get() {
            0 => Err(FuelExhausted),
            n => {
                self.fuel.set(n - 1);
                Ok(())
            }
        }
    }

    fn in_operator(&self, arg: &Term) -> TraceCtx {
        let outer = self.hole.clone();
        let arg = arg.clone();
        self.with_hole(Rc::new(move |t: &Term| outer(&app(t.clone(), arg.clone()))))
    }

    fn in_argument(&self, op: &Term) -> TraceCtx {
        let outer = self.hole.clone();
        let op = op.clone();
        self.with_hole(Rc::new(move |t: &Term| outer(&app(op.clone(), t.clone()))))
    }

    fn under_binder(&self, binder: &str) -> TraceCtx {
        let outer = self.hole.clone();
        let binder = binder.to_string();
        self.with_hole(Rc::new(move |t: &Term| outer(&lam(binder.clone(), t.clone()))))
    }

    fn record(&self, contractum: &Term) {
        let snapshot = self.plug(contractum);
        self.log.borrow_mut().push(snapshot);
    }
}

/// Reduce `t` under `strategy` with the default fuel budget.
pub fn reduce(strategy: Strategy, t: &Term) -> Result<Term, FuelExhausted> {
    reduce_with_fuel(strategy, t, DEFAULT_FUEL)
}

pub fn reduce_with_fuel(strategy: Strategy, t: &Term, fuel: u64) -> Result<Term, FuelExhausted> {
    let ctx = SimpleCtx::for_term(t, fuel);
    lam_gcata(&strategy.table::<SimpleCtx>(), &ctx, t)
}

/// Reduce `t` and log one whole-program snapshot per β-step. On success the
/// reduced term comes with the full log; on fuel exhaustion the log taken so
/// far is returned instead.
pub fn reduce_with_trace(strategy: Strategy, t: &Term) -> Result<(Term, Vec<Term>), PartialTrace> {
    reduce_with_trace_and_fuel(strategy, t, DEFAULT_FUEL)
}

pub fn reduce_with_trace_and_fuel(
    strategy: Strategy,
    t: &Term,
    fuel: u64,
) -> Result<(Term, Vec<Term>), PartialTrace> {
    let ctx = TraceCtx::for_term(t, fuel);
    match lam_gcata(&strategy.table::<TraceCtx>(), &ctx, t) {
        Ok(result) => Ok((result, ctx.snapshots())),
        Err(FuelExhausted) => Err(PartialTrace { steps: ctx.snapshots() }),
    }
}

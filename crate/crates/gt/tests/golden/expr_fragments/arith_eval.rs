use gt_runtime::Fx;

use crate::generated::arith_gen::ArithPack;

use super::eval::Value;

/// Evaluates sums and products over integer results.
///
/// The fragment never looks at the host datatype or the inherited
/// attribute: arguments arrive as pending transformations, so the same
/// implementation serves the standalone `arith` type and any sum that
/// includes it. Errors from either side short-circuit.
pub struct ArithEval;

impl<A, Inh> ArithPack<A, Value, Inh, Value> for ArithEval {
    fn c_add(&self, inh: &Inh, p1: &dyn Fx<Inh, Value>, p2: &dyn Fx<Inh, Value>) -> Value {
        Ok(p1.fx(inh)? + p2.fx(inh)?)
    }

    fn c_mul(&self, inh: &Inh, p1: &dyn Fx<Inh, Value>, p2: &dyn Fx<Inh, Value>) -> Value {
        Ok(p1.fx(inh)? * p2.fx(inh)?)
    }
}

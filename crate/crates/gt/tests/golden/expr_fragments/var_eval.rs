use crate::generated::var_gen::VarPack;

use super::eval::Env;

/// Evaluates a variable by asking the environment.
///
/// The fragment is polymorphic in the value type: it works wherever the
/// environment does, whether that yields integers, strings, or results
/// carrying an error for unbound names.
pub struct VarEval;

impl<V> VarPack<Env<V>, V> for VarEval {
    fn c_var(&self, env: &Env<V>, name: &String) -> V {
        env(name)
    }
}

use std::rc::Rc;

/// A transformation over values of one type: inherited attribute and subject
/// in, synthesized attribute out.
pub type TransFn<Inh, Val, Syn> = Rc<dyn Fn(&Inh, &Val) -> Syn>;

/// An argument as a handler sees it.
///
/// Every constructor argument a traversal passes to a handler is augmented
/// with the transformation that applies to values of the argument's type:
///
/// * `x` is the raw value,
/// * `f` transforms values of the same type,
/// * `fx` is `f` already applied to `x` (supply an inherited attribute to
///   finish),
/// * `tp` bundles the transformations for the datatype's type parameters,
///   addressed by parameter name.
///
/// The whole match subject is passed the same way, with `f` bound to the
/// traversal itself, so a handler can recurse without naming the traversal.
pub struct Aug<Inh, Val, Syn, Tp> {
    pub x: Val,
    pub f: TransFn<Inh, Val, Syn>,
    pub fx: Rc<dyn Fn(&Inh) -> Syn>,
    pub tp: Tp,
}

// Manual impl: `Syn` and `Inh` live only under `Rc`, so they need no bounds.
impl<Inh, Val: Clone, Syn, Tp: Clone> Clone for Aug<Inh, Val, Syn, Tp> {
    fn clone(&self) -> Self {
        Aug {
            x: self.x.clone(),
            f: self.f.clone(),
            fx: self.fx.clone(),
            tp: self.tp.clone(),
        }
    }
}

/// Builds an [`Aug`], deriving `fx` from `f` and `x`.
///
/// Invariant: `(aug.fx)(inh)` equals `(aug.f)(inh, &aug.x)` for every `inh`.
pub fn make_aug<Inh, Val, Syn, Tp>(x: Val, f: TransFn<Inh, Val, Syn>, tp: Tp) -> Aug<Inh, Val, Syn, Tp>
where
    Inh: 'static,
    Val: Clone + 'static,
    Syn: 'static,
{
    let fx = {
        let f = f.clone();
        let x = x.clone();
        Rc::new(move |inh: &Inh| f(inh, &x))
    };
    Aug { x, f, fx, tp }
}

/// Object-safe view of an augmented argument: the part of an [`Aug`] a
/// consumer needs when it only ever finishes the pending transformation.
///
/// Composition glue (pack adapters) passes arguments as `&dyn Fx` so fragment
/// implementations stay independent of the host datatype's parameter bundle.
pub trait Fx<Inh, Syn> {
    /// Applies the pending transformation to the carried value.
    fn fx(&self, inh: &Inh) -> Syn;
}

impl<Inh, Val, Syn, Tp> Fx<Inh, Syn> for Aug<Inh, Val, Syn, Tp> {
    fn fx(&self, inh: &Inh) -> Syn {
        (self.fx)(inh)
    }
}

use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;
use std::rc::Rc;

/// One handler-table entry.
#[derive(Clone)]
pub enum Entry<S> {
    /// Declared but deliberately left without a body. Dispatching on a
    /// virtual entry panics; an extension must supply the handler first.
    Virtual,
    /// A concrete handler.
    Defined(S),
}

/// Extension failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendError {
    /// An override named a handler the base table never declared. Extension
    /// can only redefine; it cannot grow the handler set, because the
    /// traversal's dispatch schema is fixed by the datatype.
    UnknownHandler { handler: String, base: String },
}

impl fmt::Display for ExtendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendError::UnknownHandler { handler, base } => {
                write!(f, "unknown handler `{handler}`: transformer `{base}` declares no such slot")
            }
        }
    }
}

impl Error for ExtendError {}

struct Layer<S> {
    name: String,
    entries: Vec<(String, Entry<S>)>,
}

struct Node<S> {
    layer: Layer<S>,
    parent: Option<Rc<Node<S>>>,
}

/// A named, layered handler table.
///
/// A table starts from [`Transformer::base`] and grows only through
/// [`Transformer::extend`], which pushes a new layer delegating to the old
/// table. Lookup walks layers newest first, so an extension's handler wins
/// over every older definition of the same name (and repeated extension is
/// last writer wins). Tables are immutable; clones share structure.
pub struct Transformer<S> {
    top: Rc<Node<S>>,
}

impl<S> Clone for Transformer<S> {
    fn clone(&self) -> Self {
        Transformer { top: self.top.clone() }
    }
}

impl<S> Transformer<S> {
    /// Builds a base table. Every handler the traversal will ever dispatch
    /// must be declared here, concrete or virtual.
    pub fn base(name: impl Into<String>, entries: Vec<(String, Entry<S>)>) -> Self {
        Transformer {
            top: Rc::new(Node {
                layer: Layer { name: name.into(), entries },
                parent: None,
            }),
        }
    }

    /// Pushes a delegation layer. Every override must name a handler the
    /// base already declares. An empty override list is legal and yields a
    /// table that behaves exactly like `self`.
    pub fn extend(
        &self,
        name: impl Into<String>,
        overrides: Vec<(String, Entry<S>)>,
    ) -> Result<Self, ExtendError> {
        let name = name.into();
        for (handler, _) in &overrides {
            if !self.has_handler(handler) {
                return Err(ExtendError::UnknownHandler {
                    handler: handler.clone(),
                    base: self.name().to_string(),
                });
            }
        }
        Ok(Transformer {
            top: Rc::new(Node {
                layer: Layer { name, entries: overrides },
                parent: Some(self.top.clone()),
            }),
        })
    }

    /// The table's current identity: the newest layer's name.
    pub fn name(&self) -> &str {
        &self.top.layer.name
    }

    /// Layer names, oldest first.
    pub fn layer_names(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.nodes().map(|n| n.layer.name.as_str()).collect();
        names.reverse();
        names
    }

    /// Handler names the newest layer of the given name (re)defines, in the
    /// order they were written.
    pub fn layer_handlers(&self, layer: &str) -> Option<Vec<&str>> {
        self.nodes()
            .find(|n| n.layer.name == layer)
            .map(|n| n.layer.entries.iter().map(|(k, _)| k.as_str()).collect())
    }

    /// All declared handler names, sorted.
    pub fn handler_names(&self) -> Vec<&str> {
        let set: BTreeSet<&str> = self
            .nodes()
            .flat_map(|n| n.layer.entries.iter().map(|(k, _)| k.as_str()))
            .collect();
        set.into_iter().collect()
    }

    /// Whether any layer declares the handler (virtual counts).
    pub fn has_handler(&self, handler: &str) -> bool {
        self.lookup(handler).is_some()
    }

    /// The winning entry for a handler, if declared.
    pub fn entry(&self, handler: &str) -> Option<&Entry<S>> {
        self.lookup(handler).map(|(_, e)| e)
    }

    /// The layer whose definition of the handler currently wins.
    pub fn defining_layer(&self, handler: &str) -> Option<&str> {
        self.lookup(handler).map(|(n, _)| n)
    }

    /// Whether every declared handler has a concrete winning entry.
    pub fn is_concrete(&self) -> bool {
        self.handler_names()
            .iter()
            .all(|h| matches!(self.entry(h), Some(Entry::Defined(_))))
    }

    /// Resolves a handler for dispatch.
    ///
    /// Panics if the handler was never declared (the traversal and the table
    /// disagree about the datatype) or if the winning entry is virtual (the
    /// table was dispatched before an extension made it concrete). Both are
    /// contract violations by the caller, not recoverable states.
    pub fn slot(&self, handler: &str) -> &S {
        match self.lookup(handler) {
            None => panic!(
                "no handler `{handler}` in transformer `{}` (layers: {})",
                self.name(),
                self.layer_names().join(" -> "),
            ),
            Some((layer, Entry::Virtual)) => panic!(
                "handler `{handler}` is virtual in transformer `{}` (declared by layer `{layer}`); \
                 extend with a concrete handler before dispatching",
                self.name(),
            ),
            Some((_, Entry::Defined(s))) => s,
        }
    }

    fn nodes(&self) -> impl Iterator<Item = &Node<S>> {
        // Newest first: follow delegation links.
        std::iter::successors(Some(self.top.as_ref()), |n| n.parent.as_deref())
    }

    fn lookup(&self, handler: &str) -> Option<(&str, &Entry<S>)> {
        for node in self.nodes() {
            // Within one layer the later write wins too.
            if let Some((_, e)) = node.layer.entries.iter().rev().find(|(k, _)| k == handler) {
                return Some((node.layer.name.as_str(), e));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Transformer<i32> {
        Transformer::base(
            "numbers",
            vec![
                ("one".to_string(), Entry::Defined(1)),
                ("two".to_string(), Entry::Defined(2)),
                ("later".to_string(), Entry::Virtual),
            ],
        )
    }

    #[test]
    fn lookup_walks_newest_first() {
        let t = table();
        let t2 = t.extend("shift", vec![("one".to_string(), Entry::Defined(10))]).unwrap();
        assert_eq!(*t2.slot("one"), 10);
        assert_eq!(*t2.slot("two"), 2);
        assert_eq!(*t.slot("one"), 1, "base is unchanged");
        assert_eq!(t2.defining_layer("one"), Some("shift"));
        assert_eq!(t2.defining_layer("two"), Some("numbers"));
    }

    #[test]
    fn repeated_extension_is_last_writer_wins() {
        let t = table()
            .extend("a", vec![("one".to_string(), Entry::Defined(100))])
            .unwrap()
            .extend("b", vec![("one".to_string(), Entry::Defined(200))])
            .unwrap();
        assert_eq!(*t.slot("one"), 200);
        assert_eq!(t.layer_names(), vec!["numbers", "a", "b"]);
        assert_eq!(t.name(), "b");
    }

    #[test]
    fn unknown_override_is_rejected() {
        let err = table().extend("bad", vec![("three".to_string(), Entry::Defined(3))]);
        assert_eq!(
            err.err(),
            Some(ExtendError::UnknownHandler {
                handler: "three".to_string(),
                base: "numbers".to_string(),
            })
        );
    }

    #[test]
    fn empty_extension_changes_nothing_observable() {
        let t = table();
        let t2 = t.extend("noop", vec![]).unwrap();
        for h in t.handler_names() {
            assert_eq!(t2.has_handler(h), t.has_handler(h));
            assert_eq!(
                matches!(t2.entry(h), Some(Entry::Defined(_))),
                matches!(t.entry(h), Some(Entry::Defined(_)))
            );
        }
        assert_eq!(*t2.slot("one"), 1);
    }

    #[test]
    fn virtual_entries_block_concreteness_until_provided() {
        let t = table();
        assert!(!t.is_concrete());
        let t2 = t.extend("fill", vec![("later".to_string(), Entry::Defined(3))]).unwrap();
        assert!(t2.is_concrete());
        assert_eq!(*t2.slot("later"), 3);
    }

    #[test]
    #[should_panic(expected = "is virtual")]
    fn dispatching_a_virtual_entry_panics() {
        table().slot("later");
    }

    #[test]
    #[should_panic(expected = "no handler `zero`")]
    fn dispatching_an_undeclared_handler_panics() {
        table().slot("zero");
    }

    #[test]
    fn introspection_reports_layers_and_handlers() {
        let t = table().extend("shift", vec![("two".to_string(), Entry::Defined(20))]).unwrap();
        assert_eq!(t.handler_names(), vec!["later", "one", "two"]);
        assert_eq!(t.layer_handlers("shift"), Some(vec!["two"]));
        assert_eq!(t.layer_handlers("numbers"), Some(vec!["one", "two", "later"]));
        assert_eq!(t.layer_handlers("missing"), None);
    }
}

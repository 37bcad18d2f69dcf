//! The declaration language: algebraic datatype declarations with closed
//! variants, mutual-recursion clusters, and composable open sums.
//!
//! A source unit is a sequence of clusters; `and` joins the members of one
//! cluster, a fresh `type` keyword starts the next. Open sums (`[ ... ]`)
//! list tagged constructors and inclusions of previously declared open sums.

mod analyze;
mod lex;
mod parse;
mod pretty;

pub use analyze::{resolve_open_sum, resolve_open_sum_with_origins, Origin, ResolvedSum};
pub use pretty::{decl_to_text, shape_text, unit_to_text};

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

/// One datatype declaration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDecl {
    pub name: String,
    /// Type parameter names, without the leading quote, in declaration order.
    pub params: Vec<String>,
    pub body: Body,
}

impl TypeDecl {
    /// The constructor list of a closed (or already resolved) declaration.
    pub fn ctors(&self) -> Option<&[CtorDecl]> {
        match &self.body {
            Body::Variants(cs) => Some(cs),
            Body::OpenSum(_) => None,
        }
    }

    pub fn is_open_sum(&self) -> bool {
        matches!(self.body, Body::OpenSum(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    /// A closed variant list.
    Variants(Vec<CtorDecl>),
    /// An open sum: tagged constructors and inclusions, in source order.
    OpenSum(Vec<Arm>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtorDecl {
    pub name: String,
    /// Whether the constructor was written as a tag (backtick form).
    pub is_tag: bool,
    pub args: Vec<ArgShape>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arm {
    Ctor(CtorDecl),
    Include(TypeRef),
}

/// A reference to a named type, possibly applied to argument shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeRef {
    pub name: String,
    pub args: Vec<ArgShape>,
}

/// The shape of one constructor argument. Augmentation rules key off this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArgShape {
    /// A type parameter of the enclosing declaration.
    Param(String),
    /// The declared type itself, applied to exactly its own parameters.
    SelfRef,
    /// Any other named type (primitives, same-cluster members, foreign types).
    External(TypeRef),
    /// A parenthesized product.
    Tuple(Vec<ArgShape>),
}

/// A mutual-recursion cluster: the declarations joined by `and`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cluster {
    pub decls: Vec<TypeDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    /// What the parser would have accepted at this point.
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: expected {}, found {}",
            self.line,
            self.col,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationError {
    DuplicateDecl { decl: String },
    DuplicateParam { decl: String, param: String },
    DuplicateCtor { decl: String, ctor: String },
    UnboundParam { decl: String, param: String },
    UnknownInclude { decl: String, target: String },
    IncludeNotOpenSum { decl: String, target: String },
    IncludeArity { decl: String, target: String, expected: usize, found: usize },
    IncludeCycle { path: Vec<String> },
    /// A self or same-cluster reference that does not re-bind the referenced
    /// declaration's parameters exactly.
    IrregularRecursion { decl: String, reference: String },
    /// Open-sum flattening found one constructor name with two different
    /// argument lists.
    ConflictingCtor { decl: String, ctor: String },
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationError::DuplicateDecl { decl } => {
                write!(f, "duplicate declaration `{decl}`")
            }
            ValidationError::DuplicateParam { decl, param } => {
                write!(f, "duplicate type parameter '{param} in declaration `{decl}`")
            }
            ValidationError::DuplicateCtor { decl, ctor } => {
                write!(f, "duplicate constructor `{ctor}` in declaration `{decl}`")
            }
            ValidationError::UnboundParam { decl, param } => {
                write!(f, "unbound type parameter '{param} in declaration `{decl}`")
            }
            ValidationError::UnknownInclude { decl, target } => {
                write!(f, "unknown include `{target}` in declaration `{decl}`")
            }
            ValidationError::IncludeNotOpenSum { decl, target } => {
                write!(f, "include `{target}` in declaration `{decl}` is not an open sum")
            }
            ValidationError::IncludeArity { decl, target, expected, found } => {
                write!(
                    f,
                    "include `{target}` in declaration `{decl}` takes {expected} argument(s), found {found}"
                )
            }
            ValidationError::IncludeCycle { path } => {
                write!(f, "include cycle: {}", path.join(" -> "))
            }
            ValidationError::IrregularRecursion { decl, reference } => {
                write!(
                    f,
                    "irregular recursion in declaration `{decl}`: reference to `{reference}` must repeat its declared parameters exactly"
                )
            }
            ValidationError::ConflictingCtor { decl, ctor } => {
                write!(
                    f,
                    "conflicting constructor `{ctor}` while flattening `{decl}`: same name, different arguments"
                )
            }
        }
    }
}

impl Error for ValidationError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    Parse(ParseError),
    Validation(ValidationError),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::Parse(e) => e.fmt(f),
            ModelError::Validation(e) => e.fmt(f),
        }
    }
}

impl Error for ModelError {}

impl From<ParseError> for ModelError {
    fn from(e: ParseError) -> Self {
        ModelError::Parse(e)
    }
}

impl From<ValidationError> for ModelError {
    fn from(e: ValidationError) -> Self {
        ModelError::Validation(e)
    }
}

/// Parses and validates a whole source unit.
pub fn parse_decls(src: &str) -> Result<Vec<Cluster>, ModelError> {
    let clusters = parse::parse_unit(src)?;
    analyze::analyze_unit(clusters).map_err(ModelError::from)
}

/// Parses a source unit expected to contain exactly one declaration.
///
/// Include references are validated against the same source text, so a lone
/// `type e = [ v | 'a arith ]` is an unknown-include error.
pub fn parse_type_decl(src: &str) -> Result<TypeDecl, ModelError> {
    let clusters = parse_decls(src)?;
    let mut decls: Vec<TypeDecl> = clusters.into_iter().flat_map(|c| c.decls).collect();
    match decls.len() {
        1 => Ok(decls.pop().unwrap()),
        n => Err(ModelError::Parse(ParseError {
            line: 1,
            col: 1,
            expected: vec!["exactly one declaration".to_string()],
            found: format!("{n} declarations"),
        })),
    }
}

/// Name-indexed view of every declaration in a unit.
pub fn decl_env(clusters: &[Cluster]) -> BTreeMap<String, TypeDecl> {
    clusters
        .iter()
        .flat_map(|c| c.decls.iter())
        .map(|d| (d.name.clone(), d.clone()))
        .collect()
}

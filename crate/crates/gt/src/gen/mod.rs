//! Source generation: turns validated declarations into datatype, handler
//! table, and traversal code, plus one file per requested plugin.
//!
//! The pipeline is plan, then emit. [`plan::build_plan`] flattens a
//! declaration (resolving open-sum includes), assigns every constructor
//! argument its augmentation rule, and rejects shapes no rule covers. The
//! emitters in `emit` then map the plan to Rust text; they are deterministic,
//! so regenerating over checked-in output is a no-op.

mod emit;
mod plan;
mod plugins;

pub use plan::{build_plan, ArgPlan, AugRule, CtorPlan, IncludeGlue, TraversalPlan};
pub use plugins::{Plugin, PluginHost};

use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;

use crate::model::{decl_env, Cluster, TypeDecl, ValidationError};

#[derive(Debug)]
pub enum GenError {
    Validation(ValidationError),
    /// A constructor argument no augmentation rule covers.
    UnsupportedShape { decl: String, ctor: String, shape: String },
    /// A declaration, parameter, or constructor name that would collide with
    /// emitted code.
    ReservedName { decl: String, name: String },
    /// A declared parameter no constructor mentions.
    PhantomParam { decl: String, param: String },
    UnknownPlugin { name: String },
    DuplicatePlugin { name: String },
    /// A shape the traversal accepts but the named plugin cannot handle.
    UnsupportedPluginShape { plugin: String, decl: String, ctor: String, shape: String },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::Validation(e) => write!(f, "{e}"),
            GenError::UnsupportedShape { decl, ctor, shape } => write!(
                f,
                "cannot build a traversal for `{decl}`: constructor `{ctor}` has argument \
                 shape `{shape}`, which no augmentation rule covers"
            ),
            GenError::ReservedName { decl, name } => write!(
                f,
                "declaration `{decl}` uses the name `{name}`, which would collide with \
                 generated code"
            ),
            GenError::PhantomParam { decl, param } => write!(
                f,
                "declaration `{decl}` never uses parameter '{param} in any constructor"
            ),
            GenError::UnknownPlugin { name } => write!(f, "unknown plugin `{name}`"),
            GenError::DuplicatePlugin { name } => {
                write!(f, "plugin `{name}` requested or registered twice")
            }
            GenError::UnsupportedPluginShape { plugin, decl, ctor, shape } => write!(
                f,
                "plugin `{plugin}` cannot handle `{decl}`: constructor `{ctor}` has argument \
                 shape `{shape}`"
            ),
        }
    }
}

impl Error for GenError {
    fn source(&self) -> Option<&(dyn Error + 'static)> {
        match self {
            GenError::Validation(e) => Some(e),
            _ => None,
        }
    }
}

impl From<ValidationError> for GenError {
    fn from(e: ValidationError) -> Self {
        GenError::Validation(e)
    }
}

/// Everything generated for one declaration.
pub struct GenUnit {
    pub decl: TypeDecl,
    pub plan: TraversalPlan,
    pub datatype_src: String,
    pub abstract_transformer_src: String,
    pub traversal_src: String,
    /// Plugin name paired with the plugin file's full text.
    pub plugin_srcs: Vec<(String, String)>,
}

impl GenUnit {
    pub fn main_file_name(&self) -> String {
        format!("{}_gen.rs", self.decl.name)
    }

    pub fn plugin_file_name(&self, plugin: &str) -> String {
        format!("{}_{}_gen.rs", self.decl.name, plugin)
    }

    pub fn plugin_names(&self) -> Vec<String> {
        self.plugin_srcs.iter().map(|(p, _)| p.clone()).collect()
    }

    /// The main generated file: datatype, handler-table machinery, traversal.
    pub fn main_file_text(&self) -> String {
        let mut out = emit::main_header(&self.plan);
        out.push('\n');
        out.push_str(&emit::main_imports(&self.plan));
        out.push('\n');
        out.push_str(&self.datatype_src);
        out.push('\n');
        out.push_str(&self.abstract_transformer_src);
        out.push('\n');
        out.push_str(&self.traversal_src);
        out
    }

    /// All files for this declaration as (name, text), main file first.
    pub fn files(&self) -> Vec<(String, String)> {
        let mut v = vec![(self.main_file_name(), self.main_file_text())];
        for (p, src) in &self.plugin_srcs {
            v.push((self.plugin_file_name(p), src.clone()));
        }
        v
    }
}

/// Generates code for every declaration in `clusters`, with one extra file
/// per declaration for each plugin in `plugins` (applied in the given order).
pub fn generate_module(
    clusters: &[Cluster],
    plugins: &[String],
    host: &PluginHost,
) -> Result<Vec<GenUnit>, GenError> {
    let mut seen = BTreeSet::new();
    for p in plugins {
        if !seen.insert(p.clone()) {
            return Err(GenError::DuplicatePlugin { name: p.clone() });
        }
    }
    let env = decl_env(clusters);
    let mut units = Vec::new();
    for cluster in clusters {
        let plans: Vec<TraversalPlan> = cluster
            .decls
            .iter()
            .map(|d| plan::build_plan(d, cluster, &env))
            .collect::<Result<_, _>>()?;
        for (d, p) in cluster.decls.iter().zip(&plans) {
            let mut plugin_srcs = Vec::new();
            for pname in plugins {
                let plugin = host.get(pname)?;
                let body = (plugin.emit)(p)?;
                let text = assemble_plugin_file(p, pname, &(plugin.imports)(p), &body);
                plugin_srcs.push((pname.clone(), text));
            }
            units.push(GenUnit {
                decl: d.clone(),
                plan: p.clone(),
                datatype_src: emit::emit_datatype(p),
                abstract_transformer_src: emit::emit_abstract(p),
                traversal_src: emit::emit_traversal(p, &plans),
                plugin_srcs,
            });
        }
    }
    Ok(units)
}

/// Handler-table machinery for a lone declaration (no datatype, no plugins).
pub fn gen_abstract_transformer(decl: &TypeDecl) -> Result<String, GenError> {
    let plan = lone_plan(decl)?;
    Ok(emit::emit_abstract(&plan))
}

/// Traversal function for a lone declaration.
pub fn gen_traversal(decl: &TypeDecl) -> Result<String, GenError> {
    let plan = lone_plan(decl)?;
    Ok(emit::emit_traversal(&plan, std::slice::from_ref(&plan)))
}

fn lone_plan(decl: &TypeDecl) -> Result<TraversalPlan, GenError> {
    let cluster = Cluster { decls: vec![decl.clone()] };
    let env = decl_env(std::slice::from_ref(&cluster));
    plan::build_plan(decl, &cluster, &env)
}

fn assemble_plugin_file(
    plan: &TraversalPlan,
    plugin: &str,
    imports: &[String],
    body: &str,
) -> String {
    let mut out = emit::plugin_header(plan, plugin);
    out.push('\n');
    for line in imports {
        out.push_str(line);
        out.push('\n');
    }
    out.push('\n');
    out.push_str(body);
    out
}

/// A machine-readable index of everything generated: one entry per
/// declaration listing its files and the plugins applied.
pub fn manifest(units: &[GenUnit]) -> serde_json::Value {
    serde_json::Value::Array(
        units
            .iter()
            .map(|u| {
                serde_json::json!({
                    "decl": u.decl.name,
                    "files": u.files().iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
                    "plugins": u.plugin_names(),
                })
            })
            .collect(),
    )
}

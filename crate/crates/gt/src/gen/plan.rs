use std::collections::BTreeMap;

use crate::model::{
    resolve_open_sum_with_origins, ArgShape, Arm, Body, Cluster, Origin, TypeDecl,
};

use super::GenError;

/// Rust type for a declaration-language primitive.
pub fn prim_ty(name: &str) -> Option<&'static str> {
    match name {
        "string" => Some("String"),
        "int" => Some("i64"),
        "bool" => Some("bool"),
        _ => None,
    }
}

/// `foo_bar` to `FooBar`.
pub fn camel(name: &str) -> String {
    name.split('_')
        .filter(|s| !s.is_empty())
        .map(|s| {
            let mut cs = s.chars();
            match cs.next() {
                Some(c) => c.to_ascii_uppercase().to_string() + cs.as_str(),
                None => String::new(),
            }
        })
        .collect()
}

/// `SNil` to `s_nil`.
pub fn snake(name: &str) -> String {
    let mut out = String::new();
    for (i, c) in name.chars().enumerate() {
        if c.is_ascii_uppercase() {
            if i > 0 {
                out.push('_');
            }
            out.push(c.to_ascii_lowercase());
        } else {
            out.push(c);
        }
    }
    out
}

fn decap(s: &str) -> String {
    let mut cs = s.chars();
    match cs.next() {
        Some(c) => c.to_ascii_lowercase().to_string() + cs.as_str(),
        None => String::new(),
    }
}

/// Generic name for a parameter's transformed view: 'a becomes `Ta`.
pub fn t_generic(p: &str) -> String {
    format!("T{}", decap(&camel(p)))
}

/// Which augmentation a traversal applies to one constructor argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AugRule {
    /// Parameter-typed: wrapped with that parameter's transformation.
    Param(String),
    /// Self-typed: wrapped with the traversal itself.
    SelfRec,
    /// Same-cluster member: wrapped with that member's co-traversal.
    Co(String),
    /// Anything else: passed through untouched.
    Raw,
}

#[derive(Debug, Clone)]
pub struct ArgPlan {
    pub shape: ArgShape,
    pub rule: AugRule,
}

#[derive(Debug, Clone)]
pub struct CtorPlan {
    pub name: String,
    pub is_tag: bool,
    pub args: Vec<ArgPlan>,
    pub origin: Origin,
}

/// An include whose binding is parameter-for-parameter, which is the case
/// where a fragment adapter can be emitted.
#[derive(Debug, Clone)]
pub struct IncludeGlue {
    pub target: String,
    /// Host parameter bound to each target parameter, in target order.
    pub bound_params: Vec<String>,
}

/// Everything emission needs to know about one declaration: the flattened
/// constructor list with each argument's augmentation rule, the cluster the
/// declaration lives in, and the emittable fragment adapters.
#[derive(Debug, Clone)]
pub struct TraversalPlan {
    pub decl: TypeDecl,
    pub ctors: Vec<CtorPlan>,
    /// Names of every cluster member, in declaration order (length 1 when
    /// the declaration stands alone).
    pub cluster: Vec<String>,
    /// Other cluster members this declaration's arguments reference.
    pub co_types: Vec<String>,
    /// Parameters of every cluster member, for instantiating co types.
    pub member_params: BTreeMap<String, Vec<String>>,
    pub includes: Vec<IncludeGlue>,
}

pub fn build_plan(
    decl: &TypeDecl,
    cluster: &Cluster,
    env: &BTreeMap<String, TypeDecl>,
) -> Result<TraversalPlan, GenError> {
    check_names(decl)?;
    let resolved = resolve_open_sum_with_origins(decl, env).map_err(GenError::Validation)?;
    let members: Vec<String> = cluster.decls.iter().map(|d| d.name.clone()).collect();

    let mut ctors = Vec::new();
    for (c, origin) in resolved.ctors().iter().zip(&resolved.origins) {
        let mut args = Vec::new();
        for shape in &c.args {
            args.push(ArgPlan {
                shape: shape.clone(),
                rule: classify(shape, decl, &members, &c.name)?,
            });
        }
        ctors.push(CtorPlan {
            name: c.name.clone(),
            is_tag: c.is_tag,
            args,
            origin: origin.clone(),
        });
    }

    // The datatype enum cannot declare a parameter no constructor mentions.
    for p in &decl.params {
        let used = ctors
            .iter()
            .flat_map(|c| &c.args)
            .any(|a| shape_mentions_param(&a.shape, p));
        if !used {
            return Err(GenError::PhantomParam { decl: decl.name.clone(), param: p.clone() });
        }
    }

    let co_types: Vec<String> = members
        .iter()
        .filter(|m| **m != decl.name)
        .filter(|m| {
            ctors
                .iter()
                .flat_map(|c| &c.args)
                .any(|a| matches!(&a.rule, AugRule::Co(n) if n == *m))
        })
        .cloned()
        .collect();

    let member_params: BTreeMap<String, Vec<String>> =
        cluster.decls.iter().map(|d| (d.name.clone(), d.params.clone())).collect();

    let includes = collect_include_glue(decl, env);

    let plan = TraversalPlan {
        decl: decl.clone(),
        ctors,
        cluster: members,
        co_types,
        member_params,
        includes,
    };

    // Every generic name and argument alias the emitted items declare must
    // be distinct.
    let mut seen = BTreeMap::new();
    for g in plan.slot_generics() {
        if seen.insert(g.clone(), ()).is_some() {
            return Err(GenError::ReservedName { decl: decl.name.clone(), name: g });
        }
    }
    let mut aliases = BTreeMap::new();
    for name in decl.params.iter().map(|p| plan.arg_alias(p)).chain(
        plan.co_types.iter().map(|c| plan.co_arg_alias(c)),
    ) {
        if aliases.insert(name.clone(), ()).is_some() {
            return Err(GenError::ReservedName { decl: decl.name.clone(), name });
        }
    }
    Ok(plan)
}

fn classify(
    shape: &ArgShape,
    decl: &TypeDecl,
    members: &[String],
    ctor: &str,
) -> Result<AugRule, GenError> {
    match shape {
        ArgShape::Param(p) => Ok(AugRule::Param(p.clone())),
        ArgShape::SelfRef => Ok(AugRule::SelfRec),
        ArgShape::External(r) => {
            if r.name != decl.name && members.contains(&r.name) {
                Ok(AugRule::Co(r.name.clone()))
            } else if r.args.is_empty() && prim_ty(&r.name).is_some() {
                Ok(AugRule::Raw)
            } else {
                Err(unsupported(decl, ctor, shape))
            }
        }
        ArgShape::Tuple(items) => {
            for it in items {
                tuple_element_ok(it, decl, members, ctor)?;
            }
            Ok(AugRule::Raw)
        }
    }
}

fn tuple_element_ok(
    shape: &ArgShape,
    decl: &TypeDecl,
    members: &[String],
    ctor: &str,
) -> Result<(), GenError> {
    match shape {
        ArgShape::Param(_) | ArgShape::SelfRef => Ok(()),
        ArgShape::External(r) => {
            if (r.name != decl.name && members.contains(&r.name))
                || (r.args.is_empty() && prim_ty(&r.name).is_some())
            {
                Ok(())
            } else {
                Err(unsupported(decl, ctor, shape))
            }
        }
        ArgShape::Tuple(items) => {
            for it in items {
                tuple_element_ok(it, decl, members, ctor)?;
            }
            Ok(())
        }
    }
}

fn unsupported(decl: &TypeDecl, ctor: &str, shape: &ArgShape) -> GenError {
    GenError::UnsupportedShape {
        decl: decl.name.clone(),
        ctor: ctor.to_string(),
        shape: crate::model::shape_text(shape, decl),
    }
}

fn shape_mentions_param(shape: &ArgShape, p: &str) -> bool {
    match shape {
        ArgShape::Param(q) => q == p,
        ArgShape::SelfRef => false,
        ArgShape::External(r) => r.args.iter().any(|s| shape_mentions_param(s, p)),
        ArgShape::Tuple(items) => items.iter().any(|s| shape_mentions_param(s, p)),
    }
}

fn collect_include_glue(decl: &TypeDecl, env: &BTreeMap<String, TypeDecl>) -> Vec<IncludeGlue> {
    let arms = match &decl.body {
        Body::OpenSum(arms) => arms,
        Body::Variants(_) => return Vec::new(),
    };
    let mut out: Vec<IncludeGlue> = Vec::new();
    for arm in arms {
        let r = match arm {
            Arm::Include(r) => r,
            Arm::Ctor(_) => continue,
        };
        if out.iter().any(|g| g.target == r.name) {
            continue;
        }
        // Adapters are emitted only for parameter-for-parameter bindings of
        // targets that are plain open sums themselves: anything fancier still
        // flattens, it just has no per-fragment adapter.
        let bound: Option<Vec<String>> = r
            .args
            .iter()
            .map(|s| match s {
                ArgShape::Param(p) => Some(p.clone()),
                _ => None,
            })
            .collect();
        let target_simple = env
            .get(&r.name)
            .map(|t| t.is_open_sum())
            .unwrap_or(false);
        if let (Some(bound_params), true) = (bound, target_simple) {
            out.push(IncludeGlue { target: r.name.clone(), bound_params });
        }
    }
    out
}

const RESERVED_TYPE_NAMES: &[&str] = &[
    "Aug", "Box", "Clone", "Copy", "Debug", "Drop", "Entry", "Eq", "Fn", "FnMut", "FnOnce",
    "Fx", "Inh", "Option", "Ord", "PartialEq", "PartialOrd", "PhantomData", "Rc", "Result",
    "Send", "Str", "String", "Syn", "Sync", "TransFn", "Transformer", "Vec",
];

/// Words that cannot appear as bare identifiers in emitted code (parameters
/// become struct fields; declaration names become module and function stems).
const RUST_KEYWORDS: &[&str] = &[
    "as", "async", "await", "become", "box", "break", "const", "continue", "crate", "do",
    "dyn", "else", "enum", "extern", "false", "final", "fn", "for", "if", "impl", "in",
    "let", "loop", "macro", "match", "mod", "move", "mut", "override", "priv", "pub",
    "ref", "return", "self", "static", "struct", "super", "trait", "true", "try", "type",
    "typeof", "unsafe", "unsized", "use", "virtual", "where", "while", "yield",
];

fn rust_lower_ident_ok(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_lowercase())
        && cs.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

fn rust_upper_ident_ok(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_uppercase())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn check_names(decl: &TypeDecl) -> Result<(), GenError> {
    let reserved = |name: &str| GenError::ReservedName {
        decl: decl.name.clone(),
        name: name.to_string(),
    };
    if !rust_lower_ident_ok(&decl.name)
        || RESERVED_TYPE_NAMES.contains(&camel(&decl.name).as_str())
        || RUST_KEYWORDS.contains(&decl.name.as_str())
    {
        return Err(reserved(&decl.name));
    }
    for p in &decl.params {
        if !rust_lower_ident_ok(p)
            || RESERVED_TYPE_NAMES.contains(&camel(p).as_str())
            || RUST_KEYWORDS.contains(&p.as_str())
        {
            return Err(reserved(p));
        }
    }
    let ctor_names: Vec<&String> = match &decl.body {
        Body::Variants(cs) => cs.iter().map(|c| &c.name).collect(),
        Body::OpenSum(arms) => arms
            .iter()
            .filter_map(|a| match a {
                Arm::Ctor(c) => Some(&c.name),
                Arm::Include(_) => None,
            })
            .collect(),
    };
    for c in ctor_names {
        if !rust_upper_ident_ok(c) {
            return Err(reserved(c));
        }
    }
    Ok(())
}

impl TraversalPlan {
    pub fn enum_name(&self) -> String {
        camel(&self.decl.name)
    }

    /// The datatype applied to its value generics: `T<A, B>`.
    pub fn self_ty(&self) -> String {
        format!("{}{}", self.enum_name(), angled(&self.value_generics()))
    }

    pub fn value_generics(&self) -> Vec<String> {
        self.decl.params.iter().map(|p| camel(p)).collect()
    }

    /// `[A, Ta, B, Tb]`: value and transformed generics interleaved.
    pub fn inter_generics(&self) -> Vec<String> {
        self.decl
            .params
            .iter()
            .flat_map(|p| [camel(p), t_generic(p)])
            .collect()
    }

    pub fn co_syn(&self, co: &str) -> String {
        format!("{}Syn", camel(co))
    }

    pub fn co_syns(&self) -> Vec<String> {
        self.co_types.iter().map(|c| self.co_syn(c)).collect()
    }

    /// Generics of the slot enum and transformer alias, in order.
    pub fn slot_generics(&self) -> Vec<String> {
        let mut g = self.inter_generics();
        g.extend(self.co_syns());
        g.push("Inh".to_string());
        g.push("Syn".to_string());
        g
    }

    pub fn tpo_generics(&self) -> Vec<String> {
        if self.decl.params.is_empty() {
            return Vec::new();
        }
        let mut g = self.inter_generics();
        g.push("Inh".to_string());
        g
    }

    pub fn aug_generics(&self) -> Vec<String> {
        let mut g = self.inter_generics();
        g.push("Inh".to_string());
        g.push("Syn".to_string());
        g
    }

    pub fn arg_alias_generics(&self) -> Vec<String> {
        let mut g = self.inter_generics();
        g.push("Inh".to_string());
        g
    }

    pub fn co_arg_alias_generics(&self, co: &str) -> Vec<String> {
        let mut g = self.inter_generics();
        g.push(self.co_syn(co));
        g.push("Inh".to_string());
        g
    }

    pub fn tpo_name(&self) -> String {
        format!("{}Tpo", self.enum_name())
    }

    pub fn aug_alias(&self) -> String {
        format!("{}Aug", self.enum_name())
    }

    pub fn arg_alias(&self, p: &str) -> String {
        format!("{}Arg{}", self.enum_name(), camel(p))
    }

    pub fn co_arg_alias(&self, co: &str) -> String {
        format!("{}Arg{}", self.enum_name(), camel(co))
    }

    pub fn slot_name(&self) -> String {
        format!("{}Slot", self.enum_name())
    }

    pub fn trans_alias(&self) -> String {
        format!("{}Transformer", self.enum_name())
    }

    pub fn pack_name(&self) -> String {
        format!("{}Pack", self.enum_name())
    }

    pub fn gcata_name(&self) -> String {
        format!("{}_gcata", self.decl.name)
    }

    pub fn rec_name(member: &str) -> String {
        format!("{member}_rec")
    }

    pub fn variant_name(&self, ctor: &str) -> String {
        format!("C{ctor}")
    }

    pub fn builder_name(&self, ctor: &str) -> String {
        format!("c_{}", snake(ctor))
    }

    pub fn handler_key(&self, ctor: &str) -> String {
        format!("c_{ctor}")
    }

    /// A same-cluster member applied to its generics: `Pforest<A>`.
    pub fn co_ty(&self, co: &str) -> String {
        let params = &self.member_params[co];
        let gs: Vec<String> = params.iter().map(|p| camel(p)).collect();
        format!("{}{}", camel(co), angled(&gs))
    }

    /// Rust type of an argument passed raw.
    pub fn rust_ty(&self, shape: &ArgShape) -> String {
        match shape {
            ArgShape::Param(p) => camel(p),
            ArgShape::SelfRef => format!("Rc<{}>", self.self_ty()),
            ArgShape::External(r) => {
                if r.name != self.decl.name && self.cluster.contains(&r.name) {
                    format!("Rc<{}>", self.co_ty(&r.name))
                } else {
                    prim_ty(&r.name)
                        .expect("classification admits only primitives here")
                        .to_string()
                }
            }
            ArgShape::Tuple(items) => format!(
                "({})",
                items.iter().map(|s| self.rust_ty(s)).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}

/// `<A, B>`, or empty for no generics.
pub fn angled(gs: &[String]) -> String {
    if gs.is_empty() {
        String::new()
    } else {
        format!("<{}>", gs.join(", "))
    }
}

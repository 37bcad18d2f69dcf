//! Plugin registry plus the built-in `show`, `foldl`, and `map` emitters.
//! A plugin contributes one extra generated file per declaration; it sees the
//! finished plan and nothing else, so third-party plugins are just values.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::rc::Rc;

use crate::model::ArgShape;

use super::plan::{angled, camel, prim_ty, AugRule, CtorPlan, TraversalPlan};
use super::GenError;

#[derive(Clone)]
pub struct Plugin {
    pub name: String,
    /// Import lines for the plugin's file, already in final order; an empty
    /// string is a blank line.
    pub imports: Rc<dyn Fn(&TraversalPlan) -> Vec<String>>,
    /// The file's body: one or more item definitions, newline-terminated.
    pub emit: Rc<dyn Fn(&TraversalPlan) -> Result<String, GenError>>,
}

pub struct PluginHost {
    plugins: BTreeMap<String, Plugin>,
}

impl PluginHost {
    pub fn empty() -> Self {
        PluginHost { plugins: BTreeMap::new() }
    }

    /// The registry with `show`, `foldl`, and `map` preloaded.
    pub fn builtin() -> Self {
        let mut h = Self::empty();
        h.register(show_plugin()).expect("empty registry");
        h.register(foldl_plugin()).expect("empty registry");
        h.register(map_plugin()).expect("empty registry");
        h
    }

    pub fn register(&mut self, plugin: Plugin) -> Result<(), GenError> {
        if self.plugins.contains_key(&plugin.name) {
            return Err(GenError::DuplicatePlugin { name: plugin.name });
        }
        self.plugins.insert(plugin.name.clone(), plugin);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&Plugin, GenError> {
        self.plugins
            .get(name)
            .ok_or_else(|| GenError::UnknownPlugin { name: name.to_string() })
    }

    pub fn names(&self) -> Vec<String> {
        self.plugins.keys().cloned().collect()
    }
}

fn glob_import(plan: &TraversalPlan) -> String {
    format!("use super::{}_gen::*;", plan.decl.name)
}

/// Leaves a plugin can consume without a traversal: primitives, possibly
/// nested in tuples.
fn prim_leaf(shape: &ArgShape) -> bool {
    match shape {
        ArgShape::External(r) => r.args.is_empty() && prim_ty(&r.name).is_some(),
        ArgShape::Tuple(items) => items.iter().all(prim_leaf),
        ArgShape::Param(_) | ArgShape::SelfRef => false,
    }
}

fn check_raw(
    plugin: &str,
    plan: &TraversalPlan,
    ctor: &str,
    shape: &ArgShape,
) -> Result<(), GenError> {
    let ok = match shape {
        ArgShape::Tuple(items) => items.iter().all(prim_leaf),
        _ => true,
    };
    if ok {
        Ok(())
    } else {
        Err(GenError::UnsupportedPluginShape {
            plugin: plugin.to_string(),
            decl: plan.decl.name.clone(),
            ctor: ctor.to_string(),
            shape: crate::model::shape_text(shape, &plan.decl),
        })
    }
}

fn closure_params(c: &CtorPlan) -> Vec<String> {
    (1..=c.args.len()).map(|i| format!("p{i}")).collect()
}

/// Writes `sig {` or `sig\nwhere ...\n{` depending on whether there are
/// bounds to declare.
fn fn_open(s: &mut String, sig: &str, bounds: &[String]) {
    if bounds.is_empty() {
        writeln!(s, "{sig} {{").unwrap();
    } else {
        writeln!(s, "{sig}").unwrap();
        writeln!(s, "where").unwrap();
        for b in bounds {
            writeln!(s, "    {b},").unwrap();
        }
        writeln!(s, "{{").unwrap();
    }
}

pub fn show_plugin() -> Plugin {
    Plugin {
        name: "show".to_string(),
        imports: Rc::new(|plan| vec![glob_import(plan)]),
        emit: Rc::new(emit_show),
    }
}

fn emit_show(plan: &TraversalPlan) -> Result<String, GenError> {
    let d = &plan.decl.name;
    let generics = plan.value_generics();
    let mut type_args: Vec<String> = Vec::new();
    for p in &plan.decl.params {
        type_args.push(camel(p));
        type_args.push("String".to_string());
    }
    for _ in &plan.co_types {
        type_args.push("String".to_string());
    }
    type_args.push("()".to_string());
    type_args.push("String".to_string());

    let mut s = String::new();
    writeln!(s, "/// Renders a `{d}` as constructor-applied text.").unwrap();
    let sig = format!(
        "pub fn show_{}{}() -> {}{}",
        d,
        angled(&generics),
        plan.trans_alias(),
        angled(&type_args)
    );
    let bounds: Vec<String> = generics.iter().map(|g| format!("{g}: 'static")).collect();
    fn_open(&mut s, &sig, &bounds);
    writeln!(s, "    {}::base(", plan.trans_alias()).unwrap();
    writeln!(s, "        \"show_{d}\",").unwrap();
    writeln!(s, "        vec![").unwrap();
    for c in &plan.ctors {
        writeln!(s, "            {},", show_arm(plan, c)?).unwrap();
    }
    writeln!(s, "        ],").unwrap();
    writeln!(s, "    )").unwrap();
    writeln!(s, "}}").unwrap();
    Ok(s)
}

fn show_arm(plan: &TraversalPlan, c: &CtorPlan) -> Result<String, GenError> {
    let b = plan.builder_name(&c.name);
    if c.args.is_empty() {
        return Ok(format!("{}(|_, _, _| \"{}\".to_string())", b, c.name));
    }
    let mut exprs = Vec::new();
    let mut uses_inh = false;
    for (i, a) in c.args.iter().enumerate() {
        let pv = format!("p{}", i + 1);
        match &a.rule {
            AugRule::Param(_) | AugRule::SelfRec | AugRule::Co(_) => {
                uses_inh = true;
                exprs.push(format!("({pv}.fx)(inh)"));
            }
            AugRule::Raw => {
                check_raw("show", plan, &c.name, &a.shape)?;
                exprs.push(show_raw_expr(&pv, &a.shape));
            }
        }
    }
    let holes = vec!["{}"; exprs.len()].join(", ");
    let inh_pat = if uses_inh { "inh" } else { "_" };
    Ok(format!(
        "{}(|_, {}, _, {}| format!(\"{} ({})\", {}))",
        b,
        inh_pat,
        closure_params(c).join(", "),
        c.name,
        holes,
        exprs.join(", ")
    ))
}

fn show_raw_expr(path: &str, shape: &ArgShape) -> String {
    match shape {
        ArgShape::Tuple(items) => {
            let holes = vec!["{}"; items.len()].join(", ");
            let parts: Vec<String> = items
                .iter()
                .enumerate()
                .map(|(i, it)| show_raw_expr(&format!("{path}.{i}"), it))
                .collect();
            format!("format!(\"({})\", {})", holes, parts.join(", "))
        }
        _ => path.to_string(),
    }
}

pub fn foldl_plugin() -> Plugin {
    Plugin {
        name: "foldl".to_string(),
        imports: Rc::new(|plan| vec![glob_import(plan)]),
        emit: Rc::new(emit_foldl),
    }
}

fn emit_foldl(plan: &TraversalPlan) -> Result<String, GenError> {
    let d = &plan.decl.name;
    let mut generics = plan.value_generics();
    generics.push("Acc".to_string());
    let mut type_args: Vec<String> = Vec::new();
    for p in &plan.decl.params {
        type_args.push(camel(p));
        type_args.push("Acc".to_string());
    }
    for _ in &plan.co_types {
        type_args.push("Acc".to_string());
    }
    type_args.push("Acc".to_string());
    type_args.push("Acc".to_string());

    let mut s = String::new();
    writeln!(s, "/// Threads an accumulator left to right through every parameter and").unwrap();
    writeln!(s, "/// recursive position.").unwrap();
    let sig = format!(
        "pub fn foldl_{}{}() -> {}{}",
        d,
        angled(&generics),
        plan.trans_alias(),
        angled(&type_args)
    );
    let mut bounds: Vec<String> =
        plan.value_generics().iter().map(|g| format!("{g}: 'static")).collect();
    bounds.push("Acc: Clone + 'static".to_string());
    fn_open(&mut s, &sig, &bounds);
    writeln!(s, "    {}::base(", plan.trans_alias()).unwrap();
    writeln!(s, "        \"foldl_{d}\",").unwrap();
    writeln!(s, "        vec![").unwrap();
    for c in &plan.ctors {
        writeln!(s, "            {},", foldl_arm(plan, c)?).unwrap();
    }
    writeln!(s, "        ],").unwrap();
    writeln!(s, "    )").unwrap();
    writeln!(s, "}}").unwrap();
    Ok(s)
}

fn foldl_arm(plan: &TraversalPlan, c: &CtorPlan) -> Result<String, GenError> {
    let b = plan.builder_name(&c.name);
    let mut aug_ix: Vec<usize> = Vec::new();
    for (i, a) in c.args.iter().enumerate() {
        match &a.rule {
            AugRule::Raw => check_raw("foldl", plan, &c.name, &a.shape)?,
            _ => aug_ix.push(i + 1),
        }
    }
    let pats: Vec<String> = (1..=c.args.len())
        .map(|i| if aug_ix.contains(&i) { format!("p{i}") } else { "_".to_string() })
        .collect();
    // The annotation keeps the closure checkable before the surrounding
    // builder's generics are pinned down.
    let head = if c.args.is_empty() {
        "|_, acc: &Acc, _|".to_string()
    } else {
        format!("|_, acc: &Acc, _, {}|", pats.join(", "))
    };
    match aug_ix.len() {
        0 => Ok(format!("{b}({head} acc.clone())")),
        1 => Ok(format!("{b}({head} (p{}.fx)(acc))", aug_ix[0])),
        _ => {
            let mut s = format!("{b}({head} {{\n");
            let (last, init) = aug_ix.split_last().expect("two or more folded arguments");
            for (k, i) in init.iter().enumerate() {
                let src = if k == 0 { "acc" } else { "&acc" };
                writeln!(s, "                let acc = (p{i}.fx)({src});").unwrap();
            }
            writeln!(s, "                (p{last}.fx)(&acc)").unwrap();
            s.push_str("            })");
            Ok(s)
        }
    }
}

pub fn map_plugin() -> Plugin {
    Plugin {
        name: "map".to_string(),
        imports: Rc::new(|plan| {
            let mut v = Vec::new();
            let needs_rc = plan
                .ctors
                .iter()
                .flat_map(|c| &c.args)
                .any(|a| matches!(a.rule, AugRule::SelfRec | AugRule::Co(_)));
            if needs_rc {
                v.push("use std::rc::Rc;".to_string());
                v.push(String::new());
            }
            v.push(glob_import(plan));
            for co in &plan.co_types {
                v.push(format!("use super::{}_gen::{};", co, camel(co)));
            }
            v
        }),
        emit: Rc::new(emit_map),
    }
}

fn out_name(p: &str) -> String {
    format!("{}Out", camel(p))
}

fn emit_map(plan: &TraversalPlan) -> Result<String, GenError> {
    let d = &plan.decl.name;
    let e = plan.enum_name();
    let outs: Vec<String> = plan.decl.params.iter().map(|p| out_name(p)).collect();
    let syn = format!("{e}{}", angled(&outs));
    let mut generics: Vec<String> = Vec::new();
    for p in &plan.decl.params {
        generics.push(camel(p));
        generics.push(out_name(p));
    }
    let mut type_args: Vec<String> = Vec::new();
    for p in &plan.decl.params {
        type_args.push(camel(p));
        type_args.push(out_name(p));
    }
    for co in &plan.co_types {
        let co_outs: Vec<String> =
            plan.member_params[co].iter().map(|q| out_name(q)).collect();
        type_args.push(format!("{}{}", camel(co), angled(&co_outs)));
    }
    type_args.push("()".to_string());
    type_args.push(syn);

    let mut s = String::new();
    writeln!(s, "/// Rebuilds a `{d}`, transforming every parameter position.").unwrap();
    let sig = format!(
        "pub fn map_{}{}() -> {}{}",
        d,
        angled(&generics),
        plan.trans_alias(),
        angled(&type_args)
    );
    let bounds: Vec<String> = generics.iter().map(|g| format!("{g}: 'static")).collect();
    fn_open(&mut s, &sig, &bounds);
    writeln!(s, "    {}::base(", plan.trans_alias()).unwrap();
    writeln!(s, "        \"map_{d}\",").unwrap();
    writeln!(s, "        vec![").unwrap();
    for c in &plan.ctors {
        writeln!(s, "            {},", map_arm(plan, c)?).unwrap();
    }
    writeln!(s, "        ],").unwrap();
    writeln!(s, "    )").unwrap();
    writeln!(s, "}}").unwrap();
    Ok(s)
}

fn map_arm(plan: &TraversalPlan, c: &CtorPlan) -> Result<String, GenError> {
    let b = plan.builder_name(&c.name);
    let e = plan.enum_name();
    if c.args.is_empty() {
        return Ok(format!("{}(|_, _, _| {}::{})", b, e, c.name));
    }
    let mut exprs = Vec::new();
    let mut uses_inh = false;
    let mut uses_subj = false;
    for (i, a) in c.args.iter().enumerate() {
        let pv = format!("p{}", i + 1);
        match &a.rule {
            AugRule::Param(p) => {
                uses_inh = true;
                uses_subj = true;
                exprs.push(format!("(s.tp.{p})(inh, &{pv}.x)"));
            }
            AugRule::SelfRec | AugRule::Co(_) => {
                uses_inh = true;
                exprs.push(format!("Rc::new(({pv}.fx)(inh))"));
            }
            AugRule::Raw => {
                check_raw("map", plan, &c.name, &a.shape)?;
                exprs.push(format!("{pv}.clone()"));
            }
        }
    }
    let inh_pat = if uses_inh { "inh" } else { "_" };
    let subj_pat = if uses_subj { "s" } else { "_" };
    Ok(format!(
        "{}(|_, {}, {}, {}| {}::{}({}))",
        b,
        inh_pat,
        subj_pat,
        closure_params(c).join(", "),
        e,
        c.name,
        exprs.join(", ")
    ))
}

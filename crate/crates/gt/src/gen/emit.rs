//! Text emission. Every function here is a pure map from a plan to Rust
//! source; determinism is part of the contract (same plan, same bytes).

use std::fmt::Write as _;

use crate::model::Origin;

use super::plan::{angled, camel, t_generic, ArgPlan, AugRule, CtorPlan, TraversalPlan};

pub fn main_header(plan: &TraversalPlan) -> String {
    format!(
        "// Generated by `gt gen` from declaration `{}`. Do not edit by hand.\n",
        plan.decl.name
    )
}

pub fn plugin_header(plan: &TraversalPlan, plugin: &str) -> String {
    format!(
        "// Generated by `gt gen`: plugin `{}` for declaration `{}`. Do not edit by hand.\n",
        plugin, plan.decl.name
    )
}

pub fn main_imports(plan: &TraversalPlan) -> String {
    let mut s = String::new();
    s.push_str("use std::rc::Rc;\n\n");
    let mut names = vec!["Aug", "Entry"];
    if pack_uses_fx(plan) {
        names.push("Fx");
    }
    names.push("TransFn");
    names.push("Transformer");
    names.push("make_aug");
    writeln!(s, "use gt_runtime::{{{}}};", names.join(", ")).unwrap();
    if plan.cluster.len() > 1 {
        for k in plan.cluster.iter().filter(|k| **k != plan.decl.name) {
            writeln!(
                s,
                "\nuse super::{}_gen::{{{}, {}Transformer}};",
                k,
                camel(k),
                camel(k)
            )
            .unwrap();
        }
    }
    s
}

fn pack_uses_fx(plan: &TraversalPlan) -> bool {
    plan.decl.is_open_sum()
        && plan
            .ctors
            .iter()
            .flat_map(|c| &c.args)
            .any(|a| !matches!(a.rule, AugRule::Raw))
}

fn trans_inst(plan: &TraversalPlan) -> String {
    format!("{}{}", plan.trans_alias(), angled(&plan.slot_generics()))
}

fn slot_inst(plan: &TraversalPlan) -> String {
    format!("{}{}", plan.slot_name(), angled(&plan.slot_generics()))
}

fn aug_inst(plan: &TraversalPlan) -> String {
    format!("{}{}", plan.aug_alias(), angled(&plan.aug_generics()))
}

fn tpo_inst(plan: &TraversalPlan) -> String {
    format!("{}{}", plan.tpo_name(), angled(&plan.tpo_generics()))
}

/// The handler argument type for one planned argument, with leading `&`.
fn arg_ty(plan: &TraversalPlan, a: &ArgPlan) -> String {
    match &a.rule {
        AugRule::Param(p) => format!(
            "&{}{}",
            plan.arg_alias(p),
            angled(&plan.arg_alias_generics())
        ),
        AugRule::SelfRec => format!("&{}", aug_inst(plan)),
        AugRule::Co(c) => format!(
            "&{}{}",
            plan.co_arg_alias(c),
            angled(&plan.co_arg_alias_generics(c))
        ),
        AugRule::Raw => format!("&{}", plan.rust_ty(&a.shape)),
    }
}

/// `Fn(&Trans, &Inh, &Aug, args...) -> Syn` for one constructor.
fn handler_fn_ty(plan: &TraversalPlan, c: &CtorPlan) -> String {
    let mut parts = vec![
        format!("&{}", trans_inst(plan)),
        "&Inh".to_string(),
        format!("&{}", aug_inst(plan)),
    ];
    parts.extend(c.args.iter().map(|a| arg_ty(plan, a)));
    format!("Fn({}) -> Syn", parts.join(", "))
}

fn where_static(generics: &[String], clone_value: bool, value_generics: &[String]) -> String {
    if generics.is_empty() {
        return String::new();
    }
    let items: Vec<String> = generics
        .iter()
        .map(|g| {
            if clone_value && value_generics.contains(g) {
                format!("{g}: Clone + 'static")
            } else {
                format!("{g}: 'static")
            }
        })
        .collect();
    let mut s = String::from("where\n");
    for it in items {
        s.push_str("    ");
        s.push_str(&it);
        s.push_str(",\n");
    }
    s
}

pub fn emit_datatype(plan: &TraversalPlan) -> String {
    let mut s = String::new();
    writeln!(s, "/// The `{}` datatype.", plan.decl.name).unwrap();
    writeln!(s, "#[derive(Clone, Debug, PartialEq, Eq)]").unwrap();
    writeln!(s, "pub enum {} {{", plan.self_ty()).unwrap();
    for c in &plan.ctors {
        if c.args.is_empty() {
            writeln!(s, "    {},", c.name).unwrap();
        } else {
            let tys: Vec<String> = c.args.iter().map(|a| plan.rust_ty(&a.shape)).collect();
            writeln!(s, "    {}({}),", c.name, tys.join(", ")).unwrap();
        }
    }
    writeln!(s, "}}").unwrap();
    s
}

pub fn emit_abstract(plan: &TraversalPlan) -> String {
    let mut s = String::new();
    emit_tpo(plan, &mut s);
    s.push('\n');
    emit_aliases(plan, &mut s);
    s.push('\n');
    emit_slot_enum(plan, &mut s);
    s.push('\n');
    emit_builders(plan, &mut s);
    if plan.decl.is_open_sum() {
        s.push('\n');
        emit_pack(plan, &mut s);
    }
    s
}

fn emit_tpo(plan: &TraversalPlan, s: &mut String) {
    let tpo = plan.tpo_name();
    if plan.decl.params.is_empty() {
        writeln!(s, "/// Per-parameter transformations; `{}` has none.", plan.decl.name).unwrap();
        writeln!(s, "#[derive(Clone)]").unwrap();
        writeln!(s, "pub struct {tpo};").unwrap();
        return;
    }
    let g = angled(&plan.tpo_generics());
    writeln!(s, "/// Per-parameter transformations, addressed by parameter name.").unwrap();
    writeln!(s, "pub struct {tpo}{g} {{").unwrap();
    for p in &plan.decl.params {
        writeln!(s, "    pub {}: TransFn<Inh, {}, {}>,", p, camel(p), t_generic(p)).unwrap();
    }
    writeln!(s, "}}").unwrap();
    s.push('\n');
    writeln!(s, "impl{g} Clone for {tpo}{g} {{").unwrap();
    writeln!(s, "    fn clone(&self) -> Self {{").unwrap();
    writeln!(s, "        {tpo} {{").unwrap();
    for p in &plan.decl.params {
        writeln!(s, "            {p}: self.{p}.clone(),").unwrap();
    }
    writeln!(s, "        }}").unwrap();
    writeln!(s, "    }}").unwrap();
    writeln!(s, "}}").unwrap();
}

fn emit_aliases(plan: &TraversalPlan, s: &mut String) {
    writeln!(s, "/// The whole-subject augmented argument.").unwrap();
    writeln!(
        s,
        "pub type {}{} = Aug<Inh, {}, Syn, {}>;",
        plan.aug_alias(),
        angled(&plan.aug_generics()),
        plan.self_ty(),
        tpo_inst(plan)
    )
    .unwrap();
    for p in &plan.decl.params {
        writeln!(s, "/// A `'{p}`-typed argument.").unwrap();
        writeln!(
            s,
            "pub type {}{} = Aug<Inh, {}, {}, {}>;",
            plan.arg_alias(p),
            angled(&plan.arg_alias_generics()),
            camel(p),
            t_generic(p),
            tpo_inst(plan)
        )
        .unwrap();
    }
    for co in &plan.co_types {
        writeln!(s, "/// A `{co}`-typed argument.").unwrap();
        writeln!(
            s,
            "pub type {}{} = Aug<Inh, {}, {}, {}>;",
            plan.co_arg_alias(co),
            angled(&plan.co_arg_alias_generics(co)),
            plan.co_ty(co),
            plan.co_syn(co),
            tpo_inst(plan)
        )
        .unwrap();
    }
}

fn emit_slot_enum(plan: &TraversalPlan, s: &mut String) {
    let slot = plan.slot_name();
    let g = angled(&plan.slot_generics());
    writeln!(s, "/// Handler-table slots for `{}`: one shape per constructor plus", plan.decl.name)
        .unwrap();
    writeln!(s, "/// named auxiliary methods.").unwrap();
    writeln!(s, "pub enum {slot}{g} {{").unwrap();
    for c in &plan.ctors {
        writeln!(s, "    {}(Rc<dyn {}>),", plan.variant_name(&c.name), handler_fn_ty(plan, c))
            .unwrap();
    }
    writeln!(
        s,
        "    Method(Rc<dyn Fn(&{}, &Inh, &{}) -> Syn>),",
        trans_inst(plan),
        aug_inst(plan)
    )
    .unwrap();
    writeln!(s, "}}").unwrap();
    s.push('\n');
    writeln!(s, "impl{g} Clone for {slot}{g} {{").unwrap();
    writeln!(s, "    fn clone(&self) -> Self {{").unwrap();
    writeln!(s, "        match self {{").unwrap();
    for c in &plan.ctors {
        let v = plan.variant_name(&c.name);
        writeln!(s, "            Self::{v}(h) => Self::{v}(h.clone()),").unwrap();
    }
    writeln!(s, "            Self::Method(h) => Self::Method(h.clone()),").unwrap();
    writeln!(s, "        }}").unwrap();
    writeln!(s, "    }}").unwrap();
    writeln!(s, "}}").unwrap();
    s.push('\n');
    writeln!(s, "/// A handler table over `{}`.", plan.decl.name).unwrap();
    writeln!(s, "pub type {}{g} = Transformer<{}>;", plan.trans_alias(), slot_inst(plan)).unwrap();
}

fn emit_builders(plan: &TraversalPlan, s: &mut String) {
    let g = plan.slot_generics();
    let gl = angled(&g);
    let wh = where_static(&g, false, &[]);
    for c in &plan.ctors {
        writeln!(s, "/// Entry builder for `{}`.", c.name).unwrap();
        writeln!(s, "pub fn {}{}(", plan.builder_name(&c.name), gl).unwrap();
        writeln!(s, "    h: impl {} + 'static,", handler_fn_ty(plan, c)).unwrap();
        writeln!(s, ") -> (String, Entry<{}>)", slot_inst(plan)).unwrap();
        s.push_str(&wh);
        writeln!(s, "{{").unwrap();
        writeln!(
            s,
            "    (\"{}\".to_string(), Entry::Defined({}::{}(Rc::new(h))))",
            plan.handler_key(&c.name),
            plan.slot_name(),
            plan.variant_name(&c.name)
        )
        .unwrap();
        writeln!(s, "}}").unwrap();
        s.push('\n');
    }
    writeln!(s, "/// Entry builder for a named auxiliary method.").unwrap();
    writeln!(s, "pub fn method_slot{gl}(").unwrap();
    writeln!(s, "    name: &str,").unwrap();
    writeln!(
        s,
        "    h: impl Fn(&{}, &Inh, &{}) -> Syn + 'static,",
        trans_inst(plan),
        aug_inst(plan)
    )
    .unwrap();
    writeln!(s, ") -> (String, Entry<{}>)", slot_inst(plan)).unwrap();
    s.push_str(&wh);
    writeln!(s, "{{").unwrap();
    writeln!(
        s,
        "    (name.to_string(), Entry::Defined({}::Method(Rc::new(h))))",
        plan.slot_name()
    )
    .unwrap();
    writeln!(s, "}}").unwrap();
    s.push('\n');
    writeln!(s, "/// Declares a handler without a body; dispatch panics until an extension").unwrap();
    writeln!(s, "/// provides one.").unwrap();
    writeln!(s, "pub fn virtual_slot{gl}(name: &str) -> (String, Entry<{}>) {{", slot_inst(plan))
        .unwrap();
    writeln!(s, "    (name.to_string(), Entry::Virtual)").unwrap();
    writeln!(s, "}}").unwrap();
    s.push('\n');
    writeln!(s, "/// Dispatches a named method through the table, keeping the call late bound.").unwrap();
    writeln!(s, "pub fn call_method{gl}(").unwrap();
    writeln!(s, "    trans: &{},", trans_inst(plan)).unwrap();
    writeln!(s, "    name: &str,").unwrap();
    writeln!(s, "    inh: &Inh,").unwrap();
    writeln!(s, "    arg: &{},", aug_inst(plan)).unwrap();
    writeln!(s, ") -> Syn {{").unwrap();
    writeln!(s, "    match trans.slot(name) {{").unwrap();
    writeln!(s, "        {}::Method(h) => h(trans, inh, arg),", plan.slot_name()).unwrap();
    writeln!(
        s,
        "        _ => panic!(\"slot `{{name}}` in transformer `{{}}` is not a method\", trans.name()),"
    )
    .unwrap();
    writeln!(s, "    }}").unwrap();
    writeln!(s, "}}").unwrap();
}

/// Pack-method argument type: the minimal view a fragment needs.
fn pack_arg_ty(plan: &TraversalPlan, a: &ArgPlan) -> String {
    match &a.rule {
        AugRule::Param(p) => format!("&dyn Fx<Inh, {}>", t_generic(p)),
        AugRule::SelfRec => "&dyn Fx<Inh, Syn>".to_string(),
        AugRule::Co(c) => format!("&dyn Fx<Inh, {}>", plan.co_syn(c)),
        AugRule::Raw => format!("&{}", plan.rust_ty(&a.shape)),
    }
}

fn emit_pack(plan: &TraversalPlan, s: &mut String) {
    let g = plan.slot_generics();
    let gl = angled(&g);
    writeln!(s, "/// Fragment interface: one method per constructor with the minimal").unwrap();
    writeln!(s, "/// argument view, so implementations stay independent of whichever sum").unwrap();
    writeln!(s, "/// hosts them.").unwrap();
    writeln!(s, "pub trait {}{gl} {{", plan.pack_name()).unwrap();
    for c in &plan.ctors {
        let mut parts = vec!["&self".to_string(), "inh: &Inh".to_string()];
        for (i, a) in c.args.iter().enumerate() {
            parts.push(format!("p{}: {}", i + 1, pack_arg_ty(plan, a)));
        }
        writeln!(s, "    fn {}({}) -> Syn;", plan.builder_name(&c.name), parts.join(", ")).unwrap();
    }
    writeln!(s, "}}").unwrap();
    s.push('\n');

    let mut wh = String::from("where\n");
    wh.push_str(&format!("    P: {}{gl} + 'static,\n", plan.pack_name()));
    for x in &g {
        wh.push_str(&format!("    {x}: 'static,\n"));
    }

    let mut pack_generics = g.clone();
    pack_generics.push("P".to_string());
    writeln!(s, "/// Builds the sum's full entry list from one pack.").unwrap();
    writeln!(
        s,
        "pub fn from_pack{}(pack: P) -> Vec<(String, Entry<{}>)>",
        angled(&pack_generics),
        slot_inst(plan)
    )
    .unwrap();
    s.push_str(&wh);
    writeln!(s, "{{").unwrap();
    writeln!(s, "    let pack = Rc::new(pack);").unwrap();
    writeln!(s, "    vec![").unwrap();
    for c in &plan.ctors {
        emit_pack_adapter(plan, c, s);
    }
    writeln!(s, "    ]").unwrap();
    writeln!(s, "}}").unwrap();

    for glue in &plan.includes {
        s.push('\n');
        // The target pack's generics, instantiated at the binding the include
        // chose: target parameter i was bound to host parameter
        // `bound_params[i]`.
        let mut mapped: Vec<String> = glue
            .bound_params
            .iter()
            .flat_map(|p| [camel(p), t_generic(p)])
            .collect();
        mapped.push("Inh".to_string());
        mapped.push("Syn".to_string());
        let mut wh = String::from("where\n");
        wh.push_str(&format!(
            "    P: super::{}_gen::{}Pack{} + 'static,\n",
            glue.target,
            camel(&glue.target),
            angled(&mapped)
        ));
        for x in &g {
            wh.push_str(&format!("    {x}: 'static,\n"));
        }
        writeln!(s, "/// Adapts a `{}` fragment into this sum's table.", glue.target).unwrap();
        writeln!(
            s,
            "pub fn include_{}{}(pack: P) -> Vec<(String, Entry<{}>)>",
            glue.target,
            angled(&pack_generics),
            slot_inst(plan)
        )
        .unwrap();
        s.push_str(&wh);
        writeln!(s, "{{").unwrap();
        writeln!(s, "    let pack = Rc::new(pack);").unwrap();
        writeln!(s, "    vec![").unwrap();
        for c in &plan.ctors {
            if matches!(&c.origin, Origin::From(t) if t == &glue.target) {
                emit_pack_adapter(plan, c, s);
            }
        }
        writeln!(s, "    ]").unwrap();
        writeln!(s, "}}").unwrap();
    }
}

fn emit_pack_adapter(plan: &TraversalPlan, c: &CtorPlan, s: &mut String) {
    let ps: Vec<String> = (1..=c.args.len()).map(|i| format!("p{i}")).collect();
    let closure_args = if ps.is_empty() {
        "|_, inh, _|".to_string()
    } else {
        format!("|_, inh, _, {}|", ps.join(", "))
    };
    let call_args = if ps.is_empty() {
        "inh".to_string()
    } else {
        format!("inh, {}", ps.join(", "))
    };
    writeln!(s, "        {{").unwrap();
    writeln!(s, "            let pack = pack.clone();").unwrap();
    writeln!(
        s,
        "            {}(move {} pack.{}({}))",
        plan.builder_name(&c.name),
        closure_args,
        plan.builder_name(&c.name),
        call_args
    )
    .unwrap();
    writeln!(s, "        }},").unwrap();
}

pub fn emit_traversal(plan: &TraversalPlan, cluster_plans: &[TraversalPlan]) -> String {
    let mut s = String::new();
    emit_gcata(plan, &mut s);
    if plan.cluster.len() > 1 {
        s.push('\n');
        emit_knot(plan, cluster_plans, &mut s);
    }
    s
}

fn emit_gcata(plan: &TraversalPlan, s: &mut String) {
    let d = &plan.decl.name;
    let g = plan.slot_generics();
    writeln!(s, "/// Traverses one `{d}` node: augments the subject and every argument,").unwrap();
    writeln!(s, "/// then dispatches the constructor's handler from `trans`.").unwrap();
    writeln!(s, "pub fn {}{}(", plan.gcata_name(), angled(&g)).unwrap();
    for p in &plan.decl.params {
        writeln!(s, "    f{}: TransFn<Inh, {}, {}>,", p, camel(p), t_generic(p)).unwrap();
    }
    for co in &plan.co_types {
        writeln!(s, "    co_{}: TransFn<Inh, {}, {}>,", co, plan.co_ty(co), plan.co_syn(co))
            .unwrap();
    }
    writeln!(s, "    trans: &{},", trans_inst(plan)).unwrap();
    writeln!(s, "    inh: &Inh,").unwrap();
    writeln!(s, "    subj: &{},", plan.self_ty()).unwrap();
    writeln!(s, ") -> Syn").unwrap();
    s.push_str(&where_static(&g, true, &plan.value_generics()));
    writeln!(s, "{{").unwrap();

    // The traversal itself, capturable by handlers through the subject's f.
    writeln!(s, "    let self_f: TransFn<Inh, {}, Syn> = {{", plan.self_ty()).unwrap();
    for p in &plan.decl.params {
        writeln!(s, "        let f{p} = f{p}.clone();").unwrap();
    }
    for co in &plan.co_types {
        writeln!(s, "        let co_{co} = co_{co}.clone();").unwrap();
    }
    writeln!(s, "        let trans = trans.clone();").unwrap();
    let mut rec_args: Vec<String> = plan.decl.params.iter().map(|p| format!("f{p}.clone()")).collect();
    rec_args.extend(plan.co_types.iter().map(|co| format!("co_{co}.clone()")));
    rec_args.push("&trans".to_string());
    writeln!(
        s,
        "        Rc::new(move |i, s| {}({}, i, s))",
        plan.gcata_name(),
        rec_args.join(", ")
    )
    .unwrap();
    writeln!(s, "    }};").unwrap();

    if plan.decl.params.is_empty() {
        writeln!(s, "    let tpo = {};", plan.tpo_name()).unwrap();
    } else {
        let fields: Vec<String> =
            plan.decl.params.iter().map(|p| format!("{p}: f{p}.clone()")).collect();
        writeln!(s, "    let tpo = {} {{ {} }};", plan.tpo_name(), fields.join(", ")).unwrap();
    }
    writeln!(s, "    let subj_arg = make_aug(subj.clone(), self_f.clone(), tpo.clone());").unwrap();
    writeln!(s, "    match subj {{").unwrap();
    for c in &plan.ctors {
        emit_gcata_arm(plan, c, s);
    }
    writeln!(s, "    }}").unwrap();
    writeln!(s, "}}").unwrap();
}

fn emit_gcata_arm(plan: &TraversalPlan, c: &CtorPlan, s: &mut String) {
    let e = plan.enum_name();
    let slot = plan.slot_name();
    let v = plan.variant_name(&c.name);
    let key = plan.handler_key(&c.name);
    let pat = if c.args.is_empty() {
        format!("{}::{}", e, c.name)
    } else {
        let ps: Vec<String> = (1..=c.args.len()).map(|i| format!("p{i}")).collect();
        format!("{}::{}({})", e, c.name, ps.join(", "))
    };
    writeln!(s, "        {pat} => match trans.slot(\"{key}\") {{").unwrap();
    if c.args.is_empty() {
        writeln!(s, "            {slot}::{v}(h) => h(trans, inh, &subj_arg),").unwrap();
    } else {
        writeln!(s, "            {slot}::{v}(h) => h(").unwrap();
        writeln!(s, "                trans,").unwrap();
        writeln!(s, "                inh,").unwrap();
        writeln!(s, "                &subj_arg,").unwrap();
        for (i, a) in c.args.iter().enumerate() {
            let pv = format!("p{}", i + 1);
            let expr = match &a.rule {
                AugRule::Param(p) => {
                    format!("&make_aug({pv}.clone(), f{p}.clone(), tpo.clone())")
                }
                AugRule::SelfRec => {
                    format!("&make_aug({pv}.as_ref().clone(), self_f.clone(), tpo.clone())")
                }
                AugRule::Co(co) => {
                    format!("&make_aug({pv}.as_ref().clone(), co_{co}.clone(), tpo.clone())")
                }
                AugRule::Raw => pv,
            };
            writeln!(s, "                {expr},").unwrap();
        }
        writeln!(s, "            ),").unwrap();
    }
    writeln!(
        s,
        "            _ => panic!(\"slot `{key}` in transformer `{{}}` has the wrong shape\", trans.name()),"
    )
    .unwrap();
    writeln!(s, "        }},").unwrap();
}

/// Knot-level syn name for a member, from the host's point of view.
fn knot_syn(host: &str, member: &str) -> String {
    if member == host {
        "Syn".to_string()
    } else {
        format!("{}Syn", camel(member))
    }
}

/// A member's transformer alias instantiated with knot-level syn names.
fn knot_trans_inst(host: &str, member: &TraversalPlan) -> String {
    let mut g = member.inter_generics();
    g.extend(member.co_types.iter().map(|c| knot_syn(host, c)));
    g.push("Inh".to_string());
    g.push(knot_syn(host, &member.decl.name));
    format!("{}Transformer{}", camel(&member.decl.name), angled(&g))
}

fn knot_generics(host: &TraversalPlan, cluster_plans: &[TraversalPlan]) -> Vec<String> {
    let mut g: Vec<String> = Vec::new();
    for m in cluster_plans {
        for x in m.inter_generics() {
            if !g.contains(&x) {
                g.push(x);
            }
        }
    }
    for m in cluster_plans {
        if m.decl.name != host.decl.name {
            g.push(knot_syn(&host.decl.name, &m.decl.name));
        }
    }
    g.push("Inh".to_string());
    g.push("Syn".to_string());
    g
}

fn emit_knot(plan: &TraversalPlan, cluster_plans: &[TraversalPlan], s: &mut String) {
    let host = &plan.decl.name;
    let g = knot_generics(plan, cluster_plans);
    let value_gs: Vec<String> = cluster_plans
        .iter()
        .flat_map(|m| m.value_generics())
        .collect();
    // Other members' arguments sit unused when this member never references
    // them; the underscore keeps the signature uniform across the cluster.
    let unused_other = plan.co_types.is_empty();
    let arg_prefix = |m: &str| {
        if m != host && unused_other {
            "_"
        } else {
            ""
        }
    };

    writeln!(
        s,
        "/// Ties the `{}` cluster: every member's table traverses together.",
        plan.cluster.join("`/`")
    )
    .unwrap();
    writeln!(s, "pub fn {}{}(", TraversalPlan::rec_name(host), angled(&g)).unwrap();
    for m in cluster_plans {
        let mn = &m.decl.name;
        for p in &m.decl.params {
            writeln!(
                s,
                "    {}{}_f{}: TransFn<Inh, {}, {}>,",
                arg_prefix(mn),
                mn,
                p,
                camel(p),
                t_generic(p)
            )
            .unwrap();
        }
        writeln!(
            s,
            "    {}{}_trans: &{},",
            arg_prefix(mn),
            mn,
            knot_trans_inst(host, m)
        )
        .unwrap();
    }
    writeln!(s, "    inh: &Inh,").unwrap();
    writeln!(s, "    subj: &{},", plan.self_ty()).unwrap();
    writeln!(s, ") -> Syn").unwrap();
    s.push_str(&where_static(&g, true, &value_gs));
    writeln!(s, "{{").unwrap();

    for co in &plan.co_types {
        let co_plan = cluster_plans
            .iter()
            .find(|m| &m.decl.name == co)
            .expect("co-reference targets live in the same cluster");
        writeln!(
            s,
            "    let co_{}: TransFn<Inh, {}, {}> = {{",
            co,
            plan.co_ty(co),
            plan.co_syn(co)
        )
        .unwrap();
        for m in cluster_plans {
            let mn = &m.decl.name;
            for p in &m.decl.params {
                writeln!(s, "        let {mn}_f{p} = {mn}_f{p}.clone();").unwrap();
            }
            writeln!(s, "        let {mn}_trans = {mn}_trans.clone();").unwrap();
        }
        let mut call_args: Vec<String> = Vec::new();
        for m in cluster_plans {
            let mn = &m.decl.name;
            for p in &m.decl.params {
                call_args.push(format!("{mn}_f{p}.clone()"));
            }
            call_args.push(format!("&{mn}_trans"));
        }
        call_args.push("i".to_string());
        call_args.push("s".to_string());
        writeln!(
            s,
            "        Rc::new(move |i, s| super::{}_gen::{}({}))",
            co_plan.decl.name,
            TraversalPlan::rec_name(co),
            call_args.join(", ")
        )
        .unwrap();
        writeln!(s, "    }};").unwrap();
    }

    let mut gcata_args: Vec<String> =
        plan.decl.params.iter().map(|p| format!("{host}_f{p}")).collect();
    gcata_args.extend(plan.co_types.iter().map(|co| format!("co_{co}")));
    gcata_args.push(format!("{host}_trans"));
    gcata_args.push("inh".to_string());
    gcata_args.push("subj".to_string());
    writeln!(s, "    {}({})", plan.gcata_name(), gcata_args.join(", ")).unwrap();
    writeln!(s, "}}").unwrap();
}

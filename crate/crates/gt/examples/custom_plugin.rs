//! A third-party code generator plugin. Plugins are plain values: a name,
//! an import list, and an emit function from the traversal plan to source
//! text. Registering one puts it on equal footing with the built-ins.

use std::fmt::Write as _;
use std::rc::Rc;

use gt::gen::{generate_module, Plugin, PluginHost, TraversalPlan};
use gt::model::parse_decls;

/// Emits a constant listing the declaration's constructor names. Small, but
/// it exercises the whole plugin surface: it reads the plan, produces a
/// file body, and gets a `{decl}_{plugin}_gen.rs` file of its own.
fn ctors_plugin() -> Plugin {
    Plugin {
        name: "ctors".to_string(),
        imports: Rc::new(|_| Vec::new()),
        emit: Rc::new(|plan: &TraversalPlan| {
            let mut s = String::new();
            writeln!(s, "/// Constructor names of `{}`, in declaration order.", plan.decl.name)
                .unwrap();
            let names: Vec<String> =
                plan.ctors.iter().map(|c| format!("\"{}\"", c.name)).collect();
            writeln!(
                s,
                "pub const {}_CTORS: &[&str] = &[{}];",
                plan.decl.name.to_uppercase(),
                names.join(", ")
            )
            .unwrap();
            Ok(s)
        }),
    }
}

fn main() {
    let mut host = PluginHost::builtin();
    host.register(ctors_plugin()).expect("name is free");
    println!("registered plugins: {:?}", host.names());

    // Same name twice is refused; plugin names are a flat namespace.
    let err = host.register(ctors_plugin()).unwrap_err();
    println!("re-registration is refused: {err}");

    let clusters = parse_decls("type shape = Dot | Line of shape * shape | Label of string * shape")
        .expect("well formed");
    let with = vec!["show".to_string(), "ctors".to_string()];
    let units = generate_module(&clusters, &with, &host).expect("generates");

    let unit = &units[0];
    println!(
        "files for `{}`: {:?}",
        unit.decl.name,
        unit.files().iter().map(|(n, _)| n.clone()).collect::<Vec<_>>()
    );

    let (name, text) = unit
        .files()
        .into_iter()
        .find(|(n, _)| n == &unit.plugin_file_name("ctors"))
        .expect("the plugin contributed a file");
    println!("--- {name} ---");
    print!("{text}");

    assert!(text.contains("pub const SHAPE_CTORS: &[&str] = &[\"Dot\", \"Line\", \"Label\"];"));
}

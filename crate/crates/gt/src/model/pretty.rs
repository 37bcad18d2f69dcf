use super::{Arm, ArgShape, Body, Cluster, CtorDecl, TypeDecl, TypeRef};

/// Renders a unit back to declaration syntax, one cluster per line.
pub fn unit_to_text(clusters: &[Cluster]) -> String {
    clusters
        .iter()
        .map(|c| {
            c.decls
                .iter()
                .map(|d| decl_to_text(d))
                .collect::<Vec<_>>()
                .join(" and ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn decl_to_text(d: &TypeDecl) -> String {
    let params = match d.params.len() {
        0 => String::new(),
        1 => format!("'{} ", d.params[0]),
        _ => format!(
            "({}) ",
            d.params.iter().map(|p| format!("'{p}")).collect::<Vec<_>>().join(", ")
        ),
    };
    let body = match &d.body {
        Body::Variants(cs) => cs.iter().map(|c| ctor_to_text(c, d)).collect::<Vec<_>>().join(" | "),
        Body::OpenSum(arms) => format!(
            "[ {} ]",
            arms.iter()
                .map(|a| match a {
                    Arm::Ctor(c) => ctor_to_text(c, d),
                    Arm::Include(r) => type_ref_to_text(r, d),
                })
                .collect::<Vec<_>>()
                .join(" | ")
        ),
    };
    format!("type {}{} = {}", params, d.name, body)
}

fn ctor_to_text(c: &CtorDecl, d: &TypeDecl) -> String {
    let head = if c.is_tag { format!("`{}", c.name) } else { c.name.clone() };
    if c.args.is_empty() {
        head
    } else {
        format!(
            "{} of {}",
            head,
            c.args.iter().map(|s| shape_to_text(s, d)).collect::<Vec<_>>().join(" * ")
        )
    }
}

/// Renders one argument shape in declaration syntax, for diagnostics.
pub fn shape_text(s: &ArgShape, d: &TypeDecl) -> String {
    shape_to_text(s, d)
}

fn shape_to_text(s: &ArgShape, d: &TypeDecl) -> String {
    match s {
        ArgShape::Param(p) => format!("'{p}"),
        ArgShape::SelfRef => type_ref_to_text(
            &TypeRef {
                name: d.name.clone(),
                args: d.params.iter().map(|p| ArgShape::Param(p.clone())).collect(),
            },
            d,
        ),
        ArgShape::External(r) => type_ref_to_text(r, d),
        ArgShape::Tuple(items) => format!(
            "({})",
            items.iter().map(|x| shape_to_text(x, d)).collect::<Vec<_>>().join(" * ")
        ),
    }
}

fn type_ref_to_text(r: &TypeRef, d: &TypeDecl) -> String {
    match r.args.len() {
        0 => r.name.clone(),
        1 => {
            let arg = &r.args[0];
            let text = shape_to_text(arg, d);
            // A single simple argument goes bare; anything structured needs
            // parentheses to parse back as one argument.
            match arg {
                ArgShape::Param(_) => format!("{} {}", text, r.name),
                ArgShape::External(inner) if inner.args.is_empty() => {
                    format!("{} {}", text, r.name)
                }
                _ => format!("({}) {}", text, r.name),
            }
        }
        _ => format!(
            "({}) {}",
            r.args.iter().map(|x| shape_to_text(x, d)).collect::<Vec<_>>().join(", "),
            r.name
        ),
    }
}

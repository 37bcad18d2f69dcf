use std::collections::{BTreeMap, BTreeSet};

use super::{Arm, ArgShape, Body, Cluster, CtorDecl, TypeDecl, TypeRef, ValidationError};

/// Validates a parsed unit and rewrites self-references to [`ArgShape::SelfRef`].
///
/// Checks, in source order per declaration: distinct declaration names,
/// distinct parameters, distinct constructor names, bound parameters, known
/// and well-formed includes, acyclic includes, and regularity (a reference to
/// the declaration itself or to a same-cluster member must repeat the
/// referenced declaration's parameter list exactly).
pub fn analyze_unit(clusters: Vec<Cluster>) -> Result<Vec<Cluster>, ValidationError> {
    let mut seen = BTreeSet::new();
    for d in clusters.iter().flat_map(|c| c.decls.iter()) {
        if !seen.insert(d.name.clone()) {
            return Err(ValidationError::DuplicateDecl { decl: d.name.clone() });
        }
    }

    let env: BTreeMap<String, TypeDecl> = clusters
        .iter()
        .flat_map(|c| c.decls.iter())
        .map(|d| (d.name.clone(), d.clone()))
        .collect();

    let mut out = Vec::with_capacity(clusters.len());
    for cluster in &clusters {
        let members: BTreeSet<&str> = cluster.decls.iter().map(|d| d.name.as_str()).collect();
        let mut decls = Vec::with_capacity(cluster.decls.len());
        for d in &cluster.decls {
            decls.push(validate_decl(d, &members, &env)?);
        }
        out.push(Cluster { decls });
    }

    check_include_cycles(&env)?;
    Ok(out)
}

fn validate_decl(
    d: &TypeDecl,
    cluster: &BTreeSet<&str>,
    env: &BTreeMap<String, TypeDecl>,
) -> Result<TypeDecl, ValidationError> {
    let mut params = BTreeSet::new();
    for p in &d.params {
        if !params.insert(p.as_str()) {
            return Err(ValidationError::DuplicateParam { decl: d.name.clone(), param: p.clone() });
        }
    }

    let ctor_names: Vec<&str> = match &d.body {
        Body::Variants(cs) => cs.iter().map(|c| c.name.as_str()).collect(),
        Body::OpenSum(arms) => arms
            .iter()
            .filter_map(|a| match a {
                Arm::Ctor(c) => Some(c.name.as_str()),
                Arm::Include(_) => None,
            })
            .collect(),
    };
    let mut seen_ctors = BTreeSet::new();
    for n in ctor_names {
        if !seen_ctors.insert(n) {
            return Err(ValidationError::DuplicateCtor { decl: d.name.clone(), ctor: n.to_string() });
        }
    }

    let cx = ShapeCx { decl: d, cluster, env };
    let body = match &d.body {
        Body::Variants(cs) => Body::Variants(
            cs.iter().map(|c| cx.check_ctor(c)).collect::<Result<_, _>>()?,
        ),
        Body::OpenSum(arms) => {
            let mut out = Vec::with_capacity(arms.len());
            for arm in arms {
                out.push(match arm {
                    Arm::Ctor(c) => Arm::Ctor(cx.check_ctor(c)?),
                    Arm::Include(r) => Arm::Include(cx.check_include(r)?),
                });
            }
            Body::OpenSum(out)
        }
    };

    Ok(TypeDecl { name: d.name.clone(), params: d.params.clone(), body })
}

struct ShapeCx<'a> {
    decl: &'a TypeDecl,
    cluster: &'a BTreeSet<&'a str>,
    env: &'a BTreeMap<String, TypeDecl>,
}

impl ShapeCx<'_> {
    fn check_ctor(&self, c: &CtorDecl) -> Result<CtorDecl, ValidationError> {
        Ok(CtorDecl {
            name: c.name.clone(),
            is_tag: c.is_tag,
            args: c.args.iter().map(|s| self.check_shape(s)).collect::<Result<_, _>>()?,
        })
    }

    fn check_include(&self, r: &TypeRef) -> Result<TypeRef, ValidationError> {
        let target = self.env.get(&r.name).ok_or_else(|| ValidationError::UnknownInclude {
            decl: self.decl.name.clone(),
            target: r.name.clone(),
        })?;
        if !target.is_open_sum() {
            return Err(ValidationError::IncludeNotOpenSum {
                decl: self.decl.name.clone(),
                target: r.name.clone(),
            });
        }
        if r.args.len() != target.params.len() {
            return Err(ValidationError::IncludeArity {
                decl: self.decl.name.clone(),
                target: r.name.clone(),
                expected: target.params.len(),
                found: r.args.len(),
            });
        }
        Ok(TypeRef {
            name: r.name.clone(),
            args: r.args.iter().map(|s| self.check_shape(s)).collect::<Result<_, _>>()?,
        })
    }

    fn check_shape(&self, s: &ArgShape) -> Result<ArgShape, ValidationError> {
        match s {
            ArgShape::Param(p) => {
                if self.decl.params.iter().any(|q| q == p) {
                    Ok(ArgShape::Param(p.clone()))
                } else {
                    Err(ValidationError::UnboundParam {
                        decl: self.decl.name.clone(),
                        param: p.clone(),
                    })
                }
            }
            ArgShape::SelfRef => Ok(ArgShape::SelfRef),
            ArgShape::External(r) => {
                if r.name == self.decl.name {
                    // Regular recursion: the declaration applied to exactly
                    // its own parameters, in order.
                    if shapes_are_params(&r.args, &self.decl.params) {
                        Ok(ArgShape::SelfRef)
                    } else {
                        Err(ValidationError::IrregularRecursion {
                            decl: self.decl.name.clone(),
                            reference: r.name.clone(),
                        })
                    }
                } else if self.cluster.contains(r.name.as_str()) {
                    let target = &self.env[&r.name];
                    if !shapes_are_params(&r.args, &target.params) {
                        return Err(ValidationError::IrregularRecursion {
                            decl: self.decl.name.clone(),
                            reference: r.name.clone(),
                        });
                    }
                    // The co-member's parameters must be bound here too.
                    let args = r.args.iter().map(|s| self.check_shape(s)).collect::<Result<_, _>>()?;
                    Ok(ArgShape::External(TypeRef { name: r.name.clone(), args }))
                } else {
                    let args = r.args.iter().map(|s| self.check_shape(s)).collect::<Result<_, _>>()?;
                    Ok(ArgShape::External(TypeRef { name: r.name.clone(), args }))
                }
            }
            ArgShape::Tuple(items) => Ok(ArgShape::Tuple(
                items.iter().map(|s| self.check_shape(s)).collect::<Result<_, _>>()?,
            )),
        }
    }
}

fn shapes_are_params(args: &[ArgShape], params: &[String]) -> bool {
    args.len() == params.len()
        && args
            .iter()
            .zip(params)
            .all(|(a, p)| matches!(a, ArgShape::Param(q) if q == p))
}

fn check_include_cycles(env: &BTreeMap<String, TypeDecl>) -> Result<(), ValidationError> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Grey,
        Black,
    }
    fn dfs(
        name: &str,
        env: &BTreeMap<String, TypeDecl>,
        colors: &mut BTreeMap<String, Color>,
        stack: &mut Vec<String>,
    ) -> Result<(), ValidationError> {
        match colors.get(name).copied().unwrap_or(Color::White) {
            Color::Black => return Ok(()),
            Color::Grey => {
                let start = stack.iter().position(|n| n == name).unwrap_or(0);
                let mut path: Vec<String> = stack[start..].to_vec();
                path.push(name.to_string());
                return Err(ValidationError::IncludeCycle { path });
            }
            Color::White => {}
        }
        colors.insert(name.to_string(), Color::Grey);
        stack.push(name.to_string());
        if let Some(Body::OpenSum(arms)) = env.get(name).map(|d| &d.body) {
            for arm in arms {
                if let Arm::Include(r) = arm {
                    if env.contains_key(&r.name) {
                        dfs(&r.name, env, colors, stack)?;
                    }
                }
            }
        }
        stack.pop();
        colors.insert(name.to_string(), Color::Black);
        Ok(())
    }

    let mut colors = BTreeMap::new();
    for name in env.keys() {
        dfs(name, env, &mut colors, &mut Vec::new())?;
    }
    Ok(())
}

/// Flattening outcome: the host declaration's constructors with every include
/// expanded, plus where each constructor came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedSum {
    /// Same name, params, and body kind as the input; open-sum bodies carry
    /// only constructor arms after resolution.
    pub decl: TypeDecl,
    /// Per constructor, aligned with the resolved constructor list.
    pub origins: Vec<Origin>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    /// Written inline in the host declaration.
    Inline,
    /// Pulled in by the named include.
    From(String),
}

impl ResolvedSum {
    pub fn ctors(&self) -> &[CtorDecl] {
        match &self.decl.body {
            Body::Variants(cs) => cs,
            Body::OpenSum(_) => unreachable!("resolved sums store ctors as variants"),
        }
    }
}

/// Replaces every include with the included sum's constructors, binding the
/// included declaration's parameters to the include's argument shapes.
///
/// A declaration with zero includes resolves to itself. Two sources may
/// contribute the same constructor only if the argument lists agree exactly
/// (the duplicate is dropped); otherwise resolution fails.
pub fn resolve_open_sum_with_origins(
    decl: &TypeDecl,
    env: &BTreeMap<String, TypeDecl>,
) -> Result<ResolvedSum, ValidationError> {
    let arms: Vec<Arm> = match &decl.body {
        Body::Variants(cs) => {
            return Ok(ResolvedSum {
                decl: decl.clone(),
                origins: vec![Origin::Inline; cs.len()],
            })
        }
        Body::OpenSum(arms) => arms.clone(),
    };

    let mut ctors: Vec<CtorDecl> = Vec::new();
    let mut origins: Vec<Origin> = Vec::new();
    let push = |c: CtorDecl, o: Origin, ctors: &mut Vec<CtorDecl>, origins: &mut Vec<Origin>| {
        if let Some(existing) = ctors.iter().find(|e| e.name == c.name) {
            if existing.args == c.args {
                return Ok(()); // identical duplicate: first occurrence wins
            }
            return Err(ValidationError::ConflictingCtor {
                decl: decl.name.clone(),
                ctor: c.name,
            });
        }
        ctors.push(c);
        origins.push(o);
        Ok(())
    };

    for arm in &arms {
        match arm {
            Arm::Ctor(c) => push(c.clone(), Origin::Inline, &mut ctors, &mut origins)?,
            Arm::Include(r) => {
                let target = env.get(&r.name).ok_or_else(|| ValidationError::UnknownInclude {
                    decl: decl.name.clone(),
                    target: r.name.clone(),
                })?;
                let inner = resolve_open_sum_with_origins(target, env)?;
                let binding: BTreeMap<&str, &ArgShape> = target
                    .params
                    .iter()
                    .map(String::as_str)
                    .zip(r.args.iter())
                    .collect();
                for c in inner.ctors() {
                    let substituted = CtorDecl {
                        name: c.name.clone(),
                        is_tag: c.is_tag,
                        args: c.args.iter().map(|s| subst_shape(s, &binding, target)).collect(),
                    };
                    push(substituted, Origin::From(r.name.clone()), &mut ctors, &mut origins)?;
                }
            }
        }
    }

    Ok(ResolvedSum {
        decl: TypeDecl {
            name: decl.name.clone(),
            params: decl.params.clone(),
            body: Body::Variants(ctors),
        },
        origins,
    })
}

/// [`resolve_open_sum_with_origins`] without the provenance bookkeeping, with
/// the body kind of the input preserved.
pub fn resolve_open_sum(
    decl: &TypeDecl,
    env: &BTreeMap<String, TypeDecl>,
) -> Result<TypeDecl, ValidationError> {
    let resolved = resolve_open_sum_with_origins(decl, env)?;
    Ok(match &decl.body {
        Body::Variants(_) => resolved.decl,
        Body::OpenSum(_) => TypeDecl {
            name: resolved.decl.name.clone(),
            params: resolved.decl.params.clone(),
            body: Body::OpenSum(resolved.ctors().iter().cloned().map(Arm::Ctor).collect()),
        },
    })
}

fn subst_shape(s: &ArgShape, binding: &BTreeMap<&str, &ArgShape>, target: &TypeDecl) -> ArgShape {
    match s {
        ArgShape::Param(p) => (*binding
            .get(p.as_str())
            .expect("include arity was validated before substitution"))
        .clone(),
        // The included sum's self-recursion points at the included type,
        // instantiated the way the include bound it.
        ArgShape::SelfRef => ArgShape::External(TypeRef {
            name: target.name.clone(),
            args: target.params.iter().map(|p| (*binding.get(p.as_str()).unwrap()).clone()).collect(),
        }),
        ArgShape::External(r) => ArgShape::External(TypeRef {
            name: r.name.clone(),
            args: r.args.iter().map(|x| subst_shape(x, binding, target)).collect(),
        }),
        ArgShape::Tuple(items) => {
            ArgShape::Tuple(items.iter().map(|x| subst_shape(x, binding, target)).collect())
        }
    }
}

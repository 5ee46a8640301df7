//! The subcommands. Each returns an [`Outcome`] holding the text for standard
//! output and standard error plus the exit code; nothing here prints.

use std::fmt::Write as _;
use std::path::Path;

use prelie_core::algebra::{check_representation, subadjacent_lie, PreLieAlgebra, Representation, Verdict};
use prelie_core::cochain::{
    are_cohomologous, coboundary, coboundary_matrix, cohomology, hom_module, lie_coboundary_matrix,
    lie_cohomology_dim, phi_matrix, Cochain,
};
use prelie_core::free::{enumerate_trees, graft_product, Tree, TreePoly};
use prelie_core::functors::{
    check_dendriform_xmod, check_lie_crossed_module, check_rb_lie_xmod, dendriform_to_prelie_xmod,
    prelie_to_lie_xmod, rblie_to_prelie_xmod,
};
use prelie_core::xmod::{
    check_crossed_module, check_extension, random_sections, t_map, t_map_with_sections, Extension,
};
use prelie_core::{Error, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::document::{cochain_entries, read_document, render, serialize_document, Document};
use crate::format::{bracketed, cochain_lines, rationals, violation_json, violation_text};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Input = 1,
    Violation = 2,
    OutputCheck = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit: Exit,
}

impl Outcome {
    fn success(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            exit: Exit::Success,
        }
    }

    fn input(message: impl std::fmt::Display) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            exit: Exit::Input,
        }
    }

    pub fn code(&self) -> i32 {
        self.exit as i32
    }
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Copy, Default)]
pub struct Global {
    pub json: bool,
    pub seed: u64,
}

type Step<T> = Result<T, Outcome>;

fn emit(g: Global, text: String, value: Value, exit: Exit) -> Outcome {
    Outcome {
        stdout: if g.json { render(&value) } else { text },
        stderr: String::new(),
        exit,
    }
}

fn load(path: &Path) -> Step<Document> {
    read_document(path).map_err(Outcome::input)
}

fn core<T>(r: prelie_core::Result<T>) -> Step<T> {
    r.map_err(Outcome::input)
}

/// Runs the checks in order and stops at the first violation.
fn first_violation(
    checks: Vec<(Option<&'static str>, prelie_core::Result<Verdict<Q>>)>,
) -> Step<Option<(Option<&'static str>, prelie_core::algebra::Violation<Q>)>> {
    for (part, verdict) in checks {
        if let Err(v) = core(verdict)? {
            return Ok(Some((part, v)));
        }
    }
    Ok(None)
}

fn violation_outcome(
    g: Global,
    kind: &str,
    part: Option<&str>,
    v: &prelie_core::algebra::Violation<Q>,
) -> Outcome {
    let text = format!("{kind}: violation\n  {}\n", violation_text(part, v));
    let mut value = json!({"kind": kind, "status": "violation"});
    if let (Value::Object(out), Value::Object(details)) = (&mut value, violation_json(part, v)) {
        out.extend(details);
    }
    emit(g, text, value, Exit::Violation)
}

fn extension_checks(e: &Extension<Q>) -> Vec<(Option<&'static str>, prelie_core::Result<Verdict<Q>>)> {
    vec![
        (Some("g"), Ok(e.g.check())),
        (Some("V"), check_representation(&e.g, &e.v_rep)),
        (Some("m"), Ok(e.m.check())),
        (Some("n"), Ok(e.n.check())),
        (None, check_extension(e)),
    ]
}

pub fn validate(path: &Path, g: Global) -> Outcome {
    run(|| {
        let doc = load(path)?;
        let checks = match &doc {
            Document::PreLie(a) => vec![(None, Ok(a.check()))],
            Document::Lie(l) => vec![(None, Ok(l.check()))],
            Document::Representation { algebra, rep } => vec![
                (Some("algebra"), Ok(algebra.check())),
                (None, check_representation(algebra, rep)),
            ],
            Document::CrossedModule(x) => vec![
                (Some("m"), Ok(x.m.check())),
                (Some("n"), Ok(x.n.check())),
                (None, check_crossed_module(x)),
            ],
            Document::Extension(e) => extension_checks(e),
            Document::RbLieXmod(x) => vec![(None, check_rb_lie_xmod(x))],
            Document::DendriformXmod(x) => vec![(None, check_dendriform_xmod(x))],
            Document::Cochain(_) => vec![],
            Document::LieXmod(x) => vec![(None, check_lie_crossed_module(x))],
        };
        let kind = doc.kind();
        Ok(match first_violation(checks)? {
            None => emit(
                g,
                format!("{kind}: valid\n"),
                json!({"kind": kind, "status": "valid"}),
                Exit::Success,
            ),
            Some((part, v)) => violation_outcome(g, kind, part, &v),
        })
    })
}

fn run(f: impl FnOnce() -> Step<Outcome>) -> Outcome {
    f().unwrap_or_else(|o| o)
}

/// Where the module comes from for commands that need an algebra and a module.
#[derive(Debug, Clone, Copy, Default)]
pub struct ModuleChoice {
    pub trivial: Option<usize>,
    pub regular: bool,
}

fn load_module(path: &Path, choice: ModuleChoice, g: Global) -> Step<(PreLieAlgebra<Q>, Representation<Q>)> {
    let (a, rep) = match (load(path)?, choice.trivial, choice.regular) {
        (Document::Representation { algebra, rep }, None, false) => (algebra, rep),
        (Document::Representation { .. }, _, _) => {
            return Err(Outcome::input(
                "--trivial and --regular only apply to prelie documents",
            ))
        }
        (Document::PreLie(a), Some(v), false) => {
            let rep = Representation::trivial(a.dim(), v);
            (a, rep)
        }
        (Document::PreLie(a), None, true) => {
            let rep = Representation::regular(&a);
            (a, rep)
        }
        (Document::PreLie(_), _, _) => {
            return Err(Outcome::input(
                "a prelie document needs exactly one of --trivial DIM or --regular",
            ))
        }
        (other, _, _) => {
            return Err(Outcome::input(format!(
                "expected a representation or prelie document, found {}",
                other.kind()
            )))
        }
    };
    let checks = vec![(Some("algebra"), Ok(a.check())), (None, check_representation(&a, &rep))];
    if let Some((part, v)) = first_violation(checks)? {
        return Err(violation_outcome(g, "representation", part, &v));
    }
    Ok((a, rep))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CohomologyOptions {
    pub max_degree: usize,
    pub reps: bool,
    pub phi: bool,
    pub verify: bool,
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn cohomology_cmd(path: &Path, choice: ModuleChoice, opts: CohomologyOptions, g: Global) -> Outcome {
    run(|| {
        if opts.max_degree == 0 {
            return Err(Outcome::input("--n must be at least 1"));
        }
        let (a, rep) = load_module(path, choice, g)?;
        let (dg, dv) = (a.dim(), rep.carrier_dim());
        let lie = subadjacent_lie(&a);
        let hom = hom_module(&a, &rep);
        let mut text = format!("dim g = {dg}, dim V = {dv}\n");
        let mut degrees = Vec::new();
        let mut all_ok = true;
        for k in 1..=opts.max_degree {
            let h = core(cohomology(&a, &rep, k))?;
            writeln!(text, "H^{k} = {}", h.dimension).unwrap();
            let mut entry = json!({"k": k, "dimension": h.dimension});
            if opts.phi {
                let lie_dim = core(lie_cohomology_dim(&lie, &hom, k - 1))?;
                let d = core(coboundary_matrix(&a, &rep, k))?;
                let d_lie = core(lie_coboundary_matrix(&lie, &hom, k - 1))?;
                let phi_k = core(phi_matrix::<Q>(k, dg, dv))?;
                let phi_next = core(phi_matrix::<Q>(k + 1, dg, dv))?;
                let commutes = phi_next.mul(&d) == d_lie.mul(&phi_k);
                let equal = lie_dim == h.dimension;
                all_ok &= commutes && equal;
                writeln!(text, "  Lie H^{}(g^c, Hom(g,V)) = {lie_dim}: {}", k - 1, pass(equal)).unwrap();
                writeln!(text, "  φ∘d = d∘φ: {}", pass(commutes)).unwrap();
                entry["lie_dimension"] = json!(lie_dim);
                entry["phi_commutes"] = json!(commutes);
            }
            if opts.verify {
                let d = core(coboundary_matrix(&a, &rep, k))?;
                let d_next = core(coboundary_matrix(&a, &rep, k + 1))?;
                let ok = d_next.mul(&d).is_zero();
                all_ok &= ok;
                writeln!(text, "  d∘d = 0 on C^{k}: {}", pass(ok)).unwrap();
                entry["dd_zero"] = json!(ok);
            }
            if opts.reps {
                for (r, f) in h.representatives.iter().enumerate() {
                    writeln!(text, "  representative {}:", r + 1).unwrap();
                    for line in cochain_lines(f, "f", "v") {
                        writeln!(text, "    {line}").unwrap();
                    }
                }
                entry["representatives"] =
                    Value::Array(h.representatives.iter().map(cochain_entries).collect());
            }
            degrees.push(entry);
        }
        let value = json!({"algebra_dim": dg, "module_dim": dv, "degrees": degrees});
        let exit = if all_ok { Exit::Success } else { Exit::OutputCheck };
        Ok(emit(g, text, value, exit))
    })
}

pub fn tmap_cmd(path: &Path, random: bool, g: Global) -> Outcome {
    run(|| {
        let e = match load(path)? {
            Document::Extension(e) => e,
            other => {
                return Err(Outcome::input(format!(
                    "expected an extension document, found {}",
                    other.kind()
                )))
            }
        };
        if let Some((part, v)) = first_violation(extension_checks(&e))? {
            return Err(violation_outcome(g, "extension", part, &v));
        }
        let r = match t_map(&e) {
            Ok(r) => r,
            Err(Error::InvalidExtension(m)) => {
                return Err(Outcome {
                    stdout: String::new(),
                    stderr: format!("invalid extension: {m}\n"),
                    exit: Exit::Violation,
                })
            }
            Err(other) => return Err(Outcome::input(other)),
        };
        let mu_i = e.mu.mul(&e.i);
        let v = e.v_dim();
        let mu_theta_zero = r
            .theta
            .coordinates()
            .chunks(v.max(1))
            .all(|value| mu_i.apply(value).iter().all(num_traits::Zero::is_zero));
        let d_theta_zero = core(coboundary(&e.g, &e.v_rep, &r.theta))?.is_zero();
        let mut text = format!(
            "dim g = {}, dim V = {v}, dim m = {}, dim n = {}\n",
            e.g.dim(),
            e.m.dim(),
            e.n.dim()
        );
        let lines = cochain_lines(&r.theta, "θ", "v");
        if lines.is_empty() {
            text.push_str("θ = 0\n");
        } else {
            text.push_str("θ:\n");
            for line in &lines {
                writeln!(text, "  {line}").unwrap();
            }
        }
        let class = if r.is_trivial_class() { "trivial" } else { "nontrivial" };
        writeln!(text, "dim H^3 = {}", r.class_coordinates.len()).unwrap();
        writeln!(text, "class: {} ({class})", bracketed(&r.class_coordinates)).unwrap();
        writeln!(text, "μθ = 0: {}", pass(mu_theta_zero)).unwrap();
        writeln!(text, "dθ = 0: {}", pass(d_theta_zero)).unwrap();
        let mut value = json!({
            "theta": cochain_entries(&r.theta),
            "h3_dimension": r.class_coordinates.len(),
            "class": rationals(&r.class_coordinates),
            "trivial": r.is_trivial_class(),
            "mu_theta_zero": mu_theta_zero,
            "d_theta_zero": d_theta_zero,
        });
        let mut ok = mu_theta_zero && d_theta_zero;
        if random {
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            let (rho, sigma) = random_sections(&e, &mut rng);
            let other = core(t_map_with_sections(&e, rho, sigma))?;
            let same_class = other.class_coordinates == r.class_coordinates;
            let cohomologous = core(are_cohomologous(&e.g, &e.v_rep, &r.theta, &other.theta))?.is_some();
            ok &= same_class && cohomologous;
            writeln!(text, "random sections (seed {}):", g.seed).unwrap();
            writeln!(text, "  class: {}", bracketed(&other.class_coordinates)).unwrap();
            writeln!(text, "  cohomologous to θ: {}", pass(same_class && cohomologous)).unwrap();
            value["random_sections"] = json!({
                "seed": g.seed,
                "theta": cochain_entries(&other.theta),
                "class": rationals(&other.class_coordinates),
                "cohomologous": same_class && cohomologous,
            });
        }
        let exit = if ok { Exit::Success } else { Exit::OutputCheck };
        Ok(emit(g, text, value, exit))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    PreLie,
    RbLie,
    Dendriform,
}

/// Converts and prints the resulting document. The output is JSON whether or
/// not `--json` is set.
pub fn convert_cmd(path: &Path, from: Flavor) -> Outcome {
    run(|| {
        let doc = load(path)?;
        let converted = match (from, doc) {
            (Flavor::PreLie, Document::CrossedModule(x)) => prelie_to_lie_xmod(&x).map(Document::LieXmod),
            (Flavor::RbLie, Document::RbLieXmod(x)) => rblie_to_prelie_xmod(&x).map(Document::CrossedModule),
            (Flavor::Dendriform, Document::DendriformXmod(x)) => {
                dendriform_to_prelie_xmod(&x).map(Document::CrossedModule)
            }
            (flavor, other) => {
                let expected = match flavor {
                    Flavor::PreLie => "crossed_module",
                    Flavor::RbLie => "rblie_xmod",
                    Flavor::Dendriform => "dendriform_xmod",
                };
                return Err(Outcome::input(format!(
                    "expected a {expected} document, found {}",
                    other.kind()
                )));
            }
        };
        Ok(match converted {
            Ok(out) => Outcome::success(serialize_document(&out)),
            Err(Error::InvalidInput(m)) => Outcome {
                stdout: String::new(),
                stderr: format!("invalid input: {m}\n"),
                exit: Exit::Violation,
            },
            Err(Error::OutputCheckFailed(m)) => Outcome {
                stdout: String::new(),
                stderr: format!("output check failed: {m}\n"),
                exit: Exit::OutputCheck,
            },
            Err(other) => Outcome::input(other),
        })
    })
}

pub fn trees_cmd(
    labels: Option<usize>,
    degree: Option<usize>,
    product: Option<(&str, &str)>,
    g: Global,
) -> Outcome {
    run(|| {
        let mut text = String::new();
        let mut value = json!({});
        match (labels, degree) {
            (_, Some(_)) if product.is_some() => {
                return Err(Outcome::input("--degree cannot be combined with --product"))
            }
            (Some(k), Some(d)) => {
                if k == 0 || d == 0 {
                    return Err(Outcome::input("--labels and --degree must be at least 1"));
                }
                let trees = enumerate_trees(k, d);
                for t in &trees {
                    writeln!(text, "{t}").unwrap();
                }
                value["labels"] = json!(k);
                value["degree"] = json!(d);
                value["count"] = json!(trees.len());
                value["trees"] = json!(trees.iter().map(ToString::to_string).collect::<Vec<_>>());
            }
            (None, None) if product.is_some() => {}
            (Some(0), None) => return Err(Outcome::input("--labels must be at least 1")),
            (Some(_), None) if product.is_some() => {}
            _ => {
                return Err(Outcome::input(
                    "give --labels and --degree together, or --product T1 T2",
                ))
            }
        }
        if let Some((s, t)) = product {
            let s = Tree::parse(s).map_err(Outcome::input)?;
            let t = Tree::parse(t).map_err(Outcome::input)?;
            if let Some(k) = labels {
                if s.label_bound().max(t.label_bound()) > k {
                    return Err(Outcome::input(format!("tree labels exceed --labels {k}")));
                }
            }
            let truncation = s.degree() + t.degree();
            let p = core(graft_product(
                &TreePoly::<Q>::from_tree(s, truncation),
                &TreePoly::from_tree(t, truncation),
            ))?;
            writeln!(text, "{p}").unwrap();
            value["product"] = Value::Array(
                p.terms()
                    .map(|(tree, c)| json!({"tree": tree.to_string(), "coefficient": c.to_string()}))
                    .collect(),
            );
        }
        Ok(emit(g, text, value, Exit::Success))
    })
}

fn load_cochain(path: &Path) -> Step<Cochain<Q>> {
    match load(path)? {
        Document::Cochain(f) => Ok(f),
        other => Err(Outcome::input(format!(
            "expected a cochain document, found {}",
            other.kind()
        ))),
    }
}

pub fn cohomologous_cmd(path: &Path, first: &Path, second: &Path, choice: ModuleChoice, g: Global) -> Outcome {
    run(|| {
        let (a, rep) = load_module(path, choice, g)?;
        let f1 = load_cochain(first)?;
        let f2 = load_cochain(second)?;
        let primitive = core(are_cohomologous(&a, &rep, &f1, &f2))?;
        let mut text = String::new();
        let value = match &primitive {
            Some(beta) => {
                text.push_str("cohomologous: yes\n");
                let lines = cochain_lines(beta, "β", "v");
                if lines.is_empty() {
                    text.push_str("β = 0 (the cochains are equal)\n");
                } else {
                    text.push_str("dβ = f1 - f2 with\n");
                    for line in lines {
                        writeln!(text, "  {line}").unwrap();
                    }
                }
                json!({"cohomologous": true, "primitive": cochain_entries(beta)})
            }
            None => {
                text.push_str("cohomologous: no\n");
                json!({"cohomologous": false})
            }
        };
        Ok(emit(g, text, value, Exit::Success))
    })
}

//! Commands behind the `braidlift` binary: validation, single operations on
//! artifact files, and the full round-trip suite.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use braidlift_core::base::validate_base;
use braidlift_core::enriched::{validate_vcat, validate_vmon_functor, validate_vmoncat, validate_vtransform, VMonCat, VMonFunctor, VTransform};
use braidlift_core::equivalence::{base_has_isomorphic_objects, check_2functoriality, check_reconstruction, check_roundtrip, p0, q1, q2, Lifts};
use braidlift_core::grading::{validate_graded_modtens, validate_graded_vmoncat, validate_group};
use braidlift_core::io::{adjunction_to_json, file_name, read_json, report_to_json, Artifact, Workspace};
use braidlift_core::mates::{compute_adjoint, exhaustive_composite_lemma, validate_adjunction, verify_mate_lemmas};
use braidlift_core::modtens::{validate_modtens_0cell, validate_modtens_1cell, validate_modtens_2cell, Provenance};
use braidlift_core::report::ValidationReport;
use braidlift_core::witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Level {
    Base,
    Vcat,
    Vmoncat,
    Functor,
    Transform,
    Modtens,
    Graded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Op {
    Adjoint,
    P0,
    P1,
    P2,
    Q1,
    Q2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub fn render(rep: &ValidationReport, format: Format) -> String {
    match format {
        Format::Text => rep.render(),
        Format::Json => report_to_json(rep),
    }
}

fn expand(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut entries: Vec<PathBuf> = std::fs::read_dir(p)
                .with_context(|| format!("reading {}", p.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|q| q.is_file())
                .collect();
            entries.sort();
            files.extend(entries);
        } else {
            files.push(p.clone());
        }
    }
    Ok(files)
}

/// The artifacts defined by the given files, as `(kind, name)`.
fn primaries(paths: &[PathBuf]) -> Result<Vec<(String, String)>> {
    expand(paths)?
        .iter()
        .map(|f| {
            let v = read_json(f)?;
            let field = |k: &str| v.get(k).and_then(|x| x.as_str()).map(str::to_string);
            match (field("kind"), field("name")) {
                (Some(k), Some(n)) => Ok((k, n)),
                _ => Err(anyhow!("{}: document needs `kind` and `name`", f.display())),
            }
        })
        .collect()
}

fn find(ws: &Workspace, kind: &str, name: &str) -> Result<Artifact> {
    ws.artifacts()
        .into_iter()
        .find(|a| a.kind() == kind && a.name() == name)
        .ok_or_else(|| anyhow!("no {kind} named `{name}` was loaded"))
}

/// Validates one artifact at `level`, or at the level of its kind.
pub fn validate_artifact(ws: &Workspace, a: &Artifact, level: Option<Level>) -> Result<ValidationReport> {
    use Level as L;
    let rep = match (a, level) {
        (Artifact::Base(b), None | Some(L::Base)) => validate_base(b),
        (Artifact::VMonCat(c), Some(L::Vcat)) => validate_vcat(c.vcat()),
        (Artifact::VMonCat(c), None | Some(L::Vmoncat)) => validate_vmoncat(c),
        (Artifact::Functor(f), None | Some(L::Functor)) => validate_vmon_functor(f),
        (Artifact::Transform(t), None | Some(L::Transform)) => {
            let mut rep = validate_vtransform(t, false);
            let monoidal = validate_vtransform(t, true).passed();
            rep.note("transform.monoidal", "monoidal transformation", format!("monoidal={monoidal}"));
            rep
        }
        (Artifact::ModTens(m), None | Some(L::Modtens)) => validate_modtens_0cell(m),
        (Artifact::Cell1(c), None | Some(L::Modtens)) => validate_modtens_1cell(c),
        (Artifact::Cell2(t), None | Some(L::Modtens)) => validate_modtens_2cell(t),
        (Artifact::Grading(g), None | Some(L::Graded)) => {
            let mut rep = validate_group(&g.grading.group);
            let graded = match (ws.cats.get(&g.category), ws.modtens.get(&g.category)) {
                (Some(c), _) => validate_graded_vmoncat(c, &g.grading),
                (None, Some(m)) => validate_graded_modtens(m, &g.grading),
                (None, None) => bail!("grading `{}` refers to unknown category `{}`", g.name, g.category),
            };
            rep.absorb("", graded);
            rep
        }
        (a, Some(level)) => bail!("level {level:?} does not apply to {} `{}`", a.kind(), a.name()),
    };
    Ok(rep)
}

fn section(a: &Artifact) -> String {
    format!("{}:{}", a.kind(), a.name())
}

/// Validates every artifact defined by `paths`. References are resolved
/// from sibling files but not validated themselves.
pub fn cmd_validate(paths: &[PathBuf], level: Option<Level>) -> Result<ValidationReport> {
    let ws = Workspace::load(paths)?;
    let mut rep = ValidationReport::new();
    for (kind, name) in primaries(paths)? {
        let a = find(&ws, &kind, &name)?;
        rep.absorb(&section(&a), validate_artifact(&ws, &a, level)?);
    }
    Ok(rep)
}

/// Result of `apply`: canonical text of the computed artifact, and the
/// artifact with everything it references.
pub struct Applied {
    pub file_name: String,
    pub text: String,
    pub closure: Workspace,
}

pub enum ApplyOutcome {
    Done(Box<Applied>),
    InvalidInput(ValidationReport),
}

fn input_kind(op: Op) -> &'static str {
    match op {
        Op::Adjoint | Op::P0 => "vcat",
        Op::P1 => "functor",
        Op::P2 => "transform",
        Op::Q1 => "cell1",
        Op::Q2 => "cell2",
    }
}

/// Adds the enriched source categories of computed module tensor categories.
fn add_sources(closure: &mut Workspace, ws: &Workspace, extra: &[Arc<VMonCat>]) -> Result<()> {
    for c in extra {
        closure.insert(Artifact::VMonCat(c.clone()))?;
    }
    let computed: Vec<String> = closure
        .modtens
        .values()
        .filter_map(|m| match m.provenance() {
            Provenance::Computed { source, .. } => Some(source.clone()),
            Provenance::Given => None,
        })
        .collect();
    for s in computed {
        if let Some(c) = ws.cats.get(&s) {
            closure.insert(Artifact::VMonCat(c.clone()))?;
        }
    }
    Ok(())
}

pub fn cmd_apply(op: Op, inputs: &[PathBuf], force: bool) -> Result<ApplyOutcome> {
    let ws = Workspace::load(inputs)?;
    let kind = input_kind(op);
    let matching: Vec<_> = primaries(inputs)?.into_iter().filter(|(k, _)| k == kind).collect();
    let name = match matching.as_slice() {
        [(_, n)] => n.clone(),
        [] => bail!("--op {op:?} needs one {kind} input"),
        _ => bail!("--op {op:?} needs exactly one {kind} input, got {}", matching.len()),
    };
    let input = find(&ws, kind, &name)?;
    if !force {
        let rep = validate_artifact(&ws, &input, None)?;
        if !rep.passed() {
            return Ok(ApplyOutcome::InvalidInput(rep));
        }
    }
    let mut lifts = Lifts::new();
    let mut closure = Workspace::new();
    let artifact = match (&input, op) {
        (Artifact::VMonCat(c), Op::Adjoint) => {
            let adj = compute_adjoint(c.clone())?;
            closure.insert(input.clone())?;
            return Ok(ApplyOutcome::Done(Box::new(Applied {
                file_name: format!("{}.adj", file_name(&input).trim_end_matches(".vcat")),
                text: adjunction_to_json(&adj),
                closure,
            })));
        }
        (Artifact::VMonCat(c), Op::P0) => {
            let m = p0(c.clone())?.modtens;
            closure.insert(Artifact::ModTens(m.clone()))?;
            add_sources(&mut closure, &ws, &[])?;
            Artifact::ModTens(m)
        }
        (Artifact::Functor(f), Op::P1) => {
            let cell = Arc::new(lifts.p1(f)?);
            closure.insert(Artifact::Cell1(cell.clone()))?;
            add_sources(&mut closure, &ws, &[f.source().clone(), f.target().clone()])?;
            Artifact::Cell1(cell)
        }
        (Artifact::Transform(t), Op::P2) => {
            let cell = Arc::new(lifts.p2(t)?);
            closure.insert(Artifact::Cell2(cell.clone()))?;
            let f = t.source();
            add_sources(&mut closure, &ws, &[f.source().clone(), f.target().clone()])?;
            Artifact::Cell2(cell)
        }
        (Artifact::Cell1(c), Op::Q1) => {
            let (s, t) = (ws.lift_of(c.source())?, ws.lift_of(c.target())?);
            let f = Arc::new(q1(c, &s, &t)?);
            closure.insert(Artifact::Functor(f.clone()))?;
            Artifact::Functor(f)
        }
        (Artifact::Cell2(c), Op::Q2) => {
            let cell = c.source();
            let (s, t) = (ws.lift_of(cell.source())?, ws.lift_of(cell.target())?);
            let tr = Arc::new(q2(c, &s, &t)?);
            closure.insert(Artifact::Transform(tr.clone()))?;
            Artifact::Transform(tr)
        }
        _ => unreachable!("input kind matches the operation"),
    };
    Ok(ApplyOutcome::Done(Box::new(Applied { file_name: file_name(&artifact), text: artifact.to_json(&closure), closure })))
}

/// Writes an `apply` result: into a directory together with everything it
/// references, to a single file, or to stdout when `out` is `None`.
pub fn write_applied(applied: &Applied, out: Option<&Path>) -> Result<Option<PathBuf>> {
    match out {
        None => {
            print!("{}", applied.text);
            Ok(None)
        }
        Some(p) if p.is_dir() || p.to_string_lossy().ends_with('/') => {
            applied.closure.write_dir(p)?;
            let path = p.join(&applied.file_name);
            std::fs::write(&path, &applied.text).with_context(|| format!("writing {}", path.display()))?;
            Ok(Some(path))
        }
        Some(p) => {
            std::fs::write(p, &applied.text).with_context(|| format!("writing {}", p.display()))?;
            Ok(Some(p.to_path_buf()))
        }
    }
}

/// Suites run by `roundtrip`, in order.
pub const SUITES: [&str; 6] = ["validate", "adjoint", "mates", "roundtrip", "functoriality", "reconstruction"];

pub struct RoundtripOutcome {
    pub report: ValidationReport,
    pub first_failing_suite: Option<&'static str>,
}

/// Validates every artifact in `dir`, lifts every enriched category, and runs
/// the mate lemmas, round trips, 2-functoriality and reconstruction checks.
pub fn cmd_roundtrip(dir: &Path, seed: u64, trials: usize) -> Result<RoundtripOutcome> {
    let ws = Workspace::load(&[dir.to_path_buf()])?;
    let mut suites: Vec<(&'static str, ValidationReport)> = Vec::new();

    let mut rep = ValidationReport::new();
    for a in ws.artifacts() {
        rep.absorb(&section(&a), validate_artifact(&ws, &a, None)?);
    }
    suites.push(("validate", rep));

    let mut lifts = Lifts::new();
    let mut rep = ValidationReport::new();
    let mut lifted = Vec::new();
    for c in ws.cats.values() {
        match lifts.get(c) {
            Ok(l) => {
                rep.record("lift.exists", "tensoring adjunction exists", true, witness!(cat = c.name()));
                rep.absorb(&format!("vcat:{}", c.name()), validate_adjunction(&l.adj));
                rep.absorb(&format!("vcat:{}", c.name()), validate_modtens_0cell(&l.modtens));
                lifted.push(l);
            }
            Err(e) => rep.record("lift.exists", "tensoring adjunction exists", false, witness!(cat = c.name(), error = e)),
        }
    }
    suites.push(("adjoint", rep));

    let mut rep = ValidationReport::new();
    for l in &lifted {
        let sec = format!("vcat:{}", l.cat.name());
        rep.absorb(&sec, exhaustive_composite_lemma(&l.adj));
        rep.absorb(&sec, verify_mate_lemmas(&l.adj, seed, trials));
    }
    if trials == 0 {
        rep.note("random", "seeded random lemma trials", "vacuous random suite trials=0");
    }
    suites.push(("mates", rep));

    let functors: Vec<Arc<VMonFunctor>> = ws.functors.values().cloned().collect();
    let transforms: Vec<Arc<VTransform>> = ws.transforms.values().cloned().collect();
    suites.push(("roundtrip", check_roundtrip(&mut lifts, &functors, &transforms)));

    let chains: Vec<_> = functors
        .iter()
        .flat_map(|f| functors.iter().filter(move |g| f.target().name() == g.source().name()).map(move |g| (f.clone(), g.clone())))
        .collect();
    let vertical: Vec<_> = transforms
        .iter()
        .flat_map(|s| transforms.iter().filter(move |t| s.target().name() == t.source().name()).map(move |t| (s.clone(), t.clone())))
        .collect();
    let horizontal: Vec<_> = transforms
        .iter()
        .flat_map(|s| {
            transforms
                .iter()
                .filter(move |t| s.source().target().name() == t.source().source().name())
                .map(move |t| (s.clone(), t.clone()))
        })
        .collect();
    suites.push(("functoriality", check_2functoriality(&mut lifts, &chains, &vertical, &horizontal)));

    let mut rep = ValidationReport::new();
    for l in &lifted {
        if base_has_isomorphic_objects(l.cat.base()) {
            rep.note("skipped", "reconstruction needs a base without isomorphic distinct objects", format!("cat={}", l.cat.name()));
        } else {
            rep.absorb(&format!("vcat:{}", l.cat.name()), check_reconstruction(l));
        }
    }
    suites.push(("reconstruction", rep));

    let mut report = ValidationReport::new();
    report.note("run", "run parameters", format!("seed={seed}"));
    report.note("run", "run parameters", format!("trials={trials}"));
    let first_failing_suite = suites.iter().find(|(_, r)| !r.passed()).map(|(s, _)| *s);
    if let Some(s) = first_failing_suite {
        report.note("run", "run parameters", format!("first_failing_suite={s}"));
    }
    for (name, r) in suites {
        // These checks already carry the suite name.
        let prefix = if matches!(name, "roundtrip" | "functoriality") { "" } else { name };
        report.absorb(prefix, r);
    }
    Ok(RoundtripOutcome { report, first_failing_suite })
}

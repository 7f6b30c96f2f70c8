//! Command-line front end: argument parsing, bundle resolution and the JSON
//! report written for every command.

pub mod report;
pub mod theorems;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use homalg::bundle::{load_bundle, save_bundle, Bundle, CHECK_NAMES};
use homalg::covariant::{build_quasitriangular, dualize, quasitriangular_maps};
use homalg::rota_baxter::{
    dendriform_from_rbs, prelie_from_dendriform, pseudotwistor_from_rbs, rbs_from_weighted_operator, star_product,
};
use homalg::search::{
    catalog, catalog_over, enumerate_with, SearchMode, SearchTarget, SearchTask, CATALOG_NAMES,
};
use homalg::yang_baxter::{dendriform_from_alpha_n_rbs, rbs_from_ybp, AlphaNRbSystem, YangBaxterPair};
use homalg::{CheckReport, Error, FieldSpec, Result};
use serde_json::{json, Value};

use report::{CheckEntry, Report, EXIT_INPUT, EXIT_PASS};
pub use theorems::THEOREM_NAMES;

pub const CONSTRUCTIONS: &[&str] = &[
    "dendriform-from-rbs",
    "prelie-from-dendriform",
    "star-product",
    "pseudotwistor-from-rbs",
    "rbs-from-weighted",
    "rbs-from-ybp",
    "dendriform-from-alpha-n-rbs",
    "quasitriangular",
    "quasitriangular-maps",
    "dualize-covariant",
];

#[derive(Debug, Parser)]
#[command(name = "homalg", version, about = "Exact checks and constructions for Hom-associative structures")]
pub struct Cli {
    /// Record per-check wall time in the report.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Skip the declared checks when loading bundles.
    #[arg(long, global = true)]
    pub no_validate: bool,
    /// Field for catalog instances (Q, GF(p) or a prime).
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Witnesses kept per check.
    #[arg(long, global = true, default_value_t = 32)]
    pub max_witnesses: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run named checks against a bundle.
    Check(CheckArgs),
    /// Apply a construction and emit the resulting bundle.
    Derive(DeriveArgs),
    /// Check a theorem's conclusions on a bundle satisfying its hypotheses.
    VerifyTheorem(TheoremArgs),
    /// Enumerate or sample solutions over a prime field.
    Search(SearchArgs),
    /// Dualize a covariant Hom-bialgebra (the quasitriangular one when the
    /// bundle only has `r`, `s`).
    Dualize(DualizeArgs),
    /// List or print built-in instances.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Bundle file or catalog name.
    #[arg(long)]
    pub bundle: String,
    /// Comma-separated check names; defaults to the bundle's declared checks.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,
}

#[derive(Debug, Args)]
pub struct DeriveArgs {
    #[arg(long)]
    pub construction: String,
    #[arg(long)]
    pub bundle: String,
    /// Output file; without it the bundle is printed instead of the report.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TheoremArgs {
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub bundle: String,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// rb-systems, yb-pairs or weighted-rb.
    #[arg(long)]
    pub target: String,
    #[arg(long)]
    pub bundle: String,
    #[arg(long, conflicts_with = "seed")]
    pub exhaustive: bool,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    /// Weight for weighted-rb.
    #[arg(long)]
    pub lambda: Option<String>,
    /// JSON-lines output file; without it solutions go to stdout and the
    /// report to stderr.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DualizeArgs {
    #[arg(long)]
    pub bundle: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long)]
    pub name: Option<String>,
}

struct Ctx {
    validate: bool,
    field: Option<FieldSpec>,
    timings: bool,
    max_witnesses: usize,
}

impl Ctx {
    /// A file path if one exists, else a catalog instance.
    fn resolve(&self, arg: &str) -> Result<Bundle> {
        let path = Path::new(arg);
        if path.exists() {
            let b = load_bundle(path, self.validate)?;
            if let Some(f) = self.field {
                if f != b.field() {
                    return Err(Error::FieldMismatch {
                        left: f.to_string(),
                        right: b.field().to_string(),
                    });
                }
            }
            return Ok(b);
        }
        if !CATALOG_NAMES.contains(&arg) {
            return Err(Error::UnknownName(arg.to_string()));
        }
        let inst = match self.field {
            Some(f) => catalog_over(arg, f)?,
            None => catalog(arg)?,
        };
        if self.validate {
            inst.bundle.validate()?;
        }
        Ok(inst.bundle)
    }

    fn entry(&self, report: &CheckReport, role: &'static str, labels: &[String]) -> CheckEntry {
        CheckEntry::from_report(report, role, labels, self.max_witnesses)
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    let command: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut report = Report::new(command);
    let field = match cli.field.as_deref().map(str::parse::<FieldSpec>).transpose() {
        Ok(f) => f,
        Err(e) => {
            report.fail_with(&e, &[], cli.max_witnesses);
            let _ = out.write_all(report.to_json().as_bytes());
            return report.exit_code;
        }
    };
    let ctx = Ctx {
        validate: !cli.no_validate,
        field,
        timings: cli.timings,
        max_witnesses: cli.max_witnesses,
    };
    // Some commands print a payload on stdout and move the report to stderr.
    let mut report_to_stderr = false;
    let mut labels = Vec::new();
    let result = match &cli.command {
        Command::Check(a) => run_check(&ctx, a, &mut report, &mut labels),
        Command::Derive(a) => run_derive(&ctx, a, &mut report, &mut labels, out, &mut report_to_stderr),
        Command::VerifyTheorem(a) => run_theorem(&ctx, a, &mut report, &mut labels),
        Command::Search(a) => run_search(&ctx, a, &mut report, &mut labels, out, &mut report_to_stderr),
        Command::Dualize(a) => run_dualize(&ctx, a, &mut report, &mut labels, out, &mut report_to_stderr),
        Command::Catalog(a) => run_catalog(&ctx, a, &mut report),
    };
    match result {
        Ok(()) => report.conclude(),
        Err(e) => report.fail_with(&e, &labels, ctx.max_witnesses),
    }
    if report.details.get("vacuous") == Some(&Value::Bool(true)) && report.error.is_none() {
        // Unmet hypotheses say nothing about the theorem.
        report.status = "vacuous";
        report.exit_code = EXIT_PASS;
    }
    let sink: &mut dyn Write = if report_to_stderr { err } else { out };
    let _ = sink.write_all(report.to_json().as_bytes());
    report.exit_code
}

fn run_check(ctx: &Ctx, a: &CheckArgs, report: &mut Report, labels: &mut Vec<String>) -> Result<()> {
    let b = ctx.resolve(&a.bundle)?;
    *labels = b.basis.clone();
    let names: Vec<String> = if !a.checks.is_empty() {
        a.checks.clone()
    } else if !b.declares.is_empty() {
        b.declares.clone()
    } else {
        vec!["hom-algebra".to_string()]
    };
    if let Some(bad) = names.iter().find(|n| !CHECK_NAMES.contains(&n.as_str())) {
        return Err(Error::UnknownName(bad.clone()));
    }
    report.details.insert("field".into(), json!(b.field().to_string()));
    report.details.insert("dim".into(), json!(b.dim()));
    for name in &names {
        let start = Instant::now();
        let r = b.run_check(name)?;
        let mut entry = ctx.entry(&r, "check", labels);
        if ctx.timings {
            entry.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        report.checks.push(entry);
    }
    Ok(())
}

/// The Rota-Baxter system of a bundle, from `R`, `S` or from a weighted `R`.
fn rb_system_of(b: &Bundle) -> Result<homalg::rota_baxter::RotaBaxterSystem> {
    match (&b.rb_s, &b.lambda, &b.rb_r) {
        (None, Some(lambda), Some(r)) => rbs_from_weighted_operator(&b.algebra(), r, lambda),
        _ => b.rb_system(),
    }
}

fn yb_pair_of(b: &Bundle) -> Result<YangBaxterPair> {
    let (r, s) = b.tensors()?;
    YangBaxterPair::new(b.algebra(), r.clone(), s.clone())
}

pub fn derive(construction: &str, b: &Bundle) -> Result<Bundle> {
    let mut d = b.clone();
    d.declares.clear();
    match construction {
        "dendriform-from-rbs" => {
            let dend = dendriform_from_rbs(&rb_system_of(b)?)?;
            d.prec = Some(dend.prec);
            d.succ = Some(dend.succ);
            d.declares = vec!["hom-dendriform".into()];
        }
        "prelie-from-dendriform" => {
            let dend = if b.prec.is_some() { b.dendriform()? } else { dendriform_from_rbs(&rb_system_of(b)?)? };
            let p = prelie_from_dendriform(&dend)?;
            d.prec = Some(dend.prec);
            d.succ = Some(dend.succ);
            d.diamond = Some(p.diamond);
            d.declares = vec!["hom-dendriform".into(), "hom-prelie".into()];
        }
        "star-product" => {
            let star = star_product(&rb_system_of(b)?)?;
            d = Bundle::from_algebra(&star);
            d.name = b.name.clone();
            d.declares = vec!["hom-algebra".into()];
        }
        "pseudotwistor-from-rbs" => {
            d.twistor = Some(pseudotwistor_from_rbs(&rb_system_of(b)?)?);
            d.declares = vec!["pseudotwistor".into()];
        }
        "rbs-from-weighted" => {
            let sys = rb_system_of(b)?;
            d.rb_r = Some(sys.r().clone());
            d.rb_s = Some(sys.s().clone());
            d.declares = vec!["rb-system".into()];
        }
        "rbs-from-ybp" => {
            let sys = rbs_from_ybp(&yb_pair_of(b)?)?;
            d.rb_r = Some(sys.r().clone());
            d.rb_s = Some(sys.s().clone());
            d.n_power = Some(sys.power());
            d.declares = vec!["alpha-n-rbs".into()];
        }
        "dendriform-from-alpha-n-rbs" => {
            let (r, s) = b.rb_maps()?;
            let n = b.n_power.ok_or(Error::MissingSection("n_power"))?;
            let sys = AlphaNRbSystem::new(b.algebra(), r.clone(), s.clone(), n)?;
            let dend = dendriform_from_alpha_n_rbs(&sys)?;
            let p = prelie_from_dendriform(&dend)?;
            d = Bundle::from_algebra(&b.algebra().with_alpha(dend.alpha.clone()).with_mu(dend.sum()));
            d.name = b.name.clone();
            d.prec = Some(dend.prec);
            d.succ = Some(dend.succ);
            d.diamond = Some(p.diamond);
            d.declares = vec!["hom-algebra".into(), "hom-dendriform".into(), "hom-prelie".into()];
        }
        "quasitriangular" => {
            let cov = build_quasitriangular(&yb_pair_of(b)?)?;
            d.coproduct = Some(cov.delta);
            d.delta1 = Some(cov.delta1);
            d.delta2 = Some(cov.delta2);
            d.declares = vec!["covariant-bialgebra".into()];
        }
        "quasitriangular-maps" => {
            let (r, s) = b.tensors()?;
            let maps = quasitriangular_maps(&b.algebra(), r, s)?;
            d.coproduct = Some(maps.delta);
            d.delta1 = Some(maps.delta_r);
            d.delta2 = Some(maps.delta_s);
        }
        "dualize-covariant" => {
            let cov = if b.coproduct.is_none() && b.r.is_some() {
                build_quasitriangular(&yb_pair_of(b)?)?
            } else {
                b.covariant()?
            };
            d = Bundle::from_dual(&dualize(&cov)?);
            d.name = b.name.as_ref().map(|n| format!("{n}-dual"));
            d.declares = vec!["dual-covariant".into()];
        }
        other => return Err(Error::UnknownName(other.to_string())),
    }
    Ok(d)
}

fn emit_bundle(
    b: &Bundle,
    path: Option<&Path>,
    report: &mut Report,
    out: &mut dyn Write,
    report_to_stderr: &mut bool,
) -> Result<()> {
    match path {
        Some(p) => {
            save_bundle(b, p)?;
            report.details.insert("out".into(), json!(p.display().to_string()));
        }
        None => {
            out.write_all(b.to_json_string().as_bytes())?;
            *report_to_stderr = true;
        }
    }
    Ok(())
}

fn run_derive(
    ctx: &Ctx,
    a: &DeriveArgs,
    report: &mut Report,
    labels: &mut Vec<String>,
    out: &mut dyn Write,
    report_to_stderr: &mut bool,
) -> Result<()> {
    let b = ctx.resolve(&a.bundle)?;
    *labels = b.basis.clone();
    report.details.insert("construction".into(), json!(a.construction));
    let d = derive(&a.construction, &b)?;
    for name in &d.declares {
        let r = d.run_check(name)?;
        report.checks.push(ctx.entry(&r, "postcondition", labels));
    }
    emit_bundle(&d, a.out.as_deref(), report, out, report_to_stderr)
}

fn run_theorem(ctx: &Ctx, a: &TheoremArgs, report: &mut Report, labels: &mut Vec<String>) -> Result<()> {
    let b = ctx.resolve(&a.bundle)?;
    *labels = b.basis.clone();
    report.details.insert("theorem".into(), json!(a.name));
    let outcome = theorems::verify(&a.name, &b)?;
    for h in &outcome.hypotheses {
        report.checks.push(ctx.entry(h, "hypothesis", labels));
    }
    let vacuous = outcome.vacuous();
    if !vacuous {
        for c in &outcome.conclusions {
            report.checks.push(ctx.entry(c, "conclusion", labels));
        }
    }
    report.details.extend(outcome.details);
    report.details.insert("vacuous".into(), json!(vacuous));
    Ok(())
}

fn run_search(
    ctx: &Ctx,
    a: &SearchArgs,
    report: &mut Report,
    labels: &mut Vec<String>,
    out: &mut dyn Write,
    report_to_stderr: &mut bool,
) -> Result<()> {
    let b = ctx.resolve(&a.bundle)?;
    *labels = b.basis.clone();
    let algebra = b.algebra();
    let target: SearchTarget = a.target.parse()?;
    let mut task = SearchTask::exhaustive(target, algebra.clone());
    if !a.exhaustive {
        if let Some(seed) = a.seed {
            task.mode = SearchMode::Sampled { seed, samples: a.samples };
        }
    }
    if let Some(l) = &a.lambda {
        task = task.with_lambda(b.field().parse(l)?);
    } else if let Some(l) = &b.lambda {
        task = task.with_lambda(l.clone());
    }
    let size = task.space_size()?;
    let mut lines = String::new();
    let count = enumerate_with(&task, |index, sol| {
        let mut s = sol.to_bundle(&algebra);
        s.name = Some(format!("{}-{index}", target.as_str()));
        lines.push_str(&s.to_json_line());
        lines.push('\n');
    })?;
    match &a.out {
        Some(p) => {
            fs::write(p, &lines)?;
            report.details.insert("out".into(), json!(p.display().to_string()));
        }
        None => {
            out.write_all(lines.as_bytes())?;
            *report_to_stderr = true;
        }
    }
    let mode = match task.mode {
        SearchMode::Exhaustive => json!("exhaustive"),
        SearchMode::Sampled { seed, samples } => json!({ "seed": seed, "samples": samples }),
    };
    report.details.insert("target".into(), json!(target.as_str()));
    report.details.insert("field".into(), json!(b.field().to_string()));
    report.details.insert("mode".into(), mode);
    report.details.insert("space_size".into(), Value::String(size.to_string()));
    report.details.insert("solutions".into(), json!(count));
    Ok(())
}

fn run_dualize(
    ctx: &Ctx,
    a: &DualizeArgs,
    report: &mut Report,
    labels: &mut Vec<String>,
    out: &mut dyn Write,
    report_to_stderr: &mut bool,
) -> Result<()> {
    let b = ctx.resolve(&a.bundle)?;
    *labels = b.basis.clone();
    let d = derive("dualize-covariant", &b)?;
    let r = d.run_check("dual-covariant")?;
    report.checks.push(ctx.entry(&r, "postcondition", &d.basis));
    emit_bundle(&d, a.out.as_deref(), report, out, report_to_stderr)
}

fn run_catalog(ctx: &Ctx, a: &CatalogArgs, report: &mut Report) -> Result<()> {
    match &a.name {
        Some(name) => {
            let inst = match ctx.field {
                Some(f) => catalog_over(name, f)?,
                None => catalog(name)?,
            };
            report.details.insert("name".into(), json!(inst.name));
            report.details.insert("provenance".into(), json!(inst.provenance));
            report.details.insert("bundle".into(), inst.bundle.to_value());
        }
        None => {
            let mut list = Vec::new();
            for name in CATALOG_NAMES {
                let inst = catalog(name)?;
                list.push(json!({
                    "name": inst.name,
                    "field": inst.bundle.field().to_string(),
                    "dim": inst.bundle.dim(),
                    "provenance": inst.provenance,
                }));
            }
            report.details.insert("instances".into(), Value::Array(list));
        }
    }
    Ok(())
}

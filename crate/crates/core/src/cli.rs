//! Batch front end: group and representation inputs, command dispatch and
//! JSON output.

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::characters::{molien_check, ClassFunction};
use crate::cyclo::Cyclotomic;
use crate::drinfeld::{fusion_constants, DrinfeldDouble};
use crate::error::{Error, Result};
use crate::group::{builtin, GroupContext, GroupSpec};
use crate::inertia::Orbifold;
use crate::product::{product_table, ring_property_check, RingReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[value(rename_all = "kebab-case")]
pub enum Command {
    Chartab,
    Sectors,
    ProductTable,
    Check,
    Drinfeld,
    Compare,
}

#[derive(Debug, Parser)]
#[command(name = "orbik", version, about = "Virtual orbifold K-theory of [V/G] and Drinfeld double fusion rings")]
pub struct Args {
    /// Group file (JSON, permutation generators or Cayley table)
    #[arg(long, value_name = "FILE", conflicts_with = "builtin", required_unless_present = "builtin")]
    pub group: Option<PathBuf>,
    /// Builtin group: trivial, cyclic:N, dihedral:N, symmetric:N, quaternion8 (or ZN, DN, SN, Q8)
    #[arg(long, value_name = "NAME")]
    pub builtin: Option<String>,
    /// Representation summand: zero, trivial, regular, sign, standard, perm,
    /// irrep:I, or comma-separated character values in class order
    #[arg(long = "rep", value_name = "SPEC", allow_hyphen_values = true)]
    pub reps: Vec<String>,
    #[arg(long, value_enum)]
    pub cmd: Command,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Truncation degree for Molien checks
    #[arg(long, default_value_t = 10)]
    pub degree: usize,
    /// Shuffle class representatives, transporters and transversals
    #[arg(long)]
    pub seed: Option<u64>,
    /// Human-readable product tables instead of JSON
    #[arg(long)]
    pub text: bool,
}

#[derive(Clone, Debug)]
pub enum GroupSource {
    File(PathBuf),
    Builtin(String),
}

/// A fully parsed job.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub group: GroupSource,
    pub reps: Vec<String>,
    pub command: Command,
    pub out: Option<PathBuf>,
    pub degree: usize,
    pub seed: Option<u64>,
    pub text: bool,
}

impl JobSpec {
    pub fn from_args(args: Args) -> Result<Self> {
        let group = match (args.group, args.builtin) {
            (Some(f), None) => GroupSource::File(f),
            (None, Some(b)) => GroupSource::Builtin(b),
            _ => return Err(Error::Input("give exactly one of --group and --builtin".into())),
        };
        if args.degree == 0 {
            return Err(Error::Input("--degree must be positive".into()));
        }
        Ok(JobSpec {
            group,
            reps: args.reps,
            command: args.cmd,
            out: args.out,
            degree: args.degree,
            seed: args.seed,
            text: args.text,
        })
    }
}

/// Result of a job: the artifact text and the process exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

/// Resolve one `--rep` summand against the group and its character table.
pub fn resolve_rep(ctx: &GroupContext, spec: &str) -> Result<ClassFunction> {
    let whole = ctx.whole().clone();
    let g = ctx.group();
    let spec = spec.trim();
    let perm = || -> Result<ClassFunction> {
        let degree = g
            .degree()
            .ok_or_else(|| Error::Input(format!("'{spec}' needs a permutation group")))?;
        Ok(ClassFunction::from_fn(whole.clone(), |x| {
            let p = g.permutation(x).expect("permutation group");
            Cyclotomic::from_int((0..degree).filter(|&i| p[i] as usize == i).count() as i64)
        }))
    };
    match spec {
        "zero" => Ok(ClassFunction::zero(whole)),
        "trivial" => Ok(ClassFunction::trivial(whole)),
        "regular" => Ok(ClassFunction::regular(whole)),
        "perm" => perm(),
        "standard" => {
            let chi = perm()? - ClassFunction::trivial(whole);
            chi.ensure_honest("standard representation")?;
            Ok(chi)
        }
        "sign" => {
            let irr = ClassFunction::irreducibles(&whole)?;
            match irr.get(1) {
                Some(chi) if chi.degree().is_one() => Ok(chi.clone()),
                _ => Err(Error::Input("group has no nontrivial linear character".into())),
            }
        }
        _ => {
            if let Some(i) = spec.strip_prefix("irrep:") {
                let i: usize = i
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad irreducible index in '{spec}'")))?;
                return ClassFunction::irreducible(&whole, i)
                    .map_err(|e| Error::Input(e.to_string()));
            }
            let parts: Vec<&str> = spec.split(',').collect();
            let chi = ClassFunction::parse(whole, &parts)?;
            Ok(chi)
        }
    }
}

fn load_context(job: &JobSpec) -> Result<Arc<GroupContext>> {
    let group = match &job.group {
        GroupSource::Builtin(name) => builtin(name)?,
        GroupSource::File(path) => GroupSpec::load(path)?.build()?,
    };
    Ok(Arc::new(GroupContext::with_seed(group, job.seed)))
}

fn representation(ctx: &GroupContext, reps: &[String]) -> Result<ClassFunction> {
    let mut v = ClassFunction::zero(ctx.whole().clone());
    for r in reps {
        v = v + resolve_rep(ctx, r)?;
    }
    Ok(v)
}

#[derive(Serialize)]
struct ChartabReport<'a> {
    group_order: usize,
    class_reps: Vec<usize>,
    class_sizes: &'a [usize],
    element_orders: &'a [u32],
    rows: &'a [Vec<Cyclotomic>],
}

#[derive(Serialize)]
struct MolienReport {
    degree: usize,
    sectors_checked: usize,
    passed: bool,
}

#[derive(Serialize)]
struct CheckReport {
    ring: RingReport,
    pair_sectors: usize,
    excess_honest: bool,
    excess_matches_b: bool,
    molien: MolienReport,
    passed: bool,
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn table_output(job: &JobSpec, table: &crate::product::ProductTable) -> Result<String> {
    if job.text {
        Ok(table.render_text())
    } else {
        let mut s = table.to_json();
        s.push('\n');
        Ok(s)
    }
}

/// Run a job and produce its artifact. Errors carry their own exit status.
pub fn run(job: &JobSpec) -> Result<Outcome> {
    let ctx = load_context(job)?;
    let ok = |output| Ok(Outcome { output, status: 0 });
    match job.command {
        Command::Chartab => {
            let whole = ctx.whole();
            let t = whole.character_table()?;
            ok(to_json(&ChartabReport {
                group_order: ctx.order(),
                class_reps: (0..ctx.num_classes()).map(|c| ctx.class_rep(c)).collect(),
                class_sizes: t.class_sizes(),
                element_orders: t.element_orders(),
                rows: t.rows(),
            })?)
        }
        Command::Sectors => {
            let v = representation(&ctx, &job.reps)?;
            let orb = Orbifold::new(ctx, v)?;
            ok(to_json(&orb.report()?)?)
        }
        Command::ProductTable => {
            let v = representation(&ctx, &job.reps)?;
            let orb = Orbifold::new(ctx.clone(), v)?;
            let table = product_table(&orb)?.canonicalize(&ctx)?;
            ok(table_output(job, &table)?)
        }
        Command::Drinfeld => {
            let table = fusion_constants(&ctx, job.seed)?;
            ok(table_output(job, &table)?)
        }
        Command::Check => {
            let v = representation(&ctx, &job.reps)?;
            // sector data asserts honesty and B = E_{I²}; failures surface as errors
            let orb = Orbifold::new(ctx.clone(), v.clone())?;
            let pairs = orb.all_pair_sectors()?.len();
            let table = product_table(&orb)?;
            let ring = ring_property_check(&table);
            let mut molien = true;
            for s in orb.sectors() {
                molien &= molien_check(&v, s.rep, &s.centralizer, job.degree)?;
            }
            let passed = ring.passed() && molien;
            let report = CheckReport {
                ring,
                pair_sectors: pairs,
                excess_honest: true,
                excess_matches_b: true,
                molien: MolienReport {
                    degree: job.degree,
                    sectors_checked: orb.sectors().len(),
                    passed: molien,
                },
                passed,
            };
            Ok(Outcome {
                output: to_json(&report)?,
                status: if passed { 0 } else { 3 },
            })
        }
        Command::Compare => {
            let orb = Orbifold::classifying(ctx.clone());
            let virt = product_table(&orb)?.canonicalize(&ctx)?;
            let double = DrinfeldDouble::new(ctx.clone(), job.seed)?;
            let fusion = double.fusion_constants()?.canonicalize(&ctx)?;
            let n = virt.size();
            let mismatches = virt.mismatches(&fusion);
            Ok(Outcome {
                output: format!(
                    "{n} basis elements, {} constants, {mismatches} mismatches\n",
                    n * n * n
                ),
                status: if mismatches == 0 { 0 } else { 1 },
            })
        }
    }
}

/// Parse arguments, run, write the artifact; returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return status;
        }
    };
    let result = JobSpec::from_args(args).and_then(|job| {
        let outcome = run(&job)?;
        match &job.out {
            Some(path) => std::fs::write(path, &outcome.output)?,
            None => {
                use std::io::Write;
                let mut out = std::io::stdout().lock();
                out.write_all(outcome.output.as_bytes())?;
                out.flush()?;
            }
        }
        Ok(outcome.status)
    });
    match result {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_status()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(group: &str, reps: &[&str], command: Command) -> JobSpec {
        JobSpec {
            group: GroupSource::Builtin(group.into()),
            reps: reps.iter().map(|s| s.to_string()).collect(),
            command,
            out: None,
            degree: 10,
            seed: None,
            text: false,
        }
    }

    #[test]
    fn trivial_product_table() {
        let out = run(&job("trivial", &[], Command::ProductTable)).unwrap();
        assert_eq!(
            out.output.trim(),
            r#"{"basis":[{"class":0,"rep":0,"irrep":0}],"constants":[[0,0,0,1]]}"#
        );
    }

    #[test]
    fn compare_s3() {
        let out = run(&job("S3", &["zero"], Command::Compare)).unwrap();
        assert_eq!(out.output, "8 basis elements, 512 constants, 0 mismatches\n");
        assert_eq!(out.status, 0);
    }

    #[test]
    fn rep_resolution() {
        let ctx = GroupContext::new(builtin("S3").unwrap());
        assert_eq!(resolve_rep(&ctx, "standard").unwrap().degree(), &Cyclotomic::from_int(2));
        assert_eq!(resolve_rep(&ctx, "sign").unwrap(), ClassFunction::irreducible(ctx.whole(), 1).unwrap());
        assert!(resolve_rep(&ctx, "1,1").is_err());
        assert!(matches!(resolve_rep(&ctx, "1,1,E("), Err(Error::Parse(_))));
        let q8 = GroupContext::new(builtin("Q8").unwrap());
        assert!(resolve_rep(&q8, "perm").is_err());
    }
}

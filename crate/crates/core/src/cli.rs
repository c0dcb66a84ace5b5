//! Command-line front end. Every subcommand prints one canonical JSON report.
//!
//! Exit status: 0 on success, 2 when a theorem violation was found, 1 on usage or
//! input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::catalog::{catalog_lookup, corpus, shipped_catalog};
use crate::error::{Error, Result};
use crate::formation::{
    carter_subgroups, in_npi, is_dnormal, is_dnormal_reduction, projector_report_with,
    NpiAnalysis,
};
use crate::group::{generate_group_with, Group, Limits};
use crate::hall::{
    complement_pi_bases, enumerate_hall_systems, hall_system_count_formula, is_pi_separable,
    is_pi_soluble, is_transitive,
};
use crate::io::{parse_generator_list, parse_group_file, write_report, GroupIdent, ReportDocument};
use crate::lattice::SubgroupLattice;
use crate::primes::{pi_sweep, PrimeSet};
use crate::verify::{pi_prime_soluble, verify_corpus, verify_group, Check};

#[derive(Parser, Debug)]
#[command(name = "hallstone", version, about = "Hall systems and N^π projectors of finite permutation groups")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, solubility, composition factors and π-separability.
    Info(Common),
    /// Complement π-bases, Hall π-systems, the counting formula and transitivity.
    HallSystems(Common),
    /// N^π-projectors and covering subgroups (and Carter subgroups when |π| ≤ 1).
    Projectors(Common),
    /// Tests whether the subgroup generated by `--subgroup` is N^π-Dnormal.
    Dnormal {
        #[command(flatten)]
        common: Common,
        /// Generators in cycle notation, comma separated.
        #[arg(long)]
        subgroup: String,
    },
    /// Theorem checks on one group, or on the catalog with `--corpus`.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long)]
        corpus: bool,
        /// Largest group order included in the corpus; the whole catalog when absent.
        #[arg(long)]
        corpus_max_order: Option<u64>,
    },
    /// Lists the shipped catalog entries.
    Catalog {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Catalog name, e.g. A5, S4xC5, SL(2,3).
    #[arg(long, conflicts_with = "file")]
    group: Option<String>,
    /// Group file with `degree:` and `generators:` lines.
    #[arg(long)]
    file: Option<PathBuf>,
    /// π as a list of primes, e.g. 2,3.
    #[arg(long, conflicts_with = "pi_cofinite", value_delimiter = ',')]
    pi: Option<Vec<u64>>,
    /// π as the complement of a list of primes, e.g. 2,3,5 for ℙ∖{2,3,5}.
    #[arg(long, value_delimiter = ',')]
    pi_cofinite: Option<Vec<u64>>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, env = "HALLSTONE_MAX_ORDER", default_value_t = Limits::default().max_order)]
    max_order: usize,
    #[arg(long, default_value_t = Limits::default().max_lattice)]
    max_lattice: usize,
}

impl Common {
    fn limits(&self) -> Limits {
        Limits {
            max_order: self.max_order,
            max_lattice: self.max_lattice,
        }
    }

    fn pi(&self) -> Result<Option<PrimeSet>> {
        match (&self.pi, &self.pi_cofinite) {
            (Some(list), _) => PrimeSet::finite(list.iter().copied()).map(Some),
            (_, Some(list)) => PrimeSet::cofinite(list.iter().copied()).map(Some),
            _ => Ok(None),
        }
    }

    fn require_pi(&self) -> Result<PrimeSet> {
        self.pi()?
            .ok_or_else(|| Error::Usage("this subcommand needs --pi or --pi-cofinite".into()))
    }

    fn load(&self) -> Result<(String, Group)> {
        match (&self.group, &self.file) {
            (Some(name), None) => {
                let entry = catalog_lookup(name)?;
                Ok((entry.name.clone(), entry.group_with(self.limits())?))
            }
            (None, Some(path)) => {
                let file = parse_group_file(path)?;
                let group = generate_group_with(file.degree, &file.generators, self.limits())?;
                Ok((path.display().to_string(), group))
            }
            _ => Err(Error::Usage("exactly one of --group or --file is required".into())),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// Returns whether a theorem violation was found.
fn execute(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Info(common) => {
            let (name, group) = common.load()?;
            let pi = common.pi()?;
            let whole = group.whole();
            let mut results = json!({
                "order": whole.order(),
                "soluble": whole.is_soluble(),
                "nilpotent": whole.is_nilpotent(),
                "abelian": whole.is_abelian(),
                "composition_factors": whole.composition_factors(),
            });
            if let Some(pi) = &pi {
                results["pi_separable"] = json!(is_pi_separable(&whole, pi));
                results["pi_soluble"] = json!(is_pi_soluble(&whole, pi));
                results["pi_prime_soluble"] = json!(pi_prime_soluble(&whole, pi));
                results["in_npi"] = json!(in_npi(&whole, pi).member);
            }
            emit(&common, &name, &group, pi, results)?;
            Ok(false)
        }
        Command::HallSystems(common) => {
            let (name, group) = common.load()?;
            let pi = common.require_pi()?;
            let whole = group.whole();
            let bases = complement_pi_bases(&whole, &pi);
            let enumeration = enumerate_hall_systems(&whole, &pi);
            let formula = bases.first().map(|b| hall_system_count_formula(&whole, b));
            let failures: Vec<_> = enumeration
                .failures
                .iter()
                .map(|f| json!({"basis": f.basis.members(), "reason": f.reason}))
                .collect();
            let results = json!({
                "basis_count": bases.len(),
                "system_count": enumeration.systems.len(),
                "count_formula": formula,
                "transitive": is_transitive(&whole, &enumeration.systems),
                "pi_separable": is_pi_separable(&whole, &pi),
                "systems": enumeration.systems,
                "failures": failures,
            });
            emit(&common, &name, &group, Some(pi), results)?;
            Ok(false)
        }
        Command::Projectors(common) => {
            let (name, group) = common.load()?;
            let pi = common.require_pi()?;
            let lattice = SubgroupLattice::new(&group)?;
            let analysis = NpiAnalysis::new(&lattice, &pi);
            let report = projector_report_with(&analysis);
            let hypothesis = pi_prime_soluble(&group.whole(), &pi);
            let conclusion = report.nonempty && report.equal_sets && report.single_class;
            let mut results = json!({
                "projectors": report.projectors,
                "covering": report.covering,
                "classes": report.classes,
                "nonempty": report.nonempty,
                "equal_sets": report.equal_sets,
                "single_class": report.single_class,
                "hypothesis": hypothesis,
                "conclusion": conclusion,
            });
            if !pi.has_at_least_two() {
                results["carter"] = json!(carter_subgroups(&lattice));
            }
            emit(&common, &name, &group, Some(pi), results)?;
            Ok(hypothesis && !conclusion)
        }
        Command::Dnormal { common, subgroup } => {
            let (name, group) = common.load()?;
            let pi = common.require_pi()?;
            let gens = parse_generator_list(&subgroup, group.degree())?;
            let h = group.subgroup_from(&gens)?;
            let whole = group.whole();
            let characterised = is_dnormal(&whole, &h, &pi);
            let reduction = is_dnormal_reduction(&whole, &h, &pi);
            let mut results = json!({
                "subgroup": h,
                "order": h.order(),
                "normal": whole.has_normal(&h),
                "dnormal": characterised,
                "dnormal_reduction": reduction,
                "in_npi": in_npi(&h, &pi).member,
            });
            if let Ok(lattice) = SubgroupLattice::new(&group) {
                let analysis = NpiAnalysis::new(&lattice, &pi);
                let (w, id) = (lattice.whole_id(), lattice.id(&h));
                results["self_dnormalizing"] = json!(analysis.self_dnormalizing(w, id));
                results["star"] = json!(analysis.star(w, id)?);
            }
            emit(&common, &name, &group, Some(pi), results)?;
            Ok(characterised != reduction)
        }
        Command::Verify {
            common,
            check,
            corpus: use_corpus,
            corpus_max_order,
        } => {
            let checks = if check == "all" {
                Check::ALL.to_vec()
            } else {
                check
                    .split(',')
                    .map(|c| c.trim().parse())
                    .collect::<Result<Vec<Check>>>()?
            };
            if use_corpus {
                let entries = corpus(corpus_max_order.unwrap_or(u64::MAX));
                let report = verify_corpus(&entries, &checks, common.limits(), common.jobs)?;
                let violated = report.violations > 0;
                let doc = ReportDocument::new(None, None, report)?;
                output(&common, &doc)?;
                return Ok(violated);
            }
            let (name, group) = common.load()?;
            let whole = group.whole();
            let lattice = if checks.iter().any(|c| c.needs_lattice()) {
                Some(SubgroupLattice::new(&group)?)
            } else {
                None
            };
            let pi = common.pi()?;
            let sweep = match &pi {
                Some(p) => vec![p.clone()],
                None => pi_sweep(whole.order() as u64),
            };
            let mut reports = Vec::new();
            for p in &sweep {
                reports.extend(verify_group(&whole, lattice.as_ref(), &name, p, &checks)?);
            }
            let violated = reports.iter().any(|r| r.violation);
            emit(&common, &name, &group, pi, json!({ "reports": reports }))?;
            Ok(violated)
        }
        Command::Catalog { out } => {
            let entries: Vec<_> = shipped_catalog()
                .into_iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "degree": e.degree,
                        "order": e.expected_order,
                        "generators": e.generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "tags": e.tags,
                    })
                })
                .collect();
            let doc = ReportDocument::new(None, None, json!({ "entries": entries }))?;
            match out {
                Some(path) => write_report(&doc, path)?,
                None => print!("{}", doc.to_canonical_json()?),
            }
            Ok(false)
        }
    }
}

fn emit(
    common: &Common,
    name: &str,
    group: &Group,
    pi: Option<PrimeSet>,
    results: serde_json::Value,
) -> Result<()> {
    let doc = ReportDocument::new(Some(GroupIdent::new(name, group)), pi, results)?;
    output(common, &doc)
}

fn output(common: &Common, doc: &ReportDocument) -> Result<()> {
    match &common.out {
        Some(path) => write_report(doc, path),
        None => {
            print!("{}", doc.to_canonical_json()?);
            Ok(())
        }
    }
}

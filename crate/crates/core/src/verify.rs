//! Theorem verifiers producing uniform reports, and the catalog × π-sweep driver.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::formation::{projector_report_with, NpiAnalysis};
use crate::group::{Limits, Subgroup};
use crate::hall::{du_equivalence, dpi_implies_separable_check, is_pi_soluble};
use crate::lattice::SubgroupLattice;
use crate::primes::{pi_sweep, PrimeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Theorem1,
    Theorem2,
    Du,
    DPiImplication,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Theorem1, Check::Theorem2, Check::Du, Check::DPiImplication];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Theorem2 => "theorem2",
            Check::Du => "du",
            Check::DPiImplication => "d-pi-implication",
        }
    }

    /// Whether the check needs the full subgroup lattice.
    pub fn needs_lattice(self) -> bool {
        matches!(self, Check::Theorem1 | Check::Theorem2)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown check {s:?}")))
    }
}

/// One (check, group, π) evaluation. A violation is a true hypothesis with a false
/// conclusion.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: Check,
    pub group: String,
    pub pi: PrimeSet,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub violation: bool,
    pub flags: BTreeMap<String, bool>,
    pub counts: BTreeMap<String, u64>,
    pub witnesses: BTreeMap<String, Vec<Subgroup>>,
}

impl VerificationReport {
    fn new(check: Check, group: &str, pi: &PrimeSet, hypothesis: bool, conclusion: bool) -> Self {
        VerificationReport {
            check,
            group: group.to_string(),
            pi: pi.clone(),
            hypothesis,
            conclusion,
            violation: hypothesis && !conclusion,
            flags: BTreeMap::new(),
            counts: BTreeMap::new(),
            witnesses: BTreeMap::new(),
        }
    }

    fn flag(&mut self, key: &str, value: bool) {
        self.flags.insert(key.to_string(), value);
    }

    fn count(&mut self, key: &str, value: usize) {
        self.counts.insert(key.to_string(), value as u64);
    }

    fn witness(&mut self, key: &str, list: Vec<Subgroup>) {
        self.witnesses.insert(key.to_string(), list);
    }
}

/// π′-solubility, the hypothesis of both projector theorems.
pub fn pi_prime_soluble(ambient: &Subgroup, pi: &PrimeSet) -> bool {
    is_pi_soluble(ambient, &pi.complement())
}

/// Projectors exist, coincide with covering subgroups and form one conjugacy class.
pub fn verify_theorem1(lattice: &SubgroupLattice, name: &str, pi: &PrimeSet) -> VerificationReport {
    theorem1_with(&NpiAnalysis::new(lattice, pi), name)
}

fn theorem1_with(analysis: &NpiAnalysis<'_>, name: &str) -> VerificationReport {
    let lattice = analysis.lattice();
    let pi = analysis.pi();
    let whole = lattice.get(lattice.whole_id());
    let hypothesis = pi_prime_soluble(whole, pi);
    let projectors = projector_report_with(analysis);
    let conclusion = projectors.nonempty && projectors.equal_sets && projectors.single_class;
    let mut report = VerificationReport::new(Check::Theorem1, name, pi, hypothesis, conclusion);
    report.flag("nonempty", projectors.nonempty);
    report.flag("equal_sets", projectors.equal_sets);
    report.flag("single_class", projectors.single_class);
    report.count("projectors", projectors.projectors.len());
    report.count("covering", projectors.covering.len());
    report.count("classes", projectors.classes.len());
    report.witness("projectors", projectors.projectors);
    report.witness("covering", projectors.covering);
    report
}

/// For every subgroup `H`: projector ⇔ covering subgroup ⇔ (`H ∈ N^π`, self-Dnormalizing,
/// and property (*)). Also checks that projectors are self-Dnormalizing, that
/// self-Dnormalizing members are `N^π`-maximal, and that projectors satisfy (*).
pub fn verify_theorem2(lattice: &SubgroupLattice, name: &str, pi: &PrimeSet) -> Result<VerificationReport> {
    theorem2_with(&NpiAnalysis::new(lattice, pi), name)
}

fn theorem2_with(analysis: &NpiAnalysis<'_>, name: &str) -> Result<VerificationReport> {
    let lattice = analysis.lattice();
    let pi = analysis.pi();
    let whole_id = lattice.whole_id();
    let whole = lattice.get(whole_id);
    let hypothesis = pi_prime_soluble(whole, pi);

    let projectors = analysis.projectors_of(whole_id).to_vec();
    let covering = analysis.covering_of(whole_id);
    let maximal = analysis.maximal_members(whole_id);
    let mut characterised = Vec::new();
    let mut self_dnormalizing_members = Vec::new();
    for h in 0..lattice.len() {
        if !analysis.is_member(h) || !analysis.self_dnormalizing(whole_id, h) {
            continue;
        }
        self_dnormalizing_members.push(h);
        if analysis.star(whole_id, h)? {
            characterised.push(h);
        }
    }
    let self_dnormalizing = projectors
        .iter()
        .all(|&h| self_dnormalizing_members.contains(&h));
    let members_maximal = self_dnormalizing_members.iter().all(|h| maximal.contains(h));
    let mut star = true;
    for &h in &projectors {
        star &= analysis.star(whole_id, h)?;
    }
    let proj_cov = projectors == covering;
    let cov_char = covering == characterised;
    let conclusion = proj_cov && cov_char && self_dnormalizing && members_maximal && star;

    let mut report = VerificationReport::new(Check::Theorem2, name, pi, hypothesis, conclusion);
    report.flag("projectors_eq_covering", proj_cov);
    report.flag("covering_eq_characterised", cov_char);
    report.flag("projectors_self_dnormalizing", self_dnormalizing);
    report.flag("self_dnormalizing_members_maximal", members_maximal);
    report.flag("projectors_star", star);
    report.count("projectors", projectors.len());
    report.count("covering", covering.len());
    report.count("characterised", characterised.len());
    report.count("subgroups", lattice.len());
    let take = |ids: &[usize]| ids.iter().map(|&i| lattice.get(i).clone()).collect();
    report.witness("projectors", take(&projectors));
    report.witness("covering", take(&covering));
    report.witness("characterised", take(&characterised));
    Ok(report)
}

/// The three conditions of Du's characterisation agree.
pub fn verify_du(ambient: &Subgroup, name: &str, pi: &PrimeSet) -> VerificationReport {
    let du = du_equivalence(ambient, pi);
    let mut report = VerificationReport::new(Check::Du, name, pi, true, du.consistent);
    report.flag("separable", du.separable);
    report.flag("cond_ii", du.cond_ii);
    report.flag("cond_iii", du.cond_iii);
    report
}

/// `2 ∈ π`, a complement π-basis and `D_π` force π-separability.
pub fn verify_dpi(ambient: &Subgroup, name: &str, pi: &PrimeSet) -> VerificationReport {
    let d = dpi_implies_separable_check(ambient, pi);
    let mut report = VerificationReport::new(Check::DPiImplication, name, pi, d.hypothesis, d.conclusion);
    report.flag("two_in_pi", d.two_in_pi);
    report.flag("basis_exists", d.basis_exists);
    report.flag("d_pi", d.d_pi);
    report
}

/// Runs `checks` on one group for each π. The lattice is needed only for the
/// theorem checks.
pub fn verify_group(
    ambient: &Subgroup,
    lattice: Option<&SubgroupLattice>,
    name: &str,
    pi: &PrimeSet,
    checks: &[Check],
) -> Result<Vec<VerificationReport>> {
    let analysis = lattice.map(|l| NpiAnalysis::new(l, pi));
    let mut out = Vec::new();
    for &check in checks {
        let report = match check {
            Check::Theorem1 | Check::Theorem2 => {
                let Some(analysis) = analysis.as_ref() else {
                    return Err(Error::LatticeTooLarge {
                        order: ambient.order(),
                        cap: ambient.group().limits().max_lattice,
                    });
                };
                if check == Check::Theorem1 {
                    theorem1_with(analysis, name)
                } else {
                    theorem2_with(analysis, name)?
                }
            }
            Check::Du => verify_du(ambient, name, pi),
            Check::DPiImplication => verify_dpi(ambient, name, pi),
        };
        out.push(report);
    }
    Ok(out)
}

/// Results of a corpus run, in catalog order, then π-sweep order, then check order.
#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub groups: Vec<String>,
    pub tasks: u64,
    pub violations: u64,
    pub reports: Vec<VerificationReport>,
}

/// Verifies every entry against every π of its sweep. Tasks run in parallel on
/// `jobs` threads (all cores when `None`); the output order does not depend on it.
pub fn verify_corpus(
    entries: &[CatalogEntry],
    checks: &[Check],
    limits: Limits,
    jobs: Option<usize>,
) -> Result<CorpusReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    pool.install(|| {
        let lattice_needed = checks.iter().any(|c| c.needs_lattice());
        let prepared = entries
            .par_iter()
            .map(|entry| {
                let group = entry.group_with(limits)?;
                let lattice = if lattice_needed {
                    Some(SubgroupLattice::new(&group)?)
                } else {
                    None
                };
                Ok((entry, group.whole(), lattice))
            })
            .collect::<Result<Vec<_>>>()?;
        let tasks: Vec<(usize, PrimeSet)> = prepared
            .iter()
            .enumerate()
            .flat_map(|(i, (_, whole, _))| {
                pi_sweep(whole.order() as u64).into_iter().map(move |pi| (i, pi))
            })
            .collect();
        let results = tasks
            .par_iter()
            .map(|(i, pi)| {
                let (entry, whole, lattice) = &prepared[*i];
                verify_group(whole, lattice.as_ref(), &entry.name, pi, checks)
            })
            .collect::<Result<Vec<_>>>()?;
        let reports: Vec<VerificationReport> = results.into_iter().flatten().collect();
        Ok(CorpusReport {
            groups: entries.iter().map(|e| e.name.clone()).collect(),
            tasks: tasks.len() as u64,
            violations: reports.iter().filter(|r| r.violation).count() as u64,
            reports,
        })
    })
}

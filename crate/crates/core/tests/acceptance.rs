mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use hallstone::catalog::{corpus, shipped_catalog, CatalogEntry};
use hallstone::formation::{carter_subgroups, is_dnormal, is_dnormal_reduction_with, projectors, sylow_table};
use hallstone::hall::*;
use hallstone::lattice::{normal_subgroups, SubgroupLattice};
use hallstone::primes::pi_sweep;
use hallstone::verify::{verify_corpus, Check};
use hallstone::{quotient_group, Limits, PrimeSet, Subgroup};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let spent = start.elapsed();
    if spent < limit {
        Ok(format!("{:.2?}", spent))
    } else {
        Err(format!("took {spent:.2?}, limit {limit:?}"))
    }
}

fn whole_catalog() -> Vec<(CatalogEntry, Subgroup)> {
    shipped_catalog()
        .into_iter()
        .map(|e| {
            let g = e.group().unwrap().whole();
            (e, g)
        })
        .collect()
}

fn a5_suite() -> Outcome {
    let start = Instant::now();
    let a5 = group("A5").whole();
    let pi = PrimeSet::of(&[2, 3]);
    ensure!(!is_pi_separable(&a5, &pi), "A5 is {{2,3}}-separable");
    let bases = complement_pi_bases(&a5, &pi).len();
    ensure!(bases == 30, "{bases} complement bases");
    let systems = enumerate_hall_systems(&a5, &pi).systems.len();
    ensure!(systems == 30, "{systems} Hall systems");
    ensure!(orbit_is_all(&a5, &pi), "action on systems is not transitive");
    ensure!(!satisfies_d(&a5, &pi), "A5 satisfies D_{{2,3}}");
    within(start, Duration::from_secs(5))
}

fn a5_projector_suite() -> Outcome {
    let start = Instant::now();
    let g = group("A5");
    let lattice = SubgroupLattice::new(&g).unwrap();
    let pi = PrimeSet::all_but(&[2, 3, 5]);
    let found = projectors(&lattice, &pi);
    let covering = hallstone::formation::covering_subgroups(&lattice, &pi);
    let timing = within(start, Duration::from_secs(10))?;
    let mut sylows: Vec<Subgroup> = [2, 3, 5].iter().flat_map(|&p| sylow_subgroups(&g.whole(), p)).collect();
    sylows.sort();
    ensure!(found == sylows, "{} projectors, {} Sylow subgroups", found.len(), sylows.len());
    ensure!(found.len() == 21, "{} projectors", found.len());
    let whole = set_of(&g.whole());
    let classes = class_count(&whole, &sets(&found));
    ensure!(classes == 3, "{classes} classes");
    ensure!(covering.is_empty(), "{} covering subgroups", covering.len());
    Ok(timing)
}

fn theorem_corpus() -> Outcome {
    let start = Instant::now();
    let entries: Vec<CatalogEntry> = corpus(120).into_iter().filter(|e| e.tags.soluble).collect();
    let report = verify_corpus(&entries, &[Check::Theorem1, Check::Theorem2], Limits::default(), None)
        .map_err(|e| e.to_string())?;
    for r in &report.reports {
        ensure!(r.hypothesis && r.conclusion, "{} {} on {} {}", r.check, r.hypothesis, r.group, r.pi);
    }
    ensure!(report.violations == 0, "{} violations", report.violations);
    let timing = within(start, Duration::from_secs(600))?;
    Ok(format!("{} groups, {} reports, {timing}", entries.len(), report.reports.len()))
}

fn dnormal_equivalence() -> Outcome {
    let mut triples = 0usize;
    for entry in corpus(60) {
        let g = entry.group().unwrap();
        let whole = g.whole();
        let lattice = SubgroupLattice::new(&g).unwrap();
        let sylows = sylow_table(&whole);
        for pi in pi_sweep(g.order() as u64) {
            for h in lattice.subgroups() {
                let a = is_dnormal(&whole, h, &pi);
                let b = is_dnormal_reduction_with(&whole, h, &pi, &sylows);
                ensure!(a == b, "{} {pi} disagree on a subgroup of order {}", entry.name, h.order());
                triples += 1;
            }
        }
    }
    Ok(format!("{triples} triples"))
}

fn separable_with_two() -> impl Iterator<Item = (String, Subgroup, PrimeSet)> {
    whole_catalog().into_iter().flat_map(|(e, g)| {
        pi_sweep(g.order() as u64)
            .into_iter()
            .filter(|pi| pi.contains(2))
            .filter(|pi| is_pi_separable(&g, pi))
            .map(|pi| (e.name.clone(), g.clone(), pi))
            .collect::<Vec<_>>()
    })
}

fn counting_formula() -> Outcome {
    let s4 = group("S4").whole();
    let n = enumerate_hall_systems(&s4, &PrimeSet::of(&[2])).systems.len();
    ensure!(n == 12, "S4 with {{2}} has {n} systems");
    let mut cases = 0;
    for (name, g, pi) in separable_with_two() {
        let Some(basis) = complement_pi_bases(&g, &pi).into_iter().next() else {
            return Err(format!("{name} {pi} has no complement basis"));
        };
        let whole = set_of(&g);
        let product: usize = basis
            .members()
            .into_iter()
            .map(|s| whole.len() / normalizer(&whole, &set_of(s)).len())
            .product();
        let enumerated = enumerate_hall_systems(&g, &pi).systems.len();
        ensure!(enumerated == product, "{name} {pi}: {enumerated} systems, formula {product}");
        cases += 1;
    }
    Ok(format!("{cases} (group, π) cases"))
}

fn bijections() -> Outcome {
    let mut systems = 0;
    for (e, g) in whole_catalog() {
        for pi in pi_sweep(g.order() as u64).into_iter().filter(|pi| pi.contains(2)) {
            for sys in enumerate_hall_systems(&g, &pi).systems {
                let basis = sys.complement_basis(&g);
                let back = hall_system_from_basis(&g, &basis).map_err(|x| x.to_string())?;
                ensure!(back == sys, "{} {pi}: basis round trip", e.name);
                let sylow = sylow_basis_of_system(&g, &sys);
                sylow.validate(&g).map_err(|x| x.to_string())?;
                let again = system_from_sylow_basis(&g, &sylow).map_err(|x| x.to_string())?;
                ensure!(again == sys, "{} {pi}: Sylow basis round trip", e.name);
                ensure!(
                    sylow_basis_of_system(&g, &again) == sylow,
                    "{} {pi}: Sylow basis not recovered",
                    e.name
                );
                systems += 1;
            }
        }
    }
    Ok(format!("{systems} systems"))
}

fn carter_specialisation() -> Outcome {
    let lattice_of = |name: &str| SubgroupLattice::new(&group(name)).unwrap();
    let s4 = carter_subgroups(&lattice_of("S4"));
    ensure!(s4.len() == 3 && s4.iter().all(|h| h.order() == 8), "S4 Carter subgroups wrong");
    let sl = lattice_of("SL(2,3)");
    let c = carter_subgroups(&sl);
    ensure!(c.len() == 4 && c.iter().all(|h| h.order() == 6), "SL(2,3) Carter subgroups wrong");
    let classes: std::collections::BTreeSet<usize> = c.iter().map(|h| sl.class_of(sl.id(h))).collect();
    ensure!(classes.len() == 1, "SL(2,3) Carter subgroups in {} classes", classes.len());
    ensure!(carter_subgroups(&lattice_of("A5")).is_empty(), "A5 has Carter subgroups");
    let empty = PrimeSet::of(&[]);
    let mut groups = 0;
    for entry in shipped_catalog().into_iter().filter(|e| e.tags.soluble) {
        let g = entry.group().unwrap();
        let lattice = SubgroupLattice::new(&g).unwrap();
        let whole = set_of(&g.whole());
        let found = carter_subgroups(&lattice);
        ensure!(found == projectors(&lattice, &empty), "{}: Carter ≠ nilpotent projectors", entry.name);
        let oracle: Vec<_> = lattice
            .subgroups()
            .iter()
            .map(set_of)
            .filter(|h| is_nilpotent(h) && normalizer(&whole, h) == *h)
            .collect();
        ensure!(sorted(sets(&found)) == sorted(oracle), "{}: Carter oracle differs", entry.name);
        groups += 1;
    }
    Ok(format!("{groups} soluble groups"))
}

fn du_consistency() -> Outcome {
    let entries = corpus(120);
    ensure!(
        ["A5", "S5"].iter().all(|n| entries.iter().any(|e| e.name == *n)),
        "corpus lacks A5 or S5"
    );
    let mut cases = 0;
    for entry in entries {
        let g = entry.group().unwrap().whole();
        for pi in pi_sweep(g.order() as u64) {
            let r = du_equivalence(&g, &pi);
            ensure!(r.consistent, "{} {pi}: {r:?}", entry.name);
            cases += 1;
        }
    }
    Ok(format!("{cases} (group, π) cases"))
}

fn heredity() -> Outcome {
    let mut checks = 0;
    for (name, g, pi) in separable_with_two() {
        let normals = normal_subgroups(&g);
        for sys in enumerate_hall_systems(&g, &pi).systems {
            for k in &normals {
                let q = quotient_group(&g, k).map_err(|e| e.to_string())?;
                let images = sys
                    .members
                    .iter()
                    .map(|(rho, s)| (rho.clone(), q.image_subgroup(s)))
                    .collect();
                check_hall_family(&q.group().whole(), &images)
                    .map_err(|e| format!("{name} {pi} quotient of order {}: {e}", q.group().order()))?;
                let meets = sys
                    .members
                    .iter()
                    .map(|(rho, s)| (rho.clone(), s.intersection(k)))
                    .collect();
                check_hall_family(k, &meets)
                    .map_err(|e| format!("{name} {pi} normal subgroup of order {}: {e}", k.order()))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} (system, K) pairs"))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = |file: &str| -> Result<Vec<u8>, String> {
        let path = dir.path().join(file);
        let status = Command::new(env!("CARGO_BIN_EXE_hallstone"))
            .args(["verify", "--corpus", "--out"])
            .arg(&path)
            .env_remove("HALLSTONE_MAX_ORDER")
            .status()
            .map_err(|e| e.to_string())?;
        ensure!(status.code() == Some(0), "verify --corpus exited with {status}");
        std::fs::read(&path).map_err(|e| e.to_string())
    };
    let a = run("first.json")?;
    let b = run("second.json")?;
    ensure!(a == b, "reports differ");
    Ok(format!("{} bytes", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("A5 counterexample suite", a5_suite),
        ("A5 projector suite", a5_projector_suite),
        ("projector theorems on the soluble corpus", theorem_corpus),
        ("Dnormality equivalence", dnormal_equivalence),
        ("Hall system counting formula", counting_formula),
        ("basis and system bijections", bijections),
        ("Carter specialisation", carter_specialisation),
        ("Du equivalence", du_consistency),
        ("heredity under quotients and intersections", heredity),
        ("corpus report determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(criterion))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Reads a group file, runs the verifiers and writes a canonical JSON report.
use hallstone::io::{format_group_file, parse_group_text, GroupIdent, ReportDocument};
use hallstone::verify::{verify_group, Check};
use hallstone::{all_subgroups, generate_group, PrimeSet};

fn main() -> hallstone::Result<()> {
    let text = "# the symmetric group on four points\ndegree: 4\ngenerators: (1 2 3 4), (1 2)\n";
    let file = parse_group_text(text)?;
    print!("{}", format_group_file(file.degree, &file.generators));
    let g = generate_group(file.degree, &file.generators)?;
    let lattice = all_subgroups(&g)?;
    let pi = PrimeSet::of(&[2]);
    let reports = verify_group(&g.whole(), Some(&lattice), "S4", &pi, &Check::ALL)?;
    for r in &reports {
        println!("{:<18} hypothesis {:<5} conclusion {}", r.check.to_string(), r.hypothesis, r.conclusion);
    }
    let doc = ReportDocument::new(Some(GroupIdent::new("S4", &g)), Some(pi), &reports)?;
    let json = doc.to_canonical_json()?;
    println!("{} bytes of canonical JSON", json.len());
    Ok(())
}

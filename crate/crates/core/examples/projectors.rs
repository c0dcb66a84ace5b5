//! N^π-projectors and covering subgroups, including the insoluble A5 case.
use hallstone::formation::projector_report;
use hallstone::{all_subgroups, catalog_lookup, npi_residual, PrimeSet};

fn show(name: &str, pi: PrimeSet) -> hallstone::Result<()> {
    let g = catalog_lookup(name)?.group()?;
    let lattice = all_subgroups(&g)?;
    let report = projector_report(&lattice, &pi);
    let residual = npi_residual(&g.whole(), &pi)?;
    println!("{name}, π = {pi}: residual of order {}", residual.order());
    for class in &report.classes {
        println!("  projector class: {} of order {}", class.len(), class[0].order());
    }
    println!(
        "  covering subgroups: {}, equal to projectors: {}, single class: {}",
        report.covering.len(),
        report.equal_sets,
        report.single_class
    );
    Ok(())
}

fn main() -> hallstone::Result<()> {
    show("S4", PrimeSet::of(&[2, 5]))?;
    show("SL(2,3)", PrimeSet::of(&[3]))?;
    show("A5", PrimeSet::all_but(&[2, 3, 5]))
}

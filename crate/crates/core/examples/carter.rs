//! Carter subgroups as nilpotent projectors.
use hallstone::{all_subgroups, carter_subgroups, catalog_lookup, projectors, PrimeSet};

fn main() -> hallstone::Result<()> {
    for name in ["S3", "A4", "S4", "SL(2,3)", "S3xS3", "A5"] {
        let lattice = all_subgroups(&catalog_lookup(name)?.group()?)?;
        let carter = carter_subgroups(&lattice);
        let orders: Vec<usize> = carter.iter().map(|h| h.order()).collect();
        let nilpotent_projectors = projectors(&lattice, &PrimeSet::of(&[]));
        println!(
            "{name:<8} Carter subgroup orders {orders:?}, equal to nilpotent projectors: {}",
            carter == nilpotent_projectors
        );
    }
    Ok(())
}

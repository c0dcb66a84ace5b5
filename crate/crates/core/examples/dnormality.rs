//! Dnormality in both of its forms, and self-Dnormalizing subgroups.
use hallstone::formation::{is_dnormal_reduction, star_property};
use hallstone::{all_subgroups, catalog_lookup, is_dnormal, is_self_dnormalizing, PrimeSet};

fn main() -> hallstone::Result<()> {
    let g = catalog_lookup("S4")?.group()?;
    let whole = g.whole();
    let lattice = all_subgroups(&g)?;
    for primes in [&[2, 5][..], &[2, 3], &[3]] {
        let pi = PrimeSet::of(primes);
        println!("S4, π = {pi}");
        for class in lattice.classes() {
            let h = lattice.get(class.representative);
            println!(
                "  order {:>2}: Dnormal {:<5} by reduction {:<5} self-Dnormalizing {:<5} star {}",
                h.order(),
                is_dnormal(&whole, h, &pi),
                is_dnormal_reduction(&whole, h, &pi),
                is_self_dnormalizing(&lattice, h, &pi)?,
                star_property(&lattice, h, &pi)?,
            );
        }
    }
    Ok(())
}

//! Complement bases, the Hall systems they generate, and the conjugation action on them.
use hallstone::hall::{
    hall_system_count_formula, is_transitive, satisfies_d, sylow_basis_of_system,
};
use hallstone::{catalog_lookup, complement_pi_bases, enumerate_hall_systems, is_pi_separable, PrimeSet};

fn show(name: &str, primes: &[u64]) -> hallstone::Result<()> {
    let g = catalog_lookup(name)?.group()?.whole();
    let pi = PrimeSet::of(primes);
    let bases = complement_pi_bases(&g, &pi);
    let systems = enumerate_hall_systems(&g, &pi).systems;
    println!("{name}, π = {pi}");
    println!("  π-separable: {}, D_π: {}", is_pi_separable(&g, &pi), satisfies_d(&g, &pi));
    println!("  complement bases: {}, Hall systems: {}", bases.len(), systems.len());
    if let Some(basis) = bases.first() {
        println!("  normalizer-index formula: {}", hall_system_count_formula(&g, basis));
    }
    println!("  transitive: {}", is_transitive(&g, &systems));
    if let Some(system) = systems.first() {
        for (rho, member) in &system.members {
            println!("  G_{rho} has order {}", member.order());
        }
        let basis = sylow_basis_of_system(&g, system);
        let sylows: Vec<usize> = basis.sylows.values().map(|s| s.order()).collect();
        println!("  Sylow basis: Hall π of order {}, Sylows {sylows:?}", basis.hall_pi.order());
    }
    Ok(())
}

fn main() -> hallstone::Result<()> {
    show("S4", &[2])?;
    show("A5", &[2, 3])?;
    show("C2xS4", &[2, 5])
}

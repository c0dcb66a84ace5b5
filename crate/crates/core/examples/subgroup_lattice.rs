//! Enumerates every subgroup of a group and lists its conjugacy classes.
use hallstone::lattice::{maximal_normal_subgroups, normal_subgroups};
use hallstone::{all_subgroups, catalog_lookup};

fn main() -> hallstone::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".into());
    let g = catalog_lookup(&name)?.group()?;
    let lattice = all_subgroups(&g)?;
    println!("{name}: {} subgroups in {} classes", lattice.len(), lattice.classes().len());
    for class in lattice.classes() {
        let rep = lattice.get(class.representative);
        let normal = if g.whole().has_normal(rep) { " normal" } else { "" };
        println!("  order {:>3} x{}{normal}", rep.order(), class.members.len());
    }
    let normals: Vec<usize> = normal_subgroups(&g.whole()).iter().map(|n| n.order()).collect();
    println!("normal subgroup orders: {normals:?}");
    let maximal: Vec<usize> = maximal_normal_subgroups(&g.whole()).iter().map(|n| n.order()).collect();
    println!("maximal normal subgroup orders: {maximal:?}");
    Ok(())
}

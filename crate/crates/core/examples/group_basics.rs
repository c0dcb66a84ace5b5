//! Builds groups from cycle notation and from the catalog, then inspects them.
use hallstone::{catalog_lookup, generate_group, quotient_group, Permutation, PrimeSet};

fn main() -> hallstone::Result<()> {
    let a = Permutation::parse("(1 2 3 4 5)", 5)?;
    let b = Permutation::parse("(1 2 3)", 5)?;
    let a5 = generate_group(5, &[a.clone(), b.clone()])?;
    println!("<{a}, {b}> has order {}", a5.order());
    println!("ab = {}, order {}", a.compose(&b), a.compose(&b).order());

    let s4 = catalog_lookup("S4")?.group()?;
    let whole = s4.whole();
    let series: Vec<usize> = whole.derived_series().iter().map(|h| h.order()).collect();
    println!("S4 derived series orders: {series:?}");
    let factors: Vec<u64> = whole.composition_factors().iter().map(|f| f.order).collect();
    println!("S4 composition factors: {factors:?}");

    let pi = PrimeSet::of(&[2]);
    println!("O_2(S4) has order {}", whole.core_o_pi(&pi).order());
    println!("O^2(S4) has order {}", whole.residual_o_pi(&pi).order());

    let v4 = whole.core_o_pi(&pi);
    let q = quotient_group(&whole, &v4)?;
    println!("S4/V4 has order {} acting on {} cosets", q.group().order(), q.group().degree());
    Ok(())
}

//! Compares π-separability with the two Hall-existence conditions across the catalog.
use hallstone::catalog::corpus;
use hallstone::hall::{dpi_implies_separable_check, du_equivalence};
use hallstone::primes::pi_sweep;

fn main() -> hallstone::Result<()> {
    for entry in corpus(120) {
        let g = entry.group()?.whole();
        for pi in pi_sweep(g.order() as u64) {
            let du = du_equivalence(&g, &pi);
            let dpi = dpi_implies_separable_check(&g, &pi);
            if !du.separable || !du.consistent || dpi.violation {
                println!(
                    "{:<8} π = {:<12} separable {:<5} (ii) {:<5} (iii) {:<5} D_π {}",
                    entry.name, pi.to_string(), du.separable, du.cond_ii, du.cond_iii, dpi.d_pi
                );
            }
        }
    }
    Ok(())
}

//! Enumerating a permutation group and exploring its subgroups.
//!
//! cargo run --release --example permutation_groups

use group_spectra::group::{center, generate, index2_subgroups, normalizer, quotient_spectrum, sylow_subgroup};
use group_spectra::perm::parse_perm;
use group_spectra::spectrum::format_ratio;
use group_spectra::Result;

fn main() -> Result<()> {
    // S4 x C2 on 6 points
    let gens = [parse_perm("(1,2,3,4)", 6)?, parse_perm("(1,2)", 6)?, parse_perm("(5,6)", 6)?];
    let g = generate(&gens, 1_000)?.with_label("S4 x C2");
    println!("{} has {} elements", g.label(), g.order());
    for (d, c) in g.spectrum().iter() {
        println!("  {c} elements of order {d}");
    }

    for p in [2, 3] {
        let s = sylow_subgroup(&g, p)?;
        let n = normalizer(&g, &s)?;
        println!("Sylow {p}: order {}, normaliser order {}", s.order(), n.order());
    }

    let z = center(&g)?;
    let q = quotient_spectrum(&g, &z)?;
    println!("|Z| = {}, rho_2(G/Z) = {}", z.order(), format_ratio(&q.rho(2)));

    for h in index2_subgroups(&g)? {
        println!("index 2 subgroup: rho_4 = {}", format_ratio(&h.spectrum().rho(4)));
    }
    Ok(())
}

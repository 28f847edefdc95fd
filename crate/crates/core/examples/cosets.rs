//! Element orders in cosets of field-automorphism extensions.
//!
//! cargo run --release --example cosets

use group_spectra::census::properties::{coset_partition_properties, semilinear_instance};
use group_spectra::expr::{parse_expr, Evaluator};
use group_spectra::families::{Family, FamilySpec};
use group_spectra::group::coset_spectrum;
use group_spectra::spectrum::format_ratio;
use group_spectra::Result;

fn main() -> Result<()> {
    let ev = Evaluator::default();
    let n = ev.concrete(&parse_expr("PSL(2,27)")?)?;
    let (_, gens) = FamilySpec::new(Family::PSigmaL2, 27)?.constructor()?;
    let frob = gens.last().expect("field automorphism");
    let coset = coset_spectrum(&n, frob)?;
    println!("coset of PSL(2,27) by the order-3 field automorphism:");
    for (d, c) in coset.iter() {
        println!("  {c} elements of order {d}");
    }
    println!("  rho_3 = {}", format_ratio(&coset.rho(3)));

    // the second instance fails the partition hypothesis: 3 divides |C_N(K)|
    for (family, q) in [(Family::PGammaL2, 32), (Family::PSigmaL2, 27)] {
        let inst = semilinear_instance(family, q, 1 << 22)?;
        println!("{family}({q}): |H| = {}, |HK| = {}", inst.h.order(), inst.hk.order());
        for o in coset_partition_properties(&inst)? {
            println!("  {o}");
        }
    }
    Ok(())
}

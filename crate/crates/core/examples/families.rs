//! Closed-form spectra of group families, checked against enumeration.
//!
//! cargo run --release --example families

use group_spectra::families::{
    psigmal2_coset_rho, psl2_rho, suzuki_rho, sn_spectrum, spq_rho_star, Family, FamilySpec, RatioKind, Variant,
};
use group_spectra::spectrum::format_ratio;
use group_spectra::Result;

fn main() -> Result<()> {
    println!("rho_7(PSL(2,13)) = {}", format_ratio(&psl2_rho(13, 7)?));
    println!("rho_91(Sz(8)) = {}", format_ratio(&suzuki_rho(8, 91)?));
    println!("rho_155(Sz(32)) = {}", format_ratio(&suzuki_rho(32, 155)?));
    let r = psigmal2_coset_rho(2, 5, 2, Variant::Gamma, RatioKind::Dividing)?;
    println!("rho_10(PGammaL(2,32)) = {}", format_ratio(&r));
    println!("rho*_15(S15) = {}", format_ratio(&spq_rho_star(5, 3)?));
    println!("rho*_15(S15) from partitions = {}", format_ratio(&sn_spectrum(15).rho_star(15)));

    for (family, q) in [(Family::Psl2, 25), (Family::Pgl2, 9), (Family::Sz, 8), (Family::PGammaL2, 32)] {
        let spec = FamilySpec::new(family, q)?;
        let closed = spec.spectrum().expect("closed form");
        let built = spec.build(1 << 20)?.spectrum();
        println!("{spec}: order {}, closed form matches enumeration: {}", closed.group_order(), closed == built);
    }
    Ok(())
}

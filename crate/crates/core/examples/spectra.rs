//! Order spectra as data: building, combining, and reading off ratios.
//!
//! cargo run --example spectra

use group_spectra::spectrum::{construction2_n, format_ratio, make_spectrum, ratio, OrderSpectrum};
use group_spectra::Result;

fn main() -> Result<()> {
    // A5: 1 identity, 15 involutions, 20 elements of order 3, 24 of order 5
    let a5 = make_spectrum([(1, 1u32), (2, 15), (3, 20), (5, 24)])?;
    println!("A5 exponent {}", a5.exponent());
    for k in [2, 3, 6, 10, 15, 30] {
        println!("  rho_{k} = {}  rho*_{k} = {}", format_ratio(&a5.rho(k)), format_ratio(&a5.rho_star(k)));
    }

    let product = a5.direct_product(&OrderSpectrum::cyclic(6).power(3));
    println!("A5 x C6^3: order {}, rho_6 = {}", product.group_order(), format_ratio(&product.rho(6)));

    let mut w = OrderSpectrum::cyclic(2);
    for depth in 1..=4 {
        w = w.wreath_c2();
        println!("C2 wreathed {depth} times: order {}, rho_2 = {}", w.group_order(), format_ratio(&w.rho(2)));
    }

    // how many C6 factors push rho*_6 of A5 x C6^n past 1/2
    let n = construction2_n(&a5, 6, &ratio(1u32.into(), 2u32.into()))?;
    println!("A5 x C6^n has rho*_6 > 1/2 from n = {n}");

    print!("{}", a5.to_text());
    Ok(())
}

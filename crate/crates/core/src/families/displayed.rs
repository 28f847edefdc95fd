//! Closed-form ratios exactly as printed for specific shapes of `k`.
//!
//! These are deliberately transcribed term by term rather than derived from
//! the class counts in the sibling modules, so that comparing the two (and
//! enumeration) checks the printed expressions themselves.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::families::suzuki::SuzukiParams;
use crate::spectrum::Rational;

/// One printed identity `rho_k(G) = value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Displayed {
    pub name: &'static str,
    pub k: u64,
    pub value: Rational,
}

fn frac(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn entry(name: &'static str, k: u64, value: Rational) -> Displayed {
    Displayed { name, k, value }
}

fn odd_prime_power(q: u64) -> Result<u64> {
    match crate::arith::prime_power(q) {
        Some((p, _)) if p != 2 => Ok(p),
        _ => Err(Error::InvalidParameter(format!("{q} is not an odd prime power"))),
    }
}

/// Printed ratios for `PSL_2(q)`, `q` odd: the two half-torus values, the
/// `q+1` or `q-1` value depending on `q mod 4`, and the three products.
pub fn psl2_odd(q: u64) -> Result<Vec<Displayed>> {
    let p = odd_prime_power(q)?;
    let (p, q) = (p as i128, q as i128);
    let den = (q - 1) * q * (q + 1);
    let mut out = vec![
        entry("rho_{(q-1)/2}", ((q - 1) / 2) as u64, frac(q * (q + 1) * (q - 3) / 2 + 2, den)),
        entry("rho_{(q+1)/2}", ((q + 1) / 2) as u64, frac(q * (q - 1) * (q - 1) / 2 + 2, den)),
    ];
    if q % 4 == 1 {
        out.push(entry("rho_{q+1}", (q + 1) as u64, frac(q * q * q + 3 * q + 4, 2 * den)));
    } else {
        out.push(entry("rho_{q-1}", (q - 1) as u64, frac(q * q * q - 5 * q + 4, 2 * den)));
    }
    out.push(entry("rho_{p(q-1)/2}", (p * (q - 1) / 2) as u64, frac(q * (q * q + 2 * q - 3), 2 * den)));
    out.push(entry("rho_{p(q+1)/2}", (p * (q + 1) / 2) as u64, frac(q * (q + 1) * (q + 1), 2 * den)));
    out.push(entry("rho_{(q-1)(q+1)/4}", ((q - 1) * (q + 1) / 4) as u64, frac(q - 2, q)));
    Ok(out)
}

/// The exponent `p(q+1)(q-1)/4` of `PSL_2(q)`, `q` odd.
pub fn psl2_odd_exponent(q: u64) -> Result<u64> {
    let p = odd_prime_power(q)?;
    Ok(p * (q + 1) * (q - 1) / 4)
}

/// Printed ratios for `PSL_2(q)`, `q = 2^a`.
pub fn psl2_even(q: u64) -> Result<Vec<Displayed>> {
    if !q.is_power_of_two() || q < 4 {
        return Err(Error::InvalidParameter(format!("{q} is not 2^a with a >= 2")));
    }
    let q = q as i128;
    let den = 2 * (q - 1) * q * (q + 1);
    Ok(vec![
        entry("rho_{q-1}", (q - 1) as u64, frac((q - 2) * q * (q + 1) + 2, den)),
        entry("rho_{q+1}", (q + 1) as u64, frac((q - 1) * q * q + 2, den)),
        entry("rho_{2(q-1)}", (2 * (q - 1)) as u64, frac((q - 1) * q * (q + 2), den)),
        entry("rho_{2(q+1)}", (2 * (q + 1)) as u64, frac(q * q * (q + 1), den)),
        entry("rho_{(q-1)(q+1)}", ((q - 1) * (q + 1)) as u64, frac(q - 1, q)),
    ])
}

/// The exponent `2(q-1)(q+1)` of `PSL_2(2^a)`.
pub fn psl2_even_exponent(q: u64) -> u64 {
    2 * (q - 1) * (q + 1)
}

/// Printed ratios for `Sz(q)`.
pub fn suzuki(q: u64) -> Result<Vec<Displayed>> {
    let s = SuzukiParams::new(q)?;
    let (q, r) = (s.q as i128, s.r as i128);
    let order = q * q * (q - 1) * (q * q + 1);
    let plus = q + 2 * r + 1;
    let minus = q - 2 * r + 1;
    Ok(vec![
        entry("rho_{4(q^2+1)}", (4 * (q * q + 1)) as u64, frac(q, 2 * (q - 1))),
        entry("rho_{4(q-1)}", (4 * (q - 1)) as u64, frac(q * q * q + q - 2, 2 * (q * q * q - q * q + q - 1))),
        entry(
            "rho_{(q+2r+1)(q-1)}",
            (plus * (q - 1)) as u64,
            frac(3 * q * q * q - 6 * q * q + 2 * q * r + 3 * q - 2 * r - 4, 4 * (q - 1) * (q * q + 1)),
        ),
        entry(
            "rho_{(q-2r+1)(q-1)}",
            (minus * (q - 1)) as u64,
            frac(3 * q * q * q - 6 * q * q - 2 * q * r + 3 * q + 2 * r - 4, 4 * (q - 1) * (q * q + 1)),
        ),
        entry("rho_{q-1}", (q - 1) as u64, frac(q - 2, 2 * (q - 1)) + frac(1, order)),
        entry("rho_{q^2+1}", (q * q + 1) as u64, frac(q * q - q, 2 * (q * q + 1)) + frac(1, order)),
    ])
}

/// The exponent `4(q^2+1)(q-1)` of `Sz(q)`.
pub fn suzuki_exponent(q: u64) -> Result<u64> {
    let s = SuzukiParams::new(q)?;
    Ok(4 * (s.q * s.q + 1) * (s.q - 1))
}

fn prime_above_three(q: u64) -> Result<i128> {
    if !crate::arith::is_prime(q) || q <= 3 || q > 30 {
        return Err(Error::InvalidParameter(format!("need a prime 3 < q <= 30, got {q}")));
    }
    Ok(q as i128)
}

/// `rho_{2q}(PGammaL_2(2^q)) = 2^q/(q(2^q-1)(2^q+1)) + 2(q-1)/(3q)`.
pub fn pgammal2_rho_2q(q: u64) -> Result<Rational> {
    let q = prime_above_three(q)?;
    let t = 1i128 << q;
    Ok(frac(t, q * (t - 1) * (t + 1)) + frac(2 * (q - 1), 3 * q))
}

/// `rho_{3q}(PSigmaL_2(3^q)) = 2 3^q/(q(3^q-1)(3^q+1)) + 3(q-1)/(4q)`.
pub fn psigmal2_rho_3q(q: u64) -> Result<Rational> {
    let q = prime_above_three(q)?;
    let t = 3i128.pow(q as u32);
    Ok(frac(2 * t, q * (t - 1) * (t + 1)) + frac(3 * (q - 1), 4 * q))
}

/// `rho_q(PGammaL_2(2^q)) = 1/(q(2^q-1)2^q(2^q+1)) + (q-1)/(6q)`.
pub fn pgammal2_rho_q(q: u64) -> Result<Rational> {
    let q = prime_above_three(q)?;
    let t = 1i128 << q;
    Ok(frac(1, q * (t - 1) * t * (t + 1)) + frac(q - 1, 6 * q))
}

/// The value printed for `rho_3(PSL_2(3^(3^a)))` inside the twisted-coset
/// maximum, `3^(3^a) / (3^(2 3^a) - 1)`.
pub fn alpha_untwisted_term(a: u32) -> Rational {
    let t = 3i128.pow(3u32.pow(a));
    frac(t, t * t - 1)
}

/// The twisted-coset ratio stated for `a = 1`.
pub fn alpha_twisted_term_a1() -> Rational {
    frac(1, 12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::linear::{psl2_rho, psl2_even_rho};
    use crate::families::semilinear::{psigmal2_coset_rho, RatioKind, Variant};
    use crate::families::suzuki::suzuki_rho;

    #[test]
    fn psl2_printed_values_match_class_counts() {
        for q in [5u64, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 49, 81, 121, 125] {
            for d in psl2_odd(q).unwrap() {
                assert_eq!(d.value, psl2_rho(q, d.k).unwrap(), "q = {q}, {}", d.name);
            }
        }
        for q in [4u64, 8, 16, 32, 64, 128] {
            for d in psl2_even(q).unwrap() {
                assert_eq!(d.value, psl2_even_rho(q, d.k).unwrap(), "q = {q}, {}", d.name);
            }
        }
    }

    #[test]
    fn suzuki_printed_values_against_class_counts() {
        // the two (q -+ 2r + 1)(q - 1) expressions omit the identity
        for q in [8u64, 32, 128] {
            let order = crate::families::suzuki::suzuki_order(q).unwrap();
            let one_element = Rational::new(1.into(), order.into());
            for d in suzuki(q).unwrap() {
                let counted = suzuki_rho(q, d.k).unwrap();
                if d.name.starts_with("rho_{(q") {
                    assert_eq!(d.value.clone() + &one_element, counted, "q = {q}, {}", d.name);
                } else {
                    assert_eq!(d.value, counted, "q = {q}, {}", d.name);
                }
            }
        }
    }

    #[test]
    fn semilinear_printed_values_match_coset_counts() {
        for q in [5u64, 7, 11, 13] {
            let gamma = |d| psigmal2_coset_rho(2, q, d, Variant::Gamma, RatioKind::Dividing).unwrap();
            assert_eq!(pgammal2_rho_2q(q).unwrap(), gamma(2));
            assert_eq!(pgammal2_rho_q(q).unwrap(), gamma(1));
            let sigma = psigmal2_coset_rho(3, q, 3, Variant::Sigma, RatioKind::Dividing).unwrap();
            assert_eq!(psigmal2_rho_3q(q).unwrap(), sigma);
        }
        assert_eq!(pgammal2_rho_2q(5).unwrap(), frac(184, 341));
    }

    #[test]
    fn untwisted_term() {
        assert_eq!(alpha_untwisted_term(1), frac(27, 728));
    }
}

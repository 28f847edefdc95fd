//! Symmetric and alternating groups through cycle types.
//!
//! A cycle type with `m_c` cycles of length `c` accounts for
//! `n! / prod(c^(m_c) m_c!)` permutations, all of order `lcm(c)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{is_prime, lcm};
use crate::error::{Error, Result};
use crate::spectrum::{Nat, OrderSpectrum, Rational};

/// Every partition of `n`, as `(part, multiplicity)` pairs with parts decreasing.
pub fn partitions(n: u64) -> Vec<Vec<(u64, u64)>> {
    fn go(rest: u64, max: u64, acc: &mut Vec<(u64, u64)>, out: &mut Vec<Vec<(u64, u64)>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            for mult in (1..=rest / part).rev() {
                acc.push((part, mult));
                go(rest - part * mult, part - 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: u64) -> Nat {
    (1..=n).map(Nat::from).product()
}

/// Number of permutations of the given cycle type in `S_n`.
pub fn class_size(n: u64, cycle_type: &[(u64, u64)]) -> Nat {
    let denom: Nat = cycle_type
        .iter()
        .map(|&(c, m)| Nat::from(c).pow(m as u32) * factorial(m))
        .product();
    factorial(n) / denom
}

fn is_even_type(n: u64, cycle_type: &[(u64, u64)]) -> bool {
    let cycles: u64 = cycle_type.iter().map(|&(_, m)| m).sum();
    (n - cycles) % 2 == 0
}

fn spectrum_from_types(n: u64, even_only: bool) -> OrderSpectrum {
    let mut counts: BTreeMap<u64, Nat> = BTreeMap::new();
    for t in partitions(n) {
        if even_only && !is_even_type(n, &t) {
            continue;
        }
        let order = t.iter().fold(1, |acc, &(c, _)| lcm(acc, c));
        *counts.entry(order).or_default() += class_size(n, &t);
    }
    if counts.is_empty() {
        counts.insert(1, Nat::one());
    }
    OrderSpectrum::from_counts(counts)
}

/// Spectrum of `S_n`, for `n >= 1`.
pub fn sn_spectrum(n: u64) -> OrderSpectrum {
    assert!(n >= 1, "S_0 is not supported");
    spectrum_from_types(n, false)
}

/// Spectrum of `A_n`, for `n >= 1`.
pub fn an_spectrum(n: u64) -> OrderSpectrum {
    assert!(n >= 1, "A_0 is not supported");
    spectrum_from_types(n, true)
}

/// Which of `S_n` and `A_n` a ratio refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Sym,
    Alt,
}

fn unit(num: u64, den: Nat) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `rho*_p(S_n)` or `rho*_p(A_n)` for a prime `p`: permutations made of `m`
/// `p`-cycles and `n - mp` fixed points, summed over `m >= 1` (even `m` only
/// in `A_n` when `p = 2`).
pub fn alt_rho_star_p(n: u64, p: u64, side: Side) -> Result<Rational> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if side == Side::Alt && n < 2 {
        return Err(Error::InvalidParameter("A_n needs n >= 2 here".into()));
    }
    let mut sum = Rational::zero();
    for m in 1..=n / p {
        if side == Side::Alt && p == 2 && m % 2 == 1 {
            continue;
        }
        sum += unit(1, Nat::from(p).pow(m as u32) * factorial(m) * factorial(n - m * p));
    }
    Ok(match side {
        Side::Sym => sum,
        Side::Alt => sum * Rational::from_integer(BigInt::from(2)),
    })
}

fn check_two_primes(p: u64, q: u64) -> Result<()> {
    if !is_prime(p) || !is_prime(q) || p <= q {
        return Err(Error::InvalidParameter(format!("need primes p > q, got p = {p}, q = {q}")));
    }
    Ok(())
}

/// `rho*_{pq}(S_pq)` for primes `p > q` as the double sum over `x` `p`-cycles
/// and `y` `q`-cycles, plus `1/(pq)` for the `pq`-cycles.
pub fn spq_rho_star(p: u64, q: u64) -> Result<Rational> {
    check_two_primes(p, q)?;
    let n = p * q;
    let mut sum = unit(1, Nat::from(n));
    for x in 1..q {
        for y in 1..=(p * (q - x) / q) {
            let den = Nat::from(p).pow(x as u32)
                * factorial(x)
                * Nat::from(q).pow(y as u32)
                * factorial(y)
                * factorial(n - x * p - y * q);
            sum += unit(1, den);
        }
    }
    Ok(sum)
}

/// `rho*_{pq}(S_n)` for primes `p > q` as the triple sum over `x` `p`-cycles,
/// `y` `q`-cycles and `z` `pq`-cycles with `z >= 1` whenever `xy = 0`.
pub fn spq_rho_star_n(p: u64, q: u64, n: u64) -> Result<Rational> {
    check_two_primes(p, q)?;
    let mut sum = Rational::zero();
    for x in 0..=n / p {
        for y in 0..=(n - x * p) / q {
            let z_min = if x * y >= 1 { 0 } else { 1 };
            for z in z_min..=(n - x * p - y * q) / (p * q) {
                let den = Nat::from(p).pow(x as u32)
                    * factorial(x)
                    * Nat::from(q).pow(y as u32)
                    * factorial(y)
                    * Nat::from(p * q).pow(z as u32)
                    * factorial(z)
                    * factorial(n - x * p - y * q - z * p * q);
                sum += unit(1, den);
            }
        }
    }
    Ok(sum)
}

/// `1/(pq) + (q - 1)/(p^q q!)`, the stated strict upper bound for `rho*_{pq}(S_pq)`.
pub fn spq_bound(p: u64, q: u64) -> Result<Rational> {
    check_two_primes(p, q)?;
    Ok(unit(1, Nat::from(p * q)) + unit(q - 1, Nat::from(p).pow(q as u32) * factorial(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::make_spectrum;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 1..10
        let expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &c) in (1..=10).zip(&expected) {
            assert_eq!(partitions(n).len(), c);
        }
    }

    #[test]
    fn small_spectra() {
        assert_eq!(an_spectrum(5), make_spectrum([(1, 1u32), (2, 15), (3, 20), (5, 24)]).unwrap());
        assert_eq!(sn_spectrum(3), make_spectrum([(1, 1u32), (2, 3), (3, 2)]).unwrap());
        assert_eq!(sn_spectrum(1), OrderSpectrum::trivial());
        assert_eq!(an_spectrum(2), OrderSpectrum::trivial());
        assert_eq!(sn_spectrum(5).rho(4), r(7, 15));
        assert_eq!(an_spectrum(5).rho(10), r(2, 3));
        assert_eq!(sn_spectrum(5).rho_star(5), r(1, 5));
        assert_eq!(sn_spectrum(5).rho(12), r(4, 5));
        assert_eq!(sn_spectrum(10).group_order(), &factorial(10));
    }

    #[test]
    fn displayed_sums_match_spectra() {
        for p in [2u64, 3, 5, 7] {
            for n in 2..=20 {
                let s = alt_rho_star_p(n, p, Side::Sym).unwrap();
                assert_eq!(s, sn_spectrum(n).rho_star(p), "S_{n}, p = {p}");
                let a = alt_rho_star_p(n, p, Side::Alt).unwrap();
                assert_eq!(a, an_spectrum(n).rho_star(p), "A_{n}, p = {p}");
            }
        }
        assert_eq!(alt_rho_star_p(5, 5, Side::Sym).unwrap(), r(1, 5));
        assert!(alt_rho_star_p(5, 4, Side::Sym).is_err());
    }

    #[test]
    fn two_prime_sums() {
        assert_eq!(spq_rho_star(5, 3).unwrap(), sn_spectrum(15).rho_star(15));
        assert_eq!(spq_rho_star(3, 2).unwrap(), sn_spectrum(6).rho_star(6));
        for n in 1..=16 {
            assert_eq!(spq_rho_star_n(5, 3, n).unwrap(), sn_spectrum(n).rho_star(15), "n = {n}");
        }
        assert!(spq_rho_star(3, 5).is_err());
        assert!(spq_rho_star(4, 3).is_err());
    }
}

//! Closed forms for `PSL_2(q)` and `PGL_2(q)`.
//!
//! Both groups are covered by one identity, the `q^2 - 1` elements of order
//! `p`, and the nonidentity elements of two families of pairwise trivially
//! intersecting cyclic tori. Elements of a torus `C_n` with order dividing `k`
//! number `gcd(k, n)`, which is how every ratio below is assembled.

use std::collections::BTreeMap;

use crate::arith::{divisors, gcd, prime_power, totient};
use crate::error::{Error, Result};
use crate::spectrum::{ratio, Nat, OrderSpectrum, Rational};

/// `(torus order, number of conjugate tori)` pairs plus unipotent data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct TorusData {
    pub p: u64,
    pub group_order: Nat,
    pub unipotent: Nat,
    pub tori: Vec<(u64, Nat)>,
}

impl TorusData {
    pub fn rho(&self, k: u64) -> Rational {
        let mut hits = Nat::from(1u32);
        if k % self.p == 0 {
            hits += &self.unipotent;
        }
        for (n, count) in &self.tori {
            hits += count * Nat::from(gcd(k, *n) - 1);
        }
        ratio(hits, self.group_order.clone())
    }

    pub fn spectrum(&self) -> OrderSpectrum {
        let mut counts: BTreeMap<u64, Nat> = BTreeMap::from([(1, Nat::from(1u32))]);
        *counts.entry(self.p).or_default() += &self.unipotent;
        for (n, count) in &self.tori {
            for d in divisors(*n).into_iter().skip(1) {
                *counts.entry(d).or_default() += count * Nat::from(totient(d));
            }
        }
        OrderSpectrum::from_counts(counts)
    }
}

fn split(q: u64) -> Result<(u64, u32)> {
    prime_power(q).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))
}

/// Tori of `PSL_2(q)`: orders `(q -+ 1)/gcd(2, q-1)`, with `q(q+1)/2` split and
/// `q(q-1)/2` non-split conjugates.
pub(crate) fn psl2_data(q: u64) -> Result<TorusData> {
    let (p, _) = split(q)?;
    let d = if p == 2 { 1 } else { 2 };
    let qn = Nat::from(q);
    Ok(TorusData {
        p,
        group_order: &qn * (&qn * &qn - 1u32) / d,
        unipotent: &qn * &qn - 1u32,
        tori: vec![
            ((q - 1) / d, &qn * (q + 1) / 2u32),
            ((q + 1) / d, &qn * (q - 1) / 2u32),
        ],
    })
}

/// `PGL_2(q)`: as for `PSL_2(q)`, with full tori of orders `q - 1` and `q + 1`.
pub(crate) fn pgl2_data(q: u64) -> Result<TorusData> {
    let (p, _) = split(q)?;
    let qn = Nat::from(q);
    Ok(TorusData {
        p,
        group_order: &qn * (&qn * &qn - 1u32),
        unipotent: &qn * &qn - 1u32,
        tori: vec![(q - 1, &qn * (q + 1) / 2u32), (q + 1, &qn * (q - 1) / 2u32)],
    })
}

/// `rho_k(PSL_2(q))` for odd `q`.
pub fn psl2_rho(q: u64, k: u64) -> Result<Rational> {
    let (p, _) = split(q)?;
    if p == 2 {
        return Err(Error::InvalidParameter(format!("psl2_rho needs odd q, got {q}")));
    }
    Ok(psl2_data(q)?.rho(k))
}

/// `rho_k(PSL_2(q))` for `q` a power of 2.
pub fn psl2_even_rho(q: u64, k: u64) -> Result<Rational> {
    let (p, _) = split(q)?;
    if p != 2 {
        return Err(Error::InvalidParameter(format!("psl2_even_rho needs q a power of 2, got {q}")));
    }
    Ok(psl2_data(q)?.rho(k))
}

pub fn psl2_spectrum(q: u64) -> Result<OrderSpectrum> {
    Ok(psl2_data(q)?.spectrum())
}

pub fn pgl2_rho(q: u64, k: u64) -> Result<Rational> {
    Ok(pgl2_data(q)?.rho(k))
}

pub fn pgl2_spectrum(q: u64) -> Result<OrderSpectrum> {
    Ok(pgl2_data(q)?.spectrum())
}

/// `|PSL_2(q)| = q(q^2 - 1)/gcd(2, q - 1)`.
pub fn psl2_order(q: u64) -> Result<Nat> {
    Ok(psl2_data(q)?.group_order)
}

pub fn pgl2_order(q: u64) -> Result<Nat> {
    Ok(pgl2_data(q)?.group_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn table_values() {
        assert_eq!(psl2_rho(13, 7).unwrap(), q(67, 156));
        assert_eq!(psl2_rho(25, 13).unwrap(), q(277, 600));
        assert_eq!(psl2_rho(23, 11).unwrap(), q(251, 552));
        assert_eq!(psl2_even_rho(4, 6).unwrap(), q(3, 5));
        assert_eq!(psl2_even_rho(8, 18).unwrap(), q(4, 7));
    }

    #[test]
    fn exponents() {
        for qq in [3u64, 5, 7, 9, 11, 13, 25, 27, 49, 81] {
            let p = prime_power(qq).unwrap().0;
            let e = p * (qq + 1) * (qq - 1) / 4;
            assert_eq!(psl2_spectrum(qq).unwrap().exponent(), e, "q = {qq}");
            assert_eq!(psl2_rho(qq, e).unwrap(), q(1, 1));
        }
        for qq in [4u64, 8, 16, 32, 64] {
            let e = 2 * (qq - 1) * (qq + 1);
            assert_eq!(psl2_spectrum(qq).unwrap().exponent(), e);
            assert_eq!(psl2_even_rho(qq, e).unwrap(), q(1, 1));
        }
    }

    #[test]
    fn rho_matches_spectrum() {
        for qq in [2u64, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32, 49] {
            let s = psl2_spectrum(qq).unwrap();
            let g = pgl2_spectrum(qq).unwrap();
            for k in divisors(s.exponent()) {
                assert_eq!(psl2_data(qq).unwrap().rho(k), s.rho(k), "PSL q = {qq}, k = {k}");
            }
            for k in divisors(g.exponent()) {
                assert_eq!(pgl2_rho(qq, k).unwrap(), g.rho(k), "PGL q = {qq}, k = {k}");
            }
        }
    }

    #[test]
    fn small_cases_are_classical_groups() {
        use crate::spectrum::make_spectrum;
        let s3 = make_spectrum([(1, 1u32), (2, 3), (3, 2)]).unwrap();
        let a4 = make_spectrum([(1, 1u32), (2, 3), (3, 8)]).unwrap();
        let s4 = make_spectrum([(1, 1u32), (2, 9), (3, 8), (4, 6)]).unwrap();
        let a5 = make_spectrum([(1, 1u32), (2, 15), (3, 20), (5, 24)]).unwrap();
        assert_eq!(psl2_spectrum(2).unwrap(), s3);
        assert_eq!(pgl2_spectrum(2).unwrap(), s3);
        assert_eq!(psl2_spectrum(3).unwrap(), a4);
        assert_eq!(pgl2_spectrum(3).unwrap(), s4);
        assert_eq!(psl2_spectrum(4).unwrap(), a5);
        assert_eq!(psl2_spectrum(5).unwrap(), a5);
    }

    #[test]
    fn rejects_bad_q() {
        assert!(psl2_rho(6, 2).is_err());
        assert!(psl2_rho(8, 2).is_err());
        assert!(psl2_even_rho(9, 2).is_err());
    }
}

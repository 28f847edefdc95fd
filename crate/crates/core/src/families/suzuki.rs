//! Closed forms for the Suzuki groups `Sz(q)`, `q = 2^(2a+1)`, `r = 2^a`.
//!
//! The group is covered by the identity, `q^2 + 1` trivially intersecting
//! Sylow 2-subgroups of order `q^2`, and trivially intersecting cyclic tori of
//! orders `q - 1`, `q + 2r + 1` and `q - 2r + 1`. Each Sylow 2-subgroup has
//! `q - 1` involutions and `q(q - 1)` elements of order 4.

use std::collections::BTreeMap;

use crate::arith::{divisors, gcd, totient};
use crate::error::{Error, Result};
use crate::spectrum::{ratio, Nat, OrderSpectrum, Rational};

/// Validated Suzuki parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuzukiParams {
    pub q: u64,
    pub a: u32,
    pub r: u64,
}

impl SuzukiParams {
    pub fn new(q: u64) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("Sz(q) needs q = 2^(2a+1) with a >= 1, got {q}"));
        if !q.is_power_of_two() {
            return Err(bad());
        }
        let e = q.trailing_zeros();
        if e < 3 || e % 2 == 0 || e > 20 {
            return Err(bad());
        }
        let a = (e - 1) / 2;
        Ok(SuzukiParams { q, a, r: 1 << a })
    }

    pub fn order(&self) -> Nat {
        let q = Nat::from(self.q);
        &q * &q * (self.q - 1) * (&q * &q + 1u32)
    }

    /// `(torus order, number of tori)`.
    fn tori(&self) -> [(u64, Nat); 3] {
        let (q, r) = (self.q, self.r);
        let q2 = Nat::from(q * q);
        [
            (q - 1, &q2 * (q * q + 1) / 2u32),
            (q + 2 * r + 1, &q2 * (q - 2 * r + 1) * (q - 1) / 4u32),
            (q - 2 * r + 1, &q2 * (q + 2 * r + 1) * (q - 1) / 4u32),
        ]
    }

    pub fn involutions(&self) -> Nat {
        Nat::from(self.q - 1) * (self.q * self.q + 1)
    }

    pub fn elements_of_order_four(&self) -> Nat {
        Nat::from(self.q) * (self.q - 1) * (self.q * self.q + 1)
    }
}

/// A candidate split of the nonidentity 2-elements into orders 2 and 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoElementSplit {
    pub source: &'static str,
    pub involutions: Nat,
    pub order_four: Nat,
}

/// The two candidate splits: from the Sylow 2-subgroup structure, and as
/// printed for the class counts (`q(q^2+1)` and `(q^2-q-1)(q^2+1)`).
pub fn two_element_splits(q: u64) -> Result<[TwoElementSplit; 2]> {
    let s = SuzukiParams::new(q)?;
    let q2 = q * q;
    Ok([
        TwoElementSplit {
            source: "sylow structure",
            involutions: s.involutions(),
            order_four: s.elements_of_order_four(),
        },
        TwoElementSplit {
            source: "as stated",
            involutions: Nat::from(q) * (q2 + 1),
            order_four: Nat::from(q2 - q - 1) * (q2 + 1),
        },
    ])
}

pub fn suzuki_order(q: u64) -> Result<Nat> {
    Ok(SuzukiParams::new(q)?.order())
}

/// `rho_k(Sz(q))`.
pub fn suzuki_rho(q: u64, k: u64) -> Result<Rational> {
    let s = SuzukiParams::new(q)?;
    let mut hits = Nat::from(1u32);
    if k % 2 == 0 {
        hits += s.involutions();
    }
    if k % 4 == 0 {
        hits += s.elements_of_order_four();
    }
    for (n, count) in s.tori() {
        hits += count * (gcd(k, n) - 1);
    }
    Ok(ratio(hits, s.order()))
}

pub fn suzuki_spectrum(q: u64) -> Result<OrderSpectrum> {
    let s = SuzukiParams::new(q)?;
    let mut counts = BTreeMap::from([
        (1, Nat::from(1u32)),
        (2, s.involutions()),
        (4, s.elements_of_order_four()),
    ]);
    for (n, count) in s.tori() {
        for d in divisors(n).into_iter().skip(1) {
            *counts.entry(d).or_default() += &count * totient(d);
        }
    }
    Ok(OrderSpectrum::from_counts(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn table_values() {
        assert_eq!(suzuki_rho(8, 91).unwrap(), q(211, 320));
        assert_eq!(suzuki_rho(32, 155).unwrap(), q(109971, 209920));
        assert_eq!(suzuki_rho(8, 260).unwrap(), q(4, 7));
    }

    #[test]
    fn spectrum_is_consistent() {
        for qq in [8u64, 32, 128] {
            let s = suzuki_spectrum(qq).unwrap();
            assert_eq!(s.group_order(), &suzuki_order(qq).unwrap());
            assert_eq!(s.exponent(), 4 * (qq * qq + 1) * (qq - 1));
            for k in divisors(s.exponent()) {
                assert_eq!(suzuki_rho(qq, k).unwrap(), s.rho(k), "q = {qq}, k = {k}");
            }
        }
    }

    #[test]
    fn parameters() {
        assert!(SuzukiParams::new(2).is_err());
        assert!(SuzukiParams::new(4).is_err());
        assert!(SuzukiParams::new(16).is_err());
        assert!(SuzukiParams::new(12).is_err());
        assert_eq!(SuzukiParams::new(32).unwrap().r, 4);
        assert_eq!(suzuki_order(8).unwrap(), Nat::from(29120u32));
        let [sylow, stated] = two_element_splits(8).unwrap();
        assert_eq!(sylow.involutions.clone() + sylow.order_four, Nat::from(4095u32));
        assert_eq!(stated.involutions.clone() + stated.order_four, Nat::from(4095u32));
    }
}

//! Ratios of `PSigmaL_2(p^q)` and `PGammaL_2(p^q)` for a prime `q` not
//! dividing `(p-1)p(p+1)`.
//!
//! Such a group is `G : <F>` with `G = PSL_2(p^q)` or `PGL_2(p^q)` and `F` a
//! field automorphism of order `q`. Outside `G`, every element is conjugate
//! to exactly one `hF^i` with `h` in the subfield group `H = PSL_2(p)` or
//! `PGL_2(p)` and `0 < i < q`. Such an element has order `q o(h)`, so
//! `rho_{dq} = rho_{dq}(G)/q + (q-1)/q rho_d(H)`, and likewise for `rho*`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::families::linear::{pgl2_spectrum, psl2_spectrum};
use crate::spectrum::{Nat, OrderSpectrum, Rational};

/// `PSigmaL_2` (over `PSL_2`) or `PGammaL_2` (over `PGL_2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Sigma,
    Gamma,
}

/// Order dividing `k` or exactly `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioKind {
    Dividing,
    Exact,
}

impl RatioKind {
    pub fn of(self, s: &OrderSpectrum, k: u64) -> Rational {
        match self {
            RatioKind::Dividing => s.rho(k),
            RatioKind::Exact => s.rho_star(k),
        }
    }
}

fn base_spectrum(variant: Variant, q: u64) -> Result<OrderSpectrum> {
    match variant {
        Variant::Sigma => psl2_spectrum(q),
        Variant::Gamma => pgl2_spectrum(q),
    }
}

/// The two terms `(rho_{dq}(G)/q, (q-1)/q rho_d(H))`.
pub fn psigmal2_coset_terms(
    p: u64,
    qdeg: u64,
    d: u64,
    variant: Variant,
    kind: RatioKind,
) -> Result<(Rational, Rational)> {
    if !is_prime(p) || !is_prime(qdeg) {
        return Err(Error::InvalidParameter(format!("p = {p} and q = {qdeg} must be prime")));
    }
    if ((p - 1) * p * (p + 1)) % qdeg == 0 {
        return Err(Error::Precondition(format!("{qdeg} divides (p-1)p(p+1) for p = {p}")));
    }
    if (p - 1) % d != 0 && p % d != 0 && (p + 1) % d != 0 {
        return Err(Error::Precondition(format!("{d} divides none of p-1, p, p+1 for p = {p}")));
    }
    let big_q = p
        .checked_pow(qdeg as u32)
        .ok_or_else(|| Error::InvalidParameter(format!("{p}^{qdeg} is too large")))?;
    let whole = base_spectrum(variant, big_q)?;
    let sub = base_spectrum(variant, p)?;
    let qn = BigInt::from(qdeg);
    let inner = kind.of(&whole, d * qdeg) / Rational::from_integer(qn.clone());
    let outer = kind.of(&sub, d) * Rational::new(qn.clone() - BigInt::one(), qn);
    Ok((inner, outer))
}

/// `rho_{dq}` (or `rho*_{dq}`) of `PSigmaL_2(p^q)` / `PGammaL_2(p^q)` as the
/// convex combination of the two terms.
pub fn psigmal2_coset_rho(p: u64, qdeg: u64, d: u64, variant: Variant, kind: RatioKind) -> Result<Rational> {
    let (inner, outer) = psigmal2_coset_terms(p, qdeg, d, variant, kind)?;
    Ok(inner + outer)
}

/// Full spectrum of `PSigmaL_2(p^q)` or `PGammaL_2(p^q)` under the same
/// hypotheses: the inner group `G`, plus `(q-1)|G|/|H|` elements of order
/// `q d` for every element of order `d` in `H`.
pub fn semilinear_spectrum(p: u64, qdeg: u64, variant: Variant) -> Result<OrderSpectrum> {
    psigmal2_coset_terms(p, qdeg, 1, variant, RatioKind::Dividing)?;
    let big_q = p.pow(qdeg as u32);
    let whole = base_spectrum(variant, big_q)?;
    let sub = base_spectrum(variant, p)?;
    let index = whole.group_order() / sub.group_order();
    let mut counts: BTreeMap<u64, Nat> = whole.iter().map(|(d, c)| (d, c.clone())).collect();
    for (d, c) in sub.iter() {
        *counts.entry(d * qdeg).or_default() += c * &index * (qdeg - 1);
    }
    Ok(OrderSpectrum::from_counts(counts))
}

/// `|PSigmaL_2(p^m)|` or `|PGammaL_2(p^m)|`.
pub fn semilinear_order(variant: Variant, q: u64) -> Result<Nat> {
    let (_, m) = crate::arith::prime_power(q)
        .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
    let base = match variant {
        Variant::Sigma => crate::families::linear::psl2_order(q)?,
        Variant::Gamma => crate::families::linear::pgl2_order(q)?,
    };
    Ok(base * m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn examples() {
        let rho = psigmal2_coset_rho(2, 5, 2, Variant::Gamma, RatioKind::Dividing).unwrap();
        assert_eq!(rho, r(184, 341));
        assert!(rho > r(1, 2));
        let (inner, outer) = psigmal2_coset_terms(2, 5, 2, Variant::Gamma, RatioKind::Dividing).unwrap();
        assert_eq!(inner, r(32, 5115));
        assert_eq!(outer, r(8, 15));
        let star = psigmal2_coset_rho(2, 5, 2, Variant::Gamma, RatioKind::Exact).unwrap();
        assert_eq!(star, r(2, 5));
    }

    #[test]
    fn preconditions() {
        assert!(psigmal2_coset_rho(3, 3, 1, Variant::Sigma, RatioKind::Dividing).is_err());
        assert!(psigmal2_coset_rho(2, 3, 1, Variant::Gamma, RatioKind::Dividing).is_err());
        assert!(psigmal2_coset_rho(2, 5, 4, Variant::Gamma, RatioKind::Dividing).is_err());
        assert!(psigmal2_coset_rho(4, 5, 1, Variant::Gamma, RatioKind::Dividing).is_err());
    }

    #[test]
    fn spectrum_agrees_with_combination() {
        for (p, qdeg) in [(2u64, 5u64), (2, 7), (3, 5), (5, 7)] {
            for variant in [Variant::Sigma, Variant::Gamma] {
                let s = semilinear_spectrum(p, qdeg, variant).unwrap();
                assert_eq!(s.group_order(), &semilinear_order(variant, p.pow(qdeg as u32)).unwrap());
                let mut ds: Vec<u64> = [p - 1, p, p + 1].into_iter().flat_map(crate::arith::divisors).collect();
                ds.sort_unstable();
                ds.dedup();
                for d in ds {
                    for kind in [RatioKind::Dividing, RatioKind::Exact] {
                        if kind == RatioKind::Dividing || d > 1 {
                            let expected = psigmal2_coset_rho(p, qdeg, d, variant, kind).unwrap();
                            assert_eq!(kind.of(&s, d * qdeg), expected, "p = {p}, q = {qdeg}, d = {d}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(semilinear_order(Variant::Gamma, 32).unwrap(), Nat::from(163680u32));
        assert_eq!(semilinear_order(Variant::Sigma, 27).unwrap(), Nat::from(29484u32));
    }
}

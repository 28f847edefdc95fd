//! Order spectra: the number of elements of each order in a finite group,
//! together with the exact ratios derived from them.
//!
//! An [`OrderSpectrum`] is the common currency of the crate. Brute-force
//! enumeration, the closed-form family evaluators and the spectrum-level
//! combinators (direct products, powers, wreath by `C2`) all produce one, and
//! every ratio is an exact [`Rational`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{lcm, totient};
use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer.
pub type Nat = BigUint;
/// Exact rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Which structural invariants [`OrderSpectrum::with_checks`] enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectrumChecks {
    /// Require `phi(d) | counts[d]` for every stored order `d`.
    pub totient: bool,
}

impl Default for SpectrumChecks {
    fn default() -> Self {
        SpectrumChecks { totient: true }
    }
}

/// Map from element order to the number of elements of that order.
///
/// Only realised orders are stored. Invariants: the counts sum to the group
/// order, `counts[1] == 1`, every order divides the group order, and (unless
/// disabled) `phi(d)` divides `counts[d]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderSpectrum {
    group_order: Nat,
    counts: BTreeMap<u64, Nat>,
}

/// Validated spectrum from `(order, count)` pairs.
pub fn make_spectrum<I, C>(entries: I) -> Result<OrderSpectrum>
where
    I: IntoIterator<Item = (u64, C)>,
    C: Into<Nat>,
{
    OrderSpectrum::new(entries)
}

impl OrderSpectrum {
    pub fn new<I, C>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<Nat>,
    {
        Self::with_checks(entries, SpectrumChecks::default())
    }

    pub fn with_checks<I, C>(entries: I, checks: SpectrumChecks) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<Nat>,
    {
        let mut counts = BTreeMap::new();
        for (order, count) in entries {
            let count: Nat = count.into();
            if order == 0 {
                return Err(Error::InvalidSpectrum("order 0 is not an element order".into()));
            }
            if count.is_zero() {
                return Err(Error::InvalidSpectrum(format!("order {order} has count 0")));
            }
            if counts.insert(order, count).is_some() {
                return Err(Error::InvalidSpectrum(format!("order {order} listed twice")));
            }
        }
        let group_order = counts.values().sum();
        let s = OrderSpectrum { group_order, counts };
        s.validate(checks)?;
        Ok(s)
    }

    /// Builds a spectrum whose validity follows from how it was computed.
    pub(crate) fn from_counts(counts: BTreeMap<u64, Nat>) -> Self {
        let counts: BTreeMap<u64, Nat> = counts.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let group_order = counts.values().sum();
        let s = OrderSpectrum { group_order, counts };
        debug_assert!(s.validate(SpectrumChecks::default()).is_ok(), "{s:?}");
        s
    }

    fn validate(&self, checks: SpectrumChecks) -> Result<()> {
        if self.counts.get(&1) != Some(&Nat::one()) {
            return Err(Error::InvalidSpectrum("the identity must be counted exactly once".into()));
        }
        for (&d, c) in &self.counts {
            if !(&self.group_order % d).is_zero() {
                return Err(Error::InvalidSpectrum(format!(
                    "order {d} does not divide the group order {}",
                    self.group_order
                )));
            }
            if checks.totient && !(c % totient(d)).is_zero() {
                return Err(Error::InvalidSpectrum(format!(
                    "count {c} of order {d} is not a multiple of phi({d}) = {}",
                    totient(d)
                )));
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        OrderSpectrum::from_counts(BTreeMap::from([(1, Nat::one())]))
    }

    /// Spectrum of the cyclic group of order `n`: `phi(d)` elements of each order `d | n`.
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let counts = crate::arith::divisors(n)
            .into_iter()
            .map(|d| (d, Nat::from(totient(d))))
            .collect();
        OrderSpectrum::from_counts(counts)
    }

    pub fn group_order(&self) -> &Nat {
        &self.group_order
    }

    /// Number of elements of order exactly `order`.
    pub fn count(&self, order: u64) -> Nat {
        self.counts.get(&order).cloned().unwrap_or_default()
    }

    /// `(order, count)` pairs in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &Nat)> + '_ {
        self.counts.iter().map(|(&d, c)| (d, c))
    }

    /// Number of elements whose order divides `k`.
    pub fn count_dividing(&self, k: u64) -> Nat {
        self.counts
            .iter()
            .filter(|(&d, _)| k % d == 0)
            .map(|(_, c)| c)
            .sum()
    }

    /// Fraction of elements whose order divides `k`.
    pub fn rho(&self, k: u64) -> Rational {
        ratio(self.count_dividing(k), self.group_order.clone())
    }

    /// Fraction of elements whose order is exactly `k`.
    pub fn rho_star(&self, k: u64) -> Rational {
        ratio(self.count(k), self.group_order.clone())
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.counts.keys().fold(1, |acc, &d| lcm(acc, d))
    }

    /// Spectrum of the direct product; `o((g, h)) = lcm(o(g), o(h))`.
    pub fn direct_product(&self, other: &OrderSpectrum) -> OrderSpectrum {
        let mut counts: BTreeMap<u64, Nat> = BTreeMap::new();
        for (&d, a) in &self.counts {
            for (&e, b) in &other.counts {
                *counts.entry(lcm(d, e)).or_default() += a * b;
            }
        }
        OrderSpectrum::from_counts(counts)
    }

    /// `n`-fold direct power, by repeated squaring of the lcm-convolution.
    pub fn power(&self, mut n: u64) -> OrderSpectrum {
        let mut acc = OrderSpectrum::trivial();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.direct_product(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.direct_product(&base);
            }
        }
        acc
    }

    /// Spectrum of `G wr C2 = (G x G) : C2`.
    ///
    /// The base contributes the square of the spectrum. A swapped element
    /// `(a, b, x)` squares to `(ab, ba, 1)`, so it has order `2 o(ab)`, and
    /// each product `ab` arises from exactly `|G|` pairs.
    pub fn wreath_c2(&self) -> OrderSpectrum {
        let mut counts = self.direct_product(self).counts;
        for (&m, c) in &self.counts {
            *counts.entry(2 * m).or_default() += c * &self.group_order;
        }
        OrderSpectrum::from_counts(counts)
    }

    /// Serialises as a header line `order <group_order>` followed by one
    /// `order count` line per realised order.
    pub fn to_text(&self) -> String {
        let mut out = format!("order {}\n", self.group_order);
        for (d, c) in &self.counts {
            writeln!(out, "{d} {c}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::InvalidSpectrum("empty spectrum file".into()))?;
        let declared: Nat = header
            .strip_prefix("order ")
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| Error::InvalidSpectrum(format!("bad header {header:?}")))?;
        let mut entries = Vec::new();
        for (lineno, line) in lines {
            let mut parts = line.split_whitespace();
            let parsed = match (parts.next(), parts.next(), parts.next()) {
                (Some(d), Some(c), None) => d.parse::<u64>().ok().zip(c.parse::<Nat>().ok()),
                _ => None,
            };
            let entry = parsed.ok_or_else(|| {
                Error::InvalidSpectrum(format!("line {lineno}: expected `order count`, got {line:?}"))
            })?;
            entries.push(entry);
        }
        let s = OrderSpectrum::new(entries)?;
        if s.group_order != declared {
            return Err(Error::InvalidSpectrum(format!(
                "header declares order {declared} but counts sum to {}",
                s.group_order
            )));
        }
        Ok(s)
    }
}

/// Order histogram of a coset `xN`: same shape as a spectrum, but the
/// identity need not occur and orders need not divide the total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderHistogram {
    total: Nat,
    counts: BTreeMap<u64, Nat>,
}

impl OrderHistogram {
    pub(crate) fn from_counts(counts: BTreeMap<u64, Nat>) -> Self {
        let total = counts.values().sum();
        OrderHistogram { total, counts }
    }

    pub fn total(&self) -> &Nat {
        &self.total
    }

    pub fn count(&self, order: u64) -> Nat {
        self.counts.get(&order).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &Nat)> + '_ {
        self.counts.iter().map(|(&d, c)| (d, c))
    }

    /// Fraction of the coset whose order divides `k`.
    pub fn rho(&self, k: u64) -> Rational {
        let hits = self
            .counts
            .iter()
            .filter(|(&d, _)| k % d == 0)
            .map(|(_, c)| c)
            .sum();
        ratio(hits, self.total.clone())
    }

    pub fn rho_star(&self, k: u64) -> Rational {
        ratio(self.count(k), self.total.clone())
    }

    /// Converts into a spectrum if the histogram satisfies the group invariants.
    pub fn into_spectrum(self) -> Result<OrderSpectrum> {
        OrderSpectrum::new(self.counts)
    }
}

/// Smallest `n >= 0` with `rho_star(H x C_k^n, k) > eps`.
///
/// Such an `n` exists exactly when `rho(H, k) > eps`: `rho_star(C_k^n, k)`
/// tends to 1 and an element `(h, c)` with `o(h) | k`, `o(c) = k` has order `k`.
pub fn construction2_n(h: &OrderSpectrum, k: u64, eps: &Rational) -> Result<u64> {
    if k < 2 {
        return Err(Error::Precondition(format!("k must be at least 2, got {k}")));
    }
    let limit = h.rho(k);
    if &limit <= eps {
        return Err(Error::Precondition(format!(
            "rho_{k}(H) = {} does not exceed {}",
            format_ratio(&limit),
            format_ratio(eps)
        )));
    }
    let cyclic = OrderSpectrum::cyclic(k);
    let mut current = h.clone();
    let mut n = 0;
    while &current.rho_star(k) <= eps {
        current = current.direct_product(&cyclic);
        n += 1;
    }
    Ok(n)
}

pub fn ratio(num: Nat, den: Nat) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Renders `num/den` in lowest terms, including for integers (`1/1`, `0/1`).
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_ratio(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidParameter(format!("not a rational: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: num_bigint::BigInt = num.parse().map_err(|_| bad())?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Lowers a small exact ratio to `f64` for display only.
pub fn approx(r: &Rational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// `|G|` as a `u64`, when it fits.
pub fn small_order(s: &OrderSpectrum) -> Option<u64> {
    s.group_order().to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a5() -> OrderSpectrum {
        make_spectrum([(1, 1u32), (2, 15), (3, 20), (5, 24)]).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn make_spectrum_examples() {
        assert_eq!(a5().group_order(), &Nat::from(60u32));
        assert_eq!(make_spectrum([(1, 1u32)]).unwrap(), OrderSpectrum::trivial());
        assert!(make_spectrum([(1, 1u32), (2, 2)]).is_err());
        assert!(make_spectrum([(2, 1u32)]).is_err());
        assert!(make_spectrum([(1, 1u32), (1, 1)]).is_err());
        let odd = [(1, 1u32), (2, 1), (3, 1), (6, 3)];
        assert!(make_spectrum(odd).is_err(), "phi(3) = 2 must divide 1");
        let relaxed = OrderSpectrum::with_checks(odd, SpectrumChecks { totient: false });
        assert!(relaxed.is_ok());
    }

    #[test]
    fn rho_examples() {
        let s = a5();
        assert_eq!(s.rho(6), q(3, 5));
        assert_eq!(s.rho(1), q(1, 60));
        assert_eq!(s.rho(15), q(3, 4));
        assert_eq!(s.rho_star(5), q(2, 5));
        assert_eq!(s.rho_star(4), q(0, 1));
        assert_eq!(s.exponent(), 30);
        assert_eq!(OrderSpectrum::trivial().exponent(), 1);
        assert_eq!(s.rho(s.exponent()), q(1, 1));
    }

    #[test]
    fn cyclic_products() {
        let c6 = OrderSpectrum::cyclic(2).direct_product(&OrderSpectrum::cyclic(3));
        assert_eq!(c6, make_spectrum([(1, 1u32), (2, 1), (3, 2), (6, 2)]).unwrap());
        assert_eq!(c6, OrderSpectrum::cyclic(6));
        assert_eq!(a5().direct_product(&OrderSpectrum::trivial()), a5());
    }

    #[test]
    fn power_examples() {
        assert_eq!(a5().power(2), a5().direct_product(&a5()));
        assert_eq!(a5().power(3).group_order(), &Nat::from(216_000u32));
        assert_eq!(a5().power(0), OrderSpectrum::trivial());
    }

    /// The direct-power limit bound `rho*_e(H^n) >= 1 - sum_j (1 - |T_j|/|H|)^n`
    /// evaluated for `H = C6` (`|T_1| = 3`: order divisible by 2, `|T_2| = 4`:
    /// order divisible by 3).
    #[test]
    fn cyclic_six_powers_approach_one() {
        let c6 = OrderSpectrum::cyclic(6);
        let mut prev = Rational::zero();
        for n in 1..=10u64 {
            let value = c6.power(n).rho_star(6);
            let bound = Rational::one()
                - num_traits::pow(q(1, 2), n as usize)
                - num_traits::pow(q(1, 3), n as usize);
            assert!(value >= bound, "n = {n}");
            assert!(value > prev, "n = {n}");
            assert!(value < Rational::one());
            prev = value;
        }
    }

    /// Independent oracle: walk n upwards evaluating `H x C_k^n` through `power`.
    fn construction2_oracle(h: &OrderSpectrum, k: u64, eps: &Rational) -> u64 {
        (0..)
            .find(|&n| &h.direct_product(&OrderSpectrum::cyclic(k).power(n)).rho_star(k) > eps)
            .unwrap()
    }

    #[test]
    fn construction2_examples() {
        let half = q(1, 2);
        let n = construction2_n(&a5(), 6, &half).unwrap();
        assert_eq!(n, construction2_oracle(&a5(), 6, &half));

        let nine_tenths = q(9, 10);
        let n = construction2_n(&a5(), 30, &nine_tenths).unwrap();
        assert_eq!(n, construction2_oracle(&a5(), 30, &nine_tenths));
        let g = a5().direct_product(&OrderSpectrum::cyclic(30).power(n));
        assert!(g.rho_star(30) > nine_tenths);

        assert!(matches!(construction2_n(&a5(), 7, &half), Err(Error::Precondition(_))));
    }

    #[test]
    fn wreath_examples() {
        assert_eq!(OrderSpectrum::trivial().wreath_c2(), OrderSpectrum::cyclic(2));
        let d8 = OrderSpectrum::cyclic(2).wreath_c2();
        assert_eq!(d8, make_spectrum([(1, 1u32), (2, 5), (4, 2)]).unwrap());

        let mut g = OrderSpectrum::cyclic(2);
        for _ in 0..4 {
            g = g.wreath_c2();
        }
        assert_eq!(g.group_order(), &Nat::from(2_147_483_648u64));
        assert_eq!(g.rho(2), ratio(4_292_864u32.into(), 2_147_483_648u64.into()));
        assert_eq!(g.rho(4), ratio(398_000_128u32.into(), 2_147_483_648u64.into()));
    }

    #[test]
    fn text_format() {
        let text = a5().to_text();
        assert_eq!(text, "order 60\n1 1\n2 15\n3 20\n5 24\n");
        assert_eq!(OrderSpectrum::from_text(&text).unwrap(), a5());
        assert!(OrderSpectrum::from_text("order 61\n1 1\n2 15\n3 20\n5 24\n").is_err());
        assert!(OrderSpectrum::from_text("1 1\n").is_err());
    }

    #[test]
    fn ratio_format() {
        assert_eq!(format_ratio(&q(36, 60)), "3/5");
        assert_eq!(format_ratio(&q(1, 1)), "1/1");
        assert_eq!(format_ratio(&q(0, 7)), "0/1");
        assert_eq!(parse_ratio("1156/7920").unwrap(), q(1156, 7920));
        assert_eq!(parse_ratio(" 2 ").unwrap(), q(2, 1));
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("x").is_err());
    }
}

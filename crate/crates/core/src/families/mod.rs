//! Named group families: permutation constructors and closed-form spectra.
//!
//! The constructors and the formulas share nothing beyond the parameter
//! checks, so comparing them is a genuine cross-check.

pub mod displayed;
pub mod linear;
pub mod semilinear;
pub mod suzuki;
pub mod symmetric;

use std::fmt;
use std::str::FromStr;

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, ProjectiveLine, SuzukiOvoid};
use crate::group::{generate_on, ElementSet};
use crate::perm::Permutation;
use crate::spectrum::{Nat, OrderSpectrum, Rational};

pub use linear::{pgl2_order, pgl2_rho, pgl2_spectrum, psl2_even_rho, psl2_order, psl2_rho, psl2_spectrum};
pub use semilinear::{psigmal2_coset_rho, psigmal2_coset_terms, semilinear_order, semilinear_spectrum, RatioKind, Variant};
pub use suzuki::{suzuki_order, suzuki_rho, suzuki_spectrum, two_element_splits, SuzukiParams, TwoElementSplit};
pub use symmetric::{alt_rho_star_p, an_spectrum, partitions, sn_spectrum, spq_bound, spq_rho_star, spq_rho_star_n, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Psl2,
    Pgl2,
    PSigmaL2,
    PGammaL2,
    Sz,
    Sym,
    Alt,
    Cyclic,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Psl2,
        Family::Pgl2,
        Family::PSigmaL2,
        Family::PGammaL2,
        Family::Sz,
        Family::Sym,
        Family::Alt,
        Family::Cyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Psl2 => "PSL2",
            Family::Pgl2 => "PGL2",
            Family::PSigmaL2 => "PSigmaL2",
            Family::PGammaL2 => "PGammaL2",
            Family::Sz => "Sz",
            Family::Sym => "Sym",
            Family::Alt => "Alt",
            Family::Cyclic => "Cyclic",
        }
    }

    /// True for the families parametrized by a field order.
    pub fn over_field(self) -> bool {
        matches!(self, Family::Psl2 | Family::Pgl2 | Family::PSigmaL2 | Family::PGammaL2 | Family::Sz)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let family = match s.to_ascii_lowercase().as_str() {
            "psl2" | "psl" => Family::Psl2,
            "pgl2" | "pgl" => Family::Pgl2,
            "psigmal2" | "psigmal" => Family::PSigmaL2,
            "pgammal2" | "pgammal" => Family::PGammaL2,
            "sz" | "suzuki" => Family::Sz,
            "sym" | "s" => Family::Sym,
            "alt" | "a" => Family::Alt,
            "cyclic" | "c" => Family::Cyclic,
            _ => return Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        };
        Ok(family)
    }
}

/// A family member with validated parameter: `q` for the field families,
/// `n` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    param: u64,
    p: u64,
    m: u32,
}

impl FamilySpec {
    pub fn new(family: Family, param: u64) -> Result<Self> {
        let (p, m) = if family.over_field() {
            let (p, m) = prime_power(param)
                .ok_or_else(|| Error::InvalidParameter(format!("{family}: {param} is not a prime power")))?;
            if param > crate::field::MAX_FIELD_ORDER {
                return Err(Error::InvalidParameter(format!("{family}: q = {param} is too large")));
            }
            (p, m)
        } else {
            if param == 0 {
                return Err(Error::InvalidParameter(format!("{family}: n must be at least 1")));
            }
            (0, 0)
        };
        if family == Family::Sz {
            SuzukiParams::new(param)?;
        }
        Ok(FamilySpec { family, param, p, m })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `q` or `n`.
    pub fn param(&self) -> u64 {
        self.param
    }

    /// `(p, m)` with `q = p^m`, for the field families.
    pub fn field_shape(&self) -> Option<(u64, u32)> {
        self.family.over_field().then_some((self.p, self.m))
    }

    /// `r = 2^a` for `Sz(2^(2a+1))`.
    pub fn suzuki_r(&self) -> Option<u64> {
        (self.family == Family::Sz).then(|| SuzukiParams::new(self.param).expect("validated").r)
    }

    /// The classical order formula.
    pub fn order(&self) -> Nat {
        let q = self.param;
        match self.family {
            Family::Psl2 => psl2_order(q).expect("validated"),
            Family::Pgl2 => pgl2_order(q).expect("validated"),
            Family::PSigmaL2 => semilinear_order(Variant::Sigma, q).expect("validated"),
            Family::PGammaL2 => semilinear_order(Variant::Gamma, q).expect("validated"),
            Family::Sz => suzuki_order(q).expect("validated"),
            Family::Sym => symmetric::factorial(q),
            Family::Alt if q < 2 => Nat::from(1u32),
            Family::Alt => symmetric::factorial(q) / 2u32,
            Family::Cyclic => Nat::from(q),
        }
    }

    /// Number of points the constructed permutation group acts on.
    pub fn degree(&self) -> usize {
        let q = self.param as usize;
        match self.family {
            Family::Sz => q * q + 1,
            f if f.over_field() => q + 1,
            _ => q,
        }
    }

    /// Generators of the group in its natural permutation action.
    pub fn constructor(&self) -> Result<(usize, Vec<Permutation>)> {
        let gens = match self.family {
            Family::Psl2 | Family::Pgl2 | Family::PSigmaL2 | Family::PGammaL2 => self.line_generators()?,
            Family::Sz => self.suzuki_generators()?,
            Family::Sym => sym_generators(self.param as usize)?,
            Family::Alt => alt_generators(self.param as usize)?,
            Family::Cyclic => cyclic_generators(self.param as usize)?,
        };
        Ok((self.degree(), gens))
    }

    fn line_generators(&self) -> Result<Vec<Permutation>> {
        let f = Field::new(self.p, self.m)?;
        let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
        let w = f.primitive();
        let line = ProjectiveLine::new(f.clone());
        let mut gens = f
            .additive_basis()
            .into_iter()
            .map(|e| line.matrix([[one, e], [zero, one]]))
            .collect::<Result<Vec<_>>>()?;
        let diagonal = match self.family {
            Family::Psl2 | Family::PSigmaL2 => [[w, zero], [zero, f.inv(w).expect("nonzero")]],
            _ => [[w, zero], [zero, one]],
        };
        gens.push(line.matrix(diagonal)?);
        gens.push(line.matrix([[zero, f.neg(one)], [one, zero]])?);
        if matches!(self.family, Family::PSigmaL2 | Family::PGammaL2) && self.m > 1 {
            gens.push(line.permutation(|[x, y]| [f.frobenius(x, 1), f.frobenius(y, 1)])?);
        }
        Ok(gens)
    }

    fn suzuki_generators(&self) -> Result<Vec<Permutation>> {
        let ovoid = SuzukiOvoid::new(Field::new(self.p, self.m)?)?;
        let f = ovoid.field().clone();
        let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
        let th = |x| ovoid.theta(x);
        // unipotent element fixing (0,0,0,1) and sending (b, c) to (b + a, c + d + a^theta b)
        let unipotent = |a: FieldElement, d: FieldElement| {
            let a_th = th(a);
            let corner = f.add(f.add(f.mul(a, d), f.mul(a_th, f.mul(a, a))), th(d));
            [
                [one, zero, zero, zero],
                [a, one, zero, zero],
                [d, a_th, one, zero],
                [corner, f.add(d, f.mul(a_th, a)), a, one],
            ]
        };
        let k = f.primitive();
        let k_th = th(k);
        let torus = [
            [one, zero, zero, zero],
            [zero, k, zero, zero],
            [zero, zero, f.mul(k_th, k), zero],
            [zero, zero, zero, f.mul(k_th, f.mul(k, k))],
        ];
        let reversal = std::array::from_fn(|r| std::array::from_fn(|c| if r + c == 3 { one } else { zero }));
        [unipotent(one, zero), unipotent(zero, one), torus, reversal]
            .into_iter()
            .map(|m| ovoid.matrix(m))
            .collect()
    }

    /// Enumerates the constructed group, failing if its order differs from
    /// [`FamilySpec::order`].
    pub fn build(&self, cap: u64) -> Result<ElementSet> {
        let expected = self.order();
        if expected > Nat::from(cap) {
            return Err(Error::CapExceeded(cap));
        }
        let (degree, gens) = self.constructor()?;
        let g = generate_on(degree, &gens, cap)?.with_label(self.to_string());
        if Nat::from(g.order()) != expected {
            return Err(Error::OrderGate { group: self.to_string(), expected: expected.to_string(), found: g.order() });
        }
        Ok(g)
    }

    /// The spectrum from class counts, where a closed form is available.
    pub fn spectrum(&self) -> Option<OrderSpectrum> {
        let q = self.param;
        let s = match self.family {
            Family::Psl2 => psl2_spectrum(q).ok()?,
            Family::Pgl2 => pgl2_spectrum(q).ok()?,
            Family::PSigmaL2 | Family::PGammaL2 if self.m == 1 => {
                let variant = if self.family == Family::PSigmaL2 { Variant::Sigma } else { Variant::Gamma };
                base_spectrum(variant, q)?
            }
            Family::PSigmaL2 => semilinear_spectrum(self.p, self.m as u64, Variant::Sigma).ok()?,
            Family::PGammaL2 => semilinear_spectrum(self.p, self.m as u64, Variant::Gamma).ok()?,
            Family::Sz => suzuki_spectrum(q).ok()?,
            Family::Sym => sn_spectrum(q),
            Family::Alt => an_spectrum(q),
            Family::Cyclic => OrderSpectrum::cyclic(q),
        };
        Some(s)
    }

    /// `rho_k` from the closed forms.
    pub fn rho(&self, k: u64) -> Result<Rational> {
        match self.family {
            Family::Psl2 => Ok(linear::psl2_data(self.param)?.rho(k)),
            Family::Pgl2 => pgl2_rho(self.param, k),
            Family::Sz => suzuki_rho(self.param, k),
            _ => self.spectrum().map(|s| s.rho(k)).ok_or_else(|| {
                Error::Precondition(format!("no closed form for {self}; enumerate it instead"))
            }),
        }
    }
}

fn base_spectrum(variant: Variant, q: u64) -> Option<OrderSpectrum> {
    match variant {
        Variant::Sigma => psl2_spectrum(q).ok(),
        Variant::Gamma => pgl2_spectrum(q).ok(),
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.param;
        match self.family {
            Family::Psl2 => write!(f, "PSL(2,{n})"),
            Family::Pgl2 => write!(f, "PGL(2,{n})"),
            Family::PSigmaL2 => write!(f, "PSigmaL(2,{n})"),
            Family::PGammaL2 => write!(f, "PGammaL(2,{n})"),
            Family::Sz => write!(f, "Sz({n})"),
            Family::Sym => write!(f, "S({n})"),
            Family::Alt => write!(f, "A({n})"),
            Family::Cyclic => write!(f, "C({n})"),
        }
    }
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Result<Permutation> {
    let pts: Vec<u32> = points.into_iter().map(|i| i as u32).collect();
    Permutation::from_cycles(degree, &[&pts])
}

fn sym_generators(n: usize) -> Result<Vec<Permutation>> {
    if n < 2 {
        return Ok(vec![]);
    }
    Ok(vec![cycle(n, 1..=n)?, cycle(n, [1, 2])?])
}

fn alt_generators(n: usize) -> Result<Vec<Permutation>> {
    (3..=n).map(|i| cycle(n, [1, 2, i])).collect()
}

fn cyclic_generators(n: usize) -> Result<Vec<Permutation>> {
    if n < 2 {
        return Ok(vec![]);
    }
    Ok(vec![cycle(n, 1..=n)?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    fn spec(f: Family, n: u64) -> FamilySpec {
        FamilySpec::new(f, n).unwrap()
    }

    #[test]
    fn parsing_and_display() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("s".parse::<Family>().unwrap(), Family::Sym);
        assert!("PSU3".parse::<Family>().is_err());
        assert_eq!(spec(Family::PSigmaL2, 27).to_string(), "PSigmaL(2,27)");
        assert!(FamilySpec::new(Family::Psl2, 6).is_err());
        assert!(FamilySpec::new(Family::Sz, 32).is_ok());
        assert!(FamilySpec::new(Family::Sz, 16).is_err());
        assert!(FamilySpec::new(Family::Sym, 0).is_err());
        assert_eq!(spec(Family::Sz, 32).suzuki_r(), Some(4));
    }

    #[test]
    fn constructed_orders() {
        let cases = [
            (Family::Psl2, 9, 360u64),
            (Family::Psl2, 8, 504),
            (Family::Psl2, 2, 6),
            (Family::Psl2, 3, 12),
            (Family::Pgl2, 9, 720),
            (Family::Pgl2, 4, 60),
            (Family::PSigmaL2, 9, 720),
            (Family::PSigmaL2, 7, 168),
            (Family::PGammaL2, 9, 1440),
            (Family::PGammaL2, 8, 1512),
            (Family::Sym, 1, 1),
            (Family::Sym, 2, 2),
            (Family::Sym, 6, 720),
            (Family::Alt, 1, 1),
            (Family::Alt, 2, 1),
            (Family::Alt, 3, 3),
            (Family::Alt, 7, 2520),
            (Family::Cyclic, 1, 1),
            (Family::Cyclic, 12, 12),
        ];
        for (f, n, order) in cases {
            let s = spec(f, n);
            assert_eq!(s.order(), Nat::from(order), "{s}");
            let g = s.build(DEFAULT_CAP).unwrap();
            assert_eq!(g.order(), order, "{s}");
            assert_eq!(g.degree(), s.degree());
        }
    }

    #[test]
    fn suzuki_eight_passes_order_gate() {
        let g = spec(Family::Sz, 8).build(DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 29120);
        assert_eq!(g.degree(), 65);
    }

    #[test]
    fn pgammal_32_order() {
        assert_eq!(spec(Family::PGammaL2, 32).order(), Nat::from(163680u32));
    }

    #[test]
    fn closed_forms_match_enumeration() {
        let cases = [
            (Family::Psl2, 5),
            (Family::Psl2, 7),
            (Family::Psl2, 8),
            (Family::Psl2, 9),
            (Family::Pgl2, 5),
            (Family::Pgl2, 8),
            (Family::PSigmaL2, 4),
            (Family::PGammaL2, 9),
            (Family::Sym, 6),
            (Family::Alt, 6),
            (Family::Cyclic, 10),
        ];
        for (f, n) in cases {
            let s = spec(f, n);
            if let Some(formula) = s.spectrum() {
                assert_eq!(formula, s.build(DEFAULT_CAP).unwrap().spectrum(), "{s}");
            }
        }
    }

    #[test]
    fn capped_build_fails_before_enumerating() {
        assert!(matches!(spec(Family::Psl2, 27).build(100), Err(Error::CapExceeded(100))));
    }
}

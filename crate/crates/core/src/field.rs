//! Arithmetic in GF(p^m), and the point sets on which the matrix groups act.
//!
//! The modulus is the least monic irreducible of degree `m`, comparing the
//! coefficient tuples `(c_0, c_1, ..., c_{m-1})` lexicographically. An element
//! `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` is encoded as the integer
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`, and that encoding fixes every
//! ordering used below.

use std::fmt;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest field order this module will build tables for.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// GF(p^m) with its modulus and log tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u64,
    m: u32,
    q: u64,
    modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The field of order `p^m`; the same `(p, m)` always gives the same modulus.
pub fn field(p: u64, m: u32) -> Result<Field> {
    Field::new(p, m)
}

impl Field {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("field characteristic {p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("field degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::InvalidParameter(format!("GF({p}^{m}) is too large")))?;
        let modulus = smallest_irreducible(p, m);
        let mut f = Field { p, m, q, modulus, exp: Vec::new(), log: Vec::new() };
        f.build_tables();
        Ok(f)
    }

    /// The field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, m) = crate::arith::prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        Field::new(p, m)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Coefficients `c_0..c_m` of the monic modulus.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn element(&self, encoding: u64) -> FieldElement {
        assert!(encoding < self.q, "encoding {encoding} outside GF({})", self.q);
        FieldElement(encoding as u32)
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    /// The image of the integer `n` in the prime field.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    /// Coefficients `c_0..c_{m-1}`.
    pub fn coefficients(&self, x: FieldElement) -> Vec<u64> {
        let mut n = x.0 as u64;
        (0..self.m)
            .map(|_| {
                let c = n % self.p;
                n /= self.p;
                c
            })
            .collect()
    }

    fn encode_coefficients(&self, coeffs: &[u64]) -> FieldElement {
        FieldElement(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c) as u32)
    }

    /// The least element of multiplicative order `q - 1`.
    pub fn primitive(&self) -> FieldElement {
        FieldElement(self.exp[1 % self.exp.len()])
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut out = 0;
        let mut place = 1;
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out as u32)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let coeffs: Vec<u64> = self.coefficients(a).into_iter().map(|c| (self.p - c) % self.p).collect();
        self.encode_coefficients(&coeffs)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.q as usize - 1;
        let e = (self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize) % n;
        FieldElement(self.exp[e])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        let n = self.q as usize - 1;
        Some(FieldElement(self.exp[(n - self.log[a.0 as usize] as usize) % n]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Option<FieldElement> {
        self.inv(b).map(|b| self.mul(a, b))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.q - 1;
        let l = self.log[a.0 as usize] as u64;
        FieldElement(self.exp[((l as u128 * e as u128) % n as u128) as usize])
    }

    /// `x^(p^i)`.
    pub fn frobenius(&self, x: FieldElement, i: u32) -> FieldElement {
        let mut y = x;
        for _ in 0..i % self.m {
            y = self.pow(y, self.p);
        }
        y
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let n = self.q - 1;
        Some(n / crate::arith::gcd(n, self.log[a.0 as usize] as u64))
    }

    /// An additive basis of the field over the prime field: `1, x, ..., x^{m-1}`.
    pub fn additive_basis(&self) -> Vec<FieldElement> {
        (0..self.m).map(|i| FieldElement(self.p.pow(i) as u32)).collect()
    }

    /// Product of polynomials modulo the modulus, on encodings; used only to
    /// build the log tables.
    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let (p, m) = (self.p, self.m as usize);
        let a = self.coefficients(FieldElement(a as u32));
        let b = self.coefficients(FieldElement(b as u32));
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for d in (m..2 * m).rev() {
            let c = prod[d];
            if c != 0 {
                for (i, &mc) in self.modulus.iter().enumerate() {
                    let k = d - m + i;
                    prod[k] = (prod[k] + (p - c) * mc % p) % p;
                }
            }
        }
        self.encode_coefficients(&prod[..m]).0 as u64
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let n = (q - 1) as usize;
        self.log = vec![0; q as usize];
        for g in 1..q {
            let mut exp = Vec::with_capacity(n);
            let mut x = 1u64;
            for _ in 0..n {
                exp.push(x as u32);
                x = self.mul_slow(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == n {
                for (i, &e) in exp.iter().enumerate() {
                    self.log[e as usize] = i as u32;
                }
                self.exp = exp;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }
}

/// Least monic irreducible of degree `m` over GF(p), as coefficients `c_0..c_m`.
fn smallest_irreducible(p: u64, m: u32) -> Vec<u64> {
    let count = p.pow(m);
    (0..count)
        .map(|t| {
            // c_0 is the most significant digit of t
            let mut coeffs = vec![0u64; m as usize + 1];
            let mut n = t;
            for i in (0..m as usize).rev() {
                coeffs[i] = n % p;
                n /= p;
            }
            coeffs[m as usize] = 1;
            coeffs
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for t in 0..p.pow(d as u32) {
            let mut g = vec![0u64; d + 1];
            let mut n = t;
            for c in g.iter_mut().take(d) {
                *c = n % p;
                n /= p;
            }
            g[d] = 1;
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` modulo the monic `g` over GF(p).
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    for d in (dg..r.len()).rev() {
        let c = r[d];
        if c != 0 {
            for (i, &gc) in g.iter().enumerate() {
                let k = d - dg + i;
                r[k] = (r[k] + (p - c) * gc % p) % p;
            }
        }
    }
    r.truncate(dg);
    r
}

/// A point of projective space, scaled so its first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint(Vec<FieldElement>);

impl ProjectivePoint {
    pub fn new(f: &Field, coords: &[FieldElement]) -> Option<Self> {
        let lead = coords.iter().find(|c| !c.is_zero())?;
        let s = f.inv(*lead).expect("nonzero");
        Some(ProjectivePoint(coords.iter().map(|&c| f.mul(c, s)).collect()))
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.0
    }
}

/// The `q + 1` points of the projective line: the classes of `(x, 1)` for
/// `x` in encoding order, then the class of `(1, 0)`.
#[derive(Debug, Clone)]
pub struct ProjectiveLine {
    field: Field,
}

pub fn projective_line(f: &Field) -> Vec<ProjectivePoint> {
    ProjectiveLine::new(f.clone()).points()
}

impl ProjectiveLine {
    pub fn new(field: Field) -> Self {
        ProjectiveLine { field }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.field.q as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> Vec<ProjectivePoint> {
        let f = &self.field;
        f.elements()
            .map(|x| [x, FieldElement::ONE])
            .chain(std::iter::once([FieldElement::ONE, FieldElement::ZERO]))
            .map(|c| ProjectivePoint::new(f, &c).expect("nonzero"))
            .collect()
    }

    /// Homogeneous coordinates of point `i`.
    pub fn coords(&self, i: usize) -> [FieldElement; 2] {
        if i == self.field.q as usize {
            [FieldElement::ONE, FieldElement::ZERO]
        } else {
            [FieldElement(i as u32), FieldElement::ONE]
        }
    }

    pub fn index_of(&self, [x, y]: [FieldElement; 2]) -> Option<usize> {
        if y.is_zero() {
            return (!x.is_zero()).then_some(self.field.q as usize);
        }
        Some(self.field.div(x, y)?.0 as usize)
    }

    /// The permutation induced by a map on homogeneous coordinates, which
    /// must be a bijection of the point set.
    pub fn permutation<F>(&self, map: F) -> Result<Permutation>
    where
        F: Fn([FieldElement; 2]) -> [FieldElement; 2],
    {
        let images = (0..self.len())
            .map(|i| {
                self.index_of(map(self.coords(i))).map(|j| j as u32).ok_or_else(|| {
                    Error::InvalidParameter("map sends a point to the zero vector".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    /// The Moebius action of the matrix `[[a, b], [c, d]]` on column vectors.
    pub fn matrix(&self, [[a, b], [c, d]]: [[FieldElement; 2]; 2]) -> Result<Permutation> {
        let f = &self.field;
        self.permutation(|[x, y]| [f.add(f.mul(a, x), f.mul(b, y)), f.add(f.mul(c, x), f.mul(d, y))])
    }
}

/// The Suzuki ovoid in PG(3, q), `q = 2^(2a+1)` with `a >= 1`: the points
/// `(1, b, c, bc + b^(theta+2) + c^theta)` in order of `b*q + c`, then
/// `(0, 0, 0, 1)`, where `theta` is `x -> x^(2^(a+1))`.
#[derive(Debug, Clone)]
pub struct SuzukiOvoid {
    field: Field,
    theta: u64,
}

pub fn suzuki_ovoid(f: &Field) -> Result<Vec<ProjectivePoint>> {
    Ok(SuzukiOvoid::new(f.clone())?.points())
}

impl SuzukiOvoid {
    pub fn new(field: Field) -> Result<Self> {
        if field.p != 2 || field.m < 3 || field.m % 2 == 0 {
            return Err(Error::InvalidParameter(format!(
                "the Suzuki ovoid needs GF(2^(2a+1)) with a >= 1, got GF({}^{})",
                field.p, field.m
            )));
        }
        let a = (field.m - 1) / 2;
        Ok(SuzukiOvoid { field, theta: 1 << (a + 1) })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `x -> x^theta`, the square root of the Frobenius automorphism.
    pub fn theta(&self, x: FieldElement) -> FieldElement {
        self.field.pow(x, self.theta)
    }

    pub fn len(&self) -> usize {
        let q = self.field.q as usize;
        q * q + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn height(&self, b: FieldElement, c: FieldElement) -> FieldElement {
        let f = &self.field;
        let b2 = f.mul(b, b);
        let t = f.mul(self.theta(b), b2);
        f.add(f.add(f.mul(b, c), t), self.theta(c))
    }

    pub fn coords(&self, i: usize) -> [FieldElement; 4] {
        let q = self.field.q as usize;
        if i == q * q {
            return [FieldElement::ZERO, FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE];
        }
        let (b, c) = (FieldElement((i / q) as u32), FieldElement((i % q) as u32));
        [FieldElement::ONE, b, c, self.height(b, c)]
    }

    pub fn points(&self) -> Vec<ProjectivePoint> {
        (0..self.len())
            .map(|i| ProjectivePoint::new(&self.field, &self.coords(i)).expect("nonzero"))
            .collect()
    }

    /// Index of the point with these homogeneous coordinates, if it lies on the ovoid.
    pub fn index_of(&self, v: [FieldElement; 4]) -> Option<usize> {
        let f = &self.field;
        let q = f.q as usize;
        if v[0].is_zero() {
            return (v[1].is_zero() && v[2].is_zero() && !v[3].is_zero()).then_some(q * q);
        }
        let s = f.inv(v[0])?;
        let [b, c, d] = [f.mul(v[1], s), f.mul(v[2], s), f.mul(v[3], s)];
        (d == self.height(b, c)).then_some(b.0 as usize * q + c.0 as usize)
    }

    /// The permutation induced by a 4x4 matrix acting on column vectors;
    /// fails unless the matrix preserves the ovoid.
    pub fn matrix(&self, m: [[FieldElement; 4]; 4]) -> Result<Permutation> {
        let f = &self.field;
        let images = (0..self.len())
            .map(|i| {
                let v = self.coords(i);
                let w: [FieldElement; 4] = std::array::from_fn(|r| {
                    (0..4).fold(FieldElement::ZERO, |acc, k| f.add(acc, f.mul(m[r][k], v[k])))
                });
                self.index_of(w)
                    .map(|j| j as u32)
                    .ok_or_else(|| Error::InvalidParameter("matrix does not preserve the ovoid".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_monic_irreducible_brute(p: u64, m: u32) -> Vec<Vec<u64>> {
        // a polynomial is reducible iff it is a product of two monic polynomials
        // of positive degree; multiply out all such pairs
        let monic = |d: u32| -> Vec<Vec<u64>> {
            (0..p.pow(d))
                .map(|t| {
                    let mut c: Vec<u64> = (0..d).map(|i| t / p.pow(i) % p).collect();
                    c.push(1);
                    c
                })
                .collect()
        };
        let mut reducible = std::collections::HashSet::new();
        for d in 1..m {
            for a in monic(d) {
                for b in monic(m - d) {
                    let mut prod = vec![0u64; m as usize + 1];
                    for (i, x) in a.iter().enumerate() {
                        for (j, y) in b.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    reducible.insert(prod);
                }
            }
        }
        monic(m).into_iter().filter(|f| !reducible.contains(f)).collect()
    }

    #[test]
    fn modulus_is_least_irreducible() {
        for (p, m) in [(2, 2), (2, 3), (2, 5), (3, 3), (5, 2), (3, 2)] {
            let mut all = all_monic_irreducible_brute(p, m);
            all.sort_by(|a, b| a[..m as usize].cmp(&b[..m as usize]));
            assert_eq!(field(p, m).unwrap().modulus(), &all[0][..], "GF({p}^{m})");
        }
        assert_eq!(field(2, 1).unwrap().modulus(), &[0, 1]);
        assert!(field(4, 1).is_err());
        assert!(field(2, 0).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 4, 5, 8, 9, 25, 27, 32] {
            let f = Field::of_order(q).unwrap();
            assert_eq!(f.order(), q);
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                    assert_eq!(f.pow(a, q - 1), FieldElement::ONE);
                }
                assert_eq!(f.pow(a, q), a);
                assert_eq!(f.frobenius(a, f.degree()), a);
                assert_eq!(f.frobenius(a, 0), a);
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), FieldElement(f.mul_slow(a.0 as u64, b.0 as u64) as u32));
                }
            }
            assert_eq!(f.multiplicative_order(f.primitive()), Some(q - 1));
        }
    }

    #[test]
    fn frobenius_fixed_field() {
        let f = field(3, 3).unwrap();
        let fixed = f.elements().filter(|&x| f.frobenius(x, 1) == x).count();
        assert_eq!(fixed, 3);
        let f = field(2, 4).unwrap();
        assert_eq!(f.elements().filter(|&x| f.frobenius(x, 2) == x).count(), 4);
    }

    #[test]
    fn projective_lines() {
        for (q, n) in [(5, 6), (27, 28), (32, 33)] {
            let f = Field::of_order(q).unwrap();
            let pts = projective_line(&f);
            assert_eq!(pts.len(), n);
            let distinct: std::collections::HashSet<_> = pts.iter().collect();
            assert_eq!(distinct.len(), n);
            assert_eq!(pts.last().unwrap().coords(), &[FieldElement::ONE, FieldElement::ZERO]);
        }
    }

    #[test]
    fn suzuki_ovoids() {
        assert_eq!(suzuki_ovoid(&field(2, 3).unwrap()).unwrap().len(), 65);
        assert_eq!(suzuki_ovoid(&field(2, 5).unwrap()).unwrap().len(), 1025);
        assert!(suzuki_ovoid(&field(2, 2).unwrap()).is_err());
        assert!(suzuki_ovoid(&field(3, 3).unwrap()).is_err());
        let o = SuzukiOvoid::new(field(2, 3).unwrap()).unwrap();
        for i in 0..o.len() {
            assert_eq!(o.index_of(o.coords(i)), Some(i));
        }
        // theta squared is the Frobenius map x -> x^2
        let f = o.field();
        assert!(f.elements().all(|x| o.theta(o.theta(x)) == f.mul(x, x)));
    }
}

//! Permutations of `{1..n}`.
//!
//! Points are 1-based in every textual form and 0-based in memory.
//! Products act on the right: `p.then(&q)` sends `i` to `q(p(i))`.

use std::fmt;

use crate::arith::lcm;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// From 0-based images; fails unless `images` is a bijection on `0..len`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Permutation {
                    text: format!("{images:?}"),
                    reason: "not a bijection".into(),
                });
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// From 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let text: String = cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        parse_perm(if text.is_empty() { "()" } else { &text }, degree)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// `x^-1 self x`.
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        x.inverse().then(self).then(x)
    }

    /// Cycle lengths, including fixed points, in order of their least point.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1, |acc, c| lcm(acc, c as u64))
    }

    /// Disjoint cycles of length at least 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32 + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// 1-based image list, e.g. `[2,3,1]`.
    pub fn to_image_list(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Cycle notation; `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// Parses disjoint-cycle notation `(1,2,3)(4,5)` or an image list `[2,3,1,5,4]`.
/// Fixed points may be omitted in cycle form; an image list must have length `degree`.
pub fn parse_perm(text: &str, degree: usize) -> Result<Permutation> {
    let err = |reason: String| Error::Permutation { text: text.to_string(), reason };
    let trimmed = text.trim();
    let point = |tok: &str| -> Result<u32> {
        let tok = tok.trim();
        let x: u32 = tok.parse().map_err(|_| err(format!("bad point {tok:?}")))?;
        if x == 0 || x as usize > degree {
            return Err(err(format!("point {x} outside 1..{degree}")));
        }
        Ok(x - 1)
    };

    if let Some(body) = trimmed.strip_prefix('[') {
        let body = body.strip_suffix(']').ok_or_else(|| err("unterminated image list".into()))?;
        let images = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',').map(point).collect::<Result<Vec<_>>>()?
        };
        if images.len() != degree {
            return Err(err(format!("image list has {} entries, expected {degree}", images.len())));
        }
        return Permutation::from_images(images).map_err(|_| err("image list is not a bijection".into()));
    }

    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut rest = trimmed;
    if rest.is_empty() {
        return Err(err("empty permutation".into()));
    }
    while !rest.is_empty() {
        let body_start = rest.strip_prefix('(').ok_or_else(|| err("expected '('".into()))?;
        let close = body_start.find(')').ok_or_else(|| err("unterminated cycle".into()))?;
        let body = &body_start[..close];
        rest = body_start[close + 1..].trim_start();
        if body.trim().is_empty() {
            continue;
        }
        let cycle = body.split(',').map(point).collect::<Result<Vec<_>>>()?;
        for &x in &cycle {
            if std::mem::replace(&mut used[x as usize], true) {
                return Err(err(format!("point {} repeated", x + 1)));
            }
        }
        for (i, &x) in cycle.iter().enumerate() {
            images[x as usize] = cycle[(i + 1) % cycle.len()];
        }
    }
    Ok(Permutation { images })
}

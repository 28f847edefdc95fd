//! Inequalities and identities checked exhaustively over a corpus of small
//! groups and the shipped fixtures.
//!
//! Every check reports one [`PropertyOutcome`] per group and subject (a
//! prime, a normal subgroup, ...), quantifying over all relevant `k`.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{divisors, factorize, p_part};
use crate::error::{Error, Result};
use crate::expr::{Evaluator, GroupExpr};
use crate::families::{Family, FamilySpec};
use crate::field::MAX_FIELD_ORDER;
use crate::group::{
    center, centralizer, coset_partition, generate_on, is_normal, normalizer, quotient_spectrum, sylow_subgroup,
    ElementSet,
};
use crate::spectrum::{Nat, OrderSpectrum, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub property: &'static str,
    pub group: String,
    pub subject: String,
    pub holds: bool,
    /// The first violated instance, if any.
    pub detail: String,
}

impl fmt::Display for PropertyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "ok" } else { "VIOLATED" };
        write!(f, "{status} {} [{}; {}]", self.property, self.group, self.subject)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn outcome(property: &'static str, group: &str, subject: impl Into<String>, failure: Option<String>) -> PropertyOutcome {
    PropertyOutcome {
        property,
        group: group.to_string(),
        subject: subject.into(),
        holds: failure.is_none(),
        detail: failure.unwrap_or_default(),
    }
}

fn rat(n: impl Into<Nat>, d: impl Into<Nat>) -> Rational {
    Rational::new(n.into().into(), d.into().into())
}

fn first_failure<I, F>(ks: I, mut check: F) -> Option<String>
where
    I: IntoIterator<Item = u64>,
    F: FnMut(u64) -> Option<String>,
{
    ks.into_iter().find_map(&mut check)
}

/// `p^1, p^2, ...` up to the `p`-part of `n`.
fn prime_powers(p: u64, n: u64) -> impl Iterator<Item = u64> {
    let top = p_part(n, p);
    std::iter::successors(Some(p), move |&x| (x < top).then_some(x * p))
}

/// `rho_k <= rho_l` whenever `k | l`, and `rho*_k < rho_k` for `k >= 2`.
pub fn ratio_properties(label: &str, s: &OrderSpectrum) -> Vec<PropertyOutcome> {
    let ks = divisors(s.exponent());
    let monotone = first_failure(ks.iter().copied(), |k| {
        ks.iter()
            .filter(|&&l| l % k == 0)
            .find(|&&l| s.rho(k) > s.rho(l))
            .map(|l| format!("rho_{k} > rho_{l}"))
    });
    let mut probe = ks.clone();
    probe.extend([2 * s.exponent(), s.exponent() + 1]);
    let star = first_failure(probe.into_iter().filter(|&k| k >= 2), |k| {
        (s.rho_star(k) >= s.rho(k)).then(|| format!("rho*_{k} >= rho_{k}"))
    });
    let sums = first_failure(ks.iter().copied(), |k| {
        let total: Rational = divisors(k).into_iter().map(|d| s.rho_star(d)).sum();
        (total != s.rho(k)).then(|| format!("sum of rho*_d over d | {k} differs from rho_{k}"))
    });
    vec![
        outcome("rho monotone under divisibility", label, "all k | exponent", monotone),
        outcome("rho* below rho", label, "k >= 2", star),
        outcome("rho is the divisor sum of rho*", label, "all k | exponent", sums),
    ]
}

/// The wreath product identities and the stated equality conditions, on
/// spectra: for odd `k`, `rho_k(G wr C2) = rho_k(G)^2/2 <= rho_k(G)/2`; for
/// even `k`, `rho_k(G wr C2) <= rho_k(G)(rho_k(G)+1)/2 <= rho_k(G)`.
pub fn wreath_properties(label: &str, s: &OrderSpectrum) -> Vec<PropertyOutcome> {
    let w = s.wreath_c2();
    let e = s.exponent();
    let half = rat(1u32, 2u32);
    let one = Rational::one();
    let odd = first_failure(divisors(2 * e).into_iter().filter(|k| k % 2 == 1), |k| {
        let r = s.rho(k);
        let bound = &r * &r * &half;
        if w.rho(k) != bound {
            return Some(format!("k = {k}: rho_k(G wr C2) differs from rho_k(G)^2/2"));
        }
        if bound > &r * &half {
            return Some(format!("k = {k}: rho_k(G)^2/2 > rho_k(G)/2"));
        }
        ((bound == &r * &half) != (k % e == 0)).then(|| format!("k = {k}: equality condition fails"))
    });
    let even = first_failure(divisors(2 * e).into_iter().filter(|k| k % 2 == 0), |k| {
        let r = s.rho(k);
        let r_half = s.rho(k / 2);
        let wk = w.rho(k);
        let middle = &r * (&r + &one) * &half;
        if wk != &r * &r * &half + &r_half * &half {
            return Some(format!("k = {k}: rho_k(G wr C2) differs from rho_k^2/2 + rho_(k/2)/2"));
        }
        if wk > middle || middle > r {
            return Some(format!("k = {k}: inequality chain fails"));
        }
        if (wk == middle) != (r == r_half) {
            return Some(format!("k = {k}: first equality condition fails"));
        }
        ((middle == r) != (k % e == 0)).then(|| format!("k = {k}: second equality condition fails"))
    });
    let alpha = &one - s.rho(2);
    let beta = &one - s.rho(4);
    let order = Rational::from_integer(s.group_order().clone().into());
    let mut closed = None;
    if w.rho(2) != &(&one - &alpha) * (&one - &alpha) * &half + &half / &order {
        closed = Some("rho_2 of the wreath product".to_string());
    } else if w.rho(4) != &(&one - &beta) * (&one - &beta) * &half + (&one - &alpha) * &half {
        closed = Some("rho_4 of the wreath product".to_string());
    } else if beta < alpha && alpha < one && beta > Rational::zero() {
        let bound = &one - (&alpha + &beta) * &half;
        if w.rho(4) >= bound {
            closed = Some("rho_4 not below 1 - (alpha + beta)/2".to_string());
        }
    }
    vec![
        outcome("wreath, odd k", label, "k | 2 exponent", odd),
        outcome("wreath, even k", label, "k | 2 exponent", even),
        outcome("wreath closed forms for rho_2 and rho_4", label, "k in {2, 4}", closed),
    ]
}

/// `rho_k(G) <= rho_k(G/N)` for every `k` dividing the exponent of `G`.
pub fn quotient_property(g: &ElementSet, gs: &OrderSpectrum, n: &ElementSet) -> Result<PropertyOutcome> {
    let qs = quotient_spectrum(g, n)?;
    let failure = first_failure(divisors(gs.exponent()), |k| {
        (gs.rho(k) > qs.rho(k)).then(|| format!("k = {k}: rho_k(G) > rho_k(G/N)"))
    });
    Ok(outcome("quotient bound", g.label(), format!("N of order {}", n.order()), failure))
}

/// For `P` generated by a Sylow `p`-subgroup and `N`, so that `P/N` is a
/// Sylow subgroup of `G/N`: `rho_{p^f}(G) <= rho_{p^f}(P)`.
pub fn sylow_quotient_property(
    g: &ElementSet,
    gs: &OrderSpectrum,
    n: &ElementSet,
    sylow: &ElementSet,
    p: u64,
) -> Result<PropertyOutcome> {
    let gens: Vec<_> = sylow.generators().iter().chain(n.generators()).cloned().collect();
    let big_p = generate_on(g.degree(), &gens, g.order())?;
    let ps = big_p.spectrum();
    let failure = first_failure(prime_powers(p, gs.exponent()), |k| {
        (gs.rho(k) > ps.rho(k)).then(|| format!("k = {k}: rho_k(G) > rho_k(P)"))
    });
    Ok(outcome("Sylow quotient bound", g.label(), format!("p = {p}, N of order {}", n.order()), failure))
}

/// `rho_k(G) <= rho_k(Z) rho_k(G/Z)` for the centre `Z`.
pub fn center_property(g: &ElementSet, gs: &OrderSpectrum, z: &ElementSet) -> Result<PropertyOutcome> {
    let zs = z.spectrum();
    let qs = quotient_spectrum(g, z)?;
    let failure = first_failure(divisors(gs.exponent()), |k| {
        (gs.rho(k) > zs.rho(k) * qs.rho(k)).then(|| format!("k = {k}: rho_k(G) > rho_k(Z) rho_k(G/Z)"))
    });
    Ok(outcome("central quotient bound", g.label(), format!("Z of order {}", z.order()), failure))
}

/// The self-normalising bound for a Sylow subgroup `S` and each `k = p^a`,
/// plus its consequence: `rho_k(G) > 1/2` forces `S` self-normalising with
/// `rho_k(S) > 1/2`. Also `rho_{p^b}(G) <= p^(b-a)` where `p^a` is the
/// exponent of `Z(S)`.
pub fn sylow_properties(g: &ElementSet, gs: &OrderSpectrum, s: &ElementSet, p: u64) -> Result<Vec<PropertyOutcome>> {
    let ss = s.spectrum();
    let n = normalizer(g, s)?;
    let index = Rational::from_integer((n.order() / s.order()).into());
    let g_order = rat(g.order(), 1u32);
    let n_order = rat(n.order(), 1u32);
    let half = rat(1u32, 2u32);
    let bound = first_failure(prime_powers(p, gs.exponent()), |k| {
        let rhs = ss.rho(k) / &index - n_order.recip() + g_order.recip();
        if gs.rho(k) > rhs {
            return Some(format!("k = {k}: rho_k(G) above the bound"));
        }
        (gs.rho(k) > half && (n.order() != s.order() || ss.rho(k) <= half))
            .then(|| format!("k = {k}: rho_k(G) > 1/2 without a self-normalising Sylow subgroup"))
    });
    let zs = center(s)?.spectrum();
    let a = zs.exponent();
    let central = first_failure(prime_powers(p, a), |k| {
        (gs.rho(k) > rat(k, a)).then(|| format!("k = {k}: rho_k(G) > k / exp Z(P) = {k}/{a}"))
    });
    let subject = format!("p = {p}");
    Ok(vec![
        outcome("self-normalising bound", g.label(), subject.clone(), bound),
        outcome("Sylow centre exponent bound", g.label(), subject, central),
    ])
}

/// Every property that applies to one concrete group. `normal` lists known
/// normal subgroups beyond the centre and the index-2 subgroups.
pub fn group_properties(g: &ElementSet, normal: &[ElementSet], index2: bool) -> Result<Vec<PropertyOutcome>> {
    let gs = g.spectrum();
    let mut out = ratio_properties(g.label(), &gs);
    let z = center(g)?;
    if z.order() > 1 {
        out.push(center_property(g, &gs, &z)?);
    }
    let mut normals: Vec<ElementSet> = Vec::new();
    if z.order() > 1 && z.order() < g.order() {
        normals.push(z);
    }
    if index2 {
        normals.extend(crate::group::index2_subgroups(g)?);
    }
    for n in normal {
        if n.order() > 1 && n.order() < g.order() && is_normal(g, n)? {
            normals.push(n.clone());
        }
    }
    let sylows = factorize(g.order())
        .into_iter()
        .map(|(p, _)| Ok((p, sylow_subgroup(g, p)?)))
        .collect::<Result<Vec<_>>>()?;
    for (p, s) in &sylows {
        out.extend(sylow_properties(g, &gs, s, *p)?);
    }
    for n in &normals {
        out.push(quotient_property(g, &gs, n)?);
        for (p, s) in &sylows {
            if (g.order() / n.order()) % p == 0 {
                out.push(sylow_quotient_property(g, &gs, n, s, *p)?);
            }
        }
    }
    Ok(out)
}

/// Every family member and fixture of order at most `max_order`, then
/// products of two of them, direct powers and wreath products with `C2`,
/// all of order at most `max_order`.
pub fn expression_corpus(ev: &Evaluator, max_order: u64) -> Vec<GroupExpr> {
    let bound = Nat::from(max_order);
    let mut atoms = Vec::new();
    for family in Family::ALL {
        for param in 1..=max_order.min(MAX_FIELD_ORDER) {
            let Ok(spec) = FamilySpec::new(family, param) else { continue };
            if spec.order() > bound {
                // orders grow with the parameter except across field shapes
                if family.over_field() {
                    continue;
                }
                break;
            }
            if spec.order() > Nat::one() || family == Family::Cyclic {
                atoms.push(GroupExpr::Family(spec));
            }
        }
    }
    for entry in ev.fixtures.entries() {
        if entry.expected_order <= max_order {
            atoms.push(GroupExpr::Load(entry.label.clone()));
        }
    }
    let order = |e: &GroupExpr| ev.order(e).expect("corpus atoms have known orders");
    let mut out = atoms.clone();
    for (i, a) in atoms.iter().enumerate() {
        for b in &atoms[i..] {
            let o = order(a) * order(b);
            if order(a) > Nat::one() && order(b) > Nat::one() && o <= bound {
                out.push(GroupExpr::Product(vec![a.clone(), b.clone()]));
            }
        }
        for n in 2.. {
            let o = order(a).pow(n);
            if order(a) == Nat::one() || o > bound {
                break;
            }
            out.push(a.clone().power(n));
        }
        if order(a) * order(a) * 2u32 <= bound {
            out.push(a.clone().wr2());
            if order(a).pow(4) * 8u32 <= bound {
                out.push(a.clone().wr2().wr2());
            }
        }
    }
    out
}

/// Group properties for an expression, using the normal subgroups visible
/// in its structure.
pub fn expression_properties(ev: &Evaluator, e: &GroupExpr) -> Result<Vec<PropertyOutcome>> {
    let g = ev.concrete(e)?;
    let normal = ev.visible_normal_subgroups(e)?;
    let mut out = group_properties(&g, &normal, true)?;
    if matches!(e, GroupExpr::Wreath2(_)) {
        let inner = match e {
            GroupExpr::Wreath2(inner) => ev.spectrum(inner)?,
            _ => unreachable!(),
        };
        if g.spectrum() != inner.wreath_c2() {
            out.push(outcome(
                "wreath spectrum matches enumeration",
                g.label(),
                "whole spectrum",
                Some("enumerated spectrum differs".into()),
            ));
        }
    }
    Ok(out)
}

/// A field-automorphism extension `G = N : K` on the projective line with
/// `H = C_N(K)`, for the coset-partition identity.
#[derive(Debug, Clone)]
pub struct SemilinearInstance {
    pub g: ElementSet,
    pub n: ElementSet,
    pub h: ElementSet,
    pub hk: ElementSet,
}

/// Builds `PSigmaL_2(q)` or `PGammaL_2(q)` with `N = PSL_2(q)` or
/// `PGL_2(q)` and `K` generated by the Frobenius map.
pub fn semilinear_instance(family: Family, q: u64, cap: u64) -> Result<SemilinearInstance> {
    let inner = match family {
        Family::PSigmaL2 => Family::Psl2,
        Family::PGammaL2 => Family::Pgl2,
        _ => return Err(Error::InvalidParameter(format!("{family} is not a semilinear family"))),
    };
    let spec = FamilySpec::new(family, q)?;
    if spec.field_shape().map(|(_, m)| m) == Some(1) {
        return Err(Error::InvalidParameter(format!("{spec} has no field automorphism")));
    }
    let g = spec.build(cap)?;
    let n = FamilySpec::new(inner, q)?.build(cap)?;
    let frob = spec.constructor()?.1.pop().expect("the Frobenius generator comes last");
    let k = generate_on(g.degree(), std::slice::from_ref(&frob), cap)?;
    let h = centralizer(&n, &k)?;
    let gens: Vec<_> = h.generators().iter().cloned().chain([frob]).collect();
    let hk = generate_on(g.degree(), &gens, cap)?;
    Ok(SemilinearInstance { g, n, h, hk })
}

/// Checks that `N` and the conjugates of `HK \ H` partition `G`, and that
/// `rho_k(G) = rho_k(HK) - rho_k(H)/|K| + rho_k(N)/|K|` for every `k`
/// dividing the exponent.
pub fn coset_partition_properties(inst: &SemilinearInstance) -> Result<Vec<PropertyOutcome>> {
    let label = inst.g.label();
    let partition = coset_partition(&inst.g, &inst.n, &inst.hk, &inst.h)?;
    let part = (!partition.is_partition()).then(|| format!("{partition:?}"));
    let k_order = Rational::from_integer((inst.hk.order() / inst.h.order()).into());
    let (gs, ns, hs, hks) = (inst.g.spectrum(), inst.n.spectrum(), inst.h.spectrum(), inst.hk.spectrum());
    let identity = first_failure(divisors(gs.exponent()), |k| {
        let rhs = hks.rho(k) - hs.rho(k) / &k_order + ns.rho(k) / &k_order;
        (gs.rho(k) != rhs).then(|| format!("k = {k}: identity fails"))
    });
    Ok(vec![
        outcome("coset partition", label, format!("|HK| = {}", inst.hk.order()), part),
        outcome("coset partition identity", label, "all k | exponent", identity),
    ])
}

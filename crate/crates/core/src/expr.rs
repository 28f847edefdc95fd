//! Group expressions such as `A(5) * C(6)^3` or `wr2(S(5))`.
//!
//! ```text
//! expr := term ('*' term)*
//! term := atom ('^' INT)?
//! atom := NAME '(' args ')' | 'wr2' '(' expr ')' | 'load' '(' STRING ')' | '(' expr ')'
//! ```
//!
//! Names are `S`, `A`, `C`, `Sz` with one argument and `PSL`, `PGL`,
//! `PSigmaL`, `PGammaL` with two (only dimension 2). Matching is
//! case-insensitive; printing uses the canonical spelling.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::gensfile::Fixtures;
use crate::group::{generate_on, ElementSet, DEFAULT_CAP};
use crate::perm::Permutation;
use crate::spectrum::{Nat, OrderSpectrum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Family(FamilySpec),
    /// A generator file, by manifest label or path.
    Load(String),
    /// Direct product of at least two factors.
    Product(Vec<GroupExpr>),
    Power(Box<GroupExpr>, u32),
    /// Wreath product with `C_2`.
    Wreath2(Box<GroupExpr>),
}

impl GroupExpr {
    pub fn family(family: Family, param: u64) -> Result<Self> {
        Ok(GroupExpr::Family(FamilySpec::new(family, param)?))
    }

    pub fn product(factors: Vec<GroupExpr>) -> Self {
        match <[GroupExpr; 1]>::try_from(factors) {
            Ok([single]) => single,
            Err(factors) => GroupExpr::Product(factors),
        }
    }

    pub fn power(self, n: u32) -> Self {
        GroupExpr::Power(Box::new(self), n)
    }

    pub fn wr2(self) -> Self {
        GroupExpr::Wreath2(Box::new(self))
    }
}

pub fn parse_expr(text: &str) -> Result<GroupExpr> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(Error::syntax("unexpected trailing input", p.pos));
    }
    Ok(e)
}

impl FromStr for GroupExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Family(spec) => write!(f, "{spec}"),
            GroupExpr::Load(path) => write!(f, "load(\"{path}\")"),
            GroupExpr::Product(factors) => {
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    match x {
                        GroupExpr::Product(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            GroupExpr::Power(base, n) => match **base {
                GroupExpr::Product(_) | GroupExpr::Power(..) => write!(f, "({base})^{n}"),
                _ => write!(f, "{base}^{n}"),
            },
            GroupExpr::Wreath2(inner) => write!(f, "wr2({inner})"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::syntax(format!("expected `{c}`"), self.pos))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().find(|c| !f(c)).unwrap_or(self.rest().len());
        self.pos += len;
        &self.text[start..self.pos]
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(Error::syntax("expected an integer", start.max(self.pos)));
        }
        digits.parse().map_err(|_| Error::syntax("integer too large", start))
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut factors = vec![self.term()?];
        while self.eat('*') {
            factors.push(self.term()?);
        }
        Ok(GroupExpr::product(factors))
    }

    fn term(&mut self) -> Result<GroupExpr> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.pos;
            let n = self.integer()?;
            let n = u32::try_from(n).map_err(|_| Error::syntax("exponent too large", at))?;
            return Ok(base.power(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<GroupExpr> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        self.skip_ws();
        let start = self.pos;
        let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_').to_string();
        if name.is_empty() || !name.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return Err(Error::syntax("expected a group name or `(`", start));
        }
        self.expect('(')?;
        let lower = name.to_ascii_lowercase();
        let e = match lower.as_str() {
            "wr2" => self.expr()?.wr2(),
            "load" => GroupExpr::Load(self.string()?),
            _ => self.family_atom(&name, start)?,
        };
        self.expect(')')?;
        Ok(e)
    }

    fn string(&mut self) -> Result<String> {
        self.expect('"')?;
        let s = self.take_while(|c| c != '"' && c != '\n').to_string();
        if !self.rest().starts_with('"') {
            return Err(Error::syntax("unterminated string", self.pos));
        }
        self.pos += 1;
        Ok(s)
    }

    fn family_atom(&mut self, name: &str, start: usize) -> Result<GroupExpr> {
        let (family, dimensioned) = match name.to_ascii_lowercase().as_str() {
            "s" => (Family::Sym, false),
            "a" => (Family::Alt, false),
            "c" => (Family::Cyclic, false),
            "sz" => (Family::Sz, false),
            "psl" => (Family::Psl2, true),
            "pgl" => (Family::Pgl2, true),
            "psigmal" => (Family::PSigmaL2, true),
            "pgammal" => (Family::PGammaL2, true),
            _ => return Err(Error::syntax(format!("unknown group `{name}`"), start)),
        };
        if dimensioned {
            let dim = self.integer()?;
            self.expect(',')?;
            let q = self.integer()?;
            if dim != 2 {
                return Err(Error::syntax(
                    format!(
                        "only dimension 2 is supported for {name}; for other groups use a generator file, \
                         e.g. load(\"{}{dim}_{q}.gens\")",
                        name.to_ascii_lowercase()
                    ),
                    start,
                ));
            }
            return spec_atom(family, q, start);
        }
        let n = self.integer()?;
        spec_atom(family, n, start)
    }
}

fn spec_atom(family: Family, param: u64, start: usize) -> Result<GroupExpr> {
    FamilySpec::new(family, param)
        .map(GroupExpr::Family)
        .map_err(|e| Error::syntax(e.to_string(), start))
}

/// How an expression is turned into a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Closed forms and spectrum combinators, enumerating only what has no
    /// closed form.
    #[default]
    Spectrum,
    /// Build the whole group as permutations and enumerate it.
    Concrete,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spectrum" => Ok(Mode::Spectrum),
            "concrete" => Ok(Mode::Concrete),
            _ => Err(Error::InvalidParameter(format!("unknown mode {s:?} (spectrum|concrete)"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Spectrum => "spectrum",
            Mode::Concrete => "concrete",
        })
    }
}

/// Evaluation settings shared by every mode.
#[derive(Debug, Clone)]
pub struct Evaluator {
    pub cap: u64,
    pub fixtures: Fixtures,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator { cap: DEFAULT_CAP, fixtures: Fixtures::shipped() }
    }
}

impl Evaluator {
    pub fn new(cap: u64, fixtures: Fixtures) -> Self {
        Evaluator { cap, fixtures }
    }

    fn check_cap(&self, order: &Option<Nat>) -> Result<()> {
        match order {
            Some(n) if *n > Nat::from(self.cap) => Err(Error::CapExceeded(self.cap)),
            _ => Ok(()),
        }
    }

    /// The group order, when known without enumeration.
    pub fn order(&self, e: &GroupExpr) -> Option<Nat> {
        match e {
            GroupExpr::Family(spec) => Some(spec.order()),
            GroupExpr::Load(name) => self.fixtures.expected_order(name).map(Nat::from),
            GroupExpr::Product(factors) => factors.iter().map(|x| self.order(x)).product(),
            GroupExpr::Power(base, n) => self.order(base).map(|o| o.pow(*n)),
            GroupExpr::Wreath2(inner) => self.order(inner).map(|o| &o * &o * 2u32),
        }
    }

    pub fn evaluate(&self, e: &GroupExpr, mode: Mode) -> Result<OrderSpectrum> {
        match mode {
            Mode::Spectrum => self.spectrum(e),
            Mode::Concrete => Ok(self.concrete(e)?.spectrum()),
        }
    }

    /// Spectrum-level evaluation.
    pub fn spectrum(&self, e: &GroupExpr) -> Result<OrderSpectrum> {
        match e {
            GroupExpr::Family(spec) => match spec.spectrum() {
                Some(s) => Ok(s),
                None => Ok(spec.build(self.cap)?.spectrum()),
            },
            GroupExpr::Load(name) => {
                self.check_cap(&self.order(e))?;
                Ok(self.fixtures.load(name, self.cap)?.spectrum())
            }
            GroupExpr::Product(factors) => factors
                .iter()
                .try_fold(OrderSpectrum::trivial(), |acc, x| Ok(acc.direct_product(&self.spectrum(x)?))),
            GroupExpr::Power(base, n) => Ok(self.spectrum(base)?.power(*n as u64)),
            GroupExpr::Wreath2(inner) => Ok(self.spectrum(inner)?.wreath_c2()),
        }
    }

    /// Permutation generators of the concrete group: products on disjoint
    /// points, wreath products on two copies of the points plus the swap.
    pub fn generators(&self, e: &GroupExpr) -> Result<(usize, Vec<Permutation>)> {
        match e {
            GroupExpr::Family(spec) => spec.constructor(),
            GroupExpr::Load(name) => {
                let file = self.fixtures.read(name)?;
                Ok((file.degree, file.generators))
            }
            GroupExpr::Product(factors) => {
                let parts = factors.iter().map(|x| self.generators(x)).collect::<Result<Vec<_>>>()?;
                Ok(disjoint(&parts))
            }
            GroupExpr::Power(base, n) => {
                let part = self.generators(base)?;
                Ok(disjoint(&vec![part; *n as usize]))
            }
            GroupExpr::Wreath2(inner) => {
                let (d, gens) = self.generators(inner)?;
                let d = d.max(1);
                let mut out: Vec<Permutation> = gens.iter().map(|g| shift(g, 0, 2 * d)).collect();
                let swap: Vec<u32> = (0..2 * d).map(|i| ((i + d) % (2 * d)) as u32).collect();
                out.push(Permutation::from_images(swap)?);
                Ok((2 * d, out))
            }
        }
    }

    /// Generators of the normal subgroups visible in the expression's top
    /// level: each direct factor, or the base `G x G` of a wreath product.
    /// They act on the same points as [`Evaluator::concrete`].
    pub fn visible_normal_subgroups(&self, e: &GroupExpr) -> Result<Vec<ElementSet>> {
        let parts = match e {
            GroupExpr::Product(factors) => factors.iter().map(|x| self.generators(x)).collect::<Result<Vec<_>>>()?,
            GroupExpr::Power(base, n) if *n >= 2 => vec![self.generators(base)?; *n as usize],
            GroupExpr::Wreath2(inner) => {
                let (d, gens) = self.generators(inner)?;
                let d = d.max(1);
                let both: Vec<Permutation> =
                    gens.iter().flat_map(|g| [shift(g, 0, 2 * d), shift(g, d, 2 * d)]).collect();
                return Ok(vec![generate_on(2 * d, &both, self.cap)?]);
            }
            _ => return Ok(vec![]),
        };
        let (degree, _) = disjoint(&parts);
        let mut offset = 0;
        let mut out = Vec::new();
        for (d, gens) in &parts {
            let shifted: Vec<Permutation> = gens.iter().map(|g| shift(g, offset, degree.max(1))).collect();
            out.push(generate_on(degree.max(1), &shifted, self.cap)?);
            offset += d;
        }
        Ok(out)
    }

    /// Enumerates the concrete permutation group.
    pub fn concrete(&self, e: &GroupExpr) -> Result<ElementSet> {
        self.check_cap(&self.order(e))?;
        let (degree, gens) = self.generators(e)?;
        let g = generate_on(degree.max(1), &pad(&gens, degree.max(1)), self.cap)?;
        Ok(g.with_label(e.to_string()))
    }
}

fn shift(p: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &x) in p.images().iter().enumerate() {
        images[offset + i] = x + offset as u32;
    }
    Permutation::from_images(images).expect("shifted bijection")
}

fn pad(gens: &[Permutation], degree: usize) -> Vec<Permutation> {
    gens.iter().map(|g| if g.degree() == degree { g.clone() } else { shift(g, 0, degree) }).collect()
}

fn disjoint(parts: &[(usize, Vec<Permutation>)]) -> (usize, Vec<Permutation>) {
    let degree = parts.iter().map(|(d, _)| d).sum();
    let mut offset = 0;
    let mut gens = Vec::new();
    for (d, part) in parts {
        gens.extend(part.iter().map(|g| shift(g, offset, degree)));
        offset += d;
    }
    (degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{make_spectrum, ratio};
    use proptest::prelude::*;

    fn parse(s: &str) -> GroupExpr {
        parse_expr(s).unwrap()
    }

    #[test]
    fn parses_examples() {
        let e = parse("A(5) * C(6)^3");
        let a5 = GroupExpr::family(Family::Alt, 5).unwrap();
        let c6 = GroupExpr::family(Family::Cyclic, 6).unwrap();
        assert_eq!(e, GroupExpr::Product(vec![a5, c6.clone().power(3)]));
        assert_eq!(e.to_string(), "A(5) * C(6)^3");
        let w = parse("wr2(wr2(C(2)))");
        assert_eq!(w, GroupExpr::family(Family::Cyclic, 2).unwrap().wr2().wr2());
        assert_eq!(parse(" ( psl( 2 , 9 ) ) ").to_string(), "PSL(2,9)");
        assert_eq!(parse("load(\"m10\")"), GroupExpr::Load("m10".into()));
        assert_eq!(parse("(C(2) * C(3)) * C(5)").to_string(), "(C(2) * C(3)) * C(5)");
        assert_eq!(parse("(C(2)^2)^3").to_string(), "(C(2)^2)^3");
    }

    #[test]
    fn reports_errors() {
        let err = parse_expr("PSL(3,4)").unwrap_err().to_string();
        assert!(err.contains("load(\"psl3_4.gens\")"), "{err}");
        for bad in ["", "A(5) *", "B(3)", "PSL(2,6)", "Sz(4)", "A(5)^", "C(2)^2^3", "load(m10)", "A(5))", "S(0)"] {
            assert!(matches!(parse_expr(bad), Err(Error::Syntax(_))), "{bad:?}");
        }
        match parse_expr("A(5) * Q(2)") {
            Err(Error::Syntax(s)) => assert_eq!(s.position, 7),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_wreath_is_dihedral() {
        let ev = Evaluator::default();
        let e = parse("wr2(C(2))^1");
        let d8 = make_spectrum([(1, 1u32), (2, 5), (4, 2)]).unwrap();
        assert_eq!(ev.spectrum(&e).unwrap(), d8);
        assert_eq!(ev.evaluate(&e, Mode::Concrete).unwrap(), d8);
    }

    #[test]
    fn modes_agree() {
        let ev = Evaluator::default();
        for text in [
            "A(5)",
            "S(4) * C(3)",
            "wr2(S(3))",
            "C(6)^3",
            "C(2)^0",
            "wr2(C(1))",
            "wr2(C(3)^0)",
            "PSL(2,7) * C(2)",
            "PGammaL(2,8)",
            "Sz(8)",
            "load(\"q8\") * C(2)",
            "wr2(wr2(C(2)))",
        ] {
            let e = parse(text);
            assert_eq!(ev.spectrum(&e).unwrap(), ev.evaluate(&e, Mode::Concrete).unwrap(), "{text}");
        }
    }

    #[test]
    fn iterated_wreath() {
        let e = parse("wr2(wr2(wr2(wr2(C(2)))))");
        let s = Evaluator::default().spectrum(&e).unwrap();
        assert_eq!(s.rho(2), ratio(4292864u32.into(), 2147483648u32.into()));
    }

    #[test]
    fn cap_is_checked_before_enumeration() {
        let ev = Evaluator { cap: 1000, ..Evaluator::default() };
        assert!(matches!(ev.concrete(&parse("A(5)^2")), Err(Error::CapExceeded(1000))));
        assert!(matches!(ev.spectrum(&parse("load(\"m11\")")), Err(Error::CapExceeded(1000))));
        assert!(ev.spectrum(&parse("A(5)^2")).is_ok());
    }

    fn arb_expr() -> impl Strategy<Value = GroupExpr> {
        let leaf = prop_oneof![
            (1u64..12).prop_map(|n| GroupExpr::family(Family::Sym, n).unwrap()),
            (1u64..12).prop_map(|n| GroupExpr::family(Family::Alt, n).unwrap()),
            (1u64..40).prop_map(|n| GroupExpr::family(Family::Cyclic, n).unwrap()),
            prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 25, 27]).prop_flat_map(|q| {
                prop::sample::select(vec![Family::Psl2, Family::Pgl2, Family::PSigmaL2, Family::PGammaL2])
                    .prop_map(move |f| GroupExpr::family(f, q).unwrap())
            }),
            prop::sample::select(vec![8u64, 32]).prop_map(|q| GroupExpr::family(Family::Sz, q).unwrap()),
            "[a-z0-9_./]{1,12}".prop_map(GroupExpr::Load),
        ];
        leaf.prop_recursive(4, 24, 4, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..4).prop_map(GroupExpr::Product),
                (inner.clone(), 0u32..5).prop_map(|(e, n)| e.power(n)),
                inner.prop_map(GroupExpr::wr2),
            ]
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_print(e in arb_expr()) {
            prop_assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }

        #[test]
        fn print_is_stable(e in arb_expr()) {
            let printed = e.to_string();
            prop_assert_eq!(parse_expr(&printed).unwrap().to_string(), printed);
        }
    }
}

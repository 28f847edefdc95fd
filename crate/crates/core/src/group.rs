//! Fully enumerated permutation groups and the subgroup machinery built on them.
//!
//! Elements are stored packed in one arena, one byte per point for degree
//! at most 256 and two big-endian bytes otherwise, so comparing encodings
//! bytewise is lexicographic comparison of image lists. Membership is a hash
//! lookup on the encoding.

use std::collections::{BTreeMap, HashSet};
use std::hash::BuildHasher;

use hashbrown::hash_table::Entry;
use hashbrown::{DefaultHashBuilder, HashTable};
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::arith::{is_prime, p_part};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::spectrum::{Nat, OrderHistogram, OrderSpectrum};

/// Default enumeration cap.
pub const DEFAULT_CAP: u64 = 20_000_000;

/// Elements processed per parallel batch during closure and scans.
const BATCH: usize = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Codec {
    degree: usize,
    wide: bool,
}

impl Codec {
    fn new(degree: usize) -> Self {
        assert!(degree <= 1 << 16, "degree {degree} too large");
        Codec { degree, wide: degree > 256 }
    }

    fn stride(&self) -> usize {
        if self.wide { 2 * self.degree } else { self.degree }
    }

    #[inline]
    fn get(&self, e: &[u8], i: usize) -> usize {
        if self.wide {
            u16::from_be_bytes([e[2 * i], e[2 * i + 1]]) as usize
        } else {
            e[i] as usize
        }
    }

    #[inline]
    fn set(&self, e: &mut [u8], i: usize, v: usize) {
        if self.wide {
            e[2 * i..2 * i + 2].copy_from_slice(&(v as u16).to_be_bytes());
        } else {
            e[i] = v as u8;
        }
    }

    fn encode(&self, p: &Permutation) -> Result<Vec<u8>> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: p.degree() });
        }
        let mut out = vec![0; self.stride()];
        for i in 0..self.degree {
            self.set(&mut out, i, p.image(i));
        }
        Ok(out)
    }

    fn decode(&self, e: &[u8]) -> Permutation {
        Permutation::from_images_unchecked((0..self.degree).map(|i| self.get(e, i) as u32).collect())
    }

    fn identity(&self) -> Vec<u8> {
        let mut out = vec![0; self.stride()];
        for i in 0..self.degree {
            self.set(&mut out, i, i);
        }
        out
    }

    /// `a` followed by `b`.
    #[inline]
    fn compose(&self, a: &[u8], b: &[u8], out: &mut [u8]) {
        if self.wide {
            for i in 0..self.degree {
                self.set(out, i, self.get(b, self.get(a, i)));
            }
        } else {
            for i in 0..self.degree {
                out[i] = b[a[i] as usize];
            }
        }
    }

    fn inverse(&self, a: &[u8], out: &mut [u8]) {
        for i in 0..self.degree {
            self.set(out, self.get(a, i), i);
        }
    }

    fn order(&self, a: &[u8], seen: &mut [bool]) -> u64 {
        seen.fill(false);
        let mut order = 1u64;
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.get(a, i);
                len += 1;
            }
            order = crate::arith::lcm(order, len);
        }
        order
    }
}

#[derive(Debug, Clone)]
struct Arena {
    codec: Codec,
    data: Vec<u8>,
    table: HashTable<u32>,
    hasher: DefaultHashBuilder,
}

impl Arena {
    fn new(codec: Codec) -> Self {
        Arena { codec, data: Vec::new(), table: HashTable::new(), hasher: DefaultHashBuilder::default() }
    }

    fn len(&self) -> usize {
        self.data.len() / self.codec.stride()
    }

    fn get(&self, i: usize) -> &[u8] {
        let s = self.codec.stride();
        &self.data[i * s..(i + 1) * s]
    }

    fn hash(&self, e: &[u8]) -> u64 {
        self.hasher.hash_one(e)
    }

    fn find(&self, e: &[u8]) -> Option<usize> {
        self.find_hashed(e, self.hash(e))
    }

    fn find_hashed(&self, e: &[u8], h: u64) -> Option<usize> {
        self.table.find(h, |&i| self.get(i as usize) == e).map(|&i| i as usize)
    }

    /// Inserts `e` (with precomputed hash) and reports whether it was new.
    fn insert_hashed(&mut self, e: &[u8], h: u64) -> bool {
        let stride = self.codec.stride();
        let Arena { data, table, hasher, .. } = self;
        let slot = |i: u32| &data[i as usize * stride..(i as usize + 1) * stride];
        match table.entry(h, |&i| slot(i) == e, |&i| hasher.hash_one(slot(i))) {
            Entry::Occupied(_) => false,
            Entry::Vacant(v) => {
                let idx = (data.len() / stride) as u32;
                v.insert(idx);
                data.extend_from_slice(e);
                true
            }
        }
    }

    fn insert(&mut self, e: &[u8]) -> bool {
        let h = self.hash(e);
        self.insert_hashed(e, h)
    }
}

/// A fully enumerated permutation group.
#[derive(Debug, Clone)]
pub struct ElementSet {
    label: String,
    generators: Vec<Permutation>,
    arena: Arena,
}

/// Closure of `gens` under composition. Fails on an empty generator list,
/// since the degree is then unknown; see [`generate_on`].
pub fn generate(gens: &[Permutation], cap: u64) -> Result<ElementSet> {
    let degree = gens
        .first()
        .map(Permutation::degree)
        .ok_or_else(|| Error::InvalidParameter("no generators given".into()))?;
    generate_on(degree, gens, cap)
}

/// Closure of `gens` acting on `degree` points.
///
/// Breadth-first from the identity, multiplying each element on the right by
/// each generator in turn. Products are computed in parallel batches but
/// inserted in sequential order, so the element order does not depend on the
/// thread count.
pub fn generate_on(degree: usize, gens: &[Permutation], cap: u64) -> Result<ElementSet> {
    let codec = Codec::new(degree);
    let encoded = gens.iter().map(|g| codec.encode(g)).collect::<Result<Vec<_>>>()?;
    let stride = codec.stride();
    let mut arena = Arena::new(codec);
    arena.insert(&codec.identity());
    let too_big = |n: usize| n as u64 > cap;
    if too_big(1) {
        return Err(Error::CapExceeded(cap));
    }

    let mut next = 0;
    let mut products = Vec::new();
    let mut hashes = Vec::new();
    while next < arena.len() && !encoded.is_empty() {
        let end = (next + BATCH).min(arena.len());
        let block = end - next;
        products.resize(block * encoded.len() * stride, 0);
        hashes.resize(block * encoded.len(), 0);
        {
            let arena_ref = &arena;
            products
                .par_chunks_mut(encoded.len() * stride)
                .zip(hashes.par_chunks_mut(encoded.len()))
                .enumerate()
                .for_each(|(j, (out, hs))| {
                    let x = arena_ref.get(next + j);
                    for (k, g) in encoded.iter().enumerate() {
                        let slot = &mut out[k * stride..(k + 1) * stride];
                        codec.compose(x, g, slot);
                        hs[k] = arena_ref.hash(slot);
                    }
                });
        }
        for (e, &h) in products.chunks(stride).zip(&hashes) {
            if arena.insert_hashed(e, h) && too_big(arena.len()) {
                return Err(Error::CapExceeded(cap));
            }
        }
        next = end;
    }

    Ok(ElementSet { label: String::new(), generators: gens.to_vec(), arena })
}

impl ElementSet {
    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        generate_on(degree, &[], 1).expect("trivial group fits any cap")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.arena.codec.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.arena.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order(&self) -> u64 {
        self.len() as u64
    }

    /// The `i`-th element in enumeration order; element 0 is the identity.
    pub fn element(&self, i: usize) -> Permutation {
        self.arena.codec.decode(self.arena.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.len()).map(|i| self.element(i))
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        let e = self.arena.codec.encode(p).ok()?;
        self.arena.find(&e)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    /// Whether every element of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.degree() == other.degree()
            && self.len() <= other.len()
            && (0..self.len()).into_par_iter().all(|i| other.arena.find(self.raw(i)).is_some())
    }

    fn raw(&self, i: usize) -> &[u8] {
        self.arena.get(i)
    }

    fn codec(&self) -> Codec {
        self.arena.codec
    }

    fn find_raw(&self, e: &[u8]) -> Option<usize> {
        self.arena.find(e)
    }

    /// Index of the product of elements `a` and `b` (apply `a`, then `b`).
    fn mul_index(&self, a: &[u8], b: &[u8], buf: &mut [u8]) -> usize {
        self.codec().compose(a, b, buf);
        self.find_raw(buf).expect("group is closed under multiplication")
    }

    /// Order of every element, in enumeration order.
    pub fn element_orders(&self) -> Vec<u64> {
        let codec = self.codec();
        let stride = codec.stride();
        self.arena
            .data
            .par_chunks(stride * BATCH)
            .flat_map_iter(|chunk| {
                let mut seen = vec![false; codec.degree];
                chunk.chunks(stride).map(|e| codec.order(e, &mut seen)).collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn spectrum(&self) -> OrderSpectrum {
        spectrum_of(self)
    }

    fn require_subset(&self, h: &ElementSet) -> Result<()> {
        if h.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: h.degree() });
        }
        if !h.is_subset_of(self) {
            return Err(Error::NotContained(format!(
                "{} is not a subset of {}",
                display_label(h),
                display_label(self)
            )));
        }
        Ok(())
    }

    /// Subgroup formed by the given element indices, which must be closed.
    /// Re-derives a small generating set greedily in index order.
    fn subgroup_from_indices(&self, indices: &[u32], label: String) -> Result<ElementSet> {
        if indices.len() == self.len() {
            return Ok(self.clone().with_label(label));
        }
        let mut gens = Vec::new();
        let mut current = ElementSet::trivial(self.degree());
        for &i in indices {
            if current.find_raw(self.raw(i as usize)).is_none() {
                gens.push(self.element(i as usize));
                current = generate_on(self.degree(), &gens, indices.len() as u64)?;
            }
        }
        if current.len() != indices.len() {
            return Err(Error::InvalidParameter("element subset is not a subgroup".into()));
        }
        Ok(current.with_label(label))
    }

    /// Whether `x^-1 y x` lies in `h` for every generator `y` of `h`.
    fn normalises(&self, x: &[u8], h: &ElementSet, scratch: &mut Scratch) -> bool {
        let codec = self.codec();
        codec.inverse(x, &mut scratch.inv);
        h.generators.iter().all(|y| {
            let y = codec.encode(y).expect("degree checked");
            codec.compose(&scratch.inv, &y, &mut scratch.a);
            codec.compose(&scratch.a, x, &mut scratch.b);
            h.find_raw(&scratch.b).is_some()
        })
    }

    fn normalizer_indices(&self, h: &ElementSet) -> Vec<u32> {
        let stride = self.codec().stride();
        (0..self.len() as u32)
            .into_par_iter()
            .map_init(
                || Scratch::new(stride),
                |scratch, i| self.normalises(self.raw(i as usize), h, scratch).then_some(i),
            )
            .flatten()
            .collect()
    }

    /// Elements commuting with every generator of `h`.
    fn centralizer_indices(&self, h: &ElementSet) -> Vec<u32> {
        let codec = self.codec();
        let gens: Vec<Vec<u8>> =
            h.generators.iter().map(|y| codec.encode(y).expect("degree checked")).collect();
        (0..self.len() as u32)
            .into_par_iter()
            .map_init(
                || Scratch::new(codec.stride()),
                |s, i| {
                    let x = self.raw(i as usize);
                    gens.iter()
                        .all(|y| {
                            codec.compose(x, y, &mut s.a);
                            codec.compose(y, x, &mut s.b);
                            s.a == s.b
                        })
                        .then_some(i)
                },
            )
            .flatten()
            .collect()
    }
}

struct Scratch {
    inv: Vec<u8>,
    a: Vec<u8>,
    b: Vec<u8>,
}

impl Scratch {
    fn new(stride: usize) -> Self {
        Scratch { inv: vec![0; stride], a: vec![0; stride], b: vec![0; stride] }
    }
}

fn display_label(g: &ElementSet) -> String {
    if g.label.is_empty() { format!("group of order {}", g.len()) } else { g.label.clone() }
}

fn merge_counts(mut a: BTreeMap<u64, u64>, b: BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
    for (d, c) in b {
        *a.entry(d).or_default() += c;
    }
    a
}

fn to_nat_counts(counts: BTreeMap<u64, u64>) -> BTreeMap<u64, Nat> {
    counts.into_iter().map(|(d, c)| (d, Nat::from(c))).collect()
}

/// Exact order spectrum of an enumerated group.
pub fn spectrum_of(g: &ElementSet) -> OrderSpectrum {
    let mut counts = BTreeMap::new();
    for o in g.element_orders() {
        *counts.entry(o).or_insert(0u64) += 1;
    }
    OrderSpectrum::from_counts(to_nat_counts(counts))
}

/// Histogram of `o(x g)` over `g` in `n`.
pub fn coset_spectrum(n: &ElementSet, x: &Permutation) -> Result<OrderHistogram> {
    let codec = n.codec();
    let x = codec.encode(x)?;
    let stride = codec.stride();
    let counts = n
        .arena
        .data
        .par_chunks(stride * BATCH)
        .map(|chunk| {
            let mut seen = vec![false; codec.degree];
            let mut buf = vec![0; stride];
            let mut local = BTreeMap::new();
            for g in chunk.chunks(stride) {
                codec.compose(&x, g, &mut buf);
                *local.entry(codec.order(&buf, &mut seen)).or_insert(0u64) += 1;
            }
            local
        })
        .reduce(BTreeMap::new, merge_counts);
    Ok(OrderHistogram::from_counts(to_nat_counts(counts)))
}

/// `{x in g : h^x = h}`.
pub fn normalizer(g: &ElementSet, h: &ElementSet) -> Result<ElementSet> {
    g.require_subset(h)?;
    let idx = g.normalizer_indices(h);
    g.subgroup_from_indices(&idx, format!("N({})", display_label(h)))
}

/// `{x in g : xy = yx for all y in h}`.
/// `h` may lie outside `g`; only the degrees must agree.
pub fn centralizer(g: &ElementSet, h: &ElementSet) -> Result<ElementSet> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch { expected: g.degree(), found: h.degree() });
    }
    let idx = g.centralizer_indices(h);
    g.subgroup_from_indices(&idx, format!("C({})", display_label(h)))
}

/// Sylow `p`-subgroup, grown from the trivial group by repeatedly adjoining
/// the `p`-element of least encoding in `N_G(P) \ P`.
pub fn sylow_subgroup(g: &ElementSet, p: u64) -> Result<ElementSet> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let order = g.order();
    if order % p != 0 {
        return Err(Error::PrimeDoesNotDivide { p, order });
    }
    let target = p_part(order, p);
    let codec = g.codec();
    let is_p_power = |mut n: u64| {
        while n % p == 0 {
            n /= p;
        }
        n == 1
    };
    let mut gens: Vec<Permutation> = Vec::new();
    let mut sylow = ElementSet::trivial(g.degree());
    while sylow.order() < target {
        let candidates = g.normalizer_indices(&sylow);
        let best = candidates
            .par_iter()
            .map_init(
                || vec![false; codec.degree],
                |seen, &i| {
                    let x = g.raw(i as usize);
                    (sylow.find_raw(x).is_none() && is_p_power(codec.order(x, seen))).then_some(x)
                },
            )
            .flatten()
            .min()
            .expect("a proper p-subgroup is properly contained in its normaliser's p-part");
        gens.push(codec.decode(best));
        sylow = generate_on(g.degree(), &gens, target)?;
    }
    Ok(sylow.with_label(format!("Syl_{p}({})", display_label(g))))
}

/// Elements commuting with the generators of `g`, each then checked against
/// every element of `g`.
pub fn center(g: &ElementSet) -> Result<ElementSet> {
    let idx = g.centralizer_indices(g);
    let codec = g.codec();
    let all_central = idx.par_iter().all(|&z| {
        let z = g.raw(z as usize);
        let mut a = vec![0; codec.stride()];
        let mut b = vec![0; codec.stride()];
        (0..g.len()).all(|i| {
            codec.compose(z, g.raw(i), &mut a);
            codec.compose(g.raw(i), z, &mut b);
            a == b
        })
    });
    assert!(all_central, "generator-centraliser must be central");
    g.subgroup_from_indices(&idx, format!("Z({})", display_label(g)))
}

/// Whether `n` is normal in `g`, testing generators against generators.
pub fn is_normal(g: &ElementSet, n: &ElementSet) -> Result<bool> {
    g.require_subset(n)?;
    let mut scratch = Scratch::new(g.codec().stride());
    let codec = g.codec();
    Ok(g.generators.iter().all(|x| {
        let x = codec.encode(x).expect("degree checked");
        g.normalises(&x, n, &mut scratch)
    }))
}

/// Coset label of every element of `g` modulo `n`, with the identity coset
/// labelled 0, plus the least encoding in each coset.
fn coset_table(g: &ElementSet, n: &ElementSet) -> (Vec<u32>, Vec<usize>) {
    let codec = g.codec();
    let mut coset = vec![u32::MAX; g.len()];
    let mut reps = Vec::new();
    let mut buf = vec![0; codec.stride()];
    for i in 0..g.len() {
        if coset[i] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        let mut rep = i;
        for m in 0..n.len() {
            let j = g.mul_index(g.raw(i), n.raw(m), &mut buf);
            coset[j] = id;
            if g.raw(j) < g.raw(rep) {
                rep = j;
            }
        }
        reps.push(rep);
    }
    (coset, reps)
}

/// Order spectrum of `g / n`, computed on least-encoding coset representatives.
pub fn quotient_spectrum(g: &ElementSet, n: &ElementSet) -> Result<OrderSpectrum> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let (coset, reps) = coset_table(g, n);
    let codec = g.codec();
    let counts = reps
        .par_iter()
        .map_init(
            || vec![0; codec.stride()],
            |buf, &r| {
                let x = g.raw(r);
                let mut power = r;
                let mut m = 1u64;
                while coset[power] != 0 {
                    power = g.mul_index(g.raw(power), x, buf);
                    m += 1;
                }
                m
            },
        )
        .fold(BTreeMap::new, |mut acc, m| {
            *acc.entry(m).or_insert(0u64) += 1;
            acc
        })
        .reduce(BTreeMap::new, merge_counts);
    Ok(OrderSpectrum::from_counts(to_nat_counts(counts)))
}

/// Extends `base` (generated by `gens`) by every element of `g` not yet
/// covered, in enumeration order, stopping once `stop` holds.
fn grow_by_elements<F>(
    g: &ElementSet,
    gens: &mut Vec<Permutation>,
    mut current: ElementSet,
    candidate: F,
) -> Result<ElementSet>
where
    F: Fn(usize) -> Permutation,
{
    for i in 0..g.len() {
        let x = candidate(i);
        if !current.contains(&x) {
            gens.push(x);
            current = generate_on(g.degree(), gens, g.order())?;
        }
    }
    Ok(current)
}

/// All subgroups of index 2: the kernels of the nonzero functionals on the
/// elementary abelian 2-group `g / <squares>`.
pub fn index2_subgroups(g: &ElementSet) -> Result<Vec<ElementSet>> {
    let mut square_gens = Vec::new();
    let squares = grow_by_elements(g, &mut square_gens, ElementSet::trivial(g.degree()), |i| {
        g.element(i).pow(2)
    })?;

    let mut all_gens = square_gens.clone();
    let whole = grow_by_elements(g, &mut all_gens, squares.clone(), |i| g.element(i))?;
    debug_assert_eq!(whole.len(), g.len());
    let basis = &all_gens[square_gens.len()..];
    let rank = basis.len();
    assert_eq!(
        g.order(),
        squares.order() << rank,
        "quotient by the squares must be elementary abelian"
    );

    let mut out = Vec::new();
    for f in 1u64..(1 << rank) {
        let lead = f.trailing_zeros() as usize;
        let mut gens = square_gens.clone();
        for (i, b) in basis.iter().enumerate() {
            if f >> i & 1 == 0 {
                gens.push(b.clone());
            } else if i != lead {
                gens.push(basis[lead].then(b));
            }
        }
        let h = if gens.is_empty() {
            ElementSet::trivial(g.degree())
        } else {
            generate_on(g.degree(), &gens, g.order())?
        };
        assert_eq!(2 * h.order(), g.order(), "kernel of a nonzero functional has index 2");
        out.push(h.with_label(format!("{}_index2_{f}", display_label(g))));
    }
    Ok(out)
}

/// `|g : h|`.
pub fn subgroup_index(g: &ElementSet, h: &ElementSet) -> Result<u64> {
    g.require_subset(h)?;
    if g.order() % h.order() != 0 {
        return Err(Error::NotContained(format!(
            "order {} does not divide {}",
            h.order(),
            g.order()
        )));
    }
    Ok(g.order() / h.order())
}

/// How the conjugates of `hk \ h` sit inside `g`, for `n` normal in `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    /// Number of distinct `g`-conjugates of the set `hk \ h`.
    pub conjugates: usize,
    /// No element lies in two distinct conjugates.
    pub disjoint: bool,
    /// The conjugates cover exactly `g \ n`.
    pub covers_complement: bool,
}

impl CosetPartition {
    /// `n` together with the conjugates of `hk \ h` partition `g`.
    pub fn is_partition(&self) -> bool {
        self.disjoint && self.covers_complement
    }
}

/// Checks whether `n` and the conjugates of `hk \ h` partition `g`.
pub fn coset_partition(
    g: &ElementSet,
    n: &ElementSet,
    hk: &ElementSet,
    h: &ElementSet,
) -> Result<CosetPartition> {
    g.require_subset(n)?;
    g.require_subset(hk)?;
    hk.require_subset(h)?;
    let codec = g.codec();
    let outside: Vec<usize> = (0..hk.len()).filter(|&i| h.find_raw(hk.raw(i)).is_none()).collect();

    let conjugates: HashSet<Vec<u32>> = (0..g.len())
        .into_par_iter()
        .map_init(
            || Scratch::new(codec.stride()),
            |s, xi| {
                let x = g.raw(xi);
                codec.inverse(x, &mut s.inv);
                let mut set: Vec<u32> = outside
                    .iter()
                    .map(|&y| {
                        codec.compose(&s.inv, hk.raw(y), &mut s.a);
                        codec.compose(&s.a, x, &mut s.b);
                        g.find_raw(&s.b).expect("g is closed under conjugation") as u32
                    })
                    .collect();
                set.sort_unstable();
                set
            },
        )
        .collect();

    let mut hits = vec![0u32; g.len()];
    for set in &conjugates {
        for &i in set {
            hits[i as usize] += 1;
        }
    }
    let disjoint = hits.iter().all(|&c| c <= 1);
    let covers_complement = (0..g.len()).all(|i| {
        let in_n = n.find_raw(g.raw(i)).is_some();
        if in_n { hits[i] == 0 } else { hits[i] >= 1 }
    });
    Ok(CosetPartition { conjugates: conjugates.len(), disjoint, covers_complement })
}

/// Converts a group order to `u64`; every enumerated group fits.
pub fn order_u64(s: &OrderSpectrum) -> u64 {
    s.group_order().to_u64().expect("order fits in u64")
}

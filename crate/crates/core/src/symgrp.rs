//! Permutations, the character table of `S_d`, and operations on characters.
//!
//! Composition is left to right: `(σ∘τ)(j) = τ(σ(j))`, which makes
//! substitution of variables a right action on polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};
use crate::polyring::{rat, Rational};

pub const MAX_TABLE_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its 1-based image list.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x == 0 || x > d || seen[x - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x - 1).collect() })
    }

    pub fn identity(d: usize) -> Self {
        Permutation { images: (0..d).collect() }
    }

    /// The transposition of the 1-based points `i` and `j`.
    pub fn transposition(d: usize, i: usize, j: usize) -> Result<Self> {
        for x in [i, j] {
            if x == 0 || x > d {
                return Err(Error::OutOfRange { index: x, bound: d + 1 });
            }
        }
        let mut p = Permutation::identity(d);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The simple transposition `σ_i = (i, i+1)`, `1 ≤ i < d`.
    pub fn simple(d: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= d {
            return Err(Error::OutOfRange { index: i, bound: d });
        }
        Permutation::transposition(d, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of the 0-based point `j`.
    pub fn image(&self, j: usize) -> usize {
        self.images[j]
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`, i.e. apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::SizeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(Permutation { images: self.images.iter().map(|&j| other.images[j]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x] = j;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &x)| j == x)
    }

    pub fn cycle_type(&self) -> Partition {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut lens = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn sign(&self) -> i32 {
        let ct = self.cycle_type();
        if (ct.size() - ct.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All permutations of `{1..d}` in lexicographic order of image lists.
    pub fn all(d: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..d).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", imgs.join(","))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::from_images(images).map_err(serde::de::Error::custom)
    }
}

/// The canonical permutation of the given cycle type: cycles
/// `(1 2 … ρ_1)(ρ_1+1 …)…` on consecutive blocks.
pub fn class_representative(cycle_type: &Partition) -> Permutation {
    let mut images = Vec::with_capacity(cycle_type.size());
    let mut start = 0;
    for &len in cycle_type.parts() {
        for k in 0..len {
            images.push(start + (k + 1) % len);
        }
        start += len;
    }
    Permutation { images }
}

/// `z_ρ = ∏ i^{m_i} m_i!`, the centralizer order of a permutation of cycle
/// type `ρ`.
pub fn centralizer_order(cycle_type: &Partition) -> u128 {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in cycle_type.parts() {
        *mult.entry(p).or_default() += 1;
    }
    mult.iter().map(|(&i, &m)| (i as u128).pow(m as u32) * factorial(m)).product()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    d: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    // values[irrep][class]
    values: Vec<Vec<i64>>,
    class_sizes: Vec<u64>,
}

impl CharacterTable {
    fn build(d: usize) -> CharacterTable {
        let partitions = Partition::all(d);
        let index: HashMap<Partition, usize> = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lam| {
                partitions.iter().map(|rho| murnaghan_nakayama(lam.parts().to_vec(), rho.parts(), &mut memo)).collect()
            })
            .collect();
        let order = factorial(d);
        let class_sizes = partitions.iter().map(|rho| (order / centralizer_order(rho)) as u64).collect();
        CharacterTable { d, partitions, index, values, class_sizes }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Partitions of `d`, indexing both irreducibles and classes.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Result<usize> {
        self.index.get(p).copied().ok_or(Error::SizeMismatch { left: p.size(), right: self.d })
    }

    /// `χ_λ(ρ)`.
    pub fn value(&self, irrep: &Partition, class: &Partition) -> Result<i64> {
        Ok(self.values[self.index_of(irrep)?][self.index_of(class)?])
    }

    pub fn row(&self, irrep: &Partition) -> Result<&[i64]> {
        Ok(&self.values[self.index_of(irrep)?])
    }

    pub fn class_size(&self, class: &Partition) -> Result<u64> {
        Ok(self.class_sizes[self.index_of(class)?])
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn group_order(&self) -> u64 {
        factorial(self.d) as u64
    }

    /// `dim L(λ) = χ_λ(identity)`.
    pub fn dimension(&self, irrep: &Partition) -> Result<u64> {
        let id = Partition::from_unsorted(vec![1; self.d]);
        Ok(self.value(irrep, &id)? as u64)
    }

    pub fn irreducible(&self, irrep: &Partition) -> Result<ClassFunction> {
        let row = self.row(irrep)?;
        Ok(ClassFunction {
            d: self.d,
            values: self.partitions.iter().zip(row).map(|(p, &v)| (p.clone(), rat(v))).collect(),
        })
    }
}

/// χ_λ on the cycle type `rho` by stripping rim hooks of length `rho[0]` via
/// beta-numbers.
fn murnaghan_nakayama(lam: Vec<usize>, rho: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if rho.is_empty() {
        return if lam.is_empty() { 1 } else { 0 };
    }
    let key = (lam, rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let lam = &key.0;
    let k = rho[0];
    let l = lam.len();
    let beta: Vec<usize> = lam.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let nb = b - k;
        let height = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut new_beta = beta.clone();
        new_beta[i] = nb;
        new_beta.sort_unstable_by(|x, y| y.cmp(x));
        let nl = new_beta.len();
        let parts: Vec<usize> =
            new_beta.iter().enumerate().map(|(j, &x)| x - (nl - 1 - j)).filter(|&p| p > 0).collect();
        let sub = murnaghan_nakayama(parts, &rho[1..], memo);
        total += if height % 2 == 0 { sub } else { -sub };
    }
    memo.insert(key, total);
    total
}

/// The character table of `S_d`, built once per degree. Degree 0 is the
/// trivial group.
pub fn character_table(d: usize) -> Result<&'static CharacterTable> {
    static TABLES: [OnceLock<CharacterTable>; MAX_TABLE_DEGREE + 1] = [const { OnceLock::new() }; MAX_TABLE_DEGREE + 1];
    let cell = TABLES.get(d).ok_or(Error::UnsupportedDegree(d))?;
    Ok(cell.get_or_init(|| CharacterTable::build(d)))
}

/// A rational-valued function on the conjugacy classes of `S_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    d: usize,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    /// Missing classes are filled with zero.
    pub fn new(d: usize, values: BTreeMap<Partition, Rational>) -> Result<Self> {
        let mut full = BTreeMap::new();
        for p in Partition::all(d) {
            let v = values.get(&p).cloned().unwrap_or_else(Rational::zero);
            full.insert(p, v);
        }
        if let Some(bad) = values.keys().find(|p| p.size() != d) {
            return Err(Error::SizeMismatch { left: bad.size(), right: d });
        }
        Ok(ClassFunction { d, values: full })
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn value(&self, class: &Partition) -> Rational {
        self.values.get(class).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn values(&self) -> &BTreeMap<Partition, Rational> {
        &self.values
    }

    pub fn from_character(v: &CharacterVector) -> Result<ClassFunction> {
        let table = character_table(v.d)?;
        let mut values: BTreeMap<Partition, Rational> = BTreeMap::new();
        for class in table.partitions() {
            let mut s = 0i64;
            for (irrep, &m) in &v.mults {
                s += m as i64 * table.value(irrep, class)?;
            }
            values.insert(class.clone(), rat(s));
        }
        Ok(ClassFunction { d: v.d, values })
    }
}

/// Multiplicities `μ ↦ [V : L(μ)]` of a module over `S_d`; zero entries are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CharacterVector {
    d: usize,
    mults: BTreeMap<Partition, u64>,
}

impl CharacterVector {
    pub fn new(d: usize, mults: BTreeMap<Partition, u64>) -> Result<Self> {
        if let Some(bad) = mults.keys().find(|p| p.size() != d) {
            return Err(Error::SizeMismatch { left: bad.size(), right: d });
        }
        Ok(CharacterVector { d, mults: mults.into_iter().filter(|(_, m)| *m > 0).collect() })
    }

    pub fn from_pairs<I: IntoIterator<Item = (Partition, u64)>>(d: usize, pairs: I) -> Result<Self> {
        let mut mults = BTreeMap::new();
        for (p, m) in pairs {
            *mults.entry(p).or_insert(0) += m;
        }
        CharacterVector::new(d, mults)
    }

    /// The single irreducible `L(λ)`.
    pub fn irreducible(lambda: &Partition) -> Self {
        CharacterVector { d: lambda.size(), mults: [(lambda.clone(), 1)].into_iter().collect() }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn multiplicity(&self, p: &Partition) -> u64 {
        self.mults.get(p).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<Partition, u64> {
        &self.mults
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Total dimension `Σ m_μ · dim L(μ)`.
    pub fn dimension(&self) -> Result<u64> {
        let table = character_table(self.d)?;
        let mut total = 0;
        for (p, &m) in &self.mults {
            total += m * table.dimension(p)?;
        }
        Ok(total)
    }

    /// Direct sum.
    pub fn add(&self, other: &CharacterVector) -> Result<CharacterVector> {
        if self.d != other.d {
            return Err(Error::SizeMismatch { left: self.d, right: other.d });
        }
        let mut mults = self.mults.clone();
        for (p, &m) in &other.mults {
            *mults.entry(p.clone()).or_insert(0) += m;
        }
        Ok(CharacterVector { d: self.d, mults })
    }
}

impl fmt::Display for CharacterVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.mults.iter().map(|(p, m)| format!("{p}:{m}")).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

impl Serialize for CharacterVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.mults.len()))?;
        for (p, m) in &self.mults {
            map.serialize_entry(&p.to_string(), m)?;
        }
        map.end()
    }
}

/// Multiplicities `m_λ = (1/d!) Σ_c |c| φ(c) χ_λ(c)`; fails unless every
/// multiplicity is a non-negative integer.
pub fn decompose(phi: &ClassFunction) -> Result<CharacterVector> {
    let table = character_table(phi.d)?;
    let order = rat(table.group_order() as i64);
    let mut mults = BTreeMap::new();
    for irrep in table.partitions() {
        let row = table.row(irrep)?;
        let mut s = Rational::zero();
        for (i, class) in table.partitions().iter().enumerate() {
            s += phi.value(class) * rat(table.class_sizes()[i] as i64 * row[i]);
        }
        let m = s / &order;
        if !m.is_integer() || m < Rational::zero() {
            return Err(Error::InvalidMultiplicity { partition: irrep.to_string(), value: m.to_string() });
        }
        let m = m.to_integer().to_u64().expect("multiplicity fits in u64");
        if m > 0 {
            mults.insert(irrep.clone(), m);
        }
    }
    Ok(CharacterVector { d: phi.d, mults })
}

/// Tensoring with the sign representation: `L(μ) ↦ L(μ^t)`.
pub fn sign_twist(v: &CharacterVector) -> CharacterVector {
    CharacterVector { d: v.d, mults: v.mults.iter().map(|(p, &m)| (p.transpose(), m)).collect() }
}

/// Character of `Ind_{S_{d1}×S_{d2}}^{S_{d1+d2}} (V_1 ⊠ V_2)`.
pub fn induced_character(v1: &CharacterVector, v2: &CharacterVector) -> Result<CharacterVector> {
    let d = v1.d + v2.d;
    let table = character_table(d)?;
    let phi1 = ClassFunction::from_character(v1)?;
    let phi2 = ClassFunction::from_character(v2)?;
    let mut values = BTreeMap::new();
    for class in table.partitions() {
        values.insert(class.clone(), induced_value(class, v1.d, &phi1, &phi2));
    }
    decompose(&ClassFunction { d, values })
}

/// Iterated induction of a list of characters, left to right.
pub fn induced_product(factors: &[CharacterVector]) -> Result<CharacterVector> {
    let mut acc = CharacterVector::irreducible(&Partition::empty());
    for f in factors {
        acc = induced_character(&acc, f)?;
    }
    Ok(acc)
}

/// Value at cycle type `class`: `Σ ∏_i C(m_i, k_i) φ1(ρ1) φ2(ρ2)` over the
/// ways of distributing the `m_i` cycles of length `i` into `k_i` for the
/// first factor and `m_i − k_i` for the second, with `|ρ1| = d1`.
fn induced_value(class: &Partition, d1: usize, phi1: &ClassFunction, phi2: &ClassFunction) -> Rational {
    let mut mult: Vec<(usize, usize)> = Vec::new();
    for &p in class.parts() {
        match mult.last_mut() {
            Some((len, m)) if *len == p => *m += 1,
            _ => mult.push((p, 1)),
        }
    }
    let mut total = Rational::zero();
    let mut ks = vec![0usize; mult.len()];
    loop {
        let size1: usize = mult.iter().zip(&ks).map(|((len, _), k)| len * k).sum();
        if size1 == d1 {
            let mut p1 = Vec::new();
            let mut p2 = Vec::new();
            let mut weight: u128 = 1;
            for ((len, m), &k) in mult.iter().zip(&ks) {
                p1.extend(std::iter::repeat_n(*len, k));
                p2.extend(std::iter::repeat_n(*len, m - k));
                weight *= binomial(*m, k);
            }
            let r1 = Partition::from_unsorted(p1);
            let r2 = Partition::from_unsorted(p2);
            total += phi1.value(&r1) * phi2.value(&r2) * rat(weight as i64);
        }
        // odometer over 0..=m_i
        let mut i = 0;
        loop {
            if i == ks.len() {
                return total;
            }
            if ks[i] < mult[i].1 {
                ks[i] += 1;
                break;
            }
            ks[i] = 0;
            i += 1;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cv(d: usize, pairs: &[(&str, u64)]) -> CharacterVector {
        CharacterVector::from_pairs(d, pairs.iter().map(|(s, m)| (p(s), *m))).unwrap()
    }

    #[test]
    fn small_tables() {
        let t1 = character_table(1).unwrap();
        assert_eq!(t1.value(&p("1"), &p("1")).unwrap(), 1);
        let t2 = character_table(2).unwrap();
        assert_eq!(t2.value(&p("2"), &p("1,1")).unwrap(), 1);
        assert_eq!(t2.value(&p("2"), &p("2")).unwrap(), 1);
        assert_eq!(t2.value(&p("1,1"), &p("1,1")).unwrap(), 1);
        assert_eq!(t2.value(&p("1,1"), &p("2")).unwrap(), -1);
        let t3 = character_table(3).unwrap();
        assert_eq!(t3.dimension(&p("2,1")).unwrap(), 2);
        assert_eq!(t3.value(&p("2,1"), &p("3")).unwrap(), -1);
        assert_eq!(t3.value(&p("2,1"), &p("2,1")).unwrap(), 0);
        assert!(matches!(character_table(9), Err(Error::UnsupportedDegree(9))));
    }

    #[test]
    fn dimensions_match_hook_length() {
        for d in 1..=8 {
            let t = character_table(d).unwrap();
            for lam in t.partitions() {
                let hook = factorial(d) / lam.hook_product();
                assert_eq!(t.dimension(lam).unwrap() as u128, hook, "{lam}");
            }
        }
    }

    #[test]
    fn orthogonality_up_to_eight() {
        for d in 1..=8 {
            let t = character_table(d).unwrap();
            let n = t.partitions().len();
            let order = t.group_order() as i128;
            for a in 0..n {
                for b in 0..n {
                    let row: i128 = (0..n)
                        .map(|c| t.class_sizes()[c] as i128 * t.values[a][c] as i128 * t.values[b][c] as i128)
                        .sum();
                    assert_eq!(row, if a == b { order } else { 0 });
                    let col: i128 = (0..n).map(|i| t.values[i][a] as i128 * t.values[i][b] as i128).sum();
                    let expect = if a == b { centralizer_order(&t.partitions()[a]) as i128 } else { 0 };
                    assert_eq!(col, expect);
                }
            }
            let sq: u64 = t.partitions().iter().map(|l| t.dimension(l).unwrap().pow(2)).sum();
            assert_eq!(sq, t.group_order());
        }
    }

    #[test]
    fn decompose_examples() {
        let t3 = character_table(3).unwrap();
        let chi = t3.irreducible(&p("2,1")).unwrap();
        assert_eq!(decompose(&chi).unwrap(), cv(3, &[("2,1", 1)]));
        let reg = ClassFunction::new(3, [(p("1,1,1"), rat(6))].into_iter().collect()).unwrap();
        assert_eq!(decompose(&reg).unwrap(), cv(3, &[("3", 1), ("2,1", 2), ("1,1,1", 1)]));
        let perm = ClassFunction::new(3, [(p("1,1,1"), rat(3)), (p("2,1"), rat(1))].into_iter().collect()).unwrap();
        assert_eq!(decompose(&perm).unwrap(), cv(3, &[("3", 1), ("2,1", 1)]));
        let bad = ClassFunction::new(3, [(p("1,1,1"), rat(1))].into_iter().collect()).unwrap();
        assert!(matches!(decompose(&bad), Err(Error::InvalidMultiplicity { .. })));
    }

    #[test]
    fn sign_twist_examples() {
        assert_eq!(sign_twist(&cv(3, &[("3", 1)])), cv(3, &[("1,1,1", 1)]));
        assert_eq!(sign_twist(&cv(3, &[("2,1", 2)])), cv(3, &[("2,1", 2)]));
        assert_eq!(sign_twist(&cv(3, &[("3", 1), ("2,1", 1)])), cv(3, &[("1,1,1", 1), ("2,1", 1)]));
    }

    #[test]
    fn induction_examples() {
        let triv2 = cv(2, &[("2", 1)]);
        let triv1 = cv(1, &[("1", 1)]);
        assert_eq!(induced_character(&triv2, &triv1).unwrap(), cv(3, &[("3", 1), ("2,1", 1)]));
        assert_eq!(induced_character(&triv1, &triv1).unwrap(), cv(2, &[("2", 1), ("1,1", 1)]));
        assert_eq!(
            induced_product(&[triv1.clone(), triv1.clone(), triv1]).unwrap(),
            cv(3, &[("3", 1), ("2,1", 2), ("1,1,1", 1)])
        );
    }

    #[test]
    fn class_representatives() {
        assert!(class_representative(&p("1,1,1")).is_identity());
        assert_eq!(class_representative(&p("2,1")).images(), vec![2, 1, 3]);
        assert_eq!(class_representative(&p("3")).images(), vec![2, 3, 1]);
        for d in 1..=6 {
            for rho in Partition::all(d) {
                assert_eq!(class_representative(&rho).cycle_type(), rho);
            }
        }
    }

    #[test]
    fn permutation_basics() {
        assert_eq!(Permutation::all(4).len(), 24);
        let s = Permutation::from_images(vec![2, 3, 1]).unwrap();
        let t = Permutation::from_images(vec![1, 3, 2]).unwrap();
        // apply s then t: 1 -> 2 -> 3
        assert_eq!(s.compose(&t).unwrap().images(), vec![3, 2, 1]);
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert_eq!(s.sign(), 1);
        assert_eq!(t.sign(), -1);
        assert!(Permutation::from_images(vec![1, 1]).is_err());
        assert!(Permutation::simple(3, 3).is_err());
    }

    #[test]
    fn json_keys_use_parenthesised_partitions() {
        let js = serde_json::to_string(&cv(3, &[("3", 1), ("2,1", 2)])).unwrap();
        assert_eq!(js, r#"{"(2,1)":2,"(3)":1}"#);
    }
}

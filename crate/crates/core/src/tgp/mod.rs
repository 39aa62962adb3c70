//! Tanisaki generators, their multiparameter deformation, and the quotient
//! algebras `R_a(λ) = Q[t_1,…,t_d]/⟨C_λ^a⟩`.
//!
//! Columns of `λ` carry the evaluation parameters `a_1,…,a_{λ_1}`. For a
//! stratum `n` the sequence `a^(n)` lists the labels of the boxes in rows
//! `n+1,…,ℓ(λ)`, reading each row left to right, top row first.

mod algebra;
mod battery;
mod checks;
mod example;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{kostka_number, modified_kostka, multinomial, Partition};
use crate::polyring::{complete_homogeneous_eval, elementary_symmetric, parse_rational, MPoly, Rational};
use crate::symgrp::CharacterVector;

pub use algebra::{build_quotient, build_quotient_from, RepMatrices, TgpAlgebra};
pub use battery::{parameter_battery, partition_seed, random_params, split_battery, BatteryEntry};
pub use checks::{
    annihilates, annihilation_check, flatness_check, head_socle_check, point_variety_oracle, reduce_lemma_check,
    root_product_check, shift_scale_check, split_blocks, split_check, swap_check, symmev_check, t_inverse_check,
    truncation_check, variety_points, FlatnessReport, SplitBlock, SplitReport,
};
pub use example::{
    basis_change, conjugate, example_module, example_report, fingerprint, hom_dimension, modules_isomorphic,
    ExampleBasis, ExampleReport, Fingerprint,
};

/// Column labels `(a_1,…,a_{λ_1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvalParams {
    values: Vec<Rational>,
}

impl EvalParams {
    pub fn new(values: Vec<Rational>) -> Self {
        EvalParams { values }
    }

    pub fn zeros(len: usize) -> Self {
        EvalParams { values: vec![Rational::zero(); len] }
    }

    pub fn constant(len: usize, value: Rational) -> Self {
        EvalParams { values: vec![value; len] }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn all_nonzero(&self) -> bool {
        self.values.iter().all(|a| !a.is_zero())
    }

    pub fn all_distinct(&self) -> bool {
        let mut v = self.values.clone();
        v.sort();
        v.windows(2).all(|w| w[0] != w[1])
    }

    /// Fails unless there is exactly one label per column of `lambda`.
    pub fn check(&self, lambda: &Partition) -> Result<()> {
        if self.len() != lambda.part(0) {
            return Err(Error::ParamLength { expected: lambda.part(0), found: self.len() });
        }
        Ok(())
    }

    /// `a^(n)`: labels of the boxes in rows `n+1,…,ℓ(λ)`; its length is
    /// `m_λ(n)`.
    pub fn row_sequence(&self, lambda: &Partition, n: usize) -> Vec<Rational> {
        lambda.parts()[n.min(lambda.len())..].iter().flat_map(|&row| self.values[..row].iter().cloned()).collect()
    }

    /// `b·a + c` entrywise.
    pub fn affine(&self, b: &Rational, c: &Rational) -> EvalParams {
        EvalParams { values: self.values.iter().map(|a| a * b + c).collect() }
    }

    pub fn swapped(&self, i: usize, j: usize) -> EvalParams {
        let mut values = self.values.clone();
        values.swap(i, j);
        EvalParams { values }
    }
}

impl fmt::Display for EvalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.values.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", items.join(","))
    }
}

impl FromStr for EvalParams {
    type Err = Error;

    /// Comma-separated rationals, e.g. `1,1/2,-3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(EvalParams::new(Vec::new()));
        }
        Ok(EvalParams::new(s.split(',').map(parse_rational).collect::<Result<_>>()?))
    }
}

impl Serialize for EvalParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let items: Vec<String> = self.values.iter().map(|a| a.to_string()).collect();
        items.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TanisakiEntry {
    pub n: usize,
    /// 1-based variable indices.
    pub subset: Vec<usize>,
    pub r: usize,
    pub poly: MPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TanisakiSet {
    pub lambda: Partition,
    pub params: Option<EvalParams>,
    pub entries: Vec<TanisakiEntry>,
}

impl TanisakiSet {
    pub fn polys(&self) -> Vec<MPoly> {
        self.entries.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `d_λ = d!/∏ (λ^t_i)!`.
pub fn d_lambda(lambda: &Partition) -> u128 {
    multinomial(lambda.transpose().parts())
}

/// `ch M(λ) = {μ ↦ K_{μ,λ^t}}`, the character of the permutation module
/// induced from the trivial module of `S_{λ^t_1} × S_{λ^t_2} × …`.
pub fn permutation_module_character(lambda: &Partition) -> Result<CharacterVector> {
    let d = lambda.size();
    let conj = lambda.transpose();
    let mut pairs = Vec::new();
    for mu in Partition::all(d) {
        let k = kostka_number(&mu, &conj)?;
        if k > 0 {
            pairs.push((mu, k));
        }
    }
    CharacterVector::from_pairs(d, pairs)
}

/// `{i ↦ {μ ↦ [q^i] K̃_{μ,λ^t}(q)}}`, the graded character predicted for
/// the undeformed quotient.
pub fn predicted_graded_character(lambda: &Partition) -> Result<BTreeMap<usize, CharacterVector>> {
    let d = lambda.size();
    let conj = lambda.transpose();
    let mut by_degree: BTreeMap<usize, BTreeMap<Partition, u64>> = BTreeMap::new();
    for mu in Partition::all(d) {
        for (i, &c) in modified_kostka(&mu, &conj)?.coeffs().iter().enumerate() {
            if c > 0 {
                by_degree.entry(i).or_default().insert(mu.clone(), c);
            }
        }
    }
    by_degree.into_iter().map(|(i, m)| Ok((i, CharacterVector::new(d, m)?))).collect()
}

/// The `k`-subsets of `{0,…,d−1}` in lexicographic order.
pub(crate) fn subsets(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > d {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < d - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Which coefficients of each stratum to keep.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Range {
    Full,
    Reduced,
}

fn build_set(lambda: &Partition, params: Option<&EvalParams>, range: Range) -> Result<TanisakiSet> {
    if let Some(a) = params {
        a.check(lambda)?;
    }
    let d = lambda.size();
    let mut entries = Vec::new();
    for n in 0..lambda.len() {
        let m = lambda.m_lambda(n)?;
        let k = d - n;
        // h_j(a^(n)) for j = 0..=k
        let h: Vec<Rational> = match params {
            Some(a) => {
                let seq = a.row_sequence(lambda, n);
                (0..=k).map(|j| complete_homogeneous_eval(&seq, j)).collect()
            }
            None => (0..=k).map(|j| if j == 0 { Rational::one() } else { Rational::zero() }).collect(),
        };
        let top = match range {
            Range::Full => k,
            Range::Reduced => k - m + lambda.part(n),
        };
        for subset in subsets(d, k) {
            let e: Vec<MPoly> = (0..=k).map(|r| elementary_symmetric(&subset, r, d)).collect();
            for r in (k - m + 1)..=top {
                let mut poly = MPoly::zero(d);
                for j in 0..=r {
                    if h[j].is_zero() {
                        continue;
                    }
                    let term = e[r - j].scale(&h[j]);
                    poly = if j % 2 == 0 { &poly + &term } else { &poly - &term };
                }
                entries.push(TanisakiEntry { n, subset: subset.iter().map(|i| i + 1).collect(), r, poly });
            }
        }
    }
    Ok(TanisakiSet { lambda: lambda.clone(), params: params.cloned(), entries })
}

/// `C_λ`: all `e_r(t_J)` with `|J| = d−n` and `d−n−m_λ(n) < r ≤ d−n`.
pub fn tanisaki_generators(lambda: &Partition) -> TanisakiSet {
    build_set(lambda, None, Range::Full).expect("undeformed generators need no parameters")
}

/// `C_λ^a`: `Σ_k (−1)^k e_{r−k}(t_J) h_k(a^(n))` over the same index range.
pub fn deformed_generators(lambda: &Partition, a: &EvalParams) -> Result<TanisakiSet> {
    build_set(lambda, Some(a), Range::Full)
}

/// The smaller generating set keeping only `r ≤ d−n−m_λ(n)+λ_{n+1}` in
/// stratum `n`.
pub fn reduced_generators(lambda: &Partition, a: &EvalParams) -> Result<TanisakiSet> {
    build_set(lambda, Some(a), Range::Reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(s: &str, n: usize) -> MPoly {
        MPoly::parse(s, n).unwrap()
    }

    #[test]
    fn undeformed_examples() {
        let set = tanisaki_generators(&p("2"));
        assert_eq!(set.polys(), vec![poly("t1 + t2", 2), poly("t1*t2", 2)]);
        let set = tanisaki_generators(&p("1,1"));
        assert_eq!(set.polys(), vec![poly("t1 + t2", 2), poly("t1*t2", 2), poly("t1", 2), poly("t2", 2)]);
        let set = tanisaki_generators(&p("4"));
        assert_eq!(set.len(), 4);
        assert!(set.entries.iter().all(|e| e.subset == vec![1, 2, 3, 4]));
    }

    #[test]
    fn zero_deformation_is_undeformed() {
        for d in 1..=5 {
            for lam in Partition::all(d) {
                let a = EvalParams::zeros(lam.part(0));
                assert_eq!(deformed_generators(&lam, &a).unwrap().polys(), tanisaki_generators(&lam).polys());
            }
        }
    }

    #[test]
    fn row_sequences() {
        let a = EvalParams::new(vec![rat(1), rat(2), rat(3)]);
        let lam = p("3,2,2,1");
        assert_eq!(a.row_sequence(&lam, 0).len(), 8);
        assert_eq!(a.row_sequence(&lam, 1), vec![rat(1), rat(2), rat(1), rat(2), rat(1)]);
        assert_eq!(a.row_sequence(&lam, 3), vec![rat(1)]);
    }

    #[test]
    fn reduced_counts() {
        let a = EvalParams::constant(2, rat(1));
        let lam = p("2,1");
        assert_eq!(deformed_generators(&lam, &a).unwrap().len(), 6);
        assert_eq!(reduced_generators(&lam, &a).unwrap().len(), 5);
        assert_eq!(reduced_generators(&lam, &EvalParams::zeros(2)).unwrap().len(), 5);
        let lam = p("3");
        let a = EvalParams::new(vec![rat(1), rat(2), rat(3)]);
        assert_eq!(reduced_generators(&lam, &a).unwrap(), deformed_generators(&lam, &a).unwrap());
    }

    #[test]
    fn one_one_with_parameter() {
        let set = deformed_generators(&p("1,1"), &EvalParams::new(vec![rat(1)])).unwrap();
        let polys = set.polys();
        assert!(polys.contains(&poly("t1 - 1", 2)));
        assert!(polys.contains(&poly("t2 - 1", 2)));
    }

    #[test]
    fn param_length_is_checked() {
        assert_eq!(
            deformed_generators(&p("2,1"), &EvalParams::zeros(1)),
            Err(Error::ParamLength { expected: 2, found: 1 })
        );
    }

    #[test]
    fn permutation_module_characters() {
        let ch = permutation_module_character(&p("2,1")).unwrap();
        assert_eq!(ch, CharacterVector::from_pairs(3, [(p("3"), 1), (p("2,1"), 1)]).unwrap());
        assert_eq!(d_lambda(&p("2,2")), 6);
        assert_eq!(d_lambda(&p("3,1")), 12);
        assert_eq!(d_lambda(&p("1,1,1")), 1);
    }

    #[test]
    fn parse_params() {
        let a: EvalParams = "1, 1/2,-3".parse().unwrap();
        assert_eq!(a.values(), &[rat(1), crate::polyring::rat_frac(1, 2), rat(-3)]);
        assert_eq!(a.to_string(), "1,1/2,-3");
        assert!("1,x".parse::<EvalParams>().is_err());
    }
}

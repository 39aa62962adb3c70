//! Highest-weight decompositions for `sl_{n+1}` in the stable range
//! `d ≤ n`, where a partition with at most `n` rows is a dominant weight.
//!
//! The tensor product of fundamental modules attached to the columns of `λ`
//! is decomposed by the vertical-strip Pieri rule, independently of the
//! symmetric-group side.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::{rat, Rational};
use crate::symgrp::{binomial, sign_twist, CharacterVector};
use crate::tgp::{build_quotient, EvalParams};

/// Multiplicities `[V : V(μ)]` of a finite-dimensional `sl_{n+1}`-module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GDecomposition {
    rank: usize,
    mults: BTreeMap<Partition, u64>,
}

impl GDecomposition {
    pub fn new(rank: usize, mults: BTreeMap<Partition, u64>) -> Result<Self> {
        if let Some(bad) = mults.keys().find(|p| p.len() > rank) {
            return Err(Error::StableRange { d: bad.len(), n: rank });
        }
        Ok(GDecomposition { rank, mults: mults.into_iter().filter(|(_, m)| *m > 0).collect() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn multiplicity(&self, p: &Partition) -> u64 {
        self.mults.get(p).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<Partition, u64> {
        &self.mults
    }

    /// `Σ_μ [V : V(μ)] · dim V(μ)`.
    pub fn dimension(&self) -> u128 {
        self.mults.iter().map(|(p, &m)| m as u128 * weyl_dimension(p, self.rank)).sum()
    }
}

impl fmt::Display for GDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.mults.iter().map(|(p, m)| format!("{p}:{m}")).collect();
        write!(f, "rank {}: {{{}}}", self.rank, items.join(", "))
    }
}

impl Serialize for GDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.mults.len() + 1))?;
        map.serialize_entry("rank", &self.rank)?;
        for (p, m) in &self.mults {
            map.serialize_entry(&p.to_string(), m)?;
        }
        map.end()
    }
}

/// All partitions obtained from `mu` by adding a vertical strip of `k`
/// boxes (no two in the same row), keeping at most `max_rows` rows.
pub fn add_vertical_strip(mu: &Partition, k: usize, max_rows: usize) -> Vec<Partition> {
    let rows = (mu.len() + k).min(max_rows);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(mu: &Partition, rows: usize, k: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if chosen.len() == k {
            let mut parts: Vec<usize> = (0..rows).map(|i| mu.part(i)).collect();
            for &i in chosen.iter() {
                parts[i] += 1;
            }
            if let Ok(p) = Partition::new(parts) {
                out.push(p);
            }
            return;
        }
        for i in start..rows {
            chosen.push(i);
            rec(mu, rows, k, i + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(mu, rows, k, 0, &mut chosen, &mut out);
    out
}

/// Removes columns of height `n + 1`, which carry the trivial weight of
/// `sl_{n+1}`.
fn strip_full_columns(mu: &Partition, n: usize) -> Partition {
    let full = mu.part(n);
    Partition::from_unsorted(mu.parts()[..mu.len().min(n)].iter().map(|&p| p - full).collect())
}

/// Decomposes `V(ω_{h_1}) ⊗ V(ω_{h_2}) ⊗ …` for the column heights given,
/// in the given order.
pub fn tensor_fundamentals(heights: &[usize], n: usize) -> Result<GDecomposition> {
    if let Some(&h) = heights.iter().find(|&&h| h > n) {
        return Err(Error::StableRange { d: h, n });
    }
    let mut current: BTreeMap<Partition, u64> = [(Partition::empty(), 1)].into_iter().collect();
    for &h in heights {
        let mut next = BTreeMap::new();
        for (mu, m) in &current {
            for nu in add_vertical_strip(mu, h, n + 1) {
                *next.entry(strip_full_columns(&nu, n)).or_insert(0) += m;
            }
        }
        current = next;
    }
    GDecomposition::new(n, current)
}

/// The `g`-module structure of the local Weyl module for `λ`: the tensor
/// product of the fundamental modules of the columns of `λ`, tallest first.
pub fn weyl_gmodule_decomposition(lambda: &Partition, n: usize) -> Result<GDecomposition> {
    if lambda.size() > n {
        return Err(Error::StableRange { d: lambda.size(), n });
    }
    tensor_fundamentals(lambda.transpose().parts(), n)
}

/// Sends `L(μ)` to `V(μ)`; only defined for `d ≤ n`.
pub fn schur_weyl_image(v: &CharacterVector, n: usize) -> Result<GDecomposition> {
    if v.degree() > n {
        return Err(Error::StableRange { d: v.degree(), n });
    }
    GDecomposition::new(n, v.multiplicities().clone())
}

/// The image of the amended module `R_a(λ) ⊗ sign` has the same highest
/// weight multiplicities as the tensor product of fundamentals.
pub fn dualweyl_check(lambda: &Partition, a: &EvalParams, n: usize) -> Result<bool> {
    if lambda.size() > n {
        return Err(Error::StableRange { d: lambda.size(), n });
    }
    let ch = build_quotient(lambda, a)?.character()?;
    Ok(schur_weyl_image(&sign_twist(&ch), n)? == weyl_gmodule_decomposition(lambda, n)?)
}

/// Weyl dimension formula for `sl_{n+1}`:
/// `∏_{1≤i<j≤n+1} (μ_i − μ_j + j − i)/(j − i)`.
pub fn weyl_dimension(mu: &Partition, n: usize) -> u128 {
    let r = n + 1;
    let mut num = rat(1);
    for i in 0..r {
        for j in i + 1..r {
            let top = mu.part(i) as i64 - mu.part(j) as i64 + (j - i) as i64;
            num *= Rational::new(top.into(), ((j - i) as i64).into());
        }
    }
    num.to_integer().try_into().expect("dimension fits in u128")
}

/// Hook-content formula `∏_{boxes} (N + c)/h` with `N = n + 1`.
pub fn hook_content_dimension(mu: &Partition, n: usize) -> u128 {
    let big_n = (n + 1) as i64;
    let conj = mu.transpose();
    let mut acc = rat(1);
    for (i, &row) in mu.parts().iter().enumerate() {
        for j in 0..row {
            let content = j as i64 - i as i64;
            let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
            acc *= Rational::new((big_n + content).into(), (hook as i64).into());
        }
    }
    acc.to_integer().try_into().expect("dimension fits in u128")
}

/// `∏_i dim V(ω_{λ^t_i}) = ∏_i C(n+1, λ^t_i)`.
pub fn fundamental_product_dimension(lambda: &Partition, n: usize) -> u128 {
    lambda.transpose().parts().iter().map(|&h| binomial(n + 1, h)).product()
}

//! Sparse multivariate polynomials over the rationals in variables
//! `t_1, …, t_d`.
//!
//! Variables are addressed by 0-based index internally; the text format and
//! the JSON exponent vectors use the 1-based names `t1, t2, …`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::symgrp::Permutation;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Exponent vector of a monomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    /// `t_{var+1}^power`.
    pub fn var(nvars: usize, var: usize, power: u16) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = power;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// The single variable of a pure power `t_i^k`, `k ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Substitutes `t_j ↦ t_{σ(j)}`.
    pub fn permuted(&self, sigma: &Permutation) -> Monomial {
        let mut exps: SmallVec<[u16; 8]> = SmallVec::from_elem(0, self.exps.len());
        for (j, &e) in self.exps.iter().enumerate() {
            exps[sigma.image(j)] = e;
        }
        Monomial { exps }
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&rhs.exps).map(|(a, b)| a + b).collect() }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Monomial orders with `t_1 > t_2 > … > t_d`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    DegLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn is_graded(self) -> bool {
        !matches!(self, MonomialOrder::Lex)
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::Lex => "lex",
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            "deglex" | "grlex" => Ok(MonomialOrder::DegLex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => Err(Error::Parse(format!("unknown monomial order {s:?}"))),
        }
    }
}

/// A polynomial in a fixed number of variables; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        MPoly::from_term(Monomial::one(nvars), c)
    }

    /// The variable `t_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        MPoly::from_term(Monomial::var(nvars, i, 1), Rational::one())
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { nvars, terms }
    }

    /// Sums duplicate monomials and drops zeros. Panics if a monomial has the
    /// wrong length.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(nvars: usize, terms: I) -> Self {
        let mut p = MPoly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial length does not match ring");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms sorted by `order`, largest first.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<(Monomial, Rational)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(n, a)| (n * m, a.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        self.check_len(point.len())?;
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitutes `t_j ↦ t_{σ(j)}` in every monomial.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<MPoly> {
        self.check_len(sigma.degree())?;
        Ok(MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.permuted(sigma), c.clone())).collect() })
    }

    /// Substitutes `t_j ↦ images[j]` simultaneously.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly> {
        self.check_len(images.len())?;
        let target = images.first().map(MPoly::nvars).unwrap_or(0);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::DimensionMismatch { expected: target, found: bad.nvars });
        }
        let mut powers: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(p.nvars), p.clone()]).collect();
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(target, c.clone());
            for (j, &e) in m.exps().iter().enumerate() {
                let e = e as usize;
                while powers[j].len() <= e {
                    let next = &powers[j][powers[j].len() - 1] * &images[j];
                    powers[j].push(next);
                }
                if e > 0 {
                    term = &term * &powers[j][e];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitutes `t_k ↦ b·t_k + c` in all variables.
    pub fn shift_scale(&self, b: &Rational, c: &Rational) -> Result<MPoly> {
        if b.is_zero() {
            return Err(Error::ZeroScale);
        }
        let n = self.nvars;
        let images: Vec<MPoly> = (0..n).map(|k| &MPoly::var(n, k).scale(b) + &MPoly::constant(n, c.clone())).collect();
        if n == 0 {
            return Ok(self.clone());
        }
        self.substitute(&images)
    }

    /// Multiplies by the lcm of the denominators and divides by the gcd of the
    /// numerators, so the result has coprime integer coefficients.
    pub fn primitive_part(&self) -> MPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut l = BigInt::one();
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
            g = g.gcd(c.numer());
        }
        let factor = Rational::new(l, g);
        self.scale(&factor)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: MonomialOrder) -> MPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: n });
        }
        Ok(())
    }

    /// Parses the text format `3/2*t1^2*t3 - t2` in a ring with `nvars`
    /// variables.
    pub fn parse(s: &str, nvars: usize) -> Result<MPoly> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = MPoly::zero(nvars);
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    chunks.push((negative, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(bad("dangling sign"));
                }
                negative = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad("trailing sign"));
        }
        chunks.push((negative, cur));
        for (neg, chunk) in chunks {
            let mut coeff = Rational::one();
            let mut exps = vec![0u16; nvars];
            for factor in chunk.split('*') {
                if let Some(rest) = factor.strip_prefix('t') {
                    let (idx, pow) = match rest.split_once('^') {
                        Some((i, p)) => (i, p.parse::<u16>().map_err(|_| bad("bad exponent"))?),
                        None => (rest, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad("bad variable index"))?;
                    if idx == 0 || idx > nvars {
                        return Err(bad("variable index out of range"));
                    }
                    exps[idx - 1] += pow;
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(Monomial::new(&exps), coeff);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.sorted_terms(MonomialOrder::DegRevLex)
            .into_iter()
            .map(|(m, c)| TermJson { exponents: m.exps().to_vec(), coeff: c.to_string() })
            .collect()
    }

    pub fn from_json(terms: &[TermJson], nvars: usize) -> Result<MPoly> {
        let mut p = MPoly::zero(nvars);
        for t in terms {
            if t.exponents.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: t.exponents.len() });
            }
            p.add_term(Monomial::new(&t.exponents), parse_rational(&t.coeff)?);
        }
        Ok(p)
    }
}

/// One term of the JSON polynomial format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u16>,
    pub coeff: String,
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms(MonomialOrder::DegRevLex).iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "ring dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "ring dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "ring dimension mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m * n, a * b);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

/// `e_r(t_J)` for a set of 0-based variable indices `subset`. Zero when
/// `r > |J|`.
pub fn elementary_symmetric(subset: &[usize], r: usize, nvars: usize) -> MPoly {
    let mut out = MPoly::zero(nvars);
    if r > subset.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let mut exps = vec![0u16; nvars];
        for &i in &idx {
            exps[subset[i]] += 1;
        }
        out.add_term(Monomial::new(&exps), Rational::one());
        // next r-combination of positions in `subset`
        let mut k = r;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] < subset.len() - r + k {
                idx[k] += 1;
                for j in k + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `e_r(a)` evaluated at a vector of numbers.
pub fn elementary_symmetric_eval(a: &[Rational], r: usize) -> Rational {
    // coefficients of ∏ (1 + a_i x)
    let mut e = vec![Rational::zero(); r + 1];
    e[0] = Rational::one();
    for x in a {
        for k in (1..=r).rev() {
            let add = &e[k - 1] * x;
            e[k] += add;
        }
    }
    e.swap_remove(r)
}

/// `h_k(a)`, the sum of all degree-`k` monomials in the entries of `a`.
pub fn complete_homogeneous_eval(a: &[Rational], k: usize) -> Rational {
    // coefficients of ∏ 1/(1 − a_i x)
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    for x in a {
        for j in 1..=k {
            let add = &h[j - 1] * x;
            h[j] += add;
        }
    }
    h.swap_remove(k)
}

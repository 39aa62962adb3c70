//! Buchberger's algorithm with the coprime and chain criteria, normal forms,
//! and finite-dimensional quotients `Q[t]/I`.
//!
//! During the completion every polynomial is kept as a primitive integer
//! polynomial with its terms sorted from the largest monomial down. The
//! returned basis is reduced and monic, sorted by leading monomial ascending,
//! so two ideals are equal exactly when their bases are equal.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::polyring::{MPoly, Monomial, MonomialOrder, Rational, TermJson};

type IPoly = Vec<(Monomial, BigInt)>;
type QPolyVec = Vec<(Monomial, Rational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    generators: Vec<MPoly>,
    // same polynomials, terms sorted descending
    sorted: Vec<QPolyVec>,
}

impl GroebnerBasis {
    fn from_sorted(order: MonomialOrder, nvars: usize, sorted: Vec<QPolyVec>) -> Self {
        let generators = sorted.iter().map(|p| MPoly::from_terms(nvars, p.iter().cloned())).collect();
        GroebnerBasis { order, nvars, generators, sorted }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|p| p[0].0.clone()).collect()
    }

    /// True when the basis generates the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.sorted.iter().any(|p| p[0].0.is_one())
    }

    pub fn normal_form(&self, f: &MPoly) -> Result<MPoly> {
        if f.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: f.nvars() });
        }
        let sorted = f.sorted_terms(self.order);
        let refs: Vec<&QPolyVec> = self.sorted.iter().collect();
        let r = reduce_rat(sorted, &refs, self.order);
        Ok(MPoly::from_terms(self.nvars, r))
    }

    pub fn contains(&self, f: &MPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Post-hoc check: the basis is reduced and monic and every S-polynomial
    /// of a pair of elements reduces to zero.
    pub fn verify(&self) -> bool {
        let lms = self.leading_monomials();
        for (i, p) in self.sorted.iter().enumerate() {
            if !p[0].1.is_one() {
                return false;
            }
            for (m, _) in p {
                if lms.iter().enumerate().any(|(j, l)| j != i && l.divides(m)) {
                    return false;
                }
            }
        }
        let refs: Vec<&QPolyVec> = self.sorted.iter().collect();
        for i in 0..self.sorted.len() {
            for j in i + 1..self.sorted.len() {
                let (a, b) = (&self.sorted[i], &self.sorted[j]);
                if a[0].0.is_coprime(&b[0].0) {
                    continue;
                }
                let l = a[0].0.lcm(&b[0].0);
                let s = combine_rat(
                    &mul_monomial_rat(a, &a[0].0.quotient_of(&l)),
                    &-Rational::one(),
                    &b[0].0.quotient_of(&l),
                    b,
                    self.order,
                );
                if !reduce_rat(s, &refs, self.order).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> GroebnerJson {
        GroebnerJson {
            order: self.order,
            nvars: self.nvars,
            generators: self.generators.iter().map(MPoly::to_json).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroebnerJson {
    pub order: MonomialOrder,
    pub nvars: usize,
    pub generators: Vec<Vec<TermJson>>,
}

impl Serialize for GroebnerBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn cmp_desc(order: MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
    order.cmp(b, a)
}

/// `a·f − b·q·g` for sorted integer polynomials.
fn combine_int(a: &BigInt, f: &IPoly, b: &BigInt, q: &Monomial, g: &IPoly, order: MonomialOrder) -> IPoly {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut gi: Option<Monomial> = g.first().map(|t| &t.0 * q);
    while i < f.len() || j < g.len() {
        let ord = match (f.get(i), &gi) {
            (Some(ft), Some(gm)) => cmp_desc(order, &ft.0, gm),
            (Some(_), None) => Ordering::Less,
            (None, _) => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push((f[i].0.clone(), &f[i].1 * a));
                i += 1;
            }
            Ordering::Greater => {
                out.push((gi.take().unwrap(), -(&g[j].1 * b)));
                j += 1;
                gi = g.get(j).map(|t| &t.0 * q);
            }
            Ordering::Equal => {
                let c = &f[i].1 * a - &g[j].1 * b;
                if !c.is_zero() {
                    out.push((f[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                gi = g.get(j).map(|t| &t.0 * q);
            }
        }
    }
    out
}

/// `f − b·q·g` for sorted rational polynomials.
fn combine_rat(f: &QPolyVec, b: &Rational, q: &Monomial, g: &QPolyVec, order: MonomialOrder) -> QPolyVec {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut gi: Option<Monomial> = g.first().map(|t| &t.0 * q);
    while i < f.len() || j < g.len() {
        let ord = match (f.get(i), &gi) {
            (Some(ft), Some(gm)) => cmp_desc(order, &ft.0, gm),
            (Some(_), None) => Ordering::Less,
            (None, _) => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((gi.take().unwrap(), -(&g[j].1 * b)));
                j += 1;
                gi = g.get(j).map(|t| &t.0 * q);
            }
            Ordering::Equal => {
                let c = &f[i].1 - &g[j].1 * b;
                if !c.is_zero() {
                    out.push((f[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                gi = g.get(j).map(|t| &t.0 * q);
            }
        }
    }
    out
}

fn mul_monomial_rat(f: &QPolyVec, q: &Monomial) -> QPolyVec {
    f.iter().map(|(m, c)| (m * q, c.clone())).collect()
}

fn mul_monomial_int(f: &IPoly, q: &Monomial) -> IPoly {
    f.iter().map(|(m, c)| (m * q, c.clone())).collect()
}

/// Divides by the content and makes the leading coefficient positive.
fn make_primitive(f: &mut IPoly) {
    let Some(first) = f.first() else {
        return;
    };
    let mut g = BigInt::zero();
    for (_, c) in f.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if first.1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in f.iter_mut() {
            *c /= &g;
        }
    }
}

/// Full pseudo-reduction of `f` by `basis`; the result is a primitive
/// integer multiple of the remainder.
fn reduce_int(mut f: IPoly, basis: &[&IPoly], order: MonomialOrder) -> IPoly {
    let mut i = 0;
    let mut steps = 0u32;
    while i < f.len() {
        let divisor = basis.iter().find(|g| g[0].0.divides(&f[i].0));
        match divisor {
            Some(g) => {
                let c = &f[i].1;
                let lg = &g[0].1;
                let gcd = c.gcd(lg);
                let a = lg / &gcd;
                let b = c / &gcd;
                let q = g[0].0.quotient_of(&f[i].0);
                f = combine_int(&a, &f, &b, &q, g, order);
                steps += 1;
                if steps.is_multiple_of(8) {
                    make_primitive(&mut f);
                }
            }
            None => i += 1,
        }
    }
    make_primitive(&mut f);
    f
}

/// Full reduction of `f` by a monic `basis`.
fn reduce_rat(mut f: QPolyVec, basis: &[&QPolyVec], order: MonomialOrder) -> QPolyVec {
    let mut i = 0;
    while i < f.len() {
        let divisor = basis.iter().find(|g| g[0].0.divides(&f[i].0));
        match divisor {
            Some(g) => {
                let q = g[0].0.quotient_of(&f[i].0);
                let c = f[i].1.clone();
                f = combine_rat(&f, &c, &q, g, order);
            }
            None => i += 1,
        }
    }
    f
}

fn to_int_sorted(p: &MPoly, order: MonomialOrder) -> IPoly {
    let prim = p.primitive_part();
    let mut v: IPoly = prim.sorted_terms(order).into_iter().map(|(m, c)| (m, c.to_integer())).collect();
    make_primitive(&mut v);
    v
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    order: MonomialOrder,
    polys: Vec<IPoly>,
    // indices of polys currently in the basis, in insertion order
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn lm(&self, k: usize) -> &Monomial {
        &self.polys[k][0].0
    }

    fn reduce(&self, f: IPoly) -> IPoly {
        let basis: Vec<&IPoly> = self.active.iter().map(|&k| &self.polys[k]).collect();
        reduce_int(f, &basis, self.order)
    }

    /// Gebauer–Möller update with a new basis element.
    fn insert(&mut self, h: IPoly) {
        let k = self.polys.len();
        self.polys.push(h);
        let lh = self.lm(k).clone();

        let mut candidates: Vec<(usize, Monomial)> = self.active.iter().map(|&g| (g, lh.lcm(self.lm(g)))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while !candidates.is_empty() {
            let (g1, l1) = candidates.remove(0);
            let coprime = lh.is_coprime(self.lm(g1));
            let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !lh.is_coprime(self.lm(*g)))
            .map(|(g, lcm)| Pair { i: g, j: k, lcm })
            .collect();

        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let drop = lh.divides(&p.lcm) && lh.lcm(self.lm(p.i)) != p.lcm && lh.lcm(self.lm(p.j)) != p.lcm;
            if !drop {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(new_pairs);

        let polys = &self.polys;
        self.active.retain(|&g| !lh.divides(&polys[g][0].0));
        self.active.push(k);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| order.cmp(&a.lcm, &b.lcm).then((a.j, a.i).cmp(&(b.j, b.i))))
            .map(|(idx, _)| idx)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_poly(&self, p: &Pair) -> IPoly {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let (cf, cg) = (&f[0].1, &g[0].1);
        let gcd = cf.gcd(cg);
        let a = cg / &gcd;
        let b = cf / &gcd;
        let qf = f[0].0.quotient_of(&p.lcm);
        let qg = g[0].0.quotient_of(&p.lcm);
        combine_int(&a, &mul_monomial_int(f, &qf), &b, &qg, g, self.order)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[MPoly], order: MonomialOrder) -> Result<GroebnerBasis> {
    let nvars = gens.first().map_or(0, MPoly::nvars);
    if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::DimensionMismatch { expected: nvars, found: bad.nvars() });
    }
    let mut inputs: Vec<(usize, IPoly)> =
        gens.iter().enumerate().filter(|(_, g)| !g.is_zero()).map(|(i, g)| (i, to_int_sorted(g, order))).collect();
    inputs.sort_by(|(ia, a), (ib, b)| order.cmp(&a[0].0, &b[0].0).then(ia.cmp(ib)));

    let mut engine = Engine { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for (_, f) in inputs {
        let h = engine.reduce(f);
        if !h.is_empty() {
            engine.insert(h);
        }
    }
    while let Some(p) = engine.select_pair() {
        let s = engine.s_poly(&p);
        let h = engine.reduce(s);
        if !h.is_empty() {
            engine.insert(h);
        }
    }

    // minimal basis: active elements already have pairwise non-dividing lms
    let mut minimal: Vec<IPoly> = engine.active.iter().map(|&k| engine.polys[k].clone()).collect();
    minimal.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut dedup: Vec<IPoly> = Vec::new();
    for p in minimal {
        if !dedup.iter().any(|q| q[0].0.divides(&p[0].0)) {
            dedup.push(p);
        }
    }
    let monic: Vec<QPolyVec> = dedup
        .iter()
        .map(|p| {
            let inv = Rational::from_integer(p[0].1.clone()).recip();
            p.iter().map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()) * &inv)).collect()
        })
        .collect();
    let mut reduced: Vec<QPolyVec> = Vec::with_capacity(monic.len());
    for (i, p) in monic.iter().enumerate() {
        let others: Vec<&QPolyVec> = monic.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q).collect();
        let (head, tail) = p.split_first().unwrap();
        let mut out = vec![head.clone()];
        out.extend(reduce_rat(tail.to_vec(), &others, order));
        reduced.push(out);
    }
    Ok(GroebnerBasis::from_sorted(order, nvars, reduced))
}

/// True iff the two generating sets have the same reduced basis.
pub fn ideal_equal(gens1: &[MPoly], gens2: &[MPoly], order: MonomialOrder) -> Result<bool> {
    Ok(buchberger(gens1, order)? == buchberger(gens2, order)?)
}

/// Standard monomials of a zero-dimensional quotient, ascending in the
/// basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    order: MonomialOrder,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl QuotientBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a normal form in this basis.
    pub fn coordinates(&self, nf: &MPoly) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in nf.terms() {
            let i = self.index_of(m).ok_or_else(|| Error::Invalid(format!("{m} is not a standard monomial")))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn element(&self, coords: &[Rational]) -> MPoly {
        let nvars = self.monomials.first().map_or(0, Monomial::nvars);
        MPoly::from_terms(nvars, self.monomials.iter().cloned().zip(coords.iter().cloned()))
    }
}

pub fn quotient_basis(g: &GroebnerBasis) -> Result<QuotientBasis> {
    let lms = g.leading_monomials();
    let n = g.nvars();
    let mut has_power = vec![false; n];
    for m in &lms {
        if let Some(v) = m.pure_power_var() {
            has_power[v] = true;
        }
    }
    if g.is_unit_ideal() {
        return Ok(QuotientBasis { order: g.order(), monomials: Vec::new(), index: HashMap::new() });
    }
    if has_power.iter().any(|h| !h) {
        return Err(Error::NotZeroDimensional);
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut stack = vec![Monomial::one(n)];
    seen.insert(Monomial::one(n));
    while let Some(m) = stack.pop() {
        for v in 0..n {
            let next = &m * &Monomial::var(n, v, 1);
            if seen.contains(&next) || lms.iter().any(|l| l.divides(&next)) {
                continue;
            }
            seen.insert(next.clone());
            stack.push(next);
        }
    }
    let mut monomials: Vec<Monomial> = seen.into_iter().collect();
    let order = g.order();
    monomials.sort_by(|a, b| order.cmp(a, b));
    let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(QuotientBasis { order, monomials, index })
}

/// Matrix of `x ↦ x·f` on the quotient: column `j` holds the coordinates of
/// the normal form of `b_j·f`.
pub fn multiplication_matrix(f: &MPoly, g: &GroebnerBasis, basis: &QuotientBasis) -> Result<Matrix> {
    let columns: Vec<Vec<Rational>> = basis
        .monomials()
        .iter()
        .map(|b| basis.coordinates(&g.normal_form(&f.mul_monomial(b))?))
        .collect::<Result<_>>()?;
    Matrix::from_columns(basis.dim(), &columns)
}

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_equal};
use crate::partitions::{multinomial, Partition};
use crate::polyring::{elementary_symmetric, elementary_symmetric_eval, MPoly, MonomialOrder, Rational};
use crate::symgrp::{induced_product, CharacterVector, Permutation};

use super::{
    build_quotient, d_lambda, deformed_generators, permutation_module_character, reduced_generators, subsets,
    EvalParams, TgpAlgebra,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatnessReport {
    pub lambda: Partition,
    pub params: EvalParams,
    pub dim: usize,
    pub d_lambda: u128,
    pub flat: bool,
    pub character: CharacterVector,
    pub expected_character: CharacterVector,
    pub character_match: bool,
}

/// Compares `dim R_a(λ)` with `d_λ` and the character with `ch M(λ)`.
pub fn flatness_check(lambda: &Partition, a: &EvalParams) -> Result<FlatnessReport> {
    let alg = build_quotient(lambda, a)?;
    let character = alg.character()?;
    let expected_character = permutation_module_character(lambda)?;
    let dl = d_lambda(lambda);
    Ok(FlatnessReport {
        lambda: lambda.clone(),
        params: a.clone(),
        dim: alg.dim(),
        d_lambda: dl,
        flat: alg.dim() as u128 == dl,
        character_match: character == expected_character,
        character,
        expected_character,
    })
}

/// All arrangements `(t_1,…,t_d)` of the multiset in which `a_i` occurs
/// `λ^t_i` times, in lexicographic order of the column indices.
pub fn variety_points(lambda: &Partition, a: &EvalParams) -> Result<Vec<Vec<Rational>>> {
    a.check(lambda)?;
    if !a.all_distinct() {
        return Err(Error::RepeatedParameters);
    }
    let heights = lambda.transpose();
    let mut remaining: Vec<usize> = heights.parts().to_vec();
    let mut cur = Vec::with_capacity(lambda.size());
    let mut out = Vec::new();
    fn rec(
        remaining: &mut Vec<usize>,
        cur: &mut Vec<usize>,
        total: usize,
        vals: &[Rational],
        out: &mut Vec<Vec<Rational>>,
    ) {
        if cur.len() == total {
            out.push(cur.iter().map(|&c| vals[c].clone()).collect());
            return;
        }
        for c in 0..remaining.len() {
            if remaining[c] > 0 {
                remaining[c] -= 1;
                cur.push(c);
                rec(remaining, cur, total, vals, out);
                cur.pop();
                remaining[c] += 1;
            }
        }
    }
    rec(&mut remaining, &mut cur, lambda.size(), a.values(), &mut out);
    Ok(out)
}

/// True iff every polynomial vanishes at every point.
pub fn annihilates(gens: &[MPoly], points: &[Vec<Rational>]) -> Result<bool> {
    for p in points {
        for g in gens {
            if !g.evaluate(p)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every deformed generator acts by zero on the permutation module realised
/// on the variety points (distinct parameters only).
pub fn annihilation_check(lambda: &Partition, a: &EvalParams) -> Result<bool> {
    let points = variety_points(lambda, a)?;
    annihilates(&deformed_generators(lambda, a)?.polys(), &points)
}

/// Counts the common zeros predicted for distinct parameters, failing with a
/// violation if some point does not annihilate the generators.
pub fn point_variety_oracle(lambda: &Partition, a: &EvalParams) -> Result<usize> {
    let points = variety_points(lambda, a)?;
    if !annihilates(&deformed_generators(lambda, a)?.polys(), &points)? {
        return Err(Error::Violation(format!("a variety point of {lambda} is not a common zero")));
    }
    Ok(points.len())
}

/// The full and reduced deformed sets generate the same ideal.
pub fn reduce_lemma_check(lambda: &Partition, a: &EvalParams) -> Result<bool> {
    let full = deformed_generators(lambda, a)?.polys();
    let reduced = reduced_generators(lambda, a)?.polys();
    ideal_equal(&full, &reduced, MonomialOrder::DegRevLex)
}

/// `e_i(t_1,…,t_d) ≡ e_i(a^(0))` for `i = 1..d`.
pub fn symmev_check(alg: &TgpAlgebra) -> Result<bool> {
    let d = alg.degree();
    let a0 = alg.params().row_sequence(alg.lambda(), 0);
    let all: Vec<usize> = (0..d).collect();
    for i in 1..=d {
        let f = &elementary_symmetric(&all, i, d) - &MPoly::constant(d, elementary_symmetric_eval(&a0, i));
        if !alg.normal_form(&f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `∏_j (t_i − a^(0)_j) ≡ 0` for every variable.
pub fn root_product_check(alg: &TgpAlgebra) -> Result<bool> {
    let d = alg.degree();
    let a0 = alg.params().row_sequence(alg.lambda(), 0);
    for i in 0..d {
        let mut prod = MPoly::one(d);
        for a in &a0 {
            prod = &prod * &(&MPoly::var(d, i) - &MPoly::constant(d, a.clone()));
        }
        if !alg.normal_form(&prod)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For every stratum `n` and subset `J`, dividing `∏_{j∈J}(x + t_j)` by
/// `∏_i (x + a^(n)_i)` as polynomials in `x` leaves a remainder whose
/// coefficients all vanish in the quotient.
pub fn truncation_check(alg: &TgpAlgebra) -> Result<bool> {
    let lambda = alg.lambda();
    let d = lambda.size();
    for n in 0..lambda.len() {
        let seq = alg.params().row_sequence(lambda, n);
        let m = seq.len();
        let k = d - n;
        // divisor coefficients, highest power first: e_s(a^(n)) for x^{m−s}
        let q: Vec<Rational> = (0..=m).map(|s| elementary_symmetric_eval(&seq, s)).collect();
        for subset in subsets(d, k) {
            // dividend coefficients, highest power first: e_r(t_J) for x^{k−r}
            let mut rem: Vec<MPoly> = (0..=k).map(|r| elementary_symmetric(&subset, r, d)).collect();
            for lead in 0..=(k - m) {
                let c = rem[lead].clone();
                if c.is_zero() {
                    continue;
                }
                for (s, qs) in q.iter().enumerate() {
                    rem[lead + s] = &rem[lead + s] - &c.scale(qs);
                }
            }
            for r in &rem[k - m + 1..] {
                if !alg.normal_form(r)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `1` spans a trivial `S_d`-submodule, the trivial character occurs exactly
/// once, and `L(λ^t)` occurs at least once.
pub fn head_socle_check(alg: &TgpAlgebra) -> Result<bool> {
    let d = alg.degree();
    let one = MPoly::one(d);
    for i in 1..d {
        let s = Permutation::simple(d, i)?;
        if alg.normal_form(&one.apply_permutation(&s)?)? != one {
            return Ok(false);
        }
    }
    let ch = alg.character()?;
    let trivial = Partition::from_unsorted(vec![d]);
    Ok(ch.multiplicity(&trivial) == 1 && ch.multiplicity(&alg.lambda().transpose()) >= 1)
}

/// With all parameters nonzero, every `t_i` is a unit with inverse
/// `−q(t_i)/p(0)`, where `p(x) = ∏_j (x − a^(0)_j) = x·q(x) + p(0)`; checked
/// as `t_i · q(t_i) + p(0) ≡ 0` in the quotient.
pub fn t_inverse_check(alg: &TgpAlgebra) -> Result<bool> {
    if !alg.params().all_nonzero() {
        return Err(Error::ZeroParameter);
    }
    let d = alg.degree();
    let a0 = alg.params().row_sequence(alg.lambda(), 0);
    // coefficients of p, lowest degree first
    let mut p = vec![Rational::one()];
    for a in &a0 {
        let mut next = vec![Rational::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * a;
        }
        p = next;
    }
    for i in 0..d {
        let t = MPoly::var(d, i);
        let mut q = MPoly::zero(d);
        let mut power = MPoly::one(d);
        for c in &p[1..] {
            q = &q + &power.scale(c);
            power = &power * &t;
        }
        let inverse = q.scale(&(-p[0].recip()));
        if !alg.normal_form(&(&(&t * &inverse) - &MPoly::one(d)))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pulls back `⟨C^{ba+c}⟩` along `t_k ↦ b t_k + c` and compares with
/// `⟨C^a⟩`; also checks invariance under swapping labels of columns of equal
/// height.
pub fn shift_scale_check(lambda: &Partition, a: &EvalParams, b: &Rational, c: &Rational) -> Result<bool> {
    if b.is_zero() {
        return Err(Error::ZeroScale);
    }
    let shifted = deformed_generators(lambda, &a.affine(b, c))?.polys();
    let pulled: Vec<MPoly> = shifted.iter().map(|f| f.shift_scale(b, c)).collect::<Result<_>>()?;
    let target = deformed_generators(lambda, a)?.polys();
    if !ideal_equal(&pulled, &target, MonomialOrder::DegRevLex)? {
        return Ok(false);
    }
    let heights = lambda.transpose();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if heights.part(i) == heights.part(j) && !swap_check(lambda, a, i, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether swapping the labels of columns `i` and `j` (0-based) leaves the
/// ideal unchanged.
pub fn swap_check(lambda: &Partition, a: &EvalParams, i: usize, j: usize) -> Result<bool> {
    a.check(lambda)?;
    for x in [i, j] {
        if x >= a.len() {
            return Err(Error::OutOfRange { index: x, bound: a.len() });
        }
    }
    let g1 = buchberger(&deformed_generators(lambda, a)?.polys(), MonomialOrder::DegRevLex)?;
    let g2 = buchberger(&deformed_generators(lambda, &a.swapped(i, j))?.polys(), MonomialOrder::DegRevLex)?;
    Ok(g1 == g2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitBlock {
    pub param: String,
    pub partition: Partition,
    pub dim: usize,
    pub character: CharacterVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub lambda: Partition,
    pub params: EvalParams,
    pub blocks: Vec<SplitBlock>,
    pub dim: usize,
    pub dim_product: u128,
    pub dim_match: bool,
    pub character: CharacterVector,
    pub induced_character: CharacterVector,
    pub character_match: bool,
}

/// Groups the columns of `λ` by parameter value, in order of first
/// appearance; each group's column heights form a partition.
pub fn split_blocks(lambda: &Partition, b: &EvalParams) -> Result<Vec<(Rational, Partition)>> {
    b.check(lambda)?;
    let heights = lambda.transpose();
    let mut groups: Vec<(Rational, Vec<usize>)> = Vec::new();
    for (col, val) in b.values().iter().enumerate() {
        match groups.iter_mut().find(|(v, _)| v == val) {
            Some((_, hs)) => hs.push(heights.part(col)),
            None => groups.push((val.clone(), vec![heights.part(col)])),
        }
    }
    Ok(groups.into_iter().map(|(v, hs)| (v, Partition::from_unsorted(hs).transpose())).collect())
}

/// Compares `R_b(λ)` with the induced product of the single-parameter
/// blocks, on characters and dimensions.
pub fn split_check(lambda: &Partition, b: &EvalParams) -> Result<SplitReport> {
    let alg = build_quotient(lambda, b)?;
    let character = alg.character()?;
    let mut blocks = Vec::new();
    let mut sizes = Vec::new();
    let mut dim_product: u128 = 1;
    let mut factors = Vec::new();
    for (val, part) in split_blocks(lambda, b)? {
        let sub = build_quotient(&part, &EvalParams::constant(part.part(0), val.clone()))?;
        let ch = sub.character()?;
        sizes.push(part.size());
        dim_product *= sub.dim() as u128;
        factors.push(ch.clone());
        blocks.push(SplitBlock { param: val.to_string(), partition: part, dim: sub.dim(), character: ch });
    }
    dim_product *= multinomial(&sizes);
    let induced_character = induced_product(&factors)?;
    Ok(SplitReport {
        lambda: lambda.clone(),
        params: b.clone(),
        blocks,
        dim: alg.dim(),
        dim_match: alg.dim() as u128 == dim_product,
        dim_product,
        character_match: character == induced_character,
        character,
        induced_character,
    })
}

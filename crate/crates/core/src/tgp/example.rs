//! The three-dimensional module `L_a(1,1) ⊠ L_b(1)` over the extended
//! affine symmetric group of degree 3, written in three bases, and its three
//! different limits as `b → a`.
//!
//! Module comparisons use exact invariants: the `S_3`-character, the
//! dimension of the generated matrix algebra, endomorphism dimensions, the
//! submodules generated by isotypic components, and explicit isomorphism
//! tests through the space of intertwiners.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{algebra_dimension, invariant_closure, Matrix};
use crate::partitions::{factorial, Partition};
use crate::polyring::{rat, Rational};
use crate::symgrp::{character_table, CharacterVector};

use super::{build_quotient, EvalParams, RepMatrices};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExampleBasis {
    /// `v_0, v_1, v_2`: the `t_i` act diagonally.
    Alpha,
    /// `w_0 = v_0 − v_1 − v_2`, `w_1 = w_0·t_1`, `w_2 = w_0·t_2`.
    Beta,
    /// `u_0 = v_0 + v_1`, `u_1 = u_0·(1,2)`, `u_2 = u_0·t_2`.
    Gamma,
}

fn m(rows: [[Rational; 3]; 3]) -> Matrix {
    Matrix::from_rows(rows.into_iter().map(Vec::from).collect()).expect("3x3")
}

/// Generator matrices of the module in the chosen basis. Setting `b = a`
/// gives the corresponding limit module.
pub fn example_module(basis: ExampleBasis, a: &Rational, b: &Rational) -> Result<RepMatrices> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let z = Rational::zero;
    let o = Rational::one;
    let n = |x: Rational| -x;
    let (a, b) = (a.clone(), b.clone());
    let a2 = &a * &a;
    let ab = &a * &b;
    let (s1, s2, t1, t2, t3) = match basis {
        ExampleBasis::Alpha => (
            m([[n(o()), z(), z()], [z(), z(), n(o())], [z(), n(o()), z()]]),
            m([[z(), o(), z()], [o(), z(), z()], [z(), z(), n(o())]]),
            m([[a.clone(), z(), z()], [z(), a.clone(), z()], [z(), z(), b.clone()]]),
            m([[a.clone(), z(), z()], [z(), b.clone(), z()], [z(), z(), a.clone()]]),
            m([[b.clone(), z(), z()], [z(), a.clone(), z()], [z(), z(), a.clone()]]),
        ),
        ExampleBasis::Beta => (
            m([[n(o()), z(), z()], [z(), z(), n(o())], [z(), n(o()), z()]]),
            m([[n(o()), z(), n(&a * rat(2) + &b)], [z(), n(o()), o()], [z(), z(), o()]]),
            m([[z(), n(ab.clone()), n(a2.clone())], [o(), &a + &b, a.clone()], [z(), z(), a.clone()]]),
            m([[z(), n(a2.clone()), n(ab.clone())], [z(), a.clone(), z()], [o(), a.clone(), &a + &b]]),
            m([[&a * rat(2) + &b, &a2 + &ab, &a2 + &ab], [n(o()), z(), n(a.clone())], [n(o()), n(a.clone()), z()]]),
        ),
        ExampleBasis::Gamma => (
            m([[z(), o(), b.clone()], [o(), z(), b.clone()], [z(), z(), n(o())]]),
            m([[o(), n(o()), &a + &b], [z(), n(o()), z()], [z(), z(), n(o())]]),
            m([[a.clone(), b.clone(), z()], [z(), b.clone(), z()], [z(), n(o()), a.clone()]]),
            m([[z(), z(), n(ab.clone())], [z(), a.clone(), z()], [o(), z(), &a + &b]]),
            m([[&a + &b, n(b.clone()), ab.clone()], [z(), a.clone(), z()], [n(o()), o(), z()]]),
        ),
    };
    Ok(RepMatrices { d: 3, sigma: vec![s1, s2], t: vec![t1, t2, t3], amended: true })
}

/// The change of basis from `α` to `β` or `γ`: its columns are the new basis
/// vectors in `α`-coordinates.
pub fn basis_change(basis: ExampleBasis, alpha: &RepMatrices) -> Matrix {
    let v = |x: [i64; 3]| x.iter().map(|&c| rat(c)).collect::<Vec<_>>();
    let cols = match basis {
        ExampleBasis::Alpha => return Matrix::identity(3),
        ExampleBasis::Beta => {
            let w0 = v([1, -1, -1]);
            vec![w0.clone(), alpha.t[0].mul_vec(&w0), alpha.t[1].mul_vec(&w0)]
        }
        ExampleBasis::Gamma => {
            let u0 = v([1, 1, 0]);
            vec![u0.clone(), alpha.sigma[0].mul_vec(&u0), alpha.t[1].mul_vec(&u0)]
        }
    };
    Matrix::from_columns(3, &cols).expect("3 columns of length 3")
}

/// `P^{-1} M P` for every generator.
pub fn conjugate(rep: &RepMatrices, p: &Matrix) -> Option<RepMatrices> {
    let inv = p.inverse()?;
    let conj = |x: &Matrix| &(&inv * x) * p;
    Some(RepMatrices {
        d: rep.d,
        sigma: rep.sigma.iter().map(conj).collect(),
        t: rep.t.iter().map(conj).collect(),
        amended: rep.amended,
    })
}

/// Dimension of the space of `X` with `X·A_g = B_g·X` for every generator.
pub fn hom_dimension(from: &RepMatrices, to: &RepMatrices) -> usize {
    intertwiners(from, to).len()
}

fn intertwiners(from: &RepMatrices, to: &RepMatrices) -> Vec<Matrix> {
    let (na, nb) = (from.dim(), to.dim());
    let unknowns = na * nb;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (ga, gb) in from.generators().iter().zip(to.generators().iter()) {
        // (X A − B X)_{ij} = Σ_k X_{ik} A_{kj} − Σ_k B_{ik} X_{kj}
        for i in 0..nb {
            for j in 0..na {
                let mut row = vec![Rational::zero(); unknowns];
                for k in 0..na {
                    row[i * na + k] += &ga[(k, j)];
                }
                for k in 0..nb {
                    row[k * na + j] -= &gb[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Vec::new();
    }
    let system = Matrix::from_rows(rows).expect("rectangular system");
    system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(na).map(<[Rational]>::to_vec).collect()).expect("square chunks"))
        .collect()
}

/// Whether an invertible intertwiner exists. The determinant of
/// `Σ_k c^k X_k` is a polynomial in `c` of degree at most `n(m−1)`, so
/// trying that many plus one values of `c` decides the question.
pub fn modules_isomorphic(x: &RepMatrices, y: &RepMatrices) -> bool {
    if x.d != y.d || x.dim() != y.dim() || x.generators().len() != y.generators().len() {
        return false;
    }
    let basis = intertwiners(x, y);
    if basis.is_empty() {
        return x.dim() == 0;
    }
    let n = x.dim();
    let tries = n * (basis.len() - 1) + 1;
    for c in 1..=tries as i64 {
        let mut comb = Matrix::zeros(n, n);
        let mut power = rat(1);
        for b in &basis {
            comb = &comb + &b.scale(&power);
            power *= rat(c);
        }
        if comb.determinant().map(|d| !d.is_zero()).unwrap_or(false) {
            return true;
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub relations_hold: bool,
    pub character: CharacterVector,
    /// Dimension of the algebra generated by all generator matrices; equal to
    /// `dim²` exactly for absolutely irreducible modules.
    pub algebra_dim: usize,
    pub end_dim: usize,
    /// For each irreducible of `S_d`, the dimension of the submodule
    /// generated by its isotypic component.
    #[serde(serialize_with = "partition_keys")]
    pub isotypic_submodules: BTreeMap<Partition, usize>,
    pub irreducible: bool,
    /// The isotypic submodules are proper and add up to the whole module.
    pub splits: bool,
}

fn partition_keys<S: serde::Serializer>(
    map: &BTreeMap<Partition, usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(map.iter().map(|(p, v)| (p.to_string(), v)))
}

pub fn fingerprint(rep: &RepMatrices) -> Result<Fingerprint> {
    let n = rep.dim();
    let d = rep.d;
    let character = rep.character()?;
    let gens = rep.generators();
    let group = rep.group_matrices()?;
    let table = character_table(d)?;
    let order = rat(factorial(d) as i64);
    let mut isotypic_submodules = BTreeMap::new();
    for mu in character.multiplicities().keys() {
        let mut e = Matrix::zeros(n, n);
        for (g, mat) in &group {
            let chi = table.value(mu, &g.cycle_type())?;
            if chi != 0 {
                e = &e + &mat.scale(&rat(chi));
            }
        }
        e = e.scale(&(rat(table.dimension(mu)? as i64) / &order));
        let seeds: Vec<Vec<Rational>> = (0..n).map(|j| e.column(j)).collect();
        isotypic_submodules.insert(mu.clone(), invariant_closure(&gens, &seeds).dim());
    }
    let algebra_dim = algebra_dimension(&gens);
    let total: usize = isotypic_submodules.values().sum();
    Ok(Fingerprint {
        dim: n,
        relations_hold: rep.verify_relations(),
        character,
        algebra_dim,
        end_dim: hom_dimension(rep, rep),
        irreducible: algebra_dim == n * n,
        splits: isotypic_submodules.len() > 1 && total == n && isotypic_submodules.values().all(|&k| k < n),
        isotypic_submodules,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub a: String,
    pub b: String,
    /// Relations for the module at `(a, b)` in each basis.
    pub relations: BTreeMap<String, bool>,
    /// The `β`/`γ` matrices equal the `α` matrices conjugated by the stated
    /// change of basis; empty when `a = b`.
    pub basis_change: BTreeMap<String, bool>,
    pub module: Fingerprint,
    /// Only meaningful for `a ≠ b`: isomorphic to the amended quotient with
    /// column labels `(a, b)`.
    pub module_matches_quotient: Option<bool>,
    pub m0: Fingerprint,
    pub m1: Fingerprint,
    pub m2: Fingerprint,
    pub quotient: Fingerprint,
    pub m0_splits: bool,
    pub m1_cyclic_w0: bool,
    pub m1_matches_quotient: bool,
    pub m2_socle_is_sign: bool,
    pub m2_dual_of_m1_inverted: bool,
    pub limits_pairwise_non_isomorphic: bool,
    pub passed: bool,
}

/// Builds all the modules, compares them, and records the outcome.
pub fn example_report(a: &Rational, b: &Rational) -> Result<ExampleReport> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let bases = [("alpha", ExampleBasis::Alpha), ("beta", ExampleBasis::Beta), ("gamma", ExampleBasis::Gamma)];
    let alpha = example_module(ExampleBasis::Alpha, a, b)?;
    let mut relations = BTreeMap::new();
    let mut basis_change_ok = BTreeMap::new();
    for (name, basis) in bases {
        let rep = example_module(basis, a, b)?;
        relations.insert(name.to_string(), rep.verify_relations());
        // the change of basis degenerates at a = b, which is where the limits differ
        if basis != ExampleBasis::Alpha && a != b {
            let p = basis_change(basis, &alpha);
            let ok = conjugate(&alpha, &p).is_some_and(|c| c == rep);
            basis_change_ok.insert(name.to_string(), ok);
        }
    }
    let module = fingerprint(&alpha)?;

    let lambda: Partition = Partition::new(vec![2, 1])?;
    let module_matches_quotient = if a != b {
        let q = build_quotient(&lambda, &EvalParams::new(vec![a.clone(), b.clone()]))?.rep_matrices(true)?;
        Some(modules_isomorphic(&alpha, &q))
    } else {
        None
    };

    let m0r = example_module(ExampleBasis::Alpha, a, a)?;
    let m1r = example_module(ExampleBasis::Beta, a, a)?;
    let m2r = example_module(ExampleBasis::Gamma, a, a)?;
    let qr = build_quotient(&lambda, &EvalParams::constant(2, a.clone()))?.rep_matrices(true)?;
    let m0 = fingerprint(&m0r)?;
    let m1 = fingerprint(&m1r)?;
    let m2 = fingerprint(&m2r)?;
    let quotient = fingerprint(&qr)?;

    let sign = Partition::new(vec![1, 1, 1])?;
    let hook = Partition::new(vec![2, 1])?;
    let m1_cyclic_w0 = invariant_closure(&m1r.generators(), &[vec![rat(1), rat(0), rat(0)]]).dim() == 3;
    let m2_socle_is_sign =
        m2.isotypic_submodules.get(&sign) == Some(&1) && m2.isotypic_submodules.get(&hook) == Some(&3);
    let inv_a = a.recip();
    let m1_inverted = example_module(ExampleBasis::Beta, &inv_a, &inv_a)?;
    let m2_dual_of_m1_inverted = modules_isomorphic(&m2r, &m1_inverted.dual()?);
    let m1_matches_quotient = modules_isomorphic(&m1r, &qr) && m1 == quotient;
    let limits_pairwise_non_isomorphic =
        !modules_isomorphic(&m0r, &m1r) && !modules_isomorphic(&m0r, &m2r) && !modules_isomorphic(&m1r, &m2r);

    let relations_ok = relations.values().all(|&x| x) && m0.relations_hold && m1.relations_hold && m2.relations_hold;
    let passed = relations_ok
        && basis_change_ok.values().all(|&x| x)
        && module_matches_quotient.unwrap_or(true)
        && (a == b || module.irreducible)
        && m0.splits
        && !m1.splits
        && !m2.splits
        && m1_cyclic_w0
        && m1_matches_quotient
        && m2_socle_is_sign
        && m2_dual_of_m1_inverted
        && limits_pairwise_non_isomorphic;
    Ok(ExampleReport {
        a: a.to_string(),
        b: b.to_string(),
        relations,
        basis_change: basis_change_ok,
        module,
        module_matches_quotient,
        m0_splits: m0.splits,
        m0,
        m1,
        m2,
        quotient,
        m1_cyclic_w0,
        m1_matches_quotient,
        m2_socle_is_sign,
        m2_dual_of_m1_inverted,
        limits_pairwise_non_isomorphic,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat_frac;

    #[test]
    fn alpha_relations_and_perturbation() {
        let rep = example_module(ExampleBasis::Alpha, &rat(1), &rat(2)).unwrap();
        assert!(rep.verify_relations());
        let mut bad = rep.clone();
        bad.t[0][(0, 1)] = rat(1);
        assert!(!bad.verify_relations());
    }

    #[test]
    fn stated_bases_reproduce_the_matrices() {
        for (a, b) in [(rat(1), rat(2)), (rat_frac(-2, 3), rat(5))] {
            let alpha = example_module(ExampleBasis::Alpha, &a, &b).unwrap();
            for basis in [ExampleBasis::Beta, ExampleBasis::Gamma] {
                let p = basis_change(basis, &alpha);
                assert_eq!(conjugate(&alpha, &p).unwrap(), example_module(basis, &a, &b).unwrap(), "{basis:?}");
            }
        }
    }

    #[test]
    fn generic_module_is_irreducible() {
        let rep = example_module(ExampleBasis::Alpha, &rat(1), &rat(2)).unwrap();
        let f = fingerprint(&rep).unwrap();
        assert!(f.irreducible);
        assert_eq!(f.end_dim, 1);
    }

    #[test]
    fn full_report_passes() {
        for (a, b) in [(rat(1), rat(2)), (rat(1), rat(1)), (rat(2), rat(2)), (rat_frac(3, 2), rat(-1))] {
            let r = example_report(&a, &b).unwrap();
            assert!(r.passed, "{a} {b}: {r:#?}");
        }
        assert!(example_report(&rat(0), &rat(1)).is_err());
    }
}

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, multiplication_matrix, quotient_basis, GroebnerBasis, QuotientBasis};
use crate::linalg::Matrix;
use crate::partitions::Partition;
use crate::polyring::{rat, MPoly, MonomialOrder, Rational};
use crate::symgrp::{character_table, class_representative, decompose, CharacterVector, ClassFunction, Permutation};

use super::{deformed_generators, EvalParams};

/// A quotient `R_a(λ)` with its reduced basis and standard monomials.
#[derive(Clone, Debug)]
pub struct TgpAlgebra {
    lambda: Partition,
    params: EvalParams,
    gb: GroebnerBasis,
    basis: QuotientBasis,
    graded: bool,
    character: OnceLock<CharacterVector>,
}

/// Builds `R_a(λ)` from the full deformed generating set in degrevlex.
pub fn build_quotient(lambda: &Partition, a: &EvalParams) -> Result<TgpAlgebra> {
    let set = deformed_generators(lambda, a)?;
    build_quotient_from(lambda, a, &set.polys())
}

/// Builds the quotient by an explicitly given generating set.
pub fn build_quotient_from(lambda: &Partition, a: &EvalParams, gens: &[MPoly]) -> Result<TgpAlgebra> {
    a.check(lambda)?;
    let gb = if gens.is_empty() {
        buchberger(&[MPoly::zero(lambda.size())], MonomialOrder::DegRevLex)?
    } else {
        buchberger(gens, MonomialOrder::DegRevLex)?
    };
    let basis = quotient_basis(&gb)?;
    Ok(TgpAlgebra {
        lambda: lambda.clone(),
        params: a.clone(),
        gb,
        basis,
        graded: a.is_zero(),
        character: OnceLock::new(),
    })
}

impl TgpAlgebra {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn params(&self) -> &EvalParams {
        &self.params
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self) -> &QuotientBasis {
        &self.basis
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn degree(&self) -> usize {
        self.lambda.size()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn normal_form(&self, f: &MPoly) -> Result<MPoly> {
        self.gb.normal_form(f)
    }

    /// Trace of `x ↦ x·σ` restricted to the basis monomials selected by
    /// `keep`.
    fn trace<F: Fn(usize) -> bool>(&self, sigma: &Permutation, keep: F) -> Result<Rational> {
        let d = self.degree();
        let mut tr = Rational::zero();
        for (i, b) in self.basis.monomials().iter().enumerate() {
            if !keep(i) {
                continue;
            }
            let image = MPoly::from_term(b.permuted(sigma), Rational::one());
            debug_assert_eq!(image.nvars(), d);
            tr += self.gb.normal_form(&image)?.coefficient(b);
        }
        Ok(tr)
    }

    fn class_function<F: Fn(usize) -> bool + Sync>(&self, keep: F) -> Result<ClassFunction> {
        let d = self.degree();
        let table = character_table(d)?;
        let values: Vec<(Partition, Rational)> = table
            .partitions()
            .par_iter()
            .map(|rho| Ok((rho.clone(), self.trace(&class_representative(rho), &keep)?)))
            .collect::<Result<_>>()?;
        ClassFunction::new(d, values.into_iter().collect())
    }

    /// The `S_d`-character of the whole quotient, from class traces.
    pub fn character(&self) -> Result<CharacterVector> {
        if let Some(ch) = self.character.get() {
            return Ok(ch.clone());
        }
        let ch = decompose(&self.class_function(|_| true)?)?;
        Ok(self.character.get_or_init(|| ch).clone())
    }

    /// Characters of the homogeneous pieces; only for `a = 0`.
    pub fn graded_character(&self) -> Result<BTreeMap<usize, CharacterVector>> {
        if !self.graded {
            return Err(Error::NotGraded);
        }
        let degrees: Vec<usize> = self.basis.monomials().iter().map(|m| m.degree() as usize).collect();
        let top = degrees.iter().copied().max().unwrap_or(0);
        let mut out = BTreeMap::new();
        for deg in 0..=top {
            let ch = decompose(&self.class_function(|i| degrees[i] == deg)?)?;
            if !ch.is_empty() {
                out.insert(deg, ch);
            }
        }
        Ok(out)
    }

    /// Matrix of `x ↦ x·σ` on the quotient (column `j` is the image of the
    /// `j`-th standard monomial).
    pub fn permutation_matrix(&self, sigma: &Permutation) -> Result<Matrix> {
        let columns: Vec<Vec<Rational>> = self
            .basis
            .monomials()
            .iter()
            .map(|b| {
                let image = MPoly::from_term(b.permuted(sigma), Rational::one());
                self.basis.coordinates(&self.gb.normal_form(&image)?)
            })
            .collect::<Result<_>>()?;
        Matrix::from_columns(self.dim(), &columns)
    }

    pub fn multiplication_matrix(&self, f: &MPoly) -> Result<Matrix> {
        multiplication_matrix(f, &self.gb, &self.basis)
    }

    /// Matrices of `σ_1,…,σ_{d−1}` and `t_1,…,t_d`. The amended module
    /// twists by the sign character and needs every `a_i ≠ 0`.
    pub fn rep_matrices(&self, amended: bool) -> Result<RepMatrices> {
        if amended && !self.params.all_nonzero() {
            return Err(Error::ZeroParameter);
        }
        let d = self.degree();
        let sign = if amended { rat(-1) } else { rat(1) };
        let sigma = (1..d)
            .map(|i| Ok(self.permutation_matrix(&Permutation::simple(d, i)?)?.scale(&sign)))
            .collect::<Result<Vec<_>>>()?;
        let t = (0..d).map(|i| self.multiplication_matrix(&MPoly::var(d, i))).collect::<Result<Vec<_>>>()?;
        Ok(RepMatrices { d, sigma, t, amended })
    }
}

/// Matrices of the generators of the extended affine symmetric group on a
/// module, in the column convention: for a right action, the matrix of `gh`
/// is `M(h)·M(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepMatrices {
    pub d: usize,
    pub sigma: Vec<Matrix>,
    pub t: Vec<Matrix>,
    pub amended: bool,
}

impl RepMatrices {
    pub fn dim(&self) -> usize {
        self.t.first().or(self.sigma.first()).map_or(0, Matrix::rows)
    }

    /// All generator matrices, `σ`'s first.
    pub fn generators(&self) -> Vec<Matrix> {
        self.sigma.iter().chain(&self.t).cloned().collect()
    }

    /// Checks `σ_i² = 1`, the braid and far-commutation relations, commuting
    /// `t`'s, `t_j σ_i = σ_i t_j` for `j ∉ {i, i+1}` and `σ_i t_i σ_i = t_{i+1}`.
    pub fn verify_relations(&self) -> bool {
        let n = self.dim();
        let id = Matrix::identity(n);
        let s = &self.sigma;
        let t = &self.t;
        if s.len() + 1 != self.d.max(1) || t.len() != self.d {
            return false;
        }
        if self.generators().iter().any(|m| m.rows() != n || m.cols() != n) {
            return false;
        }
        for i in 0..s.len() {
            if &s[i] * &s[i] != id {
                return false;
            }
            for j in i + 1..s.len() {
                let ok = if j == i + 1 {
                    &(&s[i] * &s[j]) * &s[i] == &(&s[j] * &s[i]) * &s[j]
                } else {
                    &s[i] * &s[j] == &s[j] * &s[i]
                };
                if !ok {
                    return false;
                }
            }
            // σ_i (0-based i) swaps points i and i+1
            for (j, tj) in t.iter().enumerate() {
                if j != i && j != i + 1 && &s[i] * tj != tj * &s[i] {
                    return false;
                }
            }
            if &(&s[i] * &t[i]) * &s[i] != t[i + 1] {
                return false;
            }
        }
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                if &t[i] * &t[j] != &t[j] * &t[i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn t_invertible(&self) -> bool {
        self.t.iter().all(|m| m.inverse().is_some())
    }

    /// Matrices of every element of `S_d`, keyed by permutation.
    pub fn group_matrices(&self) -> Result<HashMap<Permutation, Matrix>> {
        let d = self.d;
        let mut out = HashMap::new();
        out.insert(Permutation::identity(d), Matrix::identity(self.dim()));
        let mut queue = VecDeque::from([Permutation::identity(d)]);
        while let Some(g) = queue.pop_front() {
            for i in 1..d {
                let h = g.compose(&Permutation::simple(d, i)?)?;
                if out.contains_key(&h) {
                    continue;
                }
                let m = &self.sigma[i - 1] * &out[&g];
                out.insert(h.clone(), m);
                queue.push_back(h);
            }
        }
        Ok(out)
    }

    /// The `S_d`-character of the module, from the `σ` matrices alone.
    pub fn character(&self) -> Result<CharacterVector> {
        let group = self.group_matrices()?;
        let table = character_table(self.d)?;
        let values =
            table.partitions().iter().map(|rho| (rho.clone(), group[&class_representative(rho)].trace())).collect();
        decompose(&ClassFunction::new(self.d, values)?)
    }

    /// The contragredient module: `σ ↦ σ^T`, `t ↦ (t^{-1})^T`.
    pub fn dual(&self) -> Result<RepMatrices> {
        let t = self
            .t
            .iter()
            .map(|m| m.inverse().map(|inv| inv.transpose()).ok_or(Error::ZeroParameter))
            .collect::<Result<_>>()?;
        Ok(RepMatrices {
            d: self.d,
            sigma: self.sigma.iter().map(Matrix::transpose).collect(),
            t,
            amended: self.amended,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::modified_kostka;
    use crate::tgp::permutation_module_character;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn params(s: &str) -> EvalParams {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(build_quotient(&p("2,1"), &params("1,2")).unwrap().dim(), 3);
        assert_eq!(build_quotient(&p("3"), &params("0,0,0")).unwrap().dim(), 6);
        assert_eq!(build_quotient(&p("1,1,1"), &params("0")).unwrap().dim(), 1);
        assert_eq!(build_quotient(&p("2,2"), &params("1,1")).unwrap().dim(), 6);
        assert_eq!(build_quotient(&p("3,1"), &params("5,5,7")).unwrap().dim(), 12);
    }

    #[test]
    fn characters() {
        let expect = permutation_module_character(&p("2,1")).unwrap();
        for a in ["1,2", "1,1", "0,0", "-1/2,3"] {
            let alg = build_quotient(&p("2,1"), &params(a)).unwrap();
            assert_eq!(alg.character().unwrap(), expect);
        }
    }

    #[test]
    fn graded_character_of_four() {
        let alg = build_quotient(&p("4"), &EvalParams::zeros(4)).unwrap();
        let g = alg.graded_character().unwrap();
        assert_eq!(g[&1], CharacterVector::irreducible(&p("3,1")));
        assert_eq!(g[&6], CharacterVector::irreducible(&p("1,1,1,1")));
        let conj = p("1,1,1,1");
        for (deg, ch) in &g {
            for mu in Partition::all(4) {
                let k = modified_kostka(&mu, &conj).unwrap();
                assert_eq!(ch.multiplicity(&mu), k.coefficient(*deg), "{mu} in degree {deg}");
            }
        }
        let deformed = build_quotient(&p("4"), &params("1,2,3,4")).unwrap();
        assert_eq!(deformed.graded_character(), Err(Error::NotGraded));
    }

    #[test]
    fn rep_matrices_satisfy_relations() {
        let alg = build_quotient(&p("2,1"), &params("1,2")).unwrap();
        for amended in [false, true] {
            let reps = alg.rep_matrices(amended).unwrap();
            assert!(reps.verify_relations());
            assert!(reps.t_invertible());
        }
        let alg = build_quotient(&p("1,1"), &params("1")).unwrap();
        let reps = alg.rep_matrices(true).unwrap();
        assert_eq!(reps.t, vec![Matrix::identity(1), Matrix::identity(1)]);
        let zero = build_quotient(&p("2,1"), &params("0,1")).unwrap();
        assert_eq!(zero.rep_matrices(true), Err(Error::ZeroParameter));
        assert!(zero.rep_matrices(false).unwrap().verify_relations());
    }

    #[test]
    fn rep_character_matches_trace_character() {
        let alg = build_quotient(&p("3,1"), &params("2,-1,1/3")).unwrap();
        let reps = alg.rep_matrices(false).unwrap();
        assert_eq!(reps.character().unwrap(), alg.character().unwrap());
    }
}

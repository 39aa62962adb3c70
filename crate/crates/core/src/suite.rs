//! Batch verification over all partitions up to a given size.
//!
//! Every check is a pure function of `(λ, a)`, so the work is spread over
//! the rayon pool and the results are put back in a fixed order afterwards.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polyring::{rat, rat_frac, Rational};
use crate::schurweyl::{schur_weyl_image, weyl_gmodule_decomposition};
use crate::symgrp::{sign_twist, CharacterVector};
use crate::tgp::{
    build_quotient, d_lambda, example_report, head_socle_check, parameter_battery, permutation_module_character,
    point_variety_oracle, predicted_graded_character, reduce_lemma_check, root_product_check, shift_scale_check,
    split_battery, split_check, symmev_check, t_inverse_check, truncation_check, EvalParams,
};

/// Largest `d` the suite accepts.
pub const MAX_SUITE_DEGREE: usize = 7;

/// The `(b, c)` pairs used for the affine-change check.
pub fn shift_pairs() -> Vec<(Rational, Rational)> {
    vec![(rat(2), rat(0)), (rat(1), rat(1)), (rat_frac(-1, 2), rat(3))]
}

/// Which optional checks [`algebra_report`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckSelection {
    pub shift_scale: bool,
    pub dualweyl: bool,
}

impl Default for CheckSelection {
    fn default() -> Self {
        CheckSelection { shift_scale: true, dualweyl: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub lambda: Partition,
    pub params: EvalParams,
    pub dim: usize,
    pub d_lambda: u128,
    pub character: CharacterVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graded_character: Option<BTreeMap<usize, CharacterVector>>,
    pub checks: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub errors: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.checks.values().all(|&ok| ok)
    }
}

fn record(checks: &mut BTreeMap<String, bool>, errors: &mut BTreeMap<String, String>, name: &str, r: Result<bool>) {
    match r {
        Ok(ok) => {
            checks.insert(name.to_string(), ok);
        }
        Err(e) => {
            checks.insert(name.to_string(), false);
            errors.insert(name.to_string(), e.to_string());
        }
    }
}

/// Builds `R_a(λ)` once and runs every applicable check on it.
///
/// Checks that need a precondition (distinct or nonzero parameters, the
/// graded case) are skipped when it does not hold.
pub fn algebra_report(
    lambda: &Partition,
    a: &EvalParams,
    seed: Option<u64>,
    select: CheckSelection,
) -> Result<AlgebraReport> {
    let alg = build_quotient(lambda, a)?;
    let d = lambda.size();
    let dl = d_lambda(lambda);
    let character = alg.character()?;
    let mut checks = BTreeMap::new();
    let mut errors = BTreeMap::new();

    checks.insert("groebner".into(), alg.groebner_basis().verify());
    checks.insert("flat".into(), alg.dim() as u128 == dl);
    record(&mut checks, &mut errors, "character", permutation_module_character(lambda).map(|ch| ch == character));
    let graded_character = if alg.is_graded() {
        let g = alg.graded_character()?;
        record(&mut checks, &mut errors, "graded", predicted_graded_character(lambda).map(|p| p == g));
        Some(g)
    } else {
        None
    };
    record(&mut checks, &mut errors, "reduce", reduce_lemma_check(lambda, a));
    record(&mut checks, &mut errors, "symmev", symmev_check(&alg));
    record(&mut checks, &mut errors, "root_product", root_product_check(&alg));
    record(&mut checks, &mut errors, "truncation", truncation_check(&alg));
    record(&mut checks, &mut errors, "head_socle", head_socle_check(&alg));
    if a.all_nonzero() {
        record(&mut checks, &mut errors, "t_inverse", t_inverse_check(&alg));
    }
    if a.all_distinct() {
        record(
            &mut checks,
            &mut errors,
            "point_variety",
            point_variety_oracle(lambda, a).map(|n| n as u128 == dl && n == alg.dim()),
        );
    }
    if select.shift_scale {
        let r = shift_pairs().iter().try_fold(true, |acc, (b, c)| Ok(acc && shift_scale_check(lambda, a, b, c)?));
        record(&mut checks, &mut errors, "shift_scale", r);
    }
    if select.dualweyl {
        let r = schur_weyl_image(&sign_twist(&character), d)
            .and_then(|img| Ok(img == weyl_gmodule_decomposition(lambda, d)?));
        record(&mut checks, &mut errors, "dualweyl", r);
    }
    Ok(AlgebraReport {
        lambda: lambda.clone(),
        params: a.clone(),
        dim: alg.dim(),
        d_lambda: dl,
        character,
        graded_character,
        checks,
        errors,
        seed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckFailure {
    pub check: String,
    pub lambda: Option<Partition>,
    pub params: Option<EvalParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub max_d: usize,
    pub trials: usize,
    pub seed: u64,
    pub partitions: usize,
    pub algebras: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub by_check: BTreeMap<String, Tally>,
    pub failures: Vec<CheckFailure>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

enum Task {
    Algebra(Partition, EvalParams),
    Split(Partition, EvalParams),
    Example,
}

/// Outcome of one task: `(check name, passed, error)` triples.
type Outcome = (Option<Partition>, Option<EvalParams>, Vec<(String, bool, Option<String>)>);

fn run_task(task: &Task, seed: u64) -> Outcome {
    match task {
        Task::Algebra(lambda, a) => {
            let rows = match algebra_report(lambda, a, Some(seed), CheckSelection::default()) {
                Ok(rep) => {
                    rep.checks.iter().map(|(name, &ok)| (name.clone(), ok, rep.errors.get(name).cloned())).collect()
                }
                Err(e) => vec![("build".to_string(), false, Some(e.to_string()))],
            };
            (Some(lambda.clone()), Some(a.clone()), rows)
        }
        Task::Split(lambda, b) => {
            let row = match split_check(lambda, b) {
                Ok(rep) => ("split".to_string(), rep.dim_match && rep.character_match, None),
                Err(e) => ("split".to_string(), false, Some(e.to_string())),
            };
            (Some(lambda.clone()), Some(b.clone()), vec![row])
        }
        Task::Example => {
            let mut rows = Vec::new();
            for (a, b) in [(rat(1), rat(2)), (rat(1), rat(1)), (rat(2), rat(2)), (rat_frac(3, 2), rat(-1))] {
                let name = format!("example[{a},{b}]");
                rows.push(match example_report(&a, &b) {
                    Ok(rep) => (name, rep.passed, None),
                    Err(e) => (name, false, Some(e.to_string())),
                });
            }
            (None, None, rows)
        }
    }
}

/// Runs every check for all `λ ⊢ d`, `1 ≤ d ≤ max_d`, with `trials` seeded
/// random parameter vectors per partition on top of the fixed patterns, and
/// three multi-block vectors per partition for the splitting check.
pub fn run_suite(max_d: usize, trials: usize, seed: u64) -> Result<SuiteReport> {
    if max_d > MAX_SUITE_DEGREE {
        return Err(Error::Invalid(format!("max_d must be at most {MAX_SUITE_DEGREE}")));
    }
    let partitions: Vec<Partition> = (1..=max_d).flat_map(Partition::all).collect();
    let mut tasks = Vec::new();
    for lambda in &partitions {
        for entry in parameter_battery(lambda, trials, seed) {
            tasks.push(Task::Algebra(lambda.clone(), entry.params));
        }
        for b in split_battery(lambda, 3, seed) {
            tasks.push(Task::Split(lambda.clone(), b));
        }
    }
    let algebras = tasks.iter().filter(|t| matches!(t, Task::Algebra(..))).count();
    if max_d >= 3 {
        tasks.push(Task::Example);
    }
    let outcomes: Vec<Outcome> = tasks.par_iter().map(|t| run_task(t, seed)).collect();

    let mut by_check: BTreeMap<String, Tally> = BTreeMap::new();
    let mut failures = Vec::new();
    for (lambda, params, rows) in outcomes {
        for (name, ok, error) in rows {
            let key = if name.starts_with("example[") { "example".to_string() } else { name.clone() };
            let tally = by_check.entry(key).or_default();
            if ok {
                tally.passed += 1;
            } else {
                tally.failed += 1;
                failures.push(CheckFailure { check: name, lambda: lambda.clone(), params: params.clone(), error });
            }
        }
    }
    let passed = by_check.values().map(|t| t.passed).sum();
    let failed = by_check.values().map(|t| t.failed).sum();
    Ok(SuiteReport {
        max_d,
        trials,
        seed,
        partitions: partitions.len(),
        algebras,
        total: passed + failed,
        passed,
        failed,
        by_check,
        failures,
    })
}

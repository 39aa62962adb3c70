//! Acceptance run: one PASS/FAIL line per criterion, each with a fixed time
//! bound. Exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use tgp_core::groebner::{buchberger, ideal_equal, GroebnerBasis};
use tgp_core::partitions::{kostka_number, modified_kostka, Word};
use tgp_core::polyring::{elementary_symmetric, rat, rat_frac};
use tgp_core::schurweyl::{dualweyl_check, weyl_gmodule_decomposition};
use tgp_core::symgrp::character_table;
use tgp_core::tgp::{
    annihilation_check, build_quotient, d_lambda, deformed_generators, example_report, parameter_battery,
    permutation_module_character, point_variety_oracle, reduced_generators, root_product_check, shift_scale_check,
    split_battery, split_check, swap_check, symmev_check, EvalParams, TgpAlgebra,
};
use tgp_core::{MPoly, Monomial, MonomialOrder, Partition, Permutation, QPoly};

const SEED: u64 = 20240607;
const TRIALS: usize = 2;

static BASES_BUILT: AtomicUsize = AtomicUsize::new(0);
static BASES_FAILED: AtomicUsize = AtomicUsize::new(0);

type Check = std::result::Result<String, String>;
type Criterion = (usize, &'static str, Duration, fn() -> Check);

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn note_basis(gb: &GroebnerBasis) {
    BASES_BUILT.fetch_add(1, Ordering::Relaxed);
    if !gb.verify() {
        BASES_FAILED.fetch_add(1, Ordering::Relaxed);
    }
}

fn quotient(lambda: &Partition, a: &EvalParams) -> std::result::Result<TgpAlgebra, String> {
    let alg = build_quotient(lambda, a).map_err(err)?;
    note_basis(alg.groebner_basis());
    Ok(alg)
}

fn partitions_up_to(max_d: usize) -> Vec<Partition> {
    (1..=max_d).flat_map(Partition::all).collect()
}

/// Every `(λ, a)` pair of the flatness battery.
fn test_algebras() -> Vec<(Partition, EvalParams, String)> {
    partitions_up_to(5)
        .into_iter()
        .flat_map(|lam| {
            parameter_battery(&lam, TRIALS, SEED).into_iter().map(move |e| (lam.clone(), e.params, e.pattern))
        })
        .collect()
}

fn par_all<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> std::result::Result<(), String> + Sync + Send,
) -> std::result::Result<(), String> {
    items.par_iter().map(f).collect::<std::result::Result<Vec<()>, String>>().map(|_| ())
}

fn c1_kostka() -> Check {
    let mu = p("1,1,1,1");
    let golden = [
        ("1,1,1,1", vec![0, 0, 0, 0, 0, 0, 1]),
        ("4", vec![1]),
        ("2,2", vec![0, 0, 1, 0, 1]),
        ("3,1", vec![0, 1, 1, 1]),
        ("2,1,1", vec![0, 0, 0, 1, 1, 1]),
    ];
    for (shape, coeffs) in golden {
        let k = modified_kostka(&p(shape), &mu).map_err(err)?;
        ensure(k == QPoly::from_coeffs(coeffs), || format!("K~ for {shape} is {k}"))?;
    }
    let w = Word::new(vec![4, 2, 2, 3, 1, 1, 1, 2, 3]).map_err(err)?;
    let c = w.cocharge().map_err(err)?;
    ensure(c == 6, || format!("cocharge(422311123) = {c}"))?;
    Ok("5 polynomials, 1 cocharge".into())
}

fn c2_coinvariants() -> Check {
    let mut dims = Vec::new();
    for d in 2..=6usize {
        let alg = quotient(&Partition::new(vec![d]).map_err(err)?, &EvalParams::zeros(d))?;
        let fact: usize = (1..=d).product();
        ensure(alg.dim() == fact, || format!("dim R(({d})) = {} != {fact}", alg.dim()))?;
        dims.push(alg.dim().to_string());
    }
    Ok(format!("dims {}", dims.join(",")))
}

fn c3_graded() -> Check {
    let lambdas = partitions_up_to(5);
    par_all(&lambdas, |lam| {
        let alg = quotient(lam, &EvalParams::zeros(lam.part(0)))?;
        let g = alg.graded_character().map_err(err)?;
        let conj = lam.transpose();
        let mut expected: BTreeMap<usize, BTreeMap<Partition, u64>> = BTreeMap::new();
        for mu in Partition::all(lam.size()) {
            for (i, &c) in modified_kostka(&mu, &conj).map_err(err)?.coeffs().iter().enumerate() {
                if c > 0 {
                    expected.entry(i).or_default().insert(mu.clone(), c);
                }
            }
        }
        let got: BTreeMap<usize, BTreeMap<Partition, u64>> =
            g.iter().map(|(i, v)| (*i, v.multiplicities().clone())).collect();
        ensure(got == expected, || format!("graded character of {lam}"))
    })?;
    // displayed gch R(4)
    let alg = quotient(&p("4"), &EvalParams::zeros(4))?;
    let g = alg.graded_character().map_err(err)?;
    let shown: &[(usize, &str)] = &[
        (0, "4"),
        (1, "3,1"),
        (2, "3,1"),
        (3, "3,1"),
        (2, "2,2"),
        (4, "2,2"),
        (3, "2,1,1"),
        (4, "2,1,1"),
        (5, "2,1,1"),
        (6, "1,1,1,1"),
    ];
    let mut want: BTreeMap<usize, BTreeMap<Partition, u64>> = BTreeMap::new();
    for &(i, mu) in shown {
        want.entry(i).or_default().insert(p(mu), 1);
    }
    let got: BTreeMap<usize, BTreeMap<Partition, u64>> =
        g.iter().map(|(i, v)| (*i, v.multiplicities().clone())).collect();
    ensure(got == want, || "gch R(4) differs from the displayed formula".into())?;
    Ok(format!("{} partitions", lambdas.len()))
}

fn c4_flatness() -> Check {
    let algebras = test_algebras();
    let per_lambda = algebras.iter().filter(|(l, ..)| *l == p("2,1")).count();
    ensure(per_lambda >= 5, || format!("only {per_lambda} vectors per partition"))?;
    let distinct = AtomicUsize::new(0);
    par_all(&algebras, |(lam, a, pattern)| {
        let alg = quotient(lam, a)?;
        let dl = d_lambda(lam);
        ensure(alg.dim() as u128 == dl, || format!("{lam} a={a} ({pattern}): dim {} != {dl}", alg.dim()))?;
        let ch = alg.character().map_err(err)?;
        // independent character: K_{μ,λ^t} counted from tableaux
        let conj = lam.transpose();
        let mut want = BTreeMap::new();
        for mu in Partition::all(lam.size()) {
            let k = kostka_number(&mu, &conj).map_err(err)?;
            if k > 0 {
                want.insert(mu, k);
            }
        }
        ensure(ch.multiplicities() == &want, || format!("{lam} a={a}: character {ch}"))?;
        if a.all_distinct() {
            distinct.fetch_add(1, Ordering::Relaxed);
            let n = point_variety_oracle(lam, a).map_err(err)?;
            ensure(n as u128 == dl, || format!("{lam} a={a}: {n} points"))?;
            ensure(annihilation_check(lam, a).map_err(err)?, || format!("{lam} a={a}: annihilation"))?;
        }
        Ok(())
    })?;
    Ok(format!("{} algebras, {} with distinct labels", algebras.len(), distinct.into_inner()))
}

fn c5_reduce() -> Check {
    let algebras = test_algebras();
    par_all(&algebras, |(lam, a, _)| {
        let full = deformed_generators(lam, a).map_err(err)?.polys();
        let reduced = reduced_generators(lam, a).map_err(err)?.polys();
        let g1 = buchberger(&full, MonomialOrder::DegRevLex).map_err(err)?;
        let g2 = buchberger(&reduced, MonomialOrder::DegRevLex).map_err(err)?;
        note_basis(&g1);
        note_basis(&g2);
        ensure(g1 == g2, || format!("{lam} a={a}: reduced bases differ"))?;
        ensure(ideal_equal(&full, &reduced, MonomialOrder::DegRevLex).map_err(err)?, || {
            format!("{lam} a={a}: ideal_equal false")
        })
    })?;
    Ok(format!("{} algebras", algebras.len()))
}

fn c6_four_generators() -> Check {
    let lam = p("2,1");
    let a = EvalParams::constant(2, rat(1));
    let gens: Vec<MPoly> = ["t1 + t2 + t3 - 3", "t1*t2 - t1 - t2 + 1", "t2*t3 - t2 - t3 + 1", "t1*t3 - t1 - t3 + 1"]
        .iter()
        .map(|s| MPoly::parse(s, 3))
        .collect::<tgp_core::Result<_>>()
        .map_err(err)?;
    let deformed = deformed_generators(&lam, &a).map_err(err)?.polys();
    let g1 = buchberger(&deformed, MonomialOrder::DegRevLex).map_err(err)?;
    let g2 = buchberger(&gens, MonomialOrder::DegRevLex).map_err(err)?;
    note_basis(&g1);
    note_basis(&g2);
    ensure(g1 == g2, || "ideals differ".into())?;
    let alg = quotient(&lam, &a)?;
    ensure(alg.dim() == 3, || format!("dim {}", alg.dim()))?;
    Ok("ideals equal, dim 3".into())
}

fn c7_symmev() -> Check {
    let algebras = test_algebras();
    par_all(&algebras, |(lam, a, _)| {
        let alg = build_quotient(lam, a).map_err(err)?;
        ensure(symmev_check(&alg).map_err(err)?, || format!("{lam} a={a}: e_i"))?;
        ensure(root_product_check(&alg).map_err(err)?, || format!("{lam} a={a}: root product"))?;
        // independent restatement of the e_i part
        let d = lam.size();
        let a0 = a.row_sequence(lam, 0);
        let all: Vec<usize> = (0..d).collect();
        let a0_poly: Vec<MPoly> = a0.iter().map(|x| MPoly::constant(d, x.clone())).collect();
        for i in 1..=d {
            let value = elementary_symmetric(&(0..a0.len()).collect::<Vec<_>>(), i, a0.len().max(1));
            let value = if a0.is_empty() { MPoly::zero(d) } else { value.substitute(&a0_poly).map_err(err)? };
            let f = &elementary_symmetric(&all, i, d) - &value;
            ensure(alg.normal_form(&f).map_err(err)?.is_zero(), || format!("{lam} a={a}: e_{i}"))?;
        }
        Ok(())
    })?;
    Ok(format!("{} algebras", algebras.len()))
}

fn c8_shift_swap() -> Check {
    let algebras = test_algebras();
    let pairs = [(rat(2), rat(0)), (rat(1), rat(1)), (rat_frac(-1, 2), rat(3))];
    let swaps = AtomicUsize::new(0);
    par_all(&algebras, |(lam, a, _)| {
        for (b, c) in &pairs {
            ensure(shift_scale_check(lam, a, b, c).map_err(err)?, || format!("{lam} a={a} b={b} c={c}"))?;
        }
        let heights = lam.transpose();
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if heights.part(i) == heights.part(j) {
                    swaps.fetch_add(1, Ordering::Relaxed);
                    ensure(swap_check(lam, a, i, j).map_err(err)?, || format!("{lam} a={a}: swap {i},{j}"))?;
                }
            }
        }
        Ok(())
    })?;
    Ok(format!("{} algebras x 3 pairs, {} swaps", algebras.len(), swaps.into_inner()))
}

fn c9_split() -> Check {
    let lambdas = partitions_up_to(5);
    let checked = AtomicUsize::new(0);
    par_all(&lambdas, |lam| {
        let battery = split_battery(lam, 3, SEED);
        if lam.part(0) >= 2 {
            ensure(battery.len() >= 3, || format!("{lam}: only {} vectors", battery.len()))?;
            ensure(
                battery.iter().all(|b| {
                    let mut v = b.values().to_vec();
                    v.sort();
                    v.dedup();
                    v.len() >= 2
                }),
                || format!("{lam}: single-block vector"),
            )?;
        }
        for b in &battery {
            let rep = split_check(lam, b).map_err(err)?;
            ensure(rep.dim_match && rep.character_match, || format!("{lam} b={b}: split fails"))?;
            checked.fetch_add(1, Ordering::Relaxed);
        }
        Ok(())
    })?;
    Ok(format!("{} vectors (single-column shapes have one block only)", checked.into_inner()))
}

fn c10_dualweyl() -> Check {
    let algebras = test_algebras();
    par_all(&algebras, |(lam, a, _)| {
        ensure(dualweyl_check(lam, a, lam.size()).map_err(err)?, || format!("{lam} a={a}"))
    })?;
    for lam in partitions_up_to(5) {
        let d = lam.size();
        let w = weyl_gmodule_decomposition(&lam, d).map_err(err)?;
        for mu in Partition::all(d) {
            let k = kostka_number(&mu.transpose(), &lam.transpose()).map_err(err)?;
            ensure(w.multiplicity(&mu) == k, || format!("[W({lam}):V({mu})]"))?;
        }
        // the sign-twisted permutation character, mapped across
        let ch = permutation_module_character(&lam).map_err(err)?;
        let twisted: BTreeMap<Partition, u64> =
            ch.multiplicities().iter().map(|(mu, m)| (mu.transpose(), *m)).collect();
        ensure(&twisted == w.multiplicities(), || format!("{lam}: sign twist vs Pieri"))?;
    }
    Ok(format!("{} algebras", algebras.len()))
}

fn c11_example() -> Check {
    for (a, b) in [(rat(1), rat(2)), (rat_frac(3, 2), rat(-1))] {
        let r = example_report(&a, &b).map_err(err)?;
        ensure(r.relations.values().all(|&x| x), || format!("relations at {a},{b}"))?;
        ensure(r.module.irreducible, || format!("M not irreducible at {a},{b}"))?;
        ensure(r.module_matches_quotient == Some(true), || format!("M vs quotient at {a},{b}"))?;
        ensure(r.passed, || format!("report at {a},{b}"))?;
    }
    for a in [rat(1), rat(2)] {
        let r = example_report(&a, &a).map_err(err)?;
        ensure(r.m0.splits, || "M0 does not split".into())?;
        ensure(!r.m1.splits && !r.m2.splits, || "M1/M2 split".into())?;
        ensure(r.m1_matches_quotient && r.m1 == r.quotient, || "M1 vs amended quotient".into())?;
        ensure(r.m2_socle_is_sign && r.m2_dual_of_m1_inverted, || "M2 pattern".into())?;
        ensure(r.limits_pairwise_non_isomorphic, || "limits not distinguished".into())?;
        ensure(r.passed, || format!("report at {a},{a}"))?;
    }
    Ok("relations, limits and fingerprints".into())
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> MPoly {
    let terms = rng.gen_range(0..=4);
    MPoly::from_terms(
        nvars,
        (0..terms).map(|_| {
            let exps: Vec<u16> = (0..nvars).map(|_| rng.gen_range(0..=2)).collect();
            (Monomial::new(&exps), rat_frac(rng.gen_range(-5..=5), rng.gen_range(1..=4)))
        }),
    )
}

fn c12_properties() -> Check {
    for d in 1..=8 {
        let table = character_table(d).map_err(err)?;
        let order = table.group_order() as i128;
        let parts = table.partitions();
        for (i, x) in parts.iter().enumerate() {
            for (j, y) in parts.iter().enumerate() {
                let rx = table.row(x).map_err(err)?;
                let ry = table.row(y).map_err(err)?;
                let s: i128 =
                    (0..parts.len()).map(|c| table.class_sizes()[c] as i128 * rx[c] as i128 * ry[c] as i128).sum();
                ensure(s == if i == j { order } else { 0 }, || format!("orthogonality d={d} {x} {y}"))?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let cases = 1000;
    for case in 0..cases {
        let n = rng.gen_range(1..=4);
        let (f, g, h) = (random_poly(&mut rng, n), random_poly(&mut rng, n), random_poly(&mut rng, n));
        ensure(&(&f + &g) + &h == &f + &(&g + &h), || format!("case {case}: + assoc"))?;
        ensure(&f * &g == &g * &f, || format!("case {case}: * comm"))?;
        ensure(&(&f * &g) * &h == &f * &(&g * &h), || format!("case {case}: * assoc"))?;
        ensure(&f * &(&g + &h) == &(&f * &g) + &(&f * &h), || format!("case {case}: distrib"))?;
        ensure((&f + &(-&f)).is_zero() && &f * &MPoly::one(n) == f, || format!("case {case}: units"))?;
        let images: Vec<usize> = {
            let mut v: Vec<usize> = (1..=n).collect();
            for i in (1..n).rev() {
                v.swap(i, rng.gen_range(0..=i));
            }
            v
        };
        let s = Permutation::from_images(images).map_err(err)?;
        let t = Permutation::all(n)[rng.gen_range(0..Permutation::all(n).len())].clone();
        let lhs = f.apply_permutation(&s).and_then(|x| x.apply_permutation(&t)).map_err(err)?;
        let rhs = f.apply_permutation(&s.compose(&t).map_err(err)?).map_err(err)?;
        ensure(lhs == rhs, || format!("case {case}: right action"))?;
        let fg = (&f * &g).apply_permutation(&s).map_err(err)?;
        ensure(fg == &f.apply_permutation(&s).map_err(err)? * &g.apply_permutation(&s).map_err(err)?, || {
            format!("case {case}: action is multiplicative")
        })?;
    }
    let built = BASES_BUILT.load(Ordering::Relaxed);
    let failed = BASES_FAILED.load(Ordering::Relaxed);
    ensure(built > 0 && failed == 0, || format!("{failed} of {built} bases failed S-pair verification"))?;
    Ok(format!("orthogonality d<=8, {cases} ring/action cases, {built} bases verified"))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "kostka golden set", Duration::from_secs(1), c1_kostka),
        (2, "coinvariant dimensions d=2..6", Duration::from_secs(60), c2_coinvariants),
        (3, "graded characters d<=5", Duration::from_secs(300), c3_graded),
        (4, "flatness and characters d<=5", Duration::from_secs(600), c4_flatness),
        (5, "full vs reduced generators", Duration::from_secs(600), c5_reduce),
        (6, "four-generator ideal for (2,1)", Duration::from_secs(1), c6_four_generators),
        (7, "symmetric functions evaluate to constants", Duration::from_secs(600), c7_symmev),
        (8, "affine changes and column swaps", Duration::from_secs(600), c8_shift_swap),
        (9, "splitting by parameter blocks", Duration::from_secs(600), c9_split),
        (10, "Schur-Weyl image vs Pieri oracle", Duration::from_secs(600), c10_dualweyl),
        (11, "three-dimensional example and its limits", Duration::from_secs(1), c11_example),
        (12, "property suites", Duration::from_secs(600), c12_properties),
    ];
    let mut failures = 0;
    for (id, name, bound, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > bound => Err(format!("{msg}; took {elapsed:.2?} > {bound:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS [{id:>2}] {name} ({elapsed:.2?}): {msg}"),
            Err(msg) => {
                failures += 1;
                println!("FAIL [{id:>2}] {name} ({elapsed:.2?}): {msg}");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

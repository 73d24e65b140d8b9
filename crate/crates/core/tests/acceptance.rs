//! The ten acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{count_shifted_tableaux, pfaffian_by_matchings};
use itertools::Itertools;
use num_traits::Zero;
use qschur::linalg::determinant;
use qschur::pfaffian::{pfaffian, Rationals};
use qschur::qsym::{char_map, power_sum, shifted_tableaux_count_u64};
use qschur::rational::{format_rational, rat, ratio, Rational};
use qschur::spectra::{eigen_check, hc_eigenvalue_omega3, lemma_121_sweep, separation_check, uniqueness_sweep};
use qschur::verify::{run_suite, Suite, VerifyOptions};
use qschur::laplace::auxiliary_identity_residual;
use qschur::{OddCycleType, Operator, Polynomial, StrictPartition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn suite(s: Suite, ns: &[usize], max: u32) -> Result<usize, String> {
    let mut checked = 0;
    for &n in ns {
        let r = run_suite(s, n, max, VerifyOptions::default()).map_err(|e| e.to_string())?;
        if let Some(f) = r.failures.first() {
            return Err(format!("n={n} {}: {}", f.input, f.detail));
        }
        checked += r.checked;
    }
    Ok(checked)
}

fn eigenfunctions() -> Outcome {
    let mut count = 0;
    for n in [2, 3, 4] {
        for l in StrictPartition::all_up_to(8, n) {
            let r3 = eigen_check(&l, Operator::Omega(3), n).map_err(|e| e.to_string())?;
            if !r3.is_eigen || r3.eigenvalue != hc_eigenvalue_omega3(&l) {
                return Err(format!("omega3 on ({l}) at n={n}: eigenvalue {}", format_rational(&r3.eigenvalue)));
            }
            let r1 = eigen_check(&l, Operator::Omega(1), n).map_err(|e| e.to_string())?;
            if !r1.is_eigen || r1.eigenvalue != rat(l.weight().into()) {
                return Err(format!("omega1 on ({l}) at n={n}"));
            }
            let r5 = eigen_check(&l, Operator::Omega(5), n).map_err(|e| e.to_string())?;
            if !r5.is_eigen {
                return Err(format!("omega5 on ({l}) at n={n} leaves residual {}", r5.residual));
            }
            count += 1;
        }
    }
    Ok(format!("{count} (λ, n) pairs, Ω1/Ω3/Ω5 exact"))
}

fn skew() -> Outcome {
    suite(Suite::Skew, &[1, 2, 3, 4], 8).map(|c| format!("{c} (k, l) pairs over n = 1..4"))
}

fn conjugation() -> Outcome {
    suite(Suite::Lemma123i, &[2, 3], 5).map(|c| format!("{c} monomials and δ⁻¹ checks"))
}

fn tilde_relations() -> Outcome {
    let mut checked = 0;
    for n in [2, 3] {
        let r = lemma_121_sweep(n, 6).map_err(|e| e.to_string())?;
        if let Some(f) = r.first_failure {
            return Err(format!("n={n} m_{:?}: {}", f.input, f.relation));
        }
        checked += r.checked;
    }
    Ok(format!("{checked} symmetric monomials, four relations each"))
}

fn auxiliary() -> Outcome {
    let mut checked = 0;
    for n in [2, 3, 4] {
        for i in 0..n {
            let r = auxiliary_identity_residual(i, n).map_err(|e| e.to_string())?;
            if !r.is_zero() {
                return Err(format!("n={n} i={}: residual {r}", i + 1));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, i) cases"))
}

fn uniqueness() -> Outcome {
    let mut degrees = 0;
    for n in 1..=3 {
        let r = uniqueness_sweep(n, 8);
        if let Some(d) = r.degrees.iter().find(|d| !d.ok) {
            return Err(format!("n={n} degree {}: {}", d.degree, d.detail.clone().unwrap_or_default()));
        }
        degrees += r.degrees.len();
    }
    // every strict partition of weight <= 8 has at most three parts
    let all = StrictPartition::all_up_to(8, 8);
    let mut pairs = 0;
    for [a, b] in all.iter().array_combinations() {
        separation_check(a, b, 3, 17).map_err(|e| format!("({a}) vs ({b}): {e}"))?;
        pairs += 1;
    }
    Ok(format!("{degrees} (n, degree) spaces split, {pairs} pairs separated"))
}

fn supersymmetry_and_stability() -> Outcome {
    let a = suite(Suite::Supersym, &[1, 2, 3, 4], 8)?;
    let b = suite(Suite::Stability, &[1, 2, 3, 4], 8)?;
    Ok(format!("{a} supersymmetry and {b} stability checks"))
}

fn characteristic_map() -> Outcome {
    let types: Vec<OddCycleType> = (1..=9).flat_map(OddCycleType::all_of_weight).collect();
    let mut checked = 0;
    for n in 1..=4 {
        for nu in &types {
            let product = nu.parts().iter().fold(Polynomial::one(n), |acc, &k| &acc * &power_sum(k, n).unwrap());
            let expected = product.scale(&rat(1 << nu.len()));
            if char_map(nu, n) != expected {
                return Err(format!("char_map({nu}) at n={n}"));
            }
            checked += 1;
        }
        for [a, b] in types.iter().array_combinations() {
            if a.weight() + b.weight() > 9 {
                continue;
            }
            if char_map(&a.union(b), n) != &char_map(a, n) * &char_map(b, n) {
                return Err(format!("multiplicativity ({a}) ∪ ({b}) at n={n}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} values and products"))
}

fn tableaux() -> Outcome {
    let all = StrictPartition::all_up_to(8, 8);
    for l in &all {
        let formula = shifted_tableaux_count_u64(l).ok_or("overflow")?;
        let enumerated = count_shifted_tableaux(l.parts());
        if formula != enumerated {
            return Err(format!("({l}): formula {formula}, enumeration {enumerated}"));
        }
    }
    let g = |s: &str| count_shifted_tableaux(s.parse::<StrictPartition>().unwrap().parts());
    if (g("2,1"), g("3,2,1")) != (1, 2) {
        return Err("g_(2,1) or g_(3,2,1) wrong".into());
    }
    Ok(format!("{} shapes", all.len()))
}

fn pfaffians() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..200 {
        let size = 2 * rng.gen_range(1..=4);
        let mut a = vec![vec![Rational::zero(); size]; size];
        for i in 0..size {
            for j in i + 1..size {
                let v = ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9));
                a[j][i] = -v.clone();
                a[i][j] = v;
            }
        }
        let pf = pfaffian(&Rationals, &a).map_err(|e| e.to_string())?;
        if &pf * &pf != determinant(&a) {
            return Err(format!("trial {trial}, size {size}: Pf² ≠ det"));
        }
        if size <= 6 && pf != pfaffian_by_matchings(&a) {
            return Err(format!("trial {trial}, size {size}: expansion disagrees with matchings"));
        }
    }
    Ok("200 seeded matrices, sizes 2 to 8".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("eigenfunctions of Ω3, Ω1, Ω5 on Q_λ, |λ| ≤ 8, n ∈ {2,3,4}", eigenfunctions),
        ("skew-symmetry Q_{k,l} = -Q_{l,k}, k,l ≤ 8, n ≤ 4", skew),
        ("conjugation by δ, deg ≤ 5, n ∈ {2,3}", conjugation),
        ("Ω~ / Ω relations, deg ≤ 6, n ∈ {2,3}", tilde_relations),
        ("auxiliary identity, n ∈ {2,3,4}", auxiliary),
        ("joint eigenspaces one-dimensional, n ≤ 3, d ≤ 8; separation", uniqueness),
        ("supersymmetry and stability, |λ| ≤ 8, n ≤ 4", supersymmetry_and_stability),
        ("characteristic map, |ν| ≤ 9, n ≤ 4", characteristic_map),
        ("shifted tableaux formula vs enumeration, |λ| ≤ 8", tableaux),
        ("Pf(A)² = det(A), 200 random skew matrices", pfaffians),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance criteria. Run with `cargo test -p diskmod-cli --test acceptance`;
//! prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::f64::consts::{PI, TAU};
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use diskmod::{
    check_max_lemma, check_min_theorem, find_max_on_disk, find_min_on_disk, log_derivative,
    schwarz_quantity, AnalyticFunction, ExampleFamily, PowerSeries, Reciprocal, DEFAULT_TOL,
};
use diskmod_cli::sweep::{run_sweep, DUALITY_TOL};
use diskmod::extremum::SearchOptions;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn within(label: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    let d = (got - want).abs();
    if d <= tol {
        Ok(())
    } else {
        Err(format!("{label}: got {got:.17e}, want {want:.17e}, |diff| = {d:.3e} > {tol:.0e}"))
    }
}

/// a0 = 0.8, n = 2, r = 0.5.
fn criterion_1() -> Verdict {
    const MIN: f64 = 0.6; // 0.8 - 0.25/1.25
    const M: f64 = 8.0 / 15.0; // 0.5/(1.25·0.75)
    const SCHWARZ: f64 = 1.2; // 2·0.75/1.25
    const BOUND: f64 = 2.0 / 7.0; // 0.5/(1.6 + 0.15)

    let start = Instant::now();
    let f = ExampleFamily::new(Complex64::new(0.8, 0.0), 2).map_err(|e| e.to_string())?;
    let found = find_min_on_disk(&f, 0.5).map_err(|e| e.to_string())?;
    let rep = check_min_theorem(&f, 2, found.z0, DEFAULT_TOL).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    within("min |f|", found.value, MIN, 1e-9)?;
    within("m", rep.m, M, 1e-9)?;
    within("schwarz", rep.schwarz.unwrap_or(f64::NAN), SCHWARZ, 1e-9)?;
    within("bound_sq", rep.bound_sq, BOUND, 1e-9)?;
    let phase = (Complex64::from_polar(1.0, 2.0 * found.theta) + 1.0).norm();
    if phase > 1e-8 {
        return Err(format!("|e^(2iθ*) + 1| = {phase:e}"));
    }
    if !rep.passed() {
        return Err(format!("chain failed:\n{}", rep.to_text()));
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("runtime {elapsed:?} ≥ 1 s"));
    }
    Ok(format!(
        "min={:.12} m={:.12} schwarz={:.12} bound_sq={:.12} |e^(2iθ)+1|={phase:.1e} t={elapsed:?}",
        found.value,
        rep.m,
        rep.schwarz.unwrap(),
        rep.bound_sq
    ))
}

/// a0 = 0.9 e^{iπ/3}, n = 3, r = 0.7 (r^3 = 0.343).
fn criterion_2() -> Verdict {
    const MIN: f64 = 0.644_601_638_123_603_9; // 0.9 - 0.343/1.343
    const M: f64 = 0.885_058_433_209_181_2; // 3·0.343/(1.343·(0.9 - 0.1·0.343))
    const SCHWARZ: f64 = 1.467_609_828_741_623_3; // 3·0.657/1.343

    let f = ExampleFamily::from_polar(0.9, PI / 3.0, 3).map_err(|e| e.to_string())?;
    let found = find_min_on_disk(&f, 0.7).map_err(|e| e.to_string())?;
    let rep = check_min_theorem(&f, 3, found.z0, DEFAULT_TOL).map_err(|e| e.to_string())?;

    within("min |f|", found.value, MIN, 1e-9)?;
    within("m", rep.m, M, 1e-9)?;
    within("schwarz", rep.schwarz.unwrap_or(f64::NAN), SCHWARZ, 1e-9)?;
    if !rep.passed() {
        return Err(format!("chain failed:\n{}", rep.to_text()));
    }
    let margin = rep.m - rep.bound_sq;
    if margin.is_nan() || margin <= 0.0 {
        return Err(format!("bound_sq < m not strict: margin {margin:e}"));
    }
    Ok(format!(
        "min={:.12} m={:.12} schwarz={:.12} m-bound_sq={margin:.6}",
        found.value,
        rep.m,
        rep.schwarz.unwrap()
    ))
}

fn criterion_3() -> Verdict {
    let mut worst: f64 = 0.0;
    for (f, r) in [
        (ExampleFamily::new(Complex64::new(0.8, 0.0), 2), 0.5),
        (ExampleFamily::from_polar(0.9, PI / 3.0, 3), 0.7),
    ] {
        let f = f.map_err(|e| e.to_string())?;
        let disk = f.image_disk(r).map_err(|e| e.to_string())?;
        for k in 0..4096 {
            let w = f.value(Complex64::from_polar(r, TAU * k as f64 / 4096.0));
            worst = worst.max(((w - disk.center).norm() - disk.radius).abs());
        }
    }
    if worst < 1e-10 {
        Ok(format!("max | |f-c| - ρ | = {worst:.2e}"))
    } else {
        Err(format!("max | |f-c| - ρ | = {worst:e}"))
    }
}

fn criterion_4() -> Verdict {
    let start = Instant::now();
    let s = run_sweep(42, 1000, &SearchOptions::default(), DEFAULT_TOL);
    let elapsed = start.elapsed();
    if s.failed() != 0 {
        return Err(format!(
            "{} of 1000 trials failed\n{}",
            s.failed(),
            diskmod_cli::sweep::render_text(&s)
        ));
    }
    if s.worst_duality_gap.is_nan() || s.worst_duality_gap > DUALITY_TOL {
        return Err(format!("duality gap {:e}", s.worst_duality_gap));
    }
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("runtime {elapsed:?} ≥ 60 s"));
    }
    Ok(format!(
        "1000/1000 passed, worst duality gap {:.2e}, t={elapsed:?}",
        s.worst_duality_gap
    ))
}

fn criterion_5() -> Verdict {
    let mut count = 0;
    for k in 1..=8usize {
        let f = PowerSeries::new(Complex64::default(), k, vec![Complex64::new(1.0, 0.0)])
            .map_err(|e| e.to_string())?;
        for r in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let z0 = find_max_on_disk(&f, r).map_err(|e| e.to_string())?.z0;
            let rep = check_max_lemma(&f, k, z0, DEFAULT_TOL).map_err(|e| e.to_string())?;
            let kf = k as f64;
            within(&format!("k={k} r={r} m"), rep.m, kf, 1e-12)?;
            within(&format!("k={k} r={r} bound_sq"), rep.bound_sq, kf, 1e-12)?;
            within(&format!("k={k} r={r} bound_abs"), rep.bound_abs, kf, 1e-12)?;
            if !rep.passed() {
                return Err(format!("k={k} r={r}:\n{}", rep.to_text()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} (k, r) pairs: m = bound_sq = bound_abs = k"))
}

/// Random series with Σ|a_k| ≤ |a0|/2, so |f| ≥ |a0|/2 on the closed disk.
fn random_series(rng: &mut ChaCha8Rng) -> PowerSeries {
    let a0 = Complex64::from_polar(rng.gen_range(0.5..=2.0), rng.gen_range(0.0..TAU));
    let n = rng.gen_range(1..=6);
    let degree = rng.gen_range(n..=32);
    let raw: Vec<Complex64> = (n..=degree)
        .map(|_| Complex64::from_polar(rng.gen_range(0.0..1.0), rng.gen_range(0.0..TAU)))
        .collect();
    let total: f64 = raw.iter().map(|c| c.norm()).sum::<f64>().max(f64::MIN_POSITIVE);
    let budget = rng.gen_range(0.05..=0.5) * a0.norm();
    PowerSeries::new(a0, n, raw.into_iter().map(|c| c * (budget / total)).collect())
        .expect("n >= 1")
}

fn criterion_6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut worst_coeff, mut worst_identity): (f64, f64) = (0.0, 0.0);
    for i in 0..200 {
        let f = random_series(&mut rng);
        let g = f.invert(32).map_err(|e| e.to_string())?;
        let prod = f.mul_dense(&g, 32);
        worst_coeff = worst_coeff.max((prod[0] - 1.0).norm());
        for p in &prod[1..] {
            worst_coeff = worst_coeff.max(p.norm());
        }

        let r = rng.gen_range(0.1..=0.9);
        let z0 = find_min_on_disk(&f, r).map_err(|e| format!("series {i}: {e}"))?.z0;
        let m = -log_derivative(&f, z0).map_err(|e| e.to_string())?.re;
        let sf = schwarz_quantity(&f, z0).map_err(|e| e.to_string())?;
        let sg = schwarz_quantity(&Reciprocal(&f), z0).map_err(|e| e.to_string())?;
        // Re(z0 g''/g') + 1 = Re(z0 f''/f') + 2m + 1
        worst_identity = worst_identity.max((sg - (sf + 2.0 * m)).abs());
    }
    if worst_coeff >= 1e-12 {
        return Err(format!("max |[z^k](f·(1/f) - 1)| = {worst_coeff:e}"));
    }
    if worst_identity > 1e-9 {
        return Err(format!("max |schwarz(1/f) - schwarz(f) - 2m| = {worst_identity:e}"));
    }
    Ok(format!(
        "200 series: max coeff residual {worst_coeff:.2e}, max identity residual {worst_identity:.2e}"
    ))
}

fn criterion_7() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_diskmod");
    let once = || {
        Command::new(bin)
            .args(["sweep", "--trials", "100", "--seed", "7"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (once()?, once()?);
    if a.status.code() != Some(0) {
        return Err(format!("exit {:?}", a.status.code()));
    }
    if a.stdout != b.stdout || a.stdout.is_empty() {
        return Err("reports differ between runs".into());
    }
    Ok(format!("{} identical bytes across two runs", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("real example reproduction (a0=0.8, n=2, r=0.5)", criterion_1),
        ("complex example reproduction (a0=0.9e^{iπ/3}, n=3, r=0.7)", criterion_2),
        ("image circle of the example family", criterion_3),
        ("falsification sweep, 1000 trials", criterion_4),
        ("Jack reduction for z^k", criterion_5),
        ("series inversion and reciprocal identity", criterion_6),
        ("sweep determinism", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

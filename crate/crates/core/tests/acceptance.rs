//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured numbers (run with `--nocapture` to see them).
//!
//! Three checks encode expectations that exact analysis contradicts; they are
//! kept at their stated tolerances rather than weakened, so they fail loudly
//! with the measured values:
//!
//! - `criterion_05`: a coherent superposition's momentum distribution carries
//!   interference fringes, so at large alpha H(P) → ½ln(πe) − (1 − ln 2)
//!   ≈ 0.7655 (not ln√(πe) ≈ 1.0724) and B − N → 2ln2 − 1 ≈ 0.3863 (not
//!   ln 2 ≈ 0.6931). The fringe term's entropy deficit is exactly 1 − ln 2.
//! - `criterion_07`: the purity-corrected gap (B + ln μ) − N crosses zero
//!   near n̄ ≈ 3 and tends to a negative constant, so "positive" fails on
//!   {5, 10, 20} even though "decreasing" holds.
//! - `criterion_09`: measured against the fringe-corrected cat curve, none
//!   of the 2000 sampled states lands above it (best margin ≈ −0.28 nats);
//!   the flagged-state expectation traces back to the same fringe omission.

use std::f64::consts::{E, LN_2, PI, SQRT_2};
use std::process::Command;

use negentropy_ur::explorer::{sample_random_state, scatter};
use negentropy_ur::measures::{purity_photon_added_thermal, uncertainty_report, UncertaintyReport};
use negentropy_ur::special::{eur_bound, EULER_MASCHERONI};
use negentropy_ur::{IntegrationConfig, StateSpec};

fn cfg() -> IntegrationConfig {
    IntegrationConfig::default()
}

fn report(state: &StateSpec) -> UncertaintyReport {
    uncertainty_report(state, &cfg()).expect("report converges")
}

#[test]
fn criterion_01_gaussian_saturation() {
    let r = report(&StateSpec::fock(0));
    let sum = r.h_x + r.h_p;
    assert!(
        (sum - eur_bound()).abs() < 1e-6,
        "H(X)+H(P) = {sum}, want ln(pi e) = {}",
        eur_bound()
    );
    assert!(r.n_total.abs() < 1e-6, "N = {}", r.n_total);
    assert!(r.b_bound.abs() < 1e-6, "B = {}", r.b_bound);
    println!(
        "criterion 01 gaussian saturation: PASS (H sum {sum:.9}, N {:.2e}, B {:.2e})",
        r.n_total, r.b_bound
    );
}

#[test]
fn criterion_02_laplace_family() {
    let reports: Vec<UncertaintyReport> = [0.5, 1.0, 2.0, 4.0]
        .iter()
        .map(|&l| report(&StateSpec::laplace(l).unwrap()))
        .collect();
    for r in &reports {
        assert!(
            (r.b_bound - 0.5 * LN_2).abs() < 1e-9,
            "B = {}, want ln2/2 = {}",
            r.b_bound,
            0.5 * LN_2
        );
        assert!((r.n_total - 0.2671).abs() < 1e-3, "N = {}", r.n_total);
    }
    for pair in reports.windows(2) {
        assert!((pair[0].b_bound - pair[1].b_bound).abs() < 1e-6);
        assert!((pair[0].n_total - pair[1].n_total).abs() < 1e-6);
    }
    println!(
        "criterion 02 laplace family: PASS (B {:.9}, N {:.9}, lambda-invariant)",
        reports[0].b_bound, reports[0].n_total
    );
}

#[test]
fn criterion_03_single_photon() {
    let r = report(&StateSpec::fock(1));
    assert!((r.b_bound - 3f64.ln()).abs() < 1e-9, "B = {}", r.b_bound);
    assert!((r.n_total - 0.55791).abs() < 1e-3, "N = {}", r.n_total);
    let expected_h = (4.0 * PI / E).sqrt().ln() + EULER_MASCHERONI;
    assert!(
        (r.h_x - expected_h).abs() < 1e-6,
        "H(X) = {}, want {expected_h}",
        r.h_x
    );
    println!(
        "criterion 03 single photon: PASS (B {:.9}, N {:.9}, H(X) {:.9})",
        r.b_bound, r.n_total, r.h_x
    );
}

#[test]
fn criterion_04_squeezed_invariance() {
    let reference = report(&StateSpec::fock(1));
    let mut reports = Vec::new();
    for xi in [0.5, 1.0, 2.0] {
        let r = report(&StateSpec::photon_added_squeezed(xi).unwrap());
        assert!((r.j_x - reference.j_x).abs() < 1e-6, "xi {xi} j_x");
        assert!((r.j_p - reference.j_p).abs() < 1e-6, "xi {xi} j_p");
        assert!((r.n_total - reference.n_total).abs() < 1e-6, "xi {xi} N");
        assert!((r.b_bound - reference.b_bound).abs() < 1e-6, "xi {xi} B");
        assert!(
            (r.eur_residual - reference.eur_residual).abs() < 1e-6,
            "xi {xi} residual"
        );
        reports.push(r);
    }
    for pair in reports.windows(2) {
        assert!((pair[0].n_total - pair[1].n_total).abs() < 1e-6);
        assert!((pair[0].b_bound - pair[1].b_bound).abs() < 1e-6);
    }
    println!(
        "criterion 04 squeezed invariance: PASS (N {:.9}, B {:.9} across xi)",
        reports[0].n_total, reports[0].b_bound
    );
}

#[test]
fn criterion_05_cat_asymptotics() {
    let r = report(&StateSpec::cat(4.0, 0.0).unwrap());
    assert!(
        (r.sigma_p - 1.0 / SQRT_2).abs() < 0.01,
        "sigma_p = {}, want 1/sqrt2 = {}",
        r.sigma_p,
        1.0 / SQRT_2
    );
    let gap = r.b_bound - r.n_total;
    assert!(
        (gap - LN_2).abs() < 0.02,
        "B - N = {gap:.6} at alpha = 4, want within 0.02 of ln 2 = {LN_2:.6} \
         (fringe-corrected value is 2 ln 2 - 1 = {:.6})",
        2.0 * LN_2 - 1.0
    );
    let expected_hp = 0.5 * (PI * E).ln();
    assert!(
        (r.h_p - expected_hp).abs() < 0.01,
        "H(P) = {:.6} at alpha = 4, want within 0.01 of ln sqrt(pi e) = {expected_hp:.6} \
         (fringe-corrected value is {:.6})",
        r.h_p,
        expected_hp - (1.0 - LN_2)
    );
    println!(
        "criterion 05 cat asymptotics: PASS (B-N {gap:.6}, sigma_p {:.6}, H(P) {:.6})",
        r.sigma_p, r.h_p
    );
}

#[test]
fn criterion_06_photon_added_coherent() {
    let fock1 = report(&StateSpec::fock(1));
    let at_zero = report(&StateSpec::photon_added_coherent(0.0).unwrap());
    assert!((at_zero.n_total - fock1.n_total).abs() < 1e-6);
    assert!((at_zero.b_bound - fock1.b_bound).abs() < 1e-6);
    assert!((at_zero.h_x - fock1.h_x).abs() < 1e-6);
    assert!((at_zero.h_p - fock1.h_p).abs() < 1e-6);

    let mut previous: Option<(f64, f64)> = None;
    for i in 0..=10 {
        let alpha = 0.5 * i as f64;
        let r = report(&StateSpec::photon_added_coherent(alpha).unwrap());
        assert!(
            r.n_total < r.b_bound,
            "alpha {alpha}: N {} !< B {}",
            r.n_total,
            r.b_bound
        );
        if let Some((b, n)) = previous {
            assert!(r.b_bound < b, "B not strictly decreasing at alpha {alpha}");
            assert!(r.n_total < n, "N not strictly decreasing at alpha {alpha}");
        }
        previous = Some((r.b_bound, r.n_total));
    }
    println!(
        "criterion 06 photon-added coherent: PASS (limit matches |1>, N and B strictly decreasing)"
    );
}

#[test]
fn criterion_07_photon_added_thermal() {
    for n_bar in [0.0, 1.0, 2.0, 5.0] {
        let r = report(&StateSpec::photon_added_thermal(n_bar).unwrap());
        let var = r.sigma_x * r.sigma_x;
        assert!(
            (var - (2.0 * n_bar + 1.5)).abs() < 1e-6,
            "nbar {n_bar}: sigma_x^2 = {var}"
        );
    }
    let mu1 = purity_photon_added_thermal(1.0).unwrap();
    assert!((mu1 - 5.0 / 27.0).abs() < 1e-12, "mu(1) = {mu1}");

    let mut gaps = Vec::new();
    for n_bar in [1.0, 2.0, 5.0, 10.0, 20.0] {
        let r = report(&StateSpec::photon_added_thermal(n_bar).unwrap());
        gaps.push((n_bar, r.b_corrected.unwrap() - r.n_total));
    }
    for pair in gaps.windows(2) {
        assert!(
            pair[1].1 < pair[0].1,
            "corrected gap not decreasing: {pair:?}"
        );
    }
    for &(n_bar, gap) in &gaps {
        assert!(
            gap > 0.0,
            "corrected gap (B + ln mu) - N = {gap:.6} at nbar = {n_bar}: the corrected \
             bound drops below N (gap crosses zero near nbar ~ 3 and decreases toward \
             a negative constant)"
        );
    }
    println!("criterion 07 photon-added thermal: PASS (variances, purity, corrected gap {gaps:?})");
}

#[test]
fn criterion_08_identity_audit() {
    let mut fleet: Vec<StateSpec> = vec![
        StateSpec::fock(0),
        StateSpec::fock(1),
        StateSpec::cat(4.0, 0.0).unwrap(),
    ];
    for lambda in [0.5, 1.0, 2.0, 4.0] {
        fleet.push(StateSpec::laplace(lambda).unwrap());
    }
    for xi in [0.5, 1.0, 2.0] {
        fleet.push(StateSpec::photon_added_squeezed(xi).unwrap());
    }
    for i in 0..=10 {
        fleet.push(StateSpec::photon_added_coherent(0.5 * i as f64).unwrap());
    }
    for n_bar in [0.0, 1.0, 2.0, 5.0, 10.0, 20.0] {
        fleet.push(StateSpec::photon_added_thermal(n_bar).unwrap());
    }
    for index in 0..200 {
        fleet.push(sample_random_state(42, index, 11).unwrap());
    }
    let config = cfg();
    for (i, state) in fleet.iter().enumerate() {
        let r = uncertainty_report(state, &config).unwrap();
        let tol = 10.0 * r.entropy_error_estimate;
        let defect = (r.b_bound - r.n_total - r.eur_residual).abs();
        assert!(
            defect <= tol,
            "state {i} ({:?}): |B - N - residual| = {defect:e} > {tol:e}",
            state.kind()
        );
    }
    println!(
        "criterion 08 identity audit: PASS ({} states, B - N = residual within 10x error)",
        fleet.len()
    );
}

#[test]
fn criterion_09_physicality_sweep() {
    let rows = scatter(42, 2000, 11, &cfg()).unwrap();
    assert_eq!(rows.len(), 2000);
    let mut flagged_low_b = 0usize;
    let mut best_margin = f64::NEG_INFINITY;
    for row in &rows {
        let v = row
            .outcome
            .as_ref()
            .unwrap_or_else(|e| panic!("row {} failed: {e}", row.index));
        assert!(v.n_total >= -1e-4, "row {}: N = {}", row.index, v.n_total);
        assert!(
            v.n_total <= v.b_bound + 1e-4,
            "row {}: N = {} > B = {}",
            row.index,
            v.n_total,
            v.b_bound
        );
        if v.above_cat_reference && v.b_bound < 1.5 {
            flagged_low_b += 1;
        }
        if v.b_bound < 1.5 {
            best_margin = best_margin.max(v.n_total);
        }
    }
    assert!(
        flagged_low_b >= 1,
        "no sampled state lies above the cat reference curve with B < 1.5 \
         (2000 states, seed 42, dim 11); the sampled cloud sits well below the \
         fringe-corrected cat curve"
    );
    println!("criterion 09 physicality sweep: PASS ({flagged_low_b} flagged states below B = 1.5)");
}

#[test]
fn criterion_10_momentum_route_cross_check() {
    let config = cfg();
    let mut checked = 0;
    for i in 0..20u64 {
        let dim = 2 + (i as usize % 10); // cycles 2..=11
        let state = sample_random_state(99, i, dim).unwrap();
        let production = state.momentum_density();
        let fourier = state.momentum_density_via_fourier(&config).unwrap();
        let center = production.center();
        let half = 3.0 * production.scale();
        for k in 0..50 {
            let p = center - half + 2.0 * half * k as f64 / 49.0;
            let a = production.evaluate(p);
            let b = fourier.evaluate(p);
            assert!(
                (a - b).abs() < 1e-6,
                "state {i} (dim {dim}) at p = {p}: phase rule {a} vs fourier {b}"
            );
        }
        checked += 1;
    }
    println!("criterion 10 momentum routes: PASS ({checked} superpositions, 50 points each)");
}

#[test]
fn criterion_11_csv_determinism() {
    let bin = env!("CARGO_BIN_EXE_negentropy-ur");
    let dir = std::env::temp_dir().join(format!("nur-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut outputs = Vec::new();
    for (label, threads) in [("a", "1"), ("b", "4"), ("c", "0")] {
        let out = dir.join(format!("scatter-{label}.csv"));
        let status = Command::new(bin)
            .args([
                "random",
                "--count",
                "200",
                "--seed",
                "7",
                "--dim",
                "11",
                "--out",
                out.to_str().unwrap(),
            ])
            .env("NEGENTROPY_UR_THREADS", threads)
            .status()
            .unwrap();
        assert!(status.success());
        outputs.push(std::fs::read(&out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1], "threads=1 vs threads=4 differ");
    assert_eq!(outputs[0], outputs[2], "threads=1 vs auto differ");
    assert!(!outputs[0].is_empty());
    std::fs::remove_dir_all(&dir).ok();
    println!("criterion 11 csv determinism: PASS (byte-identical across thread counts)");
}

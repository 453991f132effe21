//! Cross-module invariants: orthonormality of the eigenfunction basis, the
//! maximum-entropy property, physicality of the refined bound, and agreement
//! between the production momentum route and the numerical Fourier transform.

use negentropy_ur::explorer::sample_random_state;
use negentropy_ur::measures::uncertainty_report;
use negentropy_ur::quadrature::composite_grid;
use negentropy_ur::special::EigenfunctionTable;
use negentropy_ur::{IntegrationConfig, StateSpec};

fn cfg() -> IntegrationConfig {
    IntegrationConfig::default()
}

/// Every state family at representative parameters, plus seeded random
/// superpositions.
fn family_fleet() -> Vec<StateSpec> {
    vec![
        StateSpec::fock(0),
        StateSpec::fock(1),
        StateSpec::fock(4),
        StateSpec::laplace(0.7).unwrap(),
        StateSpec::laplace(2.0).unwrap(),
        StateSpec::photon_added_coherent(0.8).unwrap(),
        StateSpec::photon_added_coherent(3.0).unwrap(),
        StateSpec::photon_added_squeezed(0.5).unwrap(),
        StateSpec::photon_added_squeezed(2.0).unwrap(),
        StateSpec::cat(1.0, 0.0).unwrap(),
        StateSpec::cat(2.5, 0.0).unwrap(),
        StateSpec::cat(1.5, 2.0).unwrap(),
        StateSpec::photon_added_thermal(0.5).unwrap(),
        StateSpec::photon_added_thermal(5.0).unwrap(),
    ]
}

#[test]
fn eigenfunctions_are_orthonormal() {
    let (nodes, weights) = composite_grid(-40.0, 40.0, 8000);
    let table = EigenfunctionTable::new(30, nodes);
    for m in 0..=30 {
        for n in m..=30 {
            let overlap: f64 = table
                .row(m)
                .iter()
                .zip(table.row(n))
                .zip(&weights)
                .map(|((&a, &b), &w)| w * a * b)
                .sum();
            if m == n {
                assert!((overlap - 1.0).abs() < 1e-10, "norm of psi_{n} = {overlap}");
            } else {
                assert!(overlap.abs() < 1e-8, "<psi_{m}|psi_{n}> = {overlap}");
            }
        }
    }
}

#[test]
fn entropy_never_exceeds_gaussian_reference() {
    let config = cfg();
    let mut fleet = family_fleet();
    for i in 0..20 {
        fleet.push(sample_random_state(17, i, 2 + (i as usize % 10)).unwrap());
    }
    for state in &fleet {
        let r = uncertainty_report(state, &config).unwrap();
        let slack = 1e-7f64.max(10.0 * r.entropy_error_estimate);
        assert!(
            r.j_x >= -slack,
            "{:?}: J(X) = {} below -{slack:e}",
            state.kind(),
            r.j_x
        );
        assert!(
            r.j_p >= -slack,
            "{:?}: J(P) = {} below -{slack:e}",
            state.kind(),
            r.j_p
        );
    }
}

#[test]
fn entropic_residual_and_refined_bound_hold() {
    let config = cfg();
    let mut fleet = family_fleet();
    for i in 0..200 {
        fleet.push(sample_random_state(42, i, 11).unwrap());
    }
    for state in &fleet {
        let r = uncertainty_report(state, &config).unwrap();
        let tol = 10.0 * r.entropy_error_estimate;
        assert!(
            r.eur_residual >= -tol,
            "{:?}: residual {} < -{tol:e}",
            state.kind(),
            r.eur_residual
        );
        // sigma_x sigma_p >= e^N / 2, i.e. B >= N.
        assert!(
            r.sigma_x * r.sigma_p >= 0.5 * r.n_total.exp() - tol,
            "{:?}: refined bound violated",
            state.kind()
        );
    }
}

#[test]
fn momentum_routes_agree_for_every_pure_family() {
    let default = cfg();
    // The kinked profile needs a wider transform window before its
    // truncation error clears the pointwise tolerance.
    let wide = IntegrationConfig {
        range_multiplier: 32.0,
        ..cfg()
    };
    let cases: Vec<(StateSpec, &IntegrationConfig)> = vec![
        (StateSpec::fock(0), &default),
        (StateSpec::fock(1), &default),
        (StateSpec::fock(3), &default),
        (StateSpec::laplace(2.0).unwrap(), &wide),
        (StateSpec::photon_added_coherent(0.0).unwrap(), &default),
        (StateSpec::photon_added_coherent(1.5).unwrap(), &default),
        (StateSpec::photon_added_coherent(3.0).unwrap(), &default),
        (StateSpec::photon_added_squeezed(0.5).unwrap(), &default),
        (StateSpec::photon_added_squeezed(2.0).unwrap(), &default),
        (StateSpec::cat(1.0, 0.0).unwrap(), &default),
        (StateSpec::cat(2.0, 0.0).unwrap(), &default),
        (StateSpec::cat(1.5, 1.1).unwrap(), &default),
        (sample_random_state(5, 0, 8).unwrap(), &default),
        (sample_random_state(5, 1, 11).unwrap(), &default),
    ];
    for (state, config) in &cases {
        let production = state.momentum_density();
        let fourier = state.momentum_density_via_fourier(config).unwrap();
        let center = production.center();
        let half = 3.0 * production.scale();
        for k in 0..50 {
            let p = center - half + 2.0 * half * k as f64 / 49.0;
            let a = production.evaluate(p);
            let b = fourier.evaluate(p);
            assert!(
                (a - b).abs() < 1e-6,
                "{:?} at p = {p}: production {a} vs fourier {b}",
                state.kind()
            );
        }
    }
}

#[test]
fn fourier_transform_preserves_norm() {
    let config = cfg();
    let states = [
        StateSpec::fock(0),
        StateSpec::fock(3),
        StateSpec::photon_added_coherent(1.5).unwrap(),
        StateSpec::cat(2.0, 0.0).unwrap(),
        sample_random_state(5, 2, 11).unwrap(),
    ];
    for state in &states {
        let psi = state.position_wavefunction().unwrap();
        let outcome = negentropy_ur::quadrature::fourier_transform(&psi, &config).unwrap();
        assert!(
            (outcome.norm_ratio - 1.0).abs() < 1e-8,
            "{:?}: Plancherel ratio {}",
            state.kind(),
            outcome.norm_ratio
        );
    }
}

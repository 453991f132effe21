//! Negentropies, the combined non-Gaussianity measure N, its variance bound
//! B = ln(2·σx·σp), and the entropic-uncertainty residual, assembled into one
//! report per state.
//!
//! For a density with standard deviation σ the Gaussian of the same σ
//! maximizes the differential entropy at H_G(σ) = ln(√(2πe)·σ). The
//! negentropy J = H_G(σ) − H is therefore nonnegative and vanishes exactly
//! for Gaussian statistics. Summing both quadratures, N = J(X) + J(P)
//! satisfies N ≤ B, equivalently σx·σp ≥ ½·e^N, and the entropic residual
//! H(X) + H(P) − ln(πe) equals B − N identically.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{differential_entropy, moment, DensityEvaluator, IntegrationConfig};
use crate::special;
use crate::states::{Family, StateSpec};

/// Everything the toolkit knows about one state's quadrature uncertainties.
///
/// Purity fields are populated only for mixed-state families. The error
/// estimate is the summed entropy error of the two quadrature integrals;
/// downstream consistency checks use 10× this value as their tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct UncertaintyReport {
    pub sigma_x: f64,
    pub sigma_p: f64,
    pub h_x: f64,
    pub h_p: f64,
    pub j_x: f64,
    pub j_p: f64,
    pub n_total: f64,
    pub b_bound: f64,
    pub eur_residual: f64,
    pub purity: Option<f64>,
    pub b_corrected: Option<f64>,
    pub entropy_error_estimate: f64,
}

/// Maximum differential entropy at fixed standard deviation: ln(√(2πe)·σ).
pub fn gaussian_reference_entropy(sigma: f64) -> Result<f64> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::Domain(format!(
            "sigma must be a positive real, got {sigma}"
        )));
    }
    Ok(special::gaussian_entropy_offset() + sigma.ln())
}

/// Standard deviation of a density by quadrature moments. The zeroth moment
/// doubles as a normalization audit: a mass far from 1 means the window
/// missed part of the density, which would silently corrupt every entropy
/// downstream.
fn quadrature_sigma(density: &DensityEvaluator, config: &IntegrationConfig) -> Result<f64> {
    let mass = moment(density, 0, config)?.value;
    if (mass - 1.0).abs() > 1e-6 {
        return Err(Error::Domain(format!(
            "density integrates to {mass}, not 1; window hints are off"
        )));
    }
    let m1 = moment(density, 1, config)?.value;
    let m2 = moment(density, 2, config)?.value;
    let var = m2 - m1 * m1;
    if var.is_nan() || var <= 0.0 {
        return Err(Error::Domain(format!(
            "density has non-positive variance {var}"
        )));
    }
    Ok(var.sqrt())
}

/// Negentropy J = H_G(σ) − H of a single density, both pieces by quadrature.
pub fn negentropy(density: &DensityEvaluator, config: &IntegrationConfig) -> Result<f64> {
    let sigma = quadrature_sigma(density, config)?;
    let h = differential_entropy(density, config)?.value;
    Ok(gaussian_reference_entropy(sigma)? - h)
}

/// Full uncertainty report for a state.
///
/// Standard deviations come from closed forms where the family has them and
/// from quadrature moments otherwise, so the algebraic identity
/// b_bound − n_total = eur_residual holds to floating round-off by
/// construction.
pub fn uncertainty_report(
    state: &StateSpec,
    config: &IntegrationConfig,
) -> Result<UncertaintyReport> {
    let position = state.position_density();
    let momentum = state.momentum_density();

    let h_x = differential_entropy(&position, config)?;
    let h_p = differential_entropy(&momentum, config)?;

    let (sigma_x, sigma_p) = match state.analytic_moments() {
        Some(m) => m,
        None => (
            quadrature_sigma(&position, config)?,
            quadrature_sigma(&momentum, config)?,
        ),
    };

    let j_x = gaussian_reference_entropy(sigma_x)? - h_x.value;
    let j_p = gaussian_reference_entropy(sigma_p)? - h_p.value;
    let n_total = j_x + j_p;
    let b_bound = (2.0 * sigma_x * sigma_p).ln();
    let eur_residual = h_x.value + h_p.value - special::eur_bound();

    let purity = match state.family() {
        Family::PhotonAddedThermal { n_bar } => Some(purity_photon_added_thermal(*n_bar)?),
        _ => None,
    };
    let b_corrected = purity.map(|mu| b_bound + mu.ln());

    Ok(UncertaintyReport {
        sigma_x,
        sigma_p,
        h_x: h_x.value,
        h_p: h_p.value,
        j_x,
        j_p,
        n_total,
        b_bound,
        eur_residual,
        purity,
        b_corrected,
        entropy_error_estimate: h_x.error_estimate + h_p.error_estimate,
    })
}

/// Purity μ = Tr(ρ²) of the photon-added thermal state, summed over its
/// diagonal number-basis probabilities p_{n+1} = (n+1)·n̄ⁿ/(n̄+1)^{n+2}.
pub fn purity_photon_added_thermal(n_bar: f64) -> Result<f64> {
    if !n_bar.is_finite() || n_bar < 0.0 {
        return Err(Error::Domain(format!(
            "n_bar must be nonnegative, got {n_bar}"
        )));
    }
    let u = n_bar / (n_bar + 1.0);
    let scale = 1.0 / ((n_bar + 1.0) * (n_bar + 1.0));
    let mut mu = 0.0;
    let mut power = 1.0; // n̄ⁿ/(n̄+1)ⁿ
    let mut n = 0usize;
    loop {
        let p = (n as f64 + 1.0) * power * scale;
        let term = p * p;
        mu += term;
        if term < 1e-16 && n as f64 > n_bar {
            return Ok(mu);
        }
        power *= u;
        n += 1;
    }
}

/// Purity-corrected variance bound b_bound + ln(μ). The corrected bound is a
/// conjecture checked empirically: callers compare it against n_total and
/// report, rather than enforce, violations.
pub fn purity_corrected_bound(report: &UncertaintyReport) -> Result<f64> {
    let mu = report.purity.ok_or(Error::MissingPurity)?;
    Ok(report.b_bound + mu.ln())
}

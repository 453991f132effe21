//! State families and their position/momentum probability densities.
//!
//! Seven families are supported: Fock states, the symmetric Laplace-profile
//! state, photon-added coherent and photon-added squeezed states, cat states
//! (coherent superpositions with relative phase), the photon-added thermal
//! mixed state, and arbitrary finite Fock superpositions.
//!
//! Momentum densities follow one of three routes, in priority order:
//! the Fock-phase rule (a superposition Σ c_n ψ_n(x) has momentum amplitude
//! Σ c_n (−i)^n ψ_n(p)), a hand-derived closed form, or the numerical Fourier
//! transform in [`crate::quadrature`]. The numerical route is kept as an
//! independent cross-check, never the default.

use std::f64::consts::{PI, SQRT_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{self, IntegrationConfig, WavePacket};
use crate::special::{self, EigenfunctionTable};

pub use crate::quadrature::{DensityEvaluator, TailClass};

/// Discarded probability mass below which a truncated Fock expansion is
/// considered exact for momentum-density purposes.
const EXPANSION_MASS_TOL: f64 = 1e-12;
/// Hard cutoff ceiling; reached only past alpha ~ 60 on the coherent-type
/// families.
const EXPANSION_CAP: usize = 4096;

/// Which family a state belongs to; used by the CLI and sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Fock,
    Laplace,
    PhotonAddedCoherent,
    PhotonAddedSqueezed,
    Cat,
    PhotonAddedThermal,
    FockSuperposition,
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Fock => "fock",
            FamilyKind::Laplace => "laplace",
            FamilyKind::PhotonAddedCoherent => "photon-added-coherent",
            FamilyKind::PhotonAddedSqueezed => "photon-added-squeezed",
            FamilyKind::Cat => "cat",
            FamilyKind::PhotonAddedThermal => "photon-added-thermal",
            FamilyKind::FockSuperposition => "fock-superposition",
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fock" => Ok(FamilyKind::Fock),
            "laplace" => Ok(FamilyKind::Laplace),
            "photon-added-coherent" => Ok(FamilyKind::PhotonAddedCoherent),
            "photon-added-squeezed" => Ok(FamilyKind::PhotonAddedSqueezed),
            "cat" => Ok(FamilyKind::Cat),
            "photon-added-thermal" => Ok(FamilyKind::PhotonAddedThermal),
            "fock-superposition" => Ok(FamilyKind::FockSuperposition),
            other => Err(Error::Domain(format!("unknown family '{other}'"))),
        }
    }
}

/// Family plus validated parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Fock { n: usize },
    Laplace { lambda: f64 },
    PhotonAddedCoherent { alpha: f64 },
    PhotonAddedSqueezed { xi: f64 },
    Cat { alpha: f64, theta: f64 },
    PhotonAddedThermal { n_bar: f64 },
    FockSuperposition { coefficients: Vec<Complex64> },
}

/// A validated single-mode state. Construct through the per-family
/// constructors; the wrapped [`Family`] is immutable afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct StateSpec {
    family: Family,
}

fn require_finite(value: f64, name: &str) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {value}")))
    }
}

impl StateSpec {
    pub fn fock(n: usize) -> Self {
        Self {
            family: Family::Fock { n },
        }
    }

    pub fn laplace(lambda: f64) -> Result<Self> {
        require_finite(lambda, "lambda")?;
        if lambda <= 0.0 {
            return Err(Error::Domain(format!(
                "lambda must be positive, got {lambda}"
            )));
        }
        Ok(Self {
            family: Family::Laplace { lambda },
        })
    }

    pub fn photon_added_coherent(alpha: f64) -> Result<Self> {
        require_finite(alpha, "alpha")?;
        if alpha < 0.0 {
            return Err(Error::Domain(format!(
                "alpha must be nonnegative real, got {alpha}"
            )));
        }
        Ok(Self {
            family: Family::PhotonAddedCoherent { alpha },
        })
    }

    pub fn photon_added_squeezed(xi: f64) -> Result<Self> {
        require_finite(xi, "xi")?;
        if xi <= 0.0 {
            return Err(Error::Domain(format!("xi must be positive, got {xi}")));
        }
        Ok(Self {
            family: Family::PhotonAddedSqueezed { xi },
        })
    }

    pub fn cat(alpha: f64, theta: f64) -> Result<Self> {
        require_finite(alpha, "alpha")?;
        require_finite(theta, "theta")?;
        if alpha < 0.0 {
            return Err(Error::Domain(format!(
                "alpha must be nonnegative real, got {alpha}"
            )));
        }
        let theta = theta.rem_euclid(TAU);
        let denominator = 2.0 * (1.0 + (-2.0 * alpha * alpha).exp() * theta.cos());
        if denominator <= 1e-12 {
            return Err(Error::DegenerateState(format!(
                "cat state with alpha = {alpha}, theta = {theta} has vanishing norm"
            )));
        }
        Ok(Self {
            family: Family::Cat { alpha, theta },
        })
    }

    pub fn photon_added_thermal(n_bar: f64) -> Result<Self> {
        require_finite(n_bar, "n_bar")?;
        if n_bar < 0.0 {
            return Err(Error::Domain(format!(
                "n_bar must be nonnegative, got {n_bar}"
            )));
        }
        Ok(Self {
            family: Family::PhotonAddedThermal { n_bar },
        })
    }

    /// Coefficients are renormalized to unit 2-norm; an all-zero or empty
    /// list is rejected.
    pub fn fock_superposition(coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Domain(
                "superposition needs at least one coefficient".into(),
            ));
        }
        for (n, c) in coefficients.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::Domain(format!("coefficient {n} is not finite")));
            }
        }
        let norm_sqr: f64 = coefficients.iter().map(|c| c.norm_sqr()).sum();
        if norm_sqr < 1e-24 {
            return Err(Error::Domain("all-zero superposition coefficients".into()));
        }
        let inv = 1.0 / norm_sqr.sqrt();
        let coefficients = coefficients.into_iter().map(|c| c * inv).collect();
        Ok(Self {
            family: Family::FockSuperposition { coefficients },
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn kind(&self) -> FamilyKind {
        match self.family {
            Family::Fock { .. } => FamilyKind::Fock,
            Family::Laplace { .. } => FamilyKind::Laplace,
            Family::PhotonAddedCoherent { .. } => FamilyKind::PhotonAddedCoherent,
            Family::PhotonAddedSqueezed { .. } => FamilyKind::PhotonAddedSqueezed,
            Family::Cat { .. } => FamilyKind::Cat,
            Family::PhotonAddedThermal { .. } => FamilyKind::PhotonAddedThermal,
            Family::FockSuperposition { .. } => FamilyKind::FockSuperposition,
        }
    }

    /// Probability density of the position quadrature.
    pub fn position_density(&self) -> DensityEvaluator {
        match &self.family {
            Family::Fock { n } => fock_density(*n),
            Family::Laplace { lambda } => {
                let lambda = *lambda;
                DensityEvaluator::new(0.0, SQRT_2 / lambda, TailClass::Exponential, move |x| {
                    0.5 * lambda * (-lambda * x.abs()).exp()
                })
            }
            Family::PhotonAddedCoherent { alpha } => {
                let xbar = SQRT_2 * alpha;
                let norm = PI.sqrt() * (xbar * xbar + 2.0);
                let mean = xbar + 2.0 * xbar / (xbar * xbar + 2.0);
                let (sigma_x, _) = photon_added_coherent_sigmas(xbar);
                DensityEvaluator::new(mean, sigma_x, TailClass::Gaussian, move |x| {
                    let u = x - xbar;
                    let amp = 2.0 * x - xbar;
                    amp * amp * (-u * u).exp() / norm
                })
            }
            Family::PhotonAddedSqueezed { xi } => photon_added_squeezed_density(*xi),
            Family::Cat { alpha, theta } => {
                let xbar = SQRT_2 * alpha;
                let k = (-2.0 * alpha * alpha).exp() * theta.cos();
                let norm = PI.sqrt() * 2.0 * (1.0 + k);
                let cross = 2.0 * theta.cos() * (-xbar * xbar).exp();
                let sigma_x = ((2.0 * (xbar * xbar + 0.5) + k) / (2.0 * (1.0 + k))).sqrt();
                DensityEvaluator::new(0.0, sigma_x, TailClass::Gaussian, move |x| {
                    let a = x - xbar;
                    let b = x + xbar;
                    ((-a * a).exp() + (-b * b).exp() + cross * (-x * x).exp()) / norm
                })
            }
            Family::PhotonAddedThermal { n_bar } => photon_added_thermal_density(*n_bar),
            Family::FockSuperposition { coefficients } => {
                let hints = fock_basis_moments(coefficients);
                let coefficients = coefficients.clone();
                DensityEvaluator::new(hints.mean_x, hints.sigma_x, TailClass::Gaussian, move |x| {
                    special::superposition_amplitude(&coefficients, x).norm_sqr()
                })
            }
        }
    }

    /// Probability density of the momentum quadrature.
    pub fn momentum_density(&self) -> DensityEvaluator {
        match &self.family {
            // |(-i)^n| = 1: a Fock state's momentum density equals its
            // position density, and the photon-added thermal state is
            // phase-invariant.
            Family::Fock { .. } | Family::PhotonAddedThermal { .. } => self.position_density(),
            Family::Laplace { lambda } => {
                let lambda = *lambda;
                // Transform of the kinked exponential profile is
                // φ(p) = 2λ^{3/2} / (√π (4p² + λ²)); its square, the
                // squared-Lorentzian density below, carries unit mass.
                DensityEvaluator::new(
                    0.0,
                    0.5 * lambda,
                    TailClass::PowerLaw { exponent: 4.0 },
                    move |p| {
                        let d = 4.0 * p * p + lambda * lambda;
                        4.0 * lambda.powi(3) / (PI * d * d)
                    },
                )
            }
            // Squeezing along x maps to the reciprocal squeeze in p.
            Family::PhotonAddedSqueezed { xi } => photon_added_squeezed_density(1.0 / xi),
            Family::PhotonAddedCoherent { .. } | Family::Cat { .. } => {
                let expansion = self
                    .fock_expansion_adaptive()
                    .expect("closed-form expansion exists for pure coherent-type families");
                let (_, sigma_p) = self.conjugate_hints();
                phase_rule_density(&expansion.coefficients, 0.0, sigma_p)
            }
            Family::FockSuperposition { coefficients } => {
                let hints = fock_basis_moments(coefficients);
                phase_rule_density(coefficients, hints.mean_p, hints.sigma_p)
            }
        }
    }

    /// Momentum density via the numerical Fourier transform of the position
    /// wavefunction. Independent of the closed-form and phase-rule routes;
    /// used to cross-check them.
    pub fn momentum_density_via_fourier(
        &self,
        config: &IntegrationConfig,
    ) -> Result<DensityEvaluator> {
        let psi = self.position_wavefunction()?;
        let outcome = quadrature::fourier_transform(&psi, config)?;
        let (center_p, sigma_p) = self.conjugate_hints();
        let tail = match self.family {
            Family::Laplace { .. } => TailClass::PowerLaw { exponent: 4.0 },
            _ => TailClass::Gaussian,
        };
        let transform = outcome.transform;
        Ok(DensityEvaluator::new(center_p, sigma_p, tail, move |p| {
            transform.evaluate(p).norm_sqr()
        }))
    }

    /// Complex position-space amplitude for pure families.
    pub fn position_wavefunction(&self) -> Result<WavePacket> {
        let density = self.position_density();
        let (center, scale) = (density.center(), density.scale());
        match &self.family {
            Family::Fock { n } => {
                let n = *n;
                Ok(WavePacket::new(center, scale, move |x| {
                    Complex64::new(special::eigenfunction(n, x), 0.0)
                }))
            }
            Family::Laplace { lambda } => {
                let lambda = *lambda;
                Ok(WavePacket::new(center, scale, move |x| {
                    Complex64::new((0.5 * lambda).sqrt() * (-0.5 * lambda * x.abs()).exp(), 0.0)
                }))
            }
            Family::PhotonAddedCoherent { alpha } => {
                let xbar = SQRT_2 * alpha;
                let norm = PI.powf(0.25) * (xbar * xbar + 2.0).sqrt();
                Ok(WavePacket::new(center, scale, move |x| {
                    let u = x - xbar;
                    Complex64::new((-0.5 * u * u).exp() * (2.0 * x - xbar) / norm, 0.0)
                }))
            }
            Family::PhotonAddedSqueezed { xi } => {
                let xi = *xi;
                let norm = SQRT_2 / (PI.powf(0.25) * xi.powf(1.5));
                Ok(WavePacket::new(center, scale, move |x| {
                    Complex64::new(norm * x * (-0.5 * x * x / (xi * xi)).exp(), 0.0)
                }))
            }
            Family::Cat { alpha, theta } => {
                let xbar = SQRT_2 * alpha;
                let phase = Complex64::from_polar(1.0, *theta);
                let k = (-2.0 * alpha * alpha).exp() * theta.cos();
                let norm = PI.powf(-0.25) / (2.0 * (1.0 + k)).sqrt();
                Ok(WavePacket::new(center, scale, move |x| {
                    let a = x - xbar;
                    let b = x + xbar;
                    norm * (Complex64::new((-0.5 * a * a).exp(), 0.0)
                        + phase * (-0.5 * b * b).exp())
                }))
            }
            Family::PhotonAddedThermal { .. } => Err(Error::UnsupportedFamily(
                "photon-added thermal state is mixed and has no wavefunction",
            )),
            Family::FockSuperposition { coefficients } => {
                let coefficients = coefficients.clone();
                Ok(WavePacket::new(center, scale, move |x| {
                    special::superposition_amplitude(&coefficients, x)
                }))
            }
        }
    }

    /// Closed-form standard deviations (σx, σp) where they exist.
    pub fn analytic_moments(&self) -> Option<(f64, f64)> {
        match &self.family {
            Family::Fock { n } => {
                let s = (*n as f64 + 0.5).sqrt();
                Some((s, s))
            }
            Family::Laplace { lambda } => Some((SQRT_2 / lambda, 0.5 * lambda)),
            Family::PhotonAddedCoherent { alpha } => {
                Some(photon_added_coherent_sigmas(SQRT_2 * alpha))
            }
            Family::PhotonAddedSqueezed { xi } => Some((1.5f64.sqrt() * xi, 1.5f64.sqrt() / xi)),
            Family::Cat { .. }
            | Family::PhotonAddedThermal { .. }
            | Family::FockSuperposition { .. } => None,
        }
    }

    /// Number-basis coefficients ⟨n|ψ⟩ for n ≤ cutoff, together with the
    /// probability mass the truncation discards.
    pub fn fock_expansion(&self, cutoff: usize) -> Result<FockExpansion> {
        match &self.family {
            Family::Fock { n } => {
                let mut coefficients = vec![Complex64::new(0.0, 0.0); cutoff + 1];
                let discarded_mass = if *n <= cutoff {
                    coefficients[*n] = Complex64::new(1.0, 0.0);
                    0.0
                } else {
                    1.0
                };
                Ok(FockExpansion {
                    coefficients,
                    discarded_mass,
                })
            }
            Family::FockSuperposition { coefficients } => {
                let kept: Vec<Complex64> = coefficients.iter().take(cutoff + 1).copied().collect();
                let discarded: f64 = coefficients
                    .iter()
                    .skip(cutoff + 1)
                    .map(|c| c.norm_sqr())
                    .sum();
                let mut padded = kept;
                padded.resize(cutoff + 1, Complex64::new(0.0, 0.0));
                Ok(FockExpansion {
                    coefficients: padded,
                    discarded_mass: discarded,
                })
            }
            Family::PhotonAddedCoherent { alpha } => {
                Ok(photon_added_coherent_expansion(*alpha, cutoff))
            }
            Family::Cat { alpha, theta } => Ok(cat_expansion(*alpha, *theta, cutoff)),
            Family::Laplace { .. } | Family::PhotonAddedSqueezed { .. } => {
                self.numeric_expansion(cutoff)
            }
            Family::PhotonAddedThermal { .. } => Err(Error::UnsupportedFamily(
                "photon-added thermal state is mixed and has no pure-state expansion",
            )),
        }
    }

    /// Expansion grown until the discarded mass drops below 1e-12.
    fn fock_expansion_adaptive(&self) -> Result<FockExpansion> {
        let mut cutoff = 16;
        loop {
            let expansion = self.fock_expansion(cutoff)?;
            if expansion.discarded_mass < EXPANSION_MASS_TOL || cutoff >= EXPANSION_CAP {
                return Ok(expansion);
            }
            cutoff *= 2;
        }
    }

    /// Overlap integrals ⟨n|ψ⟩ on a shared eigenfunction table; the generic
    /// route for families without a closed-form expansion.
    fn numeric_expansion(&self, cutoff: usize) -> Result<FockExpansion> {
        let psi = self.position_wavefunction()?;
        // Window must cover both the state and ψ_cutoff's turning points;
        // node spacing must resolve ψ_cutoff's fastest oscillation.
        let turning = (2.0 * cutoff as f64 + 1.0).sqrt();
        let half_width = 12.0 * psi.scale().max(turning / 12.0 * 1.5).max(1.0);
        let spacing = (PI / (2.0 * cutoff as f64 + 1.0).sqrt() / 6.0).min(0.05);
        let count = (2.0 * half_width / spacing).ceil() as usize;
        let (grid, weights) = quadrature::composite_grid(-half_width, half_width, count);
        let table = EigenfunctionTable::new(cutoff, grid.clone());
        let values: Vec<Complex64> = grid.iter().map(|&x| psi.evaluate(x)).collect();
        let mut coefficients = Vec::with_capacity(cutoff + 1);
        let mut captured = 0.0;
        for n in 0..=cutoff {
            let row = table.row(n);
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..grid.len() {
                acc += values[i] * row[i] * weights[i];
            }
            captured += acc.norm_sqr();
            coefficients.push(acc);
        }
        Ok(FockExpansion {
            coefficients,
            discarded_mass: (1.0 - captured).max(0.0),
        })
    }

    /// (center, scale) hints for the momentum density.
    fn conjugate_hints(&self) -> (f64, f64) {
        match &self.family {
            Family::Fock { n } => (0.0, (*n as f64 + 0.5).sqrt()),
            Family::Laplace { lambda } => (0.0, 0.5 * lambda),
            Family::PhotonAddedCoherent { alpha } => {
                (0.0, photon_added_coherent_sigmas(SQRT_2 * alpha).1)
            }
            Family::PhotonAddedSqueezed { xi } => (0.0, 1.5f64.sqrt() / xi),
            Family::Cat { alpha, theta } => {
                let xbar = SQRT_2 * alpha;
                let k = (-2.0 * alpha * alpha).exp() * theta.cos();
                let p2 = (1.0 + k * (1.0 - 2.0 * xbar * xbar)) / (2.0 * (1.0 + k));
                (0.0, p2.max(0.05).sqrt())
            }
            Family::PhotonAddedThermal { n_bar } => (0.0, (2.0 * n_bar + 1.5).sqrt()),
            Family::FockSuperposition { coefficients } => {
                let hints = fock_basis_moments(coefficients);
                (hints.mean_p, hints.sigma_p)
            }
        }
    }
}

/// A truncated number-basis expansion and its discarded probability mass.
#[derive(Debug, Clone)]
pub struct FockExpansion {
    pub coefficients: Vec<Complex64>,
    pub discarded_mass: f64,
}

fn fock_density(n: usize) -> DensityEvaluator {
    DensityEvaluator::new(
        0.0,
        (n as f64 + 0.5).sqrt(),
        TailClass::Gaussian,
        move |x| {
            let psi = special::eigenfunction(n, x);
            psi * psi
        },
    )
}

fn photon_added_squeezed_density(xi: f64) -> DensityEvaluator {
    let norm = PI.sqrt() * xi.powi(3);
    DensityEvaluator::new(0.0, 1.5f64.sqrt() * xi, TailClass::Gaussian, move |x| {
        2.0 * x * x * (-x * x / (xi * xi)).exp() / norm
    })
}

fn photon_added_thermal_density(n_bar: f64) -> DensityEvaluator {
    let s2 = 1.0 + 2.0 * n_bar;
    let norm = PI.sqrt() * s2.powf(2.5);
    DensityEvaluator::new(
        0.0,
        (2.0 * n_bar + 1.5).sqrt(),
        TailClass::Gaussian,
        move |x| (n_bar * s2 + 2.0 * (1.0 + n_bar) * x * x) * (-x * x / s2).exp() / norm,
    )
}

/// σx, σp of the photon-added coherent state as functions of x̄ = √2 α.
fn photon_added_coherent_sigmas(xbar: f64) -> (f64, f64) {
    let u = xbar * xbar;
    let sigma_x = ((u * u + 12.0) / (2.0 * (u + 2.0) * (u + 2.0))).sqrt();
    let sigma_p = ((u + 6.0) / (2.0 * u + 4.0)).sqrt();
    (sigma_x, sigma_p)
}

/// Momentum density |Σ c_n (−i)^n ψ_n(p)|².
fn phase_rule_density(coefficients: &[Complex64], center: f64, scale: f64) -> DensityEvaluator {
    const PHASES: [Complex64; 4] = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, -1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, 1.0),
    ];
    let rotated: Vec<Complex64> = coefficients
        .iter()
        .enumerate()
        .map(|(n, c)| c * PHASES[n % 4])
        .collect();
    DensityEvaluator::new(center, scale, TailClass::Gaussian, move |p| {
        special::superposition_amplitude(&rotated, p).norm_sqr()
    })
}

/// a†|α⟩ normalized: c_{n+1} = e^{-α²/2} αⁿ √(n+1) / √(n! (1+α²)).
///
/// The coherent weight t_n = e^{-α²/2} αⁿ/√(n!) is iterated in log space;
/// the prefactor alone underflows past α ≈ 26 even though the peak weight
/// near n ≈ α² stays O(α^{-1/2}).
fn photon_added_coherent_expansion(alpha: f64, cutoff: usize) -> FockExpansion {
    let mut coefficients = vec![Complex64::new(0.0, 0.0); cutoff + 1];
    let norm = (1.0 + alpha * alpha).sqrt();
    let ln_alpha = alpha.ln();
    let mut ln_t = -0.5 * alpha * alpha;
    let mut captured = 0.0;
    for n in 0..cutoff {
        let c = ln_t.exp() * ((n + 1) as f64).sqrt() / norm;
        coefficients[n + 1] = Complex64::new(c, 0.0);
        captured += c * c;
        ln_t += ln_alpha - 0.5 * ((n + 1) as f64).ln();
    }
    FockExpansion {
        coefficients,
        discarded_mass: (1.0 - captured).max(0.0),
    }
}

/// (|α⟩ + e^{iθ}|−α⟩) normalized: c_n = e^{-α²/2} αⁿ (1 + (−1)ⁿ e^{iθ}) / √(n! D).
fn cat_expansion(alpha: f64, theta: f64, cutoff: usize) -> FockExpansion {
    let k = (-2.0 * alpha * alpha).exp() * theta.cos();
    let denom = (2.0 * (1.0 + k)).sqrt();
    let phase = Complex64::from_polar(1.0, theta);
    let mut coefficients = Vec::with_capacity(cutoff + 1);
    let ln_alpha = alpha.ln();
    let mut ln_t = -0.5 * alpha * alpha;
    let mut captured = 0.0;
    for n in 0..=cutoff {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let c = (Complex64::new(1.0, 0.0) + phase * sign) * (ln_t.exp() / denom);
        captured += c.norm_sqr();
        coefficients.push(c);
        ln_t += ln_alpha - 0.5 * ((n + 1) as f64).ln();
    }
    FockExpansion {
        coefficients,
        discarded_mass: (1.0 - captured).max(0.0),
    }
}

pub(crate) struct FockBasisMoments {
    pub mean_x: f64,
    pub sigma_x: f64,
    pub mean_p: f64,
    pub sigma_p: f64,
}

/// Exact first and second quadrature moments of a Fock superposition from
/// ladder-operator algebra; used for window hints and cross-checks.
pub(crate) fn fock_basis_moments(coefficients: &[Complex64]) -> FockBasisMoments {
    let d = coefficients.len();
    let mut a_mean = Complex64::new(0.0, 0.0); // <a>
    let mut a2_mean = Complex64::new(0.0, 0.0); // <a²>
    let mut n_mean = 0.0;
    for n in 0..d {
        n_mean += coefficients[n].norm_sqr() * n as f64;
        if n + 1 < d {
            a_mean += coefficients[n].conj() * coefficients[n + 1] * ((n + 1) as f64).sqrt();
        }
        if n + 2 < d {
            a2_mean +=
                coefficients[n].conj() * coefficients[n + 2] * (((n + 1) * (n + 2)) as f64).sqrt();
        }
    }
    let mean_x = SQRT_2 * a_mean.re;
    let mean_p = SQRT_2 * a_mean.im;
    let x2 = n_mean + 0.5 + a2_mean.re;
    let p2 = n_mean + 0.5 - a2_mean.re;
    FockBasisMoments {
        mean_x,
        sigma_x: (x2 - mean_x * mean_x).max(1e-12).sqrt(),
        mean_p,
        sigma_p: (p2 - mean_p * mean_p).max(1e-12).sqrt(),
    }
}

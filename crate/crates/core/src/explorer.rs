//! Parameter sweeps, seeded random-state scatters, and the cat-state
//! reference curve.
//!
//! Random states are keyed counter-style: every (master_seed, index) pair
//! deterministically derives its own stream, so batches can run on any
//! parallel schedule and still produce identical rows in index order.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::measures::{uncertainty_report, UncertaintyReport};
use crate::quadrature::IntegrationConfig;
use crate::states::{Family, FamilyKind, StateSpec};

/// B below which the N/B ratio is meaningless and left empty.
const RATIO_FLOOR: f64 = 1e-9;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-row seed derived from the master seed and the row index.
pub fn row_seed(master_seed: u64, index: u64) -> u64 {
    let mut state = master_seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    splitmix64(&mut state)
}

fn rng_for(master_seed: u64, index: u64) -> ChaCha12Rng {
    let mut state = row_seed(master_seed, index);
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha12Rng::from_seed(seed)
}

/// FNV-1a fingerprint of a coefficient list, for row identification in CSVs.
fn coefficients_digest(coefficients: &[Complex64]) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bytes: [u8; 8]| {
        for b in bytes {
            hash ^= b as u64;
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    for c in coefficients {
        eat(c.re.to_le_bytes());
        eat(c.im.to_le_bytes());
    }
    format!("{hash:016x}")
}

/// Draw a normalized `dim`-component Fock superposition with i.i.d. complex
/// standard-normal coefficients — uniform on the state sphere after
/// normalization.
pub fn sample_random_state(master_seed: u64, index: u64, dim: usize) -> Result<StateSpec> {
    if dim < 2 {
        return Err(Error::Domain(format!(
            "random states need dim >= 2, got {dim}"
        )));
    }
    let mut rng = rng_for(master_seed, index);
    let coefficients: Vec<Complex64> = (0..dim)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im)
        })
        .collect();
    StateSpec::fock_superposition(coefficients)
}

/// The numbers a scatter row carries when its report converged.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatterValues {
    pub b_bound: f64,
    pub n_total: f64,
    /// N/B, absent when B is numerically zero.
    pub ratio: Option<f64>,
    pub above_cat_reference: bool,
}

/// One random-state record.
#[derive(Debug, Clone)]
pub struct ScatterRow {
    pub index: u64,
    pub seed: u64,
    pub digest: String,
    pub outcome: Result<ScatterValues>,
}

/// Values for one state measured against a reference curve.
pub fn scatter_values_for(
    state: &StateSpec,
    curve: &CatReferenceCurve,
    config: &IntegrationConfig,
) -> Result<ScatterValues> {
    let report = uncertainty_report(state, config)?;
    Ok(values_from_report(&report, curve))
}

fn values_from_report(report: &UncertaintyReport, curve: &CatReferenceCurve) -> ScatterValues {
    let b = report.b_bound;
    let n = report.n_total;
    ScatterValues {
        b_bound: b,
        n_total: n,
        ratio: if b.abs() < RATIO_FLOOR {
            None
        } else {
            Some(n / b)
        },
        above_cat_reference: curve.n_at(b).is_some_and(|n_cat| n > n_cat),
    }
}

/// Scatter experiment: `count` seeded random states, one row each, rows in
/// index order regardless of the parallel schedule. Per-row convergence
/// failures are recorded in the row instead of aborting the batch.
pub fn scatter(
    master_seed: u64,
    count: u64,
    dim: usize,
    config: &IntegrationConfig,
) -> Result<Vec<ScatterRow>> {
    if count < 1 {
        return Err(Error::Domain("scatter needs count >= 1".into()));
    }
    if dim < 2 {
        return Err(Error::Domain(format!(
            "random states need dim >= 2, got {dim}"
        )));
    }
    config.validate()?;
    let curve = CatReferenceCurve::standard(config)?;
    let rows: Vec<ScatterRow> = (0..count)
        .into_par_iter()
        .map(|index| {
            let state = sample_random_state(master_seed, index, dim).expect("dim validated above");
            let digest = match state.family() {
                Family::FockSuperposition { coefficients } => coefficients_digest(coefficients),
                _ => unreachable!("random states are superpositions"),
            };
            ScatterRow {
                index,
                seed: row_seed(master_seed, index),
                digest,
                outcome: scatter_values_for(&state, &curve, config),
            }
        })
        .collect();
    Ok(rows)
}

/// One grid point of a family sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub param: f64,
    pub outcome: Result<UncertaintyReport>,
}

/// The family being swept plus any fixed secondary parameters.
#[derive(Debug, Clone, Copy)]
pub struct SweepFamily {
    pub kind: FamilyKind,
    /// Relative phase for cat-state sweeps; ignored elsewhere.
    pub cat_theta: f64,
}

impl SweepFamily {
    pub fn new(kind: FamilyKind) -> Self {
        Self {
            kind,
            cat_theta: 0.0,
        }
    }

    pub fn with_theta(kind: FamilyKind, theta: f64) -> Self {
        Self {
            kind,
            cat_theta: theta,
        }
    }

    fn state_at(&self, param: f64) -> Result<StateSpec> {
        match self.kind {
            FamilyKind::Fock => {
                let rounded = param.round();
                if (param - rounded).abs() > 1e-9 || rounded < 0.0 {
                    return Err(Error::Domain(format!(
                        "fock sweep parameter must be a nonnegative integer, got {param}"
                    )));
                }
                Ok(StateSpec::fock(rounded as usize))
            }
            FamilyKind::Laplace => StateSpec::laplace(param),
            FamilyKind::PhotonAddedCoherent => StateSpec::photon_added_coherent(param),
            FamilyKind::PhotonAddedSqueezed => StateSpec::photon_added_squeezed(param),
            FamilyKind::Cat => StateSpec::cat(param, self.cat_theta),
            FamilyKind::PhotonAddedThermal => StateSpec::photon_added_thermal(param),
            FamilyKind::FockSuperposition => Err(Error::UnsupportedFamily(
                "fock superpositions have no scalar sweep parameter",
            )),
        }
    }
}

fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Domain("parameter grid is empty".into()));
    }
    for pair in grid.windows(2) {
        if pair[1].partial_cmp(&pair[0]) != Some(std::cmp::Ordering::Greater) {
            return Err(Error::Domain(format!(
                "parameter grid must be strictly increasing ({} then {})",
                pair[0], pair[1]
            )));
        }
    }
    Ok(())
}

/// One uncertainty report per grid point; per-point failures are marked in
/// the row and the batch continues.
pub fn family_sweep(
    family: SweepFamily,
    grid: &[f64],
    config: &IntegrationConfig,
) -> Result<Vec<SweepRow>> {
    validate_grid(grid)?;
    config.validate()?;
    if family.kind == FamilyKind::FockSuperposition {
        return Err(Error::UnsupportedFamily(
            "fock superpositions have no scalar sweep parameter",
        ));
    }
    let rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|&param| SweepRow {
            param,
            outcome: family
                .state_at(param)
                .and_then(|state| uncertainty_report(&state, config)),
        })
        .collect();
    Ok(rows)
}

/// One sampled point of the cat reference curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub alpha: f64,
    pub b_bound: f64,
    pub n_total: f64,
}

/// Piecewise-linear N(B) along the even-cat family, used as the scatter
/// reference ("is this random state closer to the N = B frontier than a cat
/// state of equal B?").
#[derive(Debug, Clone)]
pub struct CatReferenceCurve {
    /// Strictly increasing in b_bound.
    points: Vec<CurvePoint>,
}

impl CatReferenceCurve {
    /// Default grid: alpha from 0 to 5 in steps of 1/8.
    pub fn standard(config: &IntegrationConfig) -> Result<Self> {
        let grid: Vec<f64> = (0..=40).map(|i| i as f64 * 0.125).collect();
        cat_reference_curve(&grid, config)
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn b_range(&self) -> (f64, f64) {
        (
            self.points[0].b_bound,
            self.points[self.points.len() - 1].b_bound,
        )
    }

    /// Interpolated N at the given B; `None` outside the sampled range.
    pub fn n_at(&self, b: f64) -> Option<f64> {
        let (lo, hi) = self.b_range();
        if b < lo || b > hi {
            return None;
        }
        let idx = self
            .points
            .partition_point(|p| p.b_bound <= b)
            .min(self.points.len() - 1);
        if idx == 0 {
            return Some(self.points[0].n_total);
        }
        let p0 = self.points[idx - 1];
        let p1 = self.points[idx];
        if b == p0.b_bound {
            return Some(p0.n_total);
        }
        Some(p0.n_total + (p1.n_total - p0.n_total) * (b - p0.b_bound) / (p1.b_bound - p0.b_bound))
    }
}

/// Sample the even-cat family over an alpha grid and return its (B, N)
/// curve. The alpha = 0 endpoint is the vacuum, hence (0, 0) exactly.
pub fn cat_reference_curve(
    alpha_grid: &[f64],
    config: &IntegrationConfig,
) -> Result<CatReferenceCurve> {
    validate_grid(alpha_grid)?;
    if alpha_grid[0] < 0.0 {
        return Err(Error::Domain("cat alpha grid must be nonnegative".into()));
    }
    let points: Vec<CurvePoint> = alpha_grid
        .par_iter()
        .map(|&alpha| -> Result<CurvePoint> {
            if alpha == 0.0 {
                return Ok(CurvePoint {
                    alpha,
                    b_bound: 0.0,
                    n_total: 0.0,
                });
            }
            let state = StateSpec::cat(alpha, 0.0)?;
            let report = uncertainty_report(&state, config)?;
            Ok(CurvePoint {
                alpha,
                b_bound: report.b_bound,
                n_total: report.n_total,
            })
        })
        .collect::<Result<_>>()?;
    for pair in points.windows(2) {
        if pair[1].b_bound.partial_cmp(&pair[0].b_bound) != Some(std::cmp::Ordering::Greater) {
            return Err(Error::CurveConstruction {
                alpha: pair[1].alpha,
            });
        }
    }
    Ok(CatReferenceCurve { points })
}

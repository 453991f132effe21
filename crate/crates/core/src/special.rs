//! Harmonic-oscillator eigenfunctions and shared mathematical constants.
//!
//! Everything Fock-basis related funnels through [`eigenfunction`], which
//! evaluates the normalized oscillator eigenfunction ψ_n(x) by a recurrence
//! directly on ψ_n itself. The textbook route — H_n(x) times
//! (√π 2^n n!)^{-1/2} — overflows past n ≈ 170; the normalized recurrence
//! stays finite for n in the hundreds.

use num_complex::Complex64;

use std::f64::consts::{E, LN_2, PI, SQRT_2};

/// Euler–Mascheroni constant γ_E.
pub const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

/// Entropy of a unit-variance Gaussian, ½·ln(2πe).
pub fn gaussian_entropy_offset() -> f64 {
    0.5 * (2.0 * PI * E).ln()
}

/// Lower bound for the combined position/momentum entropies, ln(πe).
pub fn eur_bound() -> f64 {
    (PI * E).ln()
}

/// Identity between the constants above; asserted once at CLI startup and in
/// tests. ln(πe) = 2·½ln(2πe) − ln 2.
pub fn constants_consistent() -> bool {
    (eur_bound() - (2.0 * gaussian_entropy_offset() - LN_2)).abs() < 1e-14
}

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_{n+1} = 2x·H_n − 2n·H_{n−1}.
///
/// Exact for the polynomial within floating round-off; overflows for large n
/// at large |x| like the polynomial itself does. Use [`eigenfunction`] for
/// anything normalized.
pub fn hermite_polynomial(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut curr = 2.0 * x;
    for m in 1..n {
        let next = 2.0 * x * curr - 2.0 * (m as f64) * prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// Normalized oscillator eigenfunction ψ_n(x) = (√π 2^n n!)^{-1/2} e^{-x²/2} H_n(x),
/// evaluated by the stable recurrence
/// ψ_{n+1} = x·√(2/(n+1))·ψ_n − √(n/(n+1))·ψ_{n−1}.
///
/// Finite and accurate for n well past 200. Parity ψ_n(−x) = (−1)^n ψ_n(x)
/// holds bit-exactly because every recurrence step commutes with negation.
pub fn eigenfunction(n: usize, x: f64) -> f64 {
    let psi0 = PI.powf(-0.25) * (-0.5 * x * x).exp();
    if n == 0 {
        return psi0;
    }
    let mut prev = psi0;
    let mut curr = SQRT_2 * x * psi0;
    for m in 1..n {
        let mf = m as f64;
        let next = x * (2.0 / (mf + 1.0)).sqrt() * curr - (mf / (mf + 1.0)).sqrt() * prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// Σ_n c_n ψ_n(x) evaluated in one pass of the recurrence.
///
/// This is the single code path behind every Fock-superposition density;
/// momentum-side evaluation passes coefficients pre-multiplied by (−i)^n.
pub fn superposition_amplitude(coefficients: &[Complex64], x: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    if coefficients.is_empty() {
        return acc;
    }
    let psi0 = PI.powf(-0.25) * (-0.5 * x * x).exp();
    acc += coefficients[0] * psi0;
    if coefficients.len() == 1 {
        return acc;
    }
    let mut prev = psi0;
    let mut curr = SQRT_2 * x * psi0;
    acc += coefficients[1] * curr;
    for m in 1..coefficients.len() - 1 {
        let mf = m as f64;
        let next = x * (2.0 / (mf + 1.0)).sqrt() * curr - (mf / (mf + 1.0)).sqrt() * prev;
        prev = curr;
        curr = next;
        acc += coefficients[m + 1] * curr;
    }
    acc
}

/// ψ_n(x_i) tabulated for all n ≤ max_order on a fixed grid.
///
/// One table serves every overlap integral against the same grid, so numeric
/// Fock expansions and orthonormality checks do not re-run the recurrence per
/// coefficient. Immutable after construction; share freely across threads.
#[derive(Debug, Clone)]
pub struct EigenfunctionTable {
    max_order: usize,
    grid: Vec<f64>,
    /// Row-major: values[n * grid.len() + i] = ψ_n(grid[i]).
    values: Vec<f64>,
}

impl EigenfunctionTable {
    pub fn new(max_order: usize, grid: Vec<f64>) -> Self {
        let len = grid.len();
        let mut values = vec![0.0; (max_order + 1) * len];
        for (i, &x) in grid.iter().enumerate() {
            let psi0 = PI.powf(-0.25) * (-0.5 * x * x).exp();
            values[i] = psi0;
            if max_order >= 1 {
                values[len + i] = SQRT_2 * x * psi0;
            }
            for m in 1..max_order {
                let mf = m as f64;
                let next = x * (2.0 / (mf + 1.0)).sqrt() * values[m * len + i]
                    - (mf / (mf + 1.0)).sqrt() * values[(m - 1) * len + i];
                values[(m + 1) * len + i] = next;
            }
        }
        Self {
            max_order,
            grid,
            values,
        }
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    /// ψ_n values across the whole grid.
    pub fn row(&self, n: usize) -> &[f64] {
        assert!(n <= self.max_order, "order {n} beyond table maximum");
        let len = self.grid.len();
        &self.values[n * len..(n + 1) * len]
    }
}

//! Quadrature probability densities, differential entropies, negentropies and
//! refined uncertainty quantities for single-mode continuous-variable states.
//!
//! The library is organized around a small pipeline:
//!
//! - [`special`] — stable harmonic-oscillator eigenfunctions and constants;
//! - [`states`] — constructors and density evaluators for seven state
//!   families (Fock, Laplace-profile, photon-added coherent, photon-added
//!   squeezed, cat, photon-added thermal, arbitrary Fock superpositions);
//! - [`quadrature`] — composite Gauss–Legendre integration with explicit
//!   tail policies, plus a numerical Fourier transform;
//! - [`measures`] — Gaussian reference entropy, negentropies J(X), J(P),
//!   the combined measure N = J(X)+J(P), its bound B = ln(2·σx·σp), the
//!   entropic-uncertainty residual and purity corrections, assembled into one
//!   [`measures::UncertaintyReport`] per state;
//! - [`explorer`] — parameter sweeps, seeded random-state scatters and the
//!   cat-state reference curve;
//! - [`cli`] — the `negentropy-ur` command-line front end.

pub mod cli;
pub mod error;
pub mod explorer;
pub mod measures;
pub mod quadrature;
pub mod special;
pub mod states;

pub use error::{Error, Result};
pub use measures::{uncertainty_report, UncertaintyReport};
pub use quadrature::{DensityEvaluator, IntegrationConfig, TailClass};
pub use states::StateSpec;

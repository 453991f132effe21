//! Print the uncertainty measures of one representative state per family.
//!
//! Run with: cargo run --release --example family_overview

use negentropy_ur::measures::uncertainty_report;
use negentropy_ur::{IntegrationConfig, StateSpec};

fn main() -> negentropy_ur::Result<()> {
    let config = IntegrationConfig::default();
    let states = vec![
        ("vacuum", StateSpec::fock(0)),
        ("single photon", StateSpec::fock(1)),
        ("laplace profile", StateSpec::laplace(2.0)?),
        (
            "photon-added coherent",
            StateSpec::photon_added_coherent(1.0)?,
        ),
        (
            "photon-added squeezed",
            StateSpec::photon_added_squeezed(2.0)?,
        ),
        ("even cat", StateSpec::cat(2.0, 0.0)?),
        (
            "photon-added thermal",
            StateSpec::photon_added_thermal(1.0)?,
        ),
    ];
    println!(
        "{:<24} {:>10} {:>10} {:>10} {:>12}",
        "state", "N", "B", "B - N", "B + ln(mu)"
    );
    for (label, state) in states {
        let r = uncertainty_report(&state, &config)?;
        let corrected = r
            .b_corrected
            .map(|b| format!("{b:>12.6}"))
            .unwrap_or_else(|| format!("{:>12}", "-"));
        println!(
            "{label:<24} {:>10.6} {:>10.6} {:>10.6} {corrected}",
            r.n_total,
            r.b_bound,
            r.b_bound - r.n_total
        );
    }
    Ok(())
}

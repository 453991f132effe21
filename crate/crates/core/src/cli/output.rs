//! CSV, JSON, manifest and plot-recipe emission.
//!
//! Reals are printed with 12 significant digits. Derived CSV columns (the
//! N/B ratio and the entropic residual) are recomputed from the rounded
//! independents before printing, so parsing a CSV and re-deriving them
//! reproduces the file exactly — formatting never drifts from its own
//! columns.

use std::io;
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};

use crate::error::Error;
use crate::explorer::{CatReferenceCurve, ScatterRow, SweepRow};
use crate::measures::UncertaintyReport;
use crate::quadrature::IntegrationConfig;
use crate::special;
use crate::states::{FamilyKind, StateSpec};

use super::Failure;

pub const SWEEP_HEADER: &str = "param,sigma_x,sigma_p,h_x,h_p,j_x,j_p,n_total,b_bound,\
eur_residual,purity,b_corrected,error_est,error";
pub const SCATTER_HEADER: &str =
    "index,seed,digest,b_bound,n_total,ratio,above_cat_reference,error";

/// 12 significant digits, scientific.
pub fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

fn reparse(s: &str) -> f64 {
    s.parse().expect("fmt12 output is parseable")
}

fn opt12(x: Option<f64>) -> String {
    x.map(fmt12).unwrap_or_default()
}

/// Report fields in CSV column order, with the residual re-derived from the
/// rounded entropies.
fn report_fields(report: &UncertaintyReport) -> Vec<String> {
    let h_x = fmt12(report.h_x);
    let h_p = fmt12(report.h_p);
    let residual = reparse(&h_x) + reparse(&h_p) - special::eur_bound();
    vec![
        fmt12(report.sigma_x),
        fmt12(report.sigma_p),
        h_x,
        h_p,
        fmt12(report.j_x),
        fmt12(report.j_p),
        fmt12(report.n_total),
        fmt12(report.b_bound),
        fmt12(residual),
        opt12(report.purity),
        opt12(report.b_corrected),
        fmt12(report.entropy_error_estimate),
    ]
}

pub fn report_text(state: &StateSpec, report: &UncertaintyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("family            = {}\n", state.kind().name()));
    out.push_str(&format!("sigma_x           = {}\n", fmt12(report.sigma_x)));
    out.push_str(&format!("sigma_p           = {}\n", fmt12(report.sigma_p)));
    out.push_str(&format!("h_x               = {}\n", fmt12(report.h_x)));
    out.push_str(&format!("h_p               = {}\n", fmt12(report.h_p)));
    out.push_str(&format!("j_x               = {}\n", fmt12(report.j_x)));
    out.push_str(&format!("j_p               = {}\n", fmt12(report.j_p)));
    out.push_str(&format!("n_total           = {}\n", fmt12(report.n_total)));
    out.push_str(&format!("b_bound           = {}\n", fmt12(report.b_bound)));
    out.push_str(&format!(
        "eur_residual      = {}\n",
        fmt12(report.eur_residual)
    ));
    match report.purity {
        Some(mu) => out.push_str(&format!("purity            = {}\n", fmt12(mu))),
        None => out.push_str("purity            = -\n"),
    }
    match report.b_corrected {
        Some(b) => out.push_str(&format!("b_corrected       = {}\n", fmt12(b))),
        None => out.push_str("b_corrected       = -\n"),
    }
    out.push_str(&format!(
        "entropy_error_est = {}\n",
        fmt12(report.entropy_error_estimate)
    ));
    out
}

pub fn report_json(report: &UncertaintyReport) -> Result<String, Failure> {
    serde_json::to_string_pretty(report)
        .map_err(|e| Failure::Lib(Error::Domain(format!("json serialization failed: {e}"))))
}

pub fn report_csv(report: &UncertaintyReport, param: Option<f64>) -> String {
    let mut out = String::new();
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    out.push_str(&param.map(fmt12).unwrap_or_default());
    for field in report_fields(report) {
        out.push(',');
        out.push_str(&field);
    }
    out.push_str(",\n");
    out
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&fmt12(row.param));
        match &row.outcome {
            Ok(report) => {
                for field in report_fields(report) {
                    out.push(',');
                    out.push_str(&field);
                }
                out.push_str(",\n");
            }
            Err(e) => {
                // 12 empty data cells, then the failure marker
                out.push_str(&",".repeat(12));
                out.push(',');
                out.push_str(&e.to_string().replace(',', ";"));
                out.push('\n');
            }
        }
    }
    out
}

pub fn scatter_csv(rows: &[ScatterRow]) -> String {
    let mut out = String::new();
    out.push_str(SCATTER_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!("{},{},{}", row.index, row.seed, row.digest));
        match &row.outcome {
            Ok(v) => {
                let b = fmt12(v.b_bound);
                let n = fmt12(v.n_total);
                let ratio = match v.ratio {
                    Some(_) => fmt12(reparse(&n) / reparse(&b)),
                    None => String::new(),
                };
                out.push_str(&format!(",{b},{n},{ratio},{},\n", v.above_cat_reference));
            }
            Err(e) => {
                out.push_str(&format!(",,,,,{}\n", e.to_string().replace(',', ";")));
            }
        }
    }
    out
}

pub fn curve_csv(curve: &CatReferenceCurve) -> String {
    let mut out = String::from("alpha,b_bound,n_total\n");
    for p in curve.points() {
        out.push_str(&format!(
            "{},{},{}\n",
            fmt12(p.alpha),
            fmt12(p.b_bound),
            fmt12(p.n_total)
        ));
    }
    out
}

/// `<path>.suffix` next to the given file.
pub fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut os = path.as_os_str().to_owned();
    os.push(suffix);
    PathBuf::from(os)
}

/// Flat key=value manifest describing exactly how a CSV was produced.
pub fn write_manifest(
    csv_path: &Path,
    command_line: &str,
    config: &IntegrationConfig,
    master_seed: Option<u64>,
) -> io::Result<PathBuf> {
    let path = sibling(csv_path, ".manifest");
    let mut contents = String::new();
    contents.push_str("tool = negentropy-ur\n");
    contents.push_str(&format!("version = {}\n", env!("CARGO_PKG_VERSION")));
    contents.push_str(&format!(
        "timestamp = {}\n",
        Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true)
    ));
    contents.push_str(&format!("command = {command_line}\n"));
    contents.push_str(&format!("base_nodes = {}\n", config.base_nodes));
    contents.push_str(&format!("range_multiplier = {}\n", config.range_multiplier));
    contents.push_str(&format!(
        "doubling_tolerance = {:e}\n",
        config.doubling_tolerance
    ));
    contents.push_str(&format!("max_doublings = {}\n", config.max_doublings));
    if let Some(seed) = master_seed {
        contents.push_str(&format!("master_seed = {seed}\n"));
    }
    let threads = std::env::var("NEGENTROPY_UR_THREADS").unwrap_or_else(|_| "auto".into());
    contents.push_str(&format!("threads = {threads}\n"));
    std::fs::write(&path, contents)?;
    Ok(path)
}

pub fn sweep_plotscript(csv_path: &Path, kind: FamilyKind) -> String {
    let mut out = String::new();
    out.push_str(&format!("# plotting recipe for {}\n", csv_path.display()));
    out.push_str(&format!("data: {}\n", csv_path.display()));
    out.push_str("x-column: param\n");
    if kind == FamilyKind::PhotonAddedThermal {
        out.push_str("y-columns: b_bound, n_total, b_corrected\n");
        out.push_str("style: b_bound dashed red, n_total solid blue, b_corrected dash-dot green\n");
    } else {
        out.push_str("y-columns: b_bound, n_total\n");
        out.push_str("style: b_bound dashed red, n_total solid blue\n");
    }
    out.push_str(&format!("x-label: {} parameter\n", kind.name()));
    out.push_str("y-label: nats\n");
    out
}

pub fn scatter_plotscript(csv_path: &Path) -> String {
    let mut out = String::new();
    out.push_str(&format!("# plotting recipe for {}\n", csv_path.display()));
    out.push_str(&format!("data: {}\n", csv_path.display()));
    out.push_str("x-column: b_bound\n");
    out.push_str("y-columns: n_total\n");
    out.push_str("style: scatter points, color by above_cat_reference\n");
    out.push_str("overlay: line n = b through the origin (physicality frontier)\n");
    out.push_str("overlay: cat reference curve (emit with --cat-curve)\n");
    out.push_str("x-label: b_bound (nats)\n");
    out.push_str("y-label: n_total (nats)\n");
    out
}

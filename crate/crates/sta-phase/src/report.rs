//! Report emission for integrated phase runs: a fixed-schema CSV table
//! and a JSON mirror carrying the same names, both byte-deterministic
//! for identical inputs.

use serde::{Deserialize, Serialize};

use crate::phase::{PhaseRun, RateSample};
use crate::scenario::ScenarioFile;
use crate::tol;

/// Column order of the CSV series table. The JSON `series` objects use
/// the same names.
pub const CSV_COLUMNS: [&str; 8] = [
    "t",
    "delta_dot_full",
    "gamma_dot_full",
    "delta_dot_simple",
    "gamma_dot_simple",
    "beta",
    "v0",
    "consistency_residual",
];

/// One emitted series row.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SeriesRow {
    pub t: f64,
    pub delta_dot_full: f64,
    pub gamma_dot_full: f64,
    pub delta_dot_simple: f64,
    pub gamma_dot_simple: f64,
    pub beta: f64,
    pub v0: f64,
    pub consistency_residual: f64,
}

impl From<&RateSample> for SeriesRow {
    fn from(s: &RateSample) -> SeriesRow {
        SeriesRow {
            t: s.t,
            delta_dot_full: s.dynamic_full,
            gamma_dot_full: s.geometric_full,
            delta_dot_simple: s.dynamic_simple,
            gamma_dot_simple: s.geometric_simple,
            beta: s.beta,
            v0: s.v0,
            consistency_residual: s.consistency_residual,
        }
    }
}

/// Integrated endpoints of the run.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Finals {
    pub delta_full: f64,
    pub gamma_full: f64,
    pub delta_simple: f64,
    pub gamma_simple: f64,
    /// -Δχ/2: the value each formula pair must sum to.
    pub total: f64,
    pub chi_change: f64,
    pub max_consistency_residual: f64,
    /// delta_full + gamma_full - total; zero up to integration error.
    pub ledger_residual: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportMeta {
    pub steps: usize,
    pub integrator: String,
    pub proper_time_rates: bool,
    pub ledger_tolerance: f64,
    pub consistency_tolerance: f64,
    pub version: String,
}

/// Full report: scenario echo, per-sample series, integrated finals,
/// and run metadata.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhaseReport {
    pub scenario: ScenarioFile,
    pub meta: ReportMeta,
    pub finals: Finals,
    pub series: Vec<SeriesRow>,
}

impl PhaseReport {
    pub fn new(scenario: ScenarioFile, run: &PhaseRun, proper_time_rates: bool) -> PhaseReport {
        let t = &run.totals;
        PhaseReport {
            scenario,
            meta: ReportMeta {
                steps: run.samples.len().saturating_sub(1),
                integrator: "simpson".into(),
                proper_time_rates,
                ledger_tolerance: tol::INTEGRATED,
                consistency_tolerance: tol::CHAIN,
                version: env!("CARGO_PKG_VERSION").into(),
            },
            finals: Finals {
                delta_full: t.dynamic_full,
                gamma_full: t.geometric_full,
                delta_simple: t.dynamic_simple,
                gamma_simple: t.geometric_simple,
                total: t.total,
                chi_change: t.chi_change,
                max_consistency_residual: t.max_consistency_residual,
                ledger_residual: t.dynamic_full + t.geometric_full - t.total,
            },
            series: run.samples.iter().map(SeriesRow::from).collect(),
        }
    }

    /// CSV text: `#`-prefixed metadata lines, the fixed header, then one
    /// row per sample.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# sta-phase {} scenario={} steps={} integrator={} proper_time_rates={}\n",
            self.meta.version,
            self.scenario.kind,
            self.meta.steps,
            self.meta.integrator,
            self.meta.proper_time_rates,
        ));
        let f = &self.finals;
        out.push_str(&format!(
            "# delta_full={} gamma_full={} delta_simple={} gamma_simple={} total={} chi_change={} max_consistency_residual={} ledger_residual={}\n",
            fmt(f.delta_full),
            fmt(f.gamma_full),
            fmt(f.delta_simple),
            fmt(f.gamma_simple),
            fmt(f.total),
            fmt(f.chi_change),
            fmt(f.max_consistency_residual),
            fmt(f.ledger_residual),
        ));
        out.push_str(&CSV_COLUMNS.join(","));
        out.push('\n');
        for row in &self.series {
            let cells = [
                row.t,
                row.delta_dot_full,
                row.gamma_dot_full,
                row.delta_dot_simple,
                row.gamma_dot_simple,
                row.beta,
                row.v0,
                row.consistency_residual,
            ];
            let line: Vec<String> = cells.iter().map(|&x| fmt(x)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Pretty JSON with a trailing newline. Scenario params objects are
    /// key-sorted, so output is deterministic.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

/// Shortest round-trip decimal for the float, with -0 folded into 0.
fn fmt(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        format!("{x}")
    }
}

/// Trapezoid re-integration of emitted rate rows. For observer-time rows
/// this reproduces the Simpson finals up to O(h²); used as a cheap
/// cross-check that series and finals describe the same run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReintegratedTotals {
    pub delta_full: f64,
    pub gamma_full: f64,
    pub delta_simple: f64,
    pub gamma_simple: f64,
}

pub fn reintegrate(rows: &[SeriesRow]) -> ReintegratedTotals {
    let mut acc = ReintegratedTotals {
        delta_full: 0.0,
        gamma_full: 0.0,
        delta_simple: 0.0,
        gamma_simple: 0.0,
    };
    for pair in rows.windows(2) {
        let h = pair[1].t - pair[0].t;
        acc.delta_full += 0.5 * h * (pair[0].delta_dot_full + pair[1].delta_dot_full);
        acc.gamma_full += 0.5 * h * (pair[0].gamma_dot_full + pair[1].gamma_dot_full);
        acc.delta_simple += 0.5 * h * (pair[0].delta_dot_simple + pair[1].delta_dot_simple);
        acc.gamma_simple += 0.5 * h * (pair[0].gamma_dot_simple + pair[1].gamma_dot_simple);
    }
    acc
}

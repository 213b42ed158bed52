//! Temperature sweeps: the data behind the figure curves.
//!
//! A sweep covers a finite temperature grid plus the exact `T = 0` and
//! `T = +∞` limit rows (first and last), so limit values are directly
//! greppable in the CSV. All numeric fields are formatted with Rust's
//! shortest-round-trip `Display`, making the byte output deterministic.

use serde::{Deserialize, Serialize};

use crate::channels::{ad_kraus, apply_product_channel};
use crate::closedform;
use crate::measures::{full_report, MeasureReport};
use crate::modes::{bogoliubov, ModeParams};
use crate::states::{reduce, Scenario};
use crate::Error;

/// Grid spacing for the sweep temperatures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TScale {
    Linear,
    Log,
}

/// One sweep request. The defaults (ω = 1, 50 log points on
/// [0.05, 10]) cover every feature of the curves: the decay from the
/// T≈0 values, the GC peak near T ≈ 0.91, and the large-T plateau.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfig {
    pub scenario: Scenario,
    #[serde(default = "default_omega")]
    pub omega: f64,
    #[serde(default = "default_t_min")]
    pub t_min: f64,
    #[serde(default = "default_t_max")]
    pub t_max: f64,
    #[serde(default = "default_t_points")]
    pub t_points: usize,
    #[serde(default = "default_t_scale")]
    pub t_scale: TScale,
    #[serde(default)]
    pub gamma: Option<f64>,
}

fn default_omega() -> f64 {
    1.0
}
fn default_t_min() -> f64 {
    0.05
}
fn default_t_max() -> f64 {
    10.0
}
fn default_t_points() -> usize {
    50
}
fn default_t_scale() -> TScale {
    TScale::Log
}

impl SweepConfig {
    pub fn new(scenario: Scenario) -> Self {
        Self {
            scenario,
            omega: default_omega(),
            t_min: default_t_min(),
            t_max: default_t_max(),
            t_points: default_t_points(),
            t_scale: default_t_scale(),
            gamma: None,
        }
    }

    pub fn check(&self) -> Result<(), Error> {
        if !(self.t_min >= 0.0 && self.t_min < self.t_max) || self.t_points < 2 {
            return Err(Error::InvalidDensityMatrix(
                "sweep grid requires 0 <= t_min < t_max and t_points >= 2".into(),
            ));
        }
        if self.t_scale == TScale::Log && self.t_min <= 0.0 {
            return Err(Error::InvalidDensityMatrix(
                "log scale requires t_min > 0".into(),
            ));
        }
        if let Some(g) = self.gamma {
            if !(0.0..=1.0).contains(&g) {
                return Err(Error::DampingOutOfRange);
            }
        }
        if self.omega.is_nan() || self.omega <= 0.0 {
            return Err(Error::FrequencyNotPositive);
        }
        Ok(())
    }

    /// The finite grid temperatures, strictly increasing.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.t_points;
        (0..n)
            .map(|i| {
                let f = i as f64 / (n - 1) as f64;
                match self.t_scale {
                    TScale::Linear => self.t_min + f * (self.t_max - self.t_min),
                    TScale::Log => self.t_min * (self.t_max / self.t_min).powf(f),
                }
            })
            .collect()
    }
}

/// One CSV row: the parameter point and its five measures.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepRow {
    pub t: f64,
    pub alpha: f64,
    pub beta: f64,
    pub c_l1: f64,
    pub foc: f64,
    pub gc: f64,
    pub cf: f64,
    pub tradeoff: f64,
    pub cf_clamped: bool,
}

/// Evaluate the full numeric pipeline at one parameter point.
pub fn eval_point(
    scenario: Scenario,
    t: f64,
    omega: f64,
    gamma: Option<f64>,
) -> Result<(ModeParams, MeasureReport), Error> {
    let params = bogoliubov(t, omega)?;
    let rho = reduce(scenario, &params)?;
    let rho = match gamma {
        None => rho,
        Some(g) => {
            let ch = ad_kraus(g)?;
            apply_product_channel(&rho, &[ch.clone(), ch.clone(), ch])?
        }
    };
    Ok((params, full_report(&rho)?))
}

fn row_at(scenario: Scenario, t: f64, omega: f64, gamma: Option<f64>) -> Result<SweepRow, Error> {
    let (params, r) = eval_point(scenario, t, omega, gamma)?;
    Ok(SweepRow {
        t,
        alpha: params.alpha,
        beta: params.beta,
        c_l1: r.c_l1,
        foc: r.foc,
        gc: r.gc,
        cf: r.cf,
        tradeoff: r.tradeoff,
        cf_clamped: r.cf_clamped,
    })
}

/// Run a sweep: `T = 0` row, the finite grid, then the `T = +∞` row.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>, Error> {
    config.check()?;
    let mut rows = Vec::with_capacity(config.t_points + 2);
    rows.push(row_at(config.scenario, 0.0, config.omega, config.gamma)?);
    for t in config.grid() {
        rows.push(row_at(config.scenario, t, config.omega, config.gamma)?);
    }
    rows.push(row_at(
        config.scenario,
        f64::INFINITY,
        config.omega,
        config.gamma,
    )?);
    Ok(rows)
}

pub const CSV_HEADER: &str = "T,alpha,beta,c_l1,foc,gc,cf,tradeoff,cf_clamped";

/// Serialize rows as CSV; `T = 0` and `T = ∞` print as `0` and `inf`.
pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 96 + CSV_HEADER.len() + 1);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.t,
            r.alpha,
            r.beta,
            r.c_l1,
            r.foc,
            r.gc,
            r.cf,
            r.tradeoff,
            u8::from(r.cf_clamped)
        ));
    }
    out
}

/// Run the full oracle grid used by `verify`: the requested scenarios
/// and damping values over the grid plus the two exact limits.
pub fn verify_grid(
    scenarios: &[Scenario],
    gammas: &[Option<f64>],
    t_points: usize,
    omega: f64,
) -> Result<Vec<closedform::PointDeviation>, Error> {
    let config = SweepConfig {
        t_points,
        ..SweepConfig::new(Scenario::Abc3)
    };
    let mut temps = vec![0.0];
    temps.extend(config.grid());
    temps.push(f64::INFINITY);
    let mut out = Vec::new();
    for &scenario in scenarios {
        for &gamma in gammas {
            for &t in &temps {
                let params = bogoliubov(t, omega)?;
                out.push(closedform::verify_point(scenario, &params, gamma)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_row_count_and_limits() {
        let cfg = SweepConfig::new(Scenario::Abc3);
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 52);
        assert_eq!(rows[0].t, 0.0);
        assert!(rows[51].t.is_infinite());
        for w in rows.windows(2) {
            assert!(w[0].t < w[1].t);
        }
    }

    #[test]
    fn csv_shape_and_determinism() {
        let cfg = SweepConfig {
            t_points: 5,
            ..SweepConfig::new(Scenario::Mixed)
        };
        let rows = run_sweep(&cfg).unwrap();
        let csv1 = rows_to_csv(&rows);
        let csv2 = rows_to_csv(&run_sweep(&cfg).unwrap());
        assert_eq!(csv1, csv2);
        let lines: Vec<&str> = csv1.lines().collect();
        assert_eq!(lines.len(), 8); // header + 5 grid + 2 limit rows
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[1].starts_with("0,"));
        assert!(lines[7].starts_with("inf,"));
    }

    #[test]
    fn csv_fields_round_trip() {
        let cfg = SweepConfig {
            t_points: 4,
            ..SweepConfig::new(Scenario::AInterior)
        };
        let rows = run_sweep(&cfg).unwrap();
        let csv = rows_to_csv(&rows);
        for (line, row) in csv.lines().skip(1).zip(&rows) {
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(fields.len(), 9);
            assert_eq!(fields[0].parse::<f64>().unwrap(), row.t);
            assert_eq!(fields[3].parse::<f64>().unwrap(), row.c_l1);
            assert_eq!(fields[7].parse::<f64>().unwrap(), row.tradeoff);
        }
    }

    #[test]
    fn eval_matches_sweep_rows() {
        let cfg = SweepConfig {
            t_points: 3,
            gamma: Some(0.5),
            ..SweepConfig::new(Scenario::Abc3)
        };
        let rows = run_sweep(&cfg).unwrap();
        for row in &rows {
            let (_, r) = eval_point(cfg.scenario, row.t, cfg.omega, cfg.gamma).unwrap();
            assert_eq!(r.c_l1, row.c_l1);
            assert_eq!(r.tradeoff, row.tradeoff);
        }
    }

    #[test]
    fn config_validation() {
        let mut cfg = SweepConfig::new(Scenario::Abc3);
        cfg.t_min = 5.0;
        cfg.t_max = 1.0;
        assert!(cfg.check().is_err());
        let mut cfg = SweepConfig::new(Scenario::Abc3);
        cfg.gamma = Some(1.5);
        assert!(cfg.check().is_err());
        let mut cfg = SweepConfig::new(Scenario::Abc3);
        cfg.t_points = 1;
        assert!(cfg.check().is_err());
    }

    #[test]
    fn verify_grid_small_slice() {
        let devs = verify_grid(&[Scenario::Mixed], &[None, Some(0.5)], 5, 1.0).unwrap();
        assert_eq!(devs.len(), 2 * 7);
        for d in &devs {
            assert!(
                d.matrix_dev < 1e-12,
                "{} T={}",
                d.worst_entry,
                d.temperature
            );
            assert!(
                d.max_dev() < 1e-10,
                "{} T={}",
                d.worst_measure,
                d.temperature
            );
        }
    }
}

//! Browser bindings: the three operations behind the demo page.
//!
//! Build with `wasm-pack build --target web crates/wasm` (or
//! `cargo build -p horizonq-wasm --target wasm32-unknown-unknown` plus
//! `wasm-bindgen`). The `imp` module carries the logic and compiles
//! natively, so the bindings are covered by `cargo test --workspace`;
//! the exported wrappers only translate errors to `JsError`.

use wasm_bindgen::prelude::*;

mod imp {
    use std::str::FromStr;

    use horizonq::{eval_point, rows_to_csv, run_sweep, Scenario, SweepConfig};

    fn parse_scenario(s: &str) -> Result<Scenario, String> {
        Scenario::from_str(s)
    }

    /// `gamma < 0` means "no channel" (JS sliders cannot pass `null`
    /// through an `f64` cleanly, so the sentinel keeps the interface
    /// flat).
    fn parse_gamma(gamma: f64) -> Option<f64> {
        (gamma >= 0.0).then_some(gamma)
    }

    fn config(scenario: &str, gamma: f64) -> Result<SweepConfig, String> {
        Ok(SweepConfig {
            gamma: parse_gamma(gamma),
            ..SweepConfig::new(parse_scenario(scenario)?)
        })
    }

    pub fn eval_json(scenario: &str, t: f64, omega: f64, gamma: f64) -> Result<String, String> {
        let scenario = parse_scenario(scenario)?;
        let (params, report) =
            eval_point(scenario, t, omega, parse_gamma(gamma)).map_err(|e| e.to_string())?;
        let value = serde_json::json!({
            "scenario": scenario.label(),
            "T": if t.is_finite() { serde_json::json!(t) } else { serde_json::json!("inf") },
            "omega": omega,
            "alpha": params.alpha,
            "beta": params.beta,
            "c_l1": report.c_l1,
            "foc": report.foc,
            "gc": report.gc,
            "cf": report.cf,
            "tradeoff": report.tradeoff,
            "cf_clamped": report.cf_clamped,
        });
        Ok(value.to_string())
    }

    pub fn sweep_csv(scenario: &str, gamma: f64) -> Result<String, String> {
        let rows = run_sweep(&config(scenario, gamma)?).map_err(|e| e.to_string())?;
        Ok(rows_to_csv(&rows))
    }

    pub fn sweep_svg(scenario: &str, gamma: f64) -> Result<String, String> {
        let cfg = config(scenario, gamma)?;
        let rows = run_sweep(&cfg).map_err(|e| e.to_string())?;
        let title = match cfg.gamma {
            Some(g) => format!("{} (gamma = {g:.3})", cfg.scenario),
            None => cfg.scenario.to_string(),
        };
        Ok(horizonq::svg::render_chart(&rows, &title, cfg.t_scale))
    }
}

/// All five measures plus α, β at one point, as a JSON object.
#[wasm_bindgen]
pub fn eval_json(scenario: &str, t: f64, omega: f64, gamma: f64) -> Result<String, JsError> {
    imp::eval_json(scenario, t, omega, gamma).map_err(|e| JsError::new(&e))
}

/// A full temperature sweep as CSV text (same bytes as the CLI).
#[wasm_bindgen]
pub fn sweep_csv(scenario: &str, gamma: f64) -> Result<String, JsError> {
    imp::sweep_csv(scenario, gamma).map_err(|e| JsError::new(&e))
}

/// A full temperature sweep rendered as a self-contained SVG chart.
#[wasm_bindgen]
pub fn sweep_svg(scenario: &str, gamma: f64) -> Result<String, JsError> {
    imp::sweep_svg(scenario, gamma).map_err(|e| JsError::new(&e))
}

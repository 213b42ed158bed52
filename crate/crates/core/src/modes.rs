//! Hawking-effect mode physics: Bogoliubov coefficients and the
//! Kruskal → Schwarzschild two-mode dilation of single fermionic modes.
//!
//! Natural units (G = c = ħ = k_B = 1) throughout. The Hawking
//! temperature `T` is the primitive parameter; `T = 0` and `T = +∞` are
//! exact branch cases so limit values carry no round-off.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::cxmat::{PureState, C64};
use crate::Error;

/// Bogoliubov data for one dilated mode.
///
/// `alpha² = 1/(1+e^{−ω/T})`, `beta² = 1/(1+e^{ω/T})`, so
/// `alpha² + beta² = 1` and `alpha ≥ beta` for all `T ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeParams {
    pub temperature: f64,
    pub omega: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// Hawking temperature of a Schwarzschild black hole of mass `m`:
/// `T = 1/(8πm)`. Conversion helper only; the library is parameterized
/// by `T` directly.
pub fn temperature_from_mass(mass: f64) -> f64 {
    1.0 / (8.0 * std::f64::consts::PI * mass)
}

/// Bogoliubov coefficients for a mode of frequency `omega` at Hawking
/// temperature `t`. `t = 0` and `t = +∞` are exact limits.
pub fn bogoliubov(t: f64, omega: f64) -> Result<ModeParams, Error> {
    if omega.is_nan() || omega <= 0.0 {
        return Err(Error::FrequencyNotPositive);
    }
    if t.is_nan() || t < 0.0 {
        return Err(Error::NegativeTemperature);
    }
    let (alpha, beta) = if t == 0.0 {
        (1.0, 0.0)
    } else if t.is_infinite() {
        (FRAC_1_SQRT_2, FRAC_1_SQRT_2)
    } else {
        let x = omega / t;
        // Logistic forms: e^{x} may overflow for small t, but
        // 1/(1+inf) = 0 is the correct limit, so no special casing.
        let alpha_sq = 1.0 / (1.0 + (-x).exp());
        let beta_sq = 1.0 / (1.0 + x.exp());
        (alpha_sq.sqrt(), beta_sq.sqrt())
    };
    Ok(ModeParams {
        temperature: t,
        omega,
        alpha,
        beta,
    })
}

/// Dilate the qubit at `mode_index` (most-significant-first) into an
/// (exterior, interior) pair; the new interior qubit is inserted
/// immediately after `mode_index`.
///
/// Basis action: `|0⟩ → α|00⟩ + β|11⟩`, `|1⟩ → |10⟩`.
pub fn dilate_mode(
    psi: &PureState,
    mode_index: usize,
    params: &ModeParams,
) -> Result<PureState, Error> {
    let n = psi.n_qubits();
    if mode_index >= n {
        return Err(Error::InvalidModeIndex);
    }
    let low_bits = n - 1 - mode_index;
    let mut out = vec![C64::new(0.0, 0.0); 1 << (n + 1)];
    for b in 0..(1usize << n) {
        let amp = psi.amplitude(b);
        if amp.norm_sqr() == 0.0 {
            continue;
        }
        let hi = b >> low_bits;
        let lo = b & ((1 << low_bits) - 1);
        if hi & 1 == 0 {
            // |0⟩_K → α|0⟩_out|0⟩_in + β|1⟩_out|1⟩_in
            let i0 = ((hi << 1) << low_bits) | lo;
            let i1 = ((((hi | 1) << 1) | 1) << low_bits) | lo;
            out[i0] += amp * params.alpha;
            out[i1] += amp * params.beta;
        } else {
            // |1⟩_K → |1⟩_out|0⟩_in
            let i = ((hi << 1) << low_bits) | lo;
            out[i] += amp;
        }
    }
    PureState::new(n + 1, out)
}

/// The five-mode dilated W state over the register A,B,b,C,c: the W
/// state with Bob's and Charlie's modes each dilated near the horizon.
/// The two parameter sets are usually identical but may differ.
pub fn build_dilated_w(params_b: &ModeParams, params_c: &ModeParams) -> PureState {
    let w = crate::states::w_state();
    // A,B,C -> A,B,b,C -> A,B,b,C,c
    let once = dilate_mode(&w, 1, params_b).expect("index 1 valid for 3 qubits");
    dilate_mode(&once, 3, params_c).expect("index 3 valid for 4 qubits")
}

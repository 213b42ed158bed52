//! The W state and its three tripartite reductions.
//!
//! The canonical five-mode register is A,B,b,C,c (most significant
//! first): uppercase letters are exterior (physically accessible) modes,
//! lowercase their interior partners. Each scenario keeps three modes
//! and traces out the complementary two.

use std::str::FromStr;

use crate::cxmat::{DensityMatrix, PureState, C64};
use crate::modes::{build_dilated_w, ModeParams};
use crate::Error;

/// Which three of the five modes remain accessible.
///
/// `ABC`: all exterior. `Abc`: Alice plus both interior modes. `ABc`:
/// Alice, Bob's exterior mode, Charlie's interior mode. The state is
/// invariant under exchanging the (B,b) and (C,c) pairs, so the partner
/// scenario ACb is the same matrix as ABc; the parser accepts "ACb" as
/// an alias.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Scenario {
    #[serde(rename = "ABC")]
    Abc3,
    #[serde(rename = "Abc")]
    AInterior,
    #[serde(rename = "ABc", alias = "ACb")]
    Mixed,
}

impl Scenario {
    pub const ALL: [Scenario; 3] = [Scenario::Abc3, Scenario::AInterior, Scenario::Mixed];

    /// Register positions kept by this scenario, in canonical order.
    pub fn kept_modes(self) -> [usize; 3] {
        match self {
            Scenario::Abc3 => [0, 1, 3],      // A, B, C
            Scenario::AInterior => [0, 2, 4], // A, b, c
            Scenario::Mixed => [0, 1, 4],     // A, B, c
        }
    }

    /// Mode labels of the kept subsystems.
    pub fn mode_labels(self) -> [ModeLabel; 3] {
        match self {
            Scenario::Abc3 => [ModeLabel::A, ModeLabel::B, ModeLabel::C],
            Scenario::AInterior => [ModeLabel::A, ModeLabel::LowerB, ModeLabel::LowerC],
            Scenario::Mixed => [ModeLabel::A, ModeLabel::B, ModeLabel::LowerC],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Scenario::Abc3 => "ABC",
            Scenario::AInterior => "Abc",
            Scenario::Mixed => "ABc",
        }
    }
}

impl FromStr for Scenario {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ABC" => Ok(Scenario::Abc3),
            "Abc" => Ok(Scenario::AInterior),
            "ABc" | "ACb" => Ok(Scenario::Mixed),
            other => Err(format!(
                "unknown scenario {other:?}; expected ABC, Abc or ABc"
            )),
        }
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// One of the five register modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeLabel {
    A,
    B,
    LowerB,
    C,
    LowerC,
}

/// The tripartite W state (|001⟩ + |010⟩ + |100⟩)/√3.
pub fn w_state() -> PureState {
    let amp = C64::new(1.0 / 3.0f64.sqrt(), 0.0);
    let zero = C64::new(0.0, 0.0);
    let mut amps = vec![zero; 8];
    amps[0b001] = amp;
    amps[0b010] = amp;
    amps[0b100] = amp;
    PureState::new(3, amps).expect("W state is normalized")
}

/// Reduce the dilated five-mode state to the scenario's three modes.
///
/// Always computed numerically: build the 5-qubit pure state, form its
/// projector, partial-trace the complementary modes. The printed
/// closed-form matrices live in [`crate::closedform`] as independent
/// oracles.
pub fn reduce(scenario: Scenario, params: &ModeParams) -> Result<DensityMatrix, Error> {
    let psi = build_dilated_w(params, params);
    psi.projector().partial_trace(&scenario.kept_modes())
}

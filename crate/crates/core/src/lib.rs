//! Quantumness of a W state shared near a Schwarzschild horizon.
//!
//! Alice keeps her mode in the asymptotically flat region while Bob's and
//! Charlie's modes are dilated by the Hawking-effect Bogoliubov
//! transformation into (exterior, interior) pairs. The library builds the
//! dilated five-mode pure state, reduces it to the three tripartite
//! scenarios (all-exterior `ABC`, one-exterior `Abc`, mixed `ABc`),
//! evolves them under amplitude-damping channels, and evaluates four
//! quantumness measures plus the coherence/entanglement trade-off
//! `D² + F` for each.
//!
//! Every numeric result has an independent closed-form counterpart in
//! [`closedform`]; the two routes are cross-checked by the test suite and
//! the `verify` CLI subcommand.

pub mod channels;
pub mod closedform;
pub mod cxmat;
pub mod measures;
pub mod modes;
pub mod states;
pub mod svg;
pub mod sweep;

mod error;

pub use channels::{ad_kraus, apply_product_channel, KrausChannel};
pub use cxmat::{ComplexMatrix, DensityMatrix, PureState, C64};
pub use error::Error;
pub use measures::{full_report, MeasureReport};
pub use modes::{bogoliubov, ModeParams};
pub use states::{w_state, Scenario};
pub use sweep::{eval_point, rows_to_csv, run_sweep, SweepConfig, SweepRow, TScale};

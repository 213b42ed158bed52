//! The four quantumness measures and the trade-off quantity `D² + F`,
//! computed numerically from any tripartite density matrix.
//!
//! The concurrence-fill formula is stated for pure states; following the
//! source material it is applied verbatim to the mixed reductions via
//! `C_{i(jk)} = 2√det(ρ_i)`. A negative radicand is clamped to zero and
//! flagged (unless the magnitude is pure round-off).

use serde::Serialize;

use crate::cxmat::DensityMatrix;
use crate::Error;

/// Radicand magnitudes below this are treated as round-off, not a
/// genuine sub-threshold clamp.
const CLAMP_NOISE: f64 = 1e-12;

/// The five scalars for one state at one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasureReport {
    /// l1-norm coherence, Σ_{i≠j} |ρ_ij|.
    pub c_l1: f64,
    /// First-order coherence D, RMS of the single-qubit coherences.
    pub foc: f64,
    /// Global concurrence Q.
    pub gc: f64,
    /// Concurrence-fill F.
    pub cf: f64,
    /// D² + F.
    pub tradeoff: f64,
    /// True when the CF radicand was genuinely negative and clamped.
    pub cf_clamped: bool,
}

/// Sum of moduli of all off-diagonal entries.
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let n = m.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += m.get(i, j).norm();
            }
        }
    }
    acc
}

/// Single-qubit first-order coherence √(2 tr ρ² − 1), clamped at the
/// maximally mixed point where round-off can push the radicand below 0.
pub fn foc_single(rho: &DensityMatrix) -> Result<f64, Error> {
    if rho.dim() != 2 {
        return Err(Error::NotTwoByTwo);
    }
    Ok((2.0 * rho.purity() - 1.0).max(0.0).sqrt())
}

fn qubit_reductions(rho: &DensityMatrix) -> Result<[DensityMatrix; 3], Error> {
    if rho.subsystem_dims() != [2, 2, 2] {
        return Err(Error::DimensionMismatch {
            expected: 8,
            got: rho.dim(),
        });
    }
    Ok([rho.reduced(0)?, rho.reduced(1)?, rho.reduced(2)?])
}

/// Tripartite first-order coherence: RMS of the three single-qubit FOCs.
pub fn foc_tripartite(rho: &DensityMatrix) -> Result<f64, Error> {
    let reds = qubit_reductions(rho)?;
    let mut sum_sq = 0.0;
    for r in &reds {
        let d = foc_single(r)?;
        sum_sq += d * d;
    }
    Ok((sum_sq / 3.0).sqrt())
}

/// One-to-rest concurrence `C_{i(jk)} = 2√det(ρ_i)`.
pub fn one_to_rest_concurrence(rho: &DensityMatrix, which: usize) -> Result<f64, Error> {
    if which >= 3 {
        return Err(Error::SubsystemOutOfRange);
    }
    let reduced = rho.reduced(which)?;
    Ok(2.0 * reduced.matrix().det2()?.max(0.0).sqrt())
}

fn concurrences_squared(rho: &DensityMatrix) -> Result<[f64; 3], Error> {
    let reds = qubit_reductions(rho)?;
    let mut out = [0.0; 3];
    for (i, r) in reds.iter().enumerate() {
        out[i] = 4.0 * r.matrix().det2()?.max(0.0);
    }
    Ok(out)
}

/// Global concurrence `Q = (C²_x + C²_y + C²_z)/2`.
pub fn global_concurrence(rho: &DensityMatrix) -> Result<f64, Error> {
    let c2 = concurrences_squared(rho)?;
    Ok(0.5 * (c2[0] + c2[1] + c2[2]))
}

/// Concurrence-fill from the three one-to-rest concurrences.
///
/// Returns `(F, clamped)`: when the quartic radicand is negative the
/// value is 0, flagged unless the magnitude is below round-off scale.
pub fn concurrence_fill(rho: &DensityMatrix) -> Result<(f64, bool), Error> {
    let c2 = concurrences_squared(rho)?;
    let q = 0.5 * (c2[0] + c2[1] + c2[2]);
    Ok(fill_from_radicand(
        16.0 / 3.0 * q * (q - c2[0]) * (q - c2[1]) * (q - c2[2]),
    ))
}

/// Shared clamping convention for the CF quartic radicand; also used by
/// the closed-form route so both pipelines flag identically.
pub(crate) fn fill_from_radicand(product: f64) -> (f64, bool) {
    if product > 0.0 {
        // Fourth root as exp(ln/4); product > 0 here so ln is finite.
        ((product.ln() / 4.0).exp(), false)
    } else {
        (0.0, product < -CLAMP_NOISE)
    }
}

/// All five scalars from one pass of partial traces.
pub fn full_report(rho: &DensityMatrix) -> Result<MeasureReport, Error> {
    let reds = qubit_reductions(rho)?;
    let mut sum_sq = 0.0;
    let mut c2 = [0.0; 3];
    for (i, r) in reds.iter().enumerate() {
        let d = foc_single(r)?;
        sum_sq += d * d;
        c2[i] = 4.0 * r.matrix().det2()?.max(0.0);
    }
    let foc = (sum_sq / 3.0).sqrt();
    let gc = 0.5 * (c2[0] + c2[1] + c2[2]);
    let (cf, cf_clamped) =
        fill_from_radicand(16.0 / 3.0 * gc * (gc - c2[0]) * (gc - c2[1]) * (gc - c2[2]));
    Ok(MeasureReport {
        c_l1: l1_coherence(rho),
        foc,
        gc,
        cf,
        tradeoff: foc * foc + cf,
        cf_clamped,
    })
}

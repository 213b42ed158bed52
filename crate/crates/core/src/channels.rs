//! Amplitude-damping Kraus channels and their product application to
//! multi-qubit states.
//!
//! The product channel is generic over the number of qubits and over
//! arbitrary Kraus lists; Kraus index tuples are enumerated by
//! mixed-radix counting so the summation order is deterministic.

use crate::cxmat::{tensor, ComplexMatrix, DensityMatrix, C64};
use crate::Error;

/// A single-qubit channel given by its Kraus operators.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    operators: Vec<ComplexMatrix>,
}

impl KrausChannel {
    /// Validates the completeness relation `Σ E_k† E_k = I` (1e-12).
    pub fn new(operators: Vec<ComplexMatrix>) -> Result<Self, Error> {
        if operators.is_empty() {
            return Err(Error::InvalidDensityMatrix("empty Kraus list".into()));
        }
        let dim = operators[0].dim();
        let mut sum = ComplexMatrix::zeros(dim);
        for op in &operators {
            if op.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: op.dim(),
                });
            }
            sum = sum.add(&op.dagger().matmul(op));
        }
        if sum.max_abs_diff(&ComplexMatrix::identity(dim)) > 1e-12 {
            return Err(Error::InvalidDensityMatrix(
                "Kraus completeness violated".into(),
            ));
        }
        Ok(Self { operators })
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }
}

/// The amplitude-damping channel with decay probability `gamma`:
/// `E_0 = [[1, 0], [0, √(1−γ)]]`, `E_1 = [[0, √γ], [0, 0]]`.
pub fn ad_kraus(gamma: f64) -> Result<KrausChannel, Error> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::DampingOutOfRange);
    }
    let z = C64::new(0.0, 0.0);
    let e0 = ComplexMatrix::from_rows(
        2,
        &[
            C64::new(1.0, 0.0),
            z,
            z,
            C64::new((1.0 - gamma).sqrt(), 0.0),
        ],
    )?;
    let e1 = ComplexMatrix::from_rows(2, &[z, C64::new(gamma.sqrt(), 0.0), z, z])?;
    KrausChannel::new(vec![e0, e1])
}

/// Apply one channel per qubit: `ρ' = Σ (E_{i}⊗E_{j}⊗…) ρ (…)†`.
pub fn apply_product_channel(
    rho: &DensityMatrix,
    per_qubit: &[KrausChannel],
) -> Result<DensityMatrix, Error> {
    let n = rho.subsystem_dims().len();
    if per_qubit.len() != n || rho.subsystem_dims().iter().any(|&d| d != 2) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: per_qubit.len(),
        });
    }
    let radices: Vec<usize> = per_qubit.iter().map(|c| c.operators.len()).collect();
    let mut acc = ComplexMatrix::zeros(rho.dim());
    let mut tuple = vec![0usize; n];
    loop {
        // K = E_{tuple[0]} ⊗ E_{tuple[1]} ⊗ …
        let mut k = per_qubit[0].operators[tuple[0]].clone();
        for q in 1..n {
            k = tensor(&k, &per_qubit[q].operators[tuple[q]]);
        }
        acc = acc.add(&k.matmul(rho.matrix()).matmul(&k.dagger()));

        // mixed-radix increment, most significant qubit slowest
        let mut pos = n;
        loop {
            if pos == 0 {
                return DensityMatrix::new(acc, rho.subsystem_dims().to_vec());
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < radices[pos] {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

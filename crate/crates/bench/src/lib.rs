//! Fixtures shared by the eigen-engine benchmarks.

use pdm_dirac::discretize::{assemble_dirac, assemble_schrodinger, make_grid};
use pdm_dirac::suite::scarf_reference;
use pdm_dirac::{BlockDiracOperator, BranchLabel, Complex64, DenseMatrix, ModelSpec, TridiagonalOperator};

/// Scarf II partner operator H₊ on (−15, 15) with `n` interior points.
pub fn scarf_schrodinger(n: usize) -> TridiagonalOperator {
    let spec = scarf_reference();
    let grid = make_grid(-15.0, 15.0, n, 0.0).expect("valid grid");
    assemble_schrodinger(&spec, BranchLabel::Plus, &grid).expect("regular potential")
}

/// Periodic-model Dirac operator on (−π, π) with `n` interior points.
pub fn periodic_dirac(n: usize) -> BlockDiracOperator {
    let grid = make_grid(-std::f64::consts::PI, std::f64::consts::PI, n, 0.0).expect("valid grid");
    assemble_dirac(&ModelSpec::PeriodicPseudo, &grid).expect("regular mass")
}

/// Deterministic dense non-Hermitian matrix with O(1) entries.
pub fn dense_sample(n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(n, |i, j| {
        let t = (i * 31 + j * 17) as f64;
        Complex64::new((0.37 * t).sin(), 0.5 * (0.11 * t).cos())
    })
}

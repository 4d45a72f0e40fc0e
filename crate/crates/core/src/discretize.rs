//! Finite-difference matrices on uniform Dirichlet grids: the Schrödinger-like
//! partner operators, the 2×2-block Dirac operator and the first-order
//! intertwiner `η = −i∂ + G`.

use std::io::Write;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::eigen::{self, BandMatrix, DenseMatrix, EigenConfig, LinearOperator, SymmetricBand};
use crate::error::{domain, Result};
use crate::model::{compose_mass, partner_potential, BranchLabel, ModelSpec};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Uniform grid of `N` interior points `x_j = x_min + j·h`, `j = 1..=N`,
/// `h = (x_max − x_min)/(N + 1)`. The end points carry Dirichlet values.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub n_interior: usize,
    pub spacing: f64,
    /// Contour shift `b` (`z = x − ib`); 0 on the real line.
    pub shift: f64,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_interior: usize, shift: f64) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && x_max > x_min) {
            return domain(format!("grid interval ({x_min}, {x_max}) is degenerate"));
        }
        if n_interior < 3 {
            return domain(format!("grid needs at least 3 interior points, got {n_interior}"));
        }
        if !(shift.is_finite() && shift >= 0.0) {
            return domain(format!("contour shift must be finite and non-negative, got {shift}"));
        }
        let spacing = (x_max - x_min) / (n_interior as f64 + 1.0);
        Ok(Self { x_min, x_max, n_interior, spacing, shift })
    }

    /// Symmetric interval `(−half_width, half_width)`.
    pub fn symmetric(half_width: f64, n_interior: usize, shift: f64) -> Result<Self> {
        Self::new(-half_width, half_width, n_interior, shift)
    }

    pub fn point(&self, j: usize) -> f64 {
        self.x_min + (j as f64 + 1.0) * self.spacing
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_interior).map(|j| self.point(j)).collect()
    }

    /// Interior points are mirror images of each other about 0.
    pub fn is_symmetric(&self) -> bool {
        (self.x_min + self.x_max).abs() <= 1e-12 * (self.x_min.abs() + self.x_max.abs())
    }
}

pub fn make_grid(x_min: f64, x_max: f64, n_interior: usize, shift: f64) -> Result<Grid> {
    Grid::new(x_min, x_max, n_interior, shift)
}

/// Complex potential samples on a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledPotential {
    pub values: Vec<Complex64>,
    pub omega: Option<BranchLabel>,
    pub shift: f64,
}

fn check_shift(spec: &ModelSpec, grid: &Grid) -> Result<()> {
    let want = spec.contour_shift();
    if (grid.shift - want).abs() > 1e-12 * (1.0 + want.abs()) {
        return domain(format!(
            "grid contour shift {} does not match the shift {want} of model '{}'",
            grid.shift,
            spec.name()
        ));
    }
    Ok(())
}

/// `V_ω(x_j)` for every interior point.
pub fn sample_potential(spec: &ModelSpec, omega: BranchLabel, grid: &Grid) -> Result<SampledPotential> {
    check_shift(spec, grid)?;
    let values = grid
        .points()
        .into_iter()
        .map(|x| match partner_potential(spec, omega, x) {
            Ok(v) if v.is_finite() => Ok(v),
            _ => domain(format!("potential of '{}' is not finite at x_j = {x}", spec.name())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SampledPotential { values, omega: Some(omega), shift: grid.shift })
}

/// `−D₂ + diag(V)` with off-diagonals `−1/h²`. Complex symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalOperator {
    pub diagonal: Vec<Complex64>,
    pub off_diagonal: Vec<Complex64>,
    pub grid: Grid,
    pub label: String,
}

impl TridiagonalOperator {
    /// Operator for an arbitrary potential sampled on `grid`.
    pub fn with_potential(grid: Grid, potential: &[Complex64], label: impl Into<String>) -> Result<Self> {
        if potential.len() != grid.n_interior {
            return domain(format!("{} potential samples for {} grid points", potential.len(), grid.n_interior));
        }
        if let Some(j) = potential.iter().position(|v| !v.is_finite()) {
            return domain(format!("potential is not finite at x_j = {}", grid.point(j)));
        }
        let h2 = grid.spacing * grid.spacing;
        Ok(Self {
            diagonal: potential.iter().map(|v| v + 2.0 / h2).collect(),
            off_diagonal: vec![Complex64::new(-1.0 / h2, 0.0); grid.n_interior - 1],
            grid,
            label: label.into(),
        })
    }

    pub fn to_band(&self) -> BandMatrix {
        BandMatrix::tridiagonal(&self.off_diagonal, &self.diagonal, &self.off_diagonal)
    }

    /// The potential part `diag − 2/h²`.
    pub fn potential(&self) -> Vec<Complex64> {
        let h2 = self.grid.spacing * self.grid.spacing;
        self.diagonal.iter().map(|d| d - 2.0 / h2).collect()
    }
}

pub fn assemble_schrodinger(spec: &ModelSpec, omega: BranchLabel, grid: &Grid) -> Result<TridiagonalOperator> {
    let v = sample_potential(spec, omega, grid)?;
    TridiagonalOperator::with_potential(*grid, &v.values, format!("schrodinger {} omega={omega}", spec.name()))
}

impl LinearOperator for TridiagonalOperator {
    fn dim(&self) -> usize {
        self.diagonal.len()
    }

    fn entry(&self, i: usize, j: usize) -> Complex64 {
        if i == j {
            self.diagonal[i]
        } else if i == j + 1 {
            self.off_diagonal[j]
        } else if j == i + 1 {
            self.off_diagonal[i]
        } else {
            ZERO
        }
    }

    fn bandwidths(&self) -> (usize, usize) {
        (1, 1)
    }

    fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.diagonal.len();
        (0..n)
            .map(|i| {
                let mut s = self.diagonal[i] * x[i];
                if i > 0 {
                    s += self.off_diagonal[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    s += self.off_diagonal[i] * x[i + 1];
                }
                s
            })
            .collect()
    }

    fn descriptor(&self) -> String {
        format!("{} N={}", self.label, self.diagonal.len())
    }

    fn band_form(&self) -> (BandMatrix, Option<Vec<usize>>) {
        (self.to_band(), None)
    }

    fn raw_eigenvalues(&self, cfg: &EigenConfig) -> Result<Vec<Complex64>> {
        eigen::tridiagonal_eigenvalues(&self.diagonal, &self.off_diagonal, cfg, || self.to_band().to_dense())
    }
}

/// `[[0, −D₁ + M], [D₁ + M, 0]]` acting on `(ψ₊, ψ₋)`, with central
/// differences `D₁` and Dirichlet ends. Complex symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockDiracOperator {
    pub mass: Vec<Complex64>,
    pub grid: Grid,
    pub label: String,
}

impl BlockDiracOperator {
    pub fn with_mass(grid: Grid, mass: &[Complex64], label: impl Into<String>) -> Result<Self> {
        if mass.len() != grid.n_interior {
            return domain(format!("{} mass samples for {} grid points", mass.len(), grid.n_interior));
        }
        if let Some(j) = mass.iter().position(|v| !v.is_finite()) {
            return domain(format!("mass is not finite at x_j = {}", grid.point(j)));
        }
        Ok(Self { mass: mass.to_vec(), grid, label: label.into() })
    }

    pub fn n_interior(&self) -> usize {
        self.mass.len()
    }

    fn half_inv_h(&self) -> f64 {
        0.5 / self.grid.spacing
    }

    /// `(−D₁ + M) ψ₋`.
    pub fn lower_to_upper(&self, psi_minus: &[Complex64]) -> Vec<Complex64> {
        self.first_order(psi_minus, -1.0)
    }

    /// `(D₁ + M) ψ₊`.
    pub fn upper_to_lower(&self, psi_plus: &[Complex64]) -> Vec<Complex64> {
        self.first_order(psi_plus, 1.0)
    }

    fn first_order(&self, v: &[Complex64], sign: f64) -> Vec<Complex64> {
        let n = self.mass.len();
        let k = sign * self.half_inv_h();
        (0..n)
            .map(|i| {
                let right = if i + 1 < n { v[i + 1] } else { ZERO };
                let left = if i > 0 { v[i - 1] } else { ZERO };
                k * (right - left) + self.mass[i] * v[i]
            })
            .collect()
    }

    /// Interleaved ordering `(ψ₊₁, ψ₋₁, ψ₊₂, …)` as a symmetric band of width 3.
    fn interleaved(&self) -> SymmetricBand {
        let n = self.mass.len();
        let mut band = SymmetricBand::zeros(2 * n, 3);
        let k = self.half_inv_h();
        for i in 0..n {
            // row ψ₊ᵢ, column ψ₋ⱼ holds (−D₁ + M)ᵢⱼ
            band.set(2 * i + 1, 2 * i, self.mass[i]);
            if i + 1 < n {
                band.set(2 * (i + 1) + 1, 2 * i, Complex64::new(-k, 0.0));
                band.set(2 * (i + 1), 2 * i + 1, Complex64::new(k, 0.0));
            }
        }
        band
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_fn(2 * self.mass.len(), |i, j| self.entry(i, j))
    }

    /// `(−D₁ + M)(D₁ + M)`, the upper block of the squared operator. It is
    /// complex symmetric and pentadiagonal; the lower block `(D₁ + M)(−D₁ + M)`
    /// shares its spectrum.
    pub fn squared_upper(&self) -> BandMatrix {
        let n = self.mass.len();
        let k = self.half_inv_h();
        let first_order = |sign: f64, i: usize, j: usize| -> Complex64 {
            if i == j {
                self.mass[i]
            } else if j == i + 1 {
                Complex64::new(sign * k, 0.0)
            } else if i == j + 1 {
                Complex64::new(-sign * k, 0.0)
            } else {
                ZERO
            }
        };
        let mut out = BandMatrix::zeros(n, 2, 2);
        for i in 0..n {
            for j in i.saturating_sub(2)..=(i + 2).min(n - 1) {
                let lo = i.max(j).saturating_sub(1);
                let hi = (i.min(j) + 1).min(n - 1);
                let v: Complex64 = (lo..=hi).map(|l| first_order(-1.0, i, l) * first_order(1.0, l, j)).sum();
                out.set(i, j, v);
            }
        }
        out
    }
}

pub fn assemble_dirac(spec: &ModelSpec, grid: &Grid) -> Result<BlockDiracOperator> {
    check_shift(spec, grid)?;
    let mass = grid
        .points()
        .into_iter()
        .map(|x| match compose_mass(spec, x) {
            Ok(m) if m.is_finite() => Ok(m),
            _ => domain(format!("mass of '{}' is not finite at x_j = {x}", spec.name())),
        })
        .collect::<Result<Vec<_>>>()?;
    BlockDiracOperator::with_mass(*grid, &mass, format!("dirac {}", spec.name()))
}

impl LinearOperator for BlockDiracOperator {
    fn dim(&self) -> usize {
        2 * self.mass.len()
    }

    fn entry(&self, i: usize, j: usize) -> Complex64 {
        let n = self.mass.len();
        let k = self.half_inv_h();
        let (upper_row, r) = if i < n { (true, i) } else { (false, i - n) };
        let (upper_col, c) = if j < n { (true, j) } else { (false, j - n) };
        if upper_row == upper_col {
            return ZERO;
        }
        // top-right −D₁ + M, bottom-left D₁ + M
        let sign = if upper_row { -1.0 } else { 1.0 };
        if r == c {
            self.mass[r]
        } else if c == r + 1 {
            Complex64::new(sign * k, 0.0)
        } else if r == c + 1 {
            Complex64::new(-sign * k, 0.0)
        } else {
            ZERO
        }
    }

    fn bandwidths(&self) -> (usize, usize) {
        let n = self.mass.len();
        (n + 1, n + 1)
    }

    fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.mass.len();
        let (plus, minus) = x.split_at(n);
        let mut out = self.lower_to_upper(minus);
        out.extend(self.upper_to_lower(plus));
        out
    }

    fn descriptor(&self) -> String {
        format!("{} 2N={}", self.label, 2 * self.mass.len())
    }

    fn norm_inf(&self) -> f64 {
        let k = self.half_inv_h();
        self.mass.iter().map(|m| m.norm() + 2.0 * k).fold(0.0, f64::max)
    }

    fn band_form(&self) -> (BandMatrix, Option<Vec<usize>>) {
        let n = self.mass.len();
        let sym = self.interleaved();
        let mut band = BandMatrix::zeros(2 * n, 3, 3);
        for i in 0..2 * n {
            for j in band.row_range(i) {
                band.set(i, j, sym.get(i, j));
            }
        }
        let perm = (0..2 * n).map(|k| if k % 2 == 0 { k / 2 } else { n + k / 2 }).collect();
        (band, Some(perm))
    }

    fn raw_eigenvalues(&self, cfg: &EigenConfig) -> Result<Vec<Complex64>> {
        match eigen::reduce_symmetric_band(&self.interleaved(), cfg) {
            Some((d, e)) => eigen::tridiagonal_eigenvalues(&d, &e, cfg, || self.to_dense()),
            None => {
                // The operator squares to diag(AB, BA) and anticommutes with
                // diag(1, −1), so its spectrum is ±√σ(AB).
                let mu = eigen::band_eigenvalues(&self.squared_upper(), cfg)?;
                Ok(mu.into_iter().flat_map(|m| [m.sqrt(), -m.sqrt()]).collect())
            }
        }
    }
}

/// `η = −iD₁ + diag(G(x_j))`; Hermitian for real `G`.
pub fn assemble_intertwiner(g: impl Fn(f64) -> f64, grid: &Grid) -> BandMatrix {
    let n = grid.n_interior;
    let k = 0.5 / grid.spacing;
    let diag: Vec<Complex64> = grid.points().into_iter().map(|x| Complex64::new(g(x), 0.0)).collect();
    let upper = vec![-I * k; n - 1];
    let lower = vec![I * k; n - 1];
    BandMatrix::tridiagonal(&lower, &diag, &upper)
}

/// Matrix-market style dump: a header, `rows cols nnz`, then
/// `row col re im` (1-based) per nonzero entry.
pub fn write_matrix_market(op: &(impl LinearOperator + ?Sized), mut out: impl Write) -> std::io::Result<()> {
    let n = op.dim();
    let (kl, ku) = op.bandwidths();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i.saturating_sub(kl)..(i + ku + 1).min(n) {
            let v = op.entry(i, j);
            if v != ZERO {
                entries.push((i, j, v));
            }
        }
    }
    writeln!(out, "%%MatrixMarket matrix coordinate complex general")?;
    writeln!(out, "% {}", op.descriptor())?;
    writeln!(out, "{n} {n} {}", entries.len())?;
    for (i, j, v) in entries {
        writeln!(out, "{} {} {:.17e} {:.17e}", i + 1, j + 1, v.re, v.im)?;
    }
    Ok(())
}

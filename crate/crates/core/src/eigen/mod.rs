//! Complex eigenvalue engine.
//!
//! Complex symmetric operators (the Schrödinger-like tridiagonals and the
//! interleaved Dirac band) go through complex-orthogonal band reduction and
//! implicit tridiagonal QR, O(n²) overall. Anything else, and any symmetric
//! solve whose rotations grow too large, uses Householder Hessenberg reduction
//! plus unitary shifted QR. Eigenvectors come from banded inverse iteration.

mod band;
mod hessenberg;
mod lu;
mod matrix;
mod tridiag;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
pub(crate) use band::SymmetricBand;
pub use matrix::{BandMatrix, DenseMatrix};
use tridiag::QrFailure;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenConfig {
    /// Largest accepted matrix dimension.
    pub max_dim: usize,
    /// QR step budget per unit of dimension.
    pub iteration_factor: usize,
    /// Relative subdiagonal size below which a block deflates.
    pub deflation_tol: f64,
    /// Largest accepted norm growth of a complex orthogonal rotation.
    pub max_rotation_growth: f64,
}

impl Default for EigenConfig {
    fn default() -> Self {
        Self {
            max_dim: 6000,
            iteration_factor: 50,
            deflation_tol: 1e-14,
            max_rotation_growth: 1e4,
        }
    }
}

/// Eigenvalues sorted by real part, then imaginary part (stable).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<Complex64>,
    /// `‖Hv − λv‖₂ / ‖v‖₂` per eigenvalue, when eigenvectors were computed.
    pub residuals: Option<Vec<f64>>,
    pub source: String,
}

impl Spectrum {
    pub fn new(mut eigenvalues: Vec<Complex64>, source: impl Into<String>) -> Self {
        sort_canonical(&mut eigenvalues);
        Self { eigenvalues, residuals: None, source: source.into() }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Eigenvalues whose real part lies below `cutoff`.
    pub fn below(&self, cutoff: f64) -> Vec<Complex64> {
        self.eigenvalues.iter().copied().filter(|z| z.re < cutoff).collect()
    }
}

pub fn sort_canonical(values: &mut [Complex64]) {
    values.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// A square complex matrix the engine can solve.
pub trait LinearOperator {
    fn dim(&self) -> usize;

    fn entry(&self, i: usize, j: usize) -> Complex64;

    /// `(sub, super)` bandwidths in the natural ordering.
    fn bandwidths(&self) -> (usize, usize);

    fn apply(&self, x: &[Complex64]) -> Vec<Complex64>;

    fn descriptor(&self) -> String;

    /// Maximum absolute row sum.
    fn norm_inf(&self) -> f64 {
        let n = self.dim();
        let (kl, ku) = self.bandwidths();
        (0..n)
            .map(|i| (i.saturating_sub(kl)..(i + ku + 1).min(n)).map(|j| self.entry(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// A band form `P A Pᵀ` for direct solves; `perm[k]` is the original
    /// index of band row `k` (`None` for the identity).
    fn band_form(&self) -> (BandMatrix, Option<Vec<usize>>) {
        let n = self.dim();
        let (kl, ku) = self.bandwidths();
        let mut b = BandMatrix::zeros(n, kl, ku);
        for i in 0..n {
            for j in b.row_range(i) {
                b.set(i, j, self.entry(i, j));
            }
        }
        (b, None)
    }

    /// Unsorted eigenvalues.
    fn raw_eigenvalues(&self, cfg: &EigenConfig) -> Result<Vec<Complex64>> {
        let (band, _) = self.band_form();
        band_eigenvalues(&band, cfg)
    }
}

impl LinearOperator for DenseMatrix {
    fn dim(&self) -> usize {
        DenseMatrix::dim(self)
    }

    fn entry(&self, i: usize, j: usize) -> Complex64 {
        self[(i, j)]
    }

    fn bandwidths(&self) -> (usize, usize) {
        let n = DenseMatrix::dim(self).saturating_sub(1);
        (n, n)
    }

    fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        DenseMatrix::apply(self, x)
    }

    fn descriptor(&self) -> String {
        format!("dense {0}x{0}", DenseMatrix::dim(self))
    }

    fn norm_inf(&self) -> f64 {
        DenseMatrix::norm_inf(self)
    }

    fn raw_eigenvalues(&self, cfg: &EigenConfig) -> Result<Vec<Complex64>> {
        hessenberg::eigenvalues(self.clone(), cfg)
    }
}

impl LinearOperator for BandMatrix {
    fn dim(&self) -> usize {
        BandMatrix::dim(self)
    }

    fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.get(i, j)
    }

    fn bandwidths(&self) -> (usize, usize) {
        BandMatrix::bandwidths(self)
    }

    fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        BandMatrix::apply(self, x)
    }

    fn descriptor(&self) -> String {
        let (kl, ku) = BandMatrix::bandwidths(self);
        format!("band {0}x{0} ({kl}, {ku})", BandMatrix::dim(self))
    }

    fn norm_inf(&self) -> f64 {
        BandMatrix::norm_inf(self)
    }

    fn band_form(&self) -> (BandMatrix, Option<Vec<usize>>) {
        (self.clone(), None)
    }
}

/// Symmetric band path when the matrix is complex symmetric, dense otherwise.
pub(crate) fn band_eigenvalues(band: &BandMatrix, cfg: &EigenConfig) -> Result<Vec<Complex64>> {
    let n = band.dim();
    let (kl, ku) = band.bandwidths();
    if kl == ku && kl < n / 4 + 1 && band.is_complex_symmetric() {
        let mut sym = SymmetricBand::zeros(n, kl);
        for i in 0..n {
            for j in i.saturating_sub(kl)..=i {
                sym.set(i, j, band.get(i, j));
            }
        }
        return symmetric_band_eigenvalues(sym, cfg, || band.to_dense());
    }
    hessenberg::eigenvalues(band.to_dense(), cfg)
}

/// Growth relaxation applied on the second round of reduction attempts.
const GROWTH_RELAXATION: f64 = 100.0;

/// Tridiagonal form of `sym`. Near-isotropic rotations depend on the
/// elimination order, so the reversed ordering is tried before the growth
/// limit is relaxed once.
pub(crate) fn reduce_symmetric_band(sym: &SymmetricBand, cfg: &EigenConfig) -> Option<(Vec<Complex64>, Vec<Complex64>)> {
    for limit in [cfg.max_rotation_growth, cfg.max_rotation_growth * GROWTH_RELAXATION] {
        if let Some(t) = sym.clone().tridiagonalize(limit) {
            return Some(t);
        }
        if let Some((mut d, mut e)) = sym.reversed().tridiagonalize(limit) {
            d.reverse();
            e.reverse();
            return Some((d, e));
        }
    }
    None
}

/// Reduce, then run tridiagonal QR; falls back to the dense path built by
/// `dense` when a complex orthogonal rotation breaks down.
pub(crate) fn symmetric_band_eigenvalues(
    sym: SymmetricBand,
    cfg: &EigenConfig,
    dense: impl FnOnce() -> DenseMatrix,
) -> Result<Vec<Complex64>> {
    match reduce_symmetric_band(&sym, cfg) {
        Some((d, e)) => tridiagonal_eigenvalues(&d, &e, cfg, dense),
        None => hessenberg::eigenvalues(dense(), cfg),
    }
}

pub(crate) fn tridiagonal_eigenvalues(
    diag: &[Complex64],
    off: &[Complex64],
    cfg: &EigenConfig,
    dense: impl FnOnce() -> DenseMatrix,
) -> Result<Vec<Complex64>> {
    match tridiag::symmetric_tridiagonal_eigenvalues(diag, off, cfg) {
        Ok(v) => Ok(v),
        Err(QrFailure::Breakdown) => hessenberg::eigenvalues(dense(), cfg),
        Err(QrFailure::Budget { iterations, partial }) => {
            Err(Error::Convergence { iterations, size: diag.len(), partial })
        }
    }
}

fn check_input(op: &(impl LinearOperator + ?Sized), cfg: &EigenConfig) -> Result<()> {
    let n = op.dim();
    if n > cfg.max_dim {
        return Err(Error::Capacity { size: n, cap: cfg.max_dim });
    }
    if !op.norm_inf().is_finite() {
        return domain(format!("{} has non-finite entries", op.descriptor()));
    }
    Ok(())
}

/// All eigenvalues, canonically sorted.
pub fn eigenvalues(op: &(impl LinearOperator + ?Sized), cfg: &EigenConfig) -> Result<Spectrum> {
    check_input(op, cfg)?;
    let values = op.raw_eigenvalues(cfg)?;
    Ok(Spectrum::new(values, op.descriptor()))
}

fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `‖Av − λv‖₂ / ‖v‖₂`.
pub fn residual(op: &(impl LinearOperator + ?Sized), lambda: Complex64, v: &[Complex64]) -> f64 {
    let av = op.apply(v);
    let r: Vec<Complex64> = av.iter().zip(v).map(|(a, x)| a - lambda * x).collect();
    norm2(&r) / norm2(v)
}

/// Result of inverse iteration.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub value: Complex64,
    /// Unit 2-norm, phase fixed so the largest component is real positive.
    pub vector: Vec<Complex64>,
    pub residual: f64,
}

const MAX_INVERSE_ITERATIONS: usize = 100;

/// Inverse iteration from the shift `lambda`, with Rayleigh refinement once
/// the fixed shift stalls. Converged when the residual is at most
/// `1e-8·‖op‖`.
pub fn eigenvector(op: &(impl LinearOperator + ?Sized), lambda: Complex64, cfg: &EigenConfig) -> Result<EigenPair> {
    check_input(op, cfg)?;
    let n = op.dim();
    if n == 0 {
        return domain("eigenvector of an empty operator");
    }
    let norm = op.norm_inf().max(f64::MIN_POSITIVE);
    let target = 1e-8 * norm;
    let (band, perm) = op.band_form();
    let from_band = |v: &[Complex64]| match &perm {
        Some(p) => {
            let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
            for (k, &orig) in p.iter().enumerate() {
                out[orig] = v[k];
            }
            out
        }
        None => v.to_vec(),
    };

    let mut shift = lambda;
    let mut lu = lu::BandLu::factor(&band, shift, 1e-12 * norm);
    let mut v: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(1.0 + 0.37 * ((i as f64) * 0.71).sin(), 0.13 * ((i as f64) * 1.3).cos()))
        .collect();
    let scale = norm2(&v);
    v.iter_mut().for_each(|z| *z /= scale);
    let mut best: Option<EigenPair> = None;
    let mut since_refactor = 0;
    for _ in 0..MAX_INVERSE_ITERATIONS {
        let mut w = lu.solve(&v);
        let wn = norm2(&w);
        if !wn.is_finite() || wn == 0.0 {
            break;
        }
        w.iter_mut().for_each(|z| *z /= wn);
        v = w;
        let x = from_band(&v);
        let ax = op.apply(&x);
        let rq: Complex64 = x.iter().zip(&ax).map(|(a, b)| a.conj() * b).sum();
        let res = residual(op, rq, &x);
        if best.as_ref().is_none_or(|b| res < b.residual) {
            best = Some(EigenPair { value: rq, vector: x, residual: res });
        }
        if res <= target {
            break;
        }
        since_refactor += 1;
        if since_refactor >= 4 {
            shift = rq;
            lu = lu::BandLu::factor(&band, shift, 1e-12 * norm);
            since_refactor = 0;
        }
    }
    match best {
        Some(mut pair) if pair.residual <= target => {
            fix_phase(&mut pair.vector);
            Ok(pair)
        }
        Some(pair) => Err(Error::Convergence { iterations: MAX_INVERSE_ITERATIONS, size: n, partial: vec![pair.value] }),
        None => Err(Error::Convergence { iterations: 0, size: n, partial: Vec::new() }),
    }
}

/// Attach `‖Av − λv‖₂/‖v‖₂` certificates from inverse iteration to the
/// eigenvalues selected by `keep`. Unselected or unconverged entries are NaN.
pub fn certify_residuals(
    op: &(impl LinearOperator + ?Sized),
    spectrum: &mut Spectrum,
    keep: impl Fn(Complex64) -> bool,
    cfg: &EigenConfig,
) {
    let residuals = spectrum
        .eigenvalues
        .iter()
        .map(|&lambda| {
            if !keep(lambda) {
                return f64::NAN;
            }
            eigenvector(op, lambda, cfg).map_or(f64::NAN, |pair| residual(op, lambda, &pair.vector))
        })
        .collect();
    spectrum.residuals = Some(residuals);
}

fn fix_phase(v: &mut [Complex64]) {
    let Some(big) = v.iter().copied().max_by(|a, b| a.norm().total_cmp(&b.norm())) else {
        return;
    };
    if big.norm() > 0.0 {
        let phase = big.conj() / big.norm();
        v.iter_mut().for_each(|z| *z *= phase);
    }
}

/// Entrywise `max |a_ij − conj(a_ji)|`.
pub fn hermitian_check(op: &(impl LinearOperator + ?Sized)) -> f64 {
    let n = op.dim();
    let (kl, ku) = op.bandwidths();
    let w = kl.max(ku);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i.saturating_sub(w)..(i + w + 1).min(n) {
            worst = worst.max((op.entry(i, j) - op.entry(j, i).conj()).norm());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_matrix_sorted() {
        let m = DenseMatrix::from_diagonal(&[c(1.0, 0.0), c(2.0, 1.0), c(-3.0, 0.0)]);
        let s = eigenvalues(&m, &EigenConfig::default()).unwrap();
        assert_eq!(s.eigenvalues, vec![c(-3.0, 0.0), c(1.0, 0.0), c(2.0, 1.0)]);
    }

    #[test]
    fn capacity_is_enforced() {
        let m = DenseMatrix::identity(5);
        let cfg = EigenConfig { max_dim: 4, ..EigenConfig::default() };
        assert!(matches!(eigenvalues(&m, &cfg), Err(Error::Capacity { size: 5, cap: 4 })));
    }

    #[test]
    fn inverse_iteration_examples() {
        let cfg = EigenConfig::default();
        let d = DenseMatrix::from_diagonal(&[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
        let p = eigenvector(&d, c(2.0, 0.0), &cfg).unwrap();
        assert!((p.value - c(2.0, 0.0)).norm() < 1e-12);
        assert!((p.vector[1].norm() - 1.0).abs() < 1e-12);

        let t = BandMatrix::tridiagonal(&[c(-1.0, 0.0); 2], &[c(2.0, 0.0); 3], &[c(-1.0, 0.0); 2]);
        let p = eigenvector(&t, c(2.0, 0.0), &cfg).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((p.vector[0].norm() - r).abs() < 1e-10);
        assert!(p.vector[1].norm() < 1e-10);
        assert!((p.vector[0] + p.vector[2]).norm() < 1e-10);
    }

    #[test]
    fn hermitian_check_of_symmetric_and_skew() {
        let t = BandMatrix::tridiagonal(&[c(1.0, 0.0); 3], &[c(0.5, 0.0); 4], &[c(1.0, 0.0); 3]);
        assert_eq!(hermitian_check(&t), 0.0);
        let k = BandMatrix::tridiagonal(&[c(0.0, 1.0); 3], &[c(0.0, 0.0); 4], &[c(0.0, 1.0); 3]);
        assert_eq!(hermitian_check(&k), 2.0);
    }

    #[test]
    fn band_path_agrees_with_dense_path() {
        let n = 30;
        let mut b = BandMatrix::zeros(n, 3, 3);
        for i in 0..n {
            for j in b.row_range(i) {
                let (lo, hi) = (i.min(j) as f64, i.max(j) as f64);
                b.set(i, j, c((0.4 * lo + hi).sin(), 0.2 * (lo - 0.3 * hi).cos()));
            }
        }
        assert!(b.is_complex_symmetric());
        let cfg = EigenConfig::default();
        let fast = eigenvalues(&b, &cfg).unwrap();
        let slow = Spectrum::new(hessenberg::eigenvalues(b.to_dense(), &cfg).unwrap(), "dense");
        for (x, y) in fast.eigenvalues.iter().zip(&slow.eigenvalues) {
            assert!((x - y).norm() < 1e-10, "{x} vs {y}");
        }
    }
}

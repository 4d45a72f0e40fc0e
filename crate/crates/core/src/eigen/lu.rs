//! Banded LU factorization with partial pivoting, used by inverse iteration.

use num_complex::Complex64;

use super::matrix::BandMatrix;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Factors of `P A = L U`. Each row keeps columns `i − kl ..= i + ku + kl`
/// so pivoting fill-in fits.
pub(crate) struct BandLu {
    n: usize,
    kl: usize,
    width: usize,
    rows: Vec<Complex64>,
    pivots: Vec<usize>,
    multipliers: Vec<Complex64>,
}

impl BandLu {
    fn idx(&self, i: usize, j: usize) -> usize {
        i * self.width + (j + self.kl - i)
    }

    /// Factor `A − shift·I`. Zero pivots are replaced by `tiny`.
    pub(crate) fn factor(a: &BandMatrix, shift: Complex64, tiny: f64) -> Self {
        let n = a.dim();
        let (kl, ku) = a.bandwidths();
        let width = 2 * kl + ku + 1;
        let mut lu = Self {
            n,
            kl,
            width,
            rows: vec![ZERO; n * width],
            pivots: vec![0; n],
            multipliers: vec![ZERO; n * kl.max(1)],
        };
        for i in 0..n {
            for j in a.row_range(i) {
                let k = lu.idx(i, j);
                lu.rows[k] = a.get(i, j);
            }
            let k = lu.idx(i, i);
            lu.rows[k] -= shift;
        }
        for k in 0..n {
            let last_row = (k + kl).min(n - 1);
            let last_col = (k + ku + kl).min(n - 1);
            let mut p = k;
            let mut best = lu.rows[lu.idx(k, k)].norm();
            for i in k + 1..=last_row {
                let v = lu.rows[lu.idx(i, k)].norm();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            lu.pivots[k] = p;
            if p != k {
                for j in k..=last_col {
                    let (a1, a2) = (lu.idx(k, j), lu.idx(p, j));
                    lu.rows.swap(a1, a2);
                }
            }
            let kk = lu.idx(k, k);
            if lu.rows[kk].norm() == 0.0 {
                lu.rows[kk] = Complex64::new(tiny, 0.0);
            }
            let pivot = lu.rows[kk];
            for i in k + 1..=last_row {
                let ik = lu.idx(i, k);
                let m = lu.rows[ik] / pivot;
                lu.rows[ik] = ZERO;
                lu.multipliers[k * kl.max(1) + (i - k - 1)] = m;
                if m == ZERO {
                    continue;
                }
                for j in k + 1..=last_col {
                    let (ij, kj) = (lu.idx(i, j), lu.idx(k, j));
                    let u = lu.rows[kj];
                    lu.rows[ij] -= m * u;
                }
            }
        }
        lu
    }

    pub(crate) fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let kl = self.kl;
        let mut x = b.to_vec();
        for k in 0..n {
            let p = self.pivots[k];
            if p != k {
                x.swap(k, p);
            }
            let xk = x[k];
            for i in k + 1..=(k + kl).min(n - 1) {
                x[i] -= self.multipliers[k * kl.max(1) + (i - k - 1)] * xk;
            }
        }
        let ku_total = self.width - kl - 1;
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..=(i + ku_total).min(n - 1) {
                s -= self.rows[self.idx(i, j)] * x[j];
            }
            x[i] = s / self.rows[self.idx(i, i)];
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_banded_system_with_pivoting() {
        let n = 9;
        let mut a = BandMatrix::zeros(n, 2, 1);
        for i in 0..n {
            for j in a.row_range(i) {
                let v = Complex64::new(((i * 7 + j * 3) % 5) as f64 - 2.0, 0.3 * (i as f64 - j as f64));
                a.set(i, j, v);
            }
        }
        a.set(0, 0, ZERO);
        let x: Vec<Complex64> = (0..n).map(|i| Complex64::new(i as f64, 1.0 - i as f64)).collect();
        let shift = Complex64::new(0.5, -0.25);
        let mut b = a.apply(&x);
        for (bi, xi) in b.iter_mut().zip(&x) {
            *bi -= shift * xi;
        }
        let got = BandLu::factor(&a, shift, 1e-300).solve(&b);
        for (g, w) in got.iter().zip(&x) {
            assert!((g - w).norm() < 1e-10, "{g} vs {w}");
        }
    }
}

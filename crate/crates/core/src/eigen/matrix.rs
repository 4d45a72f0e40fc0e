//! Minimal dense and banded complex matrix containers.

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Row-major dense square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn from_diagonal(d: &[Complex64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &DenseMatrix) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

/// General band matrix with `kl` sub- and `ku` super-diagonals, stored row by row.
#[derive(Clone, Debug, PartialEq)]
pub struct BandMatrix {
    n: usize,
    kl: usize,
    ku: usize,
    data: Vec<Complex64>,
}

impl BandMatrix {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        Self { n, kl, ku, data: vec![ZERO; n * (kl + ku + 1)] }
    }

    /// Tridiagonal matrix from its three diagonals.
    pub fn tridiagonal(lower: &[Complex64], diag: &[Complex64], upper: &[Complex64]) -> Self {
        let n = diag.len();
        assert!(lower.len() + 1 == n.max(1) && upper.len() + 1 == n.max(1));
        let mut m = Self::zeros(n, 1, 1);
        for i in 0..n {
            m.set(i, i, diag[i]);
            if i + 1 < n {
                m.set(i + 1, i, lower[i]);
                m.set(i, i + 1, upper[i]);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn bandwidths(&self) -> (usize, usize) {
        (self.kl, self.ku)
    }

    fn in_band(&self, i: usize, j: usize) -> bool {
        j + self.kl >= i && j <= i + self.ku
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        if i < self.n && j < self.n && self.in_band(i, j) {
            self.data[i * (self.kl + self.ku + 1) + j + self.kl - i]
        } else {
            ZERO
        }
    }

    /// Panics if `(i, j)` lies outside the band.
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        assert!(self.in_band(i, j), "({i}, {j}) outside band ({}, {})", self.kl, self.ku);
        let w = self.kl + self.ku + 1;
        self.data[i * w + j + self.kl - i] = v;
    }

    /// Column range of row `i` that may hold nonzeros.
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        i.saturating_sub(self.kl)..(i + self.ku + 1).min(self.n)
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| self.row_range(i).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    pub fn matmul(&self, other: &BandMatrix) -> BandMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = BandMatrix::zeros(n, (self.kl + other.kl).min(n.saturating_sub(1)), (self.ku + other.ku).min(n.saturating_sub(1)));
        for i in 0..n {
            for k in self.row_range(i) {
                let a = self.get(i, k);
                for j in other.row_range(k) {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + a * other.get(k, j));
                }
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> BandMatrix {
        let mut out = BandMatrix::zeros(self.n, self.ku, self.kl);
        for i in 0..self.n {
            for j in self.row_range(i) {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// `self − other`, widening the band as needed.
    pub fn sub(&self, other: &BandMatrix) -> BandMatrix {
        assert_eq!(self.n, other.n);
        let mut out = BandMatrix::zeros(self.n, self.kl.max(other.kl), self.ku.max(other.ku));
        for i in 0..self.n {
            for j in self.row_range(i) {
                out.set(i, j, self.get(i, j));
            }
            for j in other.row_range(i) {
                let cur = out.get(i, j);
                out.set(i, j, cur - other.get(i, j));
            }
        }
        out
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.n, |i, j| self.get(i, j))
    }

    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row_range(i).map(|j| self.get(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Exact complex symmetry `A = Aᵀ`.
    pub fn is_complex_symmetric(&self) -> bool {
        (0..self.n).all(|i| self.row_range(i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn band_product_matches_dense() {
        let a = BandMatrix::tridiagonal(
            &[c(1.0, 0.5), c(-2.0, 0.0), c(0.3, 0.1)],
            &[c(4.0, 0.0), c(1.0, 1.0), c(-1.0, 0.0), c(2.0, -3.0)],
            &[c(0.0, 1.0), c(5.0, 0.0), c(1.5, 0.0)],
        );
        let b = a.conj_transpose();
        let dense = a.to_dense().matmul(&b.to_dense());
        let band = a.matmul(&b).to_dense();
        for i in 0..4 {
            for j in 0..4 {
                assert!((dense[(i, j)] - band[(i, j)]).norm() < 1e-14);
            }
        }
        let x = [c(1.0, 0.0), c(0.0, 2.0), c(-1.0, 1.0), c(0.5, 0.0)];
        let y1 = a.apply(&x);
        let y2 = a.to_dense().apply(&x);
        for (u, v) in y1.iter().zip(&y2) {
            assert!((u - v).norm() < 1e-14);
        }
        assert!(!a.is_complex_symmetric());
        assert!(a.sub(&a).norm_inf() == 0.0);
    }
}

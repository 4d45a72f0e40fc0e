//! Reduction of a complex symmetric band matrix to tridiagonal form by
//! bulge-chasing complex orthogonal rotations (one subdiagonal at a time).

use num_complex::Complex64;

use super::tridiag::symmetric_givens;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Lower-triangle storage of a complex symmetric band matrix with room for
/// one extra bulge diagonal: `data[d][j] = A[j + d][j]`.
#[derive(Clone, Debug)]
pub(crate) struct SymmetricBand {
    n: usize,
    width: usize,
    data: Vec<Vec<Complex64>>,
}

impl SymmetricBand {
    /// `bandwidth` is the number of nonzero subdiagonals.
    pub(crate) fn zeros(n: usize, bandwidth: usize) -> Self {
        let width = bandwidth + 1;
        Self { n, width, data: vec![vec![ZERO; n]; width + 1] }
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> Complex64 {
        let (r, c) = if i >= j { (i, j) } else { (j, i) };
        let d = r - c;
        if d > self.width {
            ZERO
        } else {
            self.data[d][c]
        }
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: Complex64) {
        let (r, c) = if i >= j { (i, j) } else { (j, i) };
        let d = r - c;
        debug_assert!(d <= self.width || v == ZERO);
        if d <= self.width {
            self.data[d][c] = v;
        }
    }

    /// The same matrix with rows and columns in reverse order.
    pub(crate) fn reversed(&self) -> Self {
        let mut out = Self { n: self.n, width: self.width, data: vec![vec![ZERO; self.n]; self.width + 1] };
        for d in 0..self.width {
            for c in 0..self.n.saturating_sub(d) {
                // A[c + d][c] moves to A[n − 1 − c][n − 1 − c − d]
                out.data[d][self.n - 1 - c - d] = self.data[d][c];
            }
        }
        out
    }

    /// `A ← R A Rᵀ` with `R = [c s; −s c]` acting on rows/columns `p, p+1`.
    fn rotate(&mut self, p: usize, c: Complex64, s: Complex64) {
        let q = p + 1;
        let lo = p.saturating_sub(self.width);
        let hi = (q + self.width).min(self.n - 1);
        for k in lo..=hi {
            if k == p || k == q {
                continue;
            }
            let x = self.get(p, k);
            let y = self.get(q, k);
            if x == ZERO && y == ZERO {
                continue;
            }
            self.set(p, k, c * x + s * y);
            self.set(q, k, -s * x + c * y);
        }
        let (a, b, g) = (self.get(p, p), self.get(q, p), self.get(q, q));
        let (cc, ss, cs) = (c * c, s * s, c * s);
        self.set(p, p, cc * a + 2.0 * cs * b + ss * g);
        self.set(q, q, ss * a - 2.0 * cs * b + cc * g);
        self.set(q, p, cs * (g - a) + (cc - ss) * b);
    }

    /// Returns `(diagonal, subdiagonal)` of a complex-orthogonally similar
    /// tridiagonal matrix, or `None` if a rotation exceeds `growth_limit`.
    pub(crate) fn tridiagonalize(mut self, growth_limit: f64) -> Option<(Vec<Complex64>, Vec<Complex64>)> {
        let n = self.n;
        let bandwidth = self.width - 1;
        for bw in (2..=bandwidth).rev() {
            for j in 0..n.saturating_sub(bw) {
                let mut col = j;
                let mut row = j + bw;
                loop {
                    let z = self.get(row, col);
                    if z == ZERO {
                        break;
                    }
                    let x = self.get(row - 1, col);
                    let (c, s, _) = symmetric_givens(x, z, growth_limit)?;
                    self.rotate(row - 1, c, s);
                    self.set(row, col, ZERO);
                    if row + bw >= n {
                        break;
                    }
                    col = row - 1;
                    row += bw;
                }
            }
        }
        let diag = (0..n).map(|i| self.get(i, i)).collect();
        let sub = (0..n.saturating_sub(1)).map(|i| self.get(i + 1, i)).collect();
        Some((diag, sub))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::matrix::DenseMatrix;
    use crate::eigen::{hessenberg, EigenConfig};

    #[test]
    fn pentadiagonal_reduction_preserves_spectrum() {
        let n = 40;
        let mut band = SymmetricBand::zeros(n, 3);
        for i in 0..n {
            let t = i as f64;
            band.set(i, i, Complex64::new((0.3 * t).sin(), 0.1 * (0.7 * t).cos()));
            if i + 1 < n {
                band.set(i + 1, i, Complex64::new(1.0 + 0.1 * t.cos(), 0.05));
            }
            if i + 3 < n {
                band.set(i + 3, i, Complex64::new(0.4, -0.02 * t.sin()));
            }
        }
        let dense = DenseMatrix::from_fn(n, |i, j| band.get(i, j));
        let (d, e) = band.tridiagonalize(1e4).unwrap();
        let tri = DenseMatrix::from_fn(n, |i, j| {
            if i == j {
                d[i]
            } else if i == j + 1 {
                e[j]
            } else if j == i + 1 {
                e[i]
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let cfg = EigenConfig::default();
        let mut a = hessenberg::eigenvalues(dense, &cfg).unwrap();
        let mut b = hessenberg::eigenvalues(tri, &cfg).unwrap();
        let key = |z: &Complex64, w: &Complex64| z.re.total_cmp(&w.re).then(z.im.total_cmp(&w.im));
        a.sort_by(key);
        b.sort_by(key);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() < 1e-10, "{x} vs {y}");
        }
    }

    #[test]
    fn reversal_maps_entries() {
        let mut band = SymmetricBand::zeros(5, 2);
        band.set(2, 0, Complex64::new(1.0, 2.0));
        band.set(4, 4, Complex64::new(3.0, 0.0));
        let r = band.reversed();
        assert_eq!(r.get(4, 2), Complex64::new(1.0, 2.0));
        assert_eq!(r.get(2, 4), Complex64::new(1.0, 2.0));
        assert_eq!(r.get(0, 0), Complex64::new(3.0, 0.0));
        assert_eq!(r.get(2, 0), ZERO);
    }
}

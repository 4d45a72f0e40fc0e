//! Dense path: Householder reduction to upper Hessenberg form followed by
//! single-shift complex QR with unitary Givens rotations. Eigenvalues only.

use num_complex::Complex64;

use super::matrix::DenseMatrix;
use super::tridiag::abs1;
use super::EigenConfig;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

pub(crate) fn reduce_to_hessenberg(a: &mut DenseMatrix) {
    let n = a.dim();
    for k in 0..n.saturating_sub(2) {
        let norm: f64 = (k + 1..n).map(|i| a[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let phase = if x0 == ZERO { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * norm;
        let mut v: Vec<Complex64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in &mut v {
            *z /= vnorm;
        }
        // A ← (I − 2vvᴴ) A on rows k+1..n
        for j in k..n {
            let dot: Complex64 = v.iter().enumerate().map(|(t, vi)| vi.conj() * a[(k + 1 + t, j)]).sum();
            for (t, vi) in v.iter().enumerate() {
                a[(k + 1 + t, j)] -= 2.0 * vi * dot;
            }
        }
        // A ← A (I − 2vvᴴ) on columns k+1..n
        for i in 0..n {
            let dot: Complex64 = v.iter().enumerate().map(|(t, vi)| a[(i, k + 1 + t)] * vi).sum();
            for (t, vi) in v.iter().enumerate() {
                a[(i, k + 1 + t)] -= 2.0 * dot * vi.conj();
            }
        }
        for i in k + 2..n {
            a[(i, k)] = ZERO;
        }
    }
}

/// Unitary rotation `G = [c s; −s̄ c]`, `c` real, with `G [a; b] = [r; 0]`.
fn unitary_givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    if b == ZERO {
        return (1.0, ZERO);
    }
    if a == ZERO {
        return (0.0, Complex64::new(1.0, 0.0));
    }
    let an = a.norm();
    let r = an.hypot(b.norm());
    let phase = a / an;
    (an / r, phase * b.conj() / r)
}

fn wilkinson(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let tr = 0.5 * (a + d);
    let half = 0.5 * (a - d);
    let disc = (half * half + b * c).sqrt();
    let (l1, l2) = (tr + disc, tr - disc);
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

pub(crate) fn eigenvalues(mut a: DenseMatrix, cfg: &EigenConfig) -> Result<Vec<Complex64>> {
    let n = a.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    reduce_to_hessenberg(&mut a);
    let mut out = vec![ZERO; n];
    let budget = cfg.iteration_factor * n;
    let mut iterations = 0;
    let mut since_deflation = 0;
    let mut hi = n - 1;
    let mut rotations: Vec<(f64, Complex64)> = Vec::with_capacity(n);
    loop {
        let mut lo = hi;
        while lo > 0 {
            let sub = a[(lo, lo - 1)];
            if abs1(sub) <= cfg.deflation_tol * (abs1(a[(lo - 1, lo - 1)]) + abs1(a[(lo, lo)]))
                || abs1(sub) < f64::MIN_POSITIVE
            {
                a[(lo, lo - 1)] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            out[hi] = a[(hi, hi)];
            since_deflation = 0;
            if hi == 0 {
                break;
            }
            hi -= 1;
            continue;
        }
        iterations += 1;
        since_deflation += 1;
        if iterations > budget {
            return Err(Error::Convergence { iterations, size: n, partial: out[hi + 1..].to_vec() });
        }
        let mu = if since_deflation % 11 == 10 {
            a[(hi, hi)] + Complex64::new(0.75, 0.43) * abs1(a[(hi, hi - 1)])
        } else {
            wilkinson(a[(hi - 1, hi - 1)], a[(hi - 1, hi)], a[(hi, hi - 1)], a[(hi, hi)])
        };
        // Explicit shifted QR restricted to the active block.
        for i in lo..=hi {
            a[(i, i)] -= mu;
        }
        rotations.clear();
        for k in lo..hi {
            let (c, s) = unitary_givens(a[(k, k)], a[(k + 1, k)]);
            for j in k..=hi {
                let (x, y) = (a[(k, j)], a[(k + 1, j)]);
                a[(k, j)] = c * x + s * y;
                a[(k + 1, j)] = -s.conj() * x + c * y;
            }
            a[(k + 1, k)] = ZERO;
            rotations.push((c, s));
        }
        for (t, &(c, s)) in rotations.iter().enumerate() {
            let k = lo + t;
            for i in lo..=(k + 1).min(hi) {
                let (u, v) = (a[(i, k)], a[(i, k + 1)]);
                a[(i, k)] = c * u + s.conj() * v;
                a[(i, k + 1)] = -s * u + c * v;
            }
        }
        for i in lo..=hi {
            a[(i, i)] += mu;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hessenberg_form_is_similar() {
        let n = 7;
        let a = DenseMatrix::from_fn(n, |i, j| Complex64::new(((i * 3 + j * 5) % 7) as f64 - 3.0, (i as f64 - j as f64) * 0.25));
        let mut h = a.clone();
        reduce_to_hessenberg(&mut h);
        for i in 0..n {
            for j in 0..i.saturating_sub(1) {
                assert_eq!(h[(i, j)], ZERO);
            }
        }
        assert!((h.trace() - a.trace()).norm() < 1e-12);
        let fro = |m: &DenseMatrix| (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|ij| m[ij].norm_sqr()).sum::<f64>();
        assert!((fro(&h) - fro(&a)).abs() < 1e-10);
    }

    #[test]
    fn diagonal_and_jordan_like_inputs() {
        let d = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 1.0), Complex64::new(-3.0, 0.0)];
        let mut ev = eigenvalues(DenseMatrix::from_diagonal(&d), &EigenConfig::default()).unwrap();
        ev.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert_eq!(ev, vec![d[2], d[0], d[1]]);
        // Nilpotent shift matrix: all eigenvalues zero.
        let j = DenseMatrix::from_fn(4, |i, k| if k == i + 1 { Complex64::new(1.0, 0.0) } else { ZERO });
        for z in eigenvalues(j, &EigenConfig::default()).unwrap() {
            assert!(z.norm() < 1e-12);
        }
    }
}

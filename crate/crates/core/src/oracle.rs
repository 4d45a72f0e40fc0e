//! Independent reference computations used to cross-check the engine:
//! Sturm-sequence bisection, characteristic polynomials with simultaneous
//! root iteration, and brute-force level-crossing scans.

use num_complex::Complex64;

use crate::analytic::{oscillator_levels, scarf2_lambda, CrossingBranch, CrossingPair, LevelIndex};
use crate::eigen::DenseMatrix;
use crate::model::{BranchLabel, OscillatorParams, QuasiParity, ScarfParams};

/// Number of eigenvalues of the real symmetric tridiagonal `(d, e)` that are
/// strictly below `x`.
pub fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
    let tiny = f64::MIN_POSITIVE.sqrt();
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..d.len() {
        let coupling = if i == 0 { 0.0 } else { e[i - 1] * e[i - 1] / q };
        q = d[i] - x - coupling;
        if q == 0.0 {
            q = tiny;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of a real symmetric tridiagonal matrix by bisection on the
/// Sturm count, ascending.
pub fn sturm_bisection_eigenvalues(d: &[f64], e: &[f64]) -> Vec<f64> {
    let n = d.len();
    if n == 0 {
        return Vec::new();
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { e[i - 1].abs() } else { 0.0 } + if i + 1 < n { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - r);
        hi = hi.max(d[i] + r);
    }
    let pad = 1e-12 * (lo.abs().max(hi.abs()) + 1.0);
    lo -= pad;
    hi += pad;
    (0..n)
        .map(|k| {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                if sturm_count(d, e, mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect()
}

/// Coefficients `c₀..=cₙ` (ascending, `cₙ = 1`) of `det(λI − A)` by the
/// Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(a: &DenseMatrix) -> Vec<Complex64> {
    let n = a.dim();
    let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
    c[n] = Complex64::new(1.0, 0.0);
    let mut m = DenseMatrix::zeros(n);
    for k in 1..=n {
        let mut next = a.matmul(&m);
        for i in 0..n {
            next[(i, i)] += c[n + 1 - k];
        }
        m = next;
        c[n - k] = -a.matmul(&m).trace() / k as f64;
    }
    c
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &ci in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ci;
    }
    (p, dp)
}

/// Roots of the polynomial with ascending coefficients `c` by Aberth–Ehrlich
/// simultaneous iteration followed by Newton polishing.
pub fn polynomial_roots(c: &[Complex64]) -> Vec<Complex64> {
    let mut c = c.to_vec();
    while c.len() > 1 && c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n];
    let c: Vec<Complex64> = c.iter().map(|z| z / lead).collect();
    let radius = 1.0 + c[..n].iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = horner(&c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-16 {
            break;
        }
    }
    for zi in &mut z {
        for _ in 0..3 {
            let (p, dp) = horner(&c, *zi);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if step.is_finite() {
                *zi -= step;
            }
        }
    }
    z
}

/// Crossing key `(branch, first, second)` without the derived fields.
pub type CrossingKey = (CrossingBranch, LevelIndex, LevelIndex);

pub fn crossing_keys(pairs: &[CrossingPair]) -> Vec<CrossingKey> {
    let mut keys: Vec<CrossingKey> = pairs.iter().map(|p| (p.branch, p.first, p.second)).collect();
    keys.sort_by_key(key_order);
    keys
}

fn key_order(k: &CrossingKey) -> (u8, u32, u32) {
    (matches!(k.0, CrossingBranch::Negative) as u8, k.1.n, k.2.n)
}

fn same_level(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * (1.0 + a.abs().max(b.abs()))
}

/// Every `(q = +1, n₁)`, `(q = −1, n₂)` index pair within a family whose
/// energies coincide, by exhaustive comparison.
pub fn oscillator_crossing_scan(p: &OscillatorParams, n_max: u32) -> Vec<CrossingKey> {
    let mut out = Vec::new();
    for (branch, omega) in [(CrossingBranch::Positive, BranchLabel::Plus), (CrossingBranch::Negative, BranchLabel::Minus)] {
        for n1 in 0..=n_max {
            let e1 = oscillator_levels(p, omega, QuasiParity::Even, n1);
            for n2 in 0..=n_max {
                let e2 = oscillator_levels(p, omega, QuasiParity::Odd, n2);
                if same_level(e1.lambda, e2.lambda) {
                    out.push((
                        branch,
                        LevelIndex { n: n1, quasi_parity: Some(QuasiParity::Even), omega },
                        LevelIndex { n: n2, quasi_parity: Some(QuasiParity::Odd), omega },
                    ));
                }
            }
        }
    }
    out.sort_by_key(key_order);
    out
}

/// Index pairs `n₁ ≤ n₂` within one Scarf II family with equal energies. A
/// diagonal pair `(n, n)` counts when `n` sits at the apex of the level
/// parabola, i.e. its neighbours coincide.
pub fn scarf2_crossing_scan(p: &ScarfParams, n_max: u32) -> Vec<CrossingKey> {
    let mut out = Vec::new();
    for (branch, omega) in [(CrossingBranch::Positive, BranchLabel::Plus), (CrossingBranch::Negative, BranchLabel::Minus)] {
        let lambda = |n: i64| scarf2_lambda(p, omega, n);
        for n1 in 0..=n_max {
            for n2 in n1..=n_max {
                let hit = if n1 == n2 {
                    same_level(lambda(i64::from(n1) - 1), lambda(i64::from(n1) + 1))
                } else {
                    same_level(lambda(i64::from(n1)), lambda(i64::from(n2)))
                };
                if hit {
                    out.push((
                        branch,
                        LevelIndex { n: n1, quasi_parity: None, omega },
                        LevelIndex { n: n2, quasi_parity: None, omega },
                    ));
                }
            }
        }
    }
    out.sort_by_key(key_order);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{oscillator_crossings, scarf2_crossings};

    #[test]
    fn sturm_free_particle() {
        let ev = sturm_bisection_eigenvalues(&[2.0; 3], &[-1.0; 2]);
        let s = 2f64.sqrt();
        for (g, w) in ev.iter().zip([2.0 - s, 2.0, 2.0 + s]) {
            assert!((g - w).abs() < 1e-14);
        }
        assert_eq!(sturm_count(&[2.0; 3], &[-1.0; 2], 2.0), 1);
        assert_eq!(sturm_count(&[2.0; 3], &[-1.0; 2], 2.1), 2);
    }

    #[test]
    fn polynomial_roots_of_known_cubic() {
        // (z − 1)(z + 2)(z − i)
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let c = [2.0 * i, -2.0 - i, one - i, one];
        let mut r = polynomial_roots(&c);
        r.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        let want = [Complex64::new(-2.0, 0.0), i, one];
        for (g, w) in r.iter().zip(want) {
            assert!((g - w).norm() < 1e-12, "{g} vs {w}");
        }
    }

    #[test]
    fn characteristic_polynomial_of_diagonal() {
        let d = DenseMatrix::from_diagonal(&[Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)]);
        let c = characteristic_polynomial(&d);
        assert_eq!(c, vec![Complex64::new(2.0, 0.0), Complex64::new(-3.0, 0.0), Complex64::new(1.0, 0.0)]);
    }

    #[test]
    fn scans_agree_with_formula_examples() {
        let p = OscillatorParams::new(1.0, 2.0, 1.0).unwrap();
        assert_eq!(oscillator_crossing_scan(&p, 5), crossing_keys(&oscillator_crossings(&p, 5)));
        let p = ScarfParams::new(2.5, 1.5).unwrap();
        assert_eq!(scarf2_crossing_scan(&p, 8), crossing_keys(&scarf2_crossings(&p, 8)));
    }
}

//! Property checks of the eigenvalue engine against structural identities
//! and the independent oracles.

use pdm_dirac::eigen::{eigenvalues, eigenvector};
use pdm_dirac::oracle::{characteristic_polynomial, polynomial_roots, sturm_bisection_eigenvalues};
use pdm_dirac::verify::pairing_distance;
use pdm_dirac::{BandMatrix, Complex64, DenseMatrix, EigenConfig};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn complex_vec(len: usize, scale: f64) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-scale..scale, -scale..scale).prop_map(|(a, b)| c(a, b)), len)
}

/// Complex symmetric tridiagonal matrix of dimension `n`.
fn symmetric_tridiagonal(n: usize) -> impl Strategy<Value = (Vec<Complex64>, Vec<Complex64>)> {
    (complex_vec(n, 3.0), complex_vec(n - 1, 1.5))
}

fn tridiagonal(d: &[Complex64], e: &[Complex64]) -> BandMatrix {
    BandMatrix::tridiagonal(e, d, e)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn trace_is_preserved((d, e) in (2usize..120).prop_flat_map(symmetric_tridiagonal)) {
        let op = tridiagonal(&d, &e);
        let spec = eigenvalues(&op, &EigenConfig::default()).unwrap();
        let trace: Complex64 = d.iter().sum();
        let sum: Complex64 = spec.eigenvalues.iter().sum();
        prop_assert!((trace - sum).norm() <= 1e-8 * op.norm_inf().max(1.0), "{} vs {}", trace, sum);
    }

    #[test]
    fn permutation_similarity_keeps_the_spectrum(
        (d, e) in (2usize..40).prop_flat_map(symmetric_tridiagonal),
        seed in any::<u64>(),
    ) {
        let n = d.len();
        let a = DenseMatrix::from_fn(n, |i, j| tridiagonal(&d, &e).get(i, j));
        // Fisher-Yates from a small LCG so the permutation follows the seed.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let b = DenseMatrix::from_fn(n, |i, j| a[(perm[i], perm[j])]);
        let cfg = EigenConfig::default();
        let sa = eigenvalues(&a, &cfg).unwrap();
        let sb = eigenvalues(&b, &cfg).unwrap();
        let scale = a.norm_inf().max(1.0);
        prop_assert!(pairing_distance(&sa.eigenvalues, &sb.eigenvalues) <= 1e-9 * scale);
    }

    #[test]
    fn band_and_dense_paths_agree((d, e) in (2usize..60).prop_flat_map(symmetric_tridiagonal)) {
        let band = tridiagonal(&d, &e);
        let dense = DenseMatrix::from_fn(d.len(), |i, j| band.get(i, j));
        let cfg = EigenConfig::default();
        let a = eigenvalues(&band, &cfg).unwrap();
        let b = eigenvalues(&dense, &cfg).unwrap();
        prop_assert!(pairing_distance(&a.eigenvalues, &b.eigenvalues) <= 1e-9 * band.norm_inf().max(1.0));
    }

    #[test]
    fn real_symmetric_matches_sturm_bisection(
        (d, e) in (2usize..150).prop_flat_map(|n| (
            prop::collection::vec(-5.0..5.0f64, n),
            prop::collection::vec(-2.0..2.0f64, n - 1),
        )),
    ) {
        let dc: Vec<Complex64> = d.iter().map(|&x| c(x, 0.0)).collect();
        let ec: Vec<Complex64> = e.iter().map(|&x| c(x, 0.0)).collect();
        let spec = eigenvalues(&tridiagonal(&dc, &ec), &EigenConfig::default()).unwrap();
        let oracle = sturm_bisection_eigenvalues(&d, &e);
        for (got, want) in spec.eigenvalues.iter().zip(&oracle) {
            prop_assert!((got.re - want).abs() <= 1e-10 && got.im.abs() <= 1e-10, "{} vs {}", got, want);
        }
    }

    #[test]
    fn small_dense_matches_characteristic_roots(entries in complex_vec(25, 2.0)) {
        let a = DenseMatrix::from_fn(5, |i, j| entries[5 * i.min(j) + i.max(j)]);
        let spec = eigenvalues(&a, &EigenConfig::default()).unwrap();
        let roots = polynomial_roots(&characteristic_polynomial(&a));
        prop_assert!(pairing_distance(&spec.eigenvalues, &roots) <= 1e-8);
    }

    #[test]
    fn results_are_deterministic((d, e) in (2usize..80).prop_flat_map(symmetric_tridiagonal)) {
        let op = tridiagonal(&d, &e);
        let cfg = EigenConfig::default();
        let a = eigenvalues(&op, &cfg).unwrap();
        let b = eigenvalues(&op, &cfg).unwrap();
        prop_assert_eq!(a.eigenvalues, b.eigenvalues);
    }
}

#[test]
fn inverse_iteration_certifies_free_particle_modes() {
    let n = 50;
    let d = vec![c(2.0, 0.0); n];
    let e = vec![c(-1.0, 0.0); n - 1];
    let op = tridiagonal(&d, &e);
    let cfg = EigenConfig::default();
    for k in [1usize, 7, 25] {
        let theta = k as f64 * std::f64::consts::PI / (n + 1) as f64;
        let exact = 2.0 - 2.0 * theta.cos();
        let pair = eigenvector(&op, c(exact + 1e-6, 0.0), &cfg).unwrap();
        assert!((pair.value.re - exact).abs() < 1e-10);
        assert!(pair.residual <= 1e-8 * op.norm_inf());
        let norm: f64 = pair.vector.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}

#[test]
fn capacity_is_enforced() {
    let cfg = EigenConfig { max_dim: 10, ..EigenConfig::default() };
    let op = BandMatrix::tridiagonal(&[c(1.0, 0.0); 11], &[c(0.0, 0.0); 12], &[c(1.0, 0.0); 11]);
    assert!(matches!(eigenvalues(&op, &cfg), Err(pdm_dirac::Error::Capacity { size: 12, cap: 10 })));
}

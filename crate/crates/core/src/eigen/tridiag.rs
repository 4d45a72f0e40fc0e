//! Implicit Wilkinson-shifted QR for complex symmetric tridiagonal matrices.
//!
//! The sweep uses complex orthogonal rotations (`c² + s² = 1`, `c, s ∈ ℂ`),
//! which preserve complex symmetry and keep each sweep O(n). Such rotations
//! are not unitary; a rotation whose norm `|c|² + |s|²` exceeds the configured
//! growth limit aborts the sweep, which is retried with perturbed shifts;
//! only if those fail repeatedly does the caller fall back to the unitary
//! Hessenberg path.

use num_complex::Complex64;

use super::EigenConfig;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Shift perturbations tried after a failed sweep, as (size, direction).
/// Sizes are relative to the trailing coupling for the first entries and to
/// the block magnitude for the rest: a poor shift still applies an exact
/// similarity, and a large one changes the whole chase.
const RETRY_SHIFTS: [(f64, f64); 7] = [(1.0, -1.07), (2.0, 2.3), (1e-3, 0.41), (1e-2, -2.9), (0.1, 1.6), (0.5, -0.2), (1.0, 2.7)];
/// Consecutive fully failed iterations tolerated before giving up.
const MAX_ABORTS: usize = 4;

#[derive(Debug)]
pub(crate) enum QrFailure {
    Breakdown,
    Budget { iterations: usize, partial: Vec<Complex64> },
}

pub(crate) fn abs1(z: Complex64) -> f64 {
    z.re.abs() + z.im.abs()
}

/// Rotation `[c s; −s c]` mapping `(x, z)` to `(r, 0)`; `None` on an
/// (almost) isotropic pair.
pub(crate) fn symmetric_givens(x: Complex64, z: Complex64, growth_limit: f64) -> Option<(Complex64, Complex64, Complex64)> {
    if z == ZERO {
        return Some((Complex64::new(1.0, 0.0), ZERO, x));
    }
    let scale = abs1(x).max(abs1(z));
    let (xs, zs) = (x / scale, z / scale);
    let rs = (xs * xs + zs * zs).sqrt();
    let growth = (xs.norm_sqr() + zs.norm_sqr()) / rs.norm_sqr();
    if !(growth <= growth_limit) {
        return None;
    }
    Some((xs / rs, zs / rs, rs * scale))
}

/// Eigenvalues of the 2×2 symmetric block `[[a, b], [b, c]]`.
pub(crate) fn symmetric_2x2(a: Complex64, b: Complex64, c: Complex64) -> (Complex64, Complex64) {
    let mean = 0.5 * (a + c);
    let half = 0.5 * (a - c);
    let disc = (half * half + b * b).sqrt();
    (mean + disc, mean - disc)
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64) -> Complex64 {
    let delta = 0.5 * (a - c);
    let disc = (delta * delta + b * b).sqrt();
    let denom = if (delta + disc).norm() >= (delta - disc).norm() { delta + disc } else { delta - disc };
    if denom == ZERO {
        c
    } else {
        c - b * b / denom
    }
}

/// One implicit QR sweep on `d[lo..=hi]`, `e[lo..hi]` with shift `mu`.
fn sweep(d: &mut [Complex64], e: &mut [Complex64], lo: usize, hi: usize, mu: Complex64, growth: f64) -> Result<(), ()> {
    let mut x = d[lo] - mu;
    let mut z = e[lo];
    for k in lo..hi {
        let (c, s, r) = symmetric_givens(x, z, growth).ok_or(())?;
        if k > lo {
            e[k - 1] = r;
        }
        let (a, b, g) = (d[k], e[k], d[k + 1]);
        let (cc, ss, cs) = (c * c, s * s, c * s);
        d[k] = cc * a + 2.0 * cs * b + ss * g;
        d[k + 1] = ss * a - 2.0 * cs * b + cc * g;
        e[k] = cs * (g - a) + (cc - ss) * b;
        if k + 1 < hi {
            let f = e[k + 1];
            z = s * f;
            e[k + 1] = c * f;
            x = e[k];
        }
    }
    Ok(())
}

pub(crate) fn symmetric_tridiagonal_eigenvalues(
    diag: &[Complex64],
    off: &[Complex64],
    cfg: &EigenConfig,
) -> Result<Vec<Complex64>, QrFailure> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    if n <= 1 {
        return Ok(d);
    }
    let budget = cfg.iteration_factor * n;
    let mut iterations = 0usize;
    let mut since_deflation = 0usize;
    let mut aborts = 0usize;
    let mut hi = n - 1;
    let negligible = |e: Complex64, a: Complex64, b: Complex64| {
        abs1(e) <= cfg.deflation_tol * (abs1(a) + abs1(b)) || abs1(e) < f64::MIN_POSITIVE
    };

    loop {
        // Locate the unreduced block ending at `hi`.
        let mut lo = hi;
        while lo > 0 {
            if negligible(e[lo - 1], d[lo - 1], d[lo]) {
                e[lo - 1] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            since_deflation = 0;
            if hi == 0 {
                break;
            }
            hi -= 1;
            continue;
        }
        if lo + 1 == hi {
            let (l1, l2) = symmetric_2x2(d[lo], e[lo], d[hi]);
            d[lo] = l1;
            d[hi] = l2;
            e[lo] = ZERO;
            since_deflation = 0;
            if lo == 0 {
                break;
            }
            hi = lo - 1;
            continue;
        }
        iterations += 1;
        since_deflation += 1;
        if iterations > budget {
            return Err(QrFailure::Budget { iterations, partial: d[hi + 1..].to_vec() });
        }
        let mu = if since_deflation % 11 == 10 || aborts > 0 {
            // Exceptional shift to break cycles and breakdowns.
            d[hi] + Complex64::new(0.75, 0.43) * (1.0 + aborts as f64) * abs1(e[hi - 1])
        } else {
            wilkinson_shift(d[hi - 1], e[hi - 1], d[hi])
        };
        let saved_d = d[lo..=hi].to_vec();
        let saved_e = e[lo..hi].to_vec();
        let mut shift = mu;
        let mut attempt = 0;
        while sweep(&mut d, &mut e, lo, hi, shift, cfg.max_rotation_growth).is_err() {
            d[lo..=hi].copy_from_slice(&saved_d);
            e[lo..hi].copy_from_slice(&saved_e);
            attempt += 1;
            if attempt > RETRY_SHIFTS.len() {
                aborts += 1;
                if aborts > MAX_ABORTS {
                    return Err(QrFailure::Breakdown);
                }
                break;
            }
            let (size, phase) = RETRY_SHIFTS[attempt - 1];
            let scale = if attempt <= 2 {
                abs1(e[hi - 1]) + 1e-8 * abs1(d[hi]) + f64::MIN_POSITIVE
            } else {
                d[lo..=hi].iter().chain(&e[lo..hi]).map(|z| abs1(*z)).fold(f64::MIN_POSITIVE, f64::max)
            };
            shift = mu + Complex64::from_polar(size * scale, phase);
        }
        if attempt <= RETRY_SHIFTS.len() {
            aborts = 0;
        }
    }
    Ok(d)
}

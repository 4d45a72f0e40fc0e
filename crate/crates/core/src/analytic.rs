//! Closed-form eigenvalues `λ = E²`, signed Dirac energies, reality flags
//! and energy-level-crossing predicates for the catalog models.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::model::{BranchLabel, ModelSpec, OscillatorParams, QuasiParity, ScarfParams};

/// Distance from the nearest integer tolerated when a crossing condition
/// asks for an integer difference or sum.
pub const INTEGER_FEASIBILITY_TOL: f64 = 1e-9;

/// Default upper index for crossing searches.
pub const DEFAULT_CROSSING_N_MAX: u32 = 50;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyticLevel {
    pub n: u32,
    pub quasi_parity: Option<QuasiParity>,
    pub omega: BranchLabel,
    /// Schrödinger-like eigenvalue `λ = E²`.
    pub lambda: f64,
    /// Signed Dirac energy; purely imaginary when `λ < 0`.
    pub energy: Complex64,
    pub real: bool,
}

impl AnalyticLevel {
    fn new(n: u32, quasi_parity: Option<QuasiParity>, omega: BranchLabel, lambda: f64, real: bool) -> Self {
        let root = if lambda >= 0.0 {
            Complex64::new(lambda.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-lambda).sqrt())
        };
        Self {
            n,
            quasi_parity,
            omega,
            lambda,
            energy: omega.sign() * root,
            real,
        }
    }
}

/// Which energy family a crossing lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossingBranch {
    Positive,
    Negative,
}

impl CrossingBranch {
    fn omega(self) -> BranchLabel {
        match self {
            CrossingBranch::Positive => BranchLabel::Plus,
            CrossingBranch::Negative => BranchLabel::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelIndex {
    pub n: u32,
    pub quasi_parity: Option<QuasiParity>,
    pub omega: BranchLabel,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingPair {
    pub branch: CrossingBranch,
    pub first: LevelIndex,
    pub second: LevelIndex,
    /// Common signed energy (real part; imaginary crossings report `re = 0`).
    pub level: Complex64,
    /// Both members are normalizable bound states that a finite-difference
    /// run can resolve.
    pub observable: bool,
}

fn as_integer(x: f64) -> Option<i64> {
    let r = x.round();
    if (x - r).abs() <= INTEGER_FEASIBILITY_TOL && r.abs() <= 1e15 {
        Some(r as i64)
    } else {
        None
    }
}

fn as_nonnegative_integer(x: f64) -> Option<u32> {
    let r = x.round();
    if (x - r).abs() <= INTEGER_FEASIBILITY_TOL && r >= 0.0 && r <= f64::from(u32::MAX) {
        Some(r as u32)
    } else {
        None
    }
}

/// Shifted-oscillator levels:
/// `λ_{±,+1} = 2B(n+α)`, `λ_{+,−1} = 2Bn`, `λ_{−,−1} = 2B(n+1)`,
/// with `E = +√λ` on the ω = +1 family and `E = −√λ` on ω = −1.
pub fn oscillator_levels(p: &OscillatorParams, omega: BranchLabel, q: QuasiParity, n: u32) -> AnalyticLevel {
    let nf = f64::from(n);
    let b2 = 2.0 * p.big_b();
    let lambda = match (q, omega) {
        (QuasiParity::Even, _) => b2 * (nf + p.alpha()),
        (QuasiParity::Odd, BranchLabel::Plus) => b2 * nf,
        (QuasiParity::Odd, BranchLabel::Minus) => b2 * (nf + 1.0),
    };
    AnalyticLevel::new(n, Some(q), omega, lambda, lambda >= 0.0)
}

/// Crossings `n₂ − n₁ = α` on the positive family and `n₄ − n₃ = α − 1` on
/// the negative family; `first` carries q = +1, `second` q = −1. The
/// difference may be negative (α = 0 on the negative family).
pub fn oscillator_crossings(p: &OscillatorParams, n_max: u32) -> Vec<CrossingPair> {
    let mut out = Vec::new();
    let conditions = [
        (CrossingBranch::Positive, p.alpha()),
        (CrossingBranch::Negative, p.alpha() - 1.0),
    ];
    for (branch, gap) in conditions {
        let Some(gap) = as_integer(gap) else {
            continue;
        };
        let omega = branch.omega();
        for n_even in 0..=i64::from(n_max) {
            let n_odd = n_even + gap;
            if n_odd < 0 || n_odd > i64::from(n_max) {
                continue;
            }
            let (n_even, n_odd) = (n_even as u32, n_odd as u32);
            let level = oscillator_levels(p, omega, QuasiParity::Even, n_even).energy;
            out.push(CrossingPair {
                branch,
                first: LevelIndex { n: n_even, quasi_parity: Some(QuasiParity::Even), omega },
                second: LevelIndex { n: n_odd, quasi_parity: Some(QuasiParity::Odd), omega },
                level,
                observable: true,
            });
        }
    }
    out
}

/// `λ_+ = (n+1)(2(A+B) − (n+1))` and `λ_− = n(2(A+B) − n)`, as a quadratic in
/// a signed index so the crossing oracle can probe neighbours of `n = 0`.
pub fn scarf2_lambda(p: &ScarfParams, omega: BranchLabel, n: i64) -> f64 {
    let k = match omega {
        BranchLabel::Plus => (n + 1) as f64,
        BranchLabel::Minus => n as f64,
    };
    k * (2.0 * p.sum() - k)
}

/// Scarf II levels with the reality flag taken from the integer inequalities
/// `2(A+B) − 1 ≥ n` (ω = +1) and `2(A+B) ≥ n` (ω = −1).
pub fn scarf2_levels(p: &ScarfParams, omega: BranchLabel, n: u32) -> AnalyticLevel {
    let lambda = scarf2_lambda(p, omega, i64::from(n));
    let nf = f64::from(n);
    let real = match omega {
        BranchLabel::Plus => 2.0 * p.sum() - 1.0 >= nf,
        BranchLabel::Minus => 2.0 * p.sum() >= nf,
    };
    AnalyticLevel::new(n, None, omega, lambda, real)
}

/// Normalizable Scarf II bound state: its decay exponent `(A+B) − k` is positive.
fn scarf2_normalizable(p: &ScarfParams, omega: BranchLabel, n: u32) -> bool {
    let k = match omega {
        BranchLabel::Plus => f64::from(n) + 1.0,
        BranchLabel::Minus => f64::from(n),
    };
    k < p.sum()
}

/// Pairs `n₁ ≤ n₂ ≤ n_max` with `n₁ + n₂ = 2(A+B−1)` (positive family) or
/// `n₃ + n₄ = 2(A+B)` (negative family).
pub fn scarf2_crossings(p: &ScarfParams, n_max: u32) -> Vec<CrossingPair> {
    let mut out = Vec::new();
    let conditions = [
        (CrossingBranch::Positive, 2.0 * (p.sum() - 1.0)),
        (CrossingBranch::Negative, 2.0 * p.sum()),
    ];
    for (branch, sum) in conditions {
        let Some(sum) = as_nonnegative_integer(sum) else {
            continue;
        };
        let omega = branch.omega();
        for n1 in 0..=n_max.min(sum / 2) {
            let n2 = sum - n1;
            if n2 > n_max {
                continue;
            }
            let lvl = scarf2_levels(p, omega, n1);
            let observable = lvl.real
                && scarf2_normalizable(p, omega, n1)
                && scarf2_normalizable(p, omega, n2);
            out.push(CrossingPair {
                branch,
                first: LevelIndex { n: n1, quasi_parity: None, omega },
                second: LevelIndex { n: n2, quasi_parity: None, omega },
                level: lvl.energy,
                observable,
            });
        }
    }
    out
}

/// `λ = n²/4 − 25/16` with both signed roots; `n ∈ {1, 2}` are not real.
pub fn periodic_levels(n: u32) -> Result<(AnalyticLevel, AnalyticLevel)> {
    if n == 0 {
        return domain("periodic model levels start at n = 1");
    }
    let nf = f64::from(n);
    let lambda = nf * nf / 4.0 - 25.0 / 16.0;
    let real = lambda >= 0.0;
    Ok((
        AnalyticLevel::new(n, None, BranchLabel::Plus, lambda, real),
        AnalyticLevel::new(n, None, BranchLabel::Minus, lambda, real),
    ))
}

/// Periodic-model levels `n = 3..=8`, the window used for certification.
pub const PERIODIC_CERTIFIED_LEVELS: std::ops::RangeInclusive<u32> = 3..=8;

/// Closed-form reference levels of branch `omega` with `λ < cutoff`, sorted by
/// `λ`. Custom models have none.
pub fn reference_levels(spec: &ModelSpec, omega: BranchLabel, cutoff: Option<f64>) -> Vec<AnalyticLevel> {
    let below = |l: &AnalyticLevel| cutoff.is_none_or(|c| l.lambda < c);
    let mut levels: Vec<AnalyticLevel> = match spec {
        ModelSpec::ShiftedOscillator(p) => {
            let mut v = Vec::new();
            if p.big_b() > 0.0 {
                for q in QuasiParity::BOTH {
                    for n in 0.. {
                        let l = oscillator_levels(p, omega, q, n);
                        if !below(&l) || n > 10_000 {
                            break;
                        }
                        v.push(l);
                    }
                }
            }
            v
        }
        ModelSpec::ScarfII(p) => (0..)
            .map(|n| scarf2_levels(p, omega, n))
            .take_while(|l| l.real)
            .filter(|l| scarf2_normalizable(p, omega, l.n))
            .filter(|l| below(l))
            .collect(),
        ModelSpec::PeriodicPseudo => PERIODIC_CERTIFIED_LEVELS
            .filter_map(|n| periodic_levels(n).ok())
            .map(|(plus, minus)| if omega == BranchLabel::Plus { plus } else { minus })
            .filter(|l| below(l))
            .collect(),
        ModelSpec::Custom(_) => Vec::new(),
    };
    levels.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    levels
}

//! Physical models: mass profiles, complexified scalar interactions, the
//! composite mass `M`, the partner potentials `V_ω = M² − ωM'` and the
//! periodic pseudo-Hermiticity generator `G`.
//!
//! Every evaluator is a pure function of the model parameters and the real
//! coordinate `x`. For the shifted oscillator the coordinate is mapped onto
//! the contour `z = x − i·b` before evaluation.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The partner label `ω = ±1` selecting `V_ω = M² − ωM'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum BranchLabel {
    Plus,
    Minus,
}

impl BranchLabel {
    pub const BOTH: [BranchLabel; 2] = [BranchLabel::Plus, BranchLabel::Minus];

    pub fn value(self) -> i8 {
        match self {
            BranchLabel::Plus => 1,
            BranchLabel::Minus => -1,
        }
    }

    pub fn sign(self) -> f64 {
        f64::from(self.value())
    }

    pub fn flipped(self) -> Self {
        match self {
            BranchLabel::Plus => BranchLabel::Minus,
            BranchLabel::Minus => BranchLabel::Plus,
        }
    }
}

impl From<BranchLabel> for i8 {
    fn from(b: BranchLabel) -> i8 {
        b.value()
    }
}

impl TryFrom<i8> for BranchLabel {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(BranchLabel::Plus),
            -1 => Ok(BranchLabel::Minus),
            other => Err(format!("branch label must be +1 or -1, got {other}")),
        }
    }
}

impl FromStr for BranchLabel {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "+1" | "1" | "+" | "plus" => Ok(BranchLabel::Plus),
            "-1" | "-" | "minus" => Ok(BranchLabel::Minus),
            other => Err(format!("branch label must be +1 or -1, got {other:?}")),
        }
    }
}

impl fmt::Display for BranchLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

/// Quasi-parity `q = ±1` of the complexified oscillator. `Even` (q = +1)
/// labels the α-dependent family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum QuasiParity {
    Even,
    Odd,
}

impl QuasiParity {
    pub const BOTH: [QuasiParity; 2] = [QuasiParity::Even, QuasiParity::Odd];

    pub fn value(self) -> i8 {
        match self {
            QuasiParity::Even => 1,
            QuasiParity::Odd => -1,
        }
    }
}

impl From<QuasiParity> for i8 {
    fn from(q: QuasiParity) -> i8 {
        q.value()
    }
}

impl TryFrom<i8> for QuasiParity {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(QuasiParity::Even),
            -1 => Ok(QuasiParity::Odd),
            other => Err(format!("quasi-parity must be +1 or -1, got {other}")),
        }
    }
}

impl FromStr for QuasiParity {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "+1" | "1" | "+" | "even" => Ok(QuasiParity::Even),
            "-1" | "-" | "odd" => Ok(QuasiParity::Odd),
            other => Err(format!("quasi-parity must be +1 or -1, got {other:?}")),
        }
    }
}

impl fmt::Display for QuasiParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

/// Linear mass `Bx/4` plus the inversely-linear-plus-linear scalar, giving
/// `M(z) = (B/2) z + A/z` with `A = α − 1/2` on the contour `z = x − i·shift`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    big_b: f64,
    alpha: f64,
    shift: f64,
}

impl OscillatorParams {
    pub fn new(big_b: f64, alpha: f64, shift: f64) -> Result<Self> {
        if !(big_b.is_finite() && alpha.is_finite() && shift.is_finite()) {
            return domain("oscillator parameters must be finite");
        }
        if big_b < 0.0 {
            return domain(format!("oscillator strength B must be >= 0, got {big_b}"));
        }
        if alpha < 0.0 {
            return domain(format!("core parameter alpha must be >= 0, got {alpha}"));
        }
        if shift <= 0.0 {
            return domain(format!(
                "contour shift must be > 0 to avoid the pole at z = 0, got {shift}"
            ));
        }
        Ok(Self { big_b, alpha, shift })
    }

    pub fn big_b(&self) -> f64 {
        self.big_b
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    /// Coefficient of the inverse-linear term, `A = α − 1/2`.
    pub fn core_a(&self) -> f64 {
        self.alpha - 0.5
    }

    pub fn contour(&self, x: f64) -> Complex64 {
        Complex64::new(x, -self.shift)
    }
}

/// `M(x) = (A+B) tanh x − i(A−B) sech x`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScarfParams {
    a: f64,
    b: f64,
}

impl ScarfParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return domain("Scarf II parameters must be finite");
        }
        if a + b <= 0.0 {
            return domain(format!("Scarf II requires A + B > 0, got A + B = {}", a + b));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn sum(&self) -> f64 {
        self.a + self.b
    }

    /// `C₁ = 2(A² + B²) + ω(A + B)`.
    pub fn c1(&self, omega: BranchLabel) -> f64 {
        2.0 * (self.a * self.a + self.b * self.b) + omega.sign() * self.sum()
    }

    /// `C₂ = (2A + 2B + ω)(A − B)`.
    pub fn c2(&self, omega: BranchLabel) -> f64 {
        (2.0 * self.sum() + omega.sign()) * (self.a - self.b)
    }
}

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A user-supplied `(m, S_r, S_i)` triple; `M = m + S_r + i S_i`.
#[derive(Clone)]
pub struct CustomModel {
    name: String,
    mass: RealFn,
    scalar_re: RealFn,
    scalar_im: RealFn,
}

impl CustomModel {
    pub fn new(
        name: impl Into<String>,
        mass: impl Fn(f64) -> f64 + Send + Sync + 'static,
        scalar_re: impl Fn(f64) -> f64 + Send + Sync + 'static,
        scalar_im: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            mass: Arc::new(mass),
            scalar_re: Arc::new(scalar_re),
            scalar_im: Arc::new(scalar_im),
        }
    }

    /// Constant real composite mass `M ≡ m₀`.
    pub fn constant_mass(m0: f64) -> Self {
        Self::new(format!("constant-mass({m0})"), move |_| m0, |_| 0.0, |_| 0.0)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    fn composite(&self, x: f64) -> Result<Complex64> {
        let m = Complex64::new((self.mass)(x) + (self.scalar_re)(x), (self.scalar_im)(x));
        if m.is_finite() {
            Ok(m)
        } else {
            domain(format!("custom model '{}' is not finite at x = {x}", self.name))
        }
    }

    /// Fourth-order central difference with step `1e-4·(1 + |x|)`.
    fn composite_derivative(&self, x: f64) -> Result<Complex64> {
        let h = 1e-4 * (1.0 + x.abs());
        let f2p = self.composite(x + 2.0 * h)?;
        let f1p = self.composite(x + h)?;
        let f1m = self.composite(x - h)?;
        let f2m = self.composite(x - 2.0 * h)?;
        Ok((-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * h))
    }
}

impl fmt::Debug for CustomModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomModel").field("name", &self.name).finish_non_exhaustive()
    }
}

/// Which partner operator is expected to carry an unpaired zero mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroModeExpectation {
    Absent,
    On(BranchLabel),
    Unknown,
}

/// One of the three exactly solvable models or a custom `(m, S)` pair.
#[derive(Clone, Debug)]
pub enum ModelSpec {
    ShiftedOscillator(OscillatorParams),
    ScarfII(ScarfParams),
    /// `M = iG(x)` with the fixed periodic generator; carries no parameters.
    PeriodicPseudo,
    Custom(CustomModel),
}

impl ModelSpec {
    pub fn name(&self) -> &str {
        match self {
            ModelSpec::ShiftedOscillator(_) => "oscillator",
            ModelSpec::ScarfII(_) => "scarf2",
            ModelSpec::PeriodicPseudo => "periodic",
            ModelSpec::Custom(c) => c.name(),
        }
    }

    /// Named parameters, in a fixed order, for reports.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match self {
            ModelSpec::ShiftedOscillator(p) => {
                vec![("B", p.big_b), ("alpha", p.alpha), ("shift", p.shift)]
            }
            ModelSpec::ScarfII(p) => vec![("A", p.a), ("B", p.b)],
            ModelSpec::PeriodicPseudo | ModelSpec::Custom(_) => Vec::new(),
        }
    }

    /// Imaginary offset of the evaluation contour (0 for real-line models).
    pub fn contour_shift(&self) -> f64 {
        match self {
            ModelSpec::ShiftedOscillator(p) => p.shift,
            _ => 0.0,
        }
    }

    /// Default truncation interval and interior point count.
    pub fn default_grid(&self) -> Option<(f64, f64, usize)> {
        match self {
            ModelSpec::ShiftedOscillator(_) => Some((-12.0, 12.0, 3000)),
            ModelSpec::ScarfII(_) => Some((-15.0, 15.0, 3000)),
            ModelSpec::PeriodicPseudo => Some((-PI, PI, 2000)),
            ModelSpec::Custom(_) => None,
        }
    }

    /// Eigenvalues with real part at or above this value are treated as
    /// continuum or truncation artifacts. `None` means no cutoff.
    pub fn continuum_cutoff(&self, x_min: f64, x_max: f64) -> Option<f64> {
        match self {
            ModelSpec::ScarfII(p) => Some(p.sum() * p.sum() - 0.5),
            ModelSpec::ShiftedOscillator(_) => {
                let mut smallest = f64::INFINITY;
                for omega in BranchLabel::BOTH {
                    for x in [x_min, x_max] {
                        if let Ok(v) = partner_potential(self, omega, x) {
                            smallest = smallest.min(v.norm());
                        }
                    }
                }
                smallest.is_finite().then_some(0.8 * smallest)
            }
            ModelSpec::PeriodicPseudo | ModelSpec::Custom(_) => None,
        }
    }

    /// Zero-mode placement implied by the closed-form spectra.
    pub fn zero_mode_expectation(&self) -> ZeroModeExpectation {
        match self {
            // λ_{+,q=-1}(n=0) = 0.
            ModelSpec::ShiftedOscillator(_) => ZeroModeExpectation::On(BranchLabel::Plus),
            // E_{-,n=0} = 0 in the transcribed Scarf II spectrum.
            ModelSpec::ScarfII(_) => ZeroModeExpectation::On(BranchLabel::Minus),
            ModelSpec::PeriodicPseudo => ZeroModeExpectation::Absent,
            ModelSpec::Custom(_) => ZeroModeExpectation::Unknown,
        }
    }
}

/// The composite mass `M = m + S` (evaluated at `z = x − i·b` for the
/// shifted oscillator).
pub fn compose_mass(spec: &ModelSpec, x: f64) -> Result<Complex64> {
    if !x.is_finite() {
        return domain(format!("evaluation point must be finite, got {x}"));
    }
    Ok(match spec {
        ModelSpec::ShiftedOscillator(p) => {
            let z = p.contour(x);
            0.5 * p.big_b * z + p.core_a() / z
        }
        ModelSpec::ScarfII(p) => {
            let sech = 1.0 / x.cosh();
            Complex64::new(p.sum() * x.tanh(), -(p.a - p.b) * sech)
        }
        ModelSpec::PeriodicPseudo => I * pseudo_generator(x),
        ModelSpec::Custom(c) => c.composite(x)?,
    })
}

/// `dM/dx`; analytic for catalog models, finite differences for custom ones.
pub fn mass_derivative(spec: &ModelSpec, x: f64) -> Result<Complex64> {
    if !x.is_finite() {
        return domain(format!("evaluation point must be finite, got {x}"));
    }
    Ok(match spec {
        ModelSpec::ShiftedOscillator(p) => {
            let z = p.contour(x);
            0.5 * p.big_b - p.core_a() / (z * z)
        }
        ModelSpec::ScarfII(p) => {
            let sech = 1.0 / x.cosh();
            Complex64::new(p.sum() * sech * sech, (p.a - p.b) * sech * x.tanh())
        }
        ModelSpec::PeriodicPseudo => I * pseudo_generator_derivative(x),
        ModelSpec::Custom(c) => c.composite_derivative(x)?,
    })
}

/// Superpotential `W = −M`.
pub fn superpotential(spec: &ModelSpec, x: f64) -> Result<Complex64> {
    compose_mass(spec, x).map(|m| -m)
}

/// Partner potential `V_ω = M² − ωM'`, evaluated generically.
pub fn partner_potential(spec: &ModelSpec, omega: BranchLabel, x: f64) -> Result<Complex64> {
    let m = compose_mass(spec, x)?;
    let dm = mass_derivative(spec, x)?;
    let v = m * m - omega.sign() * dm;
    if v.is_finite() {
        Ok(v)
    } else {
        domain(format!("potential of '{}' is not finite at x = {x}", spec.name()))
    }
}

/// Hand-coded closed form of `V_ω` for catalog models; `None` for custom models.
pub fn closed_form_potential(spec: &ModelSpec, omega: BranchLabel, x: f64) -> Option<Complex64> {
    let w = omega.sign();
    match spec {
        ModelSpec::ShiftedOscillator(p) => {
            let z = p.contour(x);
            let a = p.core_a();
            let b = p.big_b;
            Some(0.25 * b * b * z * z + a * (a + w) / (z * z) + b * (a - 0.5 * w))
        }
        ModelSpec::ScarfII(p) => {
            let sech = 1.0 / x.cosh();
            let s = p.sum();
            Some(Complex64::new(
                -p.c1(omega) * sech * sech + s * s,
                -p.c2(omega) * sech * x.tanh(),
            ))
        }
        ModelSpec::PeriodicPseudo => {
            let d = Complex64::new(x.cos(), 2.0 * w * x.sin());
            Some(-6.0 / (d * d) - 25.0 / 16.0)
        }
        ModelSpec::Custom(_) => None,
    }
}

/// Periodic generator `G(x) = −4/(3cos²x − 4) − 5/4`. The denominator lies
/// in `[−4, −1]`.
pub fn pseudo_generator(x: f64) -> f64 {
    let c = x.cos();
    -4.0 / (3.0 * c * c - 4.0) - 1.25
}

pub fn pseudo_generator_derivative(x: f64) -> f64 {
    let c = x.cos();
    let d = 3.0 * c * c - 4.0;
    -24.0 * c * x.sin() / (d * d)
}

/// `V_± = −G² − iωG'` from a real generator and its derivative.
pub fn generator_to_model(
    g: impl Fn(f64) -> f64,
    g_prime: impl Fn(f64) -> f64,
    omega: BranchLabel,
    x: f64,
) -> Complex64 {
    let gx = g(x);
    Complex64::new(-gx * gx, -omega.sign() * g_prime(x))
}

/// Scalar split induced by a generator: `S_i = ωG` and `S_r = −m`, so the
/// composite mass has no real part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorSplit {
    pub scalar_imag: f64,
    pub mass_plus_scalar_real: f64,
}

pub fn generator_split(g: f64, omega: BranchLabel) -> GeneratorSplit {
    GeneratorSplit {
        scalar_imag: omega.sign() * g,
        mass_plus_scalar_real: 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn scarf() -> ModelSpec {
        ModelSpec::ScarfII(ScarfParams::new(2.5, 1.5).unwrap())
    }

    fn osc() -> ModelSpec {
        ModelSpec::ShiftedOscillator(OscillatorParams::new(2.0, 0.25, 1.0).unwrap())
    }

    #[test]
    fn composite_mass_examples() {
        assert!(close(compose_mass(&scarf(), 0.0).unwrap(), Complex64::new(0.0, -1.0), 1e-15));
        let far = compose_mass(&scarf(), 40.0).unwrap();
        assert!(close(far, Complex64::new(4.0, 0.0), 1e-12));
        assert!(close(compose_mass(&osc(), 0.0).unwrap(), Complex64::new(0.0, -1.25), 1e-15));
    }

    #[test]
    fn superpotential_is_negated_mass() {
        assert!(close(superpotential(&scarf(), 0.0).unwrap(), Complex64::new(0.0, 1.0), 1e-15));
        assert!(close(superpotential(&osc(), 0.0).unwrap(), Complex64::new(0.0, 1.25), 1e-15));
        for spec in [scarf(), osc(), ModelSpec::PeriodicPseudo] {
            for k in -20..=20 {
                let x = 0.37 * f64::from(k);
                let sum = superpotential(&spec, x).unwrap() + compose_mass(&spec, x).unwrap();
                assert_eq!(sum, Complex64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn partner_potential_examples() {
        let v = partner_potential(&osc(), BranchLabel::Plus, 0.0).unwrap();
        assert!(close(v, Complex64::new(-2.3125, 0.0), 1e-12), "{v}");
        let v = partner_potential(&scarf(), BranchLabel::Plus, 0.0).unwrap();
        assert!(close(v, Complex64::new(-5.0, 0.0), 1e-12), "{v}");
        for omega in BranchLabel::BOTH {
            let v = partner_potential(&ModelSpec::PeriodicPseudo, omega, 0.0).unwrap();
            assert!(close(v, Complex64::new(-7.5625, 0.0), 1e-12), "{v}");
        }
        let p = ScarfParams::new(2.5, 1.5).unwrap();
        assert_eq!(p.c1(BranchLabel::Plus), 21.0);
        assert_eq!(p.c2(BranchLabel::Plus), 9.0);
    }

    #[test]
    fn generic_and_closed_forms_agree_on_grid() {
        let models = [
            (osc(), -12.0, 12.0),
            (scarf(), -15.0, 15.0),
            (ModelSpec::PeriodicPseudo, -PI, PI),
        ];
        for (spec, lo, hi) in models {
            for omega in BranchLabel::BOTH {
                for j in 0..1001 {
                    let x = lo + (hi - lo) * f64::from(j) / 1000.0;
                    let generic = partner_potential(&spec, omega, x).unwrap();
                    let closed = closed_form_potential(&spec, omega, x).unwrap();
                    assert!(
                        (generic - closed).norm() <= 1e-10 * (1.0 + closed.norm()),
                        "{} ω={omega} x={x}: {generic} vs {closed}",
                        spec.name()
                    );
                }
            }
        }
    }

    #[test]
    fn generator_values_and_symmetry() {
        assert!((pseudo_generator(0.0) - 2.75).abs() < 1e-15);
        assert!((pseudo_generator(PI / 2.0) + 0.25).abs() < 1e-15);
        for k in 0..200 {
            let x = -PI + 0.0314 * f64::from(k);
            assert_eq!(pseudo_generator(x), pseudo_generator(-x));
            // derivative against a centered difference
            let h = 1e-5;
            let fd = (pseudo_generator(x + h) - pseudo_generator(x - h)) / (2.0 * h);
            assert!((fd - pseudo_generator_derivative(x)).abs() < 1e-7);
        }
    }

    #[test]
    fn generator_route_matches_periodic_model() {
        let v = generator_to_model(|_| 1.5, |_| 0.0, BranchLabel::Plus, 0.3);
        assert_eq!(v, Complex64::new(-2.25, 0.0));
        let v0 = generator_to_model(pseudo_generator, pseudo_generator_derivative, BranchLabel::Plus, 0.0);
        assert!(close(v0, Complex64::new(-7.5625, 0.0), 1e-12));
        for omega in BranchLabel::BOTH {
            for x in [FRAC_PI_4, -1.1, 2.9, 0.01] {
                let a = generator_to_model(pseudo_generator, pseudo_generator_derivative, omega, x);
                let b = closed_form_potential(&ModelSpec::PeriodicPseudo, omega, x).unwrap();
                assert!(close(a, b, 1e-12), "{a} vs {b}");
            }
        }
        let split = generator_split(2.0, BranchLabel::Minus);
        assert_eq!(split.scalar_imag, -2.0);
        assert_eq!(split.mass_plus_scalar_real, 0.0);
    }

    #[test]
    fn scarf_is_hermitian_when_a_equals_b() {
        let spec = ModelSpec::ScarfII(ScarfParams::new(1.7, 1.7).unwrap());
        for omega in BranchLabel::BOTH {
            for k in -30..=30 {
                let v = partner_potential(&spec, omega, 0.2 * f64::from(k)).unwrap();
                assert!(v.im.abs() < 1e-14);
            }
        }
        let v = partner_potential(&scarf(), BranchLabel::Plus, 0.5).unwrap();
        assert!(v.im.abs() > 1e-3);
    }

    #[test]
    fn custom_derivative_is_accurate() {
        let spec = ModelSpec::Custom(CustomModel::new("tanh", |x| x.tanh(), |x| 0.1 * x, |x| (-x * x).exp()));
        for x in [-3.0, -0.4, 0.0, 1.3, 7.5] {
            let d = mass_derivative(&spec, x).unwrap();
            let sech = 1.0 / f64::cosh(x);
            let exact = Complex64::new(sech * sech + 0.1, -2.0 * x * (-x * x).exp());
            assert!(close(d, exact, 1e-9), "x={x}: {d} vs {exact}");
        }
        let bad = ModelSpec::Custom(CustomModel::new("pole", |x| 1.0 / x, |_| 0.0, |_| 0.0));
        assert!(compose_mass(&bad, 0.0).is_err());
        assert!(partner_potential(&bad, BranchLabel::Plus, 0.0).is_err());
    }

    #[test]
    fn constructors_validate() {
        assert!(OscillatorParams::new(-1.0, 0.2, 1.0).is_err());
        assert!(OscillatorParams::new(1.0, -0.2, 1.0).is_err());
        assert!(OscillatorParams::new(1.0, 0.2, 0.0).is_err());
        assert!(OscillatorParams::new(f64::NAN, 0.2, 1.0).is_err());
        assert!(ScarfParams::new(-1.0, 0.5).is_err());
        assert!(ScarfParams::new(0.3, 0.3).is_ok());
    }

    #[test]
    fn labels_round_trip() {
        for b in BranchLabel::BOTH {
            let s = serde_json::to_string(&b).unwrap();
            assert_eq!(serde_json::from_str::<BranchLabel>(&s).unwrap(), b);
            assert_eq!(b.to_string().parse::<BranchLabel>().unwrap(), b);
        }
        assert!(serde_json::from_str::<BranchLabel>("0").is_err());
        for q in QuasiParity::BOTH {
            let s = serde_json::to_string(&q).unwrap();
            assert_eq!(serde_json::from_str::<QuasiParity>(&s).unwrap(), q);
        }
        assert!("2".parse::<QuasiParity>().is_err());
    }
}

//! Discretization and verification behaviour on the catalog models and on
//! simple controls with known answers.

use std::f64::consts::PI;

use pdm_dirac::discretize::{assemble_dirac, assemble_schrodinger, make_grid, sample_potential};
use pdm_dirac::eigen::{eigenvalues, eigenvector, hermitian_check};
use pdm_dirac::model::{closed_form_potential, partner_potential, CustomModel};
use pdm_dirac::verify::{pairing_distance, spinor_reconstruct, susy_report, wavefunction_residual};
use pdm_dirac::{BranchLabel, Complex64, EigenConfig, Error, LinearOperator, ModelSpec, ScarfParams};

fn scarf() -> ModelSpec {
    ModelSpec::ScarfII(ScarfParams::new(2.5, 1.5).unwrap())
}

#[test]
fn free_particle_converges_at_second_order() {
    let spec = ModelSpec::Custom(CustomModel::constant_mass(0.0));
    let mut errors = Vec::new();
    for n in [250, 500, 1000, 2000] {
        let grid = make_grid(0.0, PI, n, 0.0).unwrap();
        let op = assemble_schrodinger(&spec, BranchLabel::Plus, &grid).unwrap();
        let spectrum = eigenvalues(&op, &EigenConfig::default()).unwrap();
        // exact levels k² on (0, π)
        let err = (1..=5).map(|k| (spectrum.eigenvalues[k - 1].re - (k * k) as f64).abs()).fold(0.0, f64::max);
        errors.push(err);
    }
    for w in errors.windows(2) {
        let order = (w[0] / w[1]).log2();
        assert!(order >= 1.9, "observed order {order} from {errors:?}");
    }
}

#[test]
fn constant_mass_dirac_squares_to_the_first_order_product() {
    let m0 = 1.3;
    let spec = ModelSpec::Custom(CustomModel::constant_mass(m0));
    let grid = make_grid(-4.0, 4.0, 81, 0.0).unwrap();
    let dirac = assemble_dirac(&spec, &grid).unwrap();
    let cfg = EigenConfig::default();
    let energies = eigenvalues(&dirac, &cfg).unwrap();
    let product = eigenvalues(&dirac.squared_upper(), &cfg).unwrap();
    let squares: Vec<Complex64> = energies.eigenvalues.iter().map(|e| e * e).collect();
    let doubled: Vec<Complex64> = product.eigenvalues.iter().flat_map(|m| [*m, *m]).collect();
    assert!(pairing_distance(&squares, &doubled) <= 1e-8 * dirac.norm_inf().powi(2));
    // λ ≥ m₀² for the constant shift of the free product
    assert!(squares.iter().all(|s| s.re >= m0 * m0 - 1e-8));
}

#[test]
fn squared_block_reproduces_partner_operator_in_the_interior() {
    // real mass profile, N ≤ 200
    let spec = ModelSpec::Custom(CustomModel::new("tanh", |x: f64| x.tanh(), |_| 0.0, |_| 0.0));
    let n = 160;
    let grid = make_grid(-5.0, 5.0, n, 0.0).unwrap();
    let dirac = assemble_dirac(&spec, &grid).unwrap();
    let ab = dirac.squared_upper();
    let h_plus = assemble_schrodinger(&spec, BranchLabel::Plus, &grid).unwrap();
    let h = grid.spacing;
    // AB uses the wide stencil D₁², so test both on smooth data away from the walls.
    let f: Vec<Complex64> = grid.points().iter().map(|x| Complex64::new((-x * x).exp(), 0.0)).collect();
    let a = ab.apply(&f);
    let b = h_plus.apply(&f);
    let diff = a.iter().zip(&b).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max);
    assert!(diff <= 5.0 * h * h, "max difference {diff:e} at h = {h}");
}

#[test]
fn scarf_spinor_reconstruction_for_both_signs() {
    let spec = scarf();
    let grid = make_grid(-15.0, 15.0, 3000, 0.0).unwrap();
    let cfg = EigenConfig::default();
    let op = assemble_schrodinger(&spec, BranchLabel::Plus, &grid).unwrap();
    let pair = eigenvector(&op, Complex64::new(7.0, 0.0), &cfg).unwrap();
    assert!((pair.value.re - 7.0).abs() < 5e-3);
    for sign in [1.0, -1.0] {
        let energy = Complex64::new(sign * pair.value.re.sqrt(), 0.0);
        let rec = spinor_reconstruct(&pair.vector, &spec, energy, BranchLabel::Plus, &grid).unwrap();
        assert!(rec.residual <= 1e-4, "E = {energy}: residual {:e}", rec.residual);
    }
}

#[test]
fn zero_mode_reconstruction_is_refused() {
    let spec = scarf();
    let grid = make_grid(-15.0, 15.0, 300, 0.0).unwrap();
    let psi = vec![Complex64::new(1.0, 0.0); 300];
    let r = spinor_reconstruct(&psi, &spec, Complex64::new(1e-9, 0.0), BranchLabel::Plus, &grid);
    assert!(matches!(r, Err(Error::ZeroMode(_))));
}

#[test]
fn scarf_ground_state_decays_away_from_the_centre() {
    let spec = scarf();
    let grid = make_grid(-15.0, 15.0, 1500, 0.0).unwrap();
    let op = assemble_schrodinger(&spec, BranchLabel::Plus, &grid).unwrap();
    let pair = eigenvector(&op, Complex64::new(7.0, 0.0), &EigenConfig::default()).unwrap();
    let xs = grid.points();
    let peak = pair.vector.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let tail = xs
        .iter()
        .zip(&pair.vector)
        .filter(|(x, _)| x.abs() > 10.0)
        .map(|(_, z)| z.norm())
        .fold(0.0, f64::max);
    assert!(tail < 1e-6 * peak, "tail {tail:e} vs peak {peak:e}");
}

#[test]
fn generic_potential_matches_closed_forms() {
    let models = [
        (scarf(), -6.0, 6.0),
        (ModelSpec::ShiftedOscillator(pdm_dirac::OscillatorParams::new(2.0, 0.25, 1.0).unwrap()), -6.0, 6.0),
        (ModelSpec::PeriodicPseudo, -PI, PI),
    ];
    for (spec, a, b) in models {
        for omega in BranchLabel::BOTH {
            for k in 0..=40 {
                let x = a + (b - a) * k as f64 / 40.0;
                let generic = partner_potential(&spec, omega, x).unwrap();
                let closed = closed_form_potential(&spec, omega, x).unwrap();
                assert!((generic - closed).norm() <= 1e-9 * (1.0 + closed.norm()), "{} {omega} x={x}", spec.name());
            }
        }
    }
}

#[test]
fn constant_mass_control_has_empty_residue() {
    let spec = ModelSpec::Custom(CustomModel::constant_mass(0.7));
    let grid = make_grid(-5.0, 5.0, 400, 0.0).unwrap();
    let report = susy_report(&spec, &grid, 5e-3, &EigenConfig::default()).unwrap();
    assert!(report.passed(), "{}", report.notes);
}

#[test]
fn real_potential_gives_hermitian_operator() {
    let spec = ModelSpec::Custom(CustomModel::new("gauss", |x: f64| (-x * x).exp(), |_| 0.0, |_| 0.0));
    let grid = make_grid(-5.0, 5.0, 200, 0.0).unwrap();
    let op = assemble_schrodinger(&spec, BranchLabel::Minus, &grid).unwrap();
    assert_eq!(hermitian_check(&op), 0.0);
    let pt = assemble_schrodinger(&scarf(), BranchLabel::Plus, &grid).unwrap();
    assert!(hermitian_check(&pt) > 1e-3);
    let sampled = sample_potential(&spec, BranchLabel::Minus, &grid).unwrap();
    assert!(sampled.values.iter().all(|v| v.im == 0.0));
}

#[test]
fn periodic_wavefunction_n4_converges() {
    let coarse = make_grid(-PI, PI, 1000, 0.0).unwrap();
    let fine = make_grid(-PI, PI, 2000, 0.0).unwrap();
    for branch in BranchLabel::BOTH {
        let r1 = wavefunction_residual(4, branch, &coarse).unwrap();
        let r2 = wavefunction_residual(4, branch, &fine).unwrap();
        assert!((r1 / r2).log2() >= 1.8);
        assert!(r2 <= 1e-4);
    }
}

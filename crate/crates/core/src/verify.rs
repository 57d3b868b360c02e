//! Named identity and invariant checks, grouped per module.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    build_gammas, conformal_generators, conjugation_report, majorana_unitary, ComplexMatrix4, Metric, Representation,
};
use crate::barut::{
    closed_form_masses, coupled_system, determinant_ratio, superposition_operator, factorization_defect, lepton_table,
    null_dimensions, param_map, param_map_inverse, second_order_spectrum, third_order_operator, BarutParams, Branch,
    CanonicalParams,
};
use crate::error::{Error, Result};
use crate::fgm::{barut_decomposition, gamma5_structure, general_current, gordon_defect, squared_dirac_identity, EMField, GeneralCurrentParams};
use crate::majorana::{lattice_points, real_plane_wave, recombine, split_equations, transform_operator, MajoranaSplit};
use crate::noether::{
    alpha3_charge_bilinear, branch_masses, charge_density_samples, euler_lagrange_residual, invariants, quadrature,
    variation_report, LagrangianParams, Mode, ModeSet,
};
use crate::spinors::{build_u_spinor, build_v_spinor, two_spinor_residual, mixed_helicity_residual, gram_defect, Helicity};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub value: f64,
    pub tolerance: f64,
}

impl Check {
    /// Passes when value ≤ tolerance.
    pub fn at_most(name: &str, value: f64, tolerance: f64) -> Self {
        Self { name: name.to_string(), passed: value <= tolerance, value, tolerance }
    }

    /// Passes when value == expected; `tolerance` records the expectation.
    pub fn equals(name: &str, value: f64, expected: f64) -> Self {
        Self { name: name.to_string(), passed: value == expected, value, tolerance: expected }
    }

    pub fn holds(name: &str, ok: bool) -> Self {
        Self { name: name.to_string(), passed: ok, value: if ok { 1.0 } else { 0.0 }, tolerance: 1.0 }
    }

    fn from_result(name: &str, r: Result<f64>, tolerance: f64) -> Self {
        match r {
            Ok(v) => Self::at_most(name, v, tolerance),
            Err(_) => Self { name: name.to_string(), passed: false, value: f64::INFINITY, tolerance },
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, if self.passed { "PASS" } else { "FAIL" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Spinors,
    Barut,
    Majorana,
    Noether,
    Fgm,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Algebra, Suite::Spinors, Suite::Barut, Suite::Majorana, Suite::Noether, Suite::Fgm];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Spinors => "spinors",
            Suite::Barut => "barut",
            Suite::Majorana => "majorana",
            Suite::Noether => "noether",
            Suite::Fgm => "fgm",
        }
    }

    /// "all" expands to every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Self::ALL.to_vec());
        }
        Ok(vec![s.parse()?])
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("suite `{s}`; expected all, algebra, spinors, barut, majorana, noether or fgm")))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub tolerance: f64,
    /// Replace U by a non-unitary matrix; every check depending on it must fail.
    pub corrupt_majorana: bool,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { tolerance: 1e-10, corrupt_majorana: false, seed: 20_240_611 }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let mut rng = StdRng::seed_from_u64(opts.seed);
    let checks = match suite {
        Suite::Algebra => algebra_checks(opts),
        Suite::Spinors => spinor_checks(opts, &mut rng),
        Suite::Barut => barut_checks(opts, &mut rng),
        Suite::Majorana => majorana_checks(opts),
        Suite::Noether => noether_checks(opts, &mut rng),
        Suite::Fgm => fgm_checks(opts, &mut rng),
    };
    SuiteReport { suite, checks }
}

pub fn run_suites(suites: &[Suite], opts: &VerifyOptions) -> Vec<SuiteReport> {
    suites.iter().map(|&s| run_suite(s, opts)).collect()
}

pub fn unitary_under_test(opts: &VerifyOptions) -> ComplexMatrix4 {
    if opts.corrupt_majorana {
        majorana_unitary() * 1.1
    } else {
        majorana_unitary()
    }
}

fn algebra_checks(opts: &VerifyOptions) -> Vec<Check> {
    let tol = opts.tolerance;
    let mut out = Vec::new();
    let sets: Vec<_> = Representation::ALL
        .iter()
        .flat_map(|&r| [Metric::Minkowski, Metric::Euclidean].map(|m| build_gammas(r, m)))
        .collect();
    let worst = |f: &dyn Fn(&crate::algebra::GammaSet) -> f64| sets.iter().map(f).fold(0.0, f64::max);
    out.push(Check::at_most("Clifford relations", worst(&|g| g.clifford_defect()), tol));
    out.push(Check::at_most("gamma5 anticommutes and squares to one", worst(&|g| g.gamma5_defect()), tol));
    out.push(Check::at_most("gamma5 equals the ordered product", worst(&|g| g.gamma5_product_defect()), tol));

    let chiral = build_gammas(Representation::Chiral, Metric::Minkowski);
    let rep = conjugation_report(&chiral.mu, &majorana_unitary());
    out.push(Check::at_most("C is invertible", rep.inverse_defect, tol));
    out.push(Check::holds("C squared is minus one", rep.square_sign == Some(-1.0)));
    out.push(Check::at_most("C conjugates gamma to minus gamma", rep.conjugate_flip_defect, tol));
    out.push(Check::at_most("C gamma0 transposes every gamma", rep.transpose_flip_defect_c_gamma0, tol));

    let g = conformal_generators(&chiral);
    out.push(Check::equals("O(4,2) generators independent", g.independent_count() as f64, 15.0));
    out.push(Check::at_most("O(4,2) commutators close", g.closure_residual(), tol));
    out
}

/// (a, b) on the branch with mass m: a = 1 − s b.
fn compatible_pair(rng: &mut StdRng) -> (f64, f64) {
    let b: f64 = rng.gen_range(0.0..0.8);
    let s = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    (1.0 - s * b, b)
}

fn random_momentum(rng: &mut StdRng, scale: f64) -> [f64; 3] {
    std::array::from_fn(|_| rng.gen_range(-scale..scale))
}

fn spinor_checks(opts: &VerifyOptions, rng: &mut StdRng) -> Vec<Check> {
    let tol = opts.tolerance;
    let mut mixed = 0.0_f64;
    let mut two_spinor = 0.0_f64;
    let mut gram = 0.0_f64;
    let mut dirac = 0.0_f64;
    let mut failed = false;
    let g = build_gammas(Representation::Chiral, Metric::Minkowski);
    for _ in 0..50 {
        let (a, b) = compatible_pair(rng);
        let m = rng.gen_range(0.2..3.0);
        let p = random_momentum(rng, 2.0);
        let built = (|| -> Result<()> {
            let up = build_u_spinor(p, Helicity::Plus, a, b, m)?;
            let um = build_u_spinor(p, Helicity::Minus, a, b, m)?;
            mixed = mixed.max(mixed_helicity_residual(&up, &um, a, b, m)?).max(mixed_helicity_residual(&um, &up, a, b, m)?);
            two_spinor = two_spinor.max(two_spinor_residual(&up, &um, a, b, m)?).max(two_spinor_residual(&um, &up, a, b, m)?);
            for h in Helicity::BOTH {
                let u = build_u_spinor(p, h, 1.0, 0.0, m)?;
                let v = build_v_spinor(p, h, 1.0, 0.0, m)?;
                let pu = g.slash(&u.momentum.components);
                let id = ComplexMatrix4::identity();
                let ru = crate::algebra::matrix::spinor::norm(&(pu - id * m).apply(&u.components));
                let rv = crate::algebra::matrix::spinor::norm(&(pu + id * m).apply(&v.components));
                dirac = dirac.max(ru / m).max(rv / m);
            }
            let states: Vec<_> = Helicity::BOTH
                .iter()
                .flat_map(|&h| [build_u_spinor(p, h, 1.0, 0.0, m), build_v_spinor(p, h, 1.0, 0.0, m)])
                .collect::<Result<_>>()?;
            gram = gram.max(gram_defect(&states));
            Ok(())
        })();
        failed |= built.is_err();
    }
    let mut out = vec![Check::holds("spinor construction succeeds", !failed)];
    out.push(Check::at_most("mixed-helicity constraint", mixed, 1e3 * tol));
    out.push(Check::at_most("boosted two-spinor relations", two_spinor, 1e3 * tol));
    out.push(Check::at_most("Dirac limit solves the Dirac equation", dirac, 1e3 * tol));
    out.push(Check::at_most("u and v orthonormal", gram, 1e3 * tol));
    out
}

/// Random second-order parameters in the ranges of the spectrum property.
pub fn random_barut(rng: &mut StdRng) -> BarutParams {
    BarutParams { a: rng.gen_range(0.1..3.0), b: rng.gen_range(0.0..0.99), b1: 0.0, b2: 0.0, m: rng.gen_range(0.1..10.0) }
}

fn barut_checks(opts: &VerifyOptions, rng: &mut StdRng) -> Vec<Check> {
    let tol = opts.tolerance;
    let mut out = Vec::new();
    let mut spec_err = 0.0_f64;
    let mut null_ok = true;
    let mut fact = 0.0_f64;
    let mut roundtrip = 0.0_f64;
    for _ in 0..200 {
        let p = random_barut(rng);
        match second_order_spectrum(&p) {
            Ok(r) => spec_err = spec_err.max(r.max_relative_error()),
            Err(_) => spec_err = f64::INFINITY,
        }
        let op = superposition_operator(&p, Representation::Chiral, Metric::Minkowski);
        let k = random_momentum(rng, 1.0);
        for mass in closed_form_masses(&p) {
            if mass > 1e-9 * p.m {
                let [pos, neg] = null_dimensions(&op, k, mass, 1e-8);
                null_ok &= pos + neg == 4;
            }
        }
        fact = fact.max(factorization_defect(&p, Representation::Chiral, Metric::Minkowski));
        if let Ok(back) = param_map(&p).and_then(|c| param_map_inverse(&c, p.m)) {
            roundtrip = roundtrip.max((back.a - p.a).abs() + (back.b - p.b).abs());
        } else {
            roundtrip = f64::INFINITY;
        }
    }
    out.push(Check::at_most("spectrum matches closed form", spec_err, 1e-8));
    out.push(Check::holds("four null directions per mass", null_ok));
    out.push(Check::at_most("second-order operator factorizes", fact, 1e3 * tol));
    out.push(Check::at_most("parameter map round trip", roundtrip, 1e3 * tol));

    let p3 = BarutParams { a: 1.0, b: 0.0, b1: 0.3, b2: 0.2, m: 1.0 };
    let mut product = 0.0_f64;
    let mut three = false;
    for branch in Branch::ALL {
        match third_order_operator(&p3, branch) {
            Ok(t) => {
                product = product.max(t.product_defect);
                if branch == (Branch { s1: 1, s2: 1 }) {
                    let want = [0.7, 1.3, 1.5];
                    three = t.distinct.len() == 3 && t.distinct.iter().zip(want).all(|(x, y)| (x - y).abs() < 1e-8);
                }
            }
            Err(_) => product = f64::INFINITY,
        }
    }
    out.push(Check::at_most("third-order product matches expansion", product, 1e-12));
    out.push(Check::holds("third-order branch (+,+) has three masses", three));
    out.push(Check::from_result("coupled system reduces", coupled_system(&p3).map(|s| s.reduction_defect), 1e-12));
    let momenta: Vec<[f64; 4]> = (0..100).map(|_| std::array::from_fn(|_| rng.gen_range(-2.0..2.0))).collect();
    out.push(Check::from_result(
        "reduced determinant proportional to third-order product",
        determinant_ratio(&p3, &momenta).map(|r| r.max_relative_deviation),
        1e-10,
    ));
    let leptons = lepton_table(0.511, 1.0 / 137.03).map(|t| {
        let alpha = 1.0 / 137.03;
        let muon = 0.511 * (1.0 + 3.0 / (2.0 * alpha));
        let tau = 0.511 * (1.0 + 1.5 / alpha * 17.0);
        ((t.muon - muon) / muon).abs().max(((t.tau - tau) / tau).abs())
    });
    out.push(Check::from_result("lepton formula", leptons, 1e-14));
    out
}

/// Plane-wave pair for the recombination check.
pub fn majorana_split(p: &BarutParams) -> Result<MajoranaSplit> {
    let eqs = split_equations(p, Representation::Majorana)?;
    let m1 = p.m * (1.0 + p.b) / p.a;
    let m2 = p.m * (1.0 - p.b) / p.a;
    Ok(MajoranaSplit {
        psi1: vec![
            real_plane_wave(&eqs.first, [0.3, -0.2, 0.5], m1, 0, Complex64::new(0.7, -0.2))?,
            real_plane_wave(&eqs.first, [0.0, 0.7, 0.1], m1, 1, Complex64::new(0.1, 0.4))?,
        ],
        psi2: vec![real_plane_wave(&eqs.second, [0.3, -0.2, 0.5], m2, 1, Complex64::new(-0.3, 0.5))?],
    })
}

fn majorana_checks(opts: &VerifyOptions) -> Vec<Check> {
    let tol = opts.tolerance;
    let u = unitary_under_test(opts);
    let chiral = build_gammas(Representation::Chiral, Metric::Minkowski);
    let mut out = vec![Check::at_most("Majorana U unitary", u.unitarity_defect(), tol)];
    let transformed: Result<Vec<ComplexMatrix4>> = chiral.mu.iter().map(|g| transform_operator(g, &u)).collect();
    out.push(Check::from_result(
        "transformed gammas purely imaginary",
        transformed.map(|gs| gs.iter().map(|g| g.max_real_part()).fold(0.0, f64::max)),
        1e-12,
    ));
    let stored = build_gammas(Representation::Majorana, Metric::Minkowski);
    out.push(Check::at_most("stored Majorana set purely imaginary", stored.mu.iter().map(|g| g.max_real_part()).fold(0.0, f64::max), 1e-12));
    let rep = conjugation_report(&chiral.mu, &u);
    out.push(Check::at_most("U C U^T = -1", rep.antilinear_to_minus_k_defect, tol));
    out.push(Check::at_most("U C U^-1 = C", rep.similarity_plus_c_defect, tol));
    let p = BarutParams { a: 1.2, b: 0.4, b1: 0.0, b2: 0.0, m: 0.9 };
    out.push(Check::from_result("split equations have real coefficients", split_equations(&p, Representation::Majorana).map(|s| s.max_imag), 1e-12));
    let r = majorana_split(&p).and_then(|s| recombine(&s, &p, &lattice_points(4, 0.37))).map(|r| r.residual());
    out.push(Check::from_result("real solutions recombine", r, tol));
    let wrong = split_equations(&p, Representation::Majorana).and_then(|eqs| {
        let split = MajoranaSplit {
            psi1: vec![real_plane_wave(&eqs.second, [0.1, 0.2, 0.0], p.m * (1.0 - p.b) / p.a, 0, Complex64::new(1.0, 0.0))?],
            psi2: vec![],
        };
        recombine(&split, &p, &lattice_points(3, 0.5))
    });
    out.push(Check::holds("wrong mass assignment detected", wrong.map(|r| r.first_order > 1e-3).unwrap_or(false)));
    out
}

fn complex_unit(rng: &mut StdRng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// On-shell couplings with α₁ purely imaginary and up to three modes of mass m.
pub fn random_on_shell(rng: &mut StdRng) -> (LagrangianParams, ModeSet) {
    let m: f64 = rng.gen_range(0.5..2.0);
    let alpha1 = Complex64::new(0.0, rng.gen_range(0.2..1.0));
    let alpha2 = rng.gen_range(-0.4..0.4);
    let alpha3 = rng.gen_range(-1.0..1.0);
    let alpha4 = LagrangianParams::on_shell_alpha4(alpha1, alpha2, m).re;
    let count = rng.gen_range(1..=3);
    let modes = (0..count)
        .map(|_| Mode {
            n: std::array::from_fn(|_| rng.gen_range(-2..=2)),
            h: if rng.gen_bool(0.5) { 0.5 } else { -0.5 },
            a: complex_unit(rng),
            b: complex_unit(rng),
            mass: None,
        })
        .collect();
    let l = rng.gen_range(6.0..12.0);
    (LagrangianParams::new(alpha1, alpha2, alpha3, alpha4), ModeSet { l, m, modes })
}

/// One mode on each branch, amplitudes tuned so the diagonal charges cancel.
pub fn two_branch_set() -> Result<(LagrangianParams, ModeSet)> {
    let p = LagrangianParams::new(Complex64::new(0.0, 0.5), 0.3, 0.0, 1.3);
    let [m1, m2] = branch_masses(&p).ok_or_else(|| Error::InvalidParameter("couplings have no real branches".into()))?;
    let one = |n: [i32; 3], mass: f64, a: f64| Mode { n, h: 0.5, a: Complex64::new(a, 0.0), b: Complex64::new(0.0, 0.0), mass: Some(mass) };
    let q1 = invariants(&p, &ModeSet::new(8.0, 1.0, vec![one([1, 0, 0], m1, 1.0)])?, 0.0)?.charge.re;
    let q2 = invariants(&p, &ModeSet::new(8.0, 1.0, vec![one([0, 0, 0], m2, 1.0)])?, 0.0)?.charge.re;
    if !(q1 > 0.0 && q2 < 0.0) {
        return Err(Error::Incompatible { reason: "branch charges do not have opposite signs".into(), residual: q1 * q2 });
    }
    Ok((p, ModeSet::new(8.0, 1.0, vec![one([1, 0, 0], m1, 1.0), one([0, 0, 0], m2, (q1 / -q2).sqrt())])?))
}

fn relative(x: Complex64, y: Complex64, scale: f64) -> f64 {
    (x - y).norm() / scale.max(f64::MIN_POSITIVE)
}

fn noether_checks(opts: &VerifyOptions, rng: &mut StdRng) -> Vec<Check> {
    let tol = opts.tolerance;
    let mut out = Vec::new();
    let probe = LagrangianParams::new(Complex64::new(0.1, 0.6), 0.35, 1.7, 0.8);
    let v = variation_report(&probe.euclidean());
    out.push(Check::at_most("variation reproduces field equation", v.forward_defect.max(v.conjugate_defect), tol));
    out.push(Check::equals("alpha3 drops out of the field equation", v.alpha3_contribution, 0.0));

    let mut quad = 0.0_f64;
    let mut time = 0.0_f64;
    let mut factor = 0.0_f64;
    let mut a3_charge = 0.0_f64;
    let mut el = 0.0_f64;
    let mut failed = false;
    for _ in 0..5 {
        let (p, set) = random_on_shell(rng);
        let run = (|| -> Result<()> {
            let r0 = invariants(&p, &set, 0.0)?;
            let r1 = invariants(&p, &set, 1.7)?;
            let (hq, qq) = quadrature(&p.euclidean(), &set, 0.0, 32)?;
            let hs: f64 = r0.hamiltonian_terms.iter().map(|z| z.norm()).sum();
            let qs: f64 = r0.charge_terms.iter().map(|z| z.norm()).sum();
            quad = quad
                .max(relative(r0.hamiltonian, hq.iter().sum(), hs))
                .max(relative(r0.charge, qq.iter().sum(), qs));
            time = time.max(relative(r0.hamiltonian, r1.hamiltonian, hs)).max(relative(r0.charge, r1.charge, qs));
            factor = factor
                .max(relative(r0.hamiltonian, r0.hamiltonian_mode_sum, hs))
                .max(relative(r0.charge, r0.charge_mode_sum, qs));
            a3_charge = a3_charge.max(r0.charge_terms[2].norm() / qs.max(f64::MIN_POSITIVE));
            el = el.max(euler_lagrange_residual(&p, &set, 0.3, 6)?);
            Ok(())
        })();
        failed |= run.is_err();
    }
    out.push(Check::holds("random mode sets evaluate", !failed));
    out.push(Check::at_most("closed form matches quadrature", quad, 1e-8));
    out.push(Check::at_most("H and Q time independent", time, 1e-8));
    out.push(Check::at_most("H and Q factor through mode coefficients", factor, tol));
    out.push(Check::at_most("alpha3 charge term vanishes", a3_charge, tol));
    out.push(Check::at_most("on-shell modes solve the field equation", el, tol));

    let mut bilinear = 0.0_f64;
    for _ in 0..100 {
        let k = random_momentum(rng, 3.0);
        let m = rng.gen_range(0.3..3.0);
        for h in Helicity::BOTH {
            for h2 in Helicity::BOTH {
                bilinear = bilinear.max(alpha3_charge_bilinear(k, h, h2, m).map(|z| z.norm()).unwrap_or(f64::INFINITY));
            }
        }
    }
    out.push(Check::at_most("alpha3 spin bilinear vanishes", bilinear, tol));

    let dirac = ModeSet { l: 5.0, m: 1.0, modes: vec![Mode { n: [1, 0, 0], h: 0.5, a: Complex64::new(1.0, 0.0), b: Complex64::new(0.0, 0.0), mass: None }] };
    out.push(Check::holds(
        "Dirac energy positive",
        invariants(&LagrangianParams::dirac(1.0), &dirac, 0.0).map(|r| r.hamiltonian.re > 0.0).unwrap_or(false),
    ));
    let sign_change = two_branch_set()
        .and_then(|(p, set)| charge_density_samples(&p, &set, 0.0, 8))
        .map(|rho| rho.iter().any(|&x| x < 0.0) && rho.iter().any(|&x| x > 0.0));
    out.push(Check::holds("two-branch charge density takes both signs", sign_change.unwrap_or(false)));
    out
}

fn random_field(rng: &mut StdRng) -> Result<EMField> {
    let mut f = [[0.0; 4]; 4];
    for mu in 0..4 {
        for nu in mu + 1..4 {
            f[mu][nu] = rng.gen_range(-1.0..1.0);
            f[nu][mu] = -f[mu][nu];
        }
    }
    EMField::uniform(rng.gen_range(0.1..1.0), std::array::from_fn(|_| rng.gen_range(-0.5..0.5)), f)
}

fn fgm_checks(opts: &VerifyOptions, rng: &mut StdRng) -> Vec<Check> {
    let tol = opts.tolerance;
    let mut out = Vec::new();
    let fields = random_field(rng).map(|u| [EMField::free(), EMField::constant(0.6, [0.2, 0.1, -0.4, 0.3]), u]);
    let identity = fields.as_ref().map_err(Clone::clone).map(|fs| {
        fs.iter()
            .flat_map(|f| Representation::ALL.map(|r| squared_dirac_identity(f, 1.2, r)))
            .fold(0.0, f64::max)
    });
    out.push(Check::from_result("squared Dirac identity", identity, tol));
    let chirality = fields.and_then(|fs| {
        fs.iter().try_fold(0.0_f64, |acc, f| Ok(acc.max(gamma5_structure(f, 1.1, Representation::Chiral)?.max_defect())))
    });
    out.push(Check::from_result("operator commutes with gamma5", chirality, tol));

    let mut exact = 0.0_f64;
    for _ in 0..100 {
        let c = CanonicalParams { alpha2: rng.gen_range(0.0..2.0), kappa: rng.gen_range(-2.0..2.0) };
        let m = rng.gen_range(0.2..3.0);
        exact = exact.max(barut_decomposition(&c, m, Representation::Chiral).map(|r| r.exact_residual).unwrap_or(f64::INFINITY));
    }
    out.push(Check::equals("Barut operator splits into Dirac and FGM parts", exact, 0.0));

    let mut gordon = 0.0_f64;
    let mut divergence = 0.0_f64;
    for _ in 0..20 {
        let (p1, p2) = (random_momentum(rng, 1.5), random_momentum(rng, 1.5));
        let m = rng.gen_range(0.3..2.0);
        let params = GeneralCurrentParams { alpha1: complex_unit(rng), alpha2: complex_unit(rng), alpha3: complex_unit(rng) };
        for h1 in Helicity::BOTH {
            for h2 in Helicity::BOTH {
                gordon = gordon.max(gordon_defect(p1, h1, p2, h2, m).unwrap_or(f64::INFINITY));
                divergence = divergence.max(general_current(&params, p1, h1, p2, h2, m).map(|r| r.divergence.norm()).unwrap_or(f64::INFINITY));
            }
        }
    }
    out.push(Check::at_most("Gordon decomposition", gordon, tol));
    out.push(Check::at_most("general current conserved", divergence, tol));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for suite in Suite::ALL {
            let r = run_suite(suite, &VerifyOptions::default());
            assert_eq!(r.failed(), 0, "{:?}", r.first_failure());
        }
    }

    #[test]
    fn corrupted_unitary_fails() {
        let opts = VerifyOptions { corrupt_majorana: true, ..Default::default() };
        let r = run_suite(Suite::Majorana, &opts);
        assert!(r.failed() >= 2);
        assert_eq!(r.first_failure().unwrap().name, "Majorana U unitary");
    }

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse_selection("all").unwrap().len(), 6);
        assert_eq!("noether".parse::<Suite>().unwrap(), Suite::Noether);
        assert!("physics".parse::<Suite>().is_err());
    }

    #[test]
    fn noether_names_alpha3_check() {
        let r = run_suite(Suite::Noether, &VerifyOptions::default());
        let c = r.checks.iter().find(|c| c.name == "alpha3 charge term vanishes").unwrap();
        assert_eq!(c.to_string(), "alpha3 charge term vanishes: PASS");
    }
}

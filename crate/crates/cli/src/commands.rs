use std::path::Path;

use barut_core::algebra::{build_gammas, conjugation_report, ComplexMatrix4, Metric, Representation};
use barut_core::barut::{
    closed_form_masses, superposition_operator, lepton_table, null_dimensions, second_order_spectrum_in, third_order_operator,
    BarutParams, Branch, MassState,
};
use barut_core::fgm::{gamma5_structure, squared_dirac_identity, EMField, FieldFamily};
use barut_core::noether::{invariants, quadrature, InvariantReport, LagrangianParams, ModeSet};
use barut_core::verify::{run_suites, Suite, SuiteReport, VerifyOptions};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use crate::config::Config;
use crate::error::CliError;
use crate::output::csv;

/// Relative agreement demanded between root finding and the closed form.
pub const SPECTRUM_TOL: f64 = 1e-8;
/// Relative agreement demanded between closed-form invariants and quadrature.
pub const QUADRATURE_TOL: f64 = 1e-8;
const NULL_PROBE: [f64; 3] = [0.3, -0.2, 0.1];

pub enum Rendered {
    Json(Value),
    Text(String),
}

pub struct Outcome {
    pub rendered: Rendered,
    /// Set when the report itself detected a failed check.
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(rendered: Rendered) -> Self {
        Self { rendered, failure: None }
    }
}

fn json<T: Serialize>(body: &T) -> Result<Rendered, CliError> {
    Ok(Rendered::Json(crate::output::document(body)?))
}

#[derive(Serialize)]
struct SpectrumEntry {
    mass: f64,
    numeric: f64,
    multiplicity: usize,
    branch: String,
    residual: f64,
    null_dimensions: Option<[usize; 2]>,
}

#[derive(Serialize)]
struct SpectrumOutput {
    params: BarutParams,
    order: u8,
    branch: Option<String>,
    masses: Vec<SpectrumEntry>,
    distinct_masses: Option<Vec<f64>>,
    product_defect: Option<f64>,
    max_relative_error: f64,
    warnings: Vec<String>,
}

fn entries(states: &[MassState], null: impl Fn(f64) -> Option<[usize; 2]>) -> Vec<SpectrumEntry> {
    states
        .iter()
        .map(|s| SpectrumEntry {
            mass: s.mass,
            numeric: s.numeric,
            multiplicity: s.multiplicity,
            branch: s.branch.clone(),
            residual: s.residual,
            null_dimensions: null(s.mass),
        })
        .collect()
}

pub struct SpectrumArgs {
    pub params: BarutParams,
    pub third_order: bool,
    pub branch: Branch,
    pub rep: Representation,
}

pub fn spectrum(args: &SpectrumArgs, csv_out: bool) -> Result<Outcome, CliError> {
    let p = args.params;
    p.validate()?;
    let out = if args.third_order {
        let t = third_order_operator(&p, args.branch)?;
        let mut failure = None;
        if t.product_defect > 1e-12 {
            failure = Some(format!("third-order product defect {:e}", t.product_defect));
        }
        let err = t.spectrum.max_relative_error();
        if err > SPECTRUM_TOL {
            failure = Some(format!("third-order spectrum relative error {err:e}"));
        }
        let body = SpectrumOutput {
            params: p,
            order: 3,
            branch: Some(args.branch.label()),
            masses: entries(&t.spectrum.masses, |_| None),
            distinct_masses: Some(t.distinct.clone()),
            product_defect: Some(t.product_defect),
            max_relative_error: err,
            warnings: t.spectrum.warnings.clone(),
        };
        (body, failure)
    } else {
        let r = second_order_spectrum_in(&p, args.rep)?;
        let op = superposition_operator(&p, args.rep, Metric::Minkowski);
        let null = |m: f64| (m > 1e-12 * p.m).then(|| null_dimensions(&op, NULL_PROBE, m, 1e-8));
        let masses = entries(&r.masses, null);
        let err = r.max_relative_error();
        let mut failure = None;
        if err > SPECTRUM_TOL {
            failure = Some(format!("spectrum relative error {err:e} against the closed form"));
        }
        if masses.iter().filter_map(|e| e.null_dimensions).any(|[a, b]| a + b != 4) {
            failure = Some("null space is not four-dimensional".into());
        }
        let closed = closed_form_masses(&p);
        if r.masses.iter().any(|s| closed.iter().all(|c| (c - s.mass).abs() > SPECTRUM_TOL * c.abs().max(1.0))) {
            failure = Some("reported mass is not on the closed-form spectrum".into());
        }
        let body = SpectrumOutput {
            params: p,
            order: 2,
            branch: None,
            masses,
            distinct_masses: None,
            product_defect: None,
            max_relative_error: err,
            warnings: r.warnings,
        };
        (body, failure)
    };
    let (body, failure) = out;
    let rendered = if csv_out {
        let rows: Vec<Vec<String>> = body
            .masses
            .iter()
            .map(|e| vec![e.mass.to_string(), e.numeric.to_string(), e.multiplicity.to_string(), e.branch.clone(), e.residual.to_string()])
            .collect();
        Rendered::Text(csv(&["mass", "numeric", "multiplicity", "branch", "residual"], &rows))
    } else {
        json(&body)?
    };
    Ok(Outcome { rendered, failure })
}

#[derive(Serialize)]
struct LeptonOutput {
    alpha_inverse: f64,
    electron_mass_mev: f64,
    electron: f64,
    muon: f64,
    tau: f64,
}

pub fn leptons(cfg: &Config, csv_out: bool) -> Result<Outcome, CliError> {
    let t = lepton_table(cfg.electron_mass_mev, 1.0 / cfg.alpha_inverse)?;
    let body = LeptonOutput {
        alpha_inverse: cfg.alpha_inverse,
        electron_mass_mev: cfg.electron_mass_mev,
        electron: t.electron,
        muon: t.muon,
        tau: t.tau,
    };
    if csv_out {
        let rows = [("electron", t.electron), ("muon", t.muon), ("tau", t.tau)]
            .iter()
            .map(|(n, m)| vec![n.to_string(), m.to_string()])
            .collect::<Vec<_>>();
        return Ok(Outcome::ok(Rendered::Text(csv(&["lepton", "mass_mev"], &rows))));
    }
    Ok(Outcome::ok(json(&body)?))
}

pub struct InvariantArgs {
    pub alpha1: Complex64,
    pub alpha2: f64,
    pub alpha3: f64,
    pub alpha4: Option<f64>,
    pub time: f64,
    pub quadrature: Option<usize>,
}

#[derive(Serialize)]
struct QuadratureCheck {
    points_per_axis: usize,
    hamiltonian: Complex64,
    charge: Complex64,
    relative_deviation: f64,
}

#[derive(Serialize)]
struct InvariantOutput {
    params: LagrangianParams,
    modes: ModeSet,
    report: InvariantReport,
    quadrature: Option<QuadratureCheck>,
}

/// Parse a mode set, filling a missing "L" from the configuration.
pub fn read_mode_set(path: &Path, cfg: &Config) -> Result<ModeSet, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid mode set {}: {e}", path.display())))?;
    if let Value::Object(map) = &mut v {
        if !map.contains_key("L") {
            let m = map.get("m").and_then(Value::as_f64).ok_or_else(|| CliError::Usage("mode set needs a numeric \"m\"".into()))?;
            map.insert("L".into(), serde_json::json!(cfg.box_length_for(m)));
        }
    }
    let set: ModeSet = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("invalid mode set {}: {e}", path.display())))?;
    set.validate()?;
    Ok(set)
}

pub fn invariants_cmd(set: &ModeSet, args: &InvariantArgs) -> Result<Outcome, CliError> {
    let alpha4 = args.alpha4.unwrap_or_else(|| LagrangianParams::on_shell_alpha4(args.alpha1, args.alpha2, set.m).re);
    let params = LagrangianParams::new(args.alpha1, args.alpha2, args.alpha3, alpha4);
    let report = invariants(&params, set, args.time)?;
    let mut failure = None;
    let check = match args.quadrature {
        Some(n) => {
            let (h, q) = quadrature(&params.euclidean(), set, args.time, n)?;
            let (h, q): (Complex64, Complex64) = (h.iter().sum(), q.iter().sum());
            let hs: f64 = report.hamiltonian_terms.iter().map(|z| z.norm()).sum();
            let qs: f64 = report.charge_terms.iter().map(|z| z.norm()).sum();
            let rel = |x: Complex64, y: Complex64, s: f64| if s == 0.0 { (x - y).norm() } else { (x - y).norm() / s };
            let dev = rel(h, report.hamiltonian, hs).max(rel(q, report.charge, qs));
            if dev > QUADRATURE_TOL {
                failure = Some(format!("quadrature deviates from the closed form by {dev:e}"));
            }
            Some(QuadratureCheck { points_per_axis: n, hamiltonian: h, charge: q, relative_deviation: dev })
        }
        None => None,
    };
    let body = InvariantOutput { params, modes: set.clone(), report, quadrature: check };
    Ok(Outcome { rendered: json(&body)?, failure })
}

#[derive(Serialize)]
struct TransformOutput {
    representation: Representation,
    unitary_from_chiral: ComplexMatrix4,
    unitarity_defect: f64,
    gammas: [ComplexMatrix4; 4],
    gamma5: ComplexMatrix4,
    clifford_defect: f64,
    max_real_part: f64,
    max_imag_part: f64,
    conjugation: Option<ConjugationOutput>,
}

#[derive(Serialize)]
struct ConjugationOutput {
    #[serde(rename = "U C U^T + 1")]
    transpose_defect: f64,
    #[serde(rename = "U C U^-1 - C")]
    plus_c_defect: f64,
    #[serde(rename = "U C U^-1 + C")]
    minus_c_defect: f64,
}

pub fn transform(rep: Representation, tol: f64, csv_out: bool) -> Result<Outcome, CliError> {
    let g = build_gammas(rep, Metric::Minkowski);
    let t = rep.from_chiral();
    let max_real = g.mu.iter().map(|m| m.max_real_part()).fold(0.0, f64::max);
    let max_imag = g.mu.iter().map(|m| m.max_imag_part()).fold(0.0, f64::max);
    let conjugation = (rep == Representation::Majorana).then(|| {
        let r = conjugation_report(&build_gammas(Representation::Chiral, Metric::Minkowski).mu, &t);
        ConjugationOutput {
            transpose_defect: r.antilinear_to_minus_k_defect,
            plus_c_defect: r.similarity_plus_c_defect,
            minus_c_defect: r.similarity_minus_c_defect,
        }
    });
    let body = TransformOutput {
        representation: rep,
        unitary_from_chiral: t,
        unitarity_defect: t.unitarity_defect(),
        gammas: g.mu,
        gamma5: g.five,
        clifford_defect: g.clifford_defect(),
        max_real_part: max_real,
        max_imag_part: max_imag,
        conjugation,
    };
    let mut failure = None;
    if body.unitarity_defect > tol || body.clifford_defect > tol {
        failure = Some(format!("representation {rep:?} fails unitarity or Clifford checks"));
    }
    if rep == Representation::Majorana && max_real > 1e-12 {
        failure = Some(format!("Majorana gammas have real parts up to {max_real:e}"));
    }
    let rendered = if csv_out {
        let mut rows = Vec::new();
        for (name, m) in ["gamma0", "gamma1", "gamma2", "gamma3", "gamma5"].iter().zip(g.mu.iter().chain([&g.five])) {
            for r in 0..4 {
                for c in 0..4 {
                    rows.push(vec![name.to_string(), r.to_string(), c.to_string(), m.0[r][c].re.to_string(), m.0[r][c].im.to_string()]);
                }
            }
        }
        Rendered::Text(csv(&["matrix", "row", "col", "re", "im"], &rows))
    } else {
        json(&body)?
    };
    Ok(Outcome { rendered, failure })
}

pub struct FieldArgs {
    pub family: FieldFamily,
    pub mass: f64,
    pub charge: f64,
    pub potential: [f64; 4],
    /// F₀₁, F₀₂, F₀₃, F₁₂, F₁₃, F₂₃.
    pub strength: [f64; 6],
}

impl FieldArgs {
    pub fn field(&self) -> Result<EMField, CliError> {
        Ok(match self.family {
            FieldFamily::Free => EMField::free(),
            FieldFamily::Constant => EMField::constant(self.charge, self.potential),
            FieldFamily::Uniform => {
                let mut f = [[0.0; 4]; 4];
                let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
                for ((mu, nu), v) in pairs.into_iter().zip(self.strength) {
                    f[mu][nu] = v;
                    f[nu][mu] = -v;
                }
                EMField::uniform(self.charge, self.potential, f)?
            }
        })
    }
}

#[derive(Serialize)]
struct RepResidual {
    representation: Representation,
    identity_residual: f64,
    gamma5_defect: f64,
}

#[derive(Serialize)]
struct FgmOutput {
    field: EMField,
    mass: f64,
    curl_defect: f64,
    free_commutator: f64,
    representations: Vec<RepResidual>,
    tolerance: f64,
}

pub fn fgm_check(args: &FieldArgs, tol: f64) -> Result<Outcome, CliError> {
    let field = args.field()?;
    let mut reps = Vec::new();
    let mut free_commutator: f64 = 0.0;
    for rep in Representation::ALL {
        let g5 = gamma5_structure(&field, args.mass, rep)?;
        free_commutator = free_commutator.max(g5.free_commutator);
        reps.push(RepResidual { representation: rep, identity_residual: squared_dirac_identity(&field, args.mass, rep), gamma5_defect: g5.max_defect() });
    }
    let worst = reps.iter().map(|r| r.identity_residual.max(r.gamma5_defect)).fold(0.0, f64::max);
    let failure = (worst > tol || free_commutator != 0.0).then(|| format!("operator identity residual {worst:e} exceeds {tol:e}"));
    let body = FgmOutput { field, mass: args.mass, curl_defect: field.curl_defect(), free_commutator, representations: reps, tolerance: tol };
    Ok(Outcome { rendered: json(&body)?, failure })
}

#[derive(Serialize)]
struct VerifyOutput {
    suites: Vec<SuiteReport>,
    passed: usize,
    failed: usize,
}

pub fn verify(suites: &[Suite], opts: &VerifyOptions, as_json: bool) -> Result<Outcome, CliError> {
    let reports = run_suites(suites, opts);
    let failure = reports
        .iter()
        .find_map(|r| r.first_failure().map(|c| format!("{}: {}", r.suite.name(), c.name)));
    let rendered = if as_json {
        let passed = reports.iter().map(SuiteReport::passed).sum();
        let failed = reports.iter().map(SuiteReport::failed).sum();
        json(&VerifyOutput { suites: reports, passed, failed })?
    } else {
        let mut s = String::new();
        for r in &reports {
            for c in &r.checks {
                s.push_str(&format!("{c}\n"));
            }
            s.push_str(&format!("[{}] {} passed, {} failed\n", r.suite.name(), r.passed(), r.failed()));
        }
        Rendered::Text(s)
    };
    Ok(Outcome { rendered, failure })
}

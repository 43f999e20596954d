//! Drivers behind the `solve`, `spectrum` and `table` subcommands.
//!
//! Each driver returns an [`Outcome`]: the structured report plus its
//! rendering and the exit status. Residual warnings fire when a residual
//! exceeds `tol·(1 + Σ|input|)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use octoquad::fano::{basis_mul, TABLE};
use octoquad::quadratic::Diagnostic;
use octoquad::spectrum::{row_residuals, Eigenpair};
use octoquad::{
    left_spectrum_2x2, residual, solve_quadratic, Octonion, OctMatrix2, RootSet, SpectrumKind,
    Unit,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::literal::{format_octonion, parse_octonion, ParseError};
use crate::report::{
    coeffs, plain, CaseField, EigenSphereJson, EigenpairJson, ReducedJson, Report, SpectrumJson,
    SphereJson, TableCheck, TableJson,
};

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    Error = 1,
    ResidualWarning = 2,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("--{field}: {source}")]
    Parse {
        field: &'static str,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Domain(#[from] octoquad::Error),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        Exit::Error
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    pub tol: f64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            samples: 0,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome<R> {
    pub report: R,
    pub text: String,
    pub exit: Exit,
}

fn parse_field(field: &'static str, text: &str) -> Result<Octonion, CliError> {
    parse_octonion(text).map_err(|source| CliError::Parse { field, source })
}

/// Random imaginary directions for sphere samples, deterministic in `seed`.
fn directions(n: usize, seed: u64) -> Vec<Octonion> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let d = octoquad::random::octonion(&mut rng);
        if d.im().norm() > 1e-6 {
            out.push(d);
        }
    }
    out
}

fn warn_if(warnings: &mut Vec<String>, what: &str, r: f64, limit: f64) {
    if r > limit {
        warnings.push(format!("{what}: residual {r:e} exceeds {limit:e}"));
    }
}

pub fn run_solve(b_text: &str, c_text: &str, opts: &Options) -> Result<Outcome<Report>, CliError> {
    let b = parse_field("b", b_text)?;
    let c = parse_field("c", c_text)?;
    let sol = solve_quadratic(b, c);
    let limit = opts.tol * (1.0 + b.norm() + c.norm());

    let (roots, sampled): (Vec<Octonion>, bool) = match &sol.roots {
        RootSet::Isolated { roots, .. } => (roots.clone(), false),
        RootSet::Sphere(s) => {
            let pts = directions(opts.samples, opts.seed)
                .into_iter()
                .map(|d| s.sample(d))
                .collect::<Result<_, _>>()?;
            (pts, true)
        }
    };
    let residuals: Vec<f64> = roots.iter().map(|x| residual(*x, b, c)).collect();

    let mut warnings = Vec::new();
    for (k, r) in residuals.iter().enumerate() {
        warn_if(&mut warnings, &format!("root {}", k + 1), *r, limit);
    }
    match &sol.diagnostic {
        Some(Diagnostic::NoAdmissiblePair) => {
            warnings.push("no admissible trace/norm pair; root set is empty".into())
        }
        Some(Diagnostic::ParameterDomain(e)) => warnings.push(format!("root set is empty: {e}")),
        None => {}
    }

    let report = Report {
        case: CaseField::Number(sol.case.number()),
        inputs: BTreeMap::from([("b".to_owned(), coeffs(b)), ("c".to_owned(), coeffs(c))]),
        roots: roots.iter().copied().map(coeffs).collect(),
        sphere: sol.sphere().map(|s| SphereJson {
            center_real: plain(s.real_part),
            im_radius: s.im_radius,
        }),
        residuals,
        tol: opts.tol,
        warnings,
        multiplicity2: Some(sol.multiplicity2()),
        sampled: Some(sampled),
        spectrum: None,
    };

    let mut text = String::new();
    let _ = writeln!(
        text,
        "x² + ({})·x + ({}) = 0",
        format_octonion(b),
        format_octonion(c)
    );
    let _ = writeln!(text, "{}", sol.case);
    if let Some(s) = sol.sphere() {
        let _ = writeln!(
            text,
            "roots: every {} + v with v imaginary, |v| = {} (norm {})",
            plain(s.real_part),
            s.im_radius,
            s.member_norm()
        );
        if !roots.is_empty() {
            let _ = writeln!(text, "samples:");
        }
    } else if roots.is_empty() {
        let _ = writeln!(text, "roots: none");
    } else if sol.multiplicity2() {
        let _ = writeln!(text, "roots (double):");
    } else {
        let _ = writeln!(text, "roots:");
    }
    for (k, (x, r)) in roots.iter().zip(&report.residuals).enumerate() {
        let _ = writeln!(text, "  x{} = {}    residual {:e}", k + 1, format_octonion(*x), r);
    }
    for w in &report.warnings {
        let _ = writeln!(text, "warning: {w}");
    }

    let exit = if report.warnings.is_empty() {
        Exit::Success
    } else {
        Exit::ResidualWarning
    };
    Ok(Outcome { report, text, exit })
}

fn eigenpair_json(p: &Eigenpair, sampled: bool) -> EigenpairJson {
    EigenpairJson {
        t: p.t.map(coeffs),
        lambda: coeffs(p.lambda),
        vector: [coeffs(p.vector[0]), coeffs(p.vector[1])],
        residual_row1: p.residual_row1,
        residual_row2: p.residual_row2,
        sampled,
    }
}

pub fn run_spectrum(
    entries: [&str; 4],
    opts: &Options,
) -> Result<Outcome<Report>, CliError> {
    let a = parse_field("a", entries[0])?;
    let b = parse_field("b", entries[1])?;
    let c = parse_field("c", entries[2])?;
    let d = parse_field("d", entries[3])?;
    let m = OctMatrix2::new(a, b, c, d);
    let spec = left_spectrum_2x2(&m);
    let limit = opts.tol * (1.0 + m.entries().iter().map(|e| e.norm()).sum::<f64>());
    let quaternionic = m.is_quaternionic();

    let mut pairs: Vec<(Eigenpair, bool)> = spec.eigenpairs.iter().map(|p| (*p, false)).collect();
    if spec.sphere_family.is_some() {
        for dir in directions(opts.samples, opts.seed) {
            if let Some(p) = spec.sample_sphere(dir) {
                pairs.push((p?, true));
            }
        }
    }

    let mut warnings = Vec::new();
    let mut diagnostics = Vec::new();
    for (k, (p, _)) in pairs.iter().enumerate() {
        let label = format!("eigenpair {}", k + 1);
        warn_if(&mut warnings, &format!("{label} row 1"), p.residual_row1, limit);
        if quaternionic {
            warn_if(&mut warnings, &format!("{label} row 2"), p.residual_row2, limit);
        } else if p.residual_row2 > limit {
            diagnostics.push(format!(
                "{label}: row 2 defect {:e}; the entries do not associate",
                p.residual_row2
            ));
        }
    }

    let reduced = spec.reduction.as_ref().map(|red| {
        let root_residuals: Vec<f64> = red
            .solution
            .isolated()
            .iter()
            .map(|t| residual(*t, red.beta, red.gamma))
            .collect();
        let root_limit = opts.tol * (1.0 + red.beta.norm() + red.gamma.norm());
        for (k, r) in root_residuals.iter().enumerate() {
            warn_if(&mut warnings, &format!("reduced root {}", k + 1), *r, root_limit);
        }
        if red.solution.diagnostic.is_some() {
            warnings.push("reduced equation has no admissible root".into());
        }
        ReducedJson {
            beta: coeffs(red.beta),
            gamma: coeffs(red.gamma),
            case: red.solution.case.number(),
            root_residuals,
        }
    });

    let t_sphere = spec.sphere_family.map(|f| f.t_sphere);
    let report = Report {
        case: CaseField::Label("spectrum".into()),
        inputs: BTreeMap::from([
            ("a".to_owned(), coeffs(a)),
            ("b".to_owned(), coeffs(b)),
            ("c".to_owned(), coeffs(c)),
            ("d".to_owned(), coeffs(d)),
        ]),
        roots: pairs.iter().map(|(p, _)| coeffs(p.lambda)).collect(),
        sphere: t_sphere.map(|s| SphereJson {
            center_real: plain(s.real_part),
            im_radius: s.im_radius,
        }),
        residuals: pairs.iter().map(|(p, _)| p.residual_row2).collect(),
        tol: opts.tol,
        warnings,
        multiplicity2: None,
        sampled: None,
        spectrum: Some(SpectrumJson {
            kind: match spec.kind {
                SpectrumKind::Triangular => "triangular",
                SpectrumKind::Reduced => "reduced",
            }
            .into(),
            reduced,
            eigenpairs: pairs.iter().map(|(p, s)| eigenpair_json(p, *s)).collect(),
            eigen_sphere: spec.sphere_family.map(|f| EigenSphereJson {
                center: coeffs(f.center),
                radius: f.radius,
                normal: coeffs(f.normal),
            }),
            diagnostics,
        }),
    };

    let mut text = String::new();
    let _ = writeln!(
        text,
        "A = [[{}, {}], [{}, {}]]",
        format_octonion(a),
        format_octonion(b),
        format_octonion(c),
        format_octonion(d)
    );
    match &spec.reduction {
        None => {
            let _ = writeln!(text, "triangular (b·c = 0): left spectrum {{a, d}}");
        }
        Some(red) => {
            let _ = writeln!(
                text,
                "reduced: t² + ({})·t + ({}) = 0, {}",
                format_octonion(red.beta),
                format_octonion(red.gamma),
                red.solution.case
            );
        }
    }
    if let Some(f) = spec.sphere_family {
        let _ = writeln!(
            text,
            "eigenvalue family: {} + b·v, v imaginary, |v| = {} (6-sphere of radius {} orthogonal to b)",
            format_octonion(f.center),
            f.t_sphere.im_radius,
            f.radius
        );
    }
    for (k, (p, sampled)) in pairs.iter().enumerate() {
        let _ = writeln!(
            text,
            "  λ{} = {}{}    v = ({}, {})    row residuals {:e}, {:e}",
            k + 1,
            format_octonion(p.lambda),
            if *sampled { " (sample)" } else { "" },
            format_octonion(p.vector[0]),
            format_octonion(p.vector[1]),
            p.residual_row1,
            p.residual_row2
        );
    }
    for note in &report.spectrum.as_ref().expect("set above").diagnostics {
        let _ = writeln!(text, "note: {note}");
    }
    for w in &report.warnings {
        let _ = writeln!(text, "warning: {w}");
    }

    let exit = if report.warnings.is_empty() {
        Exit::Success
    } else {
        Exit::ResidualWarning
    };
    Ok(Outcome { report, text, exit })
}

/// Recompute `(row1, row2)` for a reported eigenpair from the report alone.
pub fn recompute_eigen_residuals(report: &Report, pair: &EigenpairJson) -> Option<(f64, f64)> {
    let entry = |k: &str| report.inputs.get(k).map(|c| Octonion::new(*c));
    let m = OctMatrix2::new(entry("a")?, entry("b")?, entry("c")?, entry("d")?);
    let v = [Octonion::new(pair.vector[0]), Octonion::new(pair.vector[1])];
    Some(row_residuals(&m, Octonion::new(pair.lambda), v))
}

pub fn run_table(check: bool) -> Outcome<TableJson> {
    let basis: Vec<String> = Unit::ALL.iter().map(|u| u.symbol().to_owned()).collect();
    let table: Vec<Vec<String>> = TABLE
        .iter()
        .map(|row| row.iter().map(|e| e.to_string()).collect())
        .collect();

    let check = check.then(|| {
        let mut agree = 0;
        for a in Unit::ALL {
            for b in Unit::ALL {
                let e = basis_mul(a, b);
                let want = Octonion::unit(e.unit) * e.sign();
                if Octonion::unit(a).mul_cd(Octonion::unit(b)) == want {
                    agree += 1;
                }
            }
        }
        TableCheck { agree, total: 64 }
    });

    let mut text = String::from("  ·  ");
    for u in &basis {
        let _ = write!(text, "{u:>4}");
    }
    text.push('\n');
    for (u, row) in basis.iter().zip(&table) {
        let _ = write!(text, "{u:>4} ");
        for e in row {
            let _ = write!(text, "{e:>4}");
        }
        text.push('\n');
    }
    if let Some(c) = check {
        let _ = writeln!(text, "{}/{} agree", c.agree, c.total);
    }

    let exit = match check {
        Some(c) if c.agree != c.total => Exit::Error,
        _ => Exit::Success,
    };
    Outcome {
        report: TableJson {
            basis,
            table,
            check,
        },
        text,
        exit,
    }
}

use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::Serialize;
use ymbeta::cohomology::{beta_from_reports, running_coupling, BetaCoefficient, CohomologyError, Framing};
use ymbeta::diagrams::{build_registry, report, LocalFunctional};
use ymbeta::golden::GoldenCheck;
use ymbeta::lie::simple_factors;
use ymbeta::scalar::{fmt_q, to_f64};

use crate::config::{CouplingRequest, Loaded};
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Document {
    pub schema_version: u32,
    pub algebra: AlgebraSummary,
    pub matter: Vec<MatterSummary>,
    pub framing: FramingSummary,
    pub casimir_adjoint: String,
    pub matter_factor: String,
    pub diagrams: Vec<DiagramEntry>,
    pub classes: Classes,
    pub b: String,
    pub normalization: &'static str,
    pub asymptotically_free: bool,
    pub verdict: &'static str,
    pub running_coupling: Option<CouplingTable>,
}

#[derive(Debug, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub dim: usize,
    pub simple_factors: usize,
    pub kappa: String,
}

#[derive(Debug, Serialize)]
pub struct MatterSummary {
    pub name: String,
    pub dim: usize,
    pub multiplicity: usize,
}

#[derive(Debug, Serialize)]
pub struct FramingSummary {
    pub name: &'static str,
    pub factor: String,
    pub description: &'static str,
}

#[derive(Debug, Serialize)]
pub struct Term {
    pub basis: String,
    pub coefficient: String,
}

#[derive(Debug, Serialize)]
pub struct DiagramEntry {
    pub label: &'static str,
    pub legs: [String; 2],
    pub propagators: [String; 2],
    pub symmetry_factor: String,
    pub sign: i32,
    pub lie_slot: String,
    pub raw: Vec<Term>,
    pub reduced: Option<Vec<Term>>,
}

#[derive(Debug, Serialize)]
pub struct Classes {
    pub adjoint: String,
    pub matter: String,
}

#[derive(Debug, Serialize)]
pub struct CouplingTable {
    pub g0: f64,
    pub lambda_crit: Option<f64>,
    pub rows: Vec<CouplingRow>,
}

#[derive(Debug, Serialize)]
pub struct CouplingRow {
    pub lambda: f64,
    pub g: Option<f64>,
    pub past_pole: bool,
}

fn terms(f: &LocalFunctional) -> Vec<Term> {
    f.entries().into_iter().map(|(basis, coefficient)| Term { basis, coefficient }).collect()
}

fn verdict(beta: &BetaCoefficient) -> &'static str {
    if beta.b.is_negative() {
        "asymptotically free"
    } else if beta.b.is_zero() {
        "no one-loop running"
    } else {
        "not asymptotically free"
    }
}

fn coupling_table(b: &ymbeta::scalar::Q, req: &CouplingRequest) -> Result<CouplingTable, CohomologyError> {
    let bp = to_f64(b) / (16.0 * std::f64::consts::PI.powi(2));
    let lambda_crit = (bp != 0.0).then(|| (-1.0 / (2.0 * bp * req.g0 * req.g0)).exp());
    let mut rows = Vec::new();
    for lambda in req.lambdas() {
        let row = match running_coupling(b, req.g0, lambda) {
            Ok(g) => CouplingRow { lambda, g: Some(g), past_pole: false },
            Err(CohomologyError::Pole { .. }) => CouplingRow { lambda, g: None, past_pole: true },
            Err(e) => return Err(e),
        };
        rows.push(row);
    }
    Ok(CouplingTable { g0: req.g0, lambda_crit, rows })
}

pub fn build(
    loaded: &Loaded,
    framing: &dyn Framing,
    coupling: Option<&CouplingRequest>,
) -> Result<Document, CliError> {
    let reports = report().map_err(CliError::Diagrams)?;
    let matter = loaded.total_matter();
    let beta = beta_from_reports(&reports, &loaded.algebra, &matter, framing).map_err(CliError::Cohomology)?;
    let registry = build_registry();
    let diagrams = reports
        .iter()
        .map(|r| {
            let shape = registry[&r.label].shape();
            DiagramEntry {
                label: r.label.as_str(),
                legs: shape.legs.map(|s| format!("{s:?}")),
                propagators: shape.propagators.map(|p| format!("{p:?}")),
                symmetry_factor: fmt_q(&shape.symmetry_factor),
                sign: shape.sign,
                lie_slot: r.lie_slot.to_string(),
                raw: terms(&r.raw),
                reduced: r.reduced.as_ref().map(terms),
            }
        })
        .collect();
    let running_coupling = coupling.map(|req| coupling_table(&beta.b, req)).transpose().map_err(CliError::Cohomology)?;
    Ok(Document {
        schema_version: SCHEMA_VERSION,
        algebra: AlgebraSummary {
            name: loaded.algebra.name.clone(),
            dim: loaded.algebra.dim,
            simple_factors: simple_factors(&loaded.algebra).len(),
            kappa: beta.kappa.clone(),
        },
        matter: loaded
            .matter
            .iter()
            .map(|m| MatterSummary { name: m.name.clone(), dim: m.rep.dim_v, multiplicity: m.multiplicity })
            .collect(),
        framing: FramingSummary {
            name: framing.name(),
            factor: fmt_q(&framing.factor()),
            description: framing.description(),
        },
        casimir_adjoint: fmt_q(&beta.casimir_adjoint),
        matter_factor: fmt_q(&beta.matter_factor),
        diagrams,
        classes: Classes { adjoint: fmt_q(&beta.adjoint_class.coefficient), matter: fmt_q(&beta.matter_class.coefficient) },
        b: fmt_q(&beta.b),
        normalization: "beta(g) = b g^3 / (16 pi^2)",
        asymptotically_free: beta.b.is_negative(),
        verdict: verdict(&beta),
        running_coupling,
    })
}

fn join_terms(t: &[Term]) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter().map(|t| format!("{} {}", t.coefficient, t.basis)).collect::<Vec<_>>().join(" + ")
}

pub fn table(doc: &Document) -> String {
    let mut s = String::new();
    let matter = if doc.matter.is_empty() {
        "none".to_string()
    } else {
        doc.matter.iter().map(|m| format!("{} x{} (dim {})", m.name, m.multiplicity, m.dim)).collect::<Vec<_>>().join(", ")
    };
    let _ = writeln!(s, "algebra    {} (dim {}, {} simple, kappa {})", doc.algebra.name, doc.algebra.dim, doc.algebra.simple_factors, doc.algebra.kappa);
    let _ = writeln!(s, "matter     {matter}");
    let _ = writeln!(s, "framing    {} ({}): {}", doc.framing.name, doc.framing.factor, doc.framing.description);
    let _ = writeln!(s, "C(adj)     {}", doc.casimir_adjoint);
    let _ = writeln!(s, "C(V)       {}", doc.matter_factor);
    let _ = writeln!(s);
    let _ = writeln!(s, "{:<5} {:<10} {:<6} {:>4} {:<9} {:>9}  reduced", "diag", "legs", "sym", "sign", "slot", "raw terms");
    for d in &doc.diagrams {
        let reduced = d.reduced.as_deref().map_or_else(|| "-".to_string(), join_terms);
        let _ = writeln!(
            s,
            "{:<5} {:<10} {:<6} {:>4} {:<9} {:>9}  {reduced}",
            d.label,
            d.legs.join(" "),
            d.symmetry_factor,
            d.sign,
            d.lie_slot,
            d.raw.len()
        );
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "class      adjoint {} [FF], matter {} [FF]", doc.classes.adjoint, doc.classes.matter);
    let _ = writeln!(s, "b          {}   with {}", doc.b, doc.normalization);
    let _ = writeln!(s, "verdict    {}", doc.verdict);
    if let Some(t) = &doc.running_coupling {
        let _ = writeln!(s);
        match t.lambda_crit {
            Some(c) => {
                let _ = writeln!(s, "g0 = {}, pole at lambda = {c:.6e}", t.g0);
            }
            None => {
                let _ = writeln!(s, "g0 = {}, no running", t.g0);
            }
        }
        let _ = writeln!(s, "{:>14}  {:>14}", "lambda", "g");
        for r in &t.rows {
            let g = r.g.map_or_else(|| "past pole".to_string(), |g| format!("{g:.10}"));
            let _ = writeln!(s, "{:>14.6e}  {g:>14}", r.lambda);
        }
    }
    s
}

#[derive(Debug, Serialize)]
pub struct VerifyDocument<'a> {
    pub schema_version: u32,
    pub passed: usize,
    pub failed: usize,
    pub checks: &'a [GoldenCheck],
}

pub fn verify_table(checks: &[GoldenCheck]) -> String {
    let mut s = String::new();
    for c in checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        let _ = writeln!(s, "{mark} {}: expected {}, computed {}", c.name, c.published, c.computed);
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(s, "{} of {} checks agree", checks.len() - failed, checks.len());
    s
}

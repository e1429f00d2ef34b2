//! Report formatting. Every renderer is a pure function of its input so
//! identical runs produce identical bytes.

use std::fmt::Write;

use clap::ValueEnum;
use fsclass::indicator::{matrix_rows, Analysis, IndicatorReport};
use fsclass::instance::Check;
use serde::Serialize;

use crate::Failure;

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub type Rendered = Result<String, Failure>;

#[derive(Serialize)]
pub struct DualityRow {
    pub index: usize,
    pub dim: usize,
    pub algebra_nu: f64,
    pub coalgebra_nu: f64,
    pub agree: bool,
}

/// `cqg` rows compare the compact-quantum-group formula (as `coalgebra_nu`)
/// with the signature of the dual module (as `algebra_nu`).
#[derive(Serialize)]
pub struct Duality {
    pub rows: Vec<DualityRow>,
    pub cqg: Option<Vec<DualityRow>>,
}

impl Duality {
    pub fn total(&self) -> usize {
        self.rows.len()
    }

    pub fn disagreements(&self) -> usize {
        self.rows.iter().chain(self.cqg.iter().flatten()).filter(|r| !r.agree).count()
    }

    pub fn all_agree(&self) -> bool {
        self.disagreements() == 0
    }
}

fn failure(e: impl std::fmt::Display) -> Failure {
    Failure { exit: 2, code: "Output".into(), message: e.to_string() }
}

fn json<T: Serialize>(value: &T) -> Rendered {
    let mut s = serde_json::to_string_pretty(value).map_err(failure)?;
    s.push('\n');
    Ok(s)
}

fn csv_rows<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Rendered {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(failure)?;
    }
    let bytes = w.into_inner().map_err(failure)?;
    String::from_utf8(bytes).map_err(failure)
}

/// Fixed precision with no negative zero.
fn fixed(x: f64, prec: usize) -> String {
    let s = format!("{x:.prec$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

fn complex(re: f64, im: f64) -> String {
    let (re, im) = (fixed(re, 6), fixed(im, 6));
    match im.strip_prefix('-') {
        _ if im.bytes().all(|b| b == b'0' || b == b'.') => re,
        Some(abs) => format!("{re}-{abs}i"),
        None => format!("{re}+{im}i"),
    }
}

fn matrix_text(out: &mut String, m: &[Vec<[f64; 2]>]) {
    for row in m {
        let cells: Vec<String> = row.iter().map(|&[re, im]| complex(re, im)).collect();
        let _ = writeln!(out, "    [{}]", cells.join(", "));
    }
}

pub fn verify(checks: &[Check], format: Format) -> Rendered {
    match format {
        Format::Json => json(&checks),
        Format::Csv => csv_rows(checks),
        Format::Text => {
            let mut out = String::new();
            for c in checks {
                let tag = if c.holds { "ok  " } else { "FAIL" };
                let _ = if c.detail.is_empty() {
                    writeln!(out, "{tag}  {}", c.name)
                } else {
                    writeln!(out, "{tag}  {}: {}", c.name, c.detail)
                };
            }
            let n = checks.iter().filter(|c| c.holds).count();
            let _ = writeln!(out, "{n}/{} checks hold", checks.len());
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct IrrepSummary {
    index: usize,
    dim: usize,
    multiplicity: usize,
    character: Vec<[f64; 2]>,
}

#[derive(Serialize)]
struct IrrepCsv {
    index: usize,
    dim: usize,
    multiplicity: usize,
    character: String,
}

pub fn irreps(an: &Analysis, format: Format) -> Rendered {
    let rows: Vec<IrrepSummary> = an
        .components
        .iter()
        .enumerate()
        .map(|(index, c)| IrrepSummary {
            index,
            dim: c.irrep.dim(),
            multiplicity: c.multiplicity,
            character: c.irrep.character().values.iter().map(|z| [z.re, z.im]).collect(),
        })
        .collect();
    let joined = |ch: &[[f64; 2]]| ch.iter().map(|&[re, im]| complex(re, im)).collect::<Vec<_>>().join(" ");
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv_rows(rows.iter().map(|r| IrrepCsv {
            index: r.index,
            dim: r.dim,
            multiplicity: r.multiplicity,
            character: joined(&r.character),
        })),
        Format::Text => {
            let mut out = format!("algebra dimension {}, {} irreducibles\n", an.algebra.dim(), rows.len());
            for r in &rows {
                let _ = writeln!(out, "#{} dim {} multiplicity {}", r.index, r.dim, r.multiplicity);
                let _ = writeln!(out, "    character on basis: {}", joined(&r.character));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct IndicatorCsv<'a> {
    dim: usize,
    nu_formula: f64,
    nu_trace: f64,
    sigma: i8,
    label: &'a str,
    endo_dim: usize,
}

pub fn indicators(report: &IndicatorReport, format: Format) -> Rendered {
    match format {
        Format::Json => json(report),
        Format::Csv => csv_rows(report.irreps.iter().map(|r| IndicatorCsv {
            dim: r.dim,
            nu_formula: r.nu_formula,
            nu_trace: r.nu_trace,
            sigma: r.sigma,
            label: r.label.as_str(),
            endo_dim: r.endo_dim,
        })),
        Format::Text => {
            let mut out = format!("algebra dimension {}, seed {}\n", report.algebra_dim, report.seed);
            let _ = writeln!(
                out,
                "{:>5} {:>4} {:>5} {:>12} {:>12} {:>6} {:>13} {:>8}",
                "index", "dim", "mult", "nu_formula", "nu_trace", "sigma", "label", "endo_dim"
            );
            for r in &report.irreps {
                let _ = writeln!(
                    out,
                    "{:>5} {:>4} {:>5} {:>12} {:>12} {:>6} {:>13} {:>8}",
                    r.index,
                    r.dim,
                    r.multiplicity,
                    fixed(r.nu_formula, 8),
                    fixed(r.nu_trace, 8),
                    r.sigma,
                    r.label.as_str(),
                    r.endo_dim
                );
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct Classification<'a> {
    index: usize,
    dim: usize,
    sigma: i8,
    label: &'a str,
    witness: &'a str,
    matrix: Option<Vec<Vec<[f64; 2]>>>,
}

#[derive(Serialize)]
struct ClassificationCsv<'a> {
    index: usize,
    dim: usize,
    sigma: i8,
    label: &'a str,
    witness: &'a str,
}

pub fn classify(report: &IndicatorReport, format: Format) -> Rendered {
    let rows: Vec<Classification> = report
        .irreps
        .iter()
        .map(|r| Classification {
            index: r.index,
            dim: r.dim,
            sigma: r.sigma,
            label: r.label.as_str(),
            witness: r.witness.kind(),
            matrix: r.witness.matrix().map(matrix_rows),
        })
        .collect();
    match format {
        Format::Json => json(&rows),
        Format::Csv => csv_rows(rows.iter().map(|r| ClassificationCsv {
            index: r.index,
            dim: r.dim,
            sigma: r.sigma,
            label: r.label,
            witness: r.witness,
        })),
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let sigma = if r.sigma == 0 { "0".to_string() } else { format!("{:+}", r.sigma) };
                let _ = writeln!(out, "#{} dim {}: {} (sigma {sigma}), witness {}", r.index, r.dim, r.label, r.witness);
                if let Some(m) = &r.matrix {
                    matrix_text(&mut out, m);
                }
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct DualityCsv<'a> {
    side: &'a str,
    index: usize,
    dim: usize,
    algebra_nu: f64,
    coalgebra_nu: f64,
    agree: bool,
}

pub fn duality(d: &Duality, format: Format) -> Rendered {
    let agreeing = |rows: &[DualityRow]| rows.iter().filter(|r| r.agree).count();
    match format {
        Format::Json => json(d),
        Format::Csv => {
            let all = d.rows.iter().map(|r| ("coalgebra", r)).chain(d.cqg.iter().flatten().map(|r| ("cqg", r))).map(
                |(side, r)| DualityCsv {
                    side,
                    index: r.index,
                    dim: r.dim,
                    algebra_nu: r.algebra_nu,
                    coalgebra_nu: r.coalgebra_nu,
                    agree: r.agree,
                },
            );
            csv_rows(all)
        }
        Format::Text => {
            let mut out = String::new();
            for r in &d.rows {
                let _ = writeln!(
                    out,
                    "#{} dim {}: algebra {}, coalgebra {}{}",
                    r.index,
                    r.dim,
                    fixed(r.algebra_nu, 8),
                    fixed(r.coalgebra_nu, 8),
                    if r.agree { "" } else { "  MISMATCH" }
                );
            }
            let _ = writeln!(out, "algebra/coalgebra indicators agree: {}/{}", agreeing(&d.rows), d.rows.len());
            if let Some(cqg) = &d.cqg {
                let _ = writeln!(out, "compact quantum group indicators agree: {}/{}", agreeing(cqg), cqg.len());
            }
            Ok(out)
        }
    }
}

//! Output formats for check reports and enumeration records, and the
//! `key=value` configuration file read by the command-line tool.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::chern::BundleInvariants;
use crate::error::{Error, Result};
use crate::expr::format_divisor;
use crate::lattice::LatticeContext;
use crate::predicates::{CheckReport, H0Certificate, SubdivisorVerdict, Verdict};
use crate::search::ExampleRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" | "jsonl" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::InvalidParams(format!("unknown format `{other}`"))),
        }
    }
}

/// One JSON Lines record. Field order is part of the output format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JsonRecord {
    pub divisor: String,
    pub d2: i64,
    pub c1sq: i64,
    pub c2: i64,
    pub chi: i64,
    pub gap: i64,
    pub rho1: i64,
    pub dim_m_lower: i64,
    pub dim_p_upper: i64,
    pub cond_i: &'static str,
    pub cond_ii: &'static str,
    pub cond_ii_witness: Option<String>,
    pub cond_iii: bool,
    pub pass: bool,
}

impl JsonRecord {
    pub fn new(report: &CheckReport, inv: &BundleInvariants) -> Self {
        JsonRecord {
            divisor: format_divisor(&report.divisor),
            d2: inv.d2,
            c1sq: inv.c1sq,
            c2: inv.c2,
            chi: inv.chi,
            gap: inv.gap,
            rho1: inv.rho1,
            dim_m_lower: inv.dim_m_lower,
            dim_p_upper: inv.dim_p_upper,
            cond_i: report.cond_i.as_str(),
            cond_ii: report.cond_ii.as_str(),
            cond_ii_witness: report.cond_ii.witness().map(format_divisor),
            cond_iii: report.cond_iii,
            pass: report.overall == Verdict::Pass,
        }
    }
}

impl From<&ExampleRecord> for JsonRecord {
    fn from(rec: &ExampleRecord) -> Self {
        JsonRecord::new(&rec.report, &rec.invariants)
    }
}

pub fn json_line(rec: &ExampleRecord) -> String {
    serde_json::to_string(&JsonRecord::from(rec)).expect("record serializes")
}

pub const CSV_HEADER: &str = "divisor,d2,c1sq,c2,chi,gap,h0_lower,dim_m_lower,dim_p_upper,rho1";

/// CSV row carrying the bundle invariants, keyed by the divisor.
pub fn csv_row(rec: &ExampleRecord) -> String {
    let i = &rec.invariants;
    format!(
        "\"{}\",{},{},{},{},{},{},{},{},{}",
        rec.divisor, i.d2, i.c1sq, i.c2, i.chi, i.gap, i.h0_lower, i.dim_m_lower, i.dim_p_upper, i.rho1
    )
}

pub fn text_report(ctx: &LatticeContext, report: &CheckReport, inv: Option<&BundleInvariants>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "divisor: {}", format_divisor(&report.divisor));
    match &report.cond_i {
        H0Certificate::Certified { peeling_order } => {
            let order: Vec<&str> = peeling_order.iter().map(|&i| ctx.generator(i).label).collect();
            let _ = writeln!(out, "(i)   h0 = 1: certified, peeling order {}", order.join(", "));
        }
        H0Certificate::Unknown => {
            let _ = writeln!(out, "(i)   h0 = 1: unknown (no peeling order)");
        }
    }
    match &report.cond_ii {
        SubdivisorVerdict::Holds => {
            let _ = writeln!(out, "(ii)  no invariant subdivisor: holds");
        }
        SubdivisorVerdict::Fails { witness } => {
            let _ = writeln!(out, "(ii)  no invariant subdivisor: fails, witness {}", format_divisor(witness));
        }
        SubdivisorVerdict::ExhaustedBudget { needed, budget } => {
            let _ = writeln!(out, "(ii)  no invariant subdivisor: budget exhausted ({needed} > {budget})");
        }
    }
    let _ = writeln!(out, "(iii) D^2 = {} < -4: {}", report.self_int, report.cond_iii);
    let verdict = match report.overall {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Unknown => "unknown",
    };
    let _ = writeln!(out, "overall: {verdict}");
    if let Some(inv) = inv {
        out.push_str(&text_invariants(inv));
    }
    out
}

pub fn text_invariants(inv: &BundleInvariants) -> String {
    format!(
        "D^2 = {}\nc1^2 = {}\nc2 = {}\nchi = {}\nc2 - c1^2/2 = {}\nh0 lower bound = {}\n\
         dim M_H >= {}\ndim P <= {}\nrho^1 (proxy, from dim M_H lower bound) = {}\n",
        inv.d2, inv.c1sq, inv.c2, inv.chi, inv.gap, inv.h0_lower, inv.dim_m_lower, inv.dim_p_upper, inv.rho1
    )
}

/// The Gram matrix as CSV: a header row of labels, then 32 rows of integers.
pub fn gram_csv(ctx: &LatticeContext) -> String {
    let mut out = String::new();
    let labels: Vec<&str> = ctx.basis().iter().map(|g| g.label).collect();
    out.push_str(&labels.join(","));
    out.push('\n');
    for row in ctx.gram() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Parses `key = value` lines; `#` starts a comment. Keys are normalized to
/// kebab-case so `max_degree` and `max-degree` are the same key.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Syntax {
            pos: lineno + 1,
            msg: format!("expected key=value, got `{line}`"),
        })?;
        out.insert(key.trim().replace('_', "-").to_ascii_lowercase(), value.trim().to_string());
    }
    Ok(out)
}

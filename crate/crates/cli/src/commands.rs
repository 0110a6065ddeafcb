use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use zkring_core::cellular::{rk_chain_complex_capped, zk_chain_complex_capped, RK_MAX_VERTICES, ZK_MAX_VERTICES};
use zkring_core::classify::{
    analyze_with, is_minimally_non_golod_with, verify_theorem_1_1_in, verify_theorem_1_2_in, verify_theorem_4_2_in,
    Analysis, ConnectedSum, CoreReport, HarnessReport, Outcome, Recognition,
};
use zkring_core::hochster::{hochster_table_capped, poincare_series, DualityReport};
use zkring_core::product::{is_cup_golod_capped, product_table, GolodStatus, GolodVerdict, GolodWitness, ProductReport};
use zkring_core::{with_field, Family, HomologyProfile, SimplicialComplex, VertexSubset};

use crate::{exit, Failure, RunConfig, Theorem};

/// What a command produced: its exit status and the same result as text and JSON.
pub struct Report {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn new(code: u8, text: String, json: impl Serialize) -> Result<Self, Failure> {
        let json = serde_json::to_value(json)
            .map_err(|e| Failure { code: exit::INTERNAL, message: format!("cannot serialize report: {e}") })?;
        Ok(Report { code, text, json })
    }
}

type CmdResult = Result<Report, Failure>;

pub fn tuple(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("({})", parts.join(", "))
}

fn subsets(sets: &[VertexSubset]) -> String {
    let parts: Vec<String> = sets.iter().map(VertexSubset::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn torsion_lines(out: &mut String, profile: &HomologyProfile) {
    for (i, t) in profile.torsion.iter().enumerate() {
        if t.is_empty() {
            continue;
        }
        let groups: Vec<String> = t.iter().map(|q| format!("Z/{q}")).collect();
        let _ = writeln!(out, "  H_{}: {}", profile.min_degree + i as isize, groups.join(" + "));
    }
}

pub fn gen(spec: &[String]) -> Result<u8, Failure> {
    let k = Family::parse(spec)?.build()?;
    println!("{}", k.to_json_string());
    Ok(exit::OK)
}

pub fn hochster(k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    cfg.check(k)?;
    let table = hochster_table_capped(k, cfg.first_field(), cfg.max_vertices)?;
    let report = table.report();
    let poincare = poincare_series(&table).to_string();
    let mut text = String::new();
    let _ = writeln!(text, "coefficients: {}", report.coeffs);
    let _ = writeln!(text, "betti: {}", tuple(&report.betti));
    let _ = writeln!(text, "poincare: {poincare}");
    let _ = writeln!(text, "bigraded (|I|, d, rank, tor):");
    for e in &report.bigraded {
        let _ = writeln!(text, "  {} {} {} ({}, {})", e.subset_size, e.degree, e.rank, e.tor.0, e.tor.1);
    }
    if !report.torsion_primes.is_empty() {
        let ps: Vec<String> = report.torsion_primes.iter().map(u64::to_string).collect();
        let _ = writeln!(text, "torsion primes: {}", ps.join(", "));
    }
    let mut json = serde_json::to_value(&report).expect("report serializes");
    json["poincare"] = json!(poincare);
    Report::new(exit::OK, text, json)
}

fn cellular_report(kind: &str, cells: usize, profile: &HomologyProfile) -> CmdResult {
    let mut text = String::new();
    let _ = writeln!(text, "space: {kind}");
    let _ = writeln!(text, "coefficients: {}", profile.coeffs);
    let _ = writeln!(text, "cells: {cells}");
    let _ = writeln!(text, "betti: {}", tuple(&profile.ranks));
    if profile.has_torsion() {
        let _ = writeln!(text, "homology torsion:");
        torsion_lines(&mut text, profile);
    }
    let json = json!({
        "space": kind,
        "coeffs": profile.coeffs,
        "cells": cells,
        "betti": profile.ranks,
        "homology": profile,
    });
    Report::new(exit::OK, text, json)
}

pub fn betti_zk(k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    cfg.check(k)?;
    let model = zk_chain_complex_capped(k, cfg.max_vertices.min(ZK_MAX_VERTICES))?;
    cellular_report("Z_K", model.cell_count(), &model.betti(cfg.first_field())?)
}

pub fn betti_rk(k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    cfg.check(k)?;
    let model = rk_chain_complex_capped(k, cfg.max_vertices.min(RK_MAX_VERTICES))?;
    cellular_report("R_K", model.cell_count(), &model.betti(cfg.first_field())?)
}

pub fn products(k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    cfg.check(k)?;
    let report: ProductReport = with_field!(cfg.first_field().field()?, f => product_table(k, f)?.report());
    let mut text = String::new();
    let _ = writeln!(text, "field: {}", report.field);
    let _ = writeln!(text, "classes: {}", report.classes.len());
    for (i, c) in report.classes.iter().enumerate() {
        let _ = writeln!(text, "  x{i}: degree {} support {} cochain degree {}", c.degree, c.support, c.cochain_degree);
    }
    let _ = writeln!(text, "nonzero products: {}", report.nonzero_products.len());
    for (i, j, coords) in &report.nonzero_products {
        let degree = report.classes[*i].degree + report.classes[*j].degree;
        let start = report.classes.partition_point(|c| c.degree < degree);
        let terms: Vec<String> = coords
            .iter()
            .enumerate()
            .filter(|(_, v)| !is_zero(v))
            .map(|(n, v)| format!("{} x{}", v, start + n).replace('"', ""))
            .collect();
        let _ = writeln!(text, "  x{i} * x{j} = {}", terms.join(" + "));
    }
    Report::new(exit::OK, text, report)
}

fn is_zero(v: &Value) -> bool {
    v.as_i64() == Some(0) || v.as_str() == Some("0")
}

fn witness_text(w: &GolodWitness) -> String {
    format!(
        "{} class on {} (degree {}) times class on {} (degree {}) is nonzero in degree {}",
        w.field, w.left.support, w.left.degree, w.right.support, w.right.degree, w.product_degree
    )
}

fn golod_text(out: &mut String, v: &GolodVerdict) {
    let _ = writeln!(out, "golod: {}", status_name(v.status));
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "witness: {}", witness_text(w));
    }
    let fields: Vec<String> = v.fields_tested.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "fields tested: {}", fields.join(", "));
    if !v.torsion_primes.is_empty() {
        let ps: Vec<String> = v.torsion_primes.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "torsion primes: {}", ps.join(", "));
    }
    let _ = writeln!(out, "note: {}", v.note);
}

fn status_name(s: GolodStatus) -> &'static str {
    match s {
        GolodStatus::NonGolod => "NON_GOLOD",
        GolodStatus::CupGolod => "CUP_GOLOD",
        GolodStatus::Unknown => "UNKNOWN",
    }
}

pub fn golod(k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    cfg.check(k)?;
    let fields = cfg.classify()?.fields;
    let v = is_cup_golod_capped(k, &fields, cfg.max_vertices);
    let mut text = String::new();
    golod_text(&mut text, &v);
    let code = match v.status {
        GolodStatus::CupGolod => exit::OK,
        GolodStatus::NonGolod => exit::FALSE,
        GolodStatus::Unknown => exit::CAP,
    };
    Report::new(code, text, v)
}

pub fn mng(k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    let v = is_minimally_non_golod_with(k, &cfg.classify()?)?;
    let mut text = String::new();
    let _ = writeln!(text, "mng: {}", v.mng);
    if let Some(w) = v.witness_vertex {
        let _ = writeln!(text, "witness vertex: {w}");
    }
    golod_text(&mut text, &v.golod);
    let _ = writeln!(text, "deletions:");
    for d in &v.deletions {
        let _ = write!(text, "  K - {}: {}", d.vertex, status_name(d.status));
        if let Some(w) = &d.witness {
            let _ = write!(text, " ({})", witness_text(w));
        }
        text.push('\n');
    }
    let unknown = v.golod.status == GolodStatus::Unknown || v.deletions.iter().any(|d| d.status == GolodStatus::Unknown);
    let code = if unknown {
        exit::CAP
    } else if v.mng {
        exit::OK
    } else {
        exit::FALSE
    };
    Report::new(code, text, v)
}

fn core_report(k: &SimplicialComplex) -> CoreReport {
    let c = k.core();
    CoreReport { simplex_vertices: c.simplex_vertices, simplex_dim: c.simplex_dim(), core_facets: c.core.facets_in_parent() }
}

fn core_text(out: &mut String, c: &CoreReport) {
    let _ = writeln!(out, "cone vertices: {}", c.simplex_vertices);
    let _ = writeln!(out, "simplex dimension: {}", c.simplex_dim);
    let _ = writeln!(out, "core facets: {}", subsets(&c.core_facets));
}

pub fn core(k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    cfg.check(k)?;
    let c = core_report(k);
    let mut text = String::new();
    core_text(&mut text, &c);
    Report::new(exit::OK, text, c)
}

pub fn gorenstein(k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    cfg.check(k)?;
    let v = zkring_core::classify::is_gorenstein_star(k)?;
    let mut text = String::new();
    let _ = writeln!(text, "gorenstein*: {}", v.gorenstein);
    let _ = writeln!(text, "core: {}", v.is_core);
    if let (Some(face), Some(h)) = (v.failing_face, &v.failing_homology) {
        let _ = writeln!(text, "failing face: {face}");
        let _ = writeln!(text, "link reduced betti from degree {}: {}", h.min_degree, tuple(&h.ranks));
        torsion_lines(&mut text, h);
    }
    Report::new(if v.gorenstein { exit::OK } else { exit::FALSE }, text, v)
}

fn pattern_text(p: &ConnectedSum) -> String {
    match p {
        ConnectedSum::Sphere { dim } => format!("SPHERE S^{dim}"),
        ConnectedSum::ConnectedSum { pairs } => {
            let parts: Vec<String> = pairs.iter().map(|(a, b)| format!("({a}, {b})")).collect();
            format!("CONNECTED_SUM [{}]", parts.join(", "))
        }
        ConnectedSum::NoMatch { reason } => format!("NO_MATCH ({reason})"),
    }
}

fn recognition_text(out: &mut String, r: &Recognition) {
    let _ = writeln!(out, "pattern: {}", pattern_text(&r.pattern));
    let _ = writeln!(out, "betti: {}", tuple(&r.betti));
    let _ = writeln!(out, "top degree: {}", r.top_degree);
    if let Some(g) = r.gram_rank {
        let _ = writeln!(out, "gram rank: {g}");
    }
}

pub fn recognize(k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    let a = Analysis::new(k, &cfg.classify()?)?;
    let r = a.recognition()?;
    let mut text = String::new();
    recognition_text(&mut text, r);
    let code = if matches!(r.pattern, ConnectedSum::NoMatch { .. }) { exit::FALSE } else { exit::OK };
    Report::new(code, text, r)
}

fn outcome_name(o: Outcome) -> &'static str {
    match o {
        Outcome::HypothesisNotMet => "HYPOTHESIS_NOT_MET",
        Outcome::Confirmed => "CONFIRMED",
        Outcome::Violation => "VIOLATION",
    }
}

fn harness_line(h: &HarnessReport) -> String {
    format!("thm{}: {} ({})", h.theorem, outcome_name(h.outcome), h.detail)
}

pub fn verify(theorem: Theorem, k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    let a = Analysis::new(k, &cfg.classify()?)?;
    let h = match theorem {
        Theorem::Thm11 => verify_theorem_1_1_in(&a)?,
        Theorem::Thm12 => verify_theorem_1_2_in(&a)?,
        Theorem::Thm42 => verify_theorem_4_2_in(&a)?,
    };
    let mut text = harness_line(&h);
    text.push('\n');
    let _ = writeln!(text, "level: {}", h.level);
    if let Some(d) = h.simplex_dim {
        let _ = writeln!(text, "simplex dimension: {d}");
    }
    let code = match h.outcome {
        Outcome::Confirmed => exit::OK,
        Outcome::HypothesisNotMet => exit::FALSE,
        Outcome::Violation => exit::INTERNAL,
    };
    Report::new(code, text, h)
}

fn duality_text(d: &DualityReport) -> String {
    if d.dual {
        format!("N = {}, dual", d.top_degree)
    } else {
        format!("N = {}, fails in degrees {:?}", d.top_degree, d.failing_degrees)
    }
}

pub fn analyze(k: &SimplicialComplex, cfg: &RunConfig) -> CmdResult {
    let r = analyze_with(k, &cfg.classify()?)?;
    let mut text = String::new();
    let _ = writeln!(text, "vertices: {}", r.vertices);
    let _ = writeln!(text, "betti: {}", tuple(&r.betti));
    let _ = writeln!(text, "golod: {}", status_name(r.golod_status.status));
    if let Some(w) = &r.golod_status.witness {
        let _ = writeln!(text, "golod witness: {}", witness_text(w));
    }
    let _ = writeln!(text, "mng: {}", r.mng.mng);
    if let Some(w) = r.mng.witness_vertex {
        let _ = writeln!(text, "mng witness vertex: {w}");
    }
    core_text(&mut text, &r.core);
    let _ = writeln!(text, "gorenstein*: {}", r.gorenstein_star.gorenstein);
    let _ = writeln!(text, "connected sum: {}", pattern_text(&r.connected_sum.pattern));
    let _ = writeln!(text, "core duality: {}", duality_text(&r.core_duality));
    for h in &r.theorem_checks {
        let _ = writeln!(text, "{}", harness_line(h));
    }
    let _ = writeln!(text, "note: {}", r.golod_status.note);
    let code = if r.invariants_hold() { exit::OK } else { exit::INTERNAL };
    Report::new(code, text, r)
}

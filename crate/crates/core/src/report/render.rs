use std::fmt::Write as _;

use serde::Serialize;

use super::Analysis;
use crate::degeneration::{CheckStatus, IsomorphismDiagnostic, StructuralReport};
use crate::exact::{render, LimitClass};
use crate::invariants::F1Class;

pub const CSV_HEADER: &str = "l,N,n,B,gamma,norm,q,s";

/// One table row; every value is rendered exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub l: usize,
    #[serde(rename = "N")]
    pub big_n: String,
    pub n: String,
    #[serde(rename = "B")]
    pub b: String,
    pub gamma: String,
    pub norm: String,
    pub q: String,
    pub s: String,
}

pub fn report_rows(a: &Analysis) -> Vec<ReportRow> {
    let opt = |x: &Option<crate::exact::Rational>| x.as_ref().map(render).unwrap_or_default();
    a.invariants
        .rows
        .iter()
        .map(|p| ReportRow {
            l: p.l,
            big_n: p.big_n.to_string(),
            n: p.small_n.to_string(),
            b: p.b_sum.to_string(),
            gamma: render(&p.gamma),
            norm: render(&p.norm),
            q: opt(&p.q),
            s: opt(&p.s),
        })
        .collect()
}

pub fn render_csv(a: &Analysis) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in report_rows(a) {
        let _ = writeln!(out, "{},{},{},{},{},{},{},{}", r.l, r.big_n, r.n, r.b, r.gamma, r.norm, r.q, r.s);
    }
    out
}

#[derive(Serialize)]
struct ReducedFiberJson {
    status: CheckStatus,
    image_generators: Vec<String>,
    powers: Vec<Option<u32>>,
    fiber_in_image: bool,
    cap: usize,
}

#[derive(Serialize)]
struct GrowthJson {
    status: CheckStatus,
    difference: Option<String>,
    degree: Option<usize>,
    dimension: usize,
}

#[derive(Serialize)]
struct FlatnessJson {
    status: CheckStatus,
    through: usize,
    first_mismatch: Option<usize>,
}

#[derive(Serialize)]
struct IsomorphismJson {
    status: &'static str,
    degree_x: String,
    degree_image: Option<String>,
}

#[derive(Serialize)]
struct ChecksJson {
    reduced_fiber: ReducedFiberJson,
    growth_21: GrowthJson,
    flatness: FlatnessJson,
    isomorphism: IsomorphismJson,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct InvariantsJson {
    DF1: String,
    F1_class: &'static str,
    F1_value: Option<String>,
    F1_method: Option<&'static str>,
    s_closed_form: Option<String>,
    norm_closed_form: Option<String>,
    q_closed_form: String,
    higher_coefficients: Vec<String>,
    donaldson_diagnostic: String,
    hilbert_polynomial: String,
    weight_polynomial: String,
    stable_from: usize,
    symbolic_note: Option<String>,
}

#[derive(Serialize)]
struct ReportJson {
    rows: Vec<ReportRow>,
    checks: ChecksJson,
    invariants: InvariantsJson,
}

fn checks_json(c: &StructuralReport) -> ChecksJson {
    let isomorphism = match &c.isomorphism {
        IsomorphismDiagnostic::NotIsomorphic { degree_x, degree_image } => IsomorphismJson {
            status: "not_isomorphic",
            degree_x: render(degree_x),
            degree_image: Some(render(degree_image)),
        },
        IsomorphismDiagnostic::Unverified { degree } => {
            IsomorphismJson { status: "unverified", degree_x: render(degree), degree_image: None }
        }
    };
    ChecksJson {
        reduced_fiber: ReducedFiberJson {
            status: c.reduced_fiber.status,
            image_generators: c.reduced_fiber.image_generators.clone(),
            powers: c.reduced_fiber.powers.clone(),
            fiber_in_image: c.reduced_fiber.fiber_in_image,
            cap: c.reduced_fiber.cap,
        },
        growth_21: GrowthJson {
            status: c.growth.status,
            difference: c.growth.difference.as_ref().map(|p| p.to_string()),
            degree: c.growth.degree,
            dimension: c.growth.dimension,
        },
        flatness: FlatnessJson {
            status: c.flatness.status,
            through: c.flatness.through,
            first_mismatch: c.flatness.first_mismatch,
        },
        isomorphism,
    }
}

fn class_token(c: &LimitClass) -> (&'static str, Option<String>) {
    match c {
        LimitClass::Finite(v) => ("finite", Some(render(v))),
        LimitClass::PlusInfinity => ("plus_infinity", None),
        LimitClass::MinusInfinity => ("minus_infinity", None),
    }
}

fn invariants_json(a: &Analysis) -> InvariantsJson {
    let inv = &a.invariants;
    let (class, value, method) = match &inv.f1 {
        F1Class::Exact(c) => {
            let (t, v) = class_token(c);
            (t, v, Some("exact"))
        }
        F1Class::Heuristic(c) => {
            let (t, v) = class_token(c);
            (t, v, Some("heuristic"))
        }
        F1Class::Inconclusive => ("inconclusive", None, None),
    };
    let sym = inv.refined.symbolic.as_ref();
    InvariantsJson {
        DF1: render(&inv.futaki.df1),
        F1_class: class,
        F1_value: value,
        F1_method: method,
        s_closed_form: sym.map(|s| s.s.to_string()),
        norm_closed_form: sym.map(|s| s.norm.to_string()),
        q_closed_form: inv.q.to_string(),
        higher_coefficients: inv.futaki.higher.iter().map(render).collect(),
        donaldson_diagnostic: render(&inv.donaldson_diagnostic),
        hilbert_polynomial: inv.model.n_poly.to_string(),
        weight_polynomial: inv.model.b_poly.to_string(),
        stable_from: inv.model.m0,
        symbolic_note: inv.refined.symbolic_note.clone(),
    }
}

pub fn render_json(a: &Analysis) -> String {
    let doc = ReportJson { rows: report_rows(a), checks: checks_json(&a.checks), invariants: invariants_json(a) };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

/// Human-readable summary of the structural checks.
pub fn checks_summary(c: &StructuralReport) -> String {
    let mut out = String::new();
    let rf = &c.reduced_fiber;
    let _ = writeln!(
        out,
        "reduced fiber: {} (image ideal J = ({}); cap {})",
        rf.status,
        rf.image_generators.join(", "),
        rf.cap
    );
    let powers: Vec<String> = rf.powers.iter().map(|p| p.map_or("-".to_string(), |m| m.to_string())).collect();
    let _ = writeln!(out, "  powers of J generators in I: [{}]", powers.join(", "));
    let g = &c.growth;
    match (&g.difference, g.degree) {
        (Some(d), deg) => {
            let deg = deg.map_or("-infinity".to_string(), |d| d.to_string());
            let _ = writeln!(out, "growth N_l - n_l: {} (= {d}, degree {deg}, n = {})", g.status, g.dimension);
        }
        (None, _) => {
            let _ = writeln!(out, "growth N_l - n_l: {} (too few degrees below the cap)", g.status);
        }
    }
    let f = &c.flatness;
    match f.first_mismatch {
        None => {
            let _ = writeln!(out, "flatness: {} (l = 1..{})", f.status, f.through);
        }
        Some(l) => {
            let _ = writeln!(out, "flatness: {} (first mismatch at l = {l})", f.status);
        }
    }
    match &c.isomorphism {
        IsomorphismDiagnostic::NotIsomorphic { degree_x, degree_image } => {
            let _ = writeln!(
                out,
                "Phi_W: not an isomorphism (deg X = {}, deg image = {})",
                render(degree_x),
                render(degree_image)
            );
        }
        IsomorphismDiagnostic::Unverified { degree } => {
            let _ = writeln!(out, "Phi_W: degree {} preserved; non-isomorphism not verified", render(degree));
        }
    }
    out
}

/// Human-readable invariant summary.
pub fn invariants_summary(a: &Analysis) -> String {
    let inv = &a.invariants;
    let mut out = String::new();
    let f1 = match &inv.f1 {
        F1Class::Exact(c) => c.to_string(),
        other => other.to_string(),
    };
    let _ = writeln!(out, "F̄₁ = {}; F₁ = {f1}", render(&inv.futaki.df1));
    let _ = writeln!(out, "q(l) = {}", inv.q);
    match &inv.refined.symbolic {
        Some(s) => {
            let _ = writeln!(out, "s(l) = {} for l >= {}", s.s, s.valid_from);
        }
        None => {
            let note = inv.refined.symbolic_note.as_deref().unwrap_or("unavailable");
            let _ = writeln!(out, "s(l): {note}");
        }
    }
    let higher: Vec<String> = inv.futaki.higher.iter().map(render).collect();
    let _ = writeln!(out, "expansion coefficients F̄₂, F̄₃, ...: [{}]", higher.join(", "));
    let _ = writeln!(
        out,
        "Donaldson diagnostic (l^-1 coefficient of -B/(l N), equals n! F̄₁): {}",
        render(&inv.donaldson_diagnostic)
    );
    if !inv.sweep_mismatches.is_empty() {
        let _ = writeln!(out, "warning: sweep and closed-form Chow weights differ at l = {:?}", inv.sweep_mismatches);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{analyze, fixture};
    use super::*;

    #[test]
    fn csv_and_json_agree() {
        let a = analyze(&fixture("lixu-cubic").unwrap(), Some(4), None).unwrap();
        let csv = render_csv(&a);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(lines.next(), Some("1,4,3,1,1/4,3/2,-3/2,-1"));
        assert_eq!(lines.next(), Some("2,7,6,1,1/7,12/7,-12/7,-2"));

        let json: serde_json::Value = serde_json::from_str(&render_json(&a)).unwrap();
        let rows = json["rows"].as_array().unwrap();
        for (row, line) in rows.iter().zip(csv.lines().skip(1)) {
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(row["l"].to_string(), fields[0]);
            for (key, f) in ["N", "n", "B", "gamma", "norm", "q", "s"].iter().zip(&fields[1..]) {
                assert_eq!(row[key].as_str().unwrap(), *f);
            }
        }
        assert_eq!(json["invariants"]["DF1"], "0");
        assert_eq!(json["invariants"]["F1_class"], "minus_infinity");
        assert_eq!(json["invariants"]["s_closed_form"], "-l");
        assert_eq!(json["checks"]["growth_21"]["status"], "PASS");
    }
}

//! Deterministic serialisation of the report types into the three output
//! formats. Identical input yields byte-identical output.

use shca_core::fischer::{DecompositionReport, HwvReport};
use shca_core::report::CheckReport;

use crate::{DimsReport, GramReport, KernelReport};

pub struct Rendered {
    pub all_pass: bool,
    pub json: String,
    pub text: String,
    pub csv: String,
}

fn json_of<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn check_report(report: &CheckReport) -> Rendered {
    let mut text = format!("{}\n", report.title);
    for c in &report.checks {
        let mark = if c.pass { "PASS" } else { "FAIL" };
        match &c.detail {
            Some(d) => text.push_str(&format!("  [{mark}] {} ({d})\n", c.name)),
            None => text.push_str(&format!("  [{mark}] {}\n", c.name)),
        }
    }
    let passed = report.checks.iter().filter(|c| c.pass).count();
    text.push_str(&format!("{passed}/{} checks pass\n", report.checks.len()));

    let mut csv = String::from("check,pass,detail\n");
    for c in &report.checks {
        csv.push_str(&format!(
            "{},{},{}\n",
            csv_field(&c.name),
            c.pass,
            csv_field(c.detail.as_deref().unwrap_or(""))
        ));
    }

    Rendered {
        all_pass: report.all_pass(),
        json: json_of(report),
        text,
        csv,
    }
}

pub fn dims_report(report: &DimsReport) -> Rendered {
    let mut text = format!(
        "slice (n={}, a={}, b={}, r={})\n  dim H = {}\n  dim S = {}\n",
        report.n, report.a, report.b, report.r, report.dim_h, report.dim_s
    );
    if report.m_defined {
        text.push_str(&format!("  dim M = {}\n", report.dim_m));
    } else {
        text.push_str("  dim M = 0 (b > r: no h-monogenics)\n");
    }
    let mut all_pass = true;
    if let Some(si) = &report.sum_identity {
        all_pass = si.corrected_holds;
        text.push_str(&format!(
            "  summand dimension sum = {} vs dim H · dim S = {} -> {}\n",
            si.lhs_sum,
            si.harmonic_times_spinor,
            if si.corrected_holds {
                "equal"
            } else {
                "MISMATCH"
            }
        ));
        if !si.literal_matches {
            text.push_str(&format!(
                "  note: variant closed form (factor a+2n-1) gives {}, flagged as inconsistent\n",
                si.rhs_literal
            ));
        }
    }

    let csv = format!(
        "n,a,b,r,dimH,dimS,dimM\n{},{},{},{},{},{},{}\n",
        report.n, report.a, report.b, report.r, report.dim_h, report.dim_s, report.dim_m
    );

    Rendered {
        all_pass,
        json: json_of(report),
        text,
        csv,
    }
}

pub fn kernel_report(report: &KernelReport) -> Rendered {
    let mut text = format!("slice {}\n", report.slice);
    if report.dim == 0 {
        text.push_str("dim = 0 (no h-monogenics in this slice)\n");
    } else {
        match (report.expected_dim, report.matches_expected) {
            (Some(e), Some(ok)) => text.push_str(&format!(
                "dim = {} ({} the formula value {})\n",
                report.dim,
                if ok { "matches" } else { "DIFFERS FROM" },
                e
            )),
            _ => text.push_str(&format!("dim = {}\n", report.dim)),
        }
        for (idx, p) in report.basis.iter().enumerate() {
            text.push_str(&format!("  v{idx} = {p}\n"));
        }
    }

    let mut csv = String::from("vector,state,coeff\n");
    for (idx, p) in report.basis.iter().enumerate() {
        for (s, c) in p.terms() {
            csv.push_str(&format!(
                "{idx},{},{}\n",
                csv_field(&s.to_string()),
                csv_field(&c.to_string())
            ));
        }
    }

    Rendered {
        all_pass: report.matches_expected != Some(false),
        json: json_of(report),
        text,
        csv,
    }
}

pub fn hwv_report(report: &HwvReport) -> Rendered {
    let mut text = format!(
        "highest-weight vector (n={}, a={}, b={}, r={})\n  weight = ({})\n  w = {}\n",
        report.n,
        report.a,
        report.b,
        report.r,
        report.weight.join(", "),
        report.vector
    );
    for c in &report.checks.checks {
        let mark = if c.pass { "PASS" } else { "FAIL" };
        text.push_str(&format!("  [{mark}] {}\n", c.name));
    }

    let mut csv = String::from("check,pass\n");
    for c in &report.checks.checks {
        csv.push_str(&format!("{},{}\n", csv_field(&c.name), c.pass));
    }

    Rendered {
        all_pass: report.all_pass(),
        json: json_of(report),
        text,
        csv,
    }
}

pub fn decomposition_report(report: &DecompositionReport) -> Rendered {
    let mut text = format!(
        "decomposition of the harmonic slice {}\n  harmonic dim = {}\n",
        report.slice, report.harmonic_dim
    );
    for s in &report.summands {
        text.push_str(&format!(
            "  (j={}, i={}) I_({},{}) applied to kernel of slice {}: predicted {}, computed {}, independent: {}\n",
            s.j, s.i, s.k, s.l, s.source_slice, s.predicted_dim, s.computed_dim, s.independent
        ));
    }
    text.push_str(&format!(
        "  joint rank = {} of {}\n  orthogonality of proper embeddings: {}\n  complete: {}\n",
        report.completeness_rank, report.harmonic_dim, report.orthogonality_ok, report.complete
    ));

    let mut csv =
        String::from("j,i,k,l,source_a,source_b,source_r,predictedDim,computedDim,independent\n");
    for s in &report.summands {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            s.j,
            s.i,
            s.k,
            s.l,
            s.source_slice.a,
            s.source_slice.b,
            s.source_slice.r,
            s.predicted_dim,
            s.computed_dim,
            s.independent
        ));
    }
    csv.push_str(&format!("#harmonicDim,{}\n", report.harmonic_dim));
    csv.push_str(&format!("#completenessRank,{}\n", report.completeness_rank));
    csv.push_str(&format!("#orthogonalityOk,{}\n", report.orthogonality_ok));
    csv.push_str(&format!("#complete,{}\n", report.complete));

    Rendered {
        all_pass: report.all_ok(),
        json: json_of(report),
        text,
        csv,
    }
}

pub fn gram_report(report: &GramReport) -> Rendered {
    let mut text = format!(
        "Fischer Gram matrix of the slice basis {}\n  dim = {}\n  diagonal: {}\n  nonzero diagonal: {}\n",
        report.slice, report.dim, report.diagonal, report.nonzero_diagonal
    );
    for (&(r, c), v) in report.matrix.entries() {
        text.push_str(&format!("  G[{r},{c}] = {v}\n"));
    }

    let mut csv = String::from("row,col,value\n");
    for (&(r, c), v) in report.matrix.entries() {
        csv.push_str(&format!("{r},{c},{}\n", csv_field(&v.to_string())));
    }

    Rendered {
        all_pass: report.diagonal && report.nonzero_diagonal,
        json: json_of(report),
        text,
        csv,
    }
}

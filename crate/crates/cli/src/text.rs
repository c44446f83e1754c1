//! Plain-text renderings for `--format text`.

use std::fmt::Write;

use superpair::formulas::{FormulaResult, FormulaValue};
use superpair::report::Report;
use superpair::LieSuperalgebra;

use crate::commands::{FreeBasisOutput, PairOutput, VerifyOutput, WittOutput};

pub fn verify(v: &VerifyOutput) -> String {
    let mut s = format!("{} {}: ", v.algebra, v.dim);
    if v.ok {
        s.push_str("axioms hold\n");
    } else {
        let _ = writeln!(s, "{} violations", v.violations.len());
        for line in &v.violations {
            let _ = writeln!(s, "  {line}");
        }
    }
    s
}

pub fn algebra(l: &LieSuperalgebra) -> String {
    let mut s = format!("{} {}\n", l.name().unwrap_or("L"), l.dim());
    let names = |p: superpair::Parity| -> Vec<&str> {
        (0..l.len()).filter(|&i| l.parity(i) == p).map(|i| l.basis_name(i)).collect()
    };
    let _ = writeln!(s, "even: {}", names(superpair::Parity::Even).join(" "));
    let _ = writeln!(s, "odd:  {}", names(superpair::Parity::Odd).join(" "));
    for ((i, j), v) in l.canonical_brackets() {
        let terms: Vec<(String, superpair::Scalar)> = v.iter().map(|(k, c)| (l.basis_name(*k).to_string(), c.clone())).collect();
        let _ = writeln!(s, "[{},{}] = {}", l.basis_name(i), l.basis_name(j), superpair::scalar::format_combination(&terms));
    }
    s
}

pub fn pair(p: &PairOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra            {}", p.algebra);
    let _ = writeln!(s, "ideal              {} spanned by {}", p.ideal_dim, p.ideal.join(", "));
    let _ = writeln!(s, "multiplier         {}", p.report.multiplier);
    let _ = writeln!(s, "exterior product   {}", p.report.exterior_product);
    let _ = writeln!(s, "exterior center    {}", p.report.exterior_center_dim);
    if let Some(c) = &p.exterior_center {
        if !c.is_empty() {
            let _ = writeln!(s, "  spanned by       {}", c.join(", "));
        }
    }
    let _ = writeln!(s, "capable            {}", p.report.capable);
    s
}

pub fn free_basis(f: &FreeBasisOutput) -> String {
    let mut s = format!("free Lie superalgebra on {} truncated above degree {}\n", f.alphabet.join(" "), f.max_degree);
    let _ = writeln!(s, "{:>6}  {:>9}  {:>9}  ok", "degree", "basis", "formula");
    for d in &f.degrees {
        let _ = writeln!(s, "{:>6}  {:>9}  {:>9}  {}", d.degree, d.dim.to_string(), d.predicted.to_string(), if d.agrees { "yes" } else { "NO" });
    }
    let _ = writeln!(s, "multidegrees:");
    for r in &f.multidegrees {
        let _ = writeln!(s, "  {:?} {} SW={} basis={}", r.multidegree, r.parity, r.super_witt, r.enumerated);
    }
    if let Some(ms) = &f.monomials {
        let _ = writeln!(s, "monomials:");
        for m in ms {
            let _ = writeln!(s, "  {} {}", m.parity, m.bracket);
        }
    }
    s
}

pub fn witt(w: &WittOutput) -> String {
    let mut s = String::new();
    if let Some(d) = &w.degree {
        let _ = writeln!(s, "dim {} = ({}|{}), sdim {}", d.dim, d.dim_even, d.dim_odd, d.sdim);
    }
    for r in &w.rows {
        let _ = writeln!(s, "{:?} {} W={} SW={} necklace={}", r.multidegree, r.parity, r.witt, r.super_witt, r.necklace);
    }
    s
}

fn value(v: &FormulaValue) -> String {
    match v {
        FormulaValue::Dim(d) => d.to_string(),
        FormulaValue::Total(options) => {
            let opts: Vec<String> = options.iter().map(|o| o.to_string()).collect();
            format!("total {}", opts.join(" or "))
        }
        FormulaValue::Bool(b) => b.to_string(),
    }
}

pub fn formula(f: &FormulaResult) -> String {
    let mut s = format!("{} ({})\n", value(&f.value), f.source);
    if let Some(c) = &f.caveat {
        let _ = writeln!(s, "caveat: {c}");
    }
    s
}

pub fn report(r: &Report) -> String {
    let mut s = String::new();
    let sum = &r.summary;
    let _ = writeln!(
        s,
        "{} checks, {} failures, {} caveated: {}",
        sum.checks,
        sum.failures,
        sum.caveated,
        if r.passed() { "PASS" } else { "FAIL" }
    );
    let bad_mult = r.multipliers.iter().filter(|m| !m.agrees).count();
    let bad_cap = r.capability.iter().filter(|c| !c.agrees).count();
    let bad_id = r.identities.iter().filter(|c| !c.holds).count();
    let bad_inv = r.invariance.iter().filter(|c| !c.consistent).count();
    let bad_free = r.free_counts.iter().filter(|c| !c.agrees).count();
    let _ = writeln!(s, "whole-algebra multipliers  {:>5} rows, {bad_mult} disagree", r.multipliers.len());
    let _ = writeln!(s, "whole-algebra capability   {:>5} rows, {bad_cap} disagree", r.capability.len());
    let _ = writeln!(s, "pairs                      {:>5} rows", r.pairs.len());
    let _ = writeln!(s, "identities                 {:>5} rows, {bad_id} violated", r.identities.len());
    let _ = writeln!(s, "invariance                 {:>5} rows, {bad_inv} inconsistent", r.invariance.len());
    let _ = writeln!(s, "free counts                {:>5} rows, {bad_free} disagree", r.free_counts.len());
    if !r.discrepancies.is_empty() {
        let _ = writeln!(s, "discrepancies:");
        for d in &r.discrepancies {
            let _ = writeln!(
                s,
                "  {} | {} <{}> {:?}: formula {}, computed {}{}",
                d.source,
                d.algebra,
                d.ideal.join(", "),
                d.params,
                value(&d.formula),
                d.brute,
                d.caveat.as_ref().map(|c| format!(" [{c}]")).unwrap_or_default()
            );
        }
    }
    if !r.odd_center_ambiguity.is_empty() {
        let _ = writeln!(s, "H_1 ideals and multiplier totals:");
        for a in &r.odd_center_ambiguity {
            let _ = writeln!(s, "  <{}> {}: {}", a.ideal.join(", "), a.ideal_dim, a.multiplier_total);
        }
    }
    s
}

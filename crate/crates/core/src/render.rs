//! Text, CSV and SVG renderers for the report types. CSV is the
//! authoritative format; every emitter is deterministic byte for byte.

use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::classify::{SccAnalysis, Verdict};
use crate::edit::DiameterReport;
use crate::experiments::{CurveRow, RecursionReport, RecursionVerdict, RkEstimate};
use crate::thue_morse::GrowthRecord;

fn f6(x: f64) -> String {
    format!("{x:.6}")
}

/// Column header matching `csv_diam_row`.
pub const DIAM_HEADER: &str = "n,doubled_diam,diam,exact,witness_a,witness_b,evaluated,pruned";

/// One diameter report as a bare CSV row (no trailing newline).
pub fn csv_diam_row(report: &DiameterReport, alphabet: &Alphabet) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        report.n,
        report.value.doubled(),
        report.value,
        report.exact,
        report.witness.0.render(alphabet),
        report.witness.1.render(alphabet),
        report.pairs_evaluated,
        report.pairs_pruned
    )
}

/// One diameter report as a single-row CSV table.
pub fn csv_diam(report: &DiameterReport, alphabet: &Alphabet) -> String {
    format!("{DIAM_HEADER}\n{}\n", csv_diam_row(report, alphabet))
}

/// Growth table rows for the prefix-versus-complement distances.
pub fn csv_tm(records: &[GrowthRecord]) -> String {
    let mut out = String::from("n,doubled_dE,bb,lower,upper\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.n,
            r.d_e.doubled(),
            r.bb,
            f6(r.lower),
            f6(r.blikstad_upper)
        );
    }
    out
}

/// Two-column index/value listing of bb(n), one row per length.
pub fn bfile(records: &[GrowthRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let _ = writeln!(out, "{} {}", r.n, r.bb);
    }
    out
}

/// Diameter curve rows with the scaled reference envelope.
pub fn csv_curve(rows: &[CurveRow]) -> String {
    let mut out = String::from("n,doubled_diam,ratio,envelope\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.n,
            r.doubled_diam,
            f6(r.ratio),
            f6(r.envelope)
        );
    }
    out
}

/// Factor-count rows (length, count).
pub fn csv_profile(profile: &[(usize, usize)]) -> String {
    let mut out = String::from("n,count\n");
    for &(n, count) in profile {
        let _ = writeln!(out, "{n},{count}");
    }
    out
}

/// One window estimate as a single-row CSV table.
pub fn csv_rk(est: &RkEstimate) -> String {
    let mut out = String::from(
        "k,base,n_lo,n_hi,value,value_num,value_den,n_at_max,doubled_at_max,exact,lengths_scored\n",
    );
    let _ = writeln!(
        out,
        "{},{},{},{},{},{},{},{},{},{},{}",
        est.k,
        f6(est.base),
        est.n_lo,
        est.n_hi,
        f6(*est.value.numer() as f64 / *est.value.denom() as f64),
        est.value.numer(),
        est.value.denom(),
        est.n_at_max,
        est.doubled_at_max,
        est.exact,
        est.n_evaluated.len()
    );
    out
}

/// Human-readable contraction-check verdict block.
pub fn text_recursion(report: &RecursionReport) -> String {
    let verdict = match report.verdict {
        RecursionVerdict::Consistent => "CONSISTENT",
        RecursionVerdict::ViolationCandidate => "VIOLATION-CANDIDATE",
        RecursionVerdict::Inconclusive => "INCONCLUSIVE",
    };
    format!(
        "window k = {}\nlhs = {}\nrhs = {}\nverdict = {}\n",
        report.k, report.lhs, report.rhs, verdict
    )
}

/// Human-readable classification block with per-component rows.
pub fn text_classify(analysis: &SccAnalysis, alphabet: &Alphabet) -> String {
    let mut out = String::new();
    let verdict = match analysis.verdict {
        Verdict::Sublinear => "SUBLINEAR",
        Verdict::Full => "FULL",
        Verdict::NotApplicable => "NOT-APPLICABLE",
    };
    let _ = writeln!(out, "verdict = {verdict}");
    for (idx, comp) in analysis.components.iter().enumerate() {
        let letters: Vec<&str> = comp.iter().map(|&c| alphabet.token(c)).collect();
        let _ = writeln!(
            out,
            "component {idx}: letters {{{}}} essential={} period={}",
            letters.join(","),
            analysis.essential[idx],
            analysis.periods[idx]
        );
    }
    match analysis.witness {
        Some(w) => {
            let _ = writeln!(
                out,
                "witness: a={} b={} power={}",
                alphabet.token(w.a),
                alphabet.token(w.b),
                w.power
            );
        }
        None => {
            let _ = writeln!(out, "witness: none");
        }
    }
    out
}

/// Minimal line chart: one polyline per named series over shared axes.
pub fn svg_chart(title: &str, series: &[(&str, Vec<(f64, f64)>)]) -> String {
    const W: f64 = 800.0;
    const H: f64 = 500.0;
    const PAD: f64 = 60.0;
    const PALETTE: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

    let points: Vec<(f64, f64)> = series.iter().flat_map(|s| s.1.iter().copied()).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if points.is_empty() || x0 == x1 {
        x0 = 0.0;
        x1 = 1.0;
    }
    if points.is_empty() || y0 == y1 {
        y0 = 0.0;
        y1 = 1.0;
    }
    let sx = |x: f64| PAD + (x - x0) / (x1 - x0) * (W - 2.0 * PAD);
    let sy = |y: f64| H - PAD - (y - y0) / (y1 - y0) * (H - 2.0 * PAD);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    );
    let _ = writeln!(
        out,
        "  <rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>\n  <text x=\"{}\" y=\"30\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"16\">{title}</text>",
        W / 2.0
    );
    let _ = writeln!(
        out,
        "  <line x1=\"{PAD}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
        H - PAD,
        W - PAD,
        H - PAD
    );
    let _ = writeln!(
        out,
        "  <line x1=\"{PAD}\" y1=\"{PAD}\" x2=\"{PAD}\" y2=\"{}\" stroke=\"black\"/>",
        H - PAD
    );
    let _ = writeln!(
        out,
        "  <text x=\"{PAD}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\">{}</text>",
        H - PAD / 2.0,
        f6(x0)
    );
    let _ = writeln!(
        out,
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"12\">{}</text>",
        W - PAD,
        H - PAD / 2.0,
        f6(x1)
    );
    let _ = writeln!(
        out,
        "  <text x=\"5\" y=\"{}\" font-family=\"monospace\" font-size=\"12\">{}</text>",
        H - PAD,
        f6(y0)
    );
    let _ = writeln!(
        out,
        "  <text x=\"5\" y=\"{PAD}\" font-family=\"monospace\" font-size=\"12\">{}</text>",
        f6(y1)
    );
    for (idx, (name, data)) in series.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let path: Vec<String> = data
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        let _ = writeln!(
            out,
            "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>",
            path.join(" ")
        );
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" fill=\"{color}\" font-family=\"monospace\" font-size=\"12\">{name}</text>",
            W - PAD + 5.0,
            PAD + 15.0 * idx as f64
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}

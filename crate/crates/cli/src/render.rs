//! Plain-text rendering of reports, sweep tables and conjecture probes.
//! The JSON renderings carry exactly the same numeric content; text is for
//! terminals.

use plane_branch::report::{
    BranchReport, CheckStatus, ConjectureEvidence, EvidenceStatus, SweepOutcome, SweepRow,
};
use plane_branch::MilnorResult;

fn seq(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn mu_cell(mu: &MilnorResult) -> String {
    match mu {
        MilnorResult::Finite { value, .. } => value.to_string(),
        MilnorResult::Infinite { .. } => "infinite".into(),
        MilnorResult::Unknown { .. } => "unknown".into(),
    }
}

fn evidence_status(status: EvidenceStatus) -> &'static str {
    match status {
        EvidenceStatus::Supporting => "supporting",
        EvidenceStatus::Contradicting => "contradicting",
        EvidenceStatus::Inconclusive => "inconclusive",
        EvidenceStatus::NotApplicable => "not-applicable",
    }
}

pub fn report_text(report: &BranchReport) -> String {
    let mut out = String::new();
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };

    push(&mut out, format!("branch invariants over F_{}", report.p));
    push(&mut out, format!("  p = {}   n = {}", report.p, report.n));
    if let Some(supp) = &report.y_support {
        push(&mut out, format!("  y support = {}", seq(supp)));
    }
    if let Some(beta) = &report.beta {
        push(
            &mut out,
            format!("  characteristic exponents beta = {}", seq(beta)),
        );
    }
    if let Some(bb) = &report.beta_bar {
        let asserted = if report.hypotheses.generators_user_asserted {
            "  (user-asserted)"
        } else {
            ""
        };
        push(
            &mut out,
            format!("  semigroup generators beta_bar = {}{}", seq(bb), asserted),
        );
    }
    if let Some(e) = &report.e {
        push(&mut out, format!("  gcd sequence e = {}", seq(e)));
    }
    if let Some(nseq) = &report.n_seq {
        push(&mut out, format!("  quotients n_k = {}", seq(nseq)));
    }
    if let Some(c) = report.conductor {
        push(&mut out, format!("  conductor c = {}", c));
    }
    if let Some(d) = report.delta {
        push(&mut out, format!("  delta = {}", d));
    }
    if let Some(m) = &report.merle {
        let pkgs: Vec<String> = m
            .orders
            .iter()
            .zip(&m.contacts)
            .zip(&m.moduli)
            .map(|((o, q), d)| format!("(ord {}, contact {}, mod {})", o, q, d))
            .collect();
        push(&mut out, format!("  merle packages: {}", pkgs.join(", ")));
    }
    if let Some([a, b, c]) = report.polar_triple {
        push(
            &mut out,
            format!("  polar triple = ({}, {}, {})", a, b, c),
        );
    }
    if let Some(i0) = report.i0_f_fy {
        push(&mut out, format!("  i0(f, f_y) = {}", i0));
    }
    push(&mut out, format!("  mu = {}", report.mu));
    push(
        &mut out,
        format!(
            "  hypotheses: p coprime to n: {}; p > n: {}; generators user-asserted: {}",
            yes_no(report.hypotheses.p_not_dividing_n),
            yes_no(report.hypotheses.p_greater_than_n),
            yes_no(report.hypotheses.generators_user_asserted),
        ),
    );
    push(&mut out, "checks:".into());
    for check in &report.checks {
        let tag = match check.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "n/a ",
        };
        push(
            &mut out,
            format!("  [{}] {}: {}", tag, check.name, check.detail),
        );
    }
    out.push_str(&conjecture_block(&report.conjecture_evidence));
    out
}

fn conjecture_block(ev: &ConjectureEvidence) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "conjecture evidence: {}{}\n",
        evidence_status(ev.status),
        if ev.experimental { " (experimental)" } else { "" }
    ));
    if let (Some(pred), Some(mu_eq)) = (ev.generators_coprime_to_p, ev.mu_equals_conductor) {
        out.push_str(&format!(
            "  generators coprime to p: {}; mu = c: {}\n",
            yes_no(pred),
            yes_no(mu_eq)
        ));
    }
    out.push_str(&format!("  note: {}\n", ev.note));
    out
}

fn divisibility_flags(p: u64, beta_bar: &[u64]) -> String {
    let hits: Vec<String> = beta_bar
        .iter()
        .enumerate()
        .filter(|(_, &g)| g % p == 0)
        .map(|(k, _)| format!("k={}", k))
        .collect();
    if hits.is_empty() {
        "-".into()
    } else {
        hits.join(",")
    }
}

pub fn sweep_text(n: u64, y: &str, rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!("sweep of ({}; {})\n", n, y));
    out.push_str(&format!(
        "{:<6} {:<14} {:<5} {:<6} {:<10} {:<5} {:<12} verdict\n",
        "p", "beta_bar", "c", "delta", "mu", "mu=c", "p|beta_bar_k"
    ));
    for row in rows {
        match &row.outcome {
            SweepOutcome::Analyzed { report } => {
                let bb = report.beta_bar.as_deref().unwrap_or(&[]);
                let bb_str: Vec<String> = bb.iter().map(|x| x.to_string()).collect();
                let c = report.conductor.unwrap_or(0);
                let mu_eq = report
                    .mu
                    .value()
                    .map(|v| yes_no(v == c))
                    .unwrap_or("-");
                let verdict = if report.any_check_failed() {
                    let failing: Vec<&str> = report
                        .checks
                        .iter()
                        .filter(|c| c.status == CheckStatus::Fail)
                        .map(|c| c.name.as_str())
                        .collect();
                    format!("FAIL({})", failing.join(","))
                } else {
                    "ok".into()
                };
                out.push_str(&format!(
                    "{:<6} {:<14} {:<5} {:<6} {:<10} {:<5} {:<12} {}\n",
                    row.p,
                    bb_str.join(","),
                    c,
                    report.delta.unwrap_or(0),
                    mu_cell(&report.mu),
                    mu_eq,
                    divisibility_flags(row.p, bb),
                    verdict
                ));
            }
            SweepOutcome::Skipped { reason } => {
                out.push_str(&format!("{:<6} skipped: {}\n", row.p, reason));
            }
        }
    }
    out
}

pub fn conjecture_text(n: u64, y: &str, rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!("conjecture probe of ({}; {})\n", n, y));
    let mut supporting = 0u64;
    let mut contradicting = 0u64;
    let mut inconclusive = 0u64;
    let mut not_applicable = 0u64;
    let mut skipped = 0u64;
    for row in rows {
        match &row.outcome {
            SweepOutcome::Analyzed { report } => {
                let ev = &report.conjecture_evidence;
                match ev.status {
                    EvidenceStatus::Supporting => supporting += 1,
                    EvidenceStatus::Contradicting => contradicting += 1,
                    EvidenceStatus::Inconclusive => inconclusive += 1,
                    EvidenceStatus::NotApplicable => not_applicable += 1,
                }
                let detail = match (ev.generators_coprime_to_p, ev.mu_equals_conductor) {
                    (Some(pred), Some(mu_eq)) => format!(
                        " (generators coprime to p: {}, mu = c: {})",
                        yes_no(pred),
                        yes_no(mu_eq)
                    ),
                    _ => String::new(),
                };
                out.push_str(&format!(
                    "p = {}: {}{}{}\n",
                    row.p,
                    evidence_status(ev.status),
                    if ev.experimental { " [experimental]" } else { "" },
                    detail
                ));
                if ev.status == EvidenceStatus::Contradicting {
                    out.push_str(&format!(
                        "EVIDENCE: conjecture contradicted at p = {} (mu = {}, c = {:?})\n",
                        row.p,
                        mu_cell(&report.mu),
                        report.conductor
                    ));
                }
            }
            SweepOutcome::Skipped { reason } => {
                skipped += 1;
                out.push_str(&format!("p = {}: skipped ({})\n", row.p, reason));
            }
        }
    }
    out.push_str(&format!(
        "EVIDENCE: {} supporting, {} contradicting, {} inconclusive, {} not-applicable, {} skipped\n",
        supporting, contradicting, inconclusive, not_applicable, skipped
    ));
    out
}

//! The `verify` campaign and its text/JSON report.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use lie_complexity::complexity::{
    verify_bound, verify_conjugate_closure, verify_index_sets, verify_lie_cycles,
    verify_power_status, WordSource, DEFAULT_PREFIX_CAP,
};
use lie_complexity::sturmian::SlopeSpec;
use lie_complexity::Result;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Check {
    pub check: &'static str,
    pub n: Option<usize>,
    pub subject: String,
    pub passed: bool,
    pub certified: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub source: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        value["passed"] = (self.failed() == 0).into();
        serde_json::to_string_pretty(&value).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("source: {}\n", self.source);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let n = c.n.map(|n| format!(" n={n}")).unwrap_or_default();
            let cert = if c.certified { "" } else { " [uncertified]" };
            writeln!(
                out,
                "{status} {}{n} {}: {}{cert}",
                c.check, c.subject, c.detail
            )
            .unwrap();
        }
        let verdict = if self.failed() == 0 { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{verdict}: {} checks, {} failed",
            self.total(),
            self.failed()
        )
        .unwrap();
        out
    }
}

/// Bound and cycle checks for every `n`; for a Sturmian source also the
/// conjugate-closure checks (`n >= 2`), index sets and power status up to `k_max`.
pub fn verify(
    source: &WordSource,
    cf: Option<&SlopeSpec>,
    range: RangeInclusive<usize>,
    k_max: usize,
) -> Result<Report> {
    let mut checks = Vec::new();
    for n in range {
        let row = verify_bound(source, n)?;
        let lie = row.lie_bruteforce.expect("bruteforce ran");
        let delta = row
            .delta_p
            .map_or_else(|| "-".to_string(), |d| d.to_string());
        checks.push(Check {
            check: "bound",
            n: Some(n),
            subject: "L(n) <= p(n) - p(n-1) + 1".into(),
            passed: row.bound_ok,
            certified: certified_at(source, n)?,
            detail: format!("L={lie} p={} dp={delta}", row.p),
        });

        if n >= 1 {
            let c = verify_lie_cycles(source, n)?;
            checks.push(Check {
                check: "cycles",
                n: Some(n),
                subject: "Lie classes = Lie cycles".into(),
                passed: c.passed(),
                certified: c.certified,
                detail: format!(
                    "classes={} cycles={} edge_disjoint={}",
                    c.classes, c.cycles, c.edge_disjoint
                ),
            });
        }

        if let (Some(spec), true) = (cf, n >= 2) {
            let report = verify_conjugate_closure(source, n, spec)?;
            for f in report.failures() {
                checks.push(Check {
                    check: f.rule,
                    n: Some(n),
                    subject: f.subject.clone(),
                    passed: false,
                    certified: report.certified,
                    detail: f.detail.clone(),
                });
            }
            checks.push(Check {
                check: "closure",
                n: Some(n),
                subject: "closed primitive factors = conjugates of S".into(),
                passed: report.passed(),
                certified: report.certified,
                detail: format!("{} sub-checks", report.checks.len()),
            });
        }
    }

    if cf.is_some() {
        for c in verify_index_sets(source, k_max, DEFAULT_PREFIX_CAP)? {
            checks.push(Check {
                check: "index-set",
                n: None,
                subject: format!("{} = {}", c.label, c.word),
                passed: c.passed(),
                certified: c.found.certified,
                detail: format!(
                    "expected {:?} found {:?} (prefix {})",
                    c.expected, c.found.indices, c.found.prefix_len
                ),
            });
        }
        for c in verify_power_status(source, k_max)? {
            checks.push(Check {
                check: "power",
                n: None,
                subject: format!("({})^{}", c.label, c.exponent),
                passed: c.passed(),
                certified: c.certified,
                detail: format!("expected Lie = {}, found {}", c.expect_lie, c.lie),
            });
        }
    }

    Ok(Report {
        source: source.to_string(),
        checks,
    })
}

fn certified_at(source: &WordSource, n: usize) -> Result<bool> {
    Ok(lie_complexity::complexity::saturate(source, n)?.certified)
}

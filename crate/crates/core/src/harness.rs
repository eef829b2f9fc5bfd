//! Batch verification over a catalog and report emission.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::analysis::Analysis;
use crate::catalog::{Catalog, CatalogEntry};
use crate::error::{Error, Result};
use crate::family::named;
use crate::group::{Group, Limits};
use crate::lattice::CdLattice;
use crate::report::{TheoremId, TheoremReport, Verdict};
use crate::subgroup::DEFAULT_SUBGROUP_BUDGET;
use crate::theorems::{run_check, verify_theorem4_restricted};

/// Default `--max-order` for catalog runs.
pub const DEFAULT_VERIFY_MAX_ORDER: usize = 128;

/// Largest order a catalog run may request.
pub const HARD_MAX_ORDER: usize = 512;

#[derive(Debug, Clone)]
pub struct HarnessOptions {
    pub theorems: Vec<TheoremId>,
    pub jobs: usize,
    pub limits: Limits,
    pub subgroup_budget: usize,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions {
            theorems: TheoremId::ALL.to_vec(),
            jobs: 1,
            limits: Limits::with_max_order(HARD_MAX_ORDER),
            subgroup_budget: DEFAULT_SUBGROUP_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub restricted: usize,
}

impl Counts {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.not_applicable + self.restricted
    }

    fn add(&mut self, r: &TheoremReport) {
        match r.verdict {
            Verdict::Fail => self.fail += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
            Verdict::Pass if r.restricted => self.restricted += 1,
            Verdict::Pass => self.pass += 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct HarnessRun {
    pub catalog: Catalog,
    pub theorems: Vec<TheoremId>,
    pub reports: Vec<TheoremReport>,
    pub summary: BTreeMap<TheoremId, Counts>,
    pub wall_time: Duration,
}

impl HarnessRun {
    pub fn any_failed(&self) -> bool {
        self.reports.iter().any(|r| r.verdict == Verdict::Fail)
    }

    pub fn reports_for(&self, id: TheoremId) -> impl Iterator<Item = &TheoremReport> {
        self.reports.iter().filter(move |r| r.theorem_id == id)
    }
}

fn failed_build(label: &str, ids: &[TheoremId], err: &Error) -> Vec<TheoremReport> {
    ids.iter()
        .map(|&id| {
            let mut r = TheoremReport::new(label, 0, id);
            r.fail(format!("group construction failed: {err}"));
            r
        })
        .collect()
}

/// Runs the selected checks on one group, sharing one subgroup enumeration.
/// If enumeration exceeds the budget, `t4` falls back to restricted
/// mode and the other checks fail with the budget error.
pub fn check_group(group: &Group, ids: &[TheoremId], subgroup_budget: usize) -> Vec<TheoremReport> {
    match Analysis::new(group, subgroup_budget) {
        Ok(analysis) => ids.iter().map(|&id| run_check(&analysis, id)).collect(),
        Err(err) => ids
            .iter()
            .map(|&id| {
                if id == TheoremId::T4 {
                    verify_theorem4_restricted(group)
                } else {
                    let mut r = TheoremReport::new(group.display_label(), group.order(), id);
                    r.fail(format!("subgroup enumeration failed: {err}"));
                    r
                }
            })
            .collect(),
    }
}

fn run_entry(entry: &CatalogEntry, options: &HarnessOptions) -> Vec<TheoremReport> {
    let cap = entry
        .max_order
        .map_or(options.limits.max_order, |m| m.min(options.limits.max_order));
    let label = entry.spec.to_string();
    match named(&entry.spec, Limits::with_max_order(cap)) {
        Ok(group) => check_group(&group, &options.theorems, options.subgroup_budget),
        Err(err) => failed_build(&label, &options.theorems, &err),
    }
}

/// Runs every selected check on every catalog entry. Reports come out in
/// catalog order, then theorem order, whatever the parallelism.
pub fn run_harness(catalog: &Catalog, options: &HarnessOptions) -> HarnessRun {
    let start = Instant::now();
    let mut theorems = options.theorems.clone();
    theorems.sort();
    theorems.dedup();
    let options = HarnessOptions {
        theorems: theorems.clone(),
        ..options.clone()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.max(1))
        .build()
        .expect("thread pool");
    let per_entry: Vec<Vec<TheoremReport>> = pool.install(|| {
        catalog
            .entries
            .par_iter()
            .map(|e| run_entry(e, &options))
            .collect()
    });
    let reports: Vec<TheoremReport> = per_entry.into_iter().flatten().collect();
    let mut summary: BTreeMap<TheoremId, Counts> =
        theorems.iter().map(|&t| (t, Counts::default())).collect();
    for r in &reports {
        summary.entry(r.theorem_id).or_default().add(r);
    }
    HarnessRun {
        catalog: catalog.clone(),
        theorems,
        reports,
        summary,
        wall_time: start.elapsed(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Records,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "records" => Ok(ReportFormat::Records),
            other => Err(format!("unknown format `{other}` (expected text or records)")),
        }
    }
}

/// Serializes a run. Neither format includes timing, so output depends only
/// on the inputs.
pub fn emit_report(run: &HarnessRun, format: ReportFormat) -> String {
    match format {
        ReportFormat::Records => run
            .reports
            .iter()
            .map(|r| r.to_record() + "\n")
            .collect(),
        ReportFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:<44} {:>5} {:<6} {:<15} detail",
                "group", "order", "check", "verdict"
            );
            for r in &run.reports {
                let verdict = if r.restricted && r.verdict == Verdict::Pass {
                    "pass(restricted)".to_string()
                } else {
                    r.verdict.to_string()
                };
                let _ = writeln!(
                    out,
                    "{:<44} {:>5} {:<6} {:<15} {}",
                    r.group_label, r.order, r.theorem_id, verdict, r.detail
                );
            }
            if !run.reports.is_empty() {
                out.push('\n');
                for (id, c) in &run.summary {
                    let _ = writeln!(
                        out,
                        "{id}: pass={} fail={} not_applicable={} restricted={} total={}",
                        c.pass,
                        c.fail,
                        c.not_applicable,
                        c.restricted,
                        c.total()
                    );
                }
            }
            out
        }
    }
}

/// DOT rendering of the CD lattice of one group.
pub fn emit_lattice_dot(group: &Group, subgroup_budget: usize) -> Result<String> {
    let analysis = Analysis::new(group, subgroup_budget)?;
    Ok(CdLattice::build(&analysis)?.to_dot())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{CatalogSource, default_catalog};

    fn catalog(text: &str) -> Catalog {
        Catalog::parse(text, CatalogSource::BuiltIn).unwrap()
    }

    #[test]
    fn abelian_only_run() {
        let c = catalog("cyclic:4\nelementary_abelian:2:3\ncyclic:12\n");
        let run = run_harness(&c, &HarnessOptions::default());
        assert_eq!(run.reports.len(), 3 * 8);
        assert!(run
            .reports
            .iter()
            .all(|r| matches!(r.verdict, Verdict::Pass | Verdict::NotApplicable)));
        for counts in run.summary.values() {
            assert_eq!(counts.total(), 3);
        }
    }

    #[test]
    fn empty_run_is_header_only() {
        let c = catalog("");
        let run = run_harness(&c, &HarnessOptions::default());
        let text = emit_report(&run, ReportFormat::Text);
        assert_eq!(text.lines().count(), 1);
        assert!(text.starts_with("group"));
        assert_eq!(emit_report(&run, ReportFormat::Records), "");
    }

    #[test]
    fn build_failures_become_fail_reports() {
        let c = catalog("symmetric:6\n");
        let options = HarnessOptions {
            theorems: vec![TheoremId::T1],
            limits: Limits::with_max_order(128),
            ..HarnessOptions::default()
        };
        let run = run_harness(&c, &options);
        assert_eq!(run.reports.len(), 1);
        assert_eq!(run.reports[0].verdict, Verdict::Fail);
        assert!(run.any_failed());
    }

    #[test]
    fn parallel_output_matches_serial() {
        let c = default_catalog(24);
        let serial = run_harness(&c, &HarnessOptions::default());
        let parallel = run_harness(
            &c,
            &HarnessOptions {
                jobs: 4,
                ..HarnessOptions::default()
            },
        );
        assert_eq!(
            emit_report(&serial, ReportFormat::Records),
            emit_report(&parallel, ReportFormat::Records)
        );
        let text = emit_report(&serial, ReportFormat::Text);
        for line in text.lines().filter(|l| l.contains("total=")) {
            assert!(line.ends_with(&format!("total={}", c.len())), "{line}");
        }
    }
}

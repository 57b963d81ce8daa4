//! Sweep over the built-in corpus. Entries run in parallel; results are
//! collected back in corpus order so the output does not depend on
//! scheduling.

use std::time::Instant;

use maxinv_core::theorem::{check_reference_fixtures, Instance};
use maxinv_core::Result;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{corpus, CorpusEntry};
use crate::report::{schmidt_info, CheckReport, FixtureInfo, Timings, SCHEMA_VERSION};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSelector {
    All,
    Only(Vec<u64>),
}

impl PrimeSelector {
    pub fn parse(text: &str) -> Result<Self, String> {
        if text == "all" {
            return Ok(PrimeSelector::All);
        }
        let mut primes = text
            .split(',')
            .map(|s| {
                let s = s.trim();
                match s.parse::<u64>() {
                    Ok(p) if maxinv_core::structure::is_prime(p) => Ok(p),
                    _ => Err(format!("not a prime: {s:?}")),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        primes.sort_unstable();
        primes.dedup();
        Ok(PrimeSelector::Only(primes))
    }

    fn selects(&self, p: u64) -> bool {
        match self {
            PrimeSelector::All => true,
            PrimeSelector::Only(ps) => ps.contains(&p),
        }
    }

    pub fn label(&self) -> String {
        match self {
            PrimeSelector::All => "all".to_string(),
            PrimeSelector::Only(ps) => ps.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleSummary {
    pub group: String,
    pub action: String,
    pub order: usize,
    pub action_order: usize,
    pub prime: u64,
    pub hypothesis: bool,
    pub vacuous: bool,
    pub case: Option<u8>,
    pub consistent: bool,
    pub replay_ok: bool,
    pub two_prime_conclusion: bool,
    pub solubility: bool,
    pub non_p_nilpotent: bool,
    pub schmidt: Option<bool>,
}

impl TripleSummary {
    fn new(r: &CheckReport) -> Self {
        TripleSummary {
            group: r.group.name.clone(),
            action: r.action.name.clone(),
            order: r.group.order,
            action_order: r.action.order,
            prime: r.prime,
            hypothesis: r.hypothesis.holds,
            vacuous: r.hypothesis.vacuous,
            case: r.classification.case,
            consistent: r.consistent,
            replay_ok: r.classification.replay_ok,
            two_prime_conclusion: r.satellites.two_prime_conclusion.passed,
            solubility: r.satellites.solubility.passed,
            non_p_nilpotent: r.satellites.non_p_nilpotent.passed,
            schmidt: r.satellites.schmidt.as_ref().map(|s| s.passed),
        }
    }

    pub fn passed(&self) -> bool {
        self.consistent
            && self.replay_ok
            && self.two_prime_conclusion
            && self.solubility
            && self.non_p_nilpotent
            && self.schmidt.unwrap_or(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub groups: usize,
    pub triples: usize,
    pub consistent: usize,
    pub inconsistent: usize,
    pub failed_checks: usize,
    pub hypothesis_holds: usize,
    /// Triples per case 1..=4, then triples with no case.
    pub by_case: [usize; 5],
    pub fixtures_passed: usize,
    pub fixtures_failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub schema: u32,
    pub max_order: usize,
    pub primes: String,
    pub triples: Vec<TripleSummary>,
    pub fixtures: Vec<FixtureInfo>,
    pub summary: CensusSummary,
    /// Full reports for every triple that failed any check.
    pub discrepancies: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CensusReport {
    pub fn all_consistent(&self) -> bool {
        self.summary.inconsistent == 0
    }

    pub fn all_passed(&self) -> bool {
        self.summary.inconsistent == 0
            && self.summary.failed_checks == 0
            && self.summary.fixtures_failed == 0
    }

    pub fn to_text(&self) -> String {
        let mark = |b: bool| if b { "ok" } else { "FAIL" };
        let mut out = String::new();
        out.push_str(&format!(
            "{:<14} {:<26} {:>5} {:>3} {:>2}  {:<5} {:<4} {:<10} {:<6} {:<6} {:<6} {:<6} {:<7}\n",
            "group",
            "action",
            "|G|",
            "|A|",
            "p",
            "hyp",
            "case",
            "consistent",
            "replay",
            "2prime",
            "solv",
            "nonpn",
            "schmidt"
        ));
        for t in &self.triples {
            out.push_str(&format!(
                "{:<14} {:<26} {:>5} {:>3} {:>2}  {:<5} {:<4} {:<10} {:<6} {:<6} {:<6} {:<6} {:<7}\n",
                t.group,
                t.action,
                t.order,
                t.action_order,
                t.prime,
                t.hypothesis,
                t.case.map_or("-".to_string(), |c| c.to_string()),
                mark(t.consistent),
                mark(t.replay_ok),
                mark(t.two_prime_conclusion),
                mark(t.solubility),
                mark(t.non_p_nilpotent),
                t.schmidt.map_or("-", mark),
            ));
        }
        for f in &self.fixtures {
            out.push_str(&format!(
                "fixture {:<40} {:<4} {}\n",
                f.name,
                mark(f.passed),
                f.detail
            ));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{} triples over {} groups: {} consistent, {} inconsistent, {} with failed checks; hypothesis holds on {}; cases {:?}\n",
            s.triples, s.groups, s.consistent, s.inconsistent, s.failed_checks, s.hypothesis_holds, s.by_case
        ));
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed {:.1} s\n", ms / 1000.0));
        }
        for d in &self.discrepancies {
            out.push('\n');
            out.push_str(&d.to_text());
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub max_order: usize,
    pub primes: PrimeSelector,
    pub timings: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            max_order: 192,
            primes: PrimeSelector::All,
            timings: false,
        }
    }
}

fn run_entry(e: &CorpusEntry, opts: &CensusOptions) -> Result<Vec<CheckReport>> {
    let start = Instant::now();
    let inst = Instance::new(e.action()?)?;
    let lattice_ms = start.elapsed().as_secs_f64() * 1e3;
    let schmidt = schmidt_info(&inst)?;
    let mut out = Vec::new();
    let primes: Vec<u64> = inst.factorization().primes().collect();
    for p in primes {
        if !opts.primes.selects(p) {
            continue;
        }
        let t = Instant::now();
        let mut r = CheckReport::build(&inst, &e.name, &e.action_name, p, schmidt.clone())?;
        if opts.timings {
            r.timings = Some(Timings {
                lattice_ms,
                analysis_ms: t.elapsed().as_secs_f64() * 1e3,
            });
        }
        out.push(r);
    }
    Ok(out)
}

/// Full reports for every selected triple, in corpus order.
pub fn census_reports(opts: &CensusOptions) -> Result<Vec<CheckReport>> {
    let entries: Vec<CorpusEntry> = corpus()
        .into_iter()
        .filter(|e| e.order() <= opts.max_order)
        .collect();
    let per_entry: Vec<Result<Vec<CheckReport>>> =
        entries.par_iter().map(|e| run_entry(e, opts)).collect();
    let mut reports = Vec::new();
    for r in per_entry {
        reports.extend(r?);
    }
    Ok(reports)
}

pub fn run_census(opts: &CensusOptions) -> Result<CensusReport> {
    let start = Instant::now();
    let reports = census_reports(opts)?;
    let fixtures: Vec<FixtureInfo> = if opts.max_order == 0 {
        Vec::new()
    } else {
        check_reference_fixtures()?
            .iter()
            .map(FixtureInfo::from)
            .collect()
    };
    let triples: Vec<TripleSummary> = reports.iter().map(TripleSummary::new).collect();
    let mut groups: Vec<(&str, &str)> = triples
        .iter()
        .map(|t| (t.group.as_str(), t.action.as_str()))
        .collect();
    groups.dedup();
    let mut by_case = [0usize; 5];
    for t in &triples {
        by_case[t.case.map_or(4, |c| usize::from(c) - 1)] += 1;
    }
    let consistent = triples.iter().filter(|t| t.consistent).count();
    let summary = CensusSummary {
        groups: groups.len(),
        triples: triples.len(),
        consistent,
        inconsistent: triples.len() - consistent,
        failed_checks: triples.iter().filter(|t| !t.passed()).count(),
        hypothesis_holds: triples.iter().filter(|t| t.hypothesis).count(),
        by_case,
        fixtures_passed: fixtures.iter().filter(|f| f.passed).count(),
        fixtures_failed: fixtures.iter().filter(|f| !f.passed).count(),
    };
    let discrepancies = reports.into_iter().filter(|r| !r.all_passed()).collect();
    Ok(CensusReport {
        schema: SCHEMA_VERSION,
        max_order: opts.max_order,
        primes: opts.primes.label(),
        triples,
        fixtures,
        summary,
        discrepancies,
        elapsed_ms: opts.timings.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

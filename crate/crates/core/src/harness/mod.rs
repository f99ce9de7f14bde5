//! Suite registry, configuration, randomized case execution and reports.
//!
//! Each suite expands into a deterministic list of cases. A case draws its
//! parameters from a generator keyed by `(seed, case_id)`, so results do not
//! depend on execution order and cases run in parallel.

pub mod draw;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monodromy::{AuxOrder, OddSign};
use crate::scalar::Coupling;
use crate::Rat;

pub use draw::{case_rng, draw_groups, draw_parameters};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Scalars,
    Dwpf,
    Lemmas,
    Rtt,
    McrRows,
    McrColumns,
    Xy,
    Bethe,
    DualBethe,
    All,
}

impl Suite {
    /// Every suite except `all`, in execution order.
    pub const CONCRETE: [Suite; 9] = [
        Suite::Scalars,
        Suite::Dwpf,
        Suite::Lemmas,
        Suite::Rtt,
        Suite::McrRows,
        Suite::McrColumns,
        Suite::Xy,
        Suite::Bethe,
        Suite::DualBethe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Scalars => "scalars",
            Suite::Dwpf => "dwpf",
            Suite::Lemmas => "lemmas",
            Suite::Rtt => "rtt",
            Suite::McrRows => "mcr-rows",
            Suite::McrColumns => "mcr-columns",
            Suite::Xy => "xy",
            Suite::Bethe => "bethe",
            Suite::DualBethe => "dual-bethe",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite '{s}'")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Config(format!("unknown format '{s}'"))),
        }
    }
}

/// Parses `p/q` or `p` into a rational.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let bad = || Error::Config(format!("'{s}' is not a rational p/q"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p = p.parse().map_err(|_| bad())?;
    let q: num_bigint::BigInt = q.parse().map_err(|_| bad())?;
    if q == 0.into() {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Largest chain length; chain-based suites run every `L` in `1..=sites`.
    pub sites: usize,
    pub c: Rat,
    pub seed: u64,
    /// Bound on the summed sizes of the variable sets of a case.
    pub max_set_size: usize,
    /// Independent parameter draws per configuration.
    pub draws: usize,
    pub format: Format,
    /// Record wall-clock time per case. Off by default to keep reports reproducible.
    pub timing: bool,
    pub sign: OddSign,
    pub order: AuxOrder,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            sites: 2,
            c: Rat::from_integer(1.into()),
            seed: 0,
            max_set_size: 4,
            draws: 5,
            format: Format::Text,
            timing: false,
            sign: OddSign::Koszul,
            order: AuxOrder::Descending,
        }
    }
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            ..SuiteConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sites == 0 {
            return Err(Error::Config("sites must be at least 1".into()));
        }
        if self.draws == 0 {
            return Err(Error::Config("draws must be at least 1".into()));
        }
        Coupling::new(self.c.clone()).map_err(|e| Error::Config(e.to_string()))?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

/// One executed case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseRecord {
    pub suite: String,
    pub case_id: String,
    pub equation_ref: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suite: Suite,
    pub cases: Vec<CaseRecord>,
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.cases.iter().filter(|r| r.status == status).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    /// `0` when nothing failed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|r| r.status == Status::Fail)
    }

    /// Flat JSON array, one object per case.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.cases).expect("records serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.cases {
            s.push_str(&format!(
                "{} {} [{}] {}",
                r.status.label(),
                r.case_id,
                r.equation_ref,
                r.detail
            ));
            if let Some(ms) = r.elapsed_ms {
                s.push_str(&format!(" ({ms} ms)"));
            }
            s.push('\n');
        }
        s.push_str(&format!(
            "{}: {} cases, {} passed, {} failed, {} skipped\n",
            self.suite,
            self.cases.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        ));
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

/// Case identifiers of the configured suite, sorted.
pub fn case_ids(cfg: &SuiteConfig) -> Result<Vec<String>> {
    cfg.validate()?;
    let mut ids: Vec<String> = suites::plan(cfg, cfg.suite)
        .into_iter()
        .map(|s| s.case_id)
        .collect();
    ids.sort();
    Ok(ids)
}

/// Executes every case of the configured suite in parallel and returns the
/// records ordered by case id.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let mut specs = suites::plan(cfg, cfg.suite);
    specs.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    let cases: Vec<CaseRecord> = specs
        .par_iter()
        .map(|spec| suites::execute(cfg, spec))
        .collect();
    Ok(Report {
        suite: cfg.suite,
        cases,
    })
}

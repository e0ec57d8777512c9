//! Relation suites and dimension reports.
//!
//! A suite builds the representation for one type, either symbolically over
//! `Z_0` or through the classical character at rational points, and checks
//! identities as exact matrix equalities.

mod a2;
mod dims;
mod relations;

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use a2::{a2_dimension_check, image_rank, A2_MONOMIALS};
pub use dims::{d_conjecture, dims_report, double_factorial_odd, matchings, DimsReport, Layer, Status, Total};

use crate::error::{Error, Result};
use crate::lkrep::{build_z0_cached, CharacterCoeffs, LkModel, SpecPoint};
use crate::rootsys::{DynkinType, Family, RootSystem};
use crate::scalar::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Braid,
    Essential,
    Eiproj,
    Table1,
    Zaction,
    TauMonoid,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Braid, Suite::Essential, Suite::Eiproj, Suite::Table1, Suite::Zaction, Suite::TauMonoid, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Braid => "braid",
            Suite::Essential => "essential",
            Suite::Eiproj => "eiproj",
            Suite::Table1 => "table1",
            Suite::Zaction => "zaction",
            Suite::TauMonoid => "tau_monoid",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse {
            position: 0,
            token: s.to_string(),
            reason: "expected braid, essential, eiproj, table1, zaction, tau_monoid or all".into(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Exact computation over `Z_0` with symbolic `l` and `m`.
    Generic,
    /// The classical character at each of the given points.
    Specialized(Vec<SpecPoint>),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Generic => f.write_str("generic"),
            Mode::Specialized(ps) => {
                let v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(f, "specialized({})", v.join("; "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    /// Number of individual equalities the check covers.
    pub instances: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> CheckResult {
        CheckResult { name: name.into(), status: CheckStatus::Pass, instances: 1, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: String) -> CheckResult {
        CheckResult { name: name.into(), status: CheckStatus::Fail, instances: 1, witness: Some(witness) }
    }

    pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> CheckResult {
        match witness {
            None => CheckResult::pass(name),
            Some(w) => CheckResult::fail(name, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub mode: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    /// Not serialized, so that reports stay byte-for-byte reproducible.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, ty: impl Into<String>, mode: impl Into<String>, checks: Vec<CheckResult>) -> Self {
        let passed = checks.iter().all(CheckResult::passed);
        SuiteReport { suite: suite.into(), ty: ty.into(), mode: mode.into(), passed, checks, wall_time: Duration::ZERO }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Whether symbolic suites are offered for a type.
pub fn generic_supported(ty: DynkinType) -> bool {
    matches!((ty.family, ty.rank), (Family::A, 1..=5) | (Family::D, 4 | 5))
}

/// `l = 5/7, r = 3/2` followed by two points from a fixed seed.
pub fn default_points() -> Vec<SpecPoint> {
    let mut out = vec![SpecPoint::new(Q::new(5, 7), Q::new(3, 2)).expect("valid point")];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b3a7);
    while out.len() < 3 {
        let l = Q::new(rng.gen_range(1..=40), rng.gen_range(1..=40));
        let r = Q::new(rng.gen_range(1..=40), rng.gen_range(1..=40));
        if let Ok(p) = SpecPoint::new(l, r) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Runs one suite. Generic mode is offered for `A_1..A_5`, `D_4` and `D_5`;
/// other types are rejected rather than skipped.
pub fn run_suite(suite: Suite, ty: DynkinType, mode: &Mode) -> Result<SuiteReport> {
    run_suite_cached(suite, ty, mode, None)
}

/// As [`run_suite`], reusing symbolic coefficient tables kept in `cache`.
pub fn run_suite_cached(suite: Suite, ty: DynkinType, mode: &Mode, cache: Option<&Path>) -> Result<SuiteReport> {
    let start = Instant::now();
    let rs = Arc::new(RootSystem::build(ty));
    let checks = match mode {
        Mode::Generic => {
            if !generic_supported(ty) {
                return Err(Error::Unsupported(format!(
                    "generic suites are limited to A1..A5, D4 and D5; use a specialization for {ty}"
                )));
            }
            let lk = build_z0_cached(rs, cache)?;
            relations::run_checks(&lk, suite, Some(lk.algebra()))
        }
        Mode::Specialized(points) => {
            if points.is_empty() {
                return Err(Error::Evaluation("no specialization point given".into()));
            }
            let mut all = Vec::new();
            for p in points {
                let lk = LkModel::build(CharacterCoeffs::<Q>::classical(rs.clone(), p)?)?;
                let prefix = if points.len() > 1 { format!("[{p}] ") } else { String::new() };
                all.extend(relations::run_checks(&lk, suite, None).into_iter().map(|mut c| {
                    c.name = format!("{prefix}{}", c.name);
                    c
                }));
            }
            all
        }
    };
    let mut report = SuiteReport::new(suite.name(), ty.to_string(), mode.to_string(), checks);
    report.wall_time = start.elapsed();
    Ok(report)
}

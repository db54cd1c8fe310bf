//! Verification suites: each builds both sides of an identity exactly,
//! compares them, and reports the first differing coefficient.

mod expr;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permstat::{euler_mahonian_with, EnumOptions, DEFAULT_ENUMERATION_CAP};
use crate::polyring::{CoeffMismatch, TriPoly};

pub use expr::Expr;
pub use suites::{build_sides, checks_for, Check, Sides};

macro_rules! suite_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Identity suites, in report order.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum SuiteId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl SuiteId {
            pub const ALL: &'static [SuiteId] = &[$(SuiteId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(SuiteId::$variant => $name,)*
                }
            }
        }

        impl FromStr for SuiteId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(SuiteId::$variant),)*
                    _ => Err(Error::UnknownSuite(s.to_string())),
                }
            }
        }
    };
}

suite_ids! {
    Main => "main",
    Carlitz => "carlitz",
    Util => "util",
    CaseI0 => "case_i0",
    CaseI1 => "case_i1",
    CaseI2 => "case_i2",
    CaseImag => "case_I",
    MissingOdd => "missing_odd",
    DfEven => "df_even",
    DfOdd => "df_odd",
    GesselSimion => "gessel_simion",
    Wachs => "wachs",
    AdinGr => "adin_gr",
    Q1Triple => "q1_triple",
    M4Eulerian => "m4_eulerian",
    M4Mahonian => "m4_mahonian",
    QLucas => "qlucas",
    LemmaAgr => "lemma_agr",
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a comma-separated suite list; `all` selects every suite.
pub fn parse_suites(spec: &str) -> Result<Vec<SuiteId>> {
    let mut out = Vec::new();
    for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend_from_slice(SuiteId::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: SuiteId,
    pub params: Params,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub first_mismatch: Option<CoeffMismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `key=value` pairs joined by spaces.
    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// Compares two sides and packages the outcome.
pub fn compare(check: &Check, sides: &Sides) -> Result<VerificationReport> {
    let first_mismatch = sides.lhs.first_mismatch(&sides.rhs)?;
    Ok(VerificationReport {
        suite: check.suite,
        params: check.params.clone(),
        status: if first_mismatch.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        lhs: sides.lhs.render(),
        rhs: sides.rhs.render(),
        first_mismatch,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixConfig {
    /// Largest `n` whose `A_n` is enumerated.
    pub n_max: usize,
    pub m_set: Vec<u32>,
    /// Series are compared through `t^trunc`.
    pub trunc: usize,
    /// Largest `ℓ` for the coefficient-extraction suite.
    pub ell_max: usize,
    pub jobs: usize,
    pub allow_n10: bool,
}

impl Default for MatrixConfig {
    fn default() -> Self {
        MatrixConfig {
            n_max: 8,
            m_set: vec![1, 2, 3, 4, 5, 6],
            trunc: 12,
            ell_max: 4,
            jobs: 1,
            allow_n10: false,
        }
    }
}

/// Shared `A_n(t,q,p)` cache for one run.
pub struct Context {
    cap: usize,
    cache: Mutex<BTreeMap<usize, Arc<TriPoly>>>,
}

impl Context {
    pub fn new(allow_n10: bool) -> Self {
        Context {
            cap: if allow_n10 {
                DEFAULT_ENUMERATION_CAP + 1
            } else {
                DEFAULT_ENUMERATION_CAP
            },
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn euler_mahonian(&self, n: usize) -> Result<Arc<TriPoly>> {
        let mut cache = self.cache.lock().expect("cache lock poisoned");
        if let Some(a) = cache.get(&n) {
            return Ok(a.clone());
        }
        let a = Arc::new(euler_mahonian_with(
            n,
            &EnumOptions {
                cap: self.cap,
                jobs: 1,
            },
        )?);
        cache.insert(n, a.clone());
        Ok(a)
    }
}

/// Runs every check of the selected suites; reports come back sorted by
/// suite then parameters, independent of `jobs`.
pub fn run_matrix(suites: &[SuiteId], config: &MatrixConfig) -> Result<Vec<VerificationReport>> {
    let checks = plan(suites, config)?;
    let ctx = Context::new(config.allow_n10);
    let run = |check: &Check| build_sides(check, &ctx).and_then(|sides| compare(check, &sides));
    let mut reports: Vec<VerificationReport> = if config.jobs <= 1 {
        checks.iter().map(run).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| checks.par_iter().map(run).collect::<Result<_>>())?
    };
    reports.sort_by(|a, b| (a.suite, &a.params).cmp(&(b.suite, &b.params)));
    Ok(reports)
}

/// The checks [`run_matrix`] would run, sorted.
pub fn plan(suites: &[SuiteId], config: &MatrixConfig) -> Result<Vec<Check>> {
    if config.m_set.contains(&0) {
        return Err(Error::Domain("m must be positive".into()));
    }
    let cap = if config.allow_n10 {
        DEFAULT_ENUMERATION_CAP + 1
    } else {
        DEFAULT_ENUMERATION_CAP
    };
    if config.n_max > cap {
        return Err(Error::EnumerationCap {
            n: config.n_max,
            cap,
        });
    }
    let mut checks: Vec<Check> = suites.iter().flat_map(|&s| checks_for(s, config)).collect();
    checks.sort_by(|a, b| (a.suite, &a.params).cmp(&(b.suite, &b.params)));
    checks.dedup();
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> MatrixConfig {
        MatrixConfig {
            n_max: 6,
            m_set: vec![1, 2, 3, 4],
            trunc: 8,
            ell_max: 3,
            jobs: 1,
            allow_n10: false,
        }
    }

    #[test]
    fn suite_names_round_trip() {
        assert_eq!(SuiteId::ALL.len(), 18);
        for &s in SuiteId::ALL {
            assert_eq!(s.name().parse::<SuiteId>().unwrap(), s);
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{s}\""));
        }
        assert_eq!("case_I".parse::<SuiteId>().unwrap(), SuiteId::CaseImag);
        assert_eq!(
            "nosuch".parse::<SuiteId>(),
            Err(Error::UnknownSuite("nosuch".into()))
        );
        assert_eq!(parse_suites("all").unwrap(), SuiteId::ALL.to_vec());
        assert_eq!(
            parse_suites("wachs,main,wachs").unwrap(),
            vec![SuiteId::Main, SuiteId::Wachs]
        );
    }

    #[test]
    fn empty_selection_gives_no_reports() {
        assert!(run_matrix(&[], &small()).unwrap().is_empty());
    }

    #[test]
    fn report_json_shape() {
        let r = run_matrix(&[SuiteId::Wachs], &small()).unwrap();
        assert_eq!(r.len(), 4);
        let json = r[1].to_json();
        assert!(json.starts_with(
            r#"{"suite":"wachs","params":{"k":1,"n":2},"status":"pass","lhs":"1 - t*q","#
        ));
        assert!(json.ends_with(r#""first_mismatch":null}"#));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn reports_independent_of_workers() {
        let suites = [SuiteId::Main, SuiteId::Util, SuiteId::QLucas];
        let one = run_matrix(&suites, &small()).unwrap();
        let four = run_matrix(&suites, &MatrixConfig { jobs: 4, ..small() }).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = MatrixConfig {
            n_max: 10,
            ..small()
        };
        assert_eq!(
            run_matrix(&[SuiteId::Carlitz], &cfg),
            Err(Error::EnumerationCap { n: 10, cap: 9 })
        );
    }
}

//! Family-sweep driver: enumerate every normalized set with `n <= n_max`
//! and `a_n <= a_max`, run the verification suite on each, and collect one
//! summary row per set plus the list of failed checks (expected empty).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::binomial_saturating;
use crate::limits::MAX_SWEEP_SETS;
use crate::sumset::{gcd, NormalForm, RawSet};
use crate::theorems::{verify_suite_with, CheckSelection, SuiteReport};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n_max: u64,
    pub a_max: u64,
    pub checks: CheckSelection,
    pub parallel: bool,
}

impl SweepConfig {
    pub fn new(n_max: u64, a_max: u64) -> Self {
        SweepConfig {
            n_max,
            a_max,
            checks: CheckSelection::all(),
            parallel: true,
        }
    }
}

/// One CSV row of sweep output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u64,
    pub set: Vec<u64>,
    pub a_n: u64,
    pub delta1: u64,
    pub delta2: u64,
    pub hp_const: i64,
    pub r: u64,
    pub rho: u64,
    pub sigma: u64,
    pub num_generators: u64,
    pub cm: bool,
    pub bermejo_bound: Option<u64>,
    pub lev_ok: bool,
    pub rigidity_ok: bool,
}

pub const CSV_HEADER: &str =
    "n,a_list,a_n,delta1,delta2,hp_const,r,rho,sigma,num_generators,cm,bermejo_bound,lev_ok,rigidity_ok";

impl SweepRow {
    fn from_suite(s: &SuiteReport) -> Self {
        let check_ok = |id: &str| s.reports.iter().filter(|r| r.id == id).all(|r| r.holds);
        SweepRow {
            n: s.set.len() as u64,
            set: s.set.clone(),
            a_n: *s.set.last().expect("n >= 2"),
            delta1: s.singularities.delta1,
            delta2: s.singularities.delta2,
            hp_const: s.hilbert.hp_const,
            r: s.hilbert.r,
            rho: s.hilbert.rho,
            sigma: s.stabilization.sigma_empirical,
            num_generators: s.generators.generators.len() as u64,
            cm: s.cm,
            bermejo_bound: s.bermejo_bound,
            lev_ok: check_ok("lev-bound"),
            rigidity_ok: check_ok("rigidity"),
        }
    }

    pub fn to_csv(&self) -> String {
        let a_list: Vec<String> = self.set.iter().map(|x| x.to_string()).collect();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            a_list.join(";"),
            self.a_n,
            self.delta1,
            self.delta2,
            self.hp_const,
            self.r,
            self.rho,
            self.sigma,
            self.num_generators,
            self.cm,
            self.bermejo_bound
                .map(|b| b.to_string())
                .unwrap_or_else(|| "NA".to_string()),
            self.lev_ok,
            self.rigidity_ok
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepFailure {
    pub set: Vec<u64>,
    pub check: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub rows: Vec<SweepRow>,
    pub failures: Vec<SweepFailure>,
}

/// All normalized sets with `2 <= n <= n_max` elements, `0` included,
/// `a_n <= a_max`, and gcd of the nonzero elements 1. Ordered by `a_n`,
/// then by size, then lexicographically.
pub fn enumerate_sets(n_max: u64, a_max: u64) -> Result<Vec<Vec<u64>>> {
    if n_max < 2 || a_max < n_max - 1 {
        return Err(Error::BadSweepBounds { n_max, a_max });
    }
    let estimate = estimate_count(n_max, a_max);
    if estimate > MAX_SWEEP_SETS as u128 {
        return Err(Error::ResourceLimit {
            what: "sweep enumeration",
            required: estimate.min(u64::MAX as u128) as u64,
            budget: MAX_SWEEP_SETS,
        });
    }

    let mut sets = Vec::new();
    for last in 1..=a_max {
        for k in 0..=(n_max - 2).min(last - 1) {
            let mut middles = Vec::with_capacity(k as usize);
            choose_middles(1, last, k, &mut middles, &mut |mid| {
                let g = mid.iter().fold(last, |g, &x| gcd(g, x));
                if g == 1 {
                    let mut set = Vec::with_capacity(k as usize + 2);
                    set.push(0);
                    set.extend_from_slice(mid);
                    set.push(last);
                    sets.push(set);
                }
            });
        }
    }
    Ok(sets)
}

fn choose_middles(from: u64, last: u64, k: u64, acc: &mut Vec<u64>, emit: &mut impl FnMut(&[u64])) {
    if k == 0 {
        emit(acc);
        return;
    }
    for v in from..last {
        if last - v < k {
            break;
        }
        acc.push(v);
        choose_middles(v + 1, last, k - 1, acc, emit);
        acc.pop();
    }
}

/// Upper bound on the enumeration size (ignores the gcd filter).
fn estimate_count(n_max: u64, a_max: u64) -> u128 {
    let mut total: u128 = 0;
    for last in 1..=a_max {
        for k in 0..=(n_max - 2).min(last - 1) {
            total += binomial_saturating(last - 1, k);
        }
    }
    total
}

/// Run the verification suite over the whole family.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepOutcome> {
    let sets = enumerate_sets(cfg.n_max, cfg.a_max)?;
    let suite_of = |set: &Vec<u64>| -> Result<SuiteReport> {
        let a: NormalForm = RawSet::new(set.clone())?.normalize()?;
        verify_suite_with(&a, &cfg.checks)
    };
    let suites: Result<Vec<SuiteReport>> = if cfg.parallel {
        sets.par_iter().map(suite_of).collect()
    } else {
        sets.iter().map(suite_of).collect()
    };
    let suites = suites?;

    let mut rows = Vec::with_capacity(suites.len());
    let mut failures = Vec::new();
    for s in &suites {
        rows.push(SweepRow::from_suite(s));
        for f in s.failures() {
            failures.push(SweepFailure {
                set: s.set.clone(),
                check: f.id.clone(),
                witness: f.witness.clone().unwrap_or_default(),
            });
        }
    }
    Ok(SweepOutcome { rows, failures })
}

//! Executable checks of the commutator and automorphism identities, each
//! producing a [`CheckReport`].

pub mod balance;
pub mod center;
pub mod identities;
pub mod random;
pub mod report;
pub mod shift;

use rayon::prelude::*;

pub use balance::{check_delta_balance, check_epsilon_square};
pub use center::check_center_props;
pub use identities::{
    check_lk_congruence, check_lk_congruence_basis, check_multilinearity, check_word_symmetry, probe_glue_identity,
    symmetry_samples,
};
pub use report::{CheckReport, Failure, Verdict};
pub use shift::{check_shift_claim, check_shift_suite, ShiftSystem, ShiftVector};

use crate::arith::Limits;
use crate::error::{Error, Result};

/// Suite ids in reporting order.
pub const SUITE_IDS: [&str; 8] = [
    "multilinearity",
    "glue-probe",
    "shift-claim",
    "delta-balance",
    "epsilon-square",
    "center-props",
    "lk-congruence",
    "word-symmetry",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub limits: Limits,
    /// Keep wall-clock timings in the reports (breaks byte-identical output).
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            trials: 100,
            limits: Limits::default(),
            timings: false,
        }
    }
}

/// Expands `"all"` or validates a single suite id.
pub fn resolve_suites(id: &str) -> Result<Vec<&'static str>> {
    if id == "all" {
        return Ok(SUITE_IDS.to_vec());
    }
    SUITE_IDS
        .iter()
        .find(|s| **s == id)
        .map(|s| vec![*s])
        .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {id:?}; known: all, {}", SUITE_IDS.join(", "))))
}

fn run_grid<P, F>(params: Vec<P>, f: F) -> Result<Vec<CheckReport>>
where
    P: Send + Sync,
    F: Fn(&P) -> Result<CheckReport> + Send + Sync,
{
    params.par_iter().map(f).collect()
}

fn pairs<A: Copy, B: Copy>(xs: &[A], ys: &[B]) -> Vec<(A, B)> {
    xs.iter().flat_map(|&x| ys.iter().map(move |&y| (x, y))).collect()
}

/// Runs one suite with its fixed parameter grid.
pub fn run_suite(id: &str, cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let limits = cfg.limits;
    let (seed, trials) = (cfg.seed, cfg.trials);
    let mut reports = match resolve_suites(id)?.as_slice() {
        ["multilinearity"] => run_grid(pairs(&[2, 3, 4], &[1, 2, 3, 5]), |&(c, k)| {
            check_multilinearity(c, k, limits)
        })?,
        ["glue-probe"] => run_grid(pairs(&[2, 3, 4], &[1, 2, 3]), |&(c, k)| {
            probe_glue_identity(c, k, limits)
        })?,
        ["shift-claim"] => vec![check_shift_suite(trials, seed)],
        ["delta-balance"] => run_grid(pairs(&[3, 4], &[1, 2]), |&(c, m)| check_delta_balance(c, m, limits))?,
        ["epsilon-square"] => run_grid(pairs(&[3, 4], &[1, 2]), |&(c, m)| check_epsilon_square(c, m, limits))?,
        ["center-props"] => run_grid(vec![(2, 2), (3, 3)], |&(n, c)| {
            check_center_props(n, c, trials, seed, limits)
        })?,
        ["lk-congruence"] => run_grid(pairs(&[1, 2, 3, 4], &[1, 2, 3, 4, 5]), |&(c, k)| {
            check_lk_congruence_basis(c, k, limits)
        })?,
        ["word-symmetry"] => run_grid(vec![2, 3, 4], |&c| {
            check_word_symmetry(c, &symmetry_samples(c, limits)?, trials, seed, limits)
        })?,
        _ => unreachable!("resolve_suites returns a single known id"),
    };
    if !cfg.timings {
        for r in &mut reports {
            r.millis = None;
        }
    }
    Ok(reports)
}

/// Runs the suites named by `id` (or all of them), in id order.
pub fn run_suites(id: &str, cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let ids = resolve_suites(id)?;
    let nested = ids.par_iter().map(|s| run_suite(s, cfg)).collect::<Result<Vec<_>>>()?;
    Ok(nested.into_iter().flatten().collect())
}

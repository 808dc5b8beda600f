//! The shift map `rho` on `Z f + sum Z e_k` and the growth of `rho^n(f) - f`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use super::random::rng;
use super::report::{CheckReport, ReportBuilder};
use crate::error::{Error, Result};

/// Sparse vector `f_coeff * f + sum coeffs[k] * e_k`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShiftVector {
    pub f_coeff: BigInt,
    pub coeffs: BTreeMap<i64, BigInt>,
}

impl ShiftVector {
    pub fn f() -> Self {
        ShiftVector {
            f_coeff: BigInt::one(),
            coeffs: BTreeMap::new(),
        }
    }

    fn add_e(&mut self, k: i64, v: &BigInt) {
        let entry = self.coeffs.entry(k).or_default();
        *entry += v;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn nonzero_count(&self) -> usize {
        self.coeffs.len()
    }
}

/// `rho(e_k) = e_{k+1}`, `rho(f) = f + alpha e_0 + sum_j beta_j (e_j - e_{j+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSystem {
    alpha: BigInt,
    betas: Vec<BigInt>,
}

impl ShiftSystem {
    pub fn new(alpha: i64, betas: &[i64]) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::Precondition("alpha must be nonzero".into()));
        }
        Ok(ShiftSystem {
            alpha: alpha.into(),
            betas: betas.iter().map(|&b| b.into()).collect(),
        })
    }

    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    pub fn betas(&self) -> &[BigInt] {
        &self.betas
    }

    pub fn apply(&self, v: &ShiftVector) -> ShiftVector {
        let mut out = ShiftVector {
            f_coeff: v.f_coeff.clone(),
            coeffs: BTreeMap::new(),
        };
        for (k, c) in &v.coeffs {
            out.add_e(k + 1, c);
        }
        if !v.f_coeff.is_zero() {
            out.add_e(0, &(&self.alpha * &v.f_coeff));
            for (j, b) in self.betas.iter().enumerate() {
                let t = b * &v.f_coeff;
                out.add_e(j as i64, &t);
                out.add_e(j as i64 + 1, &-t);
            }
        }
        out
    }

    /// `rho^n(f) - f` by repeated application.
    pub fn iterate_difference(&self, n: usize) -> ShiftVector {
        let mut v = ShiftVector::f();
        for _ in 0..n {
            v = self.apply(&v);
        }
        v.f_coeff -= BigInt::one();
        v
    }

    /// `alpha (e_0 + ... + e_{n-1}) + sum_j beta_j (e_j - e_{j+n})`.
    pub fn closed_form(&self, n: usize) -> ShiftVector {
        let mut v = ShiftVector::default();
        for i in 0..n as i64 {
            v.add_e(i, &self.alpha);
        }
        for (j, b) in self.betas.iter().enumerate() {
            v.add_e(j as i64, b);
            v.add_e((j + n) as i64, &-b);
        }
        v
    }
}

/// `rho^n(f) - f` agrees with the closed form and has at least `n` nonzero
/// coordinates.
pub fn check_shift_claim(sys: &ShiftSystem, n: usize) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let mut report = ReportBuilder::new("shift-claim").param("n", n);
    shift_case(sys, n, &mut report);
    Ok(report.finish())
}

fn shift_case(sys: &ShiftSystem, n: usize, report: &mut ReportBuilder) {
    let iterated = sys.iterate_difference(n);
    let closed = sys.closed_form(n);
    let label = || {
        format!(
            "alpha={} betas={:?} n={n}",
            sys.alpha,
            sys.betas.iter().map(|b| b.to_string()).collect::<Vec<_>>()
        )
    };
    report.check(iterated == closed, || {
        (
            label(),
            format!("iterated {:?} but closed form {:?}", iterated.coeffs, closed.coeffs),
        )
    });
    report.check(iterated.nonzero_count() >= n, || {
        (
            label(),
            format!("only {} nonzero coordinates", iterated.nonzero_count()),
        )
    });
}

/// `systems` random systems with `|alpha|, |beta_j| <= 5`, `r <= 6`, each
/// checked for `n = 1..=12`, plus the boundary system `alpha = 1, beta = [-1]`.
pub fn check_shift_suite(systems: usize, seed: u64) -> CheckReport {
    let mut rng = rng(seed);
    let mut report = ReportBuilder::new("shift-claim").param("systems", systems).seed(seed);
    let boundary = ShiftSystem::new(1, &[-1]).expect("alpha nonzero");
    let g2 = boundary.iterate_difference(2);
    report.check(g2.nonzero_count() == 2, || {
        (
            "alpha=1 betas=[-1] n=2".into(),
            format!("expected exactly 2 nonzero, got {:?}", g2.coeffs),
        )
    });
    shift_case(&boundary, 2, &mut report);
    for _ in 0..systems {
        let mut alpha = 0;
        while alpha == 0 {
            alpha = rng.gen_range(-5..=5);
        }
        let r = rng.gen_range(0..=6);
        let betas: Vec<i64> = (0..=r).map(|_| rng.gen_range(-5..=5)).collect();
        let sys = ShiftSystem::new(alpha, &betas).expect("alpha nonzero");
        for n in 1..=12 {
            shift_case(&sys, n, &mut report);
        }
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(v: &ShiftVector) -> Vec<(i64, i64)> {
        v.coeffs.iter().map(|(k, c)| (*k, i64::try_from(c).unwrap())).collect()
    }

    #[test]
    fn worked_examples() {
        let sys = ShiftSystem::new(1, &[]).unwrap();
        assert_eq!(entries(&sys.iterate_difference(3)), vec![(0, 1), (1, 1), (2, 1)]);
        let sys = ShiftSystem::new(1, &[-1]).unwrap();
        assert_eq!(entries(&sys.iterate_difference(2)), vec![(1, 1), (2, 1)]);
        assert!(check_shift_claim(&sys, 2).unwrap().passed());
        let sys = ShiftSystem::new(-3, &[2, 5, -1]).unwrap();
        assert!(sys.iterate_difference(1).nonzero_count() >= 1);
        assert!(matches!(ShiftSystem::new(0, &[1]), Err(Error::Precondition(_))));
    }

    #[test]
    fn suite_passes() {
        let r = check_shift_suite(50, 7);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.cases, 1 + 2 + 50 * 12 * 2);
    }
}

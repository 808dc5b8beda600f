//! Finite-rank instances of the automorphism identities built from
//! transvection-like maps `x -> x t` with `t` a commutator of generators.

use std::sync::Arc;

use super::report::{CheckReport, ReportBuilder};
use crate::arith::{commutator, GroupContext, Limits, NilpotentElement};
use crate::error::{Error, Result};
use crate::morphism::Endomorphism;

/// Generator indices (1-based) of the blocks `(x_{3k+1}, x_{3k+2}, x_{3k+3})`
/// and of the tail tuple `ybar`.
struct Layout {
    ctx: Arc<GroupContext>,
    blocks: Vec<(usize, usize, Option<usize>)>,
    ybar: Vec<usize>,
}

impl Layout {
    /// `m` full triples followed by `c - 2` tail generators.
    fn full(c: usize, m: usize, limits: Limits) -> Result<Self> {
        let blocks = (0..m).map(|k| (3 * k + 1, 3 * k + 2, Some(3 * k + 3))).collect();
        Self::build(c, blocks, 3 * m, limits)
    }

    /// Like `full`, but the last block has no third generator, so there is
    /// one more `x_{3k+1}` than `x_{3k+3}` beyond `x1`.
    fn truncated(c: usize, m: usize, limits: Limits) -> Result<Self> {
        if m == 0 {
            return Err(Error::Precondition("need m >= 1".into()));
        }
        let blocks = (0..m)
            .map(|k| (3 * k + 1, 3 * k + 2, (k + 1 < m).then_some(3 * k + 3)))
            .collect();
        Self::build(c, blocks, 3 * m - 1, limits)
    }

    fn build(c: usize, blocks: Vec<(usize, usize, Option<usize>)>, used: usize, limits: Limits) -> Result<Self> {
        if c < 3 || blocks.is_empty() {
            return Err(Error::Precondition(format!(
                "need c >= 3 and m >= 1, got c={c} m={}",
                blocks.len()
            )));
        }
        let ybar: Vec<usize> = (used + 1..=used + c - 2).collect();
        let ctx = GroupContext::with_limits(used + c - 2, c, limits)?;
        Ok(Layout { ctx, blocks, ybar })
    }

    fn x(&self, i: usize) -> NilpotentElement {
        self.ctx.basis_element(i - 1)
    }

    /// Left-normed commutator of the listed generators, with `None`
    /// standing for the whole tuple `ybar`.
    fn bracket(&self, parts: &[Option<usize>]) -> Result<NilpotentElement> {
        let mut args = Vec::new();
        for p in parts {
            match p {
                Some(i) => args.push(self.x(*i)),
                None => args.extend(self.ybar.iter().map(|&i| self.x(i))),
            }
        }
        commutator(&args)
    }

    /// `x_i -> x_i t_i` for the listed pairs, other generators fixed.
    fn map(&self, pairs: Vec<(usize, NilpotentElement)>) -> Result<Endomorphism> {
        let mut images: Vec<NilpotentElement> = (1..=self.ctx.rank()).map(|i| self.x(i)).collect();
        for (i, t) in pairs {
            images[i - 1] = images[i - 1].mul(&t)?;
        }
        Endomorphism::from_images(&self.ctx, images)
    }

    fn alpha(&self) -> Result<Endomorphism> {
        let pairs = self
            .blocks
            .iter()
            .map(|&(a, b, _)| Ok((a, self.bracket(&[Some(b), Some(1)])?)));
        self.map(pairs.collect::<Result<_>>()?)
    }

    fn beta(&self) -> Result<Endomorphism> {
        let pairs = self
            .blocks
            .iter()
            .map(|&(a, b, _)| Ok((b, self.bracket(&[Some(a), None])?)));
        self.map(pairs.collect::<Result<_>>()?)
    }

    fn xi1(&self) -> Result<Endomorphism> {
        let pairs = self
            .blocks
            .iter()
            .map(|&(a, _, _)| Ok((a, self.bracket(&[Some(a), None, Some(1)])?)));
        self.map(pairs.collect::<Result<_>>()?)
    }

    fn xi2(&self) -> Result<Endomorphism> {
        let pairs = self
            .blocks
            .iter()
            .map(|&(_, b, _)| Ok((b, self.bracket(&[Some(b), Some(1), None])?)));
        self.map(pairs.collect::<Result<_>>()?)
    }

    /// Expected `xi1 xi2^-1`: `x_{3k+1} -> x_{3k+1}[x_{3k+1},ybar,x1]`,
    /// `x_{3k+2} -> x_{3k+2}[x_{3k+2},x1,ybar]^-1`.
    fn gamma1_formula(&self) -> Result<Endomorphism> {
        let mut pairs = Vec::new();
        for &(a, b, _) in &self.blocks {
            pairs.push((a, self.bracket(&[Some(a), None, Some(1)])?));
            pairs.push((b, self.bracket(&[Some(b), Some(1), None])?.inv()));
        }
        self.map(pairs)
    }

    /// `x_{3k+2} -> x_{3k+2}[x_{3k+2},x1,ybar]`, `x_{3k+3} -> x_{3k+3}[x_{3k+3},ybar,x1]^-1`.
    fn gamma2(&self) -> Result<Endomorphism> {
        let mut pairs = Vec::new();
        for &(_, b, t) in &self.blocks {
            pairs.push((b, self.bracket(&[Some(b), Some(1), None])?));
            if let Some(t) = t {
                pairs.push((t, self.bracket(&[Some(t), None, Some(1)])?.inv()));
            }
        }
        self.map(pairs)
    }

    /// `x1 -> x1 [x1, ybar, x1]^e`.
    fn delta_power(&self, e: i64) -> Result<Endomorphism> {
        self.map(vec![(1, self.bracket(&[Some(1), None, Some(1)])?.pow_i64(e))])
    }

    /// Swaps `x_{3k+3}` with `x_{3k+4}` for every block that has a third generator.
    fn swap(&self) -> Result<Endomorphism> {
        let mut perm: Vec<usize> = (1..=self.ctx.rank()).collect();
        for &(_, _, t) in &self.blocks {
            if let Some(t) = t {
                perm.swap(t - 1, t);
            }
        }
        Endomorphism::permutation(&self.ctx, &perm)
    }
}

fn mismatch(label: &str, lhs: &Endomorphism, rhs: &Endomorphism) -> (String, String) {
    (label.to_string(), format!("left: {lhs}; right: {rhs}"))
}

/// `xi1 alpha beta = xi2 beta alpha`, and `gamma1 = xi1 xi2^-1` lies in `IA_{c-1}`
/// with the expected images.
pub fn check_delta_balance(c: usize, m: usize, limits: Limits) -> Result<CheckReport> {
    let lay = Layout::full(c, m, limits)?;
    let mut report = ReportBuilder::new("delta-balance")
        .param("c", c)
        .param("m", m)
        .param("rank", lay.ctx.rank());
    let (alpha, beta, xi1, xi2) = (lay.alpha()?, lay.beta()?, lay.xi1()?, lay.xi2()?);
    let lhs = xi1.compose(&alpha)?.compose(&beta)?;
    let rhs = xi2.compose(&beta)?.compose(&alpha)?;
    report.check(lhs == rhs, || mismatch("xi1 alpha beta = xi2 beta alpha", &lhs, &rhs));

    let gamma1 = xi1.compose(&xi2.invert()?)?;
    let level = gamma1.ia_level()?;
    report.check(level + 1 >= c, || {
        ("ia_level(gamma1)".into(), format!("{level} < {}", c - 1))
    });
    let formula = lay.gamma1_formula()?;
    report.check(gamma1 == formula, || mismatch("gamma1 images", &gamma1, &formula));
    let comm = beta
        .compose(&alpha)?
        .compose(&beta.invert()?)?
        .compose(&alpha.invert()?)?;
    report.check(gamma1 == comm, || {
        mismatch("gamma1 = beta alpha beta^-1 alpha^-1", &gamma1, &comm)
    });
    let fixes_tail = lay.ybar.iter().all(|&i| gamma1.image(i) == &lay.x(i));
    report.check(fixes_tail, || ("gamma1 fixes ybar".into(), gamma1.to_string()));
    Ok(report.finish())
}

/// `epsilon epsilon^pi = (x1 -> x1 [x1,ybar,x1]^2)` with `epsilon = gamma1 gamma2`
/// and `pi` swapping the plus and minus generator classes.
pub fn check_epsilon_square(c: usize, m: usize, limits: Limits) -> Result<CheckReport> {
    let lay = Layout::truncated(c, m, limits)?;
    let mut report = ReportBuilder::new("epsilon-square")
        .param("c", c)
        .param("m", m)
        .param("rank", lay.ctx.rank());
    let gamma1 = lay.xi1()?.compose(&lay.xi2()?.invert()?)?;
    let formula = lay.gamma1_formula()?;
    report.check(gamma1 == formula, || mismatch("gamma1 images", &gamma1, &formula));
    let eps = gamma1.compose(&lay.gamma2()?)?;
    let pi = lay.swap()?;
    let lhs = eps.compose(&eps.conjugate_by(&pi)?)?;
    let delta = lay.delta_power(1)?;
    let target = lay.delta_power(2)?;
    let delta_sq = delta.compose(&delta)?;
    report.check(delta_sq == target, || mismatch("delta_c squared", &delta_sq, &target));
    report.check(lhs == target, || {
        mismatch("epsilon epsilon^pi = delta_c^2", &lhs, &target)
    });

    // With pi = id the product is epsilon^2, which matches only when m = 1.
    let control = eps.compose(&eps)?;
    let expect_equal = m == 1;
    let equal = control == target;
    report.check(equal == expect_equal, || {
        (
            "control pi = id".into(),
            format!("epsilon^2 = delta_c^2 is {equal}, expected {expect_equal}"),
        )
    });
    report.observe(format!(
        "control with pi = id: epsilon^2 {} delta_c^2",
        if equal { "equals" } else { "differs from" }
    ));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances_pass() {
        for (c, m) in [(3, 1), (3, 2), (4, 1)] {
            let r = check_delta_balance(c, m, Limits::default()).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            let r = check_epsilon_square(c, m, Limits::default()).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn rejects_low_class() {
        assert!(matches!(
            check_delta_balance(2, 1, Limits::default()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_epsilon_square(3, 0, Limits::default()),
            Err(Error::Precondition(_))
        ));
    }
}

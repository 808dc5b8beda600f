//! Substitution identities for two-generator commutators.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};
use rand::Rng;

use super::random::{random_element, rng};
use super::report::{CheckReport, ReportBuilder};
use crate::arith::{GroupContext, Limits};
use crate::error::{Error, Result};
use crate::hall::nu;
use crate::morphism::{evaluate_word, Endomorphism};
use crate::word::{GeneratorId, Letter, Word};

fn two_generator(c: usize, limits: Limits) -> Result<Arc<GroupContext>> {
    if c < 2 {
        return Err(Error::InvalidArgument(format!("class must be at least 2, got {c}")));
    }
    GroupContext::with_limits(2, c, limits)
}

/// `x1 -> x1^a, x2 -> x2^b`.
fn scaling(ctx: &Arc<GroupContext>, a: i64, b: i64) -> Result<Endomorphism> {
    Endomorphism::from_images(
        ctx,
        vec![ctx.basis_element(0).pow_i64(a), ctx.basis_element(1).pow_i64(b)],
    )
}

fn big_pow(k: i64, e: usize) -> BigInt {
    Pow::pow(BigInt::from(k), e)
}

/// Each weight-`c` basic commutator `b` over two generators scales by
/// `k^nu` under `x -> x^k`.
pub fn check_multilinearity(c: usize, k: i64, limits: Limits) -> Result<CheckReport> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("k must be positive, got {k}")));
    }
    let ctx = two_generator(c, limits)?;
    let mut report = ReportBuilder::new("multilinearity").param("c", c).param("k", k);
    let maps = [scaling(&ctx, k, 1)?, scaling(&ctx, 1, k)?, scaling(&ctx, k, k)?];
    for pos in ctx.basis().stratum(c) {
        let tree = ctx.basis().tree(pos);
        let b = ctx.basis_element(pos);
        let (nz, ny) = (nu(&tree, GeneratorId::new(1)), nu(&tree, GeneratorId::new(2)));
        for (label, f, e) in [
            ("b(x1^k,x2)", &maps[0], nz),
            ("b(x1,x2^k)", &maps[1], ny),
            ("b(x1^k,x2^k)", &maps[2], c),
        ] {
            let got = f.apply(&b)?;
            let want = b.power(&big_pow(k, e));
            report.check(got == want, || {
                (
                    format!("{label} with b={tree}"),
                    format!("got {got}, expected {b}^{}", big_pow(k, e)),
                )
            });
        }
    }
    Ok(report.finish())
}

/// Measures both sides of `b(z^k,y) b(z,y^k) = b^(k^c)` as powers of `b`.
///
/// The verdict asserts only that the measured exponents match the
/// prediction `k^nu_z + k^nu_y`; whether the two sides agree is recorded
/// as an observation.
pub fn probe_glue_identity(c: usize, k: i64, limits: Limits) -> Result<CheckReport> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("k must be positive, got {k}")));
    }
    let ctx = two_generator(c, limits)?;
    let mut report = ReportBuilder::new("glue-probe").param("c", c).param("k", k).advisory();
    let (fz, fy) = (scaling(&ctx, k, 1)?, scaling(&ctx, 1, k)?);
    let mut holds = Vec::new();
    let mut fails = Vec::new();
    for pos in ctx.basis().stratum(c) {
        let tree = ctx.basis().tree(pos);
        let b = ctx.basis_element(pos);
        let lhs = fz.apply(&b)?.mul(&fy.apply(&b)?)?;
        let rhs = b.power(&big_pow(k, c));
        let predicted = big_pow(k, nu(&tree, GeneratorId::new(1))) + big_pow(k, nu(&tree, GeneratorId::new(2)));
        let measured = lhs.coord(pos);
        let pure = lhs.coords().len() <= 1 && (lhs.coords().is_empty() || lhs.coords().contains_key(&pos));
        report.check(pure && measured == predicted, || {
            (format!("b={tree}"), format!("lhs {lhs} is not b^{predicted}"))
        });
        let rhs_exp = rhs.coord(pos);
        let verdict = if lhs == rhs { "equal" } else { "differ" };
        report.observe(format!(
            "b={tree}: lhs exponent {measured}, rhs exponent {rhs_exp}, {verdict}"
        ));
        if lhs == rhs {
            holds.push(tree.to_string());
        } else {
            fails.push(tree.to_string());
        }
    }
    report.observe(format!(
        "displayed equality holds for {} of {} commutators",
        holds.len(),
        holds.len() + fails.len()
    ));
    Ok(report.finish())
}

/// Substitution congruence modulo `L_k`: `w(x1 x2^k, x2) w(x1,x2)^-1` has
/// every coordinate divisible by `k`.
pub fn check_lk_congruence(c: usize, k: i64, w: &Word, limits: Limits) -> Result<CheckReport> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("k must be positive, got {k}")));
    }
    let ctx = GroupContext::with_limits(2, c, limits)?;
    let base = ctx.collect(w)?;
    if base.weight_filtration() != c {
        return Err(Error::Precondition(format!(
            "{w} does not collect into N_{c} minus N_{}",
            c + 1
        )));
    }
    let mut report = ReportBuilder::new("lk-congruence")
        .param("c", c)
        .param("k", k)
        .param("w", w.to_string());
    lk_case(&ctx, k, w, &base, &mut report)?;
    Ok(report.finish())
}

fn lk_case(
    ctx: &Arc<GroupContext>,
    k: i64,
    w: &Word,
    base: &crate::arith::NilpotentElement,
    report: &mut ReportBuilder,
) -> Result<()> {
    let f = Endomorphism::from_images(
        ctx,
        vec![
            ctx.basis_element(0).mul(&ctx.basis_element(1).pow_i64(k))?,
            ctx.basis_element(1),
        ],
    )?;
    let diff = f.apply(base)?.mul(&base.inv())?;
    let modulus = BigInt::from(k);
    report.check(diff.coords().values().all(|e| e.mod_floor(&modulus).is_zero()), || {
        (
            format!("w={w}"),
            format!("difference {diff} has a coordinate not divisible by {k}"),
        )
    });
    Ok(())
}

/// Every weight-`c` basic commutator word at one `k`, folded into one report.
pub fn check_lk_congruence_basis(c: usize, k: i64, limits: Limits) -> Result<CheckReport> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("k must be positive, got {k}")));
    }
    let ctx = GroupContext::with_limits(2, c, limits)?;
    let mut report = ReportBuilder::new("lk-congruence").param("c", c).param("k", k);
    for pos in ctx.basis().stratum(c) {
        let w = ctx.basis().tree(pos).to_word();
        lk_case(&ctx, k, &w, &ctx.basis_element(pos), &mut report)?;
    }
    Ok(report.finish())
}

fn swap_word(w: &Word) -> Word {
    Word::from_letters(w.letters().iter().map(|l| Letter::new(3 - l.gen.index(), l.exp))).expect("same exponents")
}

/// Sample weight-`c` words over two generators: basic commutators `u` and
/// the symmetrized products `u swap(u)`.
pub fn symmetry_samples(c: usize, limits: Limits) -> Result<Vec<Word>> {
    let ctx = two_generator(c, limits)?;
    let mut out = Vec::new();
    for tree in ctx.basis().trees(c) {
        let u = tree.to_word();
        let sym = u.concat(&swap_word(&u))?;
        out.push(u);
        out.push(sym);
    }
    Ok(out)
}

/// If `swap(w) = w` in `F(2,c)` then `w(a,b) = w(b,a)` for random `a, b`
/// in `F(3,c)`.
pub fn check_word_symmetry(c: usize, words: &[Word], trials: usize, seed: u64, limits: Limits) -> Result<CheckReport> {
    let ctx = two_generator(c, limits)?;
    let big = GroupContext::with_limits(3, c, limits)?;
    let swap = Endomorphism::permutation(&ctx, &[2, 1])?;
    let mut rng = rng(seed);
    let mut report = ReportBuilder::new("word-symmetry")
        .param("c", c)
        .param("trials", trials)
        .seed(seed);
    let mut symmetric = 0;
    for w in words {
        if w.max_generator() > 2 {
            return Err(Error::InvalidArgument(format!("{w} is not a word in x1, x2")));
        }
        let value = ctx.collect(w)?;
        if swap.apply(&value)? != value {
            continue;
        }
        symmetric += 1;
        for _ in 0..trials {
            let len = rng.gen_range(1..=6);
            let a = random_element(&big, &mut rng, len)?;
            let b = random_element(&big, &mut rng, len)?;
            let ab = evaluate_word(w, &[a.clone(), b.clone()])?;
            let ba = evaluate_word(w, &[b.clone(), a.clone()])?;
            report.check(ab == ba, || {
                (format!("w={w} a={a} b={b}"), format!("w(a,b)={ab} but w(b,a)={ba}"))
            });
        }
    }
    report.observe(format!(
        "{symmetric} of {} sample words are swap-symmetric",
        words.len()
    ));
    Ok(report.finish())
}

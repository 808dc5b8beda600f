//! Randomized checks of the centre of `F(n,c)` and of `IA`.

use rand::Rng;

use super::random::{random_element, random_ia, random_in_term, rng, DEFAULT_WORD_LEN};
use super::report::{CheckReport, ReportBuilder};
use crate::arith::{GroupContext, Limits};
use crate::error::{Error, Result};
use crate::morphism::Endomorphism;

pub fn check_center_props(n: usize, c: usize, trials: usize, seed: u64, limits: Limits) -> Result<CheckReport> {
    if n < 2 || c < 2 {
        return Err(Error::Precondition(format!("need n >= 2 and c >= 2, got n={n} c={c}")));
    }
    let ctx = GroupContext::with_limits(n, c, limits)?;
    let mut rng = rng(seed);
    let mut report = ReportBuilder::new("center-props")
        .param("n", n)
        .param("c", c)
        .param("trials", trials)
        .seed(seed);
    let mut witnesses = 0;
    for _ in 0..trials {
        let a = random_element(&ctx, &mut rng, DEFAULT_WORD_LEN)?;
        let b = random_element(&ctx, &mut rng, DEFAULT_WORD_LEN)?;

        // N_c is central and lies in the kernel of the inner map.
        let s = random_in_term(&ctx, &mut rng, c)?;
        let commutes = s.mul(&a)? == a.mul(&s)?;
        report.check(s.is_central() && commutes, || {
            (format!("s={s} a={a}"), "N_c element is not central".into())
        });
        let tau_s = Endomorphism::inner(&s);
        report.check(tau_s.is_identity(), || {
            (format!("s={s}"), format!("inner(s) = {tau_s}"))
        });

        // a -> inner(a) is a homomorphism whose kernel is the centre.
        let (ta, tb) = (Endomorphism::inner(&a), Endomorphism::inner(&b));
        let tab = Endomorphism::inner(&a.mul(&b)?);
        let composed = ta.compose(&tb)?;
        report.check(composed == tab, || {
            (format!("a={a} b={b}"), "inner(a) inner(b) != inner(ab)".into())
        });
        report.check(ta.is_identity() == a.is_central(), || {
            (
                format!("a={a}"),
                format!("inner(a) identity: {}, central: {}", ta.is_identity(), a.is_central()),
            )
        });

        // IA fixes N_c; IA_{c-1} fixes N_2 and commutes with IA.
        let phi = random_ia(&ctx, &mut rng, 1)?;
        let moved = phi.apply(&s)?;
        report.check(moved == s, || (format!("phi={phi} s={s}"), format!("phi(s) = {moved}")));
        let psi = random_ia(&ctx, &mut rng, c - 1)?;
        let u = random_in_term(&ctx, &mut rng, 2)?;
        let moved = psi.apply(&u)?;
        report.check(moved == u, || (format!("psi={psi} u={u}"), format!("psi(u) = {moved}")));
        let (pf, fp) = (psi.compose(&phi)?, phi.compose(&psi)?);
        report.check(pf == fp, || {
            (
                format!("psi={psi} phi={phi}"),
                "IA_{c-1} element does not commute".into(),
            )
        });

        // Below level c-1 some inner automorphism fails to commute, and
        // conjugating it yields the inner automorphism of the image.
        if c >= 3 {
            let k = rng.gen_range(1..=c - 2);
            let alpha = random_ia(&ctx, &mut rng, k)?;
            if alpha.ia_level()? + 1 >= c {
                continue;
            }
            let witness = (1..=n).find_map(|i| {
                let x = ctx.basis_element(i - 1);
                let tau = Endomorphism::inner(&x);
                let (at, ta) = (alpha.compose(&tau).ok()?, tau.compose(&alpha).ok()?);
                (at != ta).then_some((x, tau, at))
            });
            let found = witness.is_some();
            report.check(found, || {
                (
                    format!("alpha={alpha}"),
                    "every inner automorphism commutes with alpha".into(),
                )
            });
            if let Some((x, _tau, at)) = witness {
                witnesses += 1;
                let conj = at.compose(&alpha.invert()?)?;
                let expect = Endomorphism::inner(&alpha.apply(&x)?);
                report.check(conj == expect, || {
                    (
                        format!("alpha={alpha} a={x}"),
                        format!("alpha tau_a alpha^-1 = {conj}, tau_alpha(a) = {expect}"),
                    )
                });
            }
        }
    }
    report.observe(format!("{witnesses} non-centrality witnesses found"));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let r = check_center_props(2, 2, 10, 3, Limits::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let r = check_center_props(3, 3, 10, 3, Limits::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.observations[0] != "0 non-centrality witnesses found");
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let r = check_center_props(2, 2, 0, 0, Limits::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases, 0);
    }
}

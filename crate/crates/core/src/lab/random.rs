//! Seeded random sampling for the lab checks.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{commutator, GroupContext, NilpotentElement};
use crate::error::Result;
use crate::morphism::Endomorphism;
use crate::word::{Letter, Word};

pub const DEFAULT_WORD_LEN: usize = 12;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Letters with uniform generator and exponent in {±1, ±2}, freely reduced.
pub fn random_word<R: Rng>(rng: &mut R, rank: usize, len: usize) -> Word {
    let letters = (0..len).map(|_| {
        let g = rng.gen_range(1..=rank as u32);
        let e = [-2, -1, 1, 2][rng.gen_range(0..4)];
        Letter::new(g, e)
    });
    Word::from_letters(letters).expect("small exponents")
}

pub fn random_element<R: Rng>(ctx: &Arc<GroupContext>, rng: &mut R, len: usize) -> Result<NilpotentElement> {
    ctx.collect(&random_word(rng, ctx.rank(), len))
}

/// A random element of `N_k`: a product of one or two left-normed
/// commutators of `k` random elements.
pub fn random_in_term<R: Rng>(ctx: &Arc<GroupContext>, rng: &mut R, k: usize) -> Result<NilpotentElement> {
    let mut acc = ctx.identity();
    for _ in 0..rng.gen_range(1..=2) {
        let parts = (0..k.max(1))
            .map(|_| random_element(ctx, rng, 4))
            .collect::<Result<Vec<_>>>()?;
        acc = acc.mul(&commutator(&parts)?)?;
    }
    Ok(acc)
}

/// A random member of `IA_k`: `x_i -> x_i t_i` with `t_i` in `N_{k+1}`.
pub fn random_ia<R: Rng>(ctx: &Arc<GroupContext>, rng: &mut R, k: usize) -> Result<Endomorphism> {
    let images = (0..ctx.rank())
        .map(|p| ctx.basis_element(p).mul(&random_in_term(ctx, rng, k + 1)?))
        .collect::<Result<Vec<_>>>()?;
    Endomorphism::from_images(ctx, images)
}

/// A product of random Nielsen moves followed by a random IA automorphism.
pub fn random_automorphism<R: Rng>(ctx: &Arc<GroupContext>, rng: &mut R) -> Result<Endomorphism> {
    let n = ctx.rank();
    let mut f = Endomorphism::identity(ctx);
    for _ in 0..rng.gen_range(1..=4) {
        let i = rng.gen_range(1..=n);
        let xi = ctx.basis_element(i - 1);
        let image = match rng.gen_range(0..3) {
            0 if n > 1 => {
                let j = (i + rng.gen_range(1..n) - 1) % n + 1;
                let e = if rng.gen_bool(0.5) { 1 } else { -1 };
                xi.mul(&ctx.basis_element(j - 1).pow_i64(e))?
            }
            1 if n > 1 => {
                let j = (i + rng.gen_range(1..n) - 1) % n + 1;
                ctx.basis_element(j - 1).mul(&xi)?
            }
            _ => xi.inv(),
        };
        f = f.compose(&Endomorphism::elementary(ctx, i, image)?)?;
    }
    f.compose(&random_ia(ctx, rng, 1)?)
}

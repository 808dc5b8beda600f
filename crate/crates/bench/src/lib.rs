//! Seeded fixtures shared by the benchmarks.

use std::sync::Arc;

use nilpotra_core::lab::random::{random_automorphism, random_element, random_word, rng};
use nilpotra_core::{Endomorphism, GroupContext, NilpotentElement, Word};

pub fn words(rank: usize, len: usize, count: usize, seed: u64) -> Vec<Word> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_word(&mut rng, rank, len)).collect()
}

pub fn elements(ctx: &Arc<GroupContext>, count: usize, seed: u64) -> Vec<NilpotentElement> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random_element(ctx, &mut rng, 12).expect("collects"))
        .collect()
}

pub fn automorphisms(ctx: &Arc<GroupContext>, count: usize, seed: u64) -> Vec<Endomorphism> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random_automorphism(ctx, &mut rng).expect("builds"))
        .collect()
}

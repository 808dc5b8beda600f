//! Independent oracle: homomorphisms `F(n,c) -> UT(c+1, Z)` given by
//! sending generators to unitriangular integer matrices.
#![allow(dead_code)]

use nilpotra_core::{BigInt, CommutatorTree, NilpotentElement, Word};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniMat(Vec<Vec<BigInt>>);

impl UniMat {
    pub fn identity(size: usize) -> Self {
        UniMat(
            (0..size)
                .map(|i| {
                    (0..size)
                        .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn random<R: Rng>(rng: &mut R, size: usize) -> Self {
        let mut m = Self::identity(size);
        for i in 0..size {
            for j in i + 1..size {
                m.0[i][j] = BigInt::from(rng.gen_range(-3..=3));
            }
        }
        m
    }

    fn size(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        UniMat(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (i..=j).map(|k| &self.0[i][k] * &other.0[k][j]).sum())
                        .collect()
                })
                .collect(),
        )
    }

    /// Back substitution on the unit upper triangle.
    pub fn inv(&self) -> Self {
        let n = self.size();
        let mut r = Self::identity(n);
        for j in 0..n {
            for i in (0..j).rev() {
                let s: BigInt = (i + 1..=j).map(|k| &self.0[i][k] * &r.0[k][j]).sum();
                r.0[i][j] = -s;
            }
        }
        r
    }

    pub fn pow(&self, e: &BigInt) -> Self {
        let base = if e.is_negative() { self.inv() } else { self.clone() };
        let mut k = e.abs().to_u64().expect("exponent fits in u64");
        let mut acc = Self::identity(self.size());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            k >>= 1;
        }
        acc
    }

    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).mul(&a.inv()).mul(&b.inv())
    }
}

pub fn eval_word(w: &Word, gens: &[UniMat]) -> UniMat {
    let size = gens[0].size();
    w.letters().iter().fold(UniMat::identity(size), |acc, l| {
        acc.mul(&gens[l.gen.slot()].pow(&BigInt::from(l.exp)))
    })
}

pub fn eval_tree(t: &CommutatorTree, gens: &[UniMat]) -> UniMat {
    match t {
        CommutatorTree::Leaf(g) => gens[g.slot()].clone(),
        CommutatorTree::Node(l, r) => UniMat::commutator(&eval_tree(l, gens), &eval_tree(r, gens)),
    }
}

/// Image of a normal form: the ordered product of basis commutator powers.
pub fn eval_element(a: &NilpotentElement, gens: &[UniMat]) -> UniMat {
    let basis = a.context().basis();
    let size = gens[0].size();
    a.coords().iter().fold(UniMat::identity(size), |acc, (p, e)| {
        acc.mul(&eval_tree(&basis.tree(*p), gens).pow(e))
    })
}

pub fn random_gens<R: Rng>(rng: &mut R, rank: usize, class: usize) -> Vec<UniMat> {
    (0..rank).map(|_| UniMat::random(rng, class + 1)).collect()
}

#[test]
fn oracle_sanity() {
    let mut rng = nilpotra_core::lab::random::rng(5);
    let a = UniMat::random(&mut rng, 4);
    assert_eq!(a.mul(&a.inv()), UniMat::identity(4));
    assert_eq!(
        a.pow(&BigInt::from(-3)).mul(&a.pow(&BigInt::from(3))),
        UniMat::identity(4)
    );
}

//! Truncated non-commutative power series in `n` variables, degree `<= c`.
//!
//! `x_i -> 1 + X_i` embeds the free nilpotent group of class `c` into the
//! unit group of this ring, so group arithmetic reduces to series products.
//! Monomials of degree `m` are stored densely, indexed as base-`n` numbers
//! with the first letter most significant.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Refuse contexts whose series would carry more coefficients than this.
pub const MAX_SERIES_TERMS: usize = 1 << 24;

/// Nonzero terms of a series grouped by degree: `terms[d]` lists
/// `(monomial index, coefficient)` pairs of degree `d`.
pub(crate) type Terms<'a> = Vec<Vec<(u32, &'a BigInt)>>;

#[derive(Debug, Clone)]
pub(crate) struct Shape {
    pub c: usize,
    /// `offsets[d]` is the start of the degree-`d` block; `offsets[c + 1]` the total length.
    offsets: Vec<usize>,
    /// `powers[d] = n^d`.
    powers: Vec<usize>,
}

impl Shape {
    pub fn new(n: usize, c: usize) -> Result<Self> {
        let mut offsets = Vec::with_capacity(c + 2);
        let mut powers = Vec::with_capacity(c + 1);
        let mut total: usize = 0;
        let mut p: usize = 1;
        for d in 0..=c {
            offsets.push(total);
            powers.push(p);
            total = total
                .checked_add(p)
                .filter(|&t| t <= MAX_SERIES_TERMS)
                .ok_or(Error::ResourceCap {
                    what: "series coefficients",
                    needed: (n as u128).saturating_pow(c as u32),
                    limit: MAX_SERIES_TERMS as u128,
                })?;
            if d < c {
                p = p.saturating_mul(n);
            }
        }
        offsets.push(total);
        Ok(Shape { c, offsets, powers })
    }

    pub fn len(&self) -> usize {
        self.offsets[self.c + 1]
    }

    pub fn block(&self, d: usize) -> std::ops::Range<usize> {
        self.offsets[d]..self.offsets[d + 1]
    }

    pub fn one(&self) -> Vec<BigInt> {
        let mut s = vec![BigInt::zero(); self.len()];
        s[0] = BigInt::one();
        s
    }

    pub fn terms<'a>(&self, s: &'a [BigInt]) -> Terms<'a> {
        (0..=self.c)
            .map(|d| {
                s[self.block(d)]
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| (i as u32, v))
                    .collect()
            })
            .collect()
    }

    /// `out += scale * (a * b)`, truncated at degree `c`.
    pub fn mul_acc(&self, out: &mut [BigInt], a: &Terms<'_>, b: &Terms<'_>, scale: Option<&BigInt>) {
        for (da, ta) in a.iter().enumerate() {
            if ta.is_empty() {
                continue;
            }
            for (db, tb) in b.iter().enumerate().take(self.c + 1 - da) {
                if tb.is_empty() {
                    continue;
                }
                let base = self.offsets[da + db];
                let shift = self.powers[db];
                for &(ia, ca) in ta {
                    let scaled;
                    let ca = match scale {
                        Some(s) => {
                            scaled = ca * s;
                            &scaled
                        }
                        None => ca,
                    };
                    let row = base + ia as usize * shift;
                    for &(ib, cb) in tb {
                        out[row + ib as usize] += ca * cb;
                    }
                }
            }
        }
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.len()];
        self.mul_acc(&mut out, &self.terms(a), &self.terms(b), None);
        out
    }

    /// Inverse of a series with constant term 1.
    pub fn inverse_terms(&self, a: &Terms<'_>) -> Vec<BigInt> {
        debug_assert!(a[0].len() == 1 && a[0][0].1.is_one());
        let mut out = self.one();
        // (1 + T) R = 1  =>  R_d = -sum_{k=1..d} T_k R_{d-k}
        for d in 1..=self.c {
            let mut acc = vec![BigInt::zero(); self.powers[d]];
            for (k, tk) in a.iter().enumerate().take(d + 1).skip(1) {
                if tk.is_empty() {
                    continue;
                }
                let rd = d - k;
                let shift = self.powers[rd];
                let r_block = &out[self.block(rd)];
                for &(ia, ca) in tk {
                    let row = ia as usize * shift;
                    for (ib, cb) in r_block.iter().enumerate() {
                        if !cb.is_zero() {
                            acc[row + ib] -= ca * cb;
                        }
                    }
                }
            }
            let start = self.offsets[d];
            for (i, v) in acc.into_iter().enumerate() {
                out[start + i] = v;
            }
        }
        out
    }

    pub fn inverse(&self, a: &[BigInt]) -> Vec<BigInt> {
        self.inverse_terms(&self.terms(a))
    }

    /// `a^e` for a series with constant term 1 and any integer `e`.
    pub fn pow(&self, a: &[BigInt], e: &BigInt) -> Vec<BigInt> {
        if e.is_zero() {
            return self.one();
        }
        if e.is_one() {
            return a.to_vec();
        }
        if *e == -BigInt::one() {
            return self.inverse(a);
        }
        // (1 + T)^e = sum_j binom(e, j) T^j; T^j vanishes for j > c.
        let mut t = a.to_vec();
        t[0] = BigInt::zero();
        let mut out = self.one();
        let mut tj = t.clone();
        for j in 1..=self.c {
            let b = binomial(e, j);
            for (o, v) in out.iter_mut().zip(&tj) {
                if !v.is_zero() {
                    *o += &b * v;
                }
            }
            if j < self.c {
                tj = self.mul(&tj, &t);
                if tj.iter().all(Zero::is_zero) {
                    break;
                }
            }
        }
        out
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(&self, u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
        let uv = self.mul(u, v);
        let vu = self.mul(v, u);
        // u v u^-1 v^-1 = (uv)(vu)^-1
        let vu_inv = self.inverse(&vu);
        self.mul(&uv, &vu_inv)
    }

    #[cfg(test)]
    pub fn is_one(&self, a: &[BigInt]) -> bool {
        a[0].is_one() && a[1..].iter().all(Zero::is_zero)
    }
}

/// Generalised binomial coefficient `e (e-1) ... (e-j+1) / j!` for any integer `e`.
pub(crate) fn binomial(e: &BigInt, j: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= e - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    let q = &num / &den;
    debug_assert!((&q * &den - &num).abs().is_zero());
    q
}

/// Owned sparse series, grouped by degree.
#[derive(Debug, Clone, Default)]
pub(crate) struct Sparse {
    pub terms: Vec<Vec<(u32, BigInt)>>,
}

impl Sparse {
    pub fn from_dense(shape: &Shape, s: &[BigInt]) -> Self {
        Sparse {
            terms: (0..=shape.c)
                .map(|d| {
                    s[shape.block(d)]
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(i, v)| (i as u32, v.clone()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn view(&self) -> Terms<'_> {
        self.terms
            .iter()
            .map(|ts| ts.iter().map(|(i, v)| (*i, v)).collect())
            .collect()
    }

    pub fn to_dense(&self, shape: &Shape) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); shape.len()];
        for (d, ts) in self.terms.iter().enumerate() {
            let base = shape.block(d).start;
            for (i, v) in ts {
                out[base + *i as usize] = v.clone();
            }
        }
        out
    }
}

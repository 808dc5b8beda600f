//! Reads the exponents of one weight stratum off a homogeneous Lie element.
//!
//! Given the degree-`m` Lie polynomials `L_i` of the weight-`m` basic
//! commutators, solves `sum_i e_i L_i = P` over the integers. Most rows are
//! eliminated by peeling monomials that occur in a single remaining row with
//! a unit coefficient; whatever is left is solved exactly over the rationals.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
struct PeelStep {
    row: usize,
    mono: u32,
    /// +1 or -1.
    diag: BigInt,
    /// Earlier-peeled rows that also contain `mono`.
    earlier: Vec<(usize, BigInt)>,
}

#[derive(Debug, Clone, Default)]
struct Remainder {
    rows: Vec<usize>,
    pivots: Vec<u32>,
    /// Contributions of peeled rows to each pivot monomial.
    peeled_contrib: Vec<Vec<(usize, BigInt)>>,
    /// Inverse of the pivot submatrix, `inverse[r][q]`.
    inverse: Vec<Vec<BigRational>>,
}

#[derive(Debug, Clone)]
pub(crate) struct StratumSolver {
    len: usize,
    steps: Vec<PeelStep>,
    rest: Remainder,
}

impl StratumSolver {
    /// `rows[i]` is the Lie polynomial of the `i`-th basic commutator of the stratum.
    pub fn new(rows: &[Vec<(u32, BigInt)>]) -> Result<Self> {
        let mut cols: HashMap<u32, Vec<(usize, BigInt)>> = HashMap::new();
        for (r, row) in rows.iter().enumerate() {
            for (mono, v) in row {
                cols.entry(*mono).or_default().push((r, v.clone()));
            }
        }
        let mut live_count: HashMap<u32, usize> = cols.iter().map(|(m, rs)| (*m, rs.len())).collect();
        let mut alive = vec![true; rows.len()];
        let mut queue: Vec<u32> = {
            let mut q: Vec<u32> = live_count.iter().filter(|(_, &n)| n == 1).map(|(m, _)| *m).collect();
            q.sort_unstable();
            q
        };
        let mut steps = Vec::new();
        while let Some(mono) = queue.pop() {
            if live_count[&mono] != 1 {
                continue;
            }
            let (row, coeff) = cols[&mono]
                .iter()
                .find(|(r, _)| alive[*r])
                .map(|(r, v)| (*r, v.clone()))
                .expect("live row");
            if coeff.abs() != BigInt::one() {
                continue;
            }
            let earlier = cols[&mono].iter().filter(|(r, _)| *r != row).cloned().collect();
            steps.push(PeelStep {
                row,
                mono,
                diag: coeff,
                earlier,
            });
            alive[row] = false;
            for (m, _) in &rows[row] {
                let n = live_count.get_mut(m).expect("column");
                *n -= 1;
                if *n == 1 {
                    queue.push(*m);
                }
            }
        }

        let rest_rows: Vec<usize> = (0..rows.len()).filter(|&r| alive[r]).collect();
        let rest = if rest_rows.is_empty() {
            Remainder::default()
        } else {
            Remainder::build(rows, &rest_rows, &cols)?
        };
        Ok(StratumSolver {
            len: rows.len(),
            steps,
            rest,
        })
    }

    /// Solves for the exponents given the degree-`m` block `p` (dense, indexed by monomial).
    pub fn solve(&self, p: &[BigInt]) -> Result<Vec<BigInt>> {
        let mut e = vec![BigInt::zero(); self.len];
        for step in &self.steps {
            let mut v = p[step.mono as usize].clone();
            for (r, c) in &step.earlier {
                if !e[*r].is_zero() {
                    v -= &e[*r] * c;
                }
            }
            e[step.row] = v * &step.diag;
        }
        if !self.rest.rows.is_empty() {
            let rhs: Vec<BigInt> = self
                .rest
                .pivots
                .iter()
                .zip(&self.rest.peeled_contrib)
                .map(|(mono, contrib)| {
                    let mut v = p[*mono as usize].clone();
                    for (r, c) in contrib {
                        if !e[*r].is_zero() {
                            v -= &e[*r] * c;
                        }
                    }
                    v
                })
                .collect();
            for (i, &r) in self.rest.rows.iter().enumerate() {
                let mut acc = BigRational::zero();
                for (q, b) in rhs.iter().enumerate() {
                    if !b.is_zero() {
                        acc += &self.rest.inverse[i][q] * BigRational::from_integer(b.clone());
                    }
                }
                if !acc.is_integer() {
                    return Err(Error::Precondition(
                        "series component is not an integral Lie element".into(),
                    ));
                }
                e[r] = acc.to_integer();
            }
        }
        Ok(e)
    }
}

impl Remainder {
    fn build(
        rows: &[Vec<(u32, BigInt)>],
        rest_rows: &[usize],
        cols: &HashMap<u32, Vec<(usize, BigInt)>>,
    ) -> Result<Self> {
        let rest_set: HashSet<usize> = rest_rows.iter().copied().collect();
        let mut monos: Vec<u32> = rest_rows
            .iter()
            .flat_map(|&r| rows[r].iter().map(|(m, _)| *m))
            .collect();
        monos.sort_unstable();
        monos.dedup();
        let k = rest_rows.len();
        // matrix with one column per remaining row, one row per monomial
        let mono_pos: HashMap<u32, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut mat = vec![vec![BigRational::zero(); k]; monos.len()];
        for (j, &r) in rest_rows.iter().enumerate() {
            for (m, v) in &rows[r] {
                mat[mono_pos[m]][j] = BigRational::from_integer(v.clone());
            }
        }
        // Pick k independent monomial rows by elimination on a working copy.
        let mut work = mat.clone();
        let mut pivots = Vec::with_capacity(k);
        let mut used = vec![false; monos.len()];
        for col in 0..k {
            let Some(pr) = (0..monos.len()).find(|&i| !used[i] && !work[i][col].is_zero()) else {
                return Err(Error::Precondition("basic commutators are linearly dependent".into()));
            };
            used[pr] = true;
            pivots.push(pr);
            let prow = work[pr].clone();
            for (i, row) in work.iter_mut().enumerate() {
                if i != pr && !row[col].is_zero() {
                    let f = &row[col] / &prow[col];
                    for (w, p) in row[col..k].iter_mut().zip(&prow[col..k]) {
                        *w -= &f * p;
                    }
                }
            }
        }
        let square: Vec<Vec<BigRational>> = pivots.iter().map(|&i| mat[i].clone()).collect();
        let inverse = invert_rational(square)?;
        let pivots: Vec<u32> = pivots.iter().map(|&i| monos[i]).collect();
        let peeled_contrib = pivots
            .iter()
            .map(|m| cols[m].iter().filter(|(r, _)| !rest_set.contains(r)).cloned().collect())
            .collect();
        Ok(Remainder {
            rows: rest_rows.to_vec(),
            pivots,
            peeled_contrib,
            inverse,
        })
    }
}

/// Gauss-Jordan inverse of a square rational matrix.
pub(crate) fn invert_rational(mut a: Vec<Vec<BigRational>>) -> Result<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Err(Error::Precondition("singular matrix".into()));
        };
        a.swap(col, p);
        inv.swap(col, p);
        let pv = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &pv;
            inv[col][j] = &inv[col][j] / &pv;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..n {
                    let d = &f * &a[col][j];
                    a[i][j] -= d;
                    let d = &f * &inv[col][j];
                    inv[i][j] -= d;
                }
            }
        }
    }
    Ok(inv)
}

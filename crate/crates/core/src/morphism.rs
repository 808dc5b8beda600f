//! Endomorphisms of `F(n, c)` given by the images of the generators.
//!
//! Composition follows function order: `f.compose(g)` is `x -> f(g(x))`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{GroupContext, NilpotentElement, NormalFormJson};
use crate::error::{Error, Result};
use crate::hall::EntryShape;
use crate::solver::invert_rational;
use crate::word::{parse_word_with_limit, Word};

/// Square integer matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    pub fn identity(n: usize) -> Self {
        IntegerMatrix {
            rows: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix must be square".into()));
        }
        Ok(IntegerMatrix { rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.rows[i][k] * &other.rows[k][j]).sum())
                    .collect()
            })
            .collect();
        IntegerMatrix { rows }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.size();
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Integer inverse of a matrix with determinant ±1.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unimodular() {
            return Err(Error::NotAnAutomorphism {
                det: self.det().to_string(),
            });
        }
        let q: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect())
            .collect();
        let inv = invert_rational(q)?;
        Ok(IntegerMatrix {
            rows: inv
                .into_iter()
                .map(|r| r.into_iter().map(|v| v.to_integer()).collect())
                .collect(),
        })
    }

    /// A matrix of determinant ±1 whose first column is `v`, if `gcd(v) = 1`.
    pub fn unimodular_completion(v: &[BigInt]) -> Option<Self> {
        let n = v.len();
        let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if n == 0 || !g.is_one() {
            return None;
        }
        // Keep M w = v while reducing w to e_1 with elementary operations.
        let mut w = v.to_vec();
        let mut m = IntegerMatrix::identity(n);
        loop {
            let nonzero: Vec<usize> = (0..n).filter(|&i| !w[i].is_zero()).collect();
            if nonzero.len() == 1 {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| w[i].abs()).expect("nonzero entry");
            for &q in &nonzero {
                if q == p {
                    continue;
                }
                let t = w[q].div_floor(&w[p]);
                // w_q -= t w_p ; M column p += t * column q
                w[q] = &w[q] - &t * &w[p];
                for row in m.rows.iter_mut() {
                    let add = &t * &row[q];
                    row[p] += add;
                }
            }
        }
        let p = (0..n).find(|&i| !w[i].is_zero()).expect("one nonzero entry");
        if p != 0 {
            w.swap(0, p);
            for row in m.rows.iter_mut() {
                row.swap(0, p);
            }
        }
        if w[0].is_negative() {
            for row in m.rows.iter_mut() {
                row[0] = -&row[0];
            }
        }
        Some(m)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", text.join(","))
    }
}

/// Endomorphism of `F(n, c)`; `images[i]` is the image of `x_{i+1}`.
#[derive(Clone)]
pub struct Endomorphism {
    ctx: Arc<GroupContext>,
    images: Vec<NilpotentElement>,
}

impl PartialEq for Endomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for Endomorphism {}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Endomorphism(F({},{}): {})", self.ctx.rank(), self.ctx.class(), self)
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "x{} -> {}", i + 1, img)?;
        }
        Ok(())
    }
}

impl Endomorphism {
    pub fn identity(ctx: &Arc<GroupContext>) -> Self {
        let images = (0..ctx.rank()).map(|p| ctx.basis_element(p)).collect();
        Endomorphism {
            ctx: Arc::clone(ctx),
            images,
        }
    }

    pub fn from_images(ctx: &Arc<GroupContext>, images: Vec<NilpotentElement>) -> Result<Self> {
        if images.len() != ctx.rank() {
            return Err(Error::InvalidArgument(format!(
                "expected {} images, got {}",
                ctx.rank(),
                images.len()
            )));
        }
        for img in &images {
            img.context().same_group(ctx)?;
        }
        Ok(Endomorphism {
            ctx: Arc::clone(ctx),
            images,
        })
    }

    /// Identity except `x_index -> image`.
    pub fn elementary(ctx: &Arc<GroupContext>, index: usize, image: NilpotentElement) -> Result<Self> {
        let mut f = Self::identity(ctx);
        if index == 0 || index > ctx.rank() {
            return Err(Error::GeneratorOutOfRange {
                index: index as u64,
                rank: ctx.rank(),
            });
        }
        image.context().same_group(ctx)?;
        f.images[index - 1] = image;
        Ok(f)
    }

    /// `x_i -> x_{perm[i]}` with 1-based targets.
    pub fn permutation(ctx: &Arc<GroupContext>, perm: &[usize]) -> Result<Self> {
        let n = ctx.rank();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true))
        {
            return Err(Error::InvalidArgument("not a permutation of the generators".into()));
        }
        let images = perm.iter().map(|&p| ctx.basis_element(p - 1)).collect();
        Ok(Endomorphism {
            ctx: Arc::clone(ctx),
            images,
        })
    }

    /// `x_i -> prod_j x_j^{m[j][i]}`: the lift of an integer matrix acting on columns.
    pub fn linear(ctx: &Arc<GroupContext>, m: &IntegerMatrix) -> Result<Self> {
        if m.size() != ctx.rank() {
            return Err(Error::InvalidArgument("matrix size differs from rank".into()));
        }
        let n = ctx.rank();
        let images = (0..n)
            .map(|i| {
                let mut acc = ctx.identity();
                for j in 0..n {
                    let e = m.get(j, i);
                    if !e.is_zero() {
                        acc = acc.mul(&ctx.basis_element(j).power(e))?;
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Endomorphism {
            ctx: Arc::clone(ctx),
            images,
        })
    }

    /// The inner automorphism `z -> a z a^-1`.
    pub fn inner(a: &NilpotentElement) -> Self {
        let ctx = a.context();
        let ai = a.inv();
        let images = (0..ctx.rank())
            .map(|p| {
                a.mul(&ctx.basis_element(p))
                    .and_then(|v| v.mul(&ai))
                    .expect("same context")
            })
            .collect();
        Endomorphism {
            ctx: Arc::clone(ctx),
            images,
        }
    }

    /// Parses `x1 -> word; x2 -> word; ...`; unlisted generators are fixed.
    pub fn parse(ctx: &Arc<GroupContext>, text: &str) -> Result<Self> {
        let mut f = Self::identity(ctx);
        let mut assigned = vec![false; ctx.rank()];
        let max = usize::try_from(ctx.limits().max_word_len).unwrap_or(usize::MAX);
        let mut offset = 0;
        for clause in text.split(';') {
            let clause_start = offset;
            offset += clause.len() + 1;
            if clause.trim().is_empty() {
                continue;
            }
            let (lhs, rhs) = clause.split_once("->").ok_or(Error::Syntax {
                pos: clause_start,
                msg: "expected 'xi -> word'".into(),
            })?;
            let gen = parse_word_with_limit(lhs, ctx.rank(), max).map_err(|e| shift_pos(e, clause_start))?;
            let index = match gen.letters() {
                [l] if l.exp == 1 => l.gen.index() as usize,
                _ => {
                    return Err(Error::Syntax {
                        pos: clause_start,
                        msg: format!("left side {:?} is not a single generator", lhs.trim()),
                    })
                }
            };
            if std::mem::replace(&mut assigned[index - 1], true) {
                return Err(Error::InvalidArgument(format!("x{index} assigned twice")));
            }
            let word =
                parse_word_with_limit(rhs, ctx.rank(), max).map_err(|e| shift_pos(e, clause_start + lhs.len() + 2))?;
            f.images[index - 1] = ctx.collect(&word)?;
        }
        Ok(f)
    }

    pub fn context(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn images(&self) -> &[NilpotentElement] {
        &self.images
    }

    /// Image of `x_index` (1-based).
    pub fn image(&self, index: usize) -> &NilpotentElement {
        &self.images[index - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(p, img)| img.coords().len() == 1 && img.coord(p).is_one())
    }

    pub fn apply(&self, a: &NilpotentElement) -> Result<NilpotentElement> {
        a.context().same_group(&self.ctx)?;
        ImageEvaluator::new(self).apply(a)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &Endomorphism) -> Result<Self> {
        self.ctx.same_group(&g.ctx)?;
        let mut eval = ImageEvaluator::new(self);
        let images = g.images.iter().map(|img| eval.apply(img)).collect::<Result<Vec<_>>>()?;
        Ok(Endomorphism {
            ctx: Arc::clone(&self.ctx),
            images,
        })
    }

    /// Column `i` holds the generator exponents of the image of `x_{i+1}`.
    pub fn abelianization_matrix(&self) -> IntegerMatrix {
        let n = self.ctx.rank();
        let rows = (0..n)
            .map(|j| (0..n).map(|i| self.images[i].coord(j)).collect())
            .collect();
        IntegerMatrix { rows }
    }

    pub fn is_automorphism(&self) -> bool {
        self.abelianization_matrix().is_unimodular()
    }

    fn require_automorphism(&self) -> Result<()> {
        let det = self.abelianization_matrix().det();
        if det.abs().is_one() {
            Ok(())
        } else {
            Err(Error::NotAnAutomorphism { det: det.to_string() })
        }
    }

    /// Largest `k <= c` with `f(x_i) x_i^-1` in `N_{k+1}` for every generator.
    pub fn ia_level(&self) -> Result<usize> {
        self.require_automorphism()?;
        Ok(self.ia_level_unchecked())
    }

    fn ia_level_unchecked(&self) -> usize {
        let c = self.ctx.class();
        self.images
            .iter()
            .enumerate()
            .map(|(p, img)| {
                let x = self.ctx.basis_element(p);
                let t = img.mul(&x.inv()).expect("same context");
                t.weight_filtration() - 1
            })
            .min()
            .unwrap_or(c)
            .min(c)
    }

    /// Two-sided inverse of an automorphism.
    pub fn invert(&self) -> Result<Self> {
        self.require_automorphism()?;
        let c = self.ctx.class();
        let linear_inv = Self::linear(&self.ctx, &self.abelianization_matrix().inverse()?)?;
        // h = f ∘ L is IA; peel one layer of the filtration per step.
        let mut h = self.compose(&linear_inv)?;
        let mut acc = Self::identity(&self.ctx);
        let mut level = h.ia_level_unchecked();
        while level < c {
            let correction: Vec<NilpotentElement> = h
                .images
                .iter()
                .enumerate()
                .map(|(p, img)| {
                    let x = self.ctx.basis_element(p);
                    let t = x.inv().mul(img)?;
                    x.mul(&t.inv())
                })
                .collect::<Result<_>>()?;
            let correction = Endomorphism {
                ctx: Arc::clone(&self.ctx),
                images: correction,
            };
            h = h.compose(&correction)?;
            acc = acc.compose(&correction)?;
            let next = h.ia_level_unchecked();
            if next <= level {
                return Err(Error::Precondition("IA correction did not raise the level".into()));
            }
            level = next;
        }
        linear_inv.compose(&acc)
    }

    /// `pi ∘ self ∘ pi^-1`.
    pub fn conjugate_by(&self, pi: &Endomorphism) -> Result<Self> {
        pi.compose(self)?.compose(&pi.invert()?)
    }

    /// Induced endomorphism of `F(n, k)`.
    pub fn project(&self, k: usize) -> Result<Self> {
        let c = self.ctx.class();
        if k == 0 || k > c {
            return Err(Error::InvalidArgument(format!("projection class {k} not in 1..={c}")));
        }
        if k == c {
            return Ok(self.clone());
        }
        let target = GroupContext::with_limits(self.ctx.rank(), k, self.ctx.limits())?;
        self.reread(&target)
    }

    /// Reads the images coordinate-wise in `F(n, c)`; requires an automorphism.
    pub fn lift(&self, c: usize) -> Result<Self> {
        self.require_automorphism()?;
        let k = self.ctx.class();
        if c < k {
            return Err(Error::InvalidArgument(format!(
                "cannot lift from class {k} to class {c}"
            )));
        }
        if c == k {
            return Ok(self.clone());
        }
        let target = GroupContext::with_limits(self.ctx.rank(), c, self.ctx.limits())?;
        self.reread(&target)
    }

    fn reread(&self, target: &Arc<GroupContext>) -> Result<Self> {
        let cap = target.basis().len();
        let images = self
            .images
            .iter()
            .map(|img| {
                target.element(
                    img.coords()
                        .iter()
                        .filter(|(p, _)| **p < cap)
                        .map(|(p, e)| (*p, e.clone())),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Endomorphism {
            ctx: Arc::clone(target),
            images,
        })
    }

    pub fn to_json(&self) -> EndomorphismJson {
        EndomorphismJson {
            rank: self.ctx.rank(),
            class: self.ctx.class(),
            images: self.images.iter().map(|i| i.to_json()).collect(),
        }
    }

    pub fn from_json(ctx: &Arc<GroupContext>, json: &EndomorphismJson) -> Result<Self> {
        let images = json
            .images
            .iter()
            .map(|j| ctx.element_from_json(j))
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(ctx, images)
    }
}

fn shift_pos(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos: pos + by, msg },
        other => other,
    }
}

/// Whether `a` belongs to some basis, i.e. its abelianized row is unimodular.
pub fn is_primitive(a: &NilpotentElement) -> bool {
    let g = a.abelianized().iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    g.is_one()
}

/// An automorphism sending `x1` to `a`, when `a` is primitive.
pub fn primitive_witness(a: &NilpotentElement) -> Result<Option<Endomorphism>> {
    let Some(m) = IntegerMatrix::unimodular_completion(&a.abelianized()) else {
        return Ok(None);
    };
    let ctx = a.context();
    let phi = Endomorphism::linear(ctx, &m)?;
    // phi(x1) agrees with a modulo N_2; fix the rest with an IA automorphism.
    let t = phi.image(1).inv().mul(a)?;
    let s = phi.invert()?.apply(&t)?;
    let x1 = ctx.basis_element(0);
    let correction = Endomorphism::elementary(ctx, 1, x1.mul(&s)?)?;
    Ok(Some(phi.compose(&correction)?))
}

/// Value of a free-group word under `x_i -> images[i]`.
pub fn evaluate_word(w: &Word, images: &[NilpotentElement]) -> Result<NilpotentElement> {
    let first = images
        .first()
        .ok_or_else(|| Error::InvalidArgument("no images to substitute".into()))?;
    let ctx = first.context();
    let mut acc = ctx.identity();
    for l in w.letters() {
        let img = images.get(l.gen.slot()).ok_or(Error::GeneratorOutOfRange {
            index: l.gen.index() as u64,
            rank: images.len(),
        })?;
        acc = acc.mul(&img.power(&BigInt::from(l.exp)))?;
    }
    Ok(acc)
}

/// Series of the images of basis commutators under one endomorphism, memoized.
struct ImageEvaluator<'a> {
    f: &'a Endomorphism,
    cache: Vec<Option<Vec<BigInt>>>,
}

impl<'a> ImageEvaluator<'a> {
    fn new(f: &'a Endomorphism) -> Self {
        ImageEvaluator {
            f,
            cache: vec![None; f.ctx.basis().len()],
        }
    }

    fn basis_image(&mut self, pos: usize) -> &[BigInt] {
        if self.cache[pos].is_none() {
            let ctx = &self.f.ctx;
            let s = match ctx.basis().entry(pos).shape {
                EntryShape::Leaf(g) => ctx.series_of(self.f.images[g.slot()].coords()),
                EntryShape::Node { left, right } => {
                    let l = self.basis_image(left).to_vec();
                    let r = self.basis_image(right);
                    ctx.shape().commutator(&l, r)
                }
            };
            self.cache[pos] = Some(s);
        }
        self.cache[pos].as_deref().expect("cached")
    }

    fn apply(&mut self, a: &NilpotentElement) -> Result<NilpotentElement> {
        let ctx = Arc::clone(&self.f.ctx);
        let shape = ctx.shape();
        let mut s = shape.one();
        for (pos, e) in a.coords() {
            let img = self.basis_image(*pos);
            let factor = shape.pow(img, e);
            s = shape.mul(&s, &factor);
        }
        ctx.from_series(s)
    }
}

/// Serialized endomorphism: one normal form per generator image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndomorphismJson {
    pub rank: usize,
    pub class: usize,
    pub images: Vec<NormalFormJson>,
}

//! Normal forms and group arithmetic in the free nilpotent group `F(n, c)`.
//!
//! An element is stored as its exponent vector over the Hall basis: the
//! element is `prod_i b_i^{e_i}` taken in basis order. Products are computed
//! in the truncated Magnus ring (see `series`) and read back stratum by
//! stratum, so every result is already in normal form.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hall::{CommutatorTree, EntryShape, HallBasis, DEFAULT_MAX_WITT};
use crate::series::{binomial, Shape, Sparse};
use crate::solver::StratumSolver;
use crate::word::{Word, DEFAULT_MAX_WORD_LEN};

/// Resource caps applied while building contexts and collecting words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Longest word (in letters `x_i^{±1}`) `collect` accepts.
    pub max_word_len: u128,
    /// Largest Hall basis a context may be built over.
    pub max_witt: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_word_len: DEFAULT_MAX_WORD_LEN as u128,
            max_witt: DEFAULT_MAX_WITT,
        }
    }
}

/// `F(n, c)` together with its Hall basis and precomputed series data.
pub struct GroupContext {
    basis: HallBasis,
    shape: Shape,
    /// `factors[pos][j - 1]` is `T^j` where `1 + T` is the series of basis entry `pos`.
    factors: Vec<Vec<Sparse>>,
    solvers: Vec<StratumSolver>,
    limits: Limits,
}

impl fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupContext(F({}, {}))", self.rank(), self.class())
    }
}

impl GroupContext {
    pub fn new(rank: usize, class: usize) -> Result<Arc<Self>> {
        Self::with_limits(rank, class, Limits::default())
    }

    pub fn with_limits(rank: usize, class: usize, limits: Limits) -> Result<Arc<Self>> {
        let basis = HallBasis::with_limit(rank, class, limits.max_witt)?;
        let shape = Shape::new(rank, class)?;

        let mut tails: Vec<Sparse> = Vec::with_capacity(basis.len());
        for pos in 0..basis.len() {
            let dense = match basis.entry(pos).shape {
                EntryShape::Leaf(g) => {
                    let mut s = shape.one();
                    s[shape.block(1).start + g.slot()] = BigInt::one();
                    s
                }
                EntryShape::Node { left, right } => {
                    let mut l = tails[left].to_dense(&shape);
                    l[0] = BigInt::one();
                    let mut r = tails[right].to_dense(&shape);
                    r[0] = BigInt::one();
                    shape.commutator(&l, &r)
                }
            };
            let mut t = dense;
            t[0] = BigInt::zero();
            tails.push(Sparse::from_dense(&shape, &t));
        }

        let mut factors = Vec::with_capacity(tails.len());
        for (pos, tail) in tails.into_iter().enumerate() {
            let w = basis.weight(pos);
            let mut powers = vec![tail];
            let base = powers[0].to_dense(&shape);
            let mut cur = base.clone();
            for _ in 2..=class / w {
                cur = shape.mul(&cur, &base);
                powers.push(Sparse::from_dense(&shape, &cur));
            }
            factors.push(powers);
        }

        let solvers = (1..=class)
            .map(|m| {
                let rows: Vec<Vec<(u32, BigInt)>> =
                    basis.stratum(m).map(|pos| factors[pos][0].terms[m].clone()).collect();
                StratumSolver::new(&rows)
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(Arc::new(GroupContext {
            basis,
            shape,
            factors,
            solvers,
            limits,
        }))
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn class(&self) -> usize {
        self.basis.class()
    }

    pub fn basis(&self) -> &HallBasis {
        &self.basis
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    fn key(&self) -> (usize, usize) {
        (self.rank(), self.class())
    }

    pub(crate) fn same_group(&self, other: &GroupContext) -> Result<()> {
        if self.key() == other.key() {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.key(),
                right: other.key(),
            })
        }
    }

    pub fn identity(self: &Arc<Self>) -> NilpotentElement {
        NilpotentElement {
            ctx: Arc::clone(self),
            coords: BTreeMap::new(),
        }
    }

    /// The basis element at `pos` (the generator `x_{pos+1}` for `pos < rank`).
    pub fn basis_element(self: &Arc<Self>, pos: usize) -> NilpotentElement {
        assert!(pos < self.basis.len(), "basis position out of range");
        let mut coords = BTreeMap::new();
        coords.insert(pos, BigInt::one());
        NilpotentElement {
            ctx: Arc::clone(self),
            coords,
        }
    }

    /// The generator `x_index` (1-based).
    pub fn generator(self: &Arc<Self>, index: usize) -> Result<NilpotentElement> {
        if index == 0 || index > self.rank() {
            return Err(Error::GeneratorOutOfRange {
                index: index as u64,
                rank: self.rank(),
            });
        }
        Ok(self.basis_element(index - 1))
    }

    /// Element with the given exponents; zero entries are dropped.
    pub fn element<I: IntoIterator<Item = (usize, BigInt)>>(self: &Arc<Self>, coords: I) -> Result<NilpotentElement> {
        let mut map = BTreeMap::new();
        for (pos, e) in coords {
            if pos >= self.basis.len() {
                return Err(Error::InvalidArgument(format!("basis position {pos} out of range")));
            }
            if !e.is_zero() {
                map.insert(pos, e);
            }
        }
        Ok(NilpotentElement {
            ctx: Arc::clone(self),
            coords: map,
        })
    }

    /// Element `prod t^e` for basic commutators given as trees.
    pub fn element_from_trees(self: &Arc<Self>, items: &[(CommutatorTree, i64)]) -> Result<NilpotentElement> {
        let mut acc = self.identity();
        for (t, e) in items {
            let pos = self.basis.position(t).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "{t} is not a basic commutator of F({}, {})",
                    self.rank(),
                    self.class()
                ))
            })?;
            acc = acc.mul(&self.basis_element(pos).power(&BigInt::from(*e)))?;
        }
        Ok(acc)
    }

    /// Normal form of a word.
    pub fn collect(self: &Arc<Self>, w: &Word) -> Result<NilpotentElement> {
        if let Some(l) = w.letters().iter().find(|l| l.gen.slot() >= self.rank()) {
            return Err(Error::GeneratorOutOfRange {
                index: l.gen.index() as u64,
                rank: self.rank(),
            });
        }
        let len = w.letter_length();
        if len > self.limits.max_word_len {
            return Err(Error::ResourceCap {
                what: "word length",
                needed: len,
                limit: self.limits.max_word_len,
            });
        }
        let mut s = self.shape.one();
        for l in w.letters() {
            s = self.right_factor(&s, l.gen.slot(), &BigInt::from(l.exp));
        }
        self.from_series(s)
    }

    /// Parses and collects a word in the bracket grammar.
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<NilpotentElement> {
        let max = usize::try_from(self.limits.max_word_len).unwrap_or(usize::MAX);
        let w = crate::word::parse_word_with_limit(text, self.rank(), max)?;
        self.collect(&w)
    }

    pub(crate) fn shape(&self) -> &Shape {
        &self.shape
    }

    /// `s * b_pos^e`.
    fn right_factor(&self, s: &[BigInt], pos: usize, e: &BigInt) -> Vec<BigInt> {
        let mut out = s.to_vec();
        let st = self.shape.terms(s);
        for (j, tj) in self.factors[pos].iter().enumerate() {
            let b = binomial(e, j + 1);
            if b.is_zero() {
                break;
            }
            self.shape.mul_acc(&mut out, &st, &tj.view(), Some(&b));
        }
        out
    }

    /// `b_pos^e * s`.
    fn left_factor(&self, s: &[BigInt], pos: usize, e: &BigInt) -> Vec<BigInt> {
        let mut out = s.to_vec();
        let st = self.shape.terms(s);
        for (j, tj) in self.factors[pos].iter().enumerate() {
            let b = binomial(e, j + 1);
            if b.is_zero() {
                break;
            }
            self.shape.mul_acc(&mut out, &tj.view(), &st, Some(&b));
        }
        out
    }

    pub(crate) fn series_of(&self, coords: &BTreeMap<usize, BigInt>) -> Vec<BigInt> {
        let mut s = self.shape.one();
        for (pos, e) in coords {
            s = self.right_factor(&s, *pos, e);
        }
        s
    }

    /// Reads the normal form off a series with constant term 1.
    pub(crate) fn from_series(self: &Arc<Self>, mut s: Vec<BigInt>) -> Result<NilpotentElement> {
        let mut coords = BTreeMap::new();
        let c = self.class();
        for m in 1..=c {
            let range = self.basis.stratum(m);
            if range.is_empty() {
                continue;
            }
            let exps = self.solvers[m - 1].solve(&s[self.shape.block(m)])?;
            for (pos, e) in range.clone().zip(exps) {
                if !e.is_zero() {
                    coords.insert(pos, e);
                }
            }
            if m < c {
                for pos in range {
                    if let Some(e) = coords.get(&pos) {
                        s = self.left_factor(&s, pos, &-e);
                    }
                }
                debug_assert!(s[self.shape.block(m)].iter().all(Zero::is_zero));
            }
        }
        Ok(NilpotentElement {
            ctx: Arc::clone(self),
            coords,
        })
    }

    pub fn element_from_json(self: &Arc<Self>, json: &NormalFormJson) -> Result<NilpotentElement> {
        if (json.rank, json.class) != self.key() {
            return Err(Error::ContextMismatch {
                left: self.key(),
                right: (json.rank, json.class),
            });
        }
        let mut coords = BTreeMap::new();
        for c in &json.coords {
            let tree = CommutatorTree::parse(&c.commutator)?;
            let pos = self
                .basis
                .position(&tree)
                .ok_or_else(|| Error::InvalidArgument(format!("{tree} is not a basic commutator")))?;
            if self.basis.weight(pos) != c.weight {
                return Err(Error::InvalidArgument(format!(
                    "{tree} has weight {}, not {}",
                    self.basis.weight(pos),
                    c.weight
                )));
            }
            let e: BigInt = c
                .exp
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad exponent {:?}", c.exp)))?;
            if coords.insert(pos, e).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate coordinate {tree}")));
            }
        }
        coords.retain(|_, e| !e.is_zero());
        Ok(NilpotentElement {
            ctx: Arc::clone(self),
            coords,
        })
    }
}

/// An element of `F(n, c)` in Hall normal form.
#[derive(Clone)]
pub struct NilpotentElement {
    ctx: Arc<GroupContext>,
    coords: BTreeMap<usize, BigInt>,
}

impl PartialEq for NilpotentElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.key() == other.ctx.key() && self.coords == other.coords
    }
}

impl Eq for NilpotentElement {}

impl NilpotentElement {
    pub fn context(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    /// Nonzero exponents keyed by basis position.
    pub fn coords(&self) -> &BTreeMap<usize, BigInt> {
        &self.coords
    }

    pub fn coord(&self, pos: usize) -> BigInt {
        self.coords.get(&pos).cloned().unwrap_or_default()
    }

    pub fn is_identity(&self) -> bool {
        self.coords.is_empty()
    }

    /// Exponents of the generators, i.e. the image in the abelianization.
    pub fn abelianized(&self) -> Vec<BigInt> {
        (0..self.ctx.rank()).map(|p| self.coord(p)).collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ctx.same_group(&other.ctx)?;
        if other.is_identity() {
            return Ok(self.clone());
        }
        if self.is_identity() {
            return Ok(other.clone());
        }
        let mut s = self.ctx.series_of(&self.coords);
        for (pos, e) in &other.coords {
            s = self.ctx.right_factor(&s, *pos, e);
        }
        self.ctx.from_series(s)
    }

    pub fn inv(&self) -> Self {
        let mut s = self.ctx.shape.one();
        for (pos, e) in self.coords.iter().rev() {
            s = self.ctx.right_factor(&s, *pos, &-e);
        }
        self.ctx.from_series(s).expect("inverse of a normal form")
    }

    /// `self^k` for any integer `k`.
    pub fn power(&self, k: &BigInt) -> Self {
        if k.is_zero() || self.is_identity() {
            return self.ctx.identity();
        }
        if self.coords.len() == 1 {
            // a single basis factor: b^e -> b^(e k)
            let (pos, e) = self.coords.iter().next().expect("one coordinate");
            let mut coords = BTreeMap::new();
            coords.insert(*pos, e * k);
            return NilpotentElement {
                ctx: Arc::clone(&self.ctx),
                coords,
            };
        }
        let s = self.ctx.series_of(&self.coords);
        let s = self.ctx.shape.pow(&s, k);
        self.ctx.from_series(s).expect("power of a normal form")
    }

    pub fn pow_i64(&self, k: i64) -> Self {
        self.power(&BigInt::from(k))
    }

    /// `[self, other] = self other self^-1 other^-1`.
    pub fn commutator_with(&self, other: &Self) -> Result<Self> {
        self.ctx.same_group(&other.ctx)?;
        if self.is_identity() || other.is_identity() {
            return Ok(self.ctx.identity());
        }
        let shape = &self.ctx.shape;
        let u = self.ctx.series_of(&self.coords);
        let v = self.ctx.series_of(&other.coords);
        self.ctx.from_series(shape.commutator(&u, &v))
    }

    /// Largest `k` with `self` in the `k`-th term of the lower central series
    /// (`class + 1` for the identity).
    pub fn weight_filtration(&self) -> usize {
        self.coords
            .keys()
            .map(|&p| self.ctx.basis.weight(p))
            .min()
            .unwrap_or(self.ctx.class() + 1)
    }

    /// Whether `self` commutes with every generator.
    pub fn is_central(&self) -> bool {
        (1..=self.ctx.rank()).all(|i| {
            let g = self.ctx.generator(i).expect("generator in range");
            self.commutator_with(&g).expect("same context").is_identity()
        })
    }

    /// Expands the normal form into a word, refusing beyond `max_len` letters.
    pub fn to_word(&self, max_len: u128) -> Result<Word> {
        let mut acc = Word::identity();
        let mut total: u128 = 0;
        for (pos, e) in &self.coords {
            let base = self.ctx.basis.tree(*pos).to_word();
            let k = e.abs().to_u128().unwrap_or(u128::MAX);
            total = total.saturating_add(k.saturating_mul(base.letter_length()));
            if total > max_len {
                return Err(Error::ResourceCap {
                    what: "expanded word length",
                    needed: total,
                    limit: max_len,
                });
            }
            let e = e.to_i64().expect("bounded by max_len");
            acc = acc.concat(&base.pow(e)?)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> NormalFormJson {
        NormalFormJson {
            rank: self.ctx.rank(),
            class: self.ctx.class(),
            coords: self
                .coords
                .iter()
                .map(|(pos, e)| CoordJson {
                    commutator: self.ctx.basis.format_entry(*pos),
                    weight: self.ctx.basis.weight(*pos),
                    exp: e.to_string(),
                })
                .collect(),
        }
    }

    /// One coordinate per line, commutators left-aligned.
    pub fn to_aligned_text(&self) -> String {
        if self.is_identity() {
            return "identity\n".to_string();
        }
        let rows: Vec<(String, String)> = self
            .coords
            .iter()
            .map(|(p, e)| (self.ctx.basis.format_entry(*p), e.to_string()))
            .collect();
        let width = rows.iter().map(|(c, _)| c.len()).max().unwrap_or(0);
        rows.iter().map(|(c, e)| format!("{c:<width$}  {e}\n")).collect()
    }
}

/// Left-normed commutator `[a_1, ..., a_s] = [[a_1, ..., a_{s-1}], a_s]`.
pub fn commutator(args: &[NilpotentElement]) -> Result<NilpotentElement> {
    if args.len() < 2 {
        return Err(Error::InvalidArgument(
            "a commutator needs at least two arguments".into(),
        ));
    }
    let mut acc = args[0].clone();
    for a in &args[1..] {
        acc = acc.commutator_with(a)?;
    }
    Ok(acc)
}

/// Product form, e.g. `x1^2 x2 [x2,x1]^-1`; the identity prints as `()`.
impl fmt::Display for NilpotentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        for (i, (pos, e)) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.ctx.basis.format_entry(*pos))?;
            if !e.is_one() {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NilpotentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{})[{}]", self.ctx.rank(), self.ctx.class(), self)
    }
}

/// Serialized normal form; exponents are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormJson {
    pub rank: usize,
    pub class: usize,
    pub coords: Vec<CoordJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordJson {
    pub commutator: String,
    pub weight: usize,
    pub exp: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, c: usize) -> Arc<GroupContext> {
        GroupContext::new(n, c).unwrap()
    }

    fn el(g: &Arc<GroupContext>, items: &[(&str, i64)]) -> NilpotentElement {
        let items: Vec<(CommutatorTree, i64)> = items
            .iter()
            .map(|(t, e)| (CommutatorTree::parse(t).unwrap(), *e))
            .collect();
        g.element_from_trees(&items).unwrap()
    }

    #[test]
    fn collect_examples() {
        let g = ctx(2, 2);
        assert_eq!(
            g.parse("x2 x1").unwrap(),
            el(&g, &[("x1", 1), ("x2", 1), ("[x2,x1]", 1)])
        );
        assert!(g.parse("").unwrap().is_identity());
        let g3 = ctx(2, 3);
        assert_eq!(g3.parse("x1^3").unwrap(), el(&g3, &[("x1", 3)]));
    }

    #[test]
    fn mul_examples() {
        let g = ctx(2, 2);
        let x1 = g.generator(1).unwrap();
        let x2 = g.generator(2).unwrap();
        assert_eq!(x1.mul(&g.identity()).unwrap(), x1);
        assert_eq!(x1.mul(&x2).unwrap(), el(&g, &[("x1", 1), ("x2", 1)]));
        assert_eq!(x2.mul(&x1).unwrap(), el(&g, &[("x1", 1), ("x2", 1), ("[x2,x1]", 1)]));
    }

    #[test]
    fn inverse_examples() {
        let g = ctx(2, 2);
        assert!(g.identity().inv().is_identity());
        assert_eq!(g.generator(1).unwrap().inv(), el(&g, &[("x1", -1)]));
        let a = el(&g, &[("x1", 1), ("x2", 1)]);
        let ai = a.inv();
        // x2^-1 x1^-1 = x1^-1 x2^-1 [x2,x1], since [x1,x2] = [x2,x1]^-1 in class 2
        assert_eq!(ai, el(&g, &[("x1", -1), ("x2", -1), ("[x2,x1]", 1)]));
        assert!(a.mul(&ai).unwrap().is_identity());
        assert!(ai.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn power_examples() {
        let g = ctx(2, 2);
        let a = el(&g, &[("x1", 1), ("x2", 1)]);
        assert!(a.pow_i64(0).is_identity());
        assert_eq!(g.generator(1).unwrap().pow_i64(5), el(&g, &[("x1", 5)]));
        let sq = a.pow_i64(2);
        assert_eq!(sq, el(&g, &[("x1", 2), ("x2", 2), ("[x2,x1]", 1)]));
        assert_eq!(sq, a.mul(&a).unwrap());
    }

    #[test]
    fn commutator_examples() {
        let g = ctx(2, 2);
        let x1 = g.generator(1).unwrap();
        let x2 = g.generator(2).unwrap();
        assert!(commutator(&[x1.clone(), g.identity()]).unwrap().is_identity());
        assert_eq!(
            commutator(&[x2.clone(), x1.clone()]).unwrap(),
            el(&g, &[("[x2,x1]", 1)])
        );
        let g3 = ctx(2, 3);
        let (y1, y2) = (g3.generator(1).unwrap(), g3.generator(2).unwrap());
        assert_eq!(
            commutator(&[y2, y1.clone(), y1]).unwrap(),
            el(&g3, &[("[[x2,x1],x1]", 1)])
        );
        assert!(commutator(&[x1]).is_err());
    }

    #[test]
    fn filtration_examples() {
        let g = ctx(2, 3);
        assert_eq!(g.identity().weight_filtration(), 4);
        assert_eq!(el(&g, &[("[x2,x1]", 3)]).weight_filtration(), 2);
        assert_eq!(g.parse("x1 [x2,x1]").unwrap().weight_filtration(), 1);
    }

    #[test]
    fn centrality_examples() {
        let g = ctx(2, 2);
        assert!(g.identity().is_central());
        assert!(el(&g, &[("[x2,x1]", 1)]).is_central());
        assert!(!g.generator(1).unwrap().is_central());
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = ctx(2, 2).generator(1).unwrap();
        let b = ctx(2, 3).generator(1).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn collect_rejects_out_of_range_and_long_words() {
        let g = ctx(2, 2);
        assert!(matches!(
            g.collect(&Word::generator(3)),
            Err(Error::GeneratorOutOfRange { .. })
        ));
        let small = GroupContext::with_limits(
            2,
            2,
            Limits {
                max_word_len: 10,
                ..Limits::default()
            },
        )
        .unwrap();
        let w = crate::word::parse_word("x1^11", 2).unwrap();
        assert!(matches!(
            small.collect(&w),
            Err(Error::ResourceCap {
                needed: 11,
                limit: 10,
                ..
            })
        ));
    }

    #[test]
    fn big_exponents_stay_exact() {
        let g = ctx(2, 3);
        let a = g.parse("x1 x2").unwrap();
        let huge = BigInt::from(10).pow(30);
        let p = a.power(&huge);
        let back = p.mul(&a.power(&-&huge)).unwrap();
        assert!(back.is_identity());
        // (x1 x2)^k has [x2,x1] exponent k(k-1)/2 in class 2 quotient
        let k2 = &huge * (&huge - 1) / 2;
        assert_eq!(p.coord(2), k2);
    }

    #[test]
    fn json_round_trip() {
        let g = ctx(3, 3);
        let a = g.parse("x3 x1^-2 [x2,x1] x3 x2").unwrap();
        let j = a.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back: NormalFormJson = serde_json::from_str(&text).unwrap();
        assert_eq!(g.element_from_json(&back).unwrap(), a);
    }

    #[test]
    fn to_word_recollects() {
        let g = ctx(3, 3);
        let a = g.parse("x3 x1^-2 [x2,x1]^3 x3 x2").unwrap();
        let w = a.to_word(1000).unwrap();
        assert_eq!(g.collect(&w).unwrap(), a);
        assert!(a.to_word(3).is_err());
    }

    #[test]
    fn display_is_parseable() {
        let g = ctx(3, 3);
        let a = g.parse("x3 x1^-2 [x2,x1] x3 x2 [x3,x1,x2]").unwrap();
        assert_eq!(g.parse(&a.to_string()).unwrap(), a);
    }
}

//! Basic commutators (Hall basis) of a free nilpotent group.
//!
//! The weight-`m` stratum consists of the brackets `[u,v]` with
//! `weight(u) + weight(v) = m`, `u > v`, and, when `u = [u1,u2]`, `u2 <= v`.
//! Order: weight first, then the leaf sequences lexicographically, then the
//! left subtree, then the right subtree.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::word::{GeneratorId, Word};

/// Default bound on the total number of basic commutators of weight `<= c`.
pub const DEFAULT_MAX_WITT: u128 = 100_000;

/// A binary bracketing of generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CommutatorTree {
    Leaf(GeneratorId),
    Node(Box<CommutatorTree>, Box<CommutatorTree>),
}

impl CommutatorTree {
    pub fn leaf(index: u32) -> Self {
        CommutatorTree::Leaf(GeneratorId::new(index))
    }

    pub fn node(left: CommutatorTree, right: CommutatorTree) -> Self {
        CommutatorTree::Node(Box::new(left), Box::new(right))
    }

    pub fn weight(&self) -> usize {
        match self {
            CommutatorTree::Leaf(_) => 1,
            CommutatorTree::Node(l, r) => l.weight() + r.weight(),
        }
    }

    /// Generator indices of the leaves, left to right.
    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.weight());
        self.push_leaves(&mut out);
        out
    }

    fn push_leaves(&self, out: &mut Vec<u32>) {
        match self {
            CommutatorTree::Leaf(g) => out.push(g.index()),
            CommutatorTree::Node(l, r) => {
                l.push_leaves(out);
                r.push_leaves(out);
            }
        }
    }

    /// Expands the bracketing into a group word.
    pub fn to_word(&self) -> Word {
        match self {
            CommutatorTree::Leaf(g) => Word::generator(g.index()),
            CommutatorTree::Node(l, r) => {
                // Reduced words of bounded-weight trees cannot overflow i64.
                Word::commutator(&l.to_word(), &r.to_word()).expect("commutator word")
            }
        }
    }

    /// Applies `f` to every leaf index.
    pub fn relabel(&self, f: &impl Fn(u32) -> u32) -> Self {
        match self {
            CommutatorTree::Leaf(g) => CommutatorTree::leaf(f(g.index())),
            CommutatorTree::Node(l, r) => CommutatorTree::node(l.relabel(f), r.relabel(f)),
        }
    }

    /// Parses the fully bracketed syntax printed by `Display`, e.g. `[[x2,x1],x1]`.
    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let t = parse_tree(bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(Error::Syntax {
                pos,
                msg: "trailing input after commutator".into(),
            });
        }
        Ok(t)
    }
}

fn skip_ws(b: &[u8], pos: &mut usize) {
    while *pos < b.len() && b[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_tree(b: &[u8], pos: &mut usize) -> Result<CommutatorTree> {
    skip_ws(b, pos);
    let err = |pos: usize, msg: &str| Error::Syntax {
        pos,
        msg: msg.to_string(),
    };
    match b.get(*pos) {
        Some(b'x') => {
            *pos += 1;
            let start = *pos;
            while *pos < b.len() && b[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let idx: u32 = std::str::from_utf8(&b[start..*pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| err(start, "expected generator index"))?;
            Ok(CommutatorTree::leaf(idx))
        }
        Some(b'[') => {
            *pos += 1;
            let l = parse_tree(b, pos)?;
            skip_ws(b, pos);
            if b.get(*pos) != Some(&b',') {
                return Err(err(*pos, "expected ','"));
            }
            *pos += 1;
            let r = parse_tree(b, pos)?;
            skip_ws(b, pos);
            if b.get(*pos) != Some(&b']') {
                return Err(err(*pos, "expected ']'"));
            }
            *pos += 1;
            Ok(CommutatorTree::node(l, r))
        }
        _ => Err(err(*pos, "expected 'x' or '['")),
    }
}

impl fmt::Display for CommutatorTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommutatorTree::Leaf(g) => write!(f, "{g}"),
            CommutatorTree::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

/// The total order on commutator trees used to build the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HallOrder {
    pub rank: usize,
}

impl HallOrder {
    pub fn new(rank: usize) -> Self {
        HallOrder { rank }
    }

    pub fn compare(&self, a: &CommutatorTree, b: &CommutatorTree) -> Ordering {
        a.weight()
            .cmp(&b.weight())
            .then_with(|| a.leaves().cmp(&b.leaves()))
            .then_with(|| match (a, b) {
                (CommutatorTree::Node(al, ar), CommutatorTree::Node(bl, br)) => {
                    self.compare(al, bl).then_with(|| self.compare(ar, br))
                }
                _ => Ordering::Equal,
            })
    }
}

/// Admissibility of a tree as a basic commutator.
pub fn is_basic(t: &CommutatorTree, order: &HallOrder) -> bool {
    match t {
        CommutatorTree::Leaf(g) => g.slot() < order.rank,
        CommutatorTree::Node(u, v) => {
            if !is_basic(u, order) || !is_basic(v, order) {
                return false;
            }
            if order.compare(u, v) != Ordering::Greater {
                return false;
            }
            match u.as_ref() {
                CommutatorTree::Leaf(_) => true,
                CommutatorTree::Node(_, u2) => order.compare(u2, v) != Ordering::Greater,
            }
        }
    }
}

/// Number of leaves of `t` labelled `g`.
pub fn nu(t: &CommutatorTree, g: GeneratorId) -> usize {
    match t {
        CommutatorTree::Leaf(h) => usize::from(*h == g),
        CommutatorTree::Node(l, r) => nu(l, g) + nu(r, g),
    }
}

/// Möbius function.
pub fn mobius(mut m: u64) -> i64 {
    assert!(m >= 1);
    let mut result = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

/// Witt number `(1/m) * sum_{d | m} mu(d) n^(m/d)`.
pub fn witt_count(n: u64, m: u32) -> BigInt {
    assert!(n >= 1 && m >= 1);
    let mut total = BigInt::zero();
    for d in 1..=m {
        if m.is_multiple_of(d) {
            let mu = mobius(d as u64);
            if mu != 0 {
                total += BigInt::from(mu) * BigInt::from(n).pow(m / d);
            }
        }
    }
    let q = &total / BigInt::from(m);
    debug_assert!((&q * BigInt::from(m) - &total).is_zero() && !q.is_negative());
    q
}

/// Shape of one basis entry: a generator, or a bracket of two earlier entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryShape {
    Leaf(GeneratorId),
    Node { left: usize, right: usize },
}

#[derive(Debug, Clone)]
pub struct BasisEntry {
    pub weight: usize,
    pub shape: EntryShape,
    pub leaves: Vec<u32>,
}

/// Ordered basic commutators of weights `1..=class` over `rank` generators.
/// Positions increase along the Hall order.
#[derive(Debug, Clone)]
pub struct HallBasis {
    rank: usize,
    class: usize,
    entries: Vec<BasisEntry>,
    strata: Vec<Range<usize>>,
    by_children: HashMap<(usize, usize), usize>,
}

impl HallBasis {
    pub fn new(rank: usize, class: usize) -> Result<Self> {
        Self::with_limit(rank, class, DEFAULT_MAX_WITT)
    }

    /// Builds the basis, refusing when the Witt total exceeds `max_witt`.
    pub fn with_limit(rank: usize, class: usize, max_witt: u128) -> Result<Self> {
        if rank == 0 || class == 0 {
            return Err(Error::InvalidArgument(format!(
                "rank and class must be positive (got rank {rank}, class {class})"
            )));
        }
        let total: BigInt = (1..=class as u32).map(|m| witt_count(rank as u64, m)).sum();
        let needed: u128 = total.try_into().unwrap_or(u128::MAX);
        if needed > max_witt {
            return Err(Error::ResourceCap {
                what: "basic commutators",
                needed,
                limit: max_witt,
            });
        }

        let mut entries: Vec<BasisEntry> = (1..=rank as u32)
            .map(|i| BasisEntry {
                weight: 1,
                shape: EntryShape::Leaf(GeneratorId::new(i)),
                leaves: vec![i],
            })
            .collect();
        let mut strata: Vec<Range<usize>> = std::iter::once(0..rank).collect();

        for m in 2..=class {
            let mut fresh: Vec<BasisEntry> = Vec::new();
            for wv in 1..=m / 2 {
                let wu = m - wv;
                for u in strata[wu - 1].clone() {
                    for v in strata[wv - 1].clone() {
                        // positions follow the order, so u > v is u > v as indices
                        if u <= v {
                            continue;
                        }
                        if let EntryShape::Node { right: u2, .. } = entries[u].shape {
                            if u2 > v {
                                continue;
                            }
                        }
                        let mut leaves = entries[u].leaves.clone();
                        leaves.extend_from_slice(&entries[v].leaves);
                        fresh.push(BasisEntry {
                            weight: m,
                            shape: EntryShape::Node { left: u, right: v },
                            leaves,
                        });
                    }
                }
            }
            fresh.sort_by(|a, b| {
                a.leaves.cmp(&b.leaves).then_with(|| match (a.shape, b.shape) {
                    (EntryShape::Node { left: al, right: ar }, EntryShape::Node { left: bl, right: br }) => {
                        al.cmp(&bl).then(ar.cmp(&br))
                    }
                    _ => Ordering::Equal,
                })
            });
            let start = entries.len();
            entries.extend(fresh);
            strata.push(start..entries.len());
        }

        let by_children = entries
            .iter()
            .enumerate()
            .filter_map(|(pos, e)| match e.shape {
                EntryShape::Node { left, right } => Some(((left, right), pos)),
                EntryShape::Leaf(_) => None,
            })
            .collect();

        Ok(HallBasis {
            rank,
            class,
            entries,
            strata,
            by_children,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BasisEntry] {
        &self.entries
    }

    pub fn entry(&self, pos: usize) -> &BasisEntry {
        &self.entries[pos]
    }

    pub fn weight(&self, pos: usize) -> usize {
        self.entries[pos].weight
    }

    /// Positions of the weight-`m` basic commutators.
    pub fn stratum(&self, m: usize) -> Range<usize> {
        self.strata[m - 1].clone()
    }

    pub fn stratum_sizes(&self) -> Vec<usize> {
        self.strata.iter().map(|r| r.len()).collect()
    }

    pub fn tree(&self, pos: usize) -> CommutatorTree {
        match self.entries[pos].shape {
            EntryShape::Leaf(g) => CommutatorTree::Leaf(g),
            EntryShape::Node { left, right } => CommutatorTree::node(self.tree(left), self.tree(right)),
        }
    }

    pub fn trees(&self, m: usize) -> Vec<CommutatorTree> {
        self.stratum(m).map(|p| self.tree(p)).collect()
    }

    /// Position of `t` in the basis, or `None` if it is not basic here.
    pub fn position(&self, t: &CommutatorTree) -> Option<usize> {
        match t {
            CommutatorTree::Leaf(g) => (g.slot() < self.rank).then(|| g.slot()),
            CommutatorTree::Node(l, r) => {
                let key = (self.position(l)?, self.position(r)?);
                self.by_children.get(&key).copied()
            }
        }
    }

    /// Bracket syntax of the entry at `pos`.
    pub fn format_entry(&self, pos: usize) -> String {
        self.tree(pos).to_string()
    }
}

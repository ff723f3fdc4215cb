//! Tamari intervals, duality, rise, canopy statistics and the family
//! predicates read directly off the pair of trees.

mod partition;

pub use partition::{iota, NonCrossingPartition};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trees::{enumerate_binary_trees_with_cap, BinaryTree};

/// Largest size accepted by [`enumerate_intervals`].
pub const DEFAULT_INTERVAL_CAP: usize = 9;

/// A pair `(lower, upper)` of binary trees of the same size `n >= 1` with
/// `lower <= upper` in the Tamari order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IntervalRepr", into = "IntervalRepr")]
pub struct TamariInterval {
    lower: BinaryTree,
    upper: BinaryTree,
}

/// Type of a canopy position, written `[upper; lower]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CanopyType {
    /// `[1; 1]`
    S11,
    /// `[0; 0]`
    S00,
    /// `[1; 0]`
    M10,
}

impl CanopyType {
    pub fn name(self) -> &'static str {
        match self {
            CanopyType::S11 => "S11",
            CanopyType::S00 => "S00",
            CanopyType::M10 => "M10",
        }
    }
}

/// Validates and builds the interval `(lower, upper)`.
pub fn make_interval(lower: BinaryTree, upper: BinaryTree) -> Result<TamariInterval> {
    TamariInterval::new(lower, upper)
}

/// The pair `((lower, ε), (ε, upper))`, one size larger.
pub fn rise(lower: &BinaryTree, upper: &BinaryTree) -> (BinaryTree, BinaryTree) {
    let leaf = BinaryTree::leaf();
    (BinaryTree::node(lower, &leaf), BinaryTree::node(&leaf, upper))
}

/// Pairs `(lower arc, upper arc)` of the smooth drawings of `lower` and `upper`
/// with `x'_l < x_l <= x'_r < x_r`.
///
/// Arcs are given by their index in [`BinaryTree::smooth_arcs`]. The pair is a
/// Tamari interval iff the result is empty.
pub fn smooth_flawed_pairs(lower: &BinaryTree, upper: &BinaryTree) -> Vec<(usize, usize)> {
    let la = lower.smooth_arcs();
    let ua = upper.smooth_arcs();
    let mut out = Vec::new();
    for (i, &(xl, xr)) in la.iter().enumerate() {
        for (j, &(yl, yr)) in ua.iter().enumerate() {
            if yl < xl && xl <= yr && yr < xr {
                out.push((i, j));
            }
        }
    }
    out
}

/// Smallest `l - q` over arcs `(p, q)` of `upper` and `(l, r)` of `lower` with
/// `q < l`, i.e. an upper arc lying entirely to the left of a lower arc.
pub fn min_separation_gap(lower: &BinaryTree, upper: &BinaryTree) -> Option<usize> {
    let la = lower.smooth_arcs();
    let ua = upper.smooth_arcs();
    let mut best: Option<usize> = None;
    for &(_, q) in &ua {
        for &(l, _) in &la {
            if q < l {
                best = Some(best.map_or(l - q, |b| b.min(l - q)));
            }
        }
    }
    best
}

impl TamariInterval {
    pub fn new(lower: BinaryTree, upper: BinaryTree) -> Result<Self> {
        if lower.size() != upper.size() {
            return Err(Error::SizeMismatch(lower.size(), upper.size()));
        }
        if lower.size() == 0 {
            return Err(Error::UnsupportedSize(0));
        }
        if !lower.tamari_leq(&upper)? {
            return Err(Error::NotAnInterval);
        }
        Ok(TamariInterval { lower, upper })
    }

    /// The interval `(T, T)`.
    pub fn trivial(tree: BinaryTree) -> Result<Self> {
        Self::new(tree.clone(), tree)
    }

    pub fn size(&self) -> usize {
        self.lower.size()
    }

    pub fn lower(&self) -> &BinaryTree {
        &self.lower
    }

    pub fn upper(&self) -> &BinaryTree {
        &self.upper
    }

    pub fn into_pair(self) -> (BinaryTree, BinaryTree) {
        (self.lower, self.upper)
    }

    /// `(mir(upper), mir(lower))`.
    pub fn dual(&self) -> TamariInterval {
        TamariInterval {
            lower: self.upper.mirror(),
            upper: self.lower.mirror(),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.lower == self.upper.mirror()
    }

    pub fn rise(&self) -> (BinaryTree, BinaryTree) {
        rise(&self.lower, &self.upper)
    }

    /// Inverse of [`rise`]: requires `lower = (L, ε)`, `upper = (ε, U)` and
    /// `(L, U)` to be an interval of size at least 1.
    pub fn derise(&self) -> Result<TamariInterval> {
        let (ll, lr) = self.lower.children().ok_or(Error::NotDerisable)?;
        let (ul, ur) = self.upper.children().ok_or(Error::NotDerisable)?;
        if !lr.is_leaf() || !ul.is_leaf() {
            return Err(Error::NotDerisable);
        }
        TamariInterval::new(ll, ur).map_err(|_| Error::NotDerisable)
    }

    /// Joint canopy, one entry per leaf position `0..=n`.
    pub fn joint_canopy(&self) -> Vec<CanopyType> {
        self.upper
            .canopy()
            .into_iter()
            .zip(self.lower.canopy())
            .map(|(u, l)| match (u, l) {
                (1, 1) => CanopyType::S11,
                (0, 0) => CanopyType::S00,
                (1, 0) => CanopyType::M10,
                _ => unreachable!("canopy [0; 1] cannot occur in an interval"),
            })
            .collect()
    }

    /// Numbers `(i, j, m)` of canopy positions of types `S11`, `S00`, `M10`.
    pub fn canopy_type_counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for t in self.joint_canopy() {
            match t {
                CanopyType::S11 => c.0 += 1,
                CanopyType::S00 => c.1 += 1,
                CanopyType::M10 => c.2 += 1,
            }
        }
        c
    }

    /// Entry `k` is `(d↗(upper)_k, d↙(lower)_k)`.
    pub fn bi_length_vector(&self) -> Vec<(usize, usize)> {
        self.upper
            .degree_vector()
            .into_iter()
            .zip(self.lower.dual_degree_vector())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.lower == self.upper
    }

    pub fn is_synchronized(&self) -> bool {
        self.lower.canopy() == self.upper.canopy()
    }

    /// `rise(I)` is again an interval.
    pub fn is_modern(&self) -> bool {
        self.is_k_modern(1)
    }

    /// `rise^i(I)` is an interval for every `i <= k`.
    pub fn is_k_modern(&self, k: usize) -> bool {
        let (mut lower, mut upper) = (self.lower.clone(), self.upper.clone());
        for _ in 0..k {
            (lower, upper) = rise(&lower, &upper);
            if !lower.tamari_leq(&upper).expect("rise preserves sizes") {
                return false;
            }
        }
        true
    }

    /// No arc of the upper tree lies entirely to the left of an arc of the
    /// lower tree. Every iterated rise then stays an interval.
    pub fn is_infinitely_modern(&self) -> bool {
        min_separation_gap(&self.lower, &self.upper).is_none()
    }

    /// `ι(lower)` refines `ι(upper)`.
    pub fn is_kreweras(&self) -> bool {
        iota(&self.lower)
            .refines(&iota(&self.upper))
            .expect("equal sizes")
    }

    /// Image of a modern interval under rise. The size-1 interval counts as
    /// new, being the rise of the empty interval.
    pub fn is_new(&self) -> bool {
        if self.size() == 1 {
            return true;
        }
        self.derise().is_ok_and(|i| i.is_modern())
    }
}

/// All intervals of size `n`, ordered by lower then upper tree.
pub fn enumerate_intervals(n: usize) -> Result<Vec<TamariInterval>> {
    enumerate_intervals_with_cap(n, DEFAULT_INTERVAL_CAP)
}

pub fn enumerate_intervals_with_cap(n: usize, cap: usize) -> Result<Vec<TamariInterval>> {
    if n > cap {
        return Err(Error::SizeCapExceeded { size: n, cap });
    }
    if n == 0 {
        return Err(Error::UnsupportedSize(0));
    }
    let trees = enumerate_binary_trees_with_cap(n, cap.max(n))?;
    let vectors: Vec<Vec<usize>> = trees.iter().map(|t| t.bracket_vector()).collect();
    let chunks: Vec<Vec<TamariInterval>> = (0..trees.len())
        .into_par_iter()
        .map(|a| {
            (0..trees.len())
                .filter(|&b| vectors[a].iter().zip(&vectors[b]).all(|(x, y)| x <= y))
                .map(|b| TamariInterval {
                    lower: trees[a].clone(),
                    upper: trees[b].clone(),
                })
                .collect()
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

impl fmt::Debug for TamariInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TamariInterval({self})")
    }
}

/// `lower|upper` as Dyck words.
impl fmt::Display for TamariInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lower, self.upper)
    }
}

impl FromStr for TamariInterval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, u) = s
            .trim()
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected `lower|upper`, got {s:?}")))?;
        TamariInterval::new(l.parse()?, u.parse()?)
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalRepr {
    n: usize,
    lower: String,
    upper: String,
}

impl TryFrom<IntervalRepr> for TamariInterval {
    type Error = Error;

    fn try_from(r: IntervalRepr) -> Result<Self> {
        let i = TamariInterval::new(r.lower.parse()?, r.upper.parse()?)?;
        if i.size() != r.n {
            return Err(Error::SizeMismatch(r.n, i.size()));
        }
        Ok(i)
    }
}

impl From<TamariInterval> for IntervalRepr {
    fn from(i: TamariInterval) -> Self {
        IntervalRepr {
            n: i.size(),
            lower: i.lower.to_string(),
            upper: i.upper.to_string(),
        }
    }
}

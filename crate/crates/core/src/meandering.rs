//! Meandering diagrams and the bijection `φ` with pairs of binary trees.
//!
//! A diagram of size `n` lives on the axis points `0, 1/2, 1, .., n`: black
//! points are the integers `0..=n`, white points are the half-integers
//! `t - 1/2` for `t` in `1..=n`. Each white point carries one upper arc, going
//! left to the black point `up[t]`, and one lower arc, going right to the black
//! point `lo[t]`. Vectors are stored 0-based, entry `t - 1` for white point `t`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intervals::TamariInterval;
use crate::trees::BinaryTree;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr")]
pub struct MeanderingDiagram {
    n: usize,
    up: Vec<usize>,
    lo: Vec<usize>,
}

#[derive(Deserialize)]
struct DiagramRepr {
    n: usize,
    up: Vec<usize>,
    lo: Vec<usize>,
}

impl TryFrom<DiagramRepr> for MeanderingDiagram {
    type Error = Error;

    fn try_from(r: DiagramRepr) -> Result<Self> {
        if r.up.len() != r.n || r.lo.len() != r.n {
            return Err(Error::InvalidDiagram(format!(
                "expected arrays of length {}, got {} and {}",
                r.n,
                r.up.len(),
                r.lo.len()
            )));
        }
        MeanderingDiagram::new(r.up, r.lo)
    }
}

impl MeanderingDiagram {
    /// Checks ranges and that upper and lower arcs are each non-crossing.
    pub fn new(up: Vec<usize>, lo: Vec<usize>) -> Result<Self> {
        let n = up.len();
        if lo.len() != n {
            return Err(Error::SizeMismatch(n, lo.len()));
        }
        for t in 1..=n {
            if up[t - 1] > t - 1 {
                return Err(Error::InvalidDiagram(format!("up[{t}] = {} > {}", up[t - 1], t - 1)));
            }
            if lo[t - 1] < t || lo[t - 1] > n {
                return Err(Error::InvalidDiagram(format!(
                    "lo[{t}] = {} outside {t}..={n}",
                    lo[t - 1]
                )));
            }
        }
        let d = MeanderingDiagram { n, up, lo };
        d.check_non_crossing()?;
        Ok(d)
    }

    fn check_non_crossing(&self) -> Result<()> {
        // Upper: for s < t, up[t] <= up[s] or up[t] >= s.
        // Lower: for s < t, lo[s] <= t - 1 or lo[s] >= lo[t].
        // Each is checked with a stack of the arcs spanning the current white
        // point, innermost on top.
        let n = self.n;
        let mut open: Vec<usize> = Vec::new();
        for t in 1..=n {
            // lower arcs starting strictly left of t that are still open
            while open.last().is_some_and(|&e| e < t) {
                open.pop();
            }
            let e = self.lo[t - 1];
            if open.last().is_some_and(|&top| top < e) {
                return Err(Error::InvalidDiagram(format!("lower arc at {t} crosses")));
            }
            open.push(e);
        }
        let mut open: Vec<usize> = Vec::new();
        for t in (1..=n).rev() {
            // upper arcs ending strictly right of t whose left end is >= t
            while open.last().is_some_and(|&e| e >= t) {
                open.pop();
            }
            let e = self.up[t - 1];
            if open.last().is_some_and(|&top| top > e) {
                return Err(Error::InvalidDiagram(format!("upper arc at {t} crosses")));
            }
            open.push(e);
        }
        Ok(())
    }

    /// The empty diagram, a single black point.
    pub fn empty() -> Self {
        MeanderingDiagram {
            n: 0,
            up: Vec::new(),
            lo: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Black endpoints of upper arcs, entry `t - 1` for white point `t`.
    pub fn up(&self) -> &[usize] {
        &self.up
    }

    /// Black endpoints of lower arcs, entry `t - 1` for white point `t`.
    pub fn lo(&self) -> &[usize] {
        &self.lo
    }

    /// Edges `(up[t], lo[t])` of the underlying graph on black points.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.up.iter().copied().zip(self.lo.iter().copied()).collect()
    }

    /// Number of upper arcs at each black point.
    pub fn upper_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n + 1];
        for &u in &self.up {
            d[u] += 1;
        }
        d
    }

    /// Number of lower arcs at each black point.
    pub fn lower_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n + 1];
        for &l in &self.lo {
            d[l] += 1;
        }
        d
    }

    /// Whether the underlying graph is connected, hence a tree.
    pub fn is_meandering_tree(&self) -> bool {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut merged = 0;
        for (a, b) in self.edges() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                merged += 1;
            }
        }
        merged == self.n
    }

    /// Pairs `(s, t)` of a lower arc at `s` and an upper arc at `t` with
    /// `up[t] < s - 1/2 < t - 1/2 < lo[s]`.
    pub fn flawed_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in 1..=self.n {
            for t in s + 1..=self.lo[s - 1].min(self.n) {
                if self.up[t - 1] < s {
                    out.push((s, t));
                }
            }
        }
        out
    }

    /// Pairs `(s, t)` of a lower arc at `s` and an upper arc at `t` with
    /// `s - 1/2 < up[t] < lo[s] < t - 1/2`.
    pub fn non_kreweras_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in 1..=self.n {
            let l = self.lo[s - 1];
            for t in l + 1..=self.n {
                let u = self.up[t - 1];
                if s <= u && u < l {
                    out.push((s, t));
                }
            }
        }
        out
    }

    /// Rotation by a half-turn: upper and lower parts are exchanged.
    pub fn half_turn(&self) -> MeanderingDiagram {
        let n = self.n;
        let up = (1..=n).map(|t| n - self.lo[n - t]).collect();
        let lo = (1..=n).map(|t| n - self.up[n - t]).collect();
        MeanderingDiagram { n, up, lo }
    }

    /// Splits a meandering tree at the largest upper arc leaving black point 0.
    ///
    /// With that arc at white point `i + 1`, the left part is the diagram on
    /// points `0..=i` and the right part the diagram on points `i+1..=n`,
    /// shifted to start at 0. The returned `j` is the black endpoint of the
    /// removed lower arc, relative to the right part.
    pub fn decompose(&self) -> Result<(MeanderingDiagram, MeanderingDiagram, usize)> {
        if self.n == 0 {
            return Err(Error::InvalidDecomposition("empty diagram".into()));
        }
        if !self.is_meandering_tree() {
            return Err(Error::NotATree);
        }
        let t0 = (1..=self.n)
            .rev()
            .find(|&t| self.up[t - 1] == 0)
            .expect("white point 1 always reaches black point 0");
        let left = MeanderingDiagram {
            n: t0 - 1,
            up: self.up[..t0 - 1].to_vec(),
            lo: self.lo[..t0 - 1].to_vec(),
        };
        let right = MeanderingDiagram {
            n: self.n - t0,
            up: self.up[t0..].iter().map(|&u| u - t0).collect(),
            lo: self.lo[t0..].iter().map(|&l| l - t0).collect(),
        };
        Ok((left, right, self.lo[t0 - 1] - t0))
    }

    /// Black points of `self` not enclosed by any lower arc; these are the
    /// admissible values of `j` in [`MeanderingDiagram::compose`].
    pub fn exposed_points(&self) -> Vec<usize> {
        let mut covered = vec![false; self.n + 1];
        for t in 1..=self.n {
            // arc from t - 1/2 to lo[t] encloses black points t..lo[t]-1
            for c in covered.iter_mut().take(self.lo[t - 1]).skip(t) {
                *c = true;
            }
        }
        (0..=self.n).filter(|&j| !covered[j]).collect()
    }

    /// Inverse of [`MeanderingDiagram::decompose`].
    pub fn compose(left: &MeanderingDiagram, right: &MeanderingDiagram, j: usize) -> Result<Self> {
        if j > right.n {
            return Err(Error::InvalidDecomposition(format!(
                "j = {j} exceeds the right size {}",
                right.n
            )));
        }
        if !right.exposed_points().contains(&j) {
            return Err(Error::InvalidDecomposition(format!(
                "black point {j} is enclosed by a lower arc"
            )));
        }
        let t0 = left.n + 1;
        let mut up = left.up.clone();
        let mut lo = left.lo.clone();
        up.push(0);
        lo.push(t0 + j);
        up.extend(right.up.iter().map(|&u| u + t0));
        lo.extend(right.lo.iter().map(|&l| l + t0));
        MeanderingDiagram::new(up, lo)
    }
}

/// `φ(lower, upper)`: `lo[t] = t + V(lower)_t`, `up[t] = t - 1 - V*(upper)_t`.
pub fn phi(lower: &BinaryTree, upper: &BinaryTree) -> Result<MeanderingDiagram> {
    if lower.size() != upper.size() {
        return Err(Error::SizeMismatch(lower.size(), upper.size()));
    }
    let n = lower.size();
    let a = lower.bracket_vector();
    let b = upper.dual_bracket_vector();
    Ok(MeanderingDiagram {
        n,
        up: (1..=n).map(|t| t - 1 - b[t - 1]).collect(),
        lo: (1..=n).map(|t| t + a[t - 1]).collect(),
    })
}

/// `φ` restricted to intervals.
pub fn phi_interval(i: &TamariInterval) -> MeanderingDiagram {
    phi(i.lower(), i.upper()).expect("interval trees have equal sizes")
}

/// Inverse of [`phi`].
pub fn psi(m: &MeanderingDiagram) -> (BinaryTree, BinaryTree) {
    let a: Vec<usize> = (1..=m.n).map(|t| m.lo[t - 1] - t).collect();
    let b: Vec<usize> = (1..=m.n).map(|t| t - 1 - m.up[t - 1]).collect();
    let lower = BinaryTree::from_bracket_vector(&a).expect("non-crossing lower arcs");
    let upper = BinaryTree::from_dual_bracket_vector(&b).expect("non-crossing upper arcs");
    (lower, upper)
}

/// `ψ` on a meandering tree, returning the interval.
pub fn psi_interval(m: &MeanderingDiagram) -> Result<TamariInterval> {
    if !m.is_meandering_tree() {
        return Err(Error::NotATree);
    }
    let (lower, upper) = psi(m);
    TamariInterval::new(lower, upper)
}

/// All meandering trees of size `n`, built recursively with
/// [`MeanderingDiagram::compose`].
pub fn meandering_trees_by_composition(n: usize) -> Vec<MeanderingDiagram> {
    let mut by_size: Vec<Vec<MeanderingDiagram>> = vec![vec![MeanderingDiagram::empty()]];
    for size in 1..=n {
        let mut all = Vec::new();
        for i in 0..size {
            let k = size - 1 - i;
            for right in &by_size[k] {
                let exposed = right.exposed_points();
                for left in &by_size[i] {
                    for &j in &exposed {
                        all.push(MeanderingDiagram::compose(left, right, j).expect("admissible j"));
                    }
                }
            }
        }
        by_size.push(all);
    }
    by_size.swap_remove(n)
}

/// Number of meandering trees of each size `0..=n`, from the recursive
/// decomposition. Only sizes below `n` are materialized.
pub fn count_meandering_trees(n: usize) -> Vec<u128> {
    let mut counts: Vec<u128> = vec![1];
    // exposed[k]: total number of admissible j over all trees of size k
    let mut exposed: Vec<u128> = Vec::new();
    let mut trees: Vec<MeanderingDiagram> = vec![MeanderingDiagram::empty()];
    for size in 1..=n {
        exposed.push(trees.iter().map(|t| t.exposed_points().len() as u128).sum());
        let total = (0..size)
            .map(|i| counts[i] * exposed[size - 1 - i])
            .sum::<u128>();
        counts.push(total);
        if size < n {
            trees = meandering_trees_by_composition(size);
        }
    }
    counts
}

impl fmt::Debug for MeanderingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MeanderingDiagram(up={:?}, lo={:?})", self.up, self.lo)
    }
}

impl fmt::Display for MeanderingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

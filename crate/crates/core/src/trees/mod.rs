//! Binary trees, their vector encodings and the Tamari order.
//!
//! A [`BinaryTree`] of size `n` has its nodes labelled `1..=n` in infix order
//! and its leaves placed at positions `0..=n` from left to right. Every vector
//! returned here is indexed accordingly: node-indexed vectors have length `n`
//! (entry `i - 1` belongs to node `i`), leaf-indexed vectors have length `n + 1`.
//!
//! Internally a tree is stored as the pair of its bracket vector (right subtree
//! sizes) and dual bracket vector (left subtree sizes). Both are determined by
//! the shape, so structural equality is plain vector equality and no operation
//! recurses on the tree depth.

mod dyck;

pub use dyck::{DyckWalk, Step};

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest size accepted by [`enumerate_binary_trees`].
pub const DEFAULT_TREE_CAP: usize = 12;

/// A binary tree: either a leaf or a node with a left and a right subtree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryTree {
    right: Vec<usize>,
    left: Vec<usize>,
}

impl BinaryTree {
    /// The tree reduced to a single leaf.
    pub fn leaf() -> Self {
        BinaryTree {
            right: Vec::new(),
            left: Vec::new(),
        }
    }

    /// The tree `(left, right)`.
    pub fn node(left: &BinaryTree, right: &BinaryTree) -> Self {
        let n = left.size() + right.size() + 1;
        let mut r = Vec::with_capacity(n);
        let mut l = Vec::with_capacity(n);
        r.extend_from_slice(&left.right);
        l.extend_from_slice(&left.left);
        r.push(right.size());
        l.push(left.size());
        r.extend_from_slice(&right.right);
        l.extend_from_slice(&right.left);
        BinaryTree { right: r, left: l }
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        self.right.len()
    }

    pub fn is_leaf(&self) -> bool {
        self.right.is_empty()
    }

    /// Infix label of the root, `None` for a leaf.
    pub fn root(&self) -> Option<usize> {
        let n = self.size();
        (1..=n).find(|&i| self.left[i - 1] == i - 1 && self.right[i - 1] == n - i)
    }

    /// Left and right subtrees of the root, `None` for a leaf.
    pub fn children(&self) -> Option<(BinaryTree, BinaryTree)> {
        let r = self.root()?;
        let left = BinaryTree {
            right: self.right[..r - 1].to_vec(),
            left: self.left[..r - 1].to_vec(),
        };
        let right = BinaryTree {
            right: self.right[r..].to_vec(),
            left: self.left[r..].to_vec(),
        };
        Some((left, right))
    }

    /// Size of the right subtree of node `i` (1-based).
    pub fn right_size(&self, i: usize) -> usize {
        self.right[i - 1]
    }

    /// Size of the left subtree of node `i` (1-based).
    pub fn left_size(&self, i: usize) -> usize {
        self.left[i - 1]
    }

    /// Parent of node `i`, together with `true` when `i` is a right child.
    pub fn parent(&self, i: usize) -> Option<(usize, bool)> {
        let lo = i - self.left[i - 1];
        let hi = i + self.right[i - 1];
        if lo >= 2 && lo - 1 + self.right[lo - 2] == hi {
            return Some((lo - 1, true));
        }
        if hi < self.size() && hi + 1 - self.left[hi] == lo {
            return Some((hi + 1, false));
        }
        None
    }

    /// Left child of node `i`, if any.
    pub fn left_child(&self, i: usize) -> Option<usize> {
        let b = self.left[i - 1];
        if b == 0 {
            return None;
        }
        (i - b..i).find(|&k| k - self.left[k - 1] == i - b && k + self.right[k - 1] == i - 1)
    }

    /// Right child of node `i`, if any.
    pub fn right_child(&self, i: usize) -> Option<usize> {
        let a = self.right[i - 1];
        if a == 0 {
            return None;
        }
        (i + 1..=i + a).find(|&k| k - self.left[k - 1] == i + 1 && k + self.right[k - 1] == i + a)
    }

    /// Mirror image, exchanging left and right everywhere.
    pub fn mirror(&self) -> Self {
        BinaryTree {
            right: self.left.iter().rev().copied().collect(),
            left: self.right.iter().rev().copied().collect(),
        }
    }

    /// Bracket vector `(a_1, .., a_n)`: right subtree sizes in infix order.
    pub fn bracket_vector(&self) -> Vec<usize> {
        self.right.clone()
    }

    /// Dual bracket vector `(b_1, .., b_n)`: left subtree sizes in infix order.
    pub fn dual_bracket_vector(&self) -> Vec<usize> {
        self.left.clone()
    }

    /// Decodes a bracket vector.
    ///
    /// A vector is accepted iff `i + a_i <= n` and the ranges `[i, i + a_i]`
    /// are nested: every `j` in `(i, i + a_i]` has `j + a_j <= i + a_i`.
    /// Runs in linear time with a stack of the currently open ranges.
    pub fn from_bracket_vector(v: &[usize]) -> Result<Self> {
        let n = v.len();
        let mut left = vec![0; n];
        // (index, end of its range)
        let mut open: Vec<(usize, usize)> = Vec::new();
        for i in 1..=n {
            let end = i + v[i - 1];
            if end > n {
                return Err(Error::InvalidBracketVector(format!(
                    "entry {i} reaches past the last node"
                )));
            }
            while matches!(open.last(), Some(&(_, e)) if e < i) {
                open.pop();
            }
            match open.last() {
                Some(&(k, e)) => {
                    if end > e {
                        return Err(Error::InvalidBracketVector(format!(
                            "range of entry {i} overlaps the range of entry {k}"
                        )));
                    }
                    left[i - 1] = i - 1 - k;
                }
                None => left[i - 1] = i - 1,
            }
            open.push((i, end));
        }
        Ok(BinaryTree {
            right: v.to_vec(),
            left,
        })
    }

    /// Decodes a dual bracket vector through the mirror symmetry.
    pub fn from_dual_bracket_vector(v: &[usize]) -> Result<Self> {
        let reversed: Vec<usize> = v.iter().rev().copied().collect();
        Ok(Self::from_bracket_vector(&reversed)?.mirror())
    }

    /// Degree vector `d↗(T)`: entry `k` counts the nodes on the maximal left
    /// branch ending at leaf `k`.
    pub fn degree_vector(&self) -> Vec<usize> {
        let mut d = vec![0; self.size() + 1];
        for i in 1..=self.size() {
            d[i - 1 - self.left[i - 1]] += 1;
        }
        d
    }

    /// Dual degree vector `d↙(T)`: entry `k` counts the nodes on the maximal
    /// right branch ending at leaf `k`.
    ///
    /// Positions are not reversed, so `d↙(T)` is `d↗(mir(T))` read backwards.
    pub fn dual_degree_vector(&self) -> Vec<usize> {
        let mut d = vec![0; self.size() + 1];
        for i in 1..=self.size() {
            d[i + self.right[i - 1]] += 1;
        }
        d
    }

    /// Canopy: bit `k` is 1 iff leaf `k` is a left child.
    pub fn canopy(&self) -> Vec<u8> {
        self.degree_vector()
            .into_iter()
            .map(|d| u8::from(d > 0))
            .collect()
    }

    /// Arcs of the smooth drawing, one per node in infix order: the positions
    /// of the leftmost and rightmost leaves of the subtree.
    pub fn smooth_arcs(&self) -> Vec<(usize, usize)> {
        (1..=self.size())
            .map(|i| (i - 1 - self.left[i - 1], i + self.right[i - 1]))
            .collect()
    }

    /// Tamari order, compared on bracket vectors.
    pub fn tamari_leq(&self, other: &BinaryTree) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        Ok(self.right.iter().zip(&other.right).all(|(a, b)| a <= b))
    }

    /// All trees covering `self` by a single right rotation, ordered by the
    /// infix label of the rotated node.
    pub fn right_rotations(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        for i in 1..=self.size() {
            let Some(j) = self.left_child(i) else {
                continue;
            };
            let mut t = self.clone();
            t.right[j - 1] = self.right[j - 1] + 1 + self.right[i - 1];
            t.left[i - 1] = self.right[j - 1];
            out.push(t);
        }
        out
    }

    /// Dyck walk `D(L) U D(R) D`, built iteratively.
    pub fn to_dyck(&self) -> DyckWalk {
        let dual = self.dual_degree_vector();
        let mut steps = Vec::with_capacity(2 * self.size());
        for &downs in dual.iter().skip(1) {
            steps.push(Step::Up);
            steps.extend(std::iter::repeat_n(Step::Down, downs));
        }
        DyckWalk::from_steps_unchecked(steps)
    }

    /// Inverse of [`BinaryTree::to_dyck`].
    pub fn from_dyck(walk: &DyckWalk) -> Self {
        let n = walk.semilength();
        let mut right = vec![0; n];
        let mut stack = Vec::new();
        let mut ups = 0;
        for step in walk.steps() {
            match step {
                Step::Up => {
                    ups += 1;
                    stack.push(ups);
                }
                Step::Down => {
                    let i = stack.pop().expect("validated Dyck walk");
                    right[i - 1] = ups - i;
                }
            }
        }
        Self::from_bracket_vector(&right).expect("Dyck walks encode valid bracket vectors")
    }

    /// Nested-parenthesis rendering, `.` for a leaf: `((.,.),.)`.
    pub fn to_nested(&self) -> String {
        enum Task {
            Tree(usize, usize),
            Text(&'static str),
        }
        let mut out = String::new();
        // Each task is a subtree on an infix range `[lo, hi]` (empty when lo > hi).
        let mut stack = vec![Task::Tree(1, self.size())];
        while let Some(task) = stack.pop() {
            match task {
                Task::Text(s) => out.push_str(s),
                Task::Tree(lo, hi) if lo > hi => out.push('.'),
                Task::Tree(lo, hi) => {
                    let r = (lo..=hi)
                        .find(|&k| k + self.right[k - 1] == hi)
                        .expect("range is a subtree");
                    stack.push(Task::Text(")"));
                    stack.push(Task::Tree(r + 1, hi));
                    stack.push(Task::Text(","));
                    stack.push(Task::Tree(lo, r - 1));
                    stack.push(Task::Text("("));
                }
            }
        }
        out
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryTree{}", self.to_nested())
    }
}

/// Serializes as the Dyck word; a leaf is the empty string.
impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dyck())
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::from_dyck(&s.parse()?))
    }
}

/// All trees of size `n`, at most [`DEFAULT_TREE_CAP`].
pub fn enumerate_binary_trees(n: usize) -> Result<Vec<BinaryTree>> {
    enumerate_binary_trees_with_cap(n, DEFAULT_TREE_CAP)
}

/// All `Catalan(n)` trees of size `n`, ordered by size of the left subtree
/// and then recursively.
pub fn enumerate_binary_trees_with_cap(n: usize, cap: usize) -> Result<Vec<BinaryTree>> {
    if n > cap {
        return Err(Error::SizeCapExceeded { size: n, cap });
    }
    let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::leaf()]];
    for k in 1..=n {
        let mut level = Vec::new();
        for s in 0..k {
            for l in &by_size[s] {
                for r in &by_size[k - 1 - s] {
                    level.push(BinaryTree::node(l, r));
                }
            }
        }
        by_size.push(level);
    }
    Ok(by_size.swap_remove(n))
}

/// Reflexive-transitive closure of right rotations, by breadth-first search.
/// Only meant for small sizes.
pub fn rotation_closure(tree: &BinaryTree) -> HashSet<BinaryTree> {
    let mut seen = HashSet::from([tree.clone()]);
    let mut queue = VecDeque::from([tree.clone()]);
    while let Some(t) = queue.pop_front() {
        for s in t.right_rotations() {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ta() -> BinaryTree {
        "UUDD".parse().unwrap()
    }

    fn tb() -> BinaryTree {
        "UDUD".parse().unwrap()
    }

    fn leaf() -> BinaryTree {
        BinaryTree::leaf()
    }

    // Recursive reference decoder: the root of a range is the smallest index
    // whose right range reaches the end of the range.
    fn decode_recursive(v: &[usize], lo: usize, hi: usize) -> Option<BinaryTree> {
        if lo > hi {
            return Some(BinaryTree::leaf());
        }
        let r = (lo..=hi).find(|&r| r + v[r - 1] == hi)?;
        let l = decode_recursive(v, lo, r - 1)?;
        let rt = decode_recursive(v, r + 1, hi)?;
        Some(BinaryTree::node(&l, &rt))
    }

    #[test]
    fn small_shapes() {
        assert_eq!(ta(), BinaryTree::node(&leaf(), &BinaryTree::node(&leaf(), &leaf())));
        assert_eq!(tb(), BinaryTree::node(&BinaryTree::node(&leaf(), &leaf()), &leaf()));
        assert_eq!(ta().to_nested(), "(.,(.,.))");
        assert_eq!(leaf().to_string(), "");
        assert_eq!(ta().children(), Some((leaf(), BinaryTree::node(&leaf(), &leaf()))));
        assert_eq!(leaf().children(), None);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_binary_trees(0).unwrap(), vec![leaf()]);
        assert_eq!(enumerate_binary_trees(2).unwrap(), vec![ta(), tb()]);
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in catalan.iter().enumerate() {
            let trees = enumerate_binary_trees(n).unwrap();
            assert_eq!(trees.len(), c);
            assert_eq!(trees.iter().collect::<HashSet<_>>().len(), c);
        }
        assert!(matches!(
            enumerate_binary_trees(13),
            Err(Error::SizeCapExceeded { size: 13, cap: 12 })
        ));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(leaf().mirror(), leaf());
        assert_eq!(ta().mirror(), tb());
        for n in 0..=8 {
            for t in enumerate_binary_trees(n).unwrap() {
                assert_eq!(t.mirror().mirror(), t);
                assert_eq!(t.mirror().size(), n);
            }
        }
    }

    #[test]
    fn bracket_vectors() {
        assert_eq!(ta().bracket_vector(), vec![1, 0]);
        assert_eq!(ta().dual_bracket_vector(), vec![0, 0]);
        assert_eq!(tb().bracket_vector(), vec![0, 0]);
        assert_eq!(tb().dual_bracket_vector(), vec![0, 1]);
        for n in 1..=8 {
            for t in enumerate_binary_trees(n).unwrap() {
                let mut rev = t.mirror().bracket_vector();
                rev.reverse();
                assert_eq!(t.dual_bracket_vector(), rev);
                assert_eq!(BinaryTree::from_bracket_vector(&t.bracket_vector()).unwrap(), t);
                assert_eq!(
                    BinaryTree::from_dual_bracket_vector(&t.dual_bracket_vector()).unwrap(),
                    t
                );
                assert_eq!(*t.bracket_vector().last().unwrap(), 0);
            }
        }
    }

    #[test]
    fn bracket_decoding_examples() {
        assert_eq!(BinaryTree::from_bracket_vector(&[1, 0]).unwrap(), ta());
        assert_eq!(BinaryTree::from_bracket_vector(&[0, 0]).unwrap(), tb());
        assert!(BinaryTree::from_bracket_vector(&[2, 0, 0]).is_ok());
        assert!(matches!(
            BinaryTree::from_bracket_vector(&[0, 2, 0]),
            Err(Error::InvalidBracketVector(_))
        ));
    }

    // Every vector of length <= 5 with small entries: the decoder accepts
    // exactly the image of bracket_vector, and agrees with the recursive rule.
    #[test]
    fn bracket_decoding_matches_image() {
        for n in 1..=5 {
            let image: HashSet<Vec<usize>> = enumerate_binary_trees(n)
                .unwrap()
                .iter()
                .map(BinaryTree::bracket_vector)
                .collect();
            let mut v = vec![0; n];
            loop {
                let decoded = BinaryTree::from_bracket_vector(&v);
                assert_eq!(decoded.is_ok(), image.contains(&v), "{v:?}");
                assert_eq!(decoded.ok(), decode_recursive(&v, 1, n), "{v:?}");
                // odometer over entries in 0..=n
                let mut k = 0;
                while k < n && v[k] == n {
                    v[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
                v[k] += 1;
            }
        }
    }

    #[test]
    fn degree_vectors() {
        assert_eq!(ta().degree_vector(), vec![1, 1, 0]);
        assert_eq!(tb().degree_vector(), vec![2, 0, 0]);
        assert_eq!(tb().dual_degree_vector(), vec![0, 1, 1]);
        for n in 1..=8 {
            for t in enumerate_binary_trees(n).unwrap() {
                let d = t.degree_vector();
                assert_eq!(d.iter().sum::<usize>(), n);
                let mut prefix = 0;
                for (i, &x) in d.iter().enumerate().take(n) {
                    prefix += x;
                    assert!(prefix > i);
                }
                let mut mirrored = t.mirror().degree_vector();
                mirrored.reverse();
                assert_eq!(t.dual_degree_vector(), mirrored);
            }
        }
    }

    #[test]
    fn canopy_examples() {
        assert_eq!(ta().canopy(), vec![1, 1, 0]);
        assert_eq!(tb().canopy(), vec![1, 0, 0]);
        for n in 1..=8 {
            for t in enumerate_binary_trees(n).unwrap() {
                let c = t.canopy();
                assert_eq!((c[0], c[n]), (1, 0));
                // leaf k < n is a left child iff node k + 1 has an empty left subtree
                for k in 0..n {
                    assert_eq!(c[k] == 1, t.left_size(k + 1) == 0);
                }
            }
        }
    }

    #[test]
    fn smooth_arc_examples() {
        let single = BinaryTree::node(&leaf(), &leaf());
        assert_eq!(single.smooth_arcs(), vec![(0, 1)]);
        let mut arcs = ta().smooth_arcs();
        arcs.sort();
        assert_eq!(arcs, vec![(0, 2), (1, 2)]);
    }

    // Each unit segment [t-1, t] is covered, the deepest covering arc is
    // unique, and the map segment -> deepest arc is one-to-one.
    #[test]
    fn smooth_arcs_unit_segments() {
        for n in 1..=8 {
            for t in enumerate_binary_trees(n).unwrap() {
                let arcs = t.smooth_arcs();
                let arc_set: HashSet<_> = arcs.iter().copied().collect();
                let mut deepest = HashSet::new();
                for s in 1..=n {
                    let covering: Vec<_> =
                        arcs.iter().filter(|&&(l, r)| l < s && s <= r).collect();
                    let min_len = covering.iter().map(|(l, r)| r - l).min().unwrap();
                    let best: Vec<_> = covering.iter().filter(|(l, r)| r - l == min_len).collect();
                    assert_eq!(best.len(), 1);
                    let &&(xl, xr) = best[0];
                    if xl < s - 1 {
                        assert!(arc_set.contains(&(xl, s - 1)));
                    }
                    if s < xr {
                        assert!(arc_set.contains(&(s, xr)));
                    }
                    deepest.insert((xl, xr));
                }
                assert_eq!(deepest.len(), n);
            }
        }
    }

    #[test]
    fn tamari_order_examples() {
        assert!(tb().tamari_leq(&ta()).unwrap());
        assert!(!ta().tamari_leq(&tb()).unwrap());
        assert_eq!(
            ta().tamari_leq(&leaf()),
            Err(Error::SizeMismatch(2, 0))
        );
    }

    #[test]
    fn rotations_examples() {
        assert!(leaf().right_rotations().is_empty());
        assert_eq!(tb().right_rotations(), vec![ta()]);
        assert!(ta().right_rotations().is_empty());
    }

    #[test]
    fn tamari_order_matches_rotation_closure() {
        for n in 1..=6 {
            let trees = enumerate_binary_trees(n).unwrap();
            for t in &trees {
                let up = rotation_closure(t);
                for s in &trees {
                    let leq = t.tamari_leq(s).unwrap();
                    assert_eq!(leq, up.contains(s));
                    let dual = t
                        .dual_bracket_vector()
                        .iter()
                        .zip(s.dual_bracket_vector())
                        .all(|(x, y)| *x >= y);
                    assert_eq!(leq, dual);
                }
            }
        }
    }

    #[test]
    fn navigation_is_consistent() {
        for n in 1..=7 {
            for t in enumerate_binary_trees(n).unwrap() {
                for i in 1..=n {
                    if let Some(l) = t.left_child(i) {
                        assert_eq!(t.parent(l), Some((i, false)));
                    }
                    if let Some(r) = t.right_child(i) {
                        assert_eq!(t.parent(r), Some((i, true)));
                    }
                }
                assert_eq!(t.parent(t.root().unwrap()), None);
            }
        }
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::trees::BinaryTree;

/// A non-crossing partition of `{1, .., n}`.
///
/// Blocks are kept sorted internally and ordered by their smallest element,
/// so two partitions are equal iff they have the same blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NonCrossingPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut label = vec![usize::MAX; n + 1];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        for (k, b) in blocks.iter().enumerate() {
            for &x in b {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!("element {x} outside 1..={n}")));
                }
                if label[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("element {x} appears twice")));
                }
                label[x] = k;
            }
        }
        if let Some(x) = (1..=n).find(|&x| label[x] == usize::MAX) {
            return Err(Error::InvalidPartition(format!("element {x} is missing")));
        }
        // Scanning left to right, a block may only be resumed when every block
        // opened after it has already been closed.
        let last: Vec<usize> = blocks.iter().map(|b| *b.last().unwrap()).collect();
        let mut open: Vec<usize> = Vec::new();
        for x in 1..=n {
            let b = label[x];
            match open.iter().position(|&o| o == b) {
                Some(p) if p + 1 != open.len() => {
                    return Err(Error::InvalidPartition(format!(
                        "blocks containing {} and {x} cross",
                        blocks[open[p + 1]][0]
                    )));
                }
                Some(_) => {}
                None => open.push(b),
            }
            if last[b] == x {
                open.pop();
            }
        }
        Ok(NonCrossingPartition { n, blocks })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// For each element `x` in `1..=n`, the index of its block (entry `x - 1`).
    pub fn block_labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                label[x - 1] = k;
            }
        }
        label
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &NonCrossingPartition) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let outer = other.block_labels();
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&x| outer[x - 1] == outer[b[0] - 1])))
    }
}

impl fmt::Debug for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

/// Partition of the nodes of `tree` into maximal right branches.
pub fn iota(tree: &BinaryTree) -> NonCrossingPartition {
    let n = tree.size();
    let mut head = vec![0; n + 1];
    // A right child has a larger label than its parent, so increasing label
    // order visits every parent before its right child.
    for i in 1..=n {
        head[i] = match tree.parent(i) {
            Some((p, true)) => head[p],
            _ => i,
        };
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n + 1];
    for i in 1..=n {
        let h = head[i];
        if index[h] == usize::MAX {
            index[h] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[index[h]].push(i);
    }
    NonCrossingPartition::new(n, blocks).expect("right branches form a non-crossing partition")
}

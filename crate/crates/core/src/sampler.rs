//! Exact uniform sampling of bicolored blossoming trees and Tamari intervals
//! through sequences of arity triples and the cycle lemma.

use std::fmt;

use rand::seq::index;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::blossoming::{blossoming_to_interval, propagate_colors, BlossomingTree, Color, Slot};
use crate::error::{Error, Result};
use crate::intervals::TamariInterval;

/// Seeded ChaCha8 generator: the same seed gives the same stream on every
/// platform.
#[derive(Clone, Debug)]
pub struct RandomSource(ChaCha8Rng);

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource(ChaCha8Rng::seed_from_u64(seed))
    }
}

impl RngCore for RandomSource {
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.0.fill_bytes(dst)
    }
}

/// A sequence `(a_0, .., a_{3n+2})` read as `n + 1` triples `(l, m, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkedSequence {
    pub a: Vec<usize>,
}

impl MarkedSequence {
    pub fn new(a: Vec<usize>) -> Self {
        MarkedSequence { a }
    }

    /// The `n` with `3n + 3` entries, if the length allows one.
    pub fn size(&self) -> Option<usize> {
        let len = self.a.len();
        (len >= 6 && len.is_multiple_of(3)).then(|| len / 3 - 1)
    }

    /// Sums `l + m + r` of the triples.
    pub fn blocks(&self) -> Vec<usize> {
        self.a.chunks(3).map(|c| c.iter().sum()).collect()
    }

    /// Entries summing to `n - 1`.
    pub fn is_composition(&self) -> bool {
        self.size().is_some_and(|n| self.a.iter().sum::<usize>() == n - 1)
    }

    /// A composition whose first `i + 1` blocks sum to at least `i` for all
    /// `i < n`.
    pub fn is_marked(&self) -> bool {
        self.is_composition() && prefix_condition(&self.blocks())
    }
}

impl fmt::Display for MarkedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn prefix_condition(blocks: &[usize]) -> bool {
    let n = blocks.len() - 1;
    let mut sum = 0;
    blocks[..n].iter().enumerate().all(|(i, b)| {
        sum += b;
        sum >= i
    })
}

/// Uniform weak composition of `n - 1` into `3n + 3` parts, drawn as a
/// uniform `(n - 1)`-subset of the `4n + 1` star-and-bar positions.
pub fn sample_composition(n: usize, rng: &mut RandomSource) -> Result<MarkedSequence> {
    if n == 0 {
        return Err(Error::UnsupportedSize(0));
    }
    let mut stars = vec![false; 4 * n + 1];
    for k in index::sample(rng, 4 * n + 1, n - 1) {
        stars[k] = true;
    }
    let mut a = vec![0; 3 * n + 3];
    let mut part = 0;
    for star in stars {
        if star {
            a[part] += 1;
        } else {
            part += 1;
        }
    }
    Ok(MarkedSequence { a })
}

/// The cyclic shifts by whole triples of a composition that satisfy the
/// prefix condition. There are always exactly two.
pub fn valid_shifts(s: &MarkedSequence) -> Result<Vec<MarkedSequence>> {
    if !s.is_composition() {
        return Err(Error::InvalidSequence(format!("{s} is not a composition of n - 1 into 3n + 3 parts")));
    }
    let blocks = s.blocks();
    let k = blocks.len();
    let mut out = Vec::with_capacity(2);
    for shift in 0..k {
        let rotated: Vec<usize> = (0..k).map(|i| blocks[(shift + i) % k]).collect();
        if prefix_condition(&rotated) {
            let mut a = s.a[3 * shift..].to_vec();
            a.extend_from_slice(&s.a[..3 * shift]);
            out.push(MarkedSequence { a });
        }
    }
    if out.len() != 2 {
        return Err(Error::CycleLemmaViolation(out.len()));
    }
    Ok(out)
}

fn compositions(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<MarkedSequence>) {
    if parts == 1 {
        prefix.push(total);
        let s = MarkedSequence { a: prefix.clone() };
        if s.is_marked() {
            out.push(s);
        }
        prefix.pop();
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Every marked sequence of size `n`, in lexicographic order.
pub fn enumerate_marked_sequences(n: usize) -> Result<Vec<MarkedSequence>> {
    if n == 0 {
        return Err(Error::UnsupportedSize(0));
    }
    let mut out = Vec::new();
    compositions(n - 1, 3 * n + 3, &mut Vec::new(), &mut out);
    Ok(out)
}

/// A blossoming tree with one marked edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedTree {
    pub tree: BlossomingTree,
    pub edge: usize,
}

/// Reads the triples of `b` marked at `edge`.
///
/// Nodes are listed by first visit of a counterclockwise tour starting at the
/// middle of `edge` along its red half. At each node, read counterclockwise
/// from the half towards the start, `l`, `m` and `r` count the half-edges
/// before the first bud, between the buds and after the second bud.
pub fn vec(b: &BlossomingTree, edge: usize) -> Result<MarkedSequence> {
    if edge >= b.size() {
        return Err(Error::InvalidBlossoming(format!("edge {edge} out of range")));
    }
    let red = if b.color(2 * edge) == Color::Red { 2 * edge } else { 2 * edge + 1 };
    let mut a = Vec::with_capacity(3 * b.node_count());
    for start in [red, red ^ 1] {
        let mut stack = vec![start];
        while let Some(entry) = stack.pop() {
            let v = b.node(entry);
            let r = b.rotation(v);
            let p = b.position(entry);
            let mut counts = [0usize; 3];
            let mut group = 0;
            let mut children = Vec::new();
            for k in 1..r.len() {
                match r[(p + k) % r.len()] {
                    Slot::Bud => group += 1,
                    Slot::Half(h) => {
                        counts[group] += 1;
                        children.push(h ^ 1);
                    }
                }
            }
            a.extend_from_slice(&counts);
            stack.extend(children.into_iter().rev());
        }
    }
    Ok(MarkedSequence { a })
}

/// Inverse of [`vec`]: rebuilds the marked tree, the marked edge being edge 0
/// with its red half at node 0.
pub fn vec_inverse(s: &MarkedSequence) -> Result<MarkedTree> {
    if !s.is_marked() {
        return Err(Error::InvalidSequence(format!("{s} does not satisfy the prefix condition")));
    }
    let blocks = s.blocks();
    let nodes = blocks.len();
    let mut sum = 0;
    let split = (0..nodes)
        .find(|&i| {
            sum += blocks[i];
            sum == i
        })
        .ok_or_else(|| Error::InvalidSequence(format!("{s} has no first tree")))?;

    // Half 2e sits at the parent end of edge e, half 2e + 1 at the child end;
    // edge 0 is the marked edge from node 0 to the second root.
    let mut parent_half = vec![0usize; nodes];
    parent_half[split + 1] = 1;
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut edges = 1;
    for (root, end) in [(0, split + 1), (split + 1, nodes)] {
        let mut stack: Vec<(usize, usize)> = Vec::new();
        if blocks[root] > 0 {
            stack.push((root, blocks[root]));
        }
        for v in root + 1..end {
            let top = stack
                .last_mut()
                .ok_or_else(|| Error::InvalidSequence(format!("{s} has too many nodes")))?;
            children[top.0].push(2 * edges);
            parent_half[v] = 2 * edges + 1;
            edges += 1;
            top.1 -= 1;
            if top.1 == 0 {
                stack.pop();
            }
            if blocks[v] > 0 {
                stack.push((v, blocks[v]));
            }
        }
        if !stack.is_empty() {
            return Err(Error::InvalidSequence(format!("{s} leaves a tree unfinished")));
        }
    }

    let rot: Vec<Vec<Slot>> = (0..nodes)
        .map(|v| {
            let (l, m) = (s.a[3 * v], s.a[3 * v + 1]);
            let mut r = vec![Slot::Half(parent_half[v])];
            for (k, &h) in children[v].iter().enumerate() {
                if k == l || k == l + m {
                    r.push(Slot::Bud);
                }
                if k == l && k == l + m {
                    r.push(Slot::Bud);
                }
                r.push(Slot::Half(h));
            }
            let len = children[v].len();
            r.extend(std::iter::repeat_n(Slot::Bud, 3 + len - r.len()));
            r
        })
        .collect();
    let color = propagate_colors(&rot, 0, Color::Red)?;
    let tree = BlossomingTree::from_parts(rot, color)?;
    Ok(MarkedTree { tree, edge: 0 })
}

/// Uniform bicolored blossoming tree with `n` edges.
pub fn sample_blossoming(n: usize, rng: &mut RandomSource) -> Result<BlossomingTree> {
    let composition = sample_composition(n, rng)?;
    let shifts = valid_shifts(&composition)?;
    let pick = rng.random_range(0..shifts.len());
    Ok(vec_inverse(&shifts[pick])?.tree)
}

/// Uniform Tamari interval of size `n`.
pub fn sample_interval(n: usize, rng: &mut RandomSource) -> Result<TamariInterval> {
    blossoming_to_interval(&sample_blossoming(n, rng)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blossoming::interval_to_blossoming;
    use crate::intervals::enumerate_intervals;
    use std::collections::HashMap;
    use statrs::distribution::{ChiSquared, ContinuousCDF};

    fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
        if parts == 1 {
            return vec![vec![total]];
        }
        let mut out = Vec::new();
        for first in 0..=total {
            for mut rest in compositions(total - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    fn all_marked(n: usize) -> Vec<MarkedSequence> {
        compositions(n - 1, 3 * n + 3)
            .into_iter()
            .map(MarkedSequence::new)
            .filter(|s| s.is_marked())
            .collect()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn p_value(counts: &[u64], draws: u64) -> f64 {
        let expected = draws as f64 / counts.len() as f64;
        let stat: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        1.0 - ChiSquared::new((counts.len() - 1) as f64).unwrap().cdf(stat)
    }

    #[test]
    fn size_one() {
        let s = MarkedSequence::new(vec![0; 6]);
        assert_eq!(valid_shifts(&s).unwrap().len(), 2);
        let t = vec_inverse(&s).unwrap();
        assert_eq!(t.tree.size(), 1);
        assert_eq!(vec(&t.tree, 0).unwrap(), s);
        let only = interval_to_blossoming(&enumerate_intervals(1).unwrap()[0]);
        assert_eq!(t.tree, only);
        let mut rng = RandomSource::new(7);
        for _ in 0..5 {
            assert_eq!(sample_composition(1, &mut rng).unwrap(), s);
        }
    }

    #[test]
    fn cycle_lemma_exhaustive() {
        for n in 1..=5 {
            let all = compositions(n - 1, 3 * n + 3);
            assert_eq!(all.len(), binom(4 * n + 1, n - 1));
            let mut total = 0;
            for a in all {
                let shifts = valid_shifts(&MarkedSequence::new(a)).unwrap();
                assert!(shifts.iter().all(|s| s.is_marked()));
                total += shifts.len();
            }
            assert_eq!(total, (n + 1) * all_marked(n).len());
            assert_eq!(enumerate_marked_sequences(n).unwrap(), all_marked(n));
        }
        let bad = MarkedSequence::new(vec![1, 0, 0, 0, 0, 0]);
        assert!(matches!(valid_shifts(&bad), Err(Error::InvalidSequence(_))));
    }

    #[test]
    fn vec_round_trip_and_multiset() {
        for n in 1..=5 {
            let mut multiset: HashMap<BlossomingTree, usize> = HashMap::new();
            for s in all_marked(n) {
                let t = vec_inverse(&s).unwrap();
                assert_eq!(vec(&t.tree, t.edge).unwrap(), s);
                *multiset.entry(t.tree).or_default() += 1;
            }
            let images: Vec<_> = enumerate_intervals(n).unwrap().iter().map(interval_to_blossoming).collect();
            assert_eq!(multiset.len(), images.len());
            for b in &images {
                assert_eq!(multiset.get(b), Some(&n));
                for e in 0..n {
                    let s = vec(b, e).unwrap();
                    let back = vec_inverse(&s).unwrap();
                    assert_eq!(back.tree, *b);
                }
            }
        }
    }

    #[test]
    fn rejects_invalid_sequences() {
        let s = MarkedSequence::new(vec![0, 0, 0, 0, 0, 0, 0, 1, 0]);
        assert!(matches!(vec_inverse(&s), Err(Error::InvalidSequence(_))));
        assert!(matches!(vec_inverse(&MarkedSequence::new(vec![0; 5])), Err(Error::InvalidSequence(_))));
    }

    #[test]
    fn composition_uniform_at_two() {
        let mut rng = RandomSource::new(1);
        let mut counts = [0u64; 9];
        for _ in 0..9000 {
            let s = sample_composition(2, &mut rng).unwrap();
            counts[s.a.iter().position(|&x| x == 1).unwrap()] += 1;
        }
        assert!(p_value(&counts, 9000) > 0.001);
    }

    #[test]
    fn interval_uniform_at_two() {
        let all = enumerate_intervals(2).unwrap();
        let mut rng = RandomSource::new(2);
        let mut counts = vec![0u64; all.len()];
        for _ in 0..30000 {
            let i = sample_interval(2, &mut rng).unwrap();
            counts[all.iter().position(|j| *j == i).unwrap()] += 1;
        }
        assert!(p_value(&counts, 30000) > 0.001);
    }

    #[test]
    fn seeded_output_is_reproducible() {
        let draw = |seed| {
            let mut rng = RandomSource::new(seed);
            (0..20).map(|_| sample_interval(6, &mut rng).unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(draw(11), draw(11));
        assert_ne!(draw(11), draw(12));
    }
}

use std::collections::VecDeque;

use crate::intervals::CanopyType;

use super::{propagate_colors, BlossomingTree, Color, Slot};

/// Result of merging the two consecutive buds of every node of a
/// synchronized blossoming tree: one bud per node, nodes colored by the color
/// of their half-edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneBlossomingTree {
    pub rotations: Vec<Vec<Slot>>,
    pub node_colors: Vec<Color>,
}

impl BlossomingTree {
    /// `S11` when no red half-edge is incident, `S00` when no blue one is,
    /// `M10` otherwise.
    pub fn node_type(&self, v: usize) -> CanopyType {
        match self.bi_degree(v) {
            (_, 0) => CanopyType::S11,
            (0, _) => CanopyType::S00,
            _ => CanopyType::M10,
        }
    }

    pub fn node_type_counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for v in 0..self.node_count() {
            match self.node_type(v) {
                CanopyType::S11 => c.0 += 1,
                CanopyType::S00 => c.1 += 1,
                CanopyType::M10 => c.2 += 1,
            }
        }
        c
    }

    /// No node of type `M10`.
    pub fn is_synchronized(&self) -> bool {
        (0..self.node_count()).all(|v| self.node_type(v) != CanopyType::M10)
    }

    /// For a source node `a`: for every node `w`, the distance to `a`, the
    /// half-edge at `a` starting the path to `w`, and the half-edge at `w`
    /// ending it.
    fn paths_from(&self, a: usize) -> Vec<Option<(usize, usize, usize)>> {
        let mut info = vec![None; self.node_count()];
        let mut queue = VecDeque::new();
        for h in self.halves_at(a) {
            let w = self.node(h ^ 1);
            info[w] = Some((1, h, h ^ 1));
            queue.push_back(w);
        }
        while let Some(v) = queue.pop_front() {
            let (d, first, last) = info[v].unwrap();
            for h in self.halves_at(v) {
                if h == last {
                    continue;
                }
                let w = self.node(h ^ 1);
                info[w] = Some((d + 1, first, h ^ 1));
                queue.push_back(w);
            }
        }
        info[a] = None;
        info
    }

    /// Simple paths `(a, b, length)` with `a < b` whose first and last edges
    /// are followed by plain edges in the chosen direction around `a` and `b`.
    fn paths_with_plain_successors(&self, clockwise: bool) -> Vec<(usize, usize, usize)> {
        let succ = |h: usize| {
            if clockwise {
                self.cw_successor(h)
            } else {
                self.ccw_successor(h)
            }
        };
        let mut out = Vec::new();
        for a in 0..self.node_count() {
            let info = self.paths_from(a);
            for (b, item) in info.iter().enumerate().skip(a + 1) {
                let (d, first, last) = item.expect("tree is connected");
                if !succ(first).is_bud() && !succ(last).is_bud() {
                    out.push((a, b, d));
                }
            }
        }
        out
    }

    /// Edges whose clockwise successor is plain at both ends.
    pub fn non_modern_edges(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&e| !self.cw_successor(2 * e).is_bud() && !self.cw_successor(2 * e + 1).is_bud())
            .collect()
    }

    /// Non-modern paths `(a, b, length)`: the clockwise successors of the
    /// first edge at `a` and of the last edge at `b` are plain.
    pub fn non_modern_paths(&self) -> Vec<(usize, usize, usize)> {
        self.paths_with_plain_successors(true)
    }

    /// Non-Kreweras paths `(a, b, length)`: as non-modern paths, with
    /// counterclockwise successors.
    pub fn non_kreweras_paths(&self) -> Vec<(usize, usize, usize)> {
        self.paths_with_plain_successors(false)
    }

    pub fn is_modern(&self) -> bool {
        self.non_modern_edges().is_empty()
    }

    /// No non-modern path of length at most `k`.
    pub fn is_k_modern(&self, k: usize) -> bool {
        self.non_modern_paths().iter().all(|&(_, _, d)| d > k)
    }

    pub fn is_infinitely_modern(&self) -> bool {
        self.non_modern_paths().is_empty()
    }

    pub fn is_kreweras(&self) -> bool {
        self.non_kreweras_paths().is_empty()
    }

    /// Invariance under color switching.
    pub fn is_half_turn_symmetric(&self) -> bool {
        self.dual() == *self
    }

    /// Whether some edge `e` makes both buds of every node `v` come right
    /// after `e_v` in counterclockwise order, `e_v` being the edge at `v`
    /// leading towards `e`.
    pub fn trivial_bud_position_check(&self) -> bool {
        (0..self.size()).any(|e| self.buds_follow_edge_towards(e))
    }

    fn buds_follow_edge_towards(&self, e: usize) -> bool {
        let buds_after = |h: usize| {
            let r = self.rotation(self.node(h));
            let p = self.position(h);
            r[(p + 1) % r.len()].is_bud() && r[(p + 2) % r.len()].is_bud()
        };
        let mut queue = VecDeque::from([2 * e, 2 * e + 1]);
        while let Some(h) = queue.pop_front() {
            if !buds_after(h) {
                return false;
            }
            for k in self.halves_at(self.node(h)) {
                if k != h {
                    queue.push_back(k ^ 1);
                }
            }
        }
        true
    }

    /// Both bicolorings of the underlying uncolored tree, seeded from half-edge
    /// 0 colored blue and red.
    pub fn recolorings(&self) -> [Vec<Color>; 2] {
        let rot: Vec<Vec<Slot>> = (0..self.node_count()).map(|v| self.rotation(v).to_vec()).collect();
        [Color::Blue, Color::Red].map(|c| propagate_colors(&rot, 0, c).expect("valid rotations"))
    }

    /// Merges the two buds of each node when the tree is synchronized.
    pub fn reduce_synchronized(&self) -> Option<OneBlossomingTree> {
        let mut rotations = Vec::with_capacity(self.node_count());
        let mut node_colors = Vec::with_capacity(self.node_count());
        for v in 0..self.node_count() {
            let r = self.rotation(v);
            let len = r.len();
            let i = (0..len).find(|&i| r[i].is_bud() && r[(i + 1) % len].is_bud())?;
            let mut merged = Vec::with_capacity(len - 1);
            for k in 0..len {
                if k != (i + 1) % len {
                    merged.push(r[k]);
                }
            }
            let colors: Vec<Color> = self.halves_at(v).map(|h| self.color(h)).collect();
            let c = colors[0];
            if colors.iter().any(|&d| d != c) {
                return None;
            }
            rotations.push(merged);
            node_colors.push(c);
        }
        for e in 0..self.size() {
            if node_colors[self.node(2 * e)] == node_colors[self.node(2 * e + 1)] {
                return None;
            }
        }
        Some(OneBlossomingTree {
            rotations,
            node_colors,
        })
    }
}

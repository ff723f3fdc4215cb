//! Bicolored blossoming trees and the bijection `Φ = γ ∘ φ` with Tamari
//! intervals.
//!
//! A tree on `n + 1` nodes stores, for each node, its counterclockwise cyclic
//! sequence of [`Slot`]s: two buds and the half-edges of its incident plain
//! edges. Half-edges are numbered so that `h` and `h ^ 1` form an edge.

mod closure;
mod patterns;

pub use closure::{closure, delta, BudRef, ClosureResult, PathVertex};
pub use patterns::OneBlossomingTree;

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intervals::TamariInterval;
use crate::meandering::{phi_interval, psi_interval, MeanderingDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Bud,
    Half(usize),
}

impl Slot {
    pub fn is_bud(self) -> bool {
        self == Slot::Bud
    }
}

#[derive(Clone)]
pub struct BlossomingTree {
    rot: Vec<Vec<Slot>>,
    color: Vec<Color>,
    node_of: Vec<usize>,
    pos_of: Vec<usize>,
}

impl BlossomingTree {
    /// Builds a tree from counterclockwise rotations and half-edge colors,
    /// checking every structural invariant.
    pub fn from_parts(rot: Vec<Vec<Slot>>, color: Vec<Color>) -> Result<Self> {
        let halves = color.len();
        if !halves.is_multiple_of(2) {
            return Err(Error::InvalidBlossoming("odd number of half-edges".into()));
        }
        if rot.len() != halves / 2 + 1 || rot.len() < 2 {
            return Err(Error::InvalidBlossoming(format!(
                "{} nodes for {} edges",
                rot.len(),
                halves / 2
            )));
        }
        let mut node_of = vec![usize::MAX; halves];
        let mut pos_of = vec![usize::MAX; halves];
        for (v, r) in rot.iter().enumerate() {
            let buds = r.iter().filter(|s| s.is_bud()).count();
            if buds != 2 {
                return Err(Error::InvalidBlossoming(format!("node {v} has {buds} buds")));
            }
            for (i, s) in r.iter().enumerate() {
                if let Slot::Half(h) = *s {
                    if h >= halves || node_of[h] != usize::MAX {
                        return Err(Error::InvalidBlossoming(format!("half-edge {h} misplaced")));
                    }
                    node_of[h] = v;
                    pos_of[h] = i;
                }
            }
        }
        if let Some(h) = node_of.iter().position(|&v| v == usize::MAX) {
            return Err(Error::InvalidBlossoming(format!("half-edge {h} is not attached")));
        }
        let tree = BlossomingTree {
            rot,
            color,
            node_of,
            pos_of,
        };
        tree.check_connected()?;
        tree.check_colors()?;
        Ok(tree)
    }

    fn check_connected(&self) -> Result<()> {
        let mut seen = vec![false; self.rot.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for h in self.halves_at(v) {
                let w = self.node_of[h ^ 1];
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        if count != self.rot.len() {
            return Err(Error::InvalidBlossoming("plain edges do not form a tree".into()));
        }
        Ok(())
    }

    fn check_colors(&self) -> Result<()> {
        for h in (0..self.color.len()).step_by(2) {
            if self.color[h] == self.color[h + 1] {
                return Err(Error::InvalidBlossoming(format!("edge {} is monochromatic", h / 2)));
            }
        }
        for v in 0..self.rot.len() {
            let [a, b] = self.group_colors(v);
            let ok = match (a, b) {
                (Some(Some(x)), Some(Some(y))) => x != y,
                (Some(None), _) | (_, Some(None)) => false,
                _ => true,
            };
            if !ok {
                return Err(Error::InvalidBlossoming(format!(
                    "buds at node {v} do not separate the two colors"
                )));
            }
        }
        Ok(())
    }

    /// For the two groups cut out by the buds at `v`: `None` when empty,
    /// `Some(None)` when mixed, `Some(Some(c))` when all of color `c`.
    fn group_colors(&self, v: usize) -> [Option<Option<Color>>; 2] {
        let r = &self.rot[v];
        let buds: Vec<usize> = (0..r.len()).filter(|&i| r[i].is_bud()).collect();
        let mut groups = [None, None];
        for (i, s) in r.iter().enumerate() {
            if let Slot::Half(h) = *s {
                let g = usize::from(i > buds[0] && i < buds[1]);
                let c = self.color[h];
                groups[g] = match groups[g] {
                    None => Some(Some(c)),
                    Some(Some(d)) if d == c => Some(Some(c)),
                    _ => Some(None),
                };
            }
        }
        groups
    }

    /// Number of plain edges.
    pub fn size(&self) -> usize {
        self.color.len() / 2
    }

    pub fn node_count(&self) -> usize {
        self.rot.len()
    }

    /// Counterclockwise rotation at node `v`.
    pub fn rotation(&self, v: usize) -> &[Slot] {
        &self.rot[v]
    }

    pub fn color(&self, h: usize) -> Color {
        self.color[h]
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    /// Node carrying half-edge `h`.
    pub fn node(&self, h: usize) -> usize {
        self.node_of[h]
    }

    /// Index of half-edge `h` in the rotation of its node.
    pub fn position(&self, h: usize) -> usize {
        self.pos_of[h]
    }

    /// Half-edges at `v` in counterclockwise order.
    pub fn halves_at(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rot[v].iter().filter_map(|s| match *s {
            Slot::Half(h) => Some(h),
            Slot::Bud => None,
        })
    }

    /// Slot following half-edge `h` counterclockwise around its node.
    pub fn ccw_successor(&self, h: usize) -> Slot {
        let r = &self.rot[self.node_of[h]];
        r[(self.pos_of[h] + 1) % r.len()]
    }

    /// Slot following half-edge `h` clockwise around its node.
    pub fn cw_successor(&self, h: usize) -> Slot {
        let r = &self.rot[self.node_of[h]];
        r[(self.pos_of[h] + r.len() - 1) % r.len()]
    }

    /// `(blue, red)` numbers of half-edges at `v`.
    pub fn bi_degree(&self, v: usize) -> (usize, usize) {
        self.halves_at(v).fold((0, 0), |(b, r), h| match self.color[h] {
            Color::Blue => (b + 1, r),
            Color::Red => (b, r + 1),
        })
    }

    /// Exchanges the two colors.
    pub fn dual(&self) -> BlossomingTree {
        BlossomingTree {
            rot: self.rot.clone(),
            color: self.color.iter().map(|c| c.flip()).collect(),
            node_of: self.node_of.clone(),
            pos_of: self.pos_of.clone(),
        }
    }

    /// Mirror image: every rotation is reversed, colors are kept.
    pub fn refl(&self) -> BlossomingTree {
        let rot: Vec<Vec<Slot>> = self
            .rot
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        BlossomingTree::from_parts(rot, self.color.clone()).expect("reflection keeps the invariants")
    }

    /// The serialized meandering tree `δ(B)`; injective on bicolored
    /// blossoming trees.
    pub fn canonical_encode(&self) -> Result<Vec<u8>> {
        let m = delta(self)?;
        Ok(serde_json::to_vec(&m).expect("diagrams serialize"))
    }

    fn key(&self) -> std::result::Result<Vec<u8>, String> {
        self.canonical_encode()
            .map_err(|_| format!("{:?}{:?}", self.rot, self.color))
    }
}

impl PartialEq for BlossomingTree {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for BlossomingTree {}

impl Hash for BlossomingTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl fmt::Debug for BlossomingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BlossomingTree {{")?;
        for (v, r) in self.rot.iter().enumerate() {
            write!(f, "  {v}:")?;
            for s in r {
                match *s {
                    Slot::Bud => write!(f, " bud")?,
                    Slot::Half(h) => {
                        let c = match self.color[h] {
                            Color::Blue => 'B',
                            Color::Red => 'R',
                        };
                        write!(f, " {c}{h}->{}", self.node_of[h ^ 1])?
                    }
                }
            }
            writeln!(f)?;
        }
        write!(f, "}}")
    }
}

/// Forces the bicoloring of an uncolored blossoming tree from the color of one
/// half-edge.
///
/// Half-edges in the same bud-delimited group share a color, the two groups at
/// a node get different colors, and the two halves of an edge differ.
pub fn propagate_colors(rot: &[Vec<Slot>], seed: usize, seed_color: Color) -> Result<Vec<Color>> {
    let halves = 2 * (rot.len().saturating_sub(1));
    let mut node_of = vec![usize::MAX; halves];
    let mut group_of = vec![0u8; halves];
    for (v, r) in rot.iter().enumerate() {
        let buds: Vec<usize> = (0..r.len()).filter(|&i| r[i].is_bud()).collect();
        if buds.len() != 2 {
            return Err(Error::InvalidBlossoming(format!("node {v} has {} buds", buds.len())));
        }
        for (i, s) in r.iter().enumerate() {
            if let Slot::Half(h) = *s {
                if h >= halves {
                    return Err(Error::InvalidBlossoming(format!("half-edge {h} out of range")));
                }
                node_of[h] = v;
                group_of[h] = u8::from(i > buds[0] && i < buds[1]);
            }
        }
    }
    if seed >= halves {
        return Err(Error::InvalidBlossoming(format!("seed half-edge {seed} out of range")));
    }
    let mut color: Vec<Option<Color>> = vec![None; halves];
    let mut queue = VecDeque::new();
    let assign = |h: usize, c: Color, color: &mut Vec<Option<Color>>, queue: &mut VecDeque<usize>| {
        match color[h] {
            Some(d) if d != c => Err(Error::InvalidBlossoming("inconsistent coloring".into())),
            Some(_) => Ok(()),
            None => {
                color[h] = Some(c);
                queue.push_back(h);
                Ok(())
            }
        }
    };
    assign(seed, seed_color, &mut color, &mut queue)?;
    while let Some(h) = queue.pop_front() {
        let c = color[h].unwrap();
        assign(h ^ 1, c.flip(), &mut color, &mut queue)?;
        let v = node_of[h];
        for s in &rot[v] {
            if let Slot::Half(k) = *s {
                let ck = if group_of[k] == group_of[h] { c } else { c.flip() };
                assign(k, ck, &mut color, &mut queue)?;
            }
        }
    }
    color
        .into_iter()
        .map(|c| c.ok_or_else(|| Error::InvalidBlossoming("disconnected tree".into())))
        .collect()
}

/// `γ`: opens a meandering tree into a bicolored blossoming tree.
///
/// Black point `k` becomes node `k`, with rotation: right bud, upper arcs from
/// the innermost outwards, left bud, lower arcs from the innermost outwards.
/// The arc pair at white point `t` is edge `t - 1`; its upper half is blue.
pub fn gamma(m: &MeanderingDiagram) -> Result<BlossomingTree> {
    if !m.is_meandering_tree() {
        return Err(Error::NotATree);
    }
    let n = m.size();
    let mut upper: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for t in 1..=n {
        upper[m.up()[t - 1]].push(2 * (t - 1));
    }
    for t in (1..=n).rev() {
        lower[m.lo()[t - 1]].push(2 * (t - 1) + 1);
    }
    let rot = (0..=n)
        .map(|k| {
            let mut r = vec![Slot::Bud];
            r.extend(upper[k].iter().map(|&h| Slot::Half(h)));
            r.push(Slot::Bud);
            r.extend(lower[k].iter().map(|&h| Slot::Half(h)));
            r
        })
        .collect();
    let color = (0..2 * n)
        .map(|h| if h % 2 == 0 { Color::Blue } else { Color::Red })
        .collect();
    BlossomingTree::from_parts(rot, color)
}

/// `Φ(I) = γ(φ(I))`.
#[doc(alias = "Phi")]
pub fn interval_to_blossoming(i: &TamariInterval) -> BlossomingTree {
    gamma(&phi_interval(i)).expect("φ maps intervals to meandering trees")
}

/// `Ψ(B) = ψ(δ(B))`, the inverse of [`interval_to_blossoming`].
#[doc(alias = "Psi")]
pub fn blossoming_to_interval(b: &BlossomingTree) -> Result<TamariInterval> {
    psi_interval(&delta(b)?)
}

/// `ρ = Ψ ∘ refl ∘ Φ`.
pub fn rho(i: &TamariInterval) -> TamariInterval {
    blossoming_to_interval(&interval_to_blossoming(i).refl()).expect("refl keeps blossoming trees valid")
}

use crate::error::{Error, Result};
use crate::meandering::MeanderingDiagram;

use super::{BlossomingTree, Color, Slot};

/// A bud, given by its node and its index in the node's rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BudRef {
    pub node: usize,
    pub slot: usize,
}

/// Vertex of the subdivided tree: a node, or the middle of a plain edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathVertex {
    Node(usize),
    Edge(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    /// Each bud with the half-edge whose leg it closes onto. The leg lies on
    /// the side of the edge passed when the contour walks along that half.
    pub matching: Vec<(BudRef, usize)>,
    pub unmatched: [BudRef; 2],
    /// Hamiltonian path through the `2n + 1` vertices, alternating between
    /// nodes and edge-vertices, starting and ending at a node.
    pub path: Vec<PathVertex>,
}

enum Token {
    Bud(BudRef),
    Leg(usize),
}

/// Matches buds with legs around the counterclockwise contour and assembles
/// the closure edges into the meandric path.
pub fn closure(b: &BlossomingTree) -> Result<ClosureResult> {
    let n = b.size();
    let total = 4 * n + 2;
    let mut tokens = Vec::with_capacity(total);
    let (mut v, mut i) = (0usize, 0usize);
    for _ in 0..total {
        let r = &b.rot[v];
        match r[i] {
            Slot::Bud => {
                tokens.push(Token::Bud(BudRef { node: v, slot: i }));
                i = (i + 1) % r.len();
            }
            Slot::Half(h) => {
                tokens.push(Token::Leg(h));
                let t = h ^ 1;
                v = b.node_of[t];
                i = (b.pos_of[t] + 1) % b.rot[v].len();
            }
        }
    }
    if (v, i) != (0, 0) {
        return Err(Error::InvalidBlossoming("contour does not close up".into()));
    }

    // Start right after the last minimum of the running height so that every
    // leg finds an open bud before it.
    let mut height = 0i64;
    let mut min = (0i64, 0usize);
    for (k, tok) in tokens.iter().enumerate() {
        height += match tok {
            Token::Bud(_) => 1,
            Token::Leg(_) => -1,
        };
        if height <= min.0 {
            min = (height, k + 1);
        }
    }
    let mut stack: Vec<BudRef> = Vec::new();
    let mut matching = Vec::with_capacity(2 * n);
    for k in 0..total {
        match tokens[(min.1 + k) % total] {
            Token::Bud(bud) => stack.push(bud),
            Token::Leg(h) => {
                let bud = stack
                    .pop()
                    .ok_or_else(|| Error::ClosureOrientation("leg without a bud".into()))?;
                matching.push((bud, h));
            }
        }
    }
    if stack.len() != 2 || stack[0].node == stack[1].node {
        return Err(Error::ClosureOrientation(format!(
            "{} unmatched buds, expected two on distinct nodes",
            stack.len()
        )));
    }
    let unmatched = [stack[0], stack[1]];

    // Closure graph on nodes 0..=n and edge-vertices n+1..=2n.
    let index = |p: PathVertex| match p {
        PathVertex::Node(v) => v,
        PathVertex::Edge(e) => n + 1 + e,
    };
    let vertex = |k: usize| {
        if k <= n {
            PathVertex::Node(k)
        } else {
            PathVertex::Edge(k - n - 1)
        }
    };
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n + 1];
    for &(bud, h) in &matching {
        let a = index(PathVertex::Node(bud.node));
        let c = index(PathVertex::Edge(h / 2));
        adj[a].push(c);
        adj[c].push(a);
    }
    let start = unmatched[0].node;
    let mut path = vec![PathVertex::Node(start)];
    let mut prev = usize::MAX;
    let mut cur = start;
    let mut seen = vec![false; 2 * n + 1];
    seen[start] = true;
    loop {
        let next = adj[cur].iter().copied().find(|&w| w != prev && !seen[w]);
        let Some(w) = next else { break };
        seen[w] = true;
        path.push(vertex(w));
        prev = cur;
        cur = w;
    }
    if path.len() != 2 * n + 1 || cur != unmatched[1].node {
        return Err(Error::ClosureOrientation("closure edges do not form a Hamiltonian path".into()));
    }
    Ok(ClosureResult {
        matching,
        unmatched,
        path,
    })
}

/// `δ`: the closure of `b`, stretched onto the axis.
///
/// Path positions `0..=2n` become the axis points `0, 1/2, .., n`. Of the two
/// directions along the path, the one placing each edge-vertex right of its
/// blue end and left of its red end is kept. Should both qualify, they must
/// give the same diagram.
pub fn delta(b: &BlossomingTree) -> Result<MeanderingDiagram> {
    let c = closure(b)?;
    let n = b.size();
    let len = c.path.len();
    let mut node_pos = vec![0usize; n + 1];
    let mut edge_pos = vec![0usize; n];
    for (k, p) in c.path.iter().enumerate() {
        match *p {
            PathVertex::Node(v) => node_pos[v] = k,
            PathVertex::Edge(e) => edge_pos[e] = k,
        }
    }
    let ends = |e: usize| {
        let (h0, h1) = (2 * e, 2 * e + 1);
        if b.color[h0] == Color::Blue {
            (b.node_of[h0], b.node_of[h1])
        } else {
            (b.node_of[h1], b.node_of[h0])
        }
    };
    let mut found = Vec::new();
    for reversed in [false, true] {
        let pos = |k: usize| if reversed { len - 1 - k } else { k };
        let ok = (0..n).all(|e| {
            let (blue, red) = ends(e);
            pos(node_pos[blue]) < pos(edge_pos[e]) && pos(edge_pos[e]) < pos(node_pos[red])
        });
        if !ok {
            continue;
        }
        let mut up = vec![0; n];
        let mut lo = vec![0; n];
        for e in 0..n {
            let (blue, red) = ends(e);
            let t = pos(edge_pos[e]).div_ceil(2);
            up[t - 1] = pos(node_pos[blue]) / 2;
            lo[t - 1] = pos(node_pos[red]) / 2;
        }
        found.push((up, lo));
    }
    let (up, lo) = match found.len() {
        1 => found.pop().unwrap(),
        2 if found[0] == found[1] => found.pop().unwrap(),
        0 => return Err(Error::ClosureOrientation("no direction of the path is valid".into())),
        _ => return Err(Error::ClosureOrientation("both directions of the path are valid".into())),
    };
    let m = MeanderingDiagram::new(up, lo).map_err(|e| Error::ClosureOrientation(e.to_string()))?;
    if !m.is_meandering_tree() {
        return Err(Error::ClosureOrientation("stretched path is not a meandering tree".into()));
    }
    Ok(m)
}

//! Plane trees, the auxiliary multigraph and its spanning tree.
//!
//! Rotation partitions the rooted trees of `D_n` into orbits; an orbit is a
//! *plane tree* (no root, just a cyclic neighbor order at every vertex) and
//! corresponds to exactly one cycle of the 2-factor. The *auxiliary graph*
//! `H_n` has these orbits as nodes and one edge per flippable pair `(x, y)`,
//! joining the orbit of `x` to the orbit of `y`; loops and parallel edges are
//! kept. A gadget joins two cycles of the 2-factor exactly when its edge
//! crosses between two nodes, so any spanning tree of `H_n` selects a set of
//! gadgets that glue the whole 2-factor into one cycle.
//!
//! Connectivity of `H_n` has a constructive witness: any rooted tree can be
//! rotated until the root is a leaf and then pulled, one pending edge at a
//! time, into the star with `n` rays rooted at a leaf. [`path_to_star`]
//! emits that move sequence.

use std::collections::HashMap;

use crate::dyck::{enumerate_dyck_with_limit, DyckWord, DEFAULT_ENUM_LIMIT};
use crate::gadget::{pull, FlippablePair};
use crate::Error;

/// The rotation orbit of `x`: `x, rotate(x), rotate²(x), …` up to (and not
/// including) the first repetition of `x`.
pub fn rotation_orbit(x: &DyckWord) -> Vec<DyckWord> {
    let mut orbit = vec![*x];
    if x.is_empty() {
        return orbit;
    }
    let mut y = x.rotate().expect("nonempty");
    while y != *x {
        orbit.push(y);
        y = y.rotate().expect("nonempty");
    }
    orbit
}

/// The lexicographically smallest member of the rotation orbit of `x`; the
/// canonical name of its plane tree.
pub fn canonical_representative(x: &DyckWord) -> DyckWord {
    rotation_orbit(x).into_iter().min().expect("orbit never empty")
}

/// The star with `n` rays rooted at a leaf: the word `1 (10)^{n-1} 0`.
pub fn star(n: u32) -> DyckWord {
    assert!(n >= 1, "star requires n ≥ 1");
    let mut bits = vec![true];
    for _ in 0..n - 1 {
        bits.extend([true, false]);
    }
    bits.push(false);
    DyckWord::new_unchecked(crate::bits::Bitstring::from_bits(bits).expect("2n ≤ 63"))
}

/// A rotation orbit: one plane tree, one node of the auxiliary graph, one
/// cycle of the 2-factor.
#[derive(Clone, Debug)]
pub struct PlaneTreeClass {
    /// Lexicographic minimum of the orbit.
    pub canonical: DyckWord,
    /// The full orbit, starting at `canonical` in rotation order.
    pub orbit: Vec<DyckWord>,
}

/// An edge of the auxiliary graph: the flippable pair `label` joins the
/// classes at `from` (the class of `x`) and `to` (the class of `y`).
#[derive(Clone, Debug)]
pub struct AuxEdge {
    pub from: usize,
    pub to: usize,
    pub label: FlippablePair,
}

/// The auxiliary multigraph `H_n`: nodes are plane-tree classes, edges are
/// flippable pairs. Classes are sorted by canonical representative and edges
/// by `(x, a)` of their label.
#[derive(Clone, Debug)]
pub struct AuxGraph {
    n: u32,
    classes: Vec<PlaneTreeClass>,
    class_of: HashMap<DyckWord, usize>,
    edges: Vec<AuxEdge>,
}

impl AuxGraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[PlaneTreeClass] {
        &self.classes
    }

    pub fn edges(&self) -> &[AuxEdge] {
        &self.edges
    }

    /// Index of the class containing `x`, which must lie in `D_n`.
    pub fn class_index(&self, x: &DyckWord) -> Option<usize> {
        self.class_of.get(x).copied()
    }

    pub fn node_count(&self) -> usize {
        self.classes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.from == e.to).count()
    }
}

/// Builds `H_n`, subject to [`DEFAULT_ENUM_LIMIT`].
pub fn build_aux_graph(n: u32) -> Result<AuxGraph, Error> {
    build_aux_graph_with_limit(n, DEFAULT_ENUM_LIMIT)
}

/// As [`build_aux_graph`] with an explicit bound on `n`.
pub fn build_aux_graph_with_limit(n: u32, limit: u32) -> Result<AuxGraph, Error> {
    let words = enumerate_dyck_with_limit(n, limit)?;
    let mut classes: Vec<PlaneTreeClass> = Vec::new();
    let mut class_of: HashMap<DyckWord, usize> = HashMap::with_capacity(words.len());
    for &x in &words {
        if class_of.contains_key(&x) {
            continue;
        }
        // the lex scan reaches each orbit at its smallest member first, so x
        // is the canonical representative and classes arrive sorted
        let orbit = rotation_orbit(&x);
        debug_assert_eq!(Some(&x), orbit.iter().min());
        let index = classes.len();
        for &member in &orbit {
            class_of.insert(member, index);
        }
        classes.push(PlaneTreeClass { canonical: x, orbit });
    }
    let mut edges = Vec::new();
    for &x in &words {
        for a in crate::gadget::flippable_positions(&x) {
            let label = FlippablePair::new(x, a)?;
            edges.push(AuxEdge {
                from: class_of[&label.x],
                to: class_of[&label.y],
                label,
            });
        }
    }
    Ok(AuxGraph { n, classes, class_of, edges })
}

/// Picks the spanning tree used for assembly: breadth-first search from the
/// class of [`star`]`(n)`, scanning incident edges in `(x, a)` order of their
/// labels and never taking loops. Returns the `node_count - 1` edge labels in
/// discovery order.
///
/// A disconnected graph returns [`Error::Disconnected`]; the construction
/// guarantees this never happens, and [`path_to_star`] provides the witness.
pub fn spanning_tree(g: &AuxGraph) -> Result<Vec<FlippablePair>, Error> {
    if g.classes.len() <= 1 {
        return Ok(Vec::new());
    }
    let root = g
        .class_index(&star(g.n))
        .ok_or_else(|| Error::Internal("star class missing from auxiliary graph".into()))?;
    // incident edges per node, already in global (x, a) order
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.classes.len()];
    for (i, e) in g.edges.iter().enumerate() {
        incident[e.from].push(i);
        if e.to != e.from {
            incident[e.to].push(i);
        }
    }
    let mut visited = vec![false; g.classes.len()];
    visited[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    let mut tree = Vec::new();
    while let Some(c) = queue.pop_front() {
        for &i in &incident[c] {
            let e = &g.edges[i];
            let other = if e.from == c { e.to } else { e.from };
            if !visited[other] {
                visited[other] = true;
                queue.push_back(other);
                tree.push(e.label);
            }
        }
    }
    if visited.iter().all(|&v| v) {
        Ok(tree)
    } else {
        Err(Error::Disconnected)
    }
}

/// One step of the walk toward the star.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// Move the root to its leftmost child.
    Rotate,
    /// Pull the pending edge at flippable position `a`.
    Pull(u32),
}

/// Applies a single move.
pub fn apply_move(x: &DyckWord, m: Move) -> Result<DyckWord, Error> {
    match m {
        Move::Rotate => x.rotate(),
        Move::Pull(a) => pull(x, a),
    }
}

/// A sequence of rotations and pulls transforming `x` into [`star`]`(n)`.
///
/// First rotate until the tree is rooted at a leaf (the canonic decomposition
/// has an empty second part); then, while the tree is not yet the star, pull
/// at `a = p - 1` where `p` opens the leftmost peak of maximum height. That
/// peak is always preceded by a 1 and, in a leaf-rooted tree, every proper
/// prefix stays at height ≥ 1, so `a` is flippable; each pull raises a
/// deepest leaf by one level, so the total depth strictly decreases and the
/// walk terminates.
pub fn path_to_star(x: &DyckWord) -> Vec<Move> {
    let mut moves = Vec::new();
    if x.is_empty() {
        return moves;
    }
    let mut cur = *x;
    while !cur.decompose().expect("nonempty").1.is_empty() {
        moves.push(Move::Rotate);
        cur = cur.rotate().expect("nonempty");
    }
    let target = star(cur.semilength());
    while cur != target {
        let profile = crate::bits::HeightProfile::of(cur.as_bits());
        let hs = profile.heights();
        let hmax = *hs.iter().max().expect("nonempty");
        let p = (1..=cur.len())
            .find(|&j| hs[j as usize] == hmax)
            .expect("peak exists");
        let a = p - 1;
        moves.push(Move::Pull(a));
        cur = pull(&cur, a).expect("peak predecessor is flippable");
    }
    moves
}

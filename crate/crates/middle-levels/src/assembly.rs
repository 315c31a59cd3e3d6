//! Symmetric-difference assembly of the Hamilton cycle, and its verifier.
//!
//! Toggling the six edges of every spanning-tree gadget in the 2-factor's
//! edge set leaves a 2-regular graph; because each applied gadget joins two
//! distinct cycles, the result is a single Hamilton cycle of `G_n`. The
//! verifier re-checks the outcome from nothing but the vertex text: counts,
//! weights, distinctness, unit Hamming steps, and wraparound closure.

use std::collections::HashMap;

use crate::bits::Bitstring;
use crate::forest::{build_aux_graph_with_limit, spanning_tree};
use crate::gadget::{six_cycle, FlippablePair};
use crate::matching::{TwoFactor, DEFAULT_VERTEX_LIMIT};
use crate::Error;

/// Binomial coefficient `C(n, k)` as an unsigned 128-bit integer.
pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of vertices of `G_n`: `2 · C(2n+1, n)`.
pub fn vertex_count(n: u32) -> u128 {
    2 * binomial(2 * n + 1, n)
}

/// A 2-regular spanning subgraph of `G_n`, stored vertex → two neighbors.
#[derive(Clone, Debug)]
pub struct CycleCover {
    n: u32,
    adjacency: HashMap<Bitstring, [Bitstring; 2]>,
}

impl CycleCover {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The two neighbors of `v`, if `v` is covered.
    pub fn neighbors(&self, v: &Bitstring) -> Option<[Bitstring; 2]> {
        self.adjacency.get(v).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// The cycles of the cover. Each starts at its lexicographically smallest
    /// vertex and proceeds toward the smaller of that vertex's two neighbors;
    /// cycles are sorted by start vertex.
    pub fn cycles(&self) -> Vec<Vec<Bitstring>> {
        let mut vertices: Vec<Bitstring> = self.adjacency.keys().copied().collect();
        vertices.sort_unstable();
        let mut visited = std::collections::HashSet::with_capacity(vertices.len());
        let mut cycles = Vec::new();
        for &start in &vertices {
            if visited.contains(&start) {
                continue;
            }
            let [p, q] = self.adjacency[&start];
            let mut cycle = vec![start];
            visited.insert(start);
            let mut prev = start;
            let mut cur = p.min(q);
            while cur != start {
                cycle.push(cur);
                visited.insert(cur);
                let [r, s] = self.adjacency[&cur];
                let next = if r == prev { s } else { r };
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Walks the cycle through `start`, stepping first to the neighbor whose
    /// differing bit position is smaller.
    fn traverse(&self, start: Bitstring) -> Result<Vec<Bitstring>, Error> {
        let [p, q] = self
            .adjacency
            .get(&start)
            .copied()
            .ok_or_else(|| Error::Internal(format!("start vertex {start} not covered")))?;
        let dp = start.unit_diff(&p);
        let dq = start.unit_diff(&q);
        let first = match (dp, dq) {
            (Some(dp), Some(dq)) => {
                if dp < dq {
                    p
                } else {
                    q
                }
            }
            _ => return Err(Error::Internal("cover edge is not a unit step".into())),
        };
        let mut out = vec![start];
        let mut prev = start;
        let mut cur = first;
        while cur != start {
            out.push(cur);
            let [r, s] = self.adjacency[&cur];
            let next = if r == prev { s } else { r };
            prev = cur;
            cur = next;
        }
        Ok(out)
    }
}

/// Toggles the six gadget edges of every pair in `gadgets` in the edge set of
/// the 2-factor. The pairs must have pairwise edge-disjoint gadgets (any
/// selection of distinct flippable pairs does); a toggle that breaks
/// 2-regularity reports [`Error::Internal`].
pub fn apply_six_cycles(tf: &TwoFactor, gadgets: &[FlippablePair]) -> Result<CycleCover, Error> {
    let mut adj: HashMap<Bitstring, Vec<Bitstring>> = HashMap::with_capacity(tf.vertex_count());
    for (u, v) in tf.edges() {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut toggle_half = |u: Bitstring, v: Bitstring| {
        let list = adj.entry(u).or_default();
        if let Some(i) = list.iter().position(|w| *w == v) {
            list.swap_remove(i);
        } else {
            list.push(v);
        }
    };
    for pair in gadgets {
        for (u, v) in six_cycle(pair).edges() {
            toggle_half(u, v);
            toggle_half(v, u);
        }
    }
    let mut adjacency = HashMap::with_capacity(adj.len());
    for (v, list) in adj {
        match <[Bitstring; 2]>::try_from(list.as_slice()) {
            Ok(pair) => {
                adjacency.insert(v, pair);
            }
            Err(_) => {
                return Err(Error::Internal(format!(
                    "vertex {v} has degree {} after toggling; gadgets must be edge-disjoint",
                    list.len()
                )))
            }
        }
    }
    Ok(CycleCover { n: tf.n(), adjacency })
}

/// A Hamilton cycle of `G_n` as the sequence of its vertices, the start
/// vertex not repeated at the end.
#[derive(Clone, Debug)]
pub struct HamiltonCycle {
    n: u32,
    vertices: Vec<Bitstring>,
}

impl HamiltonCycle {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> &[Bitstring] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The flip positions along the cycle, wraparound step included; one entry
    /// per vertex. Replaying them from the first vertex reproduces the cycle.
    pub fn flips(&self) -> Vec<u32> {
        (0..self.vertices.len())
            .map(|i| {
                self.vertices[i]
                    .unit_diff(&self.vertices[(i + 1) % self.vertices.len()])
                    .expect("consecutive cycle vertices differ in one bit")
            })
            .collect()
    }
}

/// Builds the Hamilton cycle of `G_n`, subject to [`DEFAULT_VERTEX_LIMIT`]:
/// 2-factor, auxiliary spanning tree, gadget toggles, then a traversal from
/// `1^n 0^{n+1}` stepping first toward the neighbor whose differing bit
/// position is smaller.
pub fn assemble(n: u32) -> Result<HamiltonCycle, Error> {
    assemble_with_limit(n, DEFAULT_VERTEX_LIMIT)
}

/// As [`assemble`] with an explicit bound on `n`.
pub fn assemble_with_limit(n: u32, limit: u32) -> Result<HamiltonCycle, Error> {
    let tf = TwoFactor::build_with_limit(n, limit)?;
    let aux = build_aux_graph_with_limit(n, limit)?;
    let tree = spanning_tree(&aux)?;
    let cover = apply_six_cycles(&tf, &tree)?;
    let start = start_vertex(n);
    let vertices = cover.traverse(start)?;
    if vertices.len() != cover.vertex_count() {
        return Err(Error::Internal(format!(
            "traversal covered {} of {} vertices",
            vertices.len(),
            cover.vertex_count()
        )));
    }
    Ok(HamiltonCycle { n, vertices })
}

/// The canonical start vertex `1^n 0^{n+1}`.
pub fn start_vertex(n: u32) -> Bitstring {
    Bitstring::from_bits((0..2 * n + 1).map(|i| i < n)).expect("2n+1 ≤ 63")
}

/// Outcome of checking a vertex sequence against the Hamilton-cycle contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// Number of vertices supplied.
    pub vertex_count: u64,
    /// `2 · C(2n+1, n)`, the number the cycle must visit.
    pub expected_count: u64,
    /// Vertices appearing more than once (occurrences beyond the first).
    pub duplicates: u64,
    /// Consecutive pairs that are not at Hamming distance one.
    pub bad_steps: u64,
    /// Whether the last vertex is adjacent to the first.
    pub closes: bool,
    /// The conjunction of all checks.
    pub pass: bool,
}

/// Checks that `seq` is a Hamilton cycle of `G_n`, recomputing everything
/// from the vertices themselves; nothing of the construction is reused.
///
/// A vertex of the wrong length or weight is rejected as an error (the
/// sequence is then not even a subgraph of `G_n`); every structural defect is
/// counted in the report instead.
pub fn verify_cycle(seq: &[Bitstring], n: u32) -> Result<VerifyReport, Error> {
    let len = 2 * n + 1;
    for v in seq {
        if v.len() != len || (v.ones() != n && v.ones() != n + 1) {
            return Err(Error::WrongWeight {
                vertex: v.to_string(),
                expected: format!("length {len} and weight {n} or {}", n + 1),
            });
        }
    }
    let expected_count = vertex_count(n) as u64;
    let mut sorted: Vec<&Bitstring> = seq.iter().collect();
    sorted.sort_unstable();
    let duplicates = sorted.windows(2).filter(|w| w[0] == w[1]).count() as u64;
    let bad_steps = seq
        .windows(2)
        .filter(|w| w[0].unit_diff(&w[1]).is_none())
        .count() as u64;
    let closes = match (seq.first(), seq.last()) {
        (Some(first), Some(last)) if seq.len() >= 2 => first.unit_diff(last).is_some(),
        _ => false,
    };
    let vertex_count = seq.len() as u64;
    let pass =
        duplicates == 0 && bad_steps == 0 && closes && vertex_count == expected_count;
    Ok(VerifyReport { vertex_count, expected_count, duplicates, bad_steps, closes, pass })
}

/// Parses newline-separated vertices; errors carry 1-based line numbers.
pub fn parse_cycle_text(text: &str, n: u32) -> Result<Vec<Bitstring>, Error> {
    let len = 2 * n + 1;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        let wrap = |source: Error| Error::Parse { line: i + 1, source: Box::new(source) };
        let v: Bitstring = line.parse().map_err(wrap)?;
        if v.len() != len || (v.ones() != n && v.ones() != n + 1) {
            return Err(Error::Parse {
                line: i + 1,
                source: Box::new(Error::WrongWeight {
                    vertex: line.to_string(),
                    expected: format!("length {len} and weight {n} or {}", n + 1),
                }),
            });
        }
        out.push(v);
    }
    Ok(out)
}

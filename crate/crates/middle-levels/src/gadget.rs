//! Flippable pairs and their 6-cycle gadgets.
//!
//! Two Dyck words `x, y ∈ D_n` form a *flippable pair* when they factor as
//!
//! ```text
//! x = (1, u_1, 1, u_2, …, 1, u_d, 1, 1, 0, w, 0, v_d, 0, …, v_1, 0, v_0)
//! y = (1, u_1, 1, u_2, …, 1, u_d, 1, 0, 1, w, 0, v_d, 0, …, v_1, 0, v_0)
//! ```
//!
//! with `d ≥ 0` and all pieces in `D`; they agree except for a swap of the two
//! bits following position `a`, the start of the *flippable substring*
//! `(1, 1, 0, w, 0)`. In tree language, `y` moves a pending edge one step
//! toward the root (a *pull*). Scanning for the factorization reduces to a
//! local test: `x` has `110` at positions `a, a+1, a+2` and every prefix
//! height over `1..a-1` is at least 1.
//!
//! Each pair contributes a 6-cycle in the subgraph of vertices ending in 0,
//! encoded by a pattern over `{0, 1, *}` with three stars; substituting the
//! six star assignments that use both symbols yields the actual vertices. The
//! gadget shares exactly three edges with the 2-factor — two on the path of
//! `x`, one on the path of `y` — so that the symmetric difference splices the
//! two incident cycles into one. All gadgets are pairwise edge-disjoint, which
//! is what lets any subset of them be applied at once.

use crate::bits::{Bitstring, HeightProfile};
use crate::dyck::{enumerate_dyck_with_limit, DyckWord, DEFAULT_ENUM_LIMIT};
use crate::sigma::{sigma, FlipSequence};
use crate::Error;

/// All positions `a` at which `x` has a flippable substring, ascending:
/// `x` reads `110` at `a, a+1, a+2` and the prefix before `a` never returns
/// to height 0 (vacuous for `a = 1`).
pub fn flippable_positions(x: &DyckWord) -> Vec<u32> {
    if x.len() < 4 {
        return Vec::new();
    }
    let heights = HeightProfile::of(x.as_bits());
    let hs = heights.heights();
    let mut min_prefix = i32::MAX; // min of hs[1..=a-1]
    let mut out = Vec::new();
    for a in 1..=x.len() - 2 {
        if a >= 2 {
            min_prefix = min_prefix.min(hs[a as usize - 1]);
        }
        if x.get(a) && x.get(a + 1) && !x.get(a + 2) && (a == 1 || min_prefix >= 1) {
            out.push(a);
        }
    }
    out
}

/// Swaps the bits at `a + 1` and `a + 2`, turning the flippable substring
/// `110…` into `101…`; errors unless `a` is flippable in `x`.
pub fn pull(x: &DyckWord, a: u32) -> Result<DyckWord, Error> {
    if !flippable_positions(x).contains(&a) {
        return Err(Error::NotFlippable { x: x.to_string(), a });
    }
    Ok(DyckWord::new_unchecked(x.flipped(a + 1).flipped(a + 2)))
}

/// A flippable pair `(x, y)` located at position `a`; `b` is the match of the
/// 1 at position `a` (the end of the flippable substring) and `d` the number
/// of unmatched opens in front of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlippablePair {
    pub x: DyckWord,
    pub y: DyckWord,
    pub a: u32,
    pub b: u32,
    pub d: u32,
}

impl FlippablePair {
    pub fn new(x: DyckWord, a: u32) -> Result<Self, Error> {
        let y = pull(&x, a)?;
        let b = x.close_of(a);
        let d = x.height_before(a) as u32;
        Ok(FlippablePair { x, y, a, b, d })
    }
}

/// All flippable pairs of `D_n`, ordered by `(x, a)`, subject to
/// [`DEFAULT_ENUM_LIMIT`].
pub fn enumerate_flippable_pairs(n: u32) -> Result<Vec<FlippablePair>, Error> {
    enumerate_flippable_pairs_with_limit(n, DEFAULT_ENUM_LIMIT)
}

/// As [`enumerate_flippable_pairs`] with an explicit bound on `n`.
pub fn enumerate_flippable_pairs_with_limit(n: u32, limit: u32) -> Result<Vec<FlippablePair>, Error> {
    let words = enumerate_dyck_with_limit(n, limit)?;
    let mut out = Vec::new();
    for x in words {
        for a in flippable_positions(&x) {
            out.push(FlippablePair::new(x, a)?);
        }
    }
    Ok(out)
}

/// The pieces of `x` around the substring `(x_a, …, x_b)`:
/// `x = (1, u_1, …, 1, u_d, core, v_d, 0, …, v_1, 0, tail)`.
pub(crate) struct Partition {
    /// `u_1, …, u_d`
    pub us: Vec<Bitstring>,
    /// `x_a..x_b`
    pub core: Bitstring,
    /// `v_d, v_{d-1}, …, v_1` in the order they appear after `b`
    pub vs_desc: Vec<Bitstring>,
    /// the trailing piece after the last explicit 0
    pub tail: Bitstring,
}

/// Splits `x` around the hill opened at position `a`, recovering the nesting
/// blocks via parenthesis matching.
pub(crate) fn partition_at(x: &DyckWord, a: u32) -> Partition {
    debug_assert!(x.get(a));
    let b = x.close_of(a);
    // opens before a whose match lies beyond b enclose the hill
    let opens: Vec<u32> =
        (1..a).filter(|&p| x.get(p) && x.close_of(p) > b).collect();
    let mut us = Vec::with_capacity(opens.len());
    for (i, &p) in opens.iter().enumerate() {
        let next = opens.get(i + 1).copied().unwrap_or(a);
        us.push(x.slice(p + 1, next - 1));
    }
    let closes: Vec<u32> = opens.iter().map(|&p| x.close_of(p)).collect();
    let mut vs_desc = Vec::with_capacity(closes.len());
    let mut prev = b;
    for &c in closes.iter().rev() {
        vs_desc.push(x.slice(prev + 1, c - 1));
        prev = c;
    }
    let tail = x.slice(prev + 1, x.len());
    Partition { us, core: x.slice(a, b), vs_desc, tail }
}

/// A gadget 6-cycle: a pattern of length `2n + 1` over `{0, 1, *}` with three
/// stars and a final literal 0, together with its six vertices in cyclic
/// adjacency order.
///
/// The vertex order is normalized: the cycle starts at the star substitution
/// `(1, 1, 0)` and proceeds toward `(1, 0, 0)`, the substitution differing in
/// the middle star; the rest of the order is then forced by adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixCycle {
    pattern: String,
    vertices: [Bitstring; 6],
}

/// Star substitutions in cyclic adjacency order, starting at `(1,1,0)` and
/// stepping to `(1,0,0)`.
const STAR_ORDER: [[bool; 3]; 6] = [
    [true, true, false],
    [true, false, false],
    [true, false, true],
    [false, false, true],
    [false, true, true],
    [false, true, false],
];

impl SixCycle {
    /// The pattern string, e.g. `1***0` for the unique pair of `D_2`.
    pub fn pattern(&self) -> &str {
        &self.pattern
    }

    /// The six vertices in cyclic adjacency order.
    pub fn vertices(&self) -> &[Bitstring; 6] {
        &self.vertices
    }

    /// The six edges of the cycle.
    pub fn edges(&self) -> [(Bitstring, Bitstring); 6] {
        std::array::from_fn(|i| (self.vertices[i], self.vertices[(i + 1) % 6]))
    }
}

/// Builds the gadget 6-cycle of a flippable pair. With the pieces of the pair,
/// the pattern reads `(u_1, 0, …, u_d, 0, 1, *, *, w, *, v_d, 1, …, v_1, 1,
/// v_0, 0)`.
pub fn six_cycle(p: &FlippablePair) -> SixCycle {
    let parts = partition_at(&p.x, p.a);
    debug_assert_eq!(parts.us.len(), p.d as usize);
    // core = (1, 1, 0, w, 0)
    let w = parts.core.slice(4, parts.core.len() - 1);

    let mut prefix = Bitstring::empty();
    for u in &parts.us {
        prefix = prefix.concat(u).pushed(false);
    }
    let mut suffix = Bitstring::empty();
    for v in &parts.vs_desc {
        suffix = suffix.concat(v).pushed(true);
    }
    suffix = suffix.concat(&parts.tail);

    let pattern = format!("{prefix}1**{w}*{suffix}0");
    let vertices = STAR_ORDER.map(|[s1, s2, s3]| {
        prefix
            .pushed(true)
            .pushed(s1)
            .pushed(s2)
            .concat(&w)
            .pushed(s3)
            .concat(&suffix)
            .pushed(false)
    });
    SixCycle { pattern, vertices }
}

/// Edge indices at which a gadget meets the two paths, counting the `k`-th
/// edge of a path as the one joining its `k`-th and `(k+1)`-th vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetIntersection {
    /// Indices on the path of `x`: always `(2a - 1, 2a + 4)`.
    pub on_x: (u32, u32),
    /// Index on the path of `y`: always `2a - 1`.
    pub on_y: u32,
}

/// Where the gadget of `p` intersects `P_sigma(x)` and `P_sigma(y)`.
pub fn intersection_edge_indices(p: &FlippablePair) -> GadgetIntersection {
    GadgetIntersection { on_x: (2 * p.a - 1, 2 * p.a + 4), on_y: 2 * p.a - 1 }
}

/// The modified flip sequences obtained by rerouting the two paths through
/// the gadget: `tau_x` applied to `x` traces a path ending at the last vertex
/// of `P_sigma(y)`, and `tau_y` applied to `y` one ending at the last vertex
/// of `P_sigma(x)`.
///
/// Both sequences are spliced out of `sigma(x)` and `sigma(y)`, which around
/// position `2a - 2` must read
///
/// ```text
/// sigma(x) = (alpha, b, a, a+2, a+1, a, a+2, gamma)
/// sigma(y) = (alpha, a+1, a, delta)
/// ```
///
/// the result being `tau_x = (alpha, a+2, a, delta)` and
/// `tau_y = (alpha, b, a, a+1, a+2, a, a+1, gamma)`. A shape mismatch means a
/// bug, never bad input, and surfaces as [`Error::Internal`].
pub fn tau_sequences(p: &FlippablePair) -> Result<(FlipSequence, FlipSequence), Error> {
    let sx = sigma(&p.x)?;
    let sy = sigma(&p.y)?;
    let (a, b) = (p.a, p.b);
    let cut = 2 * a as usize - 2;

    let internal = |what: &str| {
        Error::Internal(format!(
            "flip sequences of pair ({}, {}) at a={a} do not match the expected shape: {what}",
            p.x, p.y
        ))
    };
    if sx.len() < cut + 6 || sy.len() < cut + 2 {
        return Err(internal("sequences too short"));
    }
    let alpha_x = &sx.positions()[..cut];
    let alpha_y = &sy.positions()[..cut];
    if alpha_x != alpha_y {
        return Err(internal("common prefix differs"));
    }
    if sx.positions()[cut..cut + 6] != [b, a, a + 2, a + 1, a, a + 2] {
        return Err(internal("unexpected splice window in sigma(x)"));
    }
    if sy.positions()[cut..cut + 2] != [a + 1, a] {
        return Err(internal("unexpected splice window in sigma(y)"));
    }
    let gamma = &sx.positions()[cut + 6..];
    let delta = &sy.positions()[cut + 2..];

    let mut tau_x = Vec::with_capacity(sy.len());
    tau_x.extend_from_slice(alpha_x);
    tau_x.extend_from_slice(&[a + 2, a]);
    tau_x.extend_from_slice(delta);

    let mut tau_y = Vec::with_capacity(sx.len());
    tau_y.extend_from_slice(alpha_x);
    tau_y.extend_from_slice(&[b, a, a + 1, a + 2, a, a + 1]);
    tau_y.extend_from_slice(gamma);

    Ok((FlipSequence::new(tau_x), FlipSequence::new(tau_y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::enumerate_dyck;
    use crate::sigma::{last_vertex, path_vertices};

    fn dw(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    fn bs(s: &str) -> Bitstring {
        s.parse().unwrap()
    }

    #[test]
    fn flippable_position_examples() {
        assert_eq!(flippable_positions(&dw("1100")), [1]);
        assert_eq!(flippable_positions(&dw("101100")), [] as [u32; 0]);
        assert_eq!(flippable_positions(&dw("111000")), [2]);
        assert_eq!(flippable_positions(&dw("10")), [] as [u32; 0]);
    }

    #[test]
    fn pull_examples() {
        assert_eq!(pull(&dw("1100"), 1).unwrap(), dw("1010"));
        assert_eq!(pull(&dw("111000"), 2).unwrap(), dw("110100"));
        assert_eq!(pull(&dw("110100"), 1).unwrap(), dw("101100"));
        assert!(pull(&dw("101100"), 3).is_err());
    }

    #[test]
    fn pair_counts_small() {
        assert_eq!(enumerate_flippable_pairs(1).unwrap().len(), 0);
        let p2 = enumerate_flippable_pairs(2).unwrap();
        assert_eq!(p2.len(), 1);
        assert_eq!((p2[0].x, p2[0].y), (dw("1100"), dw("1010")));
        let p3 = enumerate_flippable_pairs(3).unwrap();
        let listed: Vec<(String, String)> =
            p3.iter().map(|p| (p.x.to_string(), p.y.to_string())).collect();
        assert_eq!(
            listed,
            [
                ("110010".to_string(), "101010".to_string()),
                ("110100".to_string(), "101100".to_string()),
                ("111000".to_string(), "110100".to_string()),
            ]
        );
    }

    /// Brute-force route: enumerate every factorization
    /// `(d, u_1..u_d, w, v_0..v_d)` and build the pair from the pieces.
    fn pairs_by_factorization(n: u32) -> Vec<(Bitstring, u32)> {
        fn tuples(slots: usize, total: u32) -> Vec<Vec<Bitstring>> {
            if slots == 0 {
                return if total == 0 { vec![Vec::new()] } else { Vec::new() };
            }
            let mut out = Vec::new();
            for len in (0..=total / 2).map(|k| 2 * k) {
                for head in enumerate_dyck(len / 2).unwrap() {
                    for rest in tuples(slots - 1, total - len) {
                        let mut t = vec![*head.as_bits()];
                        t.extend(rest);
                        out.push(t);
                    }
                }
            }
            out
        }
        let mut res = Vec::new();
        if 2 * n < 4 {
            return res;
        }
        for d in 0..=(2 * n - 4) / 2 {
            let rest = 2 * n - 4 - 2 * d;
            // pieces: u_1..u_d, w, v_d..v_1, v_0
            for t in tuples(2 * d as usize + 2, rest) {
                let us = &t[..d as usize];
                let w = t[d as usize];
                let vs = &t[d as usize + 1..t.len() - 1]; // v_d, …, v_1
                let v0 = t[t.len() - 1];
                let mut x = Bitstring::empty();
                for u in us {
                    x = x.pushed(true).concat(u);
                }
                let a = x.len() + 1;
                x = x.concat(&bs("110")).concat(&w).pushed(false);
                for v in vs {
                    x = x.concat(v).pushed(false);
                }
                x = x.concat(&v0);
                res.push((x, a));
            }
        }
        res.sort_unstable();
        res
    }

    #[test]
    fn detection_matches_factorization_enumeration() {
        for n in 1..=5u32 {
            let detected: Vec<(Bitstring, u32)> = enumerate_flippable_pairs(n)
                .unwrap()
                .iter()
                .map(|p| (*p.x.as_bits(), p.a))
                .collect();
            assert_eq!(detected, pairs_by_factorization(n), "n = {n}");
        }
    }

    #[test]
    fn six_cycle_of_smallest_pair() {
        let p = FlippablePair::new(dw("1100"), 1).unwrap();
        let c = six_cycle(&p);
        assert_eq!(c.pattern(), "1***0");
        let mut verts: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
        assert_eq!(verts[0], "11100");
        verts.sort();
        assert_eq!(verts, ["10010", "10100", "10110", "11000", "11010", "11100"]);
        for (u, v) in c.edges() {
            assert!(u.unit_diff(&v).is_some());
        }
    }

    #[test]
    fn six_cycle_with_nesting() {
        let p = FlippablePair::new(dw("111000"), 2).unwrap();
        assert_eq!((p.b, p.d), (5, 1));
        assert_eq!(six_cycle(&p).pattern(), "01***10");
    }

    #[test]
    fn pattern_census() {
        for n in 2..=5u32 {
            let pairs = enumerate_flippable_pairs(n).unwrap();
            let patterns: Vec<String> =
                pairs.iter().map(|p| six_cycle(p).pattern().to_string()).collect();
            // one pattern per pair, all distinct
            let set: std::collections::HashSet<&String> = patterns.iter().collect();
            assert_eq!(set.len(), pairs.len());
            for pat in &patterns {
                assert_eq!(pat.len() as u32, 2 * n + 1);
                assert_eq!(pat.matches('*').count(), 3);
                assert_eq!(pat.matches('1').count() as u32, n - 1);
                assert_eq!(pat.matches('0').count() as u32, n - 1);
                assert!(pat.ends_with('0'));
            }
        }
        assert_eq!(enumerate_flippable_pairs(4).unwrap().len(), 10);
    }

    #[test]
    fn tau_of_smallest_pair() {
        let p = FlippablePair::new(dw("1100"), 1).unwrap();
        let (tau_x, tau_y) = tau_sequences(&p).unwrap();
        assert_eq!(tau_x.positions(), [3, 1]);
        assert_eq!(tau_y.positions(), [4, 1, 2, 3, 1, 2]);
        assert_eq!(tau_x.endpoint(*p.x.as_bits()), last_vertex(&p.y).unwrap());
        assert_eq!(tau_y.endpoint(*p.y.as_bits()), last_vertex(&p.x).unwrap());
    }

    #[test]
    fn tau_swaps_endpoints_and_preserves_vertices() {
        for n in 2..=5u32 {
            for p in enumerate_flippable_pairs(n).unwrap() {
                let (tau_x, tau_y) = tau_sequences(&p).unwrap();
                assert_eq!(tau_x.endpoint(*p.x.as_bits()), last_vertex(&p.y).unwrap());
                assert_eq!(tau_y.endpoint(*p.y.as_bits()), last_vertex(&p.x).unwrap());
                let mut rerouted: Vec<Bitstring> = tau_x.apply(*p.x.as_bits());
                rerouted.extend(tau_y.apply(*p.y.as_bits()));
                let mut original = path_vertices(&p.x).unwrap();
                original.extend(path_vertices(&p.y).unwrap());
                rerouted.sort_unstable();
                original.sort_unstable();
                assert_eq!(rerouted, original);
            }
        }
    }

    #[test]
    fn intersection_indices_formula() {
        let p = FlippablePair::new(dw("1100"), 1).unwrap();
        assert_eq!(
            intersection_edge_indices(&p),
            GadgetIntersection { on_x: (1, 6), on_y: 1 }
        );
        let p = FlippablePair::new(dw("111000"), 2).unwrap();
        assert_eq!(
            intersection_edge_indices(&p),
            GadgetIntersection { on_x: (3, 8), on_y: 3 }
        );
    }
}

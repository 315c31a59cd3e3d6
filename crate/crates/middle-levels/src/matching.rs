//! The two lexical matchings and the 2-factor they span.
//!
//! The middle levels graph `G_n` has as vertices all bitstrings of length
//! `2n + 1` with `n` or `n + 1` ones (the classes `B_n` and `B_n'`), adjacent
//! when they differ in one bit. Two perfect matchings `M` and `N` are cut out
//! of it by a ranking of prefixes:
//!
//! For `x ∈ B_n`, sort all prefixes of `x` ending in 0 by *decreasing* surplus
//! of 0s over 1s, breaking ties by *increasing* length. `M(x)` flips the last
//! bit of the second prefix in this order, `N(x)` the last bit of the first.
//! The inverse maps rank prefixes ending in 1 the same way but break ties by
//! *decreasing* length.
//!
//! `M ∪ N` is a 2-regular spanning subgraph: a disjoint union of cycles that
//! together visit every vertex. [`TwoFactor`] materializes those cycles in a
//! normalized order.

use crate::bits::{enumerate_weighted, Bitstring};
use crate::Error;

/// Default bound on `n` for operations that touch all of `G_n`; the graph has
/// `2·C(2n+1, n)` vertices, about 705k at the limit.
pub const DEFAULT_VERTEX_LIMIT: u32 = 10;

fn middle_n(x: &Bitstring) -> Result<u32, Error> {
    if x.len() % 2 == 1 && x.len() >= 3 {
        Ok((x.len() - 1) / 2)
    } else {
        Err(Error::WrongWeight { vertex: x.to_string(), expected: "odd length ≥ 3".into() })
    }
}

fn require_weight(x: &Bitstring, weight: u32) -> Result<(), Error> {
    if x.ones() == weight {
        Ok(())
    } else {
        Err(Error::WrongWeight {
            vertex: x.to_string(),
            expected: format!("weight {weight}"),
        })
    }
}

/// Lengths of all prefixes of `x ∈ B_n` ending in 0, sorted by decreasing
/// surplus (#0s − #1s), ties by increasing length.
pub fn ordered_prefixes(x: &Bitstring) -> Result<Vec<u32>, Error> {
    let n = middle_n(x)?;
    require_weight(x, n)?;
    let mut keyed: Vec<(i32, u32)> = Vec::with_capacity((n + 1) as usize);
    let mut ones = 0i32;
    for (j, b) in x.bits().enumerate() {
        let j = j as u32 + 1;
        if b {
            ones += 1;
        } else {
            let surplus = j as i32 - 2 * ones;
            keyed.push((-surplus, j));
        }
    }
    keyed.sort_unstable();
    Ok(keyed.into_iter().map(|(_, j)| j).collect())
}

/// Prefix lengths ending in 1, decreasing surplus, ties by decreasing length;
/// the ranking used by the inverse maps.
fn ordered_prefixes_ending_one(y: &Bitstring) -> Result<Vec<u32>, Error> {
    let n = middle_n(y)?;
    require_weight(y, n + 1)?;
    let mut keyed: Vec<(i32, i64)> = Vec::with_capacity((n + 2) as usize);
    let mut ones = 0i32;
    for (j, b) in y.bits().enumerate() {
        let j = j as u32 + 1;
        if b {
            ones += 1;
            let surplus = j as i32 - 2 * ones;
            keyed.push((-surplus, -(j as i64)));
        }
    }
    keyed.sort_unstable();
    Ok(keyed.into_iter().map(|(_, j)| (-j) as u32).collect())
}

/// The matching `M`: flips the last bit of the second ordered prefix.
pub fn match_m(x: &Bitstring) -> Result<Bitstring, Error> {
    let ranked = ordered_prefixes(x)?;
    Ok(x.flipped(ranked[1]))
}

/// The matching `N`: flips the last bit of the first ordered prefix.
pub fn match_n(x: &Bitstring) -> Result<Bitstring, Error> {
    let ranked = ordered_prefixes(x)?;
    Ok(x.flipped(ranked[0]))
}

/// Inverse of [`match_m`], defined on `B_n'`.
pub fn match_m_inv(y: &Bitstring) -> Result<Bitstring, Error> {
    let ranked = ordered_prefixes_ending_one(y)?;
    Ok(y.flipped(ranked[1]))
}

/// Inverse of [`match_n`], defined on `B_n'`.
pub fn match_n_inv(y: &Bitstring) -> Result<Bitstring, Error> {
    let ranked = ordered_prefixes_ending_one(y)?;
    Ok(y.flipped(ranked[0]))
}

/// The 2-factor `M ∪ N` of `G_n`, stored as its cycles.
///
/// Each cycle starts at its lexicographically smallest vertex and proceeds
/// toward that vertex's `M`-neighbor; the cycles are listed in increasing
/// order of those start vertices. This makes the whole structure a pure
/// function of `n`.
#[derive(Clone, Debug)]
pub struct TwoFactor {
    n: u32,
    cycles: Vec<Vec<Bitstring>>,
}

impl TwoFactor {
    /// Builds the 2-factor of `G_n`, subject to [`DEFAULT_VERTEX_LIMIT`].
    pub fn build(n: u32) -> Result<Self, Error> {
        Self::build_with_limit(n, DEFAULT_VERTEX_LIMIT)
    }

    /// As [`TwoFactor::build`] with an explicit bound on `n`.
    pub fn build_with_limit(n: u32, limit: u32) -> Result<Self, Error> {
        if n > limit {
            return Err(Error::SizeLimit { n, limit });
        }
        if n < 1 {
            return Err(Error::BadInstance(n));
        }
        let lower = enumerate_weighted(2 * n + 1, n);
        let mut seen = std::collections::HashSet::with_capacity(lower.len());
        let mut cycles = Vec::new();
        for &start in &lower {
            if seen.contains(&start) {
                continue;
            }
            // The lex-smallest vertex of each cycle lies in B_n (flipping any
            // 1-bit of an upper vertex gives a smaller cycle neighbor), so a
            // lex scan of B_n discovers every cycle at its smallest vertex,
            // and stepping to M(start) first fixes the direction.
            let mut cycle = Vec::new();
            let mut v = start;
            loop {
                cycle.push(v);
                seen.insert(v);
                let w = match_m(&v).expect("lower vertex");
                cycle.push(w);
                v = match_n_inv(&w).expect("upper vertex");
                if v == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        Ok(TwoFactor { n, cycles })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The normalized cycles.
    pub fn cycles(&self) -> &[Vec<Bitstring>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Total number of vertices covered.
    pub fn vertex_count(&self) -> usize {
        self.cycles.iter().map(|c| c.len()).sum()
    }

    /// All edges, each once, as consecutive pairs around every cycle.
    pub fn edges(&self) -> impl Iterator<Item = (Bitstring, Bitstring)> + '_ {
        self.cycles.iter().flat_map(|cycle| {
            (0..cycle.len()).map(move |i| (cycle[i], cycle[(i + 1) % cycle.len()]))
        })
    }
}

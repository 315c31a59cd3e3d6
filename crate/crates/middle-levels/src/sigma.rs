//! Flip sequences: the bitflip description of the 2-factor's cycles.
//!
//! Every cycle of the 2-factor, restricted to the vertices whose last bit is
//! 0, falls apart into paths. Each such path starts at `(x, 0)` for a Dyck
//! word `x` and is described by a recursively defined sequence of bit
//! positions `sigma(x)`: flipping the positions one after another traces the
//! path. The recursion works hill by hill. With the canonic decomposition
//! `x = (1, u, 0, v)`, set `a = 1` and `b = |u| + 2` (the endpoints of the
//! first hill) and put
//!
//! ```text
//! sigma(x)    = (b, a, sigma_{a+1}(u))
//! sigma_a(x') = ()                                                if x' is empty
//! sigma_a(x') = (b, a, sigma_{a+1}(u'), a-1, b, sigma_{b+1}(v'))  otherwise
//! ```
//!
//! where `x' = (1, u', 0, v')` is the canonic decomposition of the substring
//! starting at absolute position `a`, and `b = a + |u'| + 1`. The sequence has
//! length exactly `2|u| + 2`.
//!
//! The recursion visits a collection of *base pairs* `(a, b)`: position pairs
//! framing a hill `(x_a, …, x_b) = (1, w', 0)`. The vertices reached after
//! `2a - 2` and `2b - 2` flips have a closed form used extensively by the
//! 6-cycle machinery; [`prefix_vertex`] exposes them.

use std::fmt;

use crate::bits::Bitstring;
use crate::dyck::DyckWord;
use crate::Error;

/// A sequence of 1-based bit positions, applied left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipSequence(Vec<u32>);

impl FlipSequence {
    pub fn new(positions: Vec<u32>) -> Self {
        FlipSequence(positions)
    }

    pub fn positions(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All vertices visited when applying the flips to `start`, the start
    /// vertex included; the result has `len() + 1` entries.
    pub fn apply(&self, start: Bitstring) -> Vec<Bitstring> {
        self.walk(start).collect()
    }

    /// Lazy variant of [`FlipSequence::apply`]; yields the same vertices in
    /// the same order.
    pub fn walk(&self, start: Bitstring) -> PathIter<'_> {
        PathIter { flips: &self.0, next_idx: 0, current: Some(start) }
    }

    /// The vertex reached after applying every flip to `start`.
    pub fn endpoint(&self, start: Bitstring) -> Bitstring {
        self.0.iter().fold(start, |v, &p| v.flipped(p))
    }
}

impl std::ops::Deref for FlipSequence {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for FlipSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl IntoIterator for FlipSequence {
    type Item = u32;
    type IntoIter = std::vec::IntoIter<u32>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Streaming walk along a flip sequence. See [`FlipSequence::walk`].
pub struct PathIter<'a> {
    flips: &'a [u32],
    next_idx: usize,
    current: Option<Bitstring>,
}

impl Iterator for PathIter<'_> {
    type Item = Bitstring;

    fn next(&mut self) -> Option<Bitstring> {
        let cur = self.current?;
        self.current = if self.next_idx < self.flips.len() {
            let p = self.flips[self.next_idx];
            self.next_idx += 1;
            Some(cur.flipped(p))
        } else {
            None
        };
        Some(cur)
    }
}

enum Task {
    Descend { a: u32, word: DyckWord },
    Emit(u32),
}

/// Runs the recursion iteratively; emits positions in exact recursion order.
fn run_sigma(out: &mut Vec<u32>, seed: Task) {
    let mut stack = vec![seed];
    while let Some(task) = stack.pop() {
        match task {
            Task::Emit(p) => out.push(p),
            Task::Descend { a, word } => {
                if word.is_empty() {
                    continue;
                }
                let (u, v) = word.decompose().expect("nonempty");
                let b = a + u.len() + 1;
                out.push(b);
                out.push(a);
                // remaining order: recurse-into-u, a-1, b, recurse-into-v
                stack.push(Task::Descend { a: b + 1, word: v });
                stack.push(Task::Emit(b));
                stack.push(Task::Emit(a - 1));
                stack.push(Task::Descend { a: a + 1, word: u });
            }
        }
    }
}

/// The flip sequence `sigma(x)` for a nonempty Dyck word; its length is
/// `2|u| + 2` where `(1, u, 0, v)` is the canonic decomposition of `x`.
pub fn sigma(x: &DyckWord) -> Result<FlipSequence, Error> {
    let (u, _v) = x.decompose()?;
    let mut out = Vec::with_capacity(2 * u.len() as usize + 2);
    out.push(u.len() + 2);
    out.push(1);
    run_sigma(&mut out, Task::Descend { a: 2, word: u });
    Ok(FlipSequence(out))
}

/// The inner recursion `sigma_a(x')` for a substring `x' ∈ D` placed at
/// absolute position `a ≥ 2` of the enclosing word. Empty for the empty word.
pub fn sigma_at(a: u32, xp: &DyckWord) -> Result<FlipSequence, Error> {
    if a < 2 {
        return Err(Error::BadSubstringStart {
            a,
            reason: "the recursion only places substrings at positions ≥ 2".into(),
        });
    }
    let mut out = Vec::with_capacity(2 * xp.len() as usize);
    run_sigma(&mut out, Task::Descend { a, word: *xp });
    Ok(FlipSequence(out))
}

/// The path `P_sigma(x)`: all `2|u| + 3` vertices visited when applying
/// `sigma(x)` to `x`, consecutive vertices differing in exactly one bit.
pub fn path_vertices(x: &DyckWord) -> Result<Vec<Bitstring>, Error> {
    Ok(sigma(x)?.apply(*x.as_bits()))
}

/// The last vertex of `P_sigma(x)` in closed form: with `x = (1, u, 0, v)`,
/// the concatenation `(u, 0, 1, v)`, which always has exactly one prefix with
/// more 0s than 1s.
pub fn last_vertex(x: &DyckWord) -> Result<Bitstring, Error> {
    let (u, v) = x.decompose()?;
    let zero_one: Bitstring = "01".parse().expect("constant");
    Ok(u.concat(&zero_one).concat(v.as_bits()))
}

/// A pair of positions framing a hill visited by the `sigma` recursion:
/// `(x_a, …, x_b) = (1, w', 0)` with `w' ∈ D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasePair {
    pub a: u32,
    pub b: u32,
}

/// All base pairs of `x`, sorted by `(a, b)`. Every pair satisfies
/// `1 ≤ a < b ≤ |u| + 2`: the recursion never leaves the first hill.
pub fn base_pairs(x: &DyckWord) -> Result<Vec<BasePair>, Error> {
    let (u, _) = x.decompose()?;
    let mut out = vec![BasePair { a: 1, b: u.len() + 2 }];
    let mut stack = vec![(2u32, u)];
    while let Some((a, w)) = stack.pop() {
        if w.is_empty() {
            continue;
        }
        let (u2, v2) = w.decompose().expect("nonempty");
        let b = a + u2.len() + 1;
        out.push(BasePair { a, b });
        stack.push((b + 1, v2));
        stack.push((a + 1, u2));
    }
    out.sort_unstable();
    Ok(out)
}

/// Which of the two distinguished path entries of a base pair to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseVertex {
    /// Entry `2a - 1` of the path, reached just before the hill's closing and
    /// opening steps are flipped.
    First,
    /// Entry `2b - 1`, reached once the hill's interior has been processed.
    Second,
}

/// The path entry `2a - 1` (for [`BaseVertex::First`]) or `2b - 1` (for
/// [`BaseVertex::Second`]) of `P_sigma(x)`, for a base pair `(a, b)` of `x`.
///
/// These entries admit a closed form: partitioning
/// `x = (1, u_1, 1, u_2, …, 1, u_d, 1, w', 0, v_d, 0, …, v_1, 0, v)` around
/// the hill, the first entry is `(u_1, 0, …, u_d, 0, 1, w', 0, v_d, 1, …,
/// v_1, 1, v)` and the second swaps the `(1, w', 0)` block to `(w', 0, 1)`.
pub fn prefix_vertex(x: &DyckWord, p: BasePair, which: BaseVertex) -> Result<Bitstring, Error> {
    if !base_pairs(x)?.contains(&p) {
        return Err(Error::NotBasePair { x: x.to_string(), a: p.a, b: p.b });
    }
    let flips = sigma(x)?;
    let upto = match which {
        BaseVertex::First => 2 * p.a as usize - 2,
        BaseVertex::Second => 2 * p.b as usize - 2,
    };
    debug_assert!(upto <= flips.len());
    Ok(FlipSequence(flips.positions()[..upto].to_vec()).endpoint(*x.as_bits()))
}

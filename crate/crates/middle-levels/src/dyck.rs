//! Dyck words, their canonic decomposition and the rotation move.
//!
//! A Dyck word of semilength `n` is a balanced bitstring of length `2n` whose
//! every prefix contains at least as many 1s as 0s. Under the usual Catalan
//! bijection a Dyck word is a rooted ordered tree with `n` edges: an upstep
//! enters a child, a downstep returns to the parent.

use std::fmt;
use std::str::FromStr;

use crate::bits::{Bitstring, HeightProfile};
use crate::Error;

/// Default bound on `n` for whole-set enumerations. Catalan(14) is about
/// 2.7 million words; callers that want more must say so explicitly.
pub const DEFAULT_ENUM_LIMIT: u32 = 14;

impl Bitstring {
    /// Is this a Dyck word: even length, balanced, and no prefix with more 0s
    /// than 1s? The empty word qualifies.
    pub fn is_dyck(&self) -> bool {
        if !self.len().is_multiple_of(2) || 2 * self.ones() != self.len() {
            return false;
        }
        let mut h = 0i32;
        for b in self.bits() {
            h += if b { 1 } else { -1 };
            if h < 0 {
                return false;
            }
        }
        true
    }

    /// Is this balanced with exactly one prefix containing strictly more 0s
    /// than 1s?
    pub fn is_dyck_minus(&self) -> bool {
        if !self.len().is_multiple_of(2) || 2 * self.ones() != self.len() {
            return false;
        }
        let mut h = 0i32;
        let mut negatives = 0;
        for b in self.bits() {
            h += if b { 1 } else { -1 };
            if h < 0 {
                negatives += 1;
            }
        }
        negatives == 1
    }
}

/// A validated Dyck word.
///
/// `DyckWord` dereferences to [`Bitstring`], so all positional and textual
/// operations are available on it directly.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord(Bitstring);

impl DyckWord {
    /// Validates membership in `D`.
    pub fn new(bits: Bitstring) -> Result<Self, Error> {
        if bits.is_dyck() {
            Ok(DyckWord(bits))
        } else {
            Err(Error::NotDyck(bits.to_string()))
        }
    }

    /// The empty word, the unique element of `D_0`.
    pub const fn empty() -> Self {
        DyckWord(Bitstring::empty())
    }

    pub(crate) fn new_unchecked(bits: Bitstring) -> Self {
        debug_assert!(bits.is_dyck(), "not a Dyck word: {bits}");
        DyckWord(bits)
    }

    pub fn as_bits(&self) -> &Bitstring {
        &self.0
    }

    pub fn into_bits(self) -> Bitstring {
        self.0
    }

    /// Half the length: the `n` with `self ∈ D_n`.
    pub fn semilength(&self) -> u32 {
        self.len() / 2
    }

    /// The canonic decomposition `x = (1, u, 0, v)` with `u, v ∈ D`: position
    /// 1 is matched with position `|u| + 2`, `u` is the interior of that first
    /// matched pair and `v` the remainder. Errors on the empty word.
    pub fn decompose(&self) -> Result<(DyckWord, DyckWord), Error> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let close = self.close_of(1);
        let u = DyckWord::new_unchecked(self.slice(2, close - 1));
        let v = DyckWord::new_unchecked(self.slice(close + 1, self.len()));
        Ok((u, v))
    }

    /// The rotation move on rooted trees: the root moves to its leftmost
    /// child. In terms of words, `(1, u, 0, v)` becomes `(u, 1, v, 0)`.
    /// Errors on the empty word.
    pub fn rotate(&self) -> Result<DyckWord, Error> {
        let (u, v) = self.decompose()?;
        let one = Bitstring::from_bits([true]).expect("single bit fits");
        let zero = Bitstring::from_bits([false]).expect("single bit fits");
        Ok(DyckWord::new_unchecked(u.concat(&one).concat(v.as_bits()).concat(&zero)))
    }

    /// Position of the 0 matching the 1 at position `open` (1-based), assuming
    /// `self.get(open)` is a 1 whose match exists.
    pub(crate) fn close_of(&self, open: u32) -> u32 {
        debug_assert!(self.get(open));
        let mut depth = 0i32;
        for j in open..=self.len() {
            depth += if self.get(j) { 1 } else { -1 };
            if depth == 0 {
                return j;
            }
        }
        unreachable!("balanced word must close every open")
    }

    /// Depth of nesting just before position `pos`, i.e. the height after
    /// `pos - 1` steps.
    pub(crate) fn height_before(&self, pos: u32) -> i32 {
        HeightProfile::of(self.as_bits()).heights()[pos as usize - 1]
    }
}

impl std::ops::Deref for DyckWord {
    type Target = Bitstring;

    fn deref(&self) -> &Bitstring {
        &self.0
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        DyckWord::new(s.parse()?)
    }
}

/// All of `D_n` in lexicographic order (`'0' < '1'`), subject to
/// [`DEFAULT_ENUM_LIMIT`].
pub fn enumerate_dyck(n: u32) -> Result<Vec<DyckWord>, Error> {
    enumerate_dyck_with_limit(n, DEFAULT_ENUM_LIMIT)
}

/// As [`enumerate_dyck`] with an explicit bound on `n`.
pub fn enumerate_dyck_with_limit(n: u32, limit: u32) -> Result<Vec<DyckWord>, Error> {
    if n > limit {
        return Err(Error::SizeLimit { n, limit });
    }
    let mut out = Vec::with_capacity(catalan(n) as usize);
    // Depth-first with '0' tried before '1' yields lexicographic order;
    // '1' is pushed first so that '0' is popped first.
    let mut stack = vec![(Bitstring::empty(), 0u32, 0u32)];
    while let Some((w, ones, zeros)) = stack.pop() {
        if ones + zeros == 2 * n {
            out.push(DyckWord::new_unchecked(w));
            continue;
        }
        if ones < n {
            stack.push((w.pushed(true), ones + 1, zeros));
        }
        if zeros < ones {
            stack.push((w.pushed(false), ones, zeros + 1));
        }
    }
    Ok(out)
}

/// The `n`-th Catalan number, the cardinality of `D_n`.
pub fn catalan(n: u32) -> u128 {
    let mut c = vec![0u128; n as usize + 1];
    c[0] = 1;
    for k in 0..n as usize {
        c[k + 1] = (0..=k).map(|i| c[i] * c[k - i]).sum();
    }
    c[n as usize]
}

//! Fixed-width bitstrings with 1-based positions.
//!
//! Every object in this crate — Dyck words, graph vertices, gadget patterns —
//! is at bottom a short sequence of bits. [`Bitstring`] packs such a sequence
//! into a single machine word: position 1 is the leftmost character of the
//! textual rendering and sits at the most significant end of the window, so
//! that for strings of equal length the numeric order of the words coincides
//! with lexicographic order with `'0' < '1'`.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Longest representable bitstring. Everything this crate constructs has
/// length at most `2n + 1`, and instance sizes beyond `n = 31` are far out of
/// computational reach anyway.
pub const MAX_LEN: u32 = 63;

/// An immutable sequence of bits with 1-based positions, at most
/// [`MAX_LEN`] long.
///
/// Values are cheap to copy and compare; all operations return new values.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Bitstring {
    /// Bit at position `j` lives at word bit `len - j`; bits above `len` are zero.
    word: u64,
    len: u32,
}

impl Bitstring {
    /// The empty bitstring.
    pub const fn empty() -> Self {
        Bitstring { word: 0, len: 0 }
    }

    /// Builds a bitstring from the low `len` bits of `word`, position 1 being
    /// the most significant of those bits. Higher bits of `word` are ignored.
    pub fn from_word(word: u64, len: u32) -> Result<Self, Error> {
        if len > MAX_LEN {
            return Err(Error::TooLong(len as usize));
        }
        Ok(Bitstring { word: word & mask(len), len })
    }

    /// Collects an iterator of bits (`false` = 0, `true` = 1), first item at
    /// position 1. Errors if the result would exceed [`MAX_LEN`].
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self, Error> {
        let mut s = Bitstring::empty();
        for b in bits {
            if s.len == MAX_LEN {
                return Err(Error::TooLong(s.len as usize + 1));
            }
            s = s.pushed(b);
        }
        Ok(s)
    }

    /// Number of bits.
    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The packed word; bit at position `j` is `word >> (len - j) & 1`.
    pub fn word(&self) -> u64 {
        self.word
    }

    /// The bit at 1-based position `pos`. Panics if out of range.
    pub fn get(&self, pos: u32) -> bool {
        assert!(pos >= 1 && pos <= self.len, "position {pos} out of range 1..={}", self.len);
        (self.word >> (self.len - pos)) & 1 == 1
    }

    /// Copy with the bit at `pos` flipped.
    pub fn flipped(&self, pos: u32) -> Self {
        assert!(pos >= 1 && pos <= self.len, "position {pos} out of range 1..={}", self.len);
        Bitstring { word: self.word ^ (1 << (self.len - pos)), len: self.len }
    }

    /// Copy with one bit appended at the end (position `len + 1`).
    /// Panics if the result would exceed [`MAX_LEN`].
    pub fn pushed(&self, bit: bool) -> Self {
        assert!(self.len < MAX_LEN, "bitstring full");
        Bitstring { word: self.word << 1 | bit as u64, len: self.len + 1 }
    }

    /// Concatenation `self · other`. Panics if the result would exceed [`MAX_LEN`].
    pub fn concat(&self, other: &Bitstring) -> Self {
        assert!(self.len + other.len <= MAX_LEN, "concatenation too long");
        Bitstring { word: self.word << other.len | other.word, len: self.len + other.len }
    }

    /// The substring at positions `from..=to` (1-based, inclusive); empty when
    /// `from > to`.
    pub fn slice(&self, from: u32, to: u32) -> Self {
        if from > to {
            return Bitstring::empty();
        }
        assert!(from >= 1 && to <= self.len, "slice {from}..={to} out of range");
        let n = to - from + 1;
        Bitstring { word: (self.word >> (self.len - to)) & mask(n), len: n }
    }

    /// Number of 1-bits.
    pub fn ones(&self) -> u32 {
        self.word.count_ones()
    }

    /// Number of 0-bits.
    pub fn zeros(&self) -> u32 {
        self.len - self.ones()
    }

    /// The reversed and complemented bitstring: `result[j] = 1 - self[len+1-j]`.
    /// An involution; in lattice-path terms it mirrors the path at a vertical
    /// line.
    pub fn rev_complement(&self) -> Self {
        if self.len == 0 {
            return *self;
        }
        let rev = self.word.reverse_bits() >> (64 - self.len);
        Bitstring { word: rev ^ mask(self.len), len: self.len }
    }

    /// Iterator over the bits from position 1.
    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(move |j| self.get(j))
    }

    /// The position in which `self` and `other` differ, provided they have
    /// equal length and differ in exactly one bit; `None` otherwise.
    pub fn unit_diff(&self, other: &Bitstring) -> Option<u32> {
        if self.len != other.len {
            return None;
        }
        let x = self.word ^ other.word;
        if x.count_ones() == 1 {
            Some(self.len - x.trailing_zeros())
        } else {
            None
        }
    }

    fn lex_key(&self) -> (u64, u32) {
        let aligned = if self.len == 0 { 0 } else { self.word << (64 - self.len) };
        (aligned, self.len)
    }
}

fn mask(len: u32) -> u64 {
    if len == 0 {
        0
    } else {
        u64::MAX >> (64 - len)
    }
}

impl Ord for Bitstring {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lex_key().cmp(&other.lex_key())
    }
}

impl PartialOrd for Bitstring {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Bitstring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.len() > MAX_LEN as usize {
            return Err(Error::TooLong(s.len()));
        }
        let mut out = Bitstring::empty();
        for c in s.chars() {
            match c {
                '0' => out = out.pushed(false),
                '1' => out = out.pushed(true),
                _ => return Err(Error::BadChar(c)),
            }
        }
        Ok(out)
    }
}

/// The running surplus of 1-bits over 0-bits along a bitstring.
///
/// `heights()[j]` is the number of 1s minus the number of 0s among positions
/// `1..=j`; the leading entry at index 0 is always 0 and consecutive entries
/// differ by exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightProfile(Vec<i32>);

impl HeightProfile {
    pub fn of(x: &Bitstring) -> Self {
        let mut hs = Vec::with_capacity(x.len() as usize + 1);
        let mut h = 0;
        hs.push(h);
        for b in x.bits() {
            h += if b { 1 } else { -1 };
            hs.push(h);
        }
        HeightProfile(hs)
    }

    pub fn heights(&self) -> &[i32] {
        &self.0
    }

    /// Minimum over all prefixes, the empty prefix included.
    pub fn min(&self) -> i32 {
        *self.0.iter().min().expect("profile never empty")
    }

    /// Height after the full string.
    pub fn last(&self) -> i32 {
        *self.0.last().expect("profile never empty")
    }
}

/// All bitstrings of the given length with exactly `weight` ones, in
/// lexicographic order.
pub fn enumerate_weighted(len: u32, weight: u32) -> Vec<Bitstring> {
    assert!(len <= MAX_LEN && weight <= len);
    let mut out = Vec::new();
    if weight == 0 {
        out.push(Bitstring { word: 0, len });
        return out;
    }
    // Gosper's hack: k-subsets in increasing numeric order, which is
    // lexicographic order under the position-1-at-MSB packing.
    let mut w: u64 = (1 << weight) - 1;
    let limit: u64 = 1 << len;
    while w < limit {
        out.push(Bitstring { word: w, len });
        let c = w & w.wrapping_neg();
        let r = w + c;
        w = (((r ^ w) >> 2) / c) | r;
    }
    out
}

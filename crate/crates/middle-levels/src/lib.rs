//! Explicit Hamilton cycles in the middle levels graph.
//!
//! For `n ≥ 1`, the *middle levels graph* `G_n` has as vertices all bitstrings
//! of length `2n + 1` with exactly `n` or `n + 1` ones, adjacent whenever they
//! differ in a single bit. This crate constructs a Hamilton cycle of `G_n` for
//! any `n`, together with every intermediate object of the construction and an
//! independent verifier:
//!
//! 1. two lexical matchings `M` and `N` whose union is a 2-factor, a disjoint
//!    cycle cover of `G_n` ([`matching`]);
//! 2. the flip-sequence description of the paths those cycles trace through
//!    the subgraph of vertices ending in 0 ([`mod@sigma`]);
//! 3. *flippable pairs* of Dyck words, each contributing a 6-cycle gadget that
//!    is able to splice two cycles of the 2-factor into one ([`gadget`]);
//! 4. an auxiliary multigraph on plane trees whose spanning tree selects a set
//!    of gadgets joining everything into a single cycle ([`forest`]);
//! 5. the symmetric-difference assembly and a from-scratch Hamiltonicity
//!    verifier ([`assembly`]).
//!
//! ```
//! use middle_levels::{assemble, verify_cycle};
//!
//! let cycle = assemble(3).unwrap();
//! assert_eq!(cycle.len(), 70); // 2 * C(7, 3)
//! let report = verify_cycle(cycle.vertices(), 3).unwrap();
//! assert!(report.pass);
//! ```
//!
//! The companion command line tool exposes each stage as a subcommand; the
//! book under `book/` walks through the whole construction chapter by
//! chapter.

pub mod assembly;
pub mod bits;
pub mod dyck;
pub mod forest;
pub mod gadget;
pub mod matching;
pub mod sigma;

pub use assembly::{
    apply_six_cycles, assemble, assemble_with_limit, binomial, parse_cycle_text, start_vertex,
    verify_cycle, vertex_count, CycleCover, HamiltonCycle, VerifyReport,
};
pub use bits::{enumerate_weighted, Bitstring, HeightProfile};
pub use dyck::{
    catalan, enumerate_dyck, enumerate_dyck_with_limit, DyckWord, DEFAULT_ENUM_LIMIT,
};
pub use forest::{
    apply_move, build_aux_graph, build_aux_graph_with_limit, canonical_representative,
    path_to_star, rotation_orbit, spanning_tree, star, AuxEdge, AuxGraph, Move, PlaneTreeClass,
};
pub use gadget::{
    enumerate_flippable_pairs, enumerate_flippable_pairs_with_limit, flippable_positions,
    intersection_edge_indices, pull, six_cycle, tau_sequences, FlippablePair, GadgetIntersection,
    SixCycle,
};
pub use matching::{
    match_m, match_m_inv, match_n, match_n_inv, ordered_prefixes, TwoFactor,
    DEFAULT_VERTEX_LIMIT,
};
pub use sigma::{
    base_pairs, last_vertex, path_vertices, prefix_vertex, sigma, sigma_at, BasePair, BaseVertex,
    FlipSequence, PathIter,
};

/// Errors across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("bitstring of length {0} exceeds the supported maximum of 63")]
    TooLong(usize),
    #[error("invalid character {0:?}, expected '0' or '1'")]
    BadChar(char),
    #[error("not a Dyck word: \"{0}\"")]
    NotDyck(String),
    #[error("instance size n = {0} is not supported; n must be at least 1")]
    BadInstance(u32),
    #[error("the empty word has no decomposition")]
    EmptyWord,
    #[error("vertex \"{vertex}\" rejected: expected {expected}")]
    WrongWeight { vertex: String, expected: String },
    #[error("n = {n} exceeds the size limit {limit}; raise the limit to proceed")]
    SizeLimit { n: u32, limit: u32 },
    #[error("position {a} is not flippable in \"{x}\"")]
    NotFlippable { x: String, a: u32 },
    #[error("({a},{b}) is not a base pair of \"{x}\"")]
    NotBasePair { x: String, a: u32, b: u32 },
    #[error("substring start {a} out of range: {reason}")]
    BadSubstringStart { a: u32, reason: String },
    #[error("auxiliary graph is disconnected")]
    Disconnected,
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("internal consistency violation: {0}")]
    Internal(String),
}

#[cfg(doctest)]
mod book {
    //! Every code block in the book is compiled and run by `cargo test --doc`,
    //! keeping the guide in lockstep with the crate.

    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/dyck-words.md")]
    mod dyck_words {}
    #[doc = include_str!("../../../book/src/lexical-matchings.md")]
    mod lexical_matchings {}
    #[doc = include_str!("../../../book/src/sigma-paths.md")]
    mod sigma_paths {}
    #[doc = include_str!("../../../book/src/six-cycles.md")]
    mod six_cycles {}
    #[doc = include_str!("../../../book/src/plane-forest.md")]
    mod plane_forest {}
    #[doc = include_str!("../../../book/src/assembly.md")]
    mod assembly_chapter {}
}

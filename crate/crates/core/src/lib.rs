//! Multipartite tournaments and their (1,2)-step competition graphs.
//!
//! The crate builds validated orientations of complete multipartite graphs,
//! computes the (1,2)-step competition graph both from the bounded-distance
//! definition and from closed-form neighborhood tests, extracts the block
//! structure of loose tournaments, recognizes interval/chordal/C4-free
//! graphs with replayable witnesses, and machine-checks a catalog of
//! structural statements over generated instances.

#![forbid(unsafe_code)]

pub mod bitset;
pub mod competition;
pub mod digraph;
pub mod error;
pub mod harness;
pub mod mtd;
pub mod recognition;
pub mod report;
pub mod structure;
pub mod tournament;

pub use competition::{
    adjacent_fast, adjacent_oracle, competes, competition_graph, generic_ij_graph,
    one_two_competes, AdjacencyWitness, Method, SimpleGraph, WitnessKind,
};
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use harness::{
    catalog, check, check_all, fuzz, CheckResult, Counterexample, FuzzConfig, FuzzReport,
    TheoremCheck, Verdict,
};
pub use mtd::{parse_mtd, serialize_mtd};
pub use recognition::{
    find_asteroidal_triple, find_hole, is_c4_free, is_chordal, is_interval, ATWitness, Chordality,
    HoleWitness, IntervalVerdict,
};
pub use structure::{
    build_structure_report, classify_parts, components_and_diameters, domination_number, f_sets,
    max_anti_competing_set, maximal_stable_sets, sinks, true_twins_digraph, true_twins_graph,
    verify_block_structure, AntiCompetingSetResult, BlockVerdict, PartFlag, SearchScope,
    StructureReport,
};
pub use tournament::{Fixture, MultipartiteTournament, Partition};

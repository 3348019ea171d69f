//! Strong placement games, modelled as simplicial complexes and evaluated
//! to exact combinatorial game values.
//!
//! A placement game is played by Left and Right alternately putting pieces
//! on a board; pieces are never moved or removed, and legality of a position
//! never depends on the order pieces arrived in. Every such game is captured
//! by its *legal complex*: the simplicial complex whose vertices are the
//! basic positions (single-piece placements, owned by Left or Right) and
//! whose faces are the legal positions. Maximal legal positions are the
//! facets; playing a piece corresponds to taking a link.
//!
//! The crate provides:
//!
//! - [`complex`]: the legal-complex data model, links, joins, label
//!   negation, and a line-oriented text format;
//! - [`engine`]: a hash-consed game-tree arena with outcome classes,
//!   partial-order comparisons, disjunctive sums, canonical forms,
//!   birthdays, and a structural check for placement-game shape;
//! - [`values`]: exact dyadic rationals, recognition of canonical forms as
//!   named values (numbers, nimbers, ups, switches, tinies), builders for
//!   those values, and a text rendering;
//! - [`rulesets`]: legal complexes for Snort, Col, Domineering, and a
//!   partition-style Nim variant on small boards;
//! - [`impartial`]: unlabeled complexes, Grundy values, structural
//!   shortcuts, and the doubled partizan cross-check;
//! - [`constructions`]: families of complexes realising prescribed values
//!   (integers, dyadic fractions, switches, tinies) and the catalogue of
//!   values born by day 2;
//! - [`census`]: exhaustive enumeration of small complexes up to
//!   label-preserving isomorphism, with per-dimension value reports;
//! - [`verify`]: the built-in fixture suite used by the CLI and the
//!   acceptance tests.

pub mod census;
pub mod complex;
pub mod constructions;
pub mod engine;
pub mod impartial;
pub mod rulesets;
pub mod values;
pub mod verify;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A text input failed to parse; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A vertex name violates the naming rules of its context.
    #[error("invalid vertex name {name:?}: {reason}")]
    VertexName { name: String, reason: String },
    /// The same name was used with both owners.
    #[error("vertex {name:?} appears with conflicting owners")]
    ConflictingOwner { name: String },
    /// A vertex name was looked up that the complex does not contain.
    #[error("unknown vertex {name:?}")]
    UnknownVertex { name: String },
    /// Two complexes being joined share a vertex name.
    #[error("vertex name collision in join: {name:?}")]
    JoinCollision { name: String },
    /// A parameter was outside an operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An operation that requires canonical input was given a
    /// non-canonical game.
    #[error("input game is not in canonical form")]
    NotCanonical,
    /// Enumeration bounds beyond desk scale.
    #[error("census bounds too large: {0}")]
    CensusBounds(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Combinatorics of positive-root sequences over Auslander-Reiten quivers and
//! commutation classes of reduced words in simply-laced types.

pub mod arquiver;
pub mod denom;
pub mod error;
pub mod fixtures;
pub mod orders;
pub mod rootset;
pub mod rootsys;
pub mod seqcalc;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use rootset::RootSet;
pub use rootsys::{parse_type, CartanDatum, Kind, PosRoot, RootId, RootSystem};
pub use words::{heap_of, is_reduced, longest_word, roots_of_word, CommClass, ReducedWord};
pub use arquiver::{find_quiver, is_adapted, ARQuiver, DynkinQuiver, TieBreak};
pub use orders::{bilex_less, coarse_less, partial_less, total_less, RootSequence};
pub use seqcalc::{vector_partitions, PartitionOpts, SeqCalc, Socle};
pub use denom::{denominator_closed_form, DistanceData, DistancePolynomial, Mode};

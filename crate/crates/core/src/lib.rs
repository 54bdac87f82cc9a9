//! Dowling geometries, gain graphs and extremal problems for frame matroids.

pub mod bitset;
pub mod constructions;
pub mod descriptor;
pub mod extremal;
pub mod error;
pub mod frame;
pub mod gain;
pub mod group;
pub mod matroid;
pub mod patterns;
pub mod theorems;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use frame::{classify_circuit, CircuitKind, DowlingGeometry, FrameMatroid};
pub use gain::{EdgeKind, GainEdge, GainGraph};
pub use group::{GroupElement, GroupTable};
pub use matroid::{Matroid, RankOracle};

/// Recorded in cache entries and certificates.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups-and-gain-graphs.md")]
    mod groups_and_gain_graphs {}
    #[doc = include_str!("../../../book/src/frame-matroids.md")]
    mod frame_matroids {}
    #[doc = include_str!("../../../book/src/dowling-geometries.md")]
    mod dowling_geometries {}
    #[doc = include_str!("../../../book/src/patterns.md")]
    mod patterns {}
    #[doc = include_str!("../../../book/src/extremal-numbers.md")]
    mod extremal_numbers {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}

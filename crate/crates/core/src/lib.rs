//! Truly integral Fáry embeddings: crossing-free straight-line drawings with
//! every vertex on the integer grid and every edge of integer length, for
//! stars, trees and cactus graphs.
//!
//! The pipeline is [`graph::classify`] → [`graph::root_and_orient`] →
//! [`pythagorean::first_k_primitive`] → triple assignment → [`embed`] →
//! [`verify`]. [`pipeline::run_pipeline`] strings the steps together.

pub mod bench;
pub mod bounds;
pub mod embed;
pub mod error;
pub mod generate;
pub mod geom;
pub mod graph;
pub mod io;
pub mod pipeline;
pub mod pythagorean;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};
pub use geom::Point;
pub use graph::{classify, GraphClass, InputGraph};
pub use pythagorean::{PythTriple, TripleSequence};

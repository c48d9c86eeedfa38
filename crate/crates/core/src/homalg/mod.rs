//! Bounded complexes of projective modules up to homotopy, and the module
//! side: quiver representations, cohomology and cosyzygies.

mod complex;
mod elemmat;
pub mod finalg;
pub mod maps;
mod minimal;
pub mod rep;

use thiserror::Error;

pub use complex::{cone, ChainMap, ProjComplex};
pub use elemmat::ElemMat;
pub use maps::{
    chain_maps, end_algebra, find_isomorphism, homotopy_equivalent, is_indecomposable, is_null_homotopic, split_off,
};
pub use minimal::{minimal_form, MinimalForm};
pub use rep::{cohomology, QuiverRep};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomalgError {
    #[error("characteristic {p} is too small; the radical test needs characteristic 0 or above {required}")]
    Characteristic { required: usize, p: u64 },
    #[error("no injective map into the injective envelope was found")]
    NoInjectiveExtension,
    #[error("could not split the module into indecomposables")]
    DecompositionFailed,
}

//! Relations and leading terms on the level 5 standard module `L(5Λ0)` of the
//! twisted affine Lie algebra `A2(2)`, and the partition identities they
//! lead to.
//!
//! The crate is organized bottom-up:
//!
//! - [`cyclotomic`]: exact arithmetic in `Q(w)`, `w` a primitive 6th root of unity
//! - [`qseries`]: truncated power series in `q` and infinite-product expansions
//! - [`partition`]: the partition type shared by the other modules
//! - [`vertexrel`]: generation of R- and S-relations as sparse coefficient maps
//! - [`echelon`]: exact row reduction, leading terms with certificates, scans
//! - [`conditions`]: forbidden-pattern condition sets and partition counting
//! - [`characters`]: principally specialized characters and the Borcea comparison
//! - [`verify`]: the reproduction checks run by `leadterms verify`

pub mod characters;
pub mod conditions;
pub mod cyclotomic;
pub mod echelon;
mod error;
pub mod partition;
pub mod qseries;
pub mod vertexrel;
pub mod verify;

pub use cyclotomic::CycNum;
pub use error::{Error, Result};
pub use partition::Partition;
pub use qseries::TruncatedSeries;

//! Exact-arithmetic workbench for the complex reflection groups `G(r, p, n)`.
//!
//! The crate enumerates these groups at desk scale and verifies, by direct
//! computation, their classical structure: conjugacy classes and centers,
//! irreducible characters of the full wreath products, Gelfand models built
//! from signed conjugation on symmetric elements, generalized involution
//! models, and the automorphism groups with their twisted variants. All
//! arithmetic is exact; floating point appears only in test oracles.

pub mod aut;
pub mod chars;
pub mod cyclo;
pub mod element;
pub mod error;
pub mod group;
pub mod grp2;
pub mod map;
pub mod model;
pub mod partition;
pub mod search;
pub mod perm;
pub mod twisted;

pub use aut::{AlphaParams, AutOrders, GimReason};
pub use chars::ClassFunction;
pub use element::{PhaseVector, WreathElement};
pub use error::{Error, Result};
pub use group::{Budget, GroupData, GroupKey};
pub use map::GroupMap;
pub use model::{ModelCandidate, ModelRep, ModelVariant};
pub use perm::Perm;
pub use twisted::{LinearChar, TwistedDecomposition};

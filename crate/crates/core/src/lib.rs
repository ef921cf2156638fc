//! Twisted generalized Reed–Solomon codes over small finite fields:
//! construction, MDS/NMDS classification, non-GRS certificates, decoding by
//! error-correcting pairs, and deep holes.

pub mod code;
pub mod covering;
pub mod ecp;
pub mod equivalence;
pub mod error;
pub mod field;
pub mod json;
pub mod matrix;
pub mod twisted;

pub use code::{LinearCode, SingletonClass, SingletonTag};
pub use covering::{CosetLeaders, DeepHoleClass, DeepHoleSpec};
pub use ecp::{DecodeOutcome, DecodeTrace, EcpDecoder, EcpPair, EcpReport};
pub use error::{Error, Result};
pub use field::{Elem, Field, FieldElement};
pub use matrix::{FMatrix, Rref, Solution};
pub use twisted::{DualFamily, DualKind, TwistedSpec};

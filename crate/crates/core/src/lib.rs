//! Width and bridge-number machinery for knots in thin position: Morse
//! embeddings, plat presentations, tangle-sum bridge bounds and planar
//! diagram invariants.

pub mod braid;
pub mod diagram;
pub mod family;
pub mod morse;
pub mod plat;
pub mod poly;
pub mod tangle;

pub use braid::{BraidError, BraidWord, Permutation};
pub use diagram::{Crossing, DiagramError, Label, PdDiagram};
pub use family::{FamilyError, FamilyParams};
pub use morse::{Critical, MorseEmbedding, MorseError, ThinThickTuple};
pub use plat::{DrilledTangle, PlatError, PlatSpec};
pub use poly::LaurentPoly;
pub use tangle::{DistanceBound, TangleCert, TangleError};

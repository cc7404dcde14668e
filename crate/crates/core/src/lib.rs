//! Linear codes over small finite fields: locality, bounds for locally
//! repairable codes, constructive low-entropy sets and asymptotic curves.

pub mod analysis;
pub mod asymptotic;
pub mod bounds;
pub mod code;
pub mod constructions;
pub mod coords;
pub mod error;
pub mod galois;
pub mod io;
pub mod linalg;
pub mod locality;
pub mod residual;
pub mod set_builder;
pub mod verify;

pub use code::LinearCode;
pub use coords::CoordSet;
pub use error::{Error, Result};
pub use galois::{Field, FieldElem};

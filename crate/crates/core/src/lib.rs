//! Exact computations on discriminantal arrangements B(n,k).

pub mod acceptance;
pub mod arrangement;
pub mod discriminantal;
pub mod error;
pub mod gale;
pub mod io;
pub mod monodromy;
pub mod planar;
pub mod exact;
pub mod rng;
pub mod subset;

pub use arrangement::GenericArrangement;
pub use error::{Error, Result};
pub use exact::{Matrix, Rational};
pub use subset::IndexSet;

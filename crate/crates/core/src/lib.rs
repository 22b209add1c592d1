pub mod complex;
pub mod disc;
pub mod error;
pub mod isaev;
pub mod levi;
pub mod maps;
pub mod sampling;
pub mod symmetrized;
pub mod verify;

pub use error::{Error, Result};

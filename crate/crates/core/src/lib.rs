pub mod bits;
pub mod covec;
pub mod error;
pub mod flats;
pub mod geom;
pub mod io;
pub mod orient;
pub mod setsys;
pub mod topo;

pub use error::{Error, Result};

pub mod acceptance;
pub mod bench;
pub mod bounds;
pub mod error;
pub mod extract;
pub mod extremal;
pub mod graph;
pub mod interval;
pub mod ktree;
pub mod oracle;
pub mod outerplanar;
pub mod tw2;

pub use error::{Error, Result};
pub use graph::{Graph, PathWitness};

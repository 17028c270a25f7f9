//! Partitions, spaces, skew diagrams and their statistics.

mod arm;
mod partition;
mod skew;
mod space;
mod stats;

pub use arm::ArmDecomposition;
pub use partition::Partition;
pub use skew::{make_skew, Cell, DiagramKind, SkewShape};
pub use space::Space;
pub use stats::DiagramStats;

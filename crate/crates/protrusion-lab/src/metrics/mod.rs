//! Planarity, exact pathwidth, and the mixed search game: the quantities the
//! rest of the crate certifies its constructions against.

pub mod pathwidth;
pub mod planarity;
pub mod search;

pub use pathwidth::{pathwidth_exact, PATHWIDTH_LIMIT};
pub use planarity::{is_planar, is_planar_edges};
pub use search::{simulate_mixed_search, CleaningSchedule, Move, SearchOutcome};

pub mod exact;
pub mod graph;
pub mod harness;
pub mod patterns;
pub mod repair;
pub mod structure;

pub mod algebra;
pub mod cli;
pub mod graph;
pub mod motion;
pub mod movable;
pub mod nac;

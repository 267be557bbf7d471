//! Report building and rendering behind the `optb` binary.

pub mod commands;
pub mod encode;
pub mod render;
pub mod report;

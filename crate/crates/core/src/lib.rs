pub mod braid;
pub mod cli;
pub mod dynkin;
pub mod error;
pub mod genus_transform;
pub mod json;
pub mod laurent;
pub mod models;
pub mod staircase;

pub use error::{Error, Result};

pub mod catalog;
pub mod closedness;
pub mod error;
pub mod partorbits;
pub mod permcore;
pub mod report;
pub mod semigroupkit;
pub mod tables;

pub use error::{Error, Result};

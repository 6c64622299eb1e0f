//! Upper bounds and structural certificates for spherical few-distance sets
//! and equiangular lines.

pub mod analysis;
pub mod bounds;
pub mod cli;
pub mod config;
pub mod extremal;
pub mod gegenbauer;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod verify;

//! Polynomial bases indexed by compositions and permutations: key and Lascoux
//! polynomials, Schubert and Grothendieck polynomials, their involution and
//! fixed-point-free analogues, and shifted P/Q-key families.

pub mod bases;
pub mod cli;
pub mod compositions;
pub mod error;
pub mod expand;
pub mod hecke;
pub mod operators;
pub mod permutations;
pub mod polyring;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};

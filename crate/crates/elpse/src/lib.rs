//! Toolkit for ground epistemic logic programs (ELPs): parsing and
//! canonical printing, candidate world views and world views, strong
//! equivalence via SE-functions, construction of distinguishing witness
//! programs, and equivalence-preserving rule simplification.
//!
//! Everything here is correctness-first exhaustive search over bounded
//! atom and guess domains; see [`Caps`] for the enumeration limits.

pub mod asp;
pub mod cli;
pub mod elp;
pub mod equiv;
pub mod gen;
pub mod parse;
pub mod simplify;
pub mod syntax;

mod caps;
mod error;

pub use caps::Caps;
pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

//! Finite loops with the antiautomorphic inverse property.
//!
//! A D-loop is a loop in which `x ↦ x⁻¹` (right inverse) reverses products:
//! `(x·y)⁻¹ = y⁻¹·x⁻¹`. Every IP-loop is a D-loop; the converse fails from
//! order 6 on. This crate decides the property several independent ways,
//! builds new D-loops, tests isotopy and enumerates all loops of order at
//! most 6.
//!
//! Labels are `1..=n` everywhere.
//!
//! ```
//! use dloop::{Loop, Side};
//!
//! let l = Loop::parse(dloop::fixtures::text("T_ex2")).unwrap();
//! assert!(l.is_d(Side::Right));
//! assert!(!l.is_ip());
//! ```
//!
//! Module map:
//!
//! * [`perm`]: permutations and cycle notation
//! * [`table`]: Cayley tables, loops, inverses, IP and D predicates
//! * [`tracks`]: tracks, spins, track-based criteria, isotopy witnesses
//! * [`constructions`]: D-loops from IP-loops, exchange of tracks,
//!   parastrophes, principal isotopes
//! * [`isotopy`]: isomorphism and isotopy search
//! * [`census`]: exhaustive enumeration and classification
//! * [`cli`]: the `dloop` command

pub mod census;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod fixtures;
pub mod isotopy;
pub mod perm;
pub mod table;
pub mod tracks;

/// An element of `{1, ..., n}`.
pub type Label = usize;

pub use error::{Error, Result};
pub use perm::Perm;
pub use table::{InversePair, Loop, Side, Table};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tables.md")]
    mod tables {}
    #[doc = include_str!("../../../book/src/tracks.md")]
    mod tracks {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/isotopy.md")]
    mod isotopy {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

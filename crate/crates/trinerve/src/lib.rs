//! Exact-arithmetic constructions of the simplicial sets attached to
//! categories, strict higher categories, and Postnikov data: nerves,
//! geometric nerves, Eilenberg-Mac Lane complexes, twisted total complexes,
//! and the verification toolkit around them (simplicial identities,
//! coskeletality, Kan condition, homotopy groups, integral homology).

pub mod abgrp;
pub mod cat;
pub mod cocycle;
pub mod emac;
pub mod error;
pub mod highercat;
pub mod homology;
pub mod json;
pub mod postnikov;
pub mod simplicial;

pub use error::{Error, Result};

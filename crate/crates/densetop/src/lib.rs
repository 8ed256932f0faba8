//! densetop — deciders, enumerators and exhaustive checkers for dense-subset
//! properties of finite topological spaces and topologized finite groups.
//!
//! A *dense-P* space is one where every dense subset, viewed as a subspace,
//! has property P. This crate provides:
//!
//! - [`space`]: finite spaces as explicit open-set families, with closure,
//!   interior, denseness, subspaces, products, sums, components and
//!   separation/connectivity profiles.
//! - [`map`]: function tables between spaces with continuity, openness and
//!   almost-openness checkers.
//! - [`enumerate`]: deterministic streams of all topologies on up to six
//!   points (labeled or up to homeomorphism), dense subsets, and maps.
//!
//! Everything is a pure value; all deciders are deterministic. Scale caps
//! ([`enumerate::Caps`]) are enforced as errors, never silent truncation.

pub mod cli;
pub mod dense;
pub mod enumerate;
pub mod error;
pub mod expr;
pub mod group;
pub mod map;
pub mod point_set;
pub mod space;
pub mod symbolic;
pub mod theorems;

pub use error::{Error, Result};
pub use point_set::PointSet;
pub use space::{FiniteSpace, Preorder};

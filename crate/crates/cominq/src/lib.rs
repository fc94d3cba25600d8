//! Combinatorics of quantum cohomology and quantum K-theory of cominuscule
//! flag varieties.
//!
//! A cominuscule flag variety `X = G/P` is determined by a simple root system
//! and a simple root `gamma` that appears with coefficient 1 in the highest
//! root. Its Schubert classes are indexed by lower order ideals ("shapes") in
//! the poset of positive roots containing `gamma` in their support with
//! coefficient 1. This crate builds that poset, computes the associated
//! Weyl-group combinatorics, and answers quantitative questions about quantum
//! products of Schubert classes:
//!
//! - which powers of the deformation parameter `q` occur in a product of two
//!   Schubert classes, in quantum cohomology and in quantum K-theory
//!   ([`qdegrees`]),
//! - Euler characteristics and top cohomology weights of negative line
//!   bundles on Richardson varieties, via primed tableau enumeration
//!   ([`tableaux`]),
//! - the distributive lattice of `q`-shifted Schubert classes and its
//!   cylinder-shaped poset of join irreducibles ([`qposet`]).
//!
//! The [`cli`] module exposes all of this as a small command-line tool; the
//! `examples/` directory demonstrates each capability as a library call.

pub mod census;
pub mod cli;
pub mod comin;
pub mod halfint;
pub mod qdegrees;
pub mod qposet;
pub mod render;
pub mod root_system;
pub mod space;
pub mod tableaux;
pub mod verify;
pub mod weyl;

//! Exact-arithmetic toolkit for monoids of partial linear isomorphisms over
//! finite real reflection groups.
//!
//! Everything is computed over the rationals with arbitrary-precision
//! integers; there is no floating point anywhere. The crate is `no_std`
//! (with `alloc`): all IO, file formats and the command line live in the
//! companion `refmon-cli` crate.
//!
//! The main objects:
//!
//! * [`linalg`] — rational matrices and canonical (reduced row-echelon)
//!   subspaces of `Q^n`.
//! * [`groups`] — root systems, Weyl groups as fully enumerated matrix
//!   groups, isotropy subgroups.
//! * [`systems`] — intersection-closed, group-stable collections of
//!   subspaces (Boolean systems, reflection arrangement lattices) and their
//!   combinatorial models (partitions, coupled partitions).
//! * [`monoid`] — the monoid `M(G, S)` of restrictions of group elements to
//!   subspaces in a system, with enumeration, order counting and Green's
//!   relations.
//! * [`orders`] — closed-form order formulas and orbit-data evaluation.
//! * [`set_monoids`] — classical inverse monoids over finite sets
//!   (symmetric inverse monoid, partial signed permutations, uniform block
//!   permutations), the Munn semigroup and the fundamental representation.
//! * [`cones`] — rational polyhedral cones, face lattices, and the monoid
//!   of partial maps on faces together with its comparison against the
//!   subspace picture.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cones;
pub mod groups;
pub mod linalg;
pub mod monoid;
pub mod orders;
pub mod set_monoids;
pub mod systems;

use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects live in spaces of different dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// A matrix that must be invertible is singular.
    SingularMatrix,
    /// A reflection was requested for the zero vector.
    ZeroVector,
    /// An enumeration exceeded its configured element cap.
    CapExceeded { cap: usize },
    /// A collection violates the system axioms (contains the ambient space,
    /// closed under the group action and under intersection).
    NotASystem(&'static str),
    /// A subspace was expected to be a member of a system.
    NotInSystem,
    /// A signed permutation violates the sign constraints of its family.
    ParityViolation(&'static str),
    /// A multiplication table is not a semilattice (commutative idempotent).
    NotASemilattice(&'static str),
    /// A multiplication table is not an inverse monoid.
    NotInverseMonoid(&'static str),
    /// Orbit data with an isotropy order that does not divide the group order.
    NonDivisibleOrbitData,
    /// A map that must be a bijection is not.
    NotBijective(&'static str),
    /// The given group does not preserve the object it is supposed to act on.
    NotPreserved(&'static str),
    /// Unsupported parameter combination.
    Unsupported(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::ZeroVector => write!(f, "zero vector where a nonzero vector is required"),
            Error::CapExceeded { cap } => write!(f, "enumeration exceeded cap of {cap} elements"),
            Error::NotASystem(what) => write!(f, "system axiom violated: {what}"),
            Error::NotInSystem => write!(f, "subspace is not a member of the system"),
            Error::ParityViolation(what) => write!(f, "sign/parity violation: {what}"),
            Error::NotASemilattice(what) => write!(f, "not a semilattice: {what}"),
            Error::NotInverseMonoid(what) => write!(f, "not an inverse monoid: {what}"),
            Error::NonDivisibleOrbitData => {
                write!(f, "orbit datum isotropy order does not divide the group order")
            }
            Error::NotBijective(what) => write!(f, "map is not bijective: {what}"),
            Error::NotPreserved(what) => write!(f, "group action does not preserve {what}"),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

//! Computable fields and embedded extension pairs `K ⊆ L`.

pub mod extension;
pub mod field;
pub mod fp;
pub(crate) mod qpoly;

use std::fmt;

use thiserror::Error;

pub use extension::{Automorphism, CosetIndex, ExtensionPair, ExtensionPredicates, Predicate, Tri};
pub use field::{Field, FieldDescriptor, FieldElem, RatFunc};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("defining polynomial {0} is reducible")]
    ReducibleModulus(String),
    #[error("invalid field descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("field too large for exact desk-scale arithmetic: {0}")]
    TooLarge(String),
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
    #[error("predicate {predicate} is not decidable for {pair}")]
    UnsupportedPredicate { predicate: String, pair: String },
    #[error("{0} is not algebraic over the base field")]
    NotAlgebraic(String),
    #[error("element does not belong to {0}")]
    NotAnElement(String),
}

/// A natural number or the distinguished value "infinite".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cardinal {
    Finite(u64),
    Infinite,
}

impl Cardinal {
    pub fn is_finite(self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Cardinal::Finite(n) => Some(n),
            Cardinal::Infinite => None,
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Infinite => write!(f, "infinite"),
        }
    }
}

use thiserror::Error;

use crate::hopf::Violation;
use crate::ring::RingSpec;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operation requires {expected}, got {found}")]
    WrongRing {
        expected: &'static str,
        found: RingSpec,
    },

    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("columns of the relation matrix are not contained in the span of the generators")]
    NotContained,

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("characteristic of the base ring is {found}, expected {expected}")]
    Characteristic { expected: u64, found: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unsupported base change from {from} to {to}")]
    UnsupportedBaseChange { from: RingSpec, to: RingSpec },

    #[error("Hopf algebra fails {} axiom check(s), first: {}", .0.len(), .0[0])]
    InvalidHopf(Vec<Violation>),

    #[error("comodule fails {} axiom check(s), first: {}", .0.len(), .0[0])]
    InvalidComodule(Vec<Violation>),

    #[error("Hopf algebra was not built from a group table")]
    NotConstant,

    #[error("group element index {0} out of range")]
    ElementOutOfRange(usize),

    #[error("integral module not free rank one (found {generators} generators)")]
    IntegralNotFreeRankOne { generators: usize },

    #[error("integral vanishes at 1 over a characteristic-zero base")]
    IntegralVanishes,

    #[error("phi is only constructed over characteristic-zero bases")]
    PositiveCharacteristic,

    #[error("objects have different parent Hopf algebras")]
    ParentMismatch,

    #[error("invalid short exact sequence: {0}")]
    InvalidSequence(String),

    #[error("cochain group of rank {rank} exceeds the configured limit {limit}")]
    SizeGuard { rank: usize, limit: usize },

    #[error("degree {degree} exceeds the available cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Binary operations and their classification.
//!
//! A [`Magma`] is anything with a closed binary operation. Finite operations are
//! stored as composition tables ([`FiniteMagma`]) and can be classified exactly
//! ([`classify`]); operations over integers, reals and real pairs come from the
//! built-in catalog and carry a declared medial certificate instead.
//!
//! The medial (interchange) law `(a*b)*(c*d) = (a*c)*(b*d)` is the property that
//! makes multi-variable abstraction independent of the variable order.

mod affine;
mod builtin;
mod enumerate;
mod finite;
mod laws;
mod real;
mod transport;

pub use affine::{check_affine_projection_claim, AffineEntry, AffineMap, AffineReport};
pub use builtin::{builtin, Builtin, BUILTIN_NAMES};
pub use enumerate::{
    enumerate_tables, profile_counts, sample_tables, table_count, Filter, Profile, Tally,
    EXHAUSTIVE_SIZE_LIMIT,
};
pub use finite::{Element, FiniteMagma};
pub use laws::{
    check_associative, check_associative_with, check_commutative, check_commutative_with,
    check_medial, check_medial_with, classify, find_units, medial_violation_at, sample_laws,
    unit_violation, AlgebraReport, Law, LawCheck, SampledReport, Units, Witness, WitnessOrder,
};
pub use real::{FreeMagma, IntOp, PairMatrix, Real, RealOp, Term};
pub use transport::{transport, Transported};

use std::fmt::Debug;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("carrier violation in `{op}`: {detail}")]
    Carrier { op: String, detail: String },
    #[error("invalid magma: {0}")]
    InvalidMagma(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("transport precondition violated: {0}")]
    TransportPrecondition(String),
    #[error("unknown built-in `{0}`")]
    UnknownBuiltin(String),
    #[error("enumeration of size {size} exceeds the exhaustive limit of {limit}")]
    EnumerationBudget { size: usize, limit: usize },
    #[error("NaN is not a valid terminal value")]
    NotANumber,
}

impl AlgebraError {
    pub(crate) fn carrier(op: &str, detail: impl Into<String>) -> Self {
        AlgebraError::Carrier {
            op: op.to_string(),
            detail: detail.into(),
        }
    }
}

/// How a magma vouches for the medial law.
#[derive(Debug, Clone, PartialEq)]
pub enum MedialCertificate<V> {
    /// Checked over every quadruple of a finite carrier.
    Verified,
    /// Asserted by the catalog or by the author of a user-supplied operation.
    Declared,
    /// The law fails; carries a violating quadruple when one is known.
    Refuted(Option<Witness<V>>),
}

impl<V> MedialCertificate<V> {
    pub fn is_medial(&self) -> bool {
        !matches!(self, MedialCertificate::Refuted(_))
    }
}

/// A set with a closed binary operation.
pub trait Magma {
    type Value: Clone + PartialEq + Debug;

    fn name(&self) -> &str;

    /// `a * b`. Fails when an operand or the result leaves the carrier.
    fn op(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, AlgebraError>;

    /// Equality used when comparing results of this operation.
    fn same(&self, a: &Self::Value, b: &Self::Value) -> bool {
        a == b
    }

    fn medial_certificate(&self) -> MedialCertificate<Self::Value>;
}

impl<M: Magma + ?Sized> Magma for &M {
    type Value = M::Value;

    fn name(&self) -> &str {
        (**self).name()
    }

    fn op(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, AlgebraError> {
        (**self).op(a, b)
    }

    fn same(&self, a: &Self::Value, b: &Self::Value) -> bool {
        (**self).same(a, b)
    }

    fn medial_certificate(&self) -> MedialCertificate<Self::Value> {
        (**self).medial_certificate()
    }
}

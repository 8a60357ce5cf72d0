//! Reduced ordered multi-terminal BDDs with hash-consed nodes.
//!
//! A [`Manager`] owns every node. Nodes are interned in a unique table, so two
//! node ids are equal exactly when they denote the same function. Variables
//! are numbered `1..=n` and appear in increasing order along every path;
//! terminals sit below all variables.
//!
//! Operations are registered once with [`Manager::register_op`] and referred
//! to by [`OpId`]. The apply cache is keyed by the ordered operand pair, since
//! the operation need not be commutative.
//!
//! Unlike the dense tables in [`crate::gsf`], abstraction here drops the
//! abstracted variable from the diagram. Expanding the result back to `n`
//! variables gives exactly the dense result, in which the variable is vacuous.

mod manager;

pub use manager::Manager;

use std::fmt::Debug;

use thiserror::Error;

use crate::algebra::{AlgebraError, Witness};

/// Handle of a node inside its [`Manager`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub(crate) u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for NodeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Handle of an operation registered with a [`Manager`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OpId(pub(crate) u32);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node<V> {
    Terminal(V),
    /// Tests variable `var`; `low` is taken when it is 0, `high` when it is 1.
    Internal {
        var: usize,
        low: NodeId,
        high: NodeId,
    },
}

/// How [`Manager::abstract_set`] treats several variables at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Policy {
    /// Refuse unless the operation is certified medial; then abstract in
    /// ascending variable order.
    #[default]
    Gated,
    /// Abstract in the given order, whatever the operation. The result may
    /// depend on that order.
    ForcedOrder,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AbstractionRequest {
    pub op: OpId,
    pub vars: Vec<usize>,
    pub policy: Policy,
}

impl AbstractionRequest {
    pub fn gated(op: OpId, vars: Vec<usize>) -> Self {
        AbstractionRequest {
            op,
            vars,
            policy: Policy::Gated,
        }
    }

    pub fn forced(op: OpId, vars: Vec<usize>) -> Self {
        AbstractionRequest {
            op,
            vars,
            policy: Policy::ForcedOrder,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DdError<V: Debug> {
    #[error("variable {var} must precede its children (levels {low_level} and {high_level})")]
    Ordering {
        var: usize,
        low_level: usize,
        high_level: usize,
    },
    #[error("variable {var} out of range 1..={n}")]
    VariableOutOfRange { var: usize, n: usize },
    #[error("duplicate variable {0} in abstraction request")]
    DuplicateVariable(usize),
    #[error("expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("unknown operation {0:?}")]
    UnknownOp(OpId),
    #[error("abstraction over {vars:?} is not well-defined for `{op}`: the medial law fails")]
    NotWellDefined {
        op: String,
        vars: Vec<usize>,
        witness: Option<Witness<V>>,
    },
    #[error("structural invariant violated at node {node}: {detail}")]
    Structure { node: NodeId, detail: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

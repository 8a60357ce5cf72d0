//! Multi-terminal binary decision diagrams whose abstraction operator works
//! over an arbitrary terminal magma.
//!
//! Abstracting variable `i` replaces a function by the `*`-combination of its
//! two cofactors. Abstracting several variables gives an order-independent
//! result exactly when `*` satisfies the medial law
//! `(a*b)*(c*d) = (a*c)*(b*d)`; [`mtbdd::Manager::abstract_set`] refuses to
//! abstract more than one variable over a magma that cannot vouch for it.
//!
//! * [`algebra`]: finite and real-valued operations, law checks, the built-in
//!   catalog, structure transport and small-table enumeration.
//! * [`gsf`]: dense truth tables over a magma, the reference implementation
//!   every diagram operation is checked against.
//! * [`mtbdd`]: the hash-consed diagram engine.

pub mod algebra;
pub mod gsf;
pub mod mtbdd;

//! Dense truth tables for functions `{0,1}^n -> M`.
//!
//! This is the naive reference representation: `2^n` values, one per
//! assignment. Variable 1 is the most significant bit of the row index, so row
//! `0b0110` of a 4-variable table is the assignment `(0,1,1,0)`.
//!
//! Abstraction keeps the arity: `abstract_var(i)` returns a table of the same
//! `n` in which variable `i` is vacuous. Repeated abstraction therefore
//! composes literally, and diagram results are compared after the vacuous
//! variables are expanded back out.

mod search;
mod text;

pub use search::{
    all_functions, for_each_function, function_count, random_function, search_counterexample,
    SearchOutcome, EXHAUSTIVE_FUNCTION_BUDGET,
};

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::algebra::{AlgebraError, Magma};

/// Largest supported variable count.
pub const MAX_VARS: usize = 20;

/// Largest variable set [`TruthTable::abstract_all_orders`] will permute.
pub const MAX_ORDER_VARS: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GsfError {
    #[error("variable {var} out of range 1..={n}")]
    VariableOutOfRange { var: usize, n: usize },
    #[error("variable count {0} outside 1..={MAX_VARS}")]
    VariableCount(usize),
    #[error("expected {expected} values, got {got}")]
    Length { expected: usize, got: usize },
    #[error("assignment has {got} bits, function has {expected} variables")]
    AssignmentLength { expected: usize, got: usize },
    #[error("need at least {needed} variables, got {n}")]
    Arity { needed: usize, n: usize },
    #[error("variables must be distinct and ordered, got {i} and {j}")]
    PairOrder { i: usize, j: usize },
    #[error("duplicate variable {0}")]
    DuplicateVariable(usize),
    #[error("{what} needs {needed} steps, budget is {limit}")]
    Budget {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A point of `{0,1}^n`; `bit(1)` is the first variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Assignment(bits)
    }

    pub fn zeros(n: usize) -> Self {
        Assignment(vec![false; n])
    }

    pub fn from_index(n: usize, index: usize) -> Self {
        Assignment((1..=n).map(|i| (index >> (n - i)) & 1 == 1).collect())
    }

    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Value of variable `i` (1-based).
    pub fn bit(&self, i: usize) -> bool {
        self.0[i - 1]
    }

    pub fn with(mut self, i: usize, bit: bool) -> Self {
        self.0[i - 1] = bit;
        self
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Evidence that abstracting `i` and `j` in the two possible orders differs at
/// `assignment`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderDependence<V> {
    pub i: usize,
    pub j: usize,
    pub assignment: Assignment,
    /// Value of `A(j)(A(i)(f))`, variable `i` abstracted first.
    pub i_first: V,
    /// Value of `A(i)(A(j)(f))`, variable `j` abstracted first.
    pub j_first: V,
}

/// One outcome of [`TruthTable::abstract_all_orders`].
#[derive(Debug, Clone, PartialEq)]
pub struct OrderOutcome<V> {
    pub result: TruthTable<V>,
    /// First permutation (in enumeration order) producing this result.
    pub order: Vec<usize>,
    /// Number of permutations producing it.
    pub orders: usize,
}

/// A function `{0,1}^n -> M` stored as `2^n` values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable<V> {
    n: usize,
    values: Vec<V>,
}

fn check_var(var: usize, n: usize) -> Result<(), GsfError> {
    if var == 0 || var > n {
        Err(GsfError::VariableOutOfRange { var, n })
    } else {
        Ok(())
    }
}

/// Writes `A(i)` of the `n`-variable table `src` into `out`.
fn abstract_into<M: Magma + ?Sized>(
    src: &[M::Value],
    n: usize,
    i: usize,
    op: &M,
    out: &mut Vec<M::Value>,
) -> Result<(), AlgebraError> {
    let stride = 1usize << (n - i);
    out.clear();
    out.reserve(src.len());
    for row in 0..src.len() {
        let low = row & !stride;
        let v = op.op(&src[low], &src[low | stride])?;
        out.push(v);
    }
    Ok(())
}

impl<V: Clone> TruthTable<V> {
    pub fn new(n: usize, values: Vec<V>) -> Result<Self, GsfError> {
        if n == 0 || n > MAX_VARS {
            return Err(GsfError::VariableCount(n));
        }
        if values.len() != 1 << n {
            return Err(GsfError::Length {
                expected: 1 << n,
                got: values.len(),
            });
        }
        Ok(TruthTable { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&Assignment) -> V) -> Result<Self, GsfError> {
        if n == 0 || n > MAX_VARS {
            return Err(GsfError::VariableCount(n));
        }
        let values = (0..1usize << n)
            .map(|idx| f(&Assignment::from_index(n, idx)))
            .collect();
        Ok(TruthTable { n, values })
    }

    pub fn constant(n: usize, value: V) -> Result<Self, GsfError> {
        Self::from_fn(n, |_| value.clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut [V] {
        &mut self.values
    }

    pub fn get(&self, b: &Assignment) -> Result<&V, GsfError> {
        if b.len() != self.n {
            return Err(GsfError::AssignmentLength {
                expected: self.n,
                got: b.len(),
            });
        }
        Ok(&self.values[b.index()])
    }

    /// Value at row `index`.
    pub fn at(&self, index: usize) -> &V {
        &self.values[index]
    }

    pub fn map<W>(&self, f: impl FnMut(&V) -> W) -> TruthTable<W> {
        TruthTable {
            n: self.n,
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Whether flipping variable `i` never changes the value.
    pub fn is_vacuous(&self, i: usize) -> bool
    where
        V: PartialEq,
    {
        if i == 0 || i > self.n {
            return false;
        }
        let stride = 1usize << (self.n - i);
        (0..self.values.len())
            .filter(|row| row & stride == 0)
            .all(|row| self.values[row] == self.values[row | stride])
    }

    /// `A(i)(f)(b) = f(b with b_i = 0) * f(b with b_i = 1)`; the arity is kept
    /// and variable `i` becomes vacuous.
    pub fn abstract_var<M>(&self, i: usize, op: &M) -> Result<TruthTable<V>, GsfError>
    where
        M: Magma<Value = V> + ?Sized,
    {
        check_var(i, self.n)?;
        let mut out = Vec::new();
        abstract_into(&self.values, self.n, i, op, &mut out)?;
        Ok(TruthTable {
            n: self.n,
            values: out,
        })
    }

    /// Abstracts `vars` one after another, first element first.
    pub fn abstract_in_order<M>(&self, vars: &[usize], op: &M) -> Result<TruthTable<V>, GsfError>
    where
        M: Magma<Value = V> + ?Sized,
    {
        let mut f = self.clone();
        for &i in vars {
            f = f.abstract_var(i, op)?;
        }
        Ok(f)
    }

    /// Checks `A(i)∘A(j)(f) = A(j)∘A(i)(f)` for every pair `i < j`.
    ///
    /// Returns `None` when `f` is abstractable, otherwise the first failing
    /// pair (in `(i, j)` order) and the first assignment where the two orders
    /// disagree.
    pub fn is_function_abstractable<M>(
        &self,
        op: &M,
    ) -> Result<Option<OrderDependence<V>>, GsfError>
    where
        M: Magma<Value = V> + ?Sized,
    {
        let n = self.n;
        let (mut gi, mut gj) = (Vec::new(), Vec::new());
        let (mut gij, mut gji) = (Vec::new(), Vec::new());
        for i in 1..=n {
            abstract_into(&self.values, n, i, op, &mut gi)?;
            for j in i + 1..=n {
                abstract_into(&gi, n, j, op, &mut gij)?;
                abstract_into(&self.values, n, j, op, &mut gj)?;
                abstract_into(&gj, n, i, op, &mut gji)?;
                if let Some(row) = (0..gij.len()).find(|&r| !op.same(&gij[r], &gji[r])) {
                    return Ok(Some(OrderDependence {
                        i,
                        j,
                        assignment: Assignment::from_index(n, row),
                        i_first: gij[row].clone(),
                        j_first: gji[row].clone(),
                    }));
                }
            }
        }
        Ok(None)
    }

    /// The function that depends only on `(b_1, b_2)`, taking `a, b, c, d` at
    /// `(0,0), (0,1), (1,0), (1,1)`.
    pub fn make_quadruple_function(n: usize, quad: [V; 4]) -> Result<Self, GsfError> {
        if n < 2 {
            return Err(GsfError::Arity { needed: 2, n });
        }
        Self::from_fn(n, |b| {
            quad[(b.bit(1) as usize) << 1 | b.bit(2) as usize].clone()
        })
    }

    /// `h(x, y) = f(base with b_i := x, b_j := y)` as a two-variable table.
    pub fn restrict_to_pair(
        &self,
        i: usize,
        j: usize,
        base: &Assignment,
    ) -> Result<TruthTable<V>, GsfError> {
        check_var(i, self.n)?;
        check_var(j, self.n)?;
        if i >= j {
            return Err(GsfError::PairOrder { i, j });
        }
        if base.len() != self.n {
            return Err(GsfError::AssignmentLength {
                expected: self.n,
                got: base.len(),
            });
        }
        let at = |x: bool, y: bool| {
            let b = base.clone().with(i, x).with(j, y);
            self.values[b.index()].clone()
        };
        TruthTable::new(
            2,
            vec![
                at(false, false),
                at(false, true),
                at(true, false),
                at(true, true),
            ],
        )
    }

    /// Abstracts `vars` in every order and groups the distinct results.
    ///
    /// A single outcome means abstraction over `vars` is order-independent for
    /// this function.
    pub fn abstract_all_orders<M>(
        &self,
        vars: &[usize],
        op: &M,
    ) -> Result<Vec<OrderOutcome<V>>, GsfError>
    where
        M: Magma<Value = V> + ?Sized,
    {
        if vars.len() > MAX_ORDER_VARS {
            return Err(GsfError::Budget {
                what: "order enumeration",
                needed: (1..=vars.len() as u128).product(),
                limit: (1..=MAX_ORDER_VARS as u128).product(),
            });
        }
        for (k, &v) in vars.iter().enumerate() {
            check_var(v, self.n)?;
            if vars[..k].contains(&v) {
                return Err(GsfError::DuplicateVariable(v));
            }
        }
        let mut outcomes: Vec<OrderOutcome<V>> = Vec::new();
        for order in vars.iter().copied().permutations(vars.len()) {
            let result = self.abstract_in_order(&order, op)?;
            let same = |t: &TruthTable<V>| {
                t.values
                    .iter()
                    .zip(&result.values)
                    .all(|(x, y)| op.same(x, y))
            };
            match outcomes.iter_mut().find(|o| same(&o.result)) {
                Some(o) => o.orders += 1,
                None => outcomes.push(OrderOutcome {
                    result,
                    order,
                    orders: 1,
                }),
            }
        }
        Ok(outcomes)
    }
}

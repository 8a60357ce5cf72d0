use std::ops::ControlFlow;

use rand::Rng;

use super::{GsfError, TruthTable, MAX_VARS};
use crate::algebra::{check_medial, Element, FiniteMagma};

/// Largest function space scanned exhaustively, `|M|^(2^n) <= 10^6`.
pub const EXHAUSTIVE_FUNCTION_BUDGET: u64 = 1_000_000;

/// `size^(2^n)`, or `None` on overflow.
pub fn function_count(size: usize, n: usize) -> Option<u64> {
    if n > MAX_VARS {
        return None;
    }
    (size as u64).checked_pow(u32::try_from(1u64 << n).ok()?)
}

/// Visits every function `{0,1}^n -> {0..size}` in lexicographic order of
/// value arrays, reusing one table. Stops early on `Break`.
pub fn for_each_function<B>(
    size: usize,
    n: usize,
    mut visit: impl FnMut(&TruthTable<Element>) -> ControlFlow<B>,
) -> Result<Option<B>, GsfError> {
    if size == 0 {
        return Ok(None);
    }
    let mut f = TruthTable::constant(n, Element(0))?;
    loop {
        if let ControlFlow::Break(b) = visit(&f) {
            return Ok(Some(b));
        }
        let values = f.values_mut();
        let mut pos = values.len();
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            values[pos].0 += 1;
            if values[pos].0 < size {
                break;
            }
            values[pos] = Element(0);
        }
    }
}

/// Every function `{0,1}^n -> {0..size}` as an owned table.
pub fn all_functions(size: usize, n: usize) -> Result<Vec<TruthTable<Element>>, GsfError> {
    let count = function_count(size, n).unwrap_or(u64::MAX);
    if count > EXHAUSTIVE_FUNCTION_BUDGET {
        return Err(GsfError::Budget {
            what: "function enumeration",
            needed: count as u128,
            limit: EXHAUSTIVE_FUNCTION_BUDGET as u128,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    for_each_function::<()>(size, n, |f| {
        out.push(f.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn random_function<R: Rng + ?Sized>(
    size: usize,
    n: usize,
    rng: &mut R,
) -> Result<TruthTable<Element>, GsfError> {
    TruthTable::from_fn(n, |_| Element(rng.gen_range(0..size)))
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    /// A function whose abstraction over variables 1 and 2 depends on the order.
    Counterexample(TruthTable<Element>),
    /// The medial law holds over all `|M|^4` quadruples. `functions_checked`
    /// counts the functions additionally verified by exhaustive scan, when the
    /// space fits the budget.
    Abstractable {
        quadruples_checked: u64,
        functions_checked: Option<u64>,
    },
}

/// Looks for an `n`-variable function over `m` whose abstraction depends on the
/// variable order.
///
/// A medial violation `(a,b,c,d)` directly yields the counterexample
/// `make_quadruple_function(n, a, b, c, d)`. Otherwise every function is
/// abstractable; when `|M|^(2^n)` is within budget this is confirmed by scanning
/// all of them.
pub fn search_counterexample(m: &FiniteMagma, n: usize) -> Result<SearchOutcome, GsfError> {
    if n < 2 {
        return Err(GsfError::Arity { needed: 2, n });
    }
    if let Some(w) = check_medial(m).witness {
        let quad = [w.operands[0], w.operands[1], w.operands[2], w.operands[3]];
        return Ok(SearchOutcome::Counterexample(
            TruthTable::make_quadruple_function(n, quad)?,
        ));
    }
    let quadruples_checked = (m.size() as u64).pow(4);
    let functions_checked = match function_count(m.size(), n) {
        Some(count) if count <= EXHAUSTIVE_FUNCTION_BUDGET => {
            let mut failure = Ok(());
            let found = for_each_function(m.size(), n, |f| match f.is_function_abstractable(m) {
                Ok(None) => ControlFlow::Continue(()),
                Ok(Some(_)) => ControlFlow::Break(f.clone()),
                Err(e) => {
                    failure = Err(e);
                    ControlFlow::Break(f.clone())
                }
            })?;
            failure?;
            if let Some(f) = found {
                return Ok(SearchOutcome::Counterexample(f));
            }
            Some(count)
        }
        _ => None,
    };
    Ok(SearchOutcome::Abstractable {
        quadruples_checked,
        functions_checked,
    })
}

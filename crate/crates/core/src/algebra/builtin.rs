//! Catalog of named operations.

use super::{AlgebraError, FiniteMagma, IntOp, PairMatrix, RealOp};

/// Every name accepted by [`builtin`]. `(k)` marks a size parameter.
pub const BUILTIN_NAMES: &[&str] = &[
    "tamura",
    "flip2",
    "comm-nonassoc4",
    "proj-left(k)",
    "proj-right(k)",
    "z-add(k)",
    "sub-int",
    "add-real",
    "mul-real",
    "sub-real",
    "min-real",
    "max-real",
    "proj-left-real",
    "proj-right-real",
    "h-continuous",
    "pair-matrix",
];

/// A catalog entry, grouped by carrier.
#[derive(Debug, Clone)]
pub enum Builtin {
    Finite(FiniteMagma),
    Int(IntOp),
    Real(RealOp),
    Pair(PairMatrix),
}

impl Builtin {
    pub fn name(&self) -> &str {
        use super::Magma;
        match self {
            Builtin::Finite(m) => m.name(),
            Builtin::Int(m) => m.name(),
            Builtin::Real(m) => m.name(),
            Builtin::Pair(m) => m.name(),
        }
    }

    pub fn into_finite(self) -> Option<FiniteMagma> {
        match self {
            Builtin::Finite(m) => Some(m),
            _ => None,
        }
    }

    pub fn into_real(self) -> Option<RealOp> {
        match self {
            Builtin::Real(m) => Some(m),
            _ => None,
        }
    }

    pub fn into_int(self) -> Option<IntOp> {
        match self {
            Builtin::Int(m) => Some(m),
            _ => None,
        }
    }
}

/// Splits `name(k)` into `("name", Some(k))`.
fn split_param(name: &str) -> Result<(&str, Option<usize>), AlgebraError> {
    let unknown = || AlgebraError::UnknownBuiltin(name.to_string());
    match name.find('(') {
        None => Ok((name, None)),
        Some(open) => {
            let inner = name[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
            let k = inner.trim().parse().map_err(|_| unknown())?;
            Ok((&name[..open], Some(k)))
        }
    }
}

fn real(name: &str, op: fn(f64, f64) -> f64, exact: bool) -> Builtin {
    Builtin::Real(RealOp::new(name, f64::is_finite, op, true, exact))
}

/// `h(x,y) = min(min(x+1, 16) * y, 64)` on the open interval `(4, inf)`.
pub(crate) fn h_continuous(x: f64, y: f64) -> f64 {
    ((x + 1.0).min(16.0) * y).min(64.0)
}

pub fn builtin(name: &str) -> Result<Builtin, AlgebraError> {
    let (base, k) = split_param(name.trim())?;
    let unknown = || AlgebraError::UnknownBuiltin(name.to_string());
    let size = |default: usize| -> Result<usize, AlgebraError> {
        match k.unwrap_or(default) {
            0 => Err(unknown()),
            k => Ok(k),
        }
    };
    let fixed = || if k.is_some() { Err(unknown()) } else { Ok(()) };

    let b = match base {
        "tamura" => {
            fixed()?;
            Builtin::Finite(FiniteMagma::from_rows(
                "tamura",
                &["a", "b", "c", "d"],
                &["a a a a", "b b b b", "c c c c", "a a b a"],
            )?)
        }
        "flip2" => {
            fixed()?;
            Builtin::Finite(FiniteMagma::from_fn("flip2", 2, |_, y| 1 - y)?)
        }
        "comm-nonassoc4" => {
            fixed()?;
            Builtin::Finite(FiniteMagma::from_rows(
                "comm-nonassoc4",
                &["a", "b", "c", "d"],
                &["a c b d", "c a d b", "b d a c", "d b c a"],
            )?)
        }
        "proj-left" => {
            let k = size(2)?;
            Builtin::Finite(FiniteMagma::from_fn(
                format!("proj-left({k})"),
                k,
                |x, _| x,
            )?)
        }
        "proj-right" => {
            let k = size(2)?;
            Builtin::Finite(FiniteMagma::from_fn(
                format!("proj-right({k})"),
                k,
                |_, y| y,
            )?)
        }
        "z-add" => {
            let k = size(2)?;
            Builtin::Finite(FiniteMagma::from_fn(format!("z-add({k})"), k, |x, y| {
                (x + y) % k
            })?)
        }
        "sub-int" => {
            fixed()?;
            Builtin::Int(IntOp::new("sub-int", i64::checked_sub, true))
        }
        "add-real" => real("add-real", |x, y| x + y, false),
        "mul-real" => real("mul-real", |x, y| x * y, false),
        "sub-real" => real("sub-real", |x, y| x - y, false),
        "min-real" => real("min-real", f64::min, true),
        "max-real" => real("max-real", f64::max, true),
        "proj-left-real" => real("proj-left-real", |x, _| x, true),
        "proj-right-real" => real("proj-right-real", |_, y| y, true),
        "h-continuous" => Builtin::Real(RealOp::new(
            "h-continuous",
            |x| x > 4.0 && x.is_finite(),
            h_continuous,
            true,
            true,
        )),
        "pair-matrix" => {
            fixed()?;
            Builtin::Pair(PairMatrix)
        }
        _ => return Err(unknown()),
    };
    if matches!(b, Builtin::Real(_)) {
        fixed()?;
    }
    Ok(b)
}

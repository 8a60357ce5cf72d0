use std::fmt;
use std::hash::{Hash, Hasher};
use std::rc::Rc;
use std::sync::Arc;

use super::{AlgebraError, Law, Magma, MedialCertificate, Witness};

/// A finite-or-infinite double that is never NaN, with `-0.0` folded into `0.0`.
///
/// Equality and hashing are bitwise, which makes `Real` usable as a terminal
/// value in a hash-consed diagram.
#[derive(Clone, Copy)]
pub struct Real(f64);

impl Real {
    pub fn new(x: f64) -> Result<Real, AlgebraError> {
        if x.is_nan() {
            return Err(AlgebraError::NotANumber);
        }
        Ok(Real(if x == 0.0 { 0.0 } else { x }))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0.to_bits() == other.0.to_bits()
    }
}

impl Eq for Real {}

impl Hash for Real {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state);
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<f64> for Real {
    type Error = AlgebraError;

    fn try_from(x: f64) -> Result<Self, Self::Error> {
        Real::new(x)
    }
}

const RELATIVE_TOLERANCE: f64 = 1e-12;

fn close(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() <= RELATIVE_TOLERANCE * a.abs().max(b.abs())
}

type RealFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;
type CarrierFn = Arc<dyn Fn(f64) -> bool + Send + Sync>;

/// A binary operation on a subset of the reals.
///
/// The medial flag cannot be established by testing, so it is declared: the
/// catalog declares it for its own operations, and callers constructing their
/// own operation assert it themselves.
#[derive(Clone)]
pub struct RealOp {
    name: String,
    carrier: CarrierFn,
    op: RealFn,
    medial: bool,
    medial_witness: Option<Witness<Real>>,
    exact: bool,
}

impl RealOp {
    /// `carrier` decides membership of a single value; both operands and the
    /// result must belong to it. `exact` selects bitwise comparison of results
    /// instead of relative tolerance `1e-12`.
    pub fn new(
        name: impl Into<String>,
        carrier: impl Fn(f64) -> bool + Send + Sync + 'static,
        op: impl Fn(f64, f64) -> f64 + Send + Sync + 'static,
        declared_medial: bool,
        exact: bool,
    ) -> Self {
        RealOp {
            name: name.into(),
            carrier: Arc::new(carrier),
            op: Arc::new(op),
            medial: declared_medial,
            medial_witness: None,
            exact,
        }
    }

    pub fn with_medial_witness(mut self, w: Witness<Real>) -> Self {
        self.medial = false;
        self.medial_witness = Some(w);
        self
    }

    pub fn contains(&self, x: f64) -> bool {
        !x.is_nan() && (self.carrier)(x)
    }

    /// Domain predicate on operand pairs.
    pub fn in_domain(&self, a: f64, b: f64) -> bool {
        self.contains(a) && self.contains(b)
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn declared_medial(&self) -> bool {
        self.medial
    }

    /// Raw evaluation without carrier checks.
    pub fn apply_raw(&self, a: f64, b: f64) -> f64 {
        (self.op)(a, b)
    }
}

impl fmt::Debug for RealOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RealOp")
            .field("name", &self.name)
            .field("medial", &self.medial)
            .field("exact", &self.exact)
            .finish_non_exhaustive()
    }
}

impl Magma for RealOp {
    type Value = Real;

    fn name(&self) -> &str {
        &self.name
    }

    fn op(&self, a: &Real, b: &Real) -> Result<Real, AlgebraError> {
        let (x, y) = (a.get(), b.get());
        if !self.in_domain(x, y) {
            return Err(AlgebraError::carrier(
                &self.name,
                format!("operands ({x}, {y}) outside the domain"),
            ));
        }
        let z = (self.op)(x, y);
        if !z.is_finite() || !self.contains(z) {
            return Err(AlgebraError::carrier(
                &self.name,
                format!("{x} * {y} = {z} leaves the carrier"),
            ));
        }
        Real::new(z)
    }

    fn same(&self, a: &Real, b: &Real) -> bool {
        if self.exact {
            a == b
        } else {
            close(a.get(), b.get())
        }
    }

    fn medial_certificate(&self) -> MedialCertificate<Real> {
        if self.medial {
            MedialCertificate::Declared
        } else {
            MedialCertificate::Refuted(self.medial_witness.clone())
        }
    }
}

/// A binary operation on `i64`; overflow is a carrier violation.
#[derive(Clone)]
pub struct IntOp {
    name: String,
    op: fn(i64, i64) -> Option<i64>,
    medial: bool,
}

impl IntOp {
    pub fn new(
        name: impl Into<String>,
        op: fn(i64, i64) -> Option<i64>,
        declared_medial: bool,
    ) -> Self {
        IntOp {
            name: name.into(),
            op,
            medial: declared_medial,
        }
    }
}

impl fmt::Debug for IntOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntOp")
            .field("name", &self.name)
            .field("medial", &self.medial)
            .finish_non_exhaustive()
    }
}

impl Magma for IntOp {
    type Value = i64;

    fn name(&self) -> &str {
        &self.name
    }

    fn op(&self, a: &i64, b: &i64) -> Result<i64, AlgebraError> {
        (self.op)(*a, *b)
            .ok_or_else(|| AlgebraError::carrier(&self.name, format!("{a} * {b} overflows")))
    }

    fn medial_certificate(&self) -> MedialCertificate<i64> {
        if self.medial {
            MedialCertificate::Declared
        } else {
            MedialCertificate::Refuted(None)
        }
    }
}

/// Real pairs multiplied through the embedding
/// `(a,b) -> [[a,a],[b,b]]`, with `(0,0)` mapped to the identity matrix.
///
/// Away from `(0,0)` the product is `(a,b)*(c,d) = ((c+d)a, (c+d)b)`. When
/// `c+d = 0` for a nonzero right operand the matrix product is the zero matrix,
/// whose preimage is again `(0,0)`; the result is kept as `(0,0)` even though
/// that pair acts as the identity afterwards.
#[derive(Debug, Clone, Default)]
pub struct PairMatrix;

impl PairMatrix {
    pub const NAME: &'static str = "pair-matrix";

    /// Medial violation found by seeded random search over pairs with
    /// coordinates in `{0,1,2}` (seed 0, trial 7). The left operand is the
    /// identity, which reduces the law to `x2*(x3*x4) = x3*(x2*x4)`.
    pub fn medial_witness() -> Witness<[Real; 2]> {
        let p = |a: f64, b: f64| [Real(a), Real(b)];
        Witness {
            law: Law::Medial,
            operands: vec![p(0.0, 0.0), p(1.0, 1.0), p(1.0, 2.0), p(0.0, 2.0)],
            lhs: p(6.0, 6.0),
            rhs: p(4.0, 8.0),
        }
    }
}

impl Magma for PairMatrix {
    type Value = [Real; 2];

    fn name(&self) -> &str {
        Self::NAME
    }

    fn op(&self, x: &[Real; 2], y: &[Real; 2]) -> Result<[Real; 2], AlgebraError> {
        let zero = |p: &[Real; 2]| p[0].get() == 0.0 && p[1].get() == 0.0;
        if zero(x) {
            return Ok(*y);
        }
        if zero(y) {
            return Ok(*x);
        }
        let s = y[0].get() + y[1].get();
        let out = [s * x[0].get(), s * x[1].get()];
        if out.iter().any(|v| !v.is_finite()) {
            return Err(AlgebraError::carrier(Self::NAME, "product overflows"));
        }
        Ok([Real::new(out[0])?, Real::new(out[1])?])
    }

    fn same(&self, a: &[Real; 2], b: &[Real; 2]) -> bool {
        close(a[0].get(), b[0].get()) && close(a[1].get(), b[1].get())
    }

    fn medial_certificate(&self) -> MedialCertificate<[Real; 2]> {
        MedialCertificate::Refuted(Some(Self::medial_witness()))
    }
}

/// A term of the free magma over named leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Leaf(Rc<str>),
    Op(Rc<Term>, Rc<Term>),
}

impl Term {
    pub fn leaf(name: &str) -> Term {
        Term::Leaf(name.into())
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
        match self {
            Term::Leaf(s) => f.write_str(s),
            Term::Op(l, r) => {
                if !top {
                    f.write_str("(")?;
                }
                l.write(f, false)?;
                f.write_str("*")?;
                r.write(f, false)?;
                if !top {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, true)
    }
}

/// The free magma: `a * b` just builds the term `(a*b)`. Two terms are equal
/// only if they are syntactically identical, so it satisfies no law at all.
#[derive(Debug, Clone, Default)]
pub struct FreeMagma;

impl Magma for FreeMagma {
    type Value = Term;

    fn name(&self) -> &str {
        "free"
    }

    fn op(&self, a: &Term, b: &Term) -> Result<Term, AlgebraError> {
        Ok(Term::Op(Rc::new(a.clone()), Rc::new(b.clone())))
    }

    fn medial_certificate(&self) -> MedialCertificate<Term> {
        let x = |s: &str| Term::leaf(s);
        let (a, b, c, d) = (x("a"), x("b"), x("c"), x("d"));
        let lhs = self
            .op(&self.op(&a, &b).unwrap(), &self.op(&c, &d).unwrap())
            .unwrap();
        let rhs = self
            .op(&self.op(&a, &c).unwrap(), &self.op(&b, &d).unwrap())
            .unwrap();
        MedialCertificate::Refuted(Some(Witness {
            law: Law::Medial,
            operands: vec![a, b, c, d],
            lhs,
            rhs,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_canonicalizes_zero_and_rejects_nan() {
        assert_eq!(Real::new(-0.0).unwrap(), Real::new(0.0).unwrap());
        assert_eq!(Real::new(-0.0).unwrap().get().to_bits(), 0.0f64.to_bits());
        assert_eq!(Real::new(f64::NAN), Err(AlgebraError::NotANumber));
        assert_ne!(
            Real::new(1.0).unwrap(),
            Real::new(1.0 + f64::EPSILON).unwrap()
        );
    }

    #[test]
    fn real_op_checks_carrier() {
        let positive = RealOp::new("pos-add", |x| x > 0.0, |x, y| x + y, true, false);
        let r = |x| Real::new(x).unwrap();
        assert_eq!(positive.op(&r(1.0), &r(2.0)).unwrap(), r(3.0));
        assert!(positive.op(&r(-1.0), &r(2.0)).is_err());
        let overflow = RealOp::new("mul", |_| true, |x, y| x * y, true, false);
        assert!(overflow.op(&r(1e300), &r(1e300)).is_err());
    }

    #[test]
    fn tolerance_only_for_inexact_ops() {
        let r = |x| Real::new(x).unwrap();
        let inexact = RealOp::new("add", |_| true, |x, y| x + y, true, false);
        let exact = RealOp::new("min", |_| true, f64::min, true, true);
        let (a, b) = (r(1.0), r(1.0 + 4.0 * f64::EPSILON));
        assert!(inexact.same(&a, &b));
        assert!(!exact.same(&a, &b));
        assert!(!inexact.same(&r(1.0), &r(1.0 + 1e-9)));
    }

    #[test]
    fn int_overflow_is_carrier_violation() {
        let sub = IntOp::new("sub-int", i64::checked_sub, true);
        assert_eq!(sub.op(&2, &3).unwrap(), -1);
        assert!(sub.op(&i64::MIN, &1).is_err());
    }

    #[test]
    fn pair_matrix_matches_matrix_product() {
        let m = PairMatrix;
        let matrix = |p: [f64; 2]| {
            if p == [0.0, 0.0] {
                [[1.0, 0.0], [0.0, 1.0]]
            } else {
                [[p[0], p[0]], [p[1], p[1]]]
            }
        };
        let mul = |x: [[f64; 2]; 2], y: [[f64; 2]; 2]| {
            let mut z = [[0.0; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
                }
            }
            z
        };
        let pts = [[1.0, 2.0], [0.0, 0.0], [-3.0, 0.5], [2.0, 2.0], [0.0, 1.5]];
        for x in pts {
            for y in pts {
                let z = mul(matrix(x), matrix(y));
                let p = |v: [f64; 2]| [Real::new(v[0]).unwrap(), Real::new(v[1]).unwrap()];
                let got = m.op(&p(x), &p(y)).unwrap();
                assert_eq!(matrix([got[0].get(), got[1].get()]), z, "{x:?} * {y:?}");
            }
        }
    }

    #[test]
    fn pair_matrix_pinned_witness_is_a_violation() {
        let w = PairMatrix::medial_witness();
        let q = &w.operands;
        let found = crate::algebra::medial_violation_at(&PairMatrix, [&q[0], &q[1], &q[2], &q[3]])
            .unwrap()
            .unwrap();
        assert_eq!(found, w);
    }

    #[test]
    fn free_magma_renders_bracketings() {
        let f = FreeMagma;
        let t = |s: &str| Term::leaf(s);
        let ab = f.op(&t("a"), &t("b")).unwrap();
        let cd = f.op(&t("c"), &t("d")).unwrap();
        assert_eq!(f.op(&ab, &cd).unwrap().to_string(), "(a*b)*(c*d)");
        assert!(!f.medial_certificate().is_medial());
    }
}

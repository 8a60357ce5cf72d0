use std::fmt;

use super::{AlgebraError, Element, FiniteMagma, Magma, Profile};

/// The algebraic law a [`Witness`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    /// `a*b = b*a`
    Commutativity,
    /// `(a*b)*c = a*(b*c)`
    Associativity,
    /// `(a*b)*(c*d) = (a*c)*(b*d)`
    Medial,
    /// `e*x = x = x*e`
    UnitExistence,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::Commutativity => "commutativity",
            Law::Associativity => "associativity",
            Law::Medial => "medial",
            Law::UnitExistence => "unit-existence",
        })
    }
}

/// A concrete operand tuple at which a law fails: `lhs != rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<V> {
    pub law: Law,
    pub operands: Vec<V>,
    pub lhs: V,
    pub rhs: V,
}

impl<V> Witness<V> {
    /// Renders `(x,y,...): lhs != rhs` with a caller-supplied value formatter.
    pub fn render(&self, mut fmt_value: impl FnMut(&V) -> String) -> String {
        let ops: Vec<String> = self.operands.iter().map(&mut fmt_value).collect();
        format!(
            "({}): {} != {}",
            ops.join(","),
            fmt_value(&self.lhs),
            fmt_value(&self.rhs)
        )
    }
}

impl Witness<Element> {
    pub fn render_labels(&self, m: &FiniteMagma) -> String {
        self.render(|e| m.label(*e).to_string())
    }
}

impl<V: fmt::Display> fmt::Display for Witness<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|v| v.to_string()))
    }
}

/// Outcome of checking one law: holds, or fails with a witness.
#[derive(Debug, Clone, PartialEq)]
pub struct LawCheck<V> {
    pub holds: bool,
    pub witness: Option<Witness<V>>,
}

impl<V> LawCheck<V> {
    fn from_witness(witness: Option<Witness<V>>) -> Self {
        LawCheck {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Which violating tuple a checker reports when there are several.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessOrder {
    /// First violation in row-major order over operand tuples.
    Lexicographic,
    /// Violations with the most distinct operands first, ties broken
    /// lexicographically. Yields the textbook witnesses, e.g. `(d,a,c,b)` for
    /// the Tamura semigroup.
    #[default]
    MostDistinct,
}

/// Scans all `n^K` operand tuples for a violation, honouring `order`.
fn scan<const K: usize>(
    n: usize,
    order: WitnessOrder,
    mut violation: impl FnMut(&[usize; K]) -> Option<(usize, usize)>,
) -> Option<([usize; K], usize, usize)> {
    let max_distinct = K.min(n);
    let mut best: Option<(usize, [usize; K], usize, usize)> = None;
    let mut t = [0usize; K];
    loop {
        if let Some((lhs, rhs)) = violation(&t) {
            match order {
                WitnessOrder::Lexicographic => return Some((t, lhs, rhs)),
                WitnessOrder::MostDistinct => {
                    let d = distinct(&t);
                    if d == max_distinct {
                        return Some((t, lhs, rhs));
                    }
                    if best.is_none_or(|b| d > b.0) {
                        best = Some((d, t, lhs, rhs));
                    }
                }
            }
        }
        let mut pos = K;
        loop {
            if pos == 0 {
                return best.map(|(_, t, l, r)| (t, l, r));
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < n {
                break;
            }
            t[pos] = 0;
        }
    }
}

fn distinct(t: &[usize]) -> usize {
    (0..t.len()).filter(|&i| !t[..i].contains(&t[i])).count()
}

fn witness<const K: usize>(law: Law, found: ([usize; K], usize, usize)) -> Witness<Element> {
    let (t, lhs, rhs) = found;
    Witness {
        law,
        operands: t.iter().map(|&i| Element(i)).collect(),
        lhs: Element(lhs),
        rhs: Element(rhs),
    }
}

pub fn check_commutative(m: &FiniteMagma) -> LawCheck<Element> {
    check_commutative_with(m, WitnessOrder::default())
}

pub fn check_commutative_with(m: &FiniteMagma, order: WitnessOrder) -> LawCheck<Element> {
    let n = m.size();
    let t = m.table();
    let found = scan::<2>(n, order, |&[a, b]| {
        let (l, r) = (t[a * n + b].0, t[b * n + a].0);
        (l != r).then_some((l, r))
    });
    LawCheck::from_witness(found.map(|f| witness(Law::Commutativity, f)))
}

pub fn check_associative(m: &FiniteMagma) -> LawCheck<Element> {
    check_associative_with(m, WitnessOrder::default())
}

pub fn check_associative_with(m: &FiniteMagma, order: WitnessOrder) -> LawCheck<Element> {
    let n = m.size();
    let t = m.table();
    let op = |a: usize, b: usize| t[a * n + b].0;
    let found = scan::<3>(n, order, |&[a, b, c]| {
        let (l, r) = (op(op(a, b), c), op(a, op(b, c)));
        (l != r).then_some((l, r))
    });
    LawCheck::from_witness(found.map(|f| witness(Law::Associativity, f)))
}

pub fn check_medial(m: &FiniteMagma) -> LawCheck<Element> {
    check_medial_with(m, WitnessOrder::default())
}

pub fn check_medial_with(m: &FiniteMagma, order: WitnessOrder) -> LawCheck<Element> {
    let n = m.size();
    let t = m.table();
    let op = |a: usize, b: usize| t[a * n + b].0;
    let found = scan::<4>(n, order, |&[a, b, c, d]| {
        let (l, r) = (op(op(a, b), op(c, d)), op(op(a, c), op(b, d)));
        (l != r).then_some((l, r))
    });
    LawCheck::from_witness(found.map(|f| witness(Law::Medial, f)))
}

/// Evaluates the medial law at one quadruple; `Some` if it fails there.
pub fn medial_violation_at<M: Magma + ?Sized>(
    m: &M,
    quad: [&M::Value; 4],
) -> Result<Option<Witness<M::Value>>, AlgebraError> {
    let [a, b, c, d] = quad;
    let lhs = m.op(&m.op(a, b)?, &m.op(c, d)?)?;
    let rhs = m.op(&m.op(a, c)?, &m.op(b, d)?)?;
    Ok((!m.same(&lhs, &rhs)).then(|| Witness {
        law: Law::Medial,
        operands: quad.iter().map(|v| (*v).clone()).collect(),
        lhs,
        rhs,
    }))
}

/// All left units, all right units, and the two-sided unit if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Units {
    pub left: Vec<Element>,
    pub right: Vec<Element>,
    pub two_sided: Option<Element>,
}

pub fn find_units(m: &FiniteMagma) -> Units {
    let left: Vec<Element> = m
        .elements()
        .filter(|&e| m.elements().all(|x| m.get(e, x) == x))
        .collect();
    let right: Vec<Element> = m
        .elements()
        .filter(|&e| m.elements().all(|x| m.get(x, e) == x))
        .collect();
    let both: Vec<Element> = left.iter().copied().filter(|e| right.contains(e)).collect();
    if !left.is_empty() && !right.is_empty() {
        // e_l = e_l * e_r = e_r
        assert_eq!(
            both.len(),
            1,
            "left units {left:?} and right units {right:?} must meet in exactly one element"
        );
    }
    Units {
        two_sided: both.first().copied(),
        left,
        right,
    }
}

/// Why `e` is not a two-sided unit: the first `x` with `e*x != x`, else the
/// first `x` with `x*e != x`.
pub fn unit_violation(m: &FiniteMagma, e: Element) -> Option<Witness<Element>> {
    let left = m.elements().find(|&x| m.get(e, x) != x).map(|x| Witness {
        law: Law::UnitExistence,
        operands: vec![e, x],
        lhs: m.get(e, x),
        rhs: x,
    });
    left.or_else(|| {
        m.elements().find(|&x| m.get(x, e) != x).map(|x| Witness {
            law: Law::UnitExistence,
            operands: vec![x, e],
            lhs: m.get(x, e),
            rhs: x,
        })
    })
}

/// Classification of a finite magma against the laws that govern abstraction.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraReport {
    pub commutative: LawCheck<Element>,
    pub associative: LawCheck<Element>,
    pub medial: LawCheck<Element>,
    pub left_units: Vec<Element>,
    pub right_units: Vec<Element>,
    pub unit: Option<Element>,
}

impl AlgebraReport {
    pub fn is_semigroup(&self) -> bool {
        self.associative.holds
    }

    pub fn is_monoid(&self) -> bool {
        self.associative.holds && self.unit.is_some()
    }

    pub fn profile(&self) -> Profile {
        Profile {
            commutative: self.commutative.holds,
            associative: self.associative.holds,
            medial: self.medial.holds,
            unit: self.unit.is_some(),
        }
    }
}

pub fn classify(m: &FiniteMagma) -> AlgebraReport {
    let units = find_units(m);
    AlgebraReport {
        commutative: check_commutative(m),
        associative: check_associative(m),
        medial: check_medial(m),
        left_units: units.left,
        right_units: units.right,
        unit: units.two_sided,
    }
}

/// Law checks for an operation over an infinite carrier, by random sampling.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledReport<V> {
    pub trials: usize,
    pub commutative: LawCheck<V>,
    pub associative: LawCheck<V>,
    pub medial: LawCheck<V>,
}

/// Draws `trials` operand quadruples from `sample` and records the first
/// violation of each law. Passing laws are only evidence, not proof.
pub fn sample_laws<M: Magma + ?Sized>(
    m: &M,
    trials: usize,
    mut sample: impl FnMut() -> M::Value,
) -> Result<SampledReport<M::Value>, AlgebraError> {
    let mut comm = None;
    let mut assoc = None;
    let mut medial = None;
    for _ in 0..trials {
        let (a, b, c, d) = (sample(), sample(), sample(), sample());
        if comm.is_none() {
            let (l, r) = (m.op(&a, &b)?, m.op(&b, &a)?);
            if !m.same(&l, &r) {
                comm = Some(Witness {
                    law: Law::Commutativity,
                    operands: vec![a.clone(), b.clone()],
                    lhs: l,
                    rhs: r,
                });
            }
        }
        if assoc.is_none() {
            let l = m.op(&m.op(&a, &b)?, &c)?;
            let r = m.op(&a, &m.op(&b, &c)?)?;
            if !m.same(&l, &r) {
                assoc = Some(Witness {
                    law: Law::Associativity,
                    operands: vec![a.clone(), b.clone(), c.clone()],
                    lhs: l,
                    rhs: r,
                });
            }
        }
        if medial.is_none() {
            medial = medial_violation_at(m, [&a, &b, &c, &d])?;
        }
    }
    Ok(SampledReport {
        trials,
        commutative: LawCheck::from_witness(comm),
        associative: LawCheck::from_witness(assoc),
        medial: LawCheck::from_witness(medial),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin;

    fn finite(name: &str) -> FiniteMagma {
        builtin(name).unwrap().into_finite().unwrap()
    }

    fn els(m: &FiniteMagma, labels: &[&str]) -> Vec<Element> {
        labels.iter().map(|l| m.element(l).unwrap()).collect()
    }

    #[test]
    fn tamura_eval_and_laws() {
        let m = finite("tamura");
        let [d, c, b] = [m.element("d"), m.element("c"), m.element("b")].map(Option::unwrap);
        assert_eq!(m.eval(d, c).unwrap(), b);

        let comm = check_commutative(&m);
        assert!(!comm.holds);
        let w = comm.witness.unwrap();
        assert_eq!(w.operands, els(&m, &["a", "b"]));
        assert_ne!(w.lhs, w.rhs);

        assert!(check_associative(&m).holds);
        assert!(check_associative(&m).witness.is_none());

        let med = check_medial(&m).witness.unwrap();
        assert_eq!(med.operands, els(&m, &["d", "a", "c", "b"]));
        assert_eq!(med.lhs, m.element("a").unwrap());
        assert_eq!(med.rhs, m.element("b").unwrap());
        assert_eq!(med.render_labels(&m), "(d,a,c,b): a != b");
    }

    #[test]
    fn lexicographic_order_gives_first_tuple() {
        let m = finite("tamura");
        let med = check_medial_with(&m, WitnessOrder::Lexicographic)
            .witness
            .unwrap();
        assert_eq!(med.operands, els(&m, &["d", "a", "c", "a"]));

        let flip = finite("flip2");
        let w = check_associative_with(&flip, WitnessOrder::Lexicographic)
            .witness
            .unwrap();
        assert_eq!(w.operands, vec![Element(0); 3]);
        assert_eq!((w.lhs, w.rhs), (Element(1), Element(0)));
    }

    #[test]
    fn comm_nonassoc4_laws() {
        let m = finite("comm-nonassoc4");
        assert!(check_commutative(&m).holds);
        assert!(check_medial(&m).holds);
        let w = check_associative(&m).witness.unwrap();
        assert_eq!(w.operands, els(&m, &["a", "b", "c"]));
        assert_eq!(w.lhs, m.element("a").unwrap());
        assert_eq!(w.rhs, m.element("d").unwrap());
    }

    #[test]
    fn flip2_is_medial_but_nothing_else() {
        let m = finite("flip2");
        assert_eq!(m.eval(Element(0), Element(1)).unwrap(), Element(0));
        let r = classify(&m);
        assert!(!r.commutative.holds);
        assert!(!r.associative.holds);
        assert!(r.medial.holds);
        assert_eq!(r.unit, None);
    }

    #[test]
    fn size_one_magma_satisfies_everything() {
        let m = finite("z-add(1)");
        let r = classify(&m);
        assert!(r.commutative.holds && r.associative.holds && r.medial.holds);
        assert_eq!(r.unit, Some(Element(0)));
    }

    #[test]
    fn projection_units() {
        for k in 2..5 {
            let m = finite(&format!("proj-left({k})"));
            let u = find_units(&m);
            assert!(u.left.is_empty());
            assert_eq!(u.right, m.elements().collect::<Vec<_>>());
            assert_eq!(u.two_sided, None);
            assert!(check_medial(&m).holds);

            let m = finite(&format!("proj-right({k})"));
            let u = find_units(&m);
            assert_eq!(u.left.len(), k);
            assert!(u.right.is_empty());
        }
    }

    #[test]
    fn tamura_has_no_units() {
        let m = finite("tamura");
        let u = find_units(&m);
        assert!(u.left.is_empty() && u.right.is_empty() && u.two_sided.is_none());
        // nothing maps to d
        let d = m.element("d").unwrap();
        for e in m.elements() {
            let w = unit_violation(&m, e).unwrap();
            assert_eq!(w.law, Law::UnitExistence);
            assert_ne!(w.lhs, w.rhs);
        }
        assert!(m.table().iter().all(|&x| x != d));
    }

    #[test]
    fn cyclic_group_unit() {
        let m = finite("z-add(3)");
        assert_eq!(find_units(&m).two_sided, Some(Element(0)));
        assert_eq!(unit_violation(&m, Element(0)), None);
        let r = classify(&m);
        assert!(r.is_monoid() && r.medial.holds && r.commutative.holds);

        let r = classify(&finite("z-add(2)"));
        assert!(r.commutative.holds && r.associative.holds && r.medial.holds);
        assert_eq!(r.unit, Some(Element(0)));
    }

    #[test]
    fn tamura_report() {
        let r = classify(&finite("tamura"));
        assert_eq!(
            r.profile(),
            Profile {
                commutative: false,
                associative: true,
                medial: false,
                unit: false
            }
        );
        assert!(r.is_semigroup() && !r.is_monoid());
    }
}

use super::{AlgebraError, Element, FiniteMagma};

/// An operation induced on a finite set through a surjection and its section.
#[derive(Debug, Clone, PartialEq)]
pub struct Transported {
    /// The induced operation on the representatives `g(M)`, labelled by the
    /// representatives' labels in `S`.
    pub magma: FiniteMagma,
    /// `representatives[x] = g(x)`, indices into `S`.
    pub representatives: Vec<usize>,
    /// `classes[x] = { s : g(f(s)) = g(x) }`.
    pub classes: Vec<Vec<usize>>,
}

/// Carries the operation of `m` over to `S / ~` where `s ~ t` iff
/// `g(f(s)) = g(f(t))`, using `s *' t = g(f(s) * f(t))`.
///
/// `carrier` labels the elements of `S`; `f[s]` is the image of `s` in `m`,
/// `g[x]` the chosen preimage of `x`. Requires `f` onto and `f(g(x)) = x`.
pub fn transport(
    m: &FiniteMagma,
    carrier: &[String],
    f: &[usize],
    g: &[usize],
) -> Result<Transported, AlgebraError> {
    let fail = |msg: String| Err(AlgebraError::TransportPrecondition(msg));
    if f.len() != carrier.len() {
        return fail(format!(
            "f has {} entries for a carrier of {}",
            f.len(),
            carrier.len()
        ));
    }
    if g.len() != m.size() {
        return fail(format!(
            "g has {} entries for a magma of size {}",
            g.len(),
            m.size()
        ));
    }
    if let Some(s) = f.iter().position(|&x| x >= m.size()) {
        return fail(format!(
            "f({}) is not an element of `{}`",
            carrier[s],
            m.name()
        ));
    }
    let mut hit = vec![false; m.size()];
    for &x in f {
        hit[x] = true;
    }
    if let Some(x) = hit.iter().position(|h| !h) {
        return fail(format!(
            "f is not surjective: `{}` has no preimage",
            m.label(Element(x))
        ));
    }
    for (x, &s) in g.iter().enumerate() {
        if s >= carrier.len() {
            return fail(format!("g({}) is outside the carrier", m.label(Element(x))));
        }
        if f[s] != x {
            return fail(format!(
                "f(g({0})) = {1} != {0}",
                m.label(Element(x)),
                m.label(Element(f[s]))
            ));
        }
    }

    let reps = g.to_vec();
    let index_of_rep = |s: usize| reps.iter().position(|&r| r == s).expect("g(M) is closed");
    let labels: Vec<String> = reps.iter().map(|&s| carrier[s].clone()).collect();
    let mut table = Vec::with_capacity(reps.len() * reps.len());
    for &s in &reps {
        for &t in &reps {
            let product = m.get(Element(f[s]), Element(f[t]));
            table.push(Element(index_of_rep(g[product.0])));
        }
    }
    let classes = reps
        .iter()
        .map(|&r| (0..carrier.len()).filter(|&s| g[f[s]] == r).collect())
        .collect();
    Ok(Transported {
        magma: FiniteMagma::new(format!("{}-transported", m.name()), labels, table)?,
        representatives: reps,
        classes,
    })
}

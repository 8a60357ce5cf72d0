use abstractdd::algebra::{classify, sample_laws, FiniteMagma, LawCheck, MedialCertificate};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::input::{algebra_error, Carrier};
use crate::report::{yes_no, CliError, Report};

fn labels(m: &FiniteMagma, es: &[abstractdd::algebra::Element]) -> String {
    if es.is_empty() {
        "none".into()
    } else {
        es.iter().map(|&e| m.label(e)).collect::<Vec<_>>().join(" ")
    }
}

pub fn finite(m: &FiniteMagma, r: &mut Report) {
    let rep = classify(m);
    r.kv("SIZE", m.size());
    r.kv("ELEMENTS", m.labels().join(" "));
    let law = |check: &LawCheck<_>, no: &str| match &check.witness {
        None => "yes".to_string(),
        Some(w) => format!("{no}, witness {}", w.render_labels(m)),
    };
    r.kv("associative", law(&rep.associative, "no"));
    r.kv("commutative", law(&rep.commutative, "no"));
    r.kv("medial", law(&rep.medial, "NO"));
    r.kv("left_units", labels(m, &rep.left_units));
    r.kv("right_units", labels(m, &rep.right_units));
    r.kv(
        "unit",
        rep.unit
            .map_or("none".to_string(), |e| m.label(e).to_string()),
    );
    r.kv("semigroup", yes_no(rep.is_semigroup()));
    r.kv("monoid", yes_no(rep.is_monoid()));
    r.kv("PROFILE", rep.profile());
}

/// Operations on infinite carriers: laws are sampled, the medial verdict
/// comes from the operation's certificate.
pub fn sampled<C: Carrier>(
    m: &C,
    trials: usize,
    seed: u64,
    r: &mut Report,
) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rep = sample_laws(m, trials, || m.sample(&mut rng)).map_err(algebra_error)?;
    r.kv("CARRIER", m.kind());
    r.kv("MODE", format!("sampled, {trials} trials, seed {seed}"));
    let show = |check: &LawCheck<C::Value>, no: &str| match &check.witness {
        None => "yes (no violation sampled)".to_string(),
        Some(w) => format!("{no}, witness {}", w.render(|v| m.fmt_value(v))),
    };
    r.kv("associative", show(&rep.associative, "no"));
    r.kv("commutative", show(&rep.commutative, "no"));
    let medial = match m.medial_certificate() {
        MedialCertificate::Verified => "yes".to_string(),
        MedialCertificate::Declared => "yes (declared)".to_string(),
        MedialCertificate::Refuted(Some(w)) => {
            format!("NO, witness {}", w.render(|v| m.fmt_value(v)))
        }
        MedialCertificate::Refuted(None) => match &rep.medial.witness {
            Some(w) => format!("NO, witness {}", w.render(|v| m.fmt_value(v))),
            None => "NO (declared)".to_string(),
        },
    };
    r.kv("medial", medial);
    r.kv("medial_sampled", show(&rep.medial, "no"));
    r.kv("unit", "not checked");
    Ok(())
}

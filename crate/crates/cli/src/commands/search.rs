use abstractdd::algebra::{FiniteMagma, MedialCertificate};
use abstractdd::gsf::{search_counterexample, SearchOutcome, TruthTable, MAX_VARS};
use itertools::Itertools;

use crate::input::{eval_error, Carrier};
use crate::report::{CliError, Report};

/// Prints the function and the two outcomes that differ.
fn counterexample<C: Carrier>(
    m: &C,
    f: &TruthTable<C::Value>,
    r: &mut Report,
) -> Result<(), CliError> {
    r.kv("VERDICT", "not abstractable");
    let rows = f.to_text(|v| m.fmt_value(v));
    r.kv("FUNCTION", rows.lines().skip(1).join(", "));
    let dep = f
        .is_function_abstractable(m)
        .map_err(eval_error)?
        .ok_or_else(|| CliError::Parse("constructed function is abstractable".into()))?;
    r.kv("AT", dep.assignment);
    r.kv(
        &format!("VARIABLE {} FIRST", dep.i),
        m.fmt_value(&dep.i_first),
    );
    r.kv(
        &format!("VARIABLE {} FIRST", dep.j),
        m.fmt_value(&dep.j_first),
    );
    Ok(())
}

fn check_n(n: usize) -> Result<(), CliError> {
    if !(2..=MAX_VARS).contains(&n) {
        return Err(CliError::Parse(format!("--n must be in 2..={MAX_VARS}")));
    }
    Ok(())
}

pub fn finite(m: &FiniteMagma, n: usize, r: &mut Report) -> Result<(), CliError> {
    check_n(n)?;
    r.kv("N", n);
    match search_counterexample(m, n).map_err(eval_error)? {
        SearchOutcome::Counterexample(f) => {
            if let Some(w) = abstractdd::algebra::check_medial(m).witness {
                r.kv("MEDIAL_WITNESS", w.render_labels(m));
            }
            counterexample(m, &f, r)
        }
        SearchOutcome::Abstractable {
            quadruples_checked,
            functions_checked,
        } => {
            r.kv(
                "VERDICT",
                format!("abstractable (medial law verified over {quadruples_checked} quadruples)"),
            );
            r.kv(
                "FUNCTIONS_CHECKED",
                functions_checked.map_or("not enumerated (over budget)".to_string(), |c| {
                    c.to_string()
                }),
            );
            Ok(())
        }
    }
}

/// Infinite carriers: the verdict follows the operation's certificate.
pub fn declared<C: Carrier>(m: &C, n: usize, r: &mut Report) -> Result<(), CliError> {
    check_n(n)?;
    r.kv("N", n);
    match m.medial_certificate() {
        MedialCertificate::Verified | MedialCertificate::Declared => {
            r.kv("VERDICT", "abstractable (medial law declared)");
            Ok(())
        }
        MedialCertificate::Refuted(Some(w)) => {
            r.kv("MEDIAL_WITNESS", w.render(|v| m.fmt_value(v)));
            let q = [0, 1, 2, 3].map(|k| w.operands[k].clone());
            let f = TruthTable::make_quadruple_function(n, q).map_err(eval_error)?;
            counterexample(m, &f, r)
        }
        MedialCertificate::Refuted(None) => {
            r.kv("VERDICT", "not abstractable (no witness recorded)");
            Ok(())
        }
    }
}

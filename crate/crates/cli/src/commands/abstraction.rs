use abstractdd::algebra::MedialCertificate;
use abstractdd::mtbdd::{AbstractionRequest, DdError, Manager, NodeId};
use itertools::Itertools;

use crate::args::{FunctionSource, Order, PolicyArg};
use crate::input::{eval_error, load_function, Carrier};
use crate::report::{CliError, Report};

/// Permutations explored by `--order all` are limited to this many variables.
pub const MAX_ALL_ORDERS_VARS: usize = 6;

fn join(vars: &[usize]) -> String {
    vars.iter().join(" ")
}

fn result<C: Carrier>(m: &C, mgr: &Manager<C::Value>, node: NodeId, key: &str, r: &mut Report) {
    match mgr.terminal_value(node) {
        Some(v) => r.kv(key, format!("constant {}", m.fmt_value(v))),
        None => {
            let support = mgr.support(node).expect("live node");
            let nodes = mgr.node_count(node).expect("live node");
            r.kv(key, format!("nodes {nodes}, support {}", join(&support)));
            let dump = mgr.dump_with(node, |v| m.fmt_value(v)).expect("live node");
            for line in dump.lines() {
                r.kv("DUMP", line);
            }
        }
    }
}

fn gate_verdict<C: Carrier>(m: &C, cert: &MedialCertificate<C::Value>) -> String {
    match cert {
        MedialCertificate::Verified => "medial law verified".into(),
        MedialCertificate::Declared => "medial law declared".into(),
        MedialCertificate::Refuted(Some(w)) => {
            format!("refuses, witness {}", w.render(|v| m.fmt_value(v)))
        }
        MedialCertificate::Refuted(None) => "refuses, medial law not established".into(),
    }
}

pub fn run<C: Carrier>(
    m: C,
    function: &FunctionSource,
    vars: &[usize],
    order: Order,
    policy: PolicyArg,
    r: &mut Report,
) -> Result<(), CliError> {
    let f = load_function(function, &m)?;
    let n = f.table.n();
    r.kv("FUNCTION_SHA256", &f.digest);
    r.kv("N", n);
    r.kv("VARS", join(vars));
    for (k, &v) in vars.iter().enumerate() {
        if v == 0 || v > n {
            return Err(CliError::Parse(format!(
                "variable {v} out of range 1..={n}"
            )));
        }
        if vars[..k].contains(&v) {
            return Err(CliError::Parse(format!("duplicate variable {v}")));
        }
    }
    let mut mgr = Manager::new(n);
    let op = mgr.register_op(m.clone());
    let root = mgr.from_truth_table(&f.table).map_err(eval_error)?;
    let cert = mgr.medial_certificate(op).map_err(eval_error)?.clone();

    if order == Order::All {
        r.kv("ORDER", "all");
        if vars.len() > MAX_ALL_ORDERS_VARS {
            return Err(CliError::Budget(format!(
                "--order all explores {}! orders; at most {MAX_ALL_ORDERS_VARS} variables allowed",
                vars.len()
            )));
        }
        r.kv("POLICY", "forced (every permutation)");
        r.kv("GATE", gate_verdict(&m, &cert));
        let mut outcomes: Vec<(NodeId, Vec<usize>, usize)> = Vec::new();
        let mut total = 0;
        for perm in vars.iter().copied().permutations(vars.len()) {
            total += 1;
            let node = mgr.abstract_in_order(op, &perm, root).map_err(eval_error)?;
            match outcomes.iter_mut().find(|o| o.0 == node) {
                Some(o) => o.2 += 1,
                None => outcomes.push((node, perm, 1)),
            }
        }
        r.kv("ORDERS", total);
        r.kv("DISTINCT_RESULTS", outcomes.len());
        for (k, (node, perm, count)) in outcomes.iter().enumerate() {
            r.kv(
                &format!("RESULT {}", k + 1),
                format!("order {}, reached by {count} of {total} orders", join(perm)),
            );
            result(&m, &mgr, *node, &format!("VALUE {}", k + 1), r);
        }
        return Ok(());
    }

    let mut order_vars = vars.to_vec();
    if order == Order::Ascending {
        order_vars.sort_unstable();
    }
    let req = match policy {
        PolicyArg::Gated => AbstractionRequest::gated(op, order_vars.clone()),
        PolicyArg::Forced => AbstractionRequest::forced(op, order_vars.clone()),
    };
    r.kv("ORDER", join(&order_vars));
    r.kv(
        "POLICY",
        match policy {
            PolicyArg::Gated => "gated",
            PolicyArg::Forced => "forced",
        },
    );
    match mgr.abstract_set(&req, root) {
        Ok(node) => {
            if policy == PolicyArg::Gated && vars.len() > 1 {
                r.kv("GATE", gate_verdict(&m, &cert));
                r.kv(
                    "EVALUATED_ORDER",
                    join(&{
                        let mut v = order_vars.clone();
                        v.sort_unstable();
                        v
                    }),
                );
            }
            result(&m, &mgr, node, "RESULT", r);
            Ok(())
        }
        Err(DdError::NotWellDefined { op, vars, witness }) => {
            r.kv("GATE", gate_verdict(&m, &cert));
            r.kv(
                "REFUSED",
                format!(
                    "abstraction over {} is not well-defined for {op}",
                    join(&vars)
                ),
            );
            if let Some(w) = witness {
                r.kv("WITNESS", w.render(|v| m.fmt_value(v)));
            }
            Err(CliError::Refused)
        }
        Err(e) => Err(eval_error(e)),
    }
}

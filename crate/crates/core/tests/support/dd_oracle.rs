//! Dense recomputation oracle for diagram operations. Shared by the core
//! integration tests and the acceptance runner.

use std::fmt::Debug;
use std::hash::Hash;

use abstractdd::algebra::Magma;
use abstractdd::gsf::TruthTable;
use abstractdd::mtbdd::{AbstractionRequest, Manager, NodeId};
use rand::seq::SliceRandom;
use rand::Rng;

/// `row` with the bit of variable `i` set to `b`; variable 1 is the most
/// significant bit.
fn with_bit(n: usize, row: usize, i: usize, b: bool) -> usize {
    let mask = 1 << (n - i);
    if b {
        row | mask
    } else {
        row & !mask
    }
}

fn dense_apply<M: Magma>(m: &M, f: &[M::Value], g: &[M::Value]) -> Vec<M::Value> {
    f.iter().zip(g).map(|(a, b)| m.op(a, b).unwrap()).collect()
}

fn dense_restrict<V: Clone>(n: usize, f: &[V], i: usize, b: bool) -> Vec<V> {
    (0..f.len())
        .map(|row| f[with_bit(n, row, i, b)].clone())
        .collect()
}

fn dense_abstract<M: Magma>(m: &M, n: usize, f: &[M::Value], i: usize) -> Vec<M::Value> {
    (0..f.len())
        .map(|row| {
            m.op(
                &f[with_bit(n, row, i, false)],
                &f[with_bit(n, row, i, true)],
            )
            .unwrap()
        })
        .collect()
}

fn expect<V: Clone + Eq + Hash + Debug>(
    mgr: &Manager<V>,
    node: NodeId,
    want: &[V],
    what: &str,
) -> Result<(), String> {
    mgr.audit(node).map_err(|e| format!("{what}: {e}"))?;
    let got = mgr.to_truth_table(node).map_err(|e| e.to_string())?;
    if got.values() != want {
        return Err(format!("{what}: got {:?}, want {want:?}", got.values()));
    }
    Ok(())
}

/// One randomized instance: two random functions over `n` variables with
/// terminals from `value`, checked under apply, restrict, single abstraction
/// and forced-order set abstraction.
pub fn check_instance<M, R>(
    m: M,
    n: usize,
    rng: &mut R,
    mut value: impl FnMut(&mut R) -> M::Value,
) -> Result<(), String>
where
    M: Magma + Clone + 'static,
    M::Value: Eq + Hash,
    R: Rng,
{
    let size = 1usize << n;
    let f: Vec<M::Value> = (0..size).map(|_| value(rng)).collect();
    let g: Vec<M::Value> = (0..size).map(|_| value(rng)).collect();
    let mut mgr = Manager::new(n);
    let op = mgr.register_op(m.clone());
    let u = mgr
        .from_truth_table(&TruthTable::new(n, f.clone()).unwrap())
        .map_err(|e| e.to_string())?;
    let v = mgr
        .from_truth_table(&TruthTable::new(n, g.clone()).unwrap())
        .map_err(|e| e.to_string())?;
    expect(&mgr, u, &f, "build")?;

    let w = mgr.apply(op, u, v).map_err(|e| e.to_string())?;
    expect(&mgr, w, &dense_apply(&m, &f, &g), "apply")?;

    let i = rng.gen_range(1..=n);
    let b = rng.gen_bool(0.5);
    let r = mgr.restrict(u, i, b).map_err(|e| e.to_string())?;
    expect(&mgr, r, &dense_restrict(n, &f, i, b), "restrict")?;
    if mgr.support(r).map_err(|e| e.to_string())?.contains(&i) {
        return Err(format!("restrict: variable {i} still in support"));
    }

    let a = mgr.abstract_var(op, i, u).map_err(|e| e.to_string())?;
    expect(&mgr, a, &dense_abstract(&m, n, &f, i), "abstract")?;

    let mut vars: Vec<usize> = (1..=n).collect();
    vars.shuffle(rng);
    vars.truncate(rng.gen_range(1..=n));
    let mut want = f.clone();
    for &x in &vars {
        want = dense_abstract(&m, n, &want, x);
    }
    let s = mgr
        .abstract_set(&AbstractionRequest::forced(op, vars.clone()), u)
        .map_err(|e| e.to_string())?;
    expect(&mgr, s, &want, &format!("abstract_set {vars:?}"))?;

    // cached and uncached recomputation agree on node identity
    mgr.clear_caches();
    let s2 = mgr
        .abstract_set(&AbstractionRequest::forced(op, vars.clone()), u)
        .map_err(|e| e.to_string())?;
    if s != s2 {
        return Err("abstract_set differs after clearing caches".into());
    }
    Ok(())
}

/// Builds `values` by Shannon expansion, visiting the high branch first when
/// `high_first` is set.
fn build_manual<V: Clone + Eq + Hash + Debug>(
    mgr: &mut Manager<V>,
    var: usize,
    values: &[V],
    high_first: bool,
) -> NodeId {
    if values.len() == 1 {
        return mgr.mk_terminal(values[0].clone());
    }
    let (lo, hi) = values.split_at(values.len() / 2);
    let (low, high) = if high_first {
        let h = build_manual(mgr, var + 1, hi, true);
        (build_manual(mgr, var + 1, lo, true), h)
    } else {
        let l = build_manual(mgr, var + 1, lo, false);
        (l, build_manual(mgr, var + 1, hi, false))
    };
    mgr.mk_node(var, low, high).unwrap()
}

/// Builds one random function four ways in a manager already holding unrelated
/// nodes and checks that every construction returns the same node id.
pub fn check_canonicity<R: Rng>(n: usize, size: usize, rng: &mut R) -> Result<(), String> {
    let mut mgr: Manager<usize> = Manager::new(n);
    for _ in 0..rng.gen_range(0..4) {
        let noise = TruthTable::from_fn(n, |_| rng.gen_range(0..size)).unwrap();
        mgr.from_truth_table(&noise).unwrap();
    }
    let f = TruthTable::from_fn(n, |_| rng.gen_range(0..size)).unwrap();
    let high_first = build_manual(&mut mgr, 1, f.values(), true);
    let direct = mgr.from_truth_table(&f).unwrap();
    let low_first = build_manual(&mut mgr, 1, f.values(), false);
    // reassemble from the two cofactors of a random variable
    let i = rng.gen_range(1..=n);
    let lo = mgr.restrict(direct, i, false).unwrap();
    let hi = mgr.restrict(direct, i, true).unwrap();
    let lo_t = mgr.to_truth_table(lo).unwrap();
    let hi_t = mgr.to_truth_table(hi).unwrap();
    let mixed = TruthTable::from_fn(n, |b| {
        if b.bit(i) {
            *hi_t.get(b).unwrap()
        } else {
            *lo_t.get(b).unwrap()
        }
    })
    .unwrap();
    let reassembled = mgr.from_truth_table(&mixed).unwrap();
    let ids = [direct, high_first, low_first, reassembled];
    if ids.iter().any(|&id| id != direct) {
        return Err(format!("node ids differ: {ids:?}"));
    }
    Ok(())
}

//! JSON entry points for the browser demo. Every function takes and returns
//! plain strings so the page needs no bindings beyond `wasm-bindgen`.

use abstractdd::algebra::{
    builtin, classify, enumerate_tables, profile_counts, Builtin, Filter, FiniteMagma, LawCheck,
    BUILTIN_NAMES,
};
use abstractdd::gsf::TruthTable;
use abstractdd::mtbdd::{Manager, NodeId};
use itertools::Itertools;
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct Law {
    holds: bool,
    witness: Option<String>,
}

#[derive(Serialize)]
struct Classification {
    size: usize,
    elements: Vec<String>,
    commutative: Law,
    associative: Law,
    medial: Law,
    left_units: Vec<String>,
    right_units: Vec<String>,
    unit: Option<String>,
}

#[derive(Serialize)]
struct Outcome {
    order: Vec<usize>,
    orders: usize,
    /// `None` when the result still depends on some variable.
    constant: Option<String>,
    dump: String,
}

#[derive(Serialize)]
struct Orders {
    n: usize,
    vars: Vec<usize>,
    total_orders: usize,
    medial: bool,
    results: Vec<Outcome>,
}

#[derive(Serialize)]
struct ProfileCount {
    profile: String,
    count: u64,
    examples: Vec<String>,
}

/// Largest variable set explored by [`abstraction_orders`].
pub const MAX_ORDER_VARS: usize = 5;

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    let v = match r {
        Ok(v) => serde_json::json!({ "ok": true, "value": v }),
        Err(e) => serde_json::json!({ "ok": false, "error": e }),
    };
    v.to_string()
}

fn parse_magma(text: &str) -> Result<FiniteMagma, String> {
    FiniteMagma::parse("input", text).map_err(|e| e.to_string())
}

fn law(m: &FiniteMagma, c: &LawCheck<abstractdd::algebra::Element>) -> Law {
    Law {
        holds: c.holds,
        witness: c.witness.as_ref().map(|w| w.render_labels(m)),
    }
}

pub fn classify_json(text: &str) -> String {
    to_json(parse_magma(text).map(|m| {
        let r = classify(&m);
        let names = |es: &[abstractdd::algebra::Element]| {
            es.iter().map(|&e| m.label(e).to_string()).collect()
        };
        Classification {
            size: m.size(),
            elements: m.labels().to_vec(),
            commutative: law(&m, &r.commutative),
            associative: law(&m, &r.associative),
            medial: law(&m, &r.medial),
            left_units: names(&r.left_units),
            right_units: names(&r.right_units),
            unit: r.unit.map(|e| m.label(e).to_string()),
        }
    }))
}

fn orders(text: &str, values: &str, vars: &str) -> Result<Orders, String> {
    let m = parse_magma(text)?;
    let items: Vec<&str> = values
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if items.len() < 2 || !items.len().is_power_of_two() {
        return Err(format!("need 2^n values, got {}", items.len()));
    }
    let n = items.len().trailing_zeros() as usize;
    let cells = items
        .iter()
        .map(|s| {
            m.element(s)
                .ok_or_else(|| format!("`{s}` is not an element"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let vars: Vec<usize> = vars
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("bad variable `{s}`")))
        .collect::<Result<_, _>>()?;
    if vars.is_empty() || vars.len() > MAX_ORDER_VARS {
        return Err(format!("choose 1 to {MAX_ORDER_VARS} variables"));
    }
    if let Some(v) = vars.iter().find(|&&v| v == 0 || v > n) {
        return Err(format!("variable {v} out of range 1..={n}"));
    }
    if vars.iter().duplicates().next().is_some() {
        return Err("duplicate variable".into());
    }
    let f = TruthTable::new(n, cells).map_err(|e| e.to_string())?;
    let medial = abstractdd::algebra::check_medial(&m).holds;
    let mut mgr = Manager::new(n);
    let op = mgr.register_op(m.clone());
    let root = mgr.from_truth_table(&f).map_err(|e| e.to_string())?;
    let mut found: Vec<(NodeId, Vec<usize>, usize)> = Vec::new();
    let mut total = 0;
    for perm in vars.iter().copied().permutations(vars.len()) {
        total += 1;
        let node = mgr
            .abstract_in_order(op, &perm, root)
            .map_err(|e| e.to_string())?;
        match found.iter_mut().find(|o| o.0 == node) {
            Some(o) => o.2 += 1,
            None => found.push((node, perm, 1)),
        }
    }
    let results = found
        .into_iter()
        .map(|(node, order, orders)| Outcome {
            order,
            orders,
            constant: mgr.terminal_value(node).map(|&e| m.label(e).to_string()),
            dump: mgr
                .dump_with(node, |&e| m.label(e).to_string())
                .unwrap_or_default(),
        })
        .collect();
    Ok(Orders {
        n,
        vars,
        total_orders: total,
        medial,
        results,
    })
}

pub fn orders_json(text: &str, values: &str, vars: &str) -> String {
    to_json(orders(text, values, vars))
}

fn profiles(size: usize, filters: &str, examples: usize) -> Result<Vec<ProfileCount>, String> {
    let filters = filters
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse::<Filter>)
        .collect::<Result<Vec<_>, _>>()?;
    let tables = enumerate_tables(size).map_err(|e| e.to_string())?;
    Ok(profile_counts(tables, &filters, examples)
        .into_iter()
        .map(|(p, t)| ProfileCount {
            profile: p.to_string(),
            count: t.count,
            examples: t.examples.iter().map(FiniteMagma::to_text).collect(),
        })
        .collect())
}

pub fn profiles_json(size: usize, filters: &str, examples: usize) -> String {
    to_json(profiles(size, filters, examples))
}

fn finite_builtin(name: &str) -> Result<String, String> {
    match builtin(name).map_err(|e| e.to_string())? {
        Builtin::Finite(m) => Ok(m.to_text()),
        other => Err(format!("`{}` has an infinite carrier", other.name())),
    }
}

pub fn builtin_json(name: &str) -> String {
    to_json(finite_builtin(name))
}

/// Catalog names that denote finite tables, sized entries at `k = 2` and `3`.
pub fn finite_builtin_names() -> Vec<String> {
    BUILTIN_NAMES
        .iter()
        .flat_map(|n| match n.strip_suffix("(k)") {
            Some(base) => vec![format!("{base}(2)"), format!("{base}(3)")],
            None => vec![n.to_string()],
        })
        .filter(|n| matches!(builtin(n), Ok(Builtin::Finite(_))))
        .collect()
}

#[wasm_bindgen]
pub fn classify_magma(text: &str) -> String {
    classify_json(text)
}

#[wasm_bindgen]
pub fn abstraction_orders(text: &str, values: &str, vars: &str) -> String {
    orders_json(text, values, vars)
}

#[wasm_bindgen]
pub fn enumerate_profiles(size: usize, filters: &str, examples: usize) -> String {
    profiles_json(size, filters, examples)
}

#[wasm_bindgen]
pub fn builtin_table(name: &str) -> String {
    builtin_json(name)
}

#[wasm_bindgen]
pub fn builtin_names() -> String {
    serde_json::to_string(&finite_builtin_names()).expect("strings serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn value(s: &str) -> Value {
        let v: Value = serde_json::from_str(s).unwrap();
        assert_eq!(v["ok"], true, "{v}");
        v["value"].clone()
    }

    fn tamura() -> String {
        value(&builtin_json("tamura")).as_str().unwrap().to_string()
    }

    #[test]
    fn classify_tamura() {
        let v = value(&classify_json(&tamura()));
        assert_eq!(v["associative"]["holds"], true);
        assert_eq!(v["medial"]["holds"], false);
        assert_eq!(v["medial"]["witness"], "(d,a,c,b): a != b");
        assert_eq!(v["unit"], Value::Null);
    }

    #[test]
    fn parse_error_is_reported() {
        let v: Value = serde_json::from_str(&classify_json("elements: a\nz\n")).unwrap();
        assert_eq!(v["ok"], false);
        assert!(v["error"].as_str().unwrap().contains("line 2"));
    }

    #[test]
    fn tamura_orders_split() {
        let v = value(&orders_json(&tamura(), "d,a,c,b", "1 2"));
        assert_eq!(v["total_orders"], 2);
        let mut consts: Vec<String> = v["results"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["constant"].as_str().unwrap().to_string())
            .collect();
        consts.sort();
        assert_eq!(consts, ["a", "b"]);
    }

    #[test]
    fn medial_orders_agree() {
        let z3 = value(&builtin_json("z-add(3)"))
            .as_str()
            .unwrap()
            .to_string();
        let v = value(&orders_json(&z3, "0,1,2,0,1,1,2,0", "3,1,2"));
        assert_eq!(v["medial"], true);
        assert_eq!(v["total_orders"], 6);
        assert_eq!(v["results"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn order_errors() {
        for (vals, vars) in [
            ("a,b,c", "1"),
            ("a,b", "2"),
            ("a,b,c,d", "1 1"),
            ("a,q", "1"),
        ] {
            let v: Value = serde_json::from_str(&orders_json(&tamura(), vals, vars)).unwrap();
            assert_eq!(v["ok"], false, "{vals} {vars}");
        }
    }

    #[test]
    fn profiles_for_size_two() {
        let v = value(&profiles_json(2, "medial,non-associative", 3));
        let total: u64 = v
            .as_array()
            .unwrap()
            .iter()
            .map(|p| p["count"].as_u64().unwrap())
            .sum();
        assert_eq!(total, 2);
        let v = value(&profiles_json(3, "medial,has-unit,non-commutative", 1));
        assert!(v.as_array().unwrap().is_empty());
        let v: Value = serde_json::from_str(&profiles_json(4, "", 1)).unwrap();
        assert_eq!(v["ok"], false);
    }

    #[test]
    fn names_are_finite() {
        let names = finite_builtin_names();
        assert!(names.iter().any(|n| n == "tamura"));
        assert!(names.iter().any(|n| n == "z-add(3)"));
        assert!(!names.iter().any(|n| n == "sub-int"));
        let v: Value = serde_json::from_str(&builtin_json("sub-int")).unwrap();
        assert_eq!(v["ok"], false);
    }
}

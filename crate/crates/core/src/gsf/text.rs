//! Function file format:
//!
//! ```text
//! vars: 2
//! 00 -> d
//! 01 -> a
//! 10 -> c
//! 11 -> b
//! ```
//!
//! Rows may appear in any order but each of the `2^n` bitstrings exactly once.
//! Position 1 of a bitstring is variable 1. `#` starts a comment line.

use super::{Assignment, GsfError, TruthTable, MAX_VARS};

fn err(line: usize, column: usize, message: impl Into<String>) -> GsfError {
    GsfError::Parse {
        line,
        column,
        message: message.into(),
    }
}

impl<V: Clone> TruthTable<V> {
    pub fn parse(
        text: &str,
        mut parse_value: impl FnMut(&str) -> Result<V, String>,
    ) -> Result<Self, GsfError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| {
                let t = l.trim_start();
                !t.is_empty() && !t.starts_with('#')
            });
        let (hl, header) = lines
            .next()
            .ok_or_else(|| err(1, 1, "missing `vars:` header"))?;
        let indent = header.len() - header.trim_start().len();
        let count = header
            .trim()
            .strip_prefix("vars:")
            .ok_or_else(|| err(hl, indent + 1, "expected `vars: <n>`"))?
            .trim();
        let n: usize = count
            .parse()
            .map_err(|_| err(hl, indent + 6, format!("bad variable count `{count}`")))?;
        if n == 0 || n > MAX_VARS {
            return Err(err(
                hl,
                indent + 6,
                format!("variable count must be 1..={MAX_VARS}"),
            ));
        }

        let mut values: Vec<Option<V>> = vec![None; 1 << n];
        let mut last = hl;
        for (ln, line) in lines {
            last = ln;
            let indent = line.len() - line.trim_start().len();
            let (bits, value) = line
                .split_once("->")
                .ok_or_else(|| err(ln, indent + 1, "expected `<bits> -> <value>`"))?;
            let bits = bits.trim();
            if bits.len() != n || !bits.chars().all(|c| c == '0' || c == '1') {
                return Err(err(
                    ln,
                    indent + 1,
                    format!("expected a {n}-bit string, got `{bits}`"),
                ));
            }
            let row = Assignment::new(bits.chars().map(|c| c == '1').collect()).index();
            let value = value.trim();
            let value_col = if value.is_empty() {
                line.len() + 1
            } else {
                value.as_ptr() as usize - line.as_ptr() as usize + 1
            };
            if value.is_empty() {
                return Err(err(ln, value_col, "missing value"));
            }
            let v = parse_value(value).map_err(|m| err(ln, value_col, m))?;
            if values[row].replace(v).is_some() {
                return Err(err(ln, indent + 1, format!("duplicate row `{bits}`")));
            }
        }
        if let Some(missing) = values.iter().position(Option::is_none) {
            return Err(err(
                last + 1,
                1,
                format!("missing row `{}`", Assignment::from_index(n, missing)),
            ));
        }
        TruthTable::new(n, values.into_iter().map(Option::unwrap).collect())
    }

    pub fn to_text(&self, mut fmt_value: impl FnMut(&V) -> String) -> String {
        let mut out = format!("vars: {}\n", self.n);
        for (row, v) in self.values.iter().enumerate() {
            out.push_str(&format!(
                "{} -> {}\n",
                Assignment::from_index(self.n, row),
                fmt_value(v)
            ));
        }
        out
    }
}

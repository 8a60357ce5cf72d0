use std::collections::HashSet;
use std::fmt;

use super::{check_medial, AlgebraError, Magma, MedialCertificate};

/// Index of an element in a finite carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub usize);

impl Element {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite carrier with a total composition table.
///
/// Row is the left operand, column the right operand. Every entry is a valid
/// element, so `get` never leaves the carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteMagma {
    name: String,
    labels: Vec<String>,
    table: Vec<Element>,
}

impl FiniteMagma {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Element>,
    ) -> Result<Self, AlgebraError> {
        let size = labels.len();
        if size == 0 {
            return Err(AlgebraError::InvalidMagma("empty carrier".into()));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if label.is_empty() || label.chars().any(char::is_whitespace) {
                return Err(AlgebraError::InvalidMagma(format!("bad label {label:?}")));
            }
            if !seen.insert(label.as_str()) {
                return Err(AlgebraError::InvalidMagma(format!(
                    "duplicate label `{label}`"
                )));
            }
        }
        if table.len() != size * size {
            return Err(AlgebraError::InvalidMagma(format!(
                "table has {} entries, expected {}",
                table.len(),
                size * size
            )));
        }
        if let Some(bad) = table.iter().find(|e| e.0 >= size) {
            return Err(AlgebraError::InvalidMagma(format!(
                "entry {} is outside a carrier of size {size}",
                bad.0
            )));
        }
        Ok(FiniteMagma {
            name: name.into(),
            labels,
            table,
        })
    }

    /// Builds a table from string rows, e.g. `&["a a", "b a"]`.
    pub fn from_rows(name: &str, labels: &[&str], rows: &[&str]) -> Result<Self, AlgebraError> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let mut table = Vec::with_capacity(labels.len() * labels.len());
        for row in rows {
            for token in row.split_whitespace() {
                let idx = labels.iter().position(|l| l == token).ok_or_else(|| {
                    AlgebraError::InvalidMagma(format!("unknown label `{token}`"))
                })?;
                table.push(Element(idx));
            }
        }
        FiniteMagma::new(name, labels, table)
    }

    /// Builds a table on `0..size` (labelled by their indices) from a function.
    pub fn from_fn(
        name: impl Into<String>,
        size: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, AlgebraError> {
        let labels = (0..size).map(|i| i.to_string()).collect();
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                table.push(Element(f(a, b)));
            }
        }
        FiniteMagma::new(name, labels, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Element) -> &str {
        &self.labels[e.0]
    }

    pub fn element(&self, label: &str) -> Option<Element> {
        self.labels.iter().position(|l| l == label).map(Element)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.size()).map(Element)
    }

    /// Row-major composition table.
    pub fn table(&self) -> &[Element] {
        &self.table
    }

    /// `a * b` for elements known to be in the carrier.
    ///
    /// Panics when an index is out of range; use [`FiniteMagma::eval`] for
    /// unchecked input.
    #[inline]
    pub fn get(&self, a: Element, b: Element) -> Element {
        let n = self.size();
        assert!(a.0 < n && b.0 < n, "element outside carrier of size {n}");
        self.table[a.0 * n + b.0]
    }

    pub fn eval(&self, a: Element, b: Element) -> Result<Element, AlgebraError> {
        let n = self.size();
        for e in [a, b] {
            if e.0 >= n {
                return Err(AlgebraError::carrier(
                    &self.name,
                    format!("element {} outside carrier of size {n}", e.0),
                ));
            }
        }
        Ok(self.table[a.0 * n + b.0])
    }

    /// Reads the text format: a header `elements: a b c`, then one row per
    /// element. Blank lines and lines starting with `#` are ignored.
    pub fn parse(name: &str, text: &str) -> Result<Self, AlgebraError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| {
                let t = l.trim_start();
                !t.is_empty() && !t.starts_with('#')
            });

        let (header_line, header) = lines.next().ok_or(AlgebraError::Parse {
            line: 1,
            column: 1,
            message: "missing `elements:` header".into(),
        })?;
        let rest = header
            .trim_start()
            .strip_prefix("elements:")
            .ok_or_else(|| AlgebraError::Parse {
                line: header_line,
                column: column_of(header, header.trim_start()),
                message: "expected `elements:` header".into(),
            })?;
        let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        if labels.is_empty() {
            return Err(AlgebraError::Parse {
                line: header_line,
                column: header.len() + 1,
                message: "no elements declared".into(),
            });
        }
        let mut seen = HashSet::new();
        for (token, col) in tokens(header) {
            if col <= header.find(':').unwrap_or(0) + 1 {
                continue;
            }
            if !seen.insert(token) {
                return Err(AlgebraError::Parse {
                    line: header_line,
                    column: col,
                    message: format!("duplicate element `{token}`"),
                });
            }
        }

        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        let mut rows = 0;
        let mut last_line = header_line;
        for (line_no, line) in lines {
            last_line = line_no;
            if rows == n {
                return Err(AlgebraError::Parse {
                    line: line_no,
                    column: column_of(line, line.trim_start()),
                    message: format!("more than {n} rows"),
                });
            }
            let mut count = 0;
            for (token, col) in tokens(line) {
                if count == n {
                    return Err(AlgebraError::Parse {
                        line: line_no,
                        column: col,
                        message: format!("row has more than {n} entries"),
                    });
                }
                let idx =
                    labels
                        .iter()
                        .position(|l| l == token)
                        .ok_or_else(|| AlgebraError::Parse {
                            line: line_no,
                            column: col,
                            message: format!("unknown element `{token}`"),
                        })?;
                table.push(Element(idx));
                count += 1;
            }
            if count < n {
                return Err(AlgebraError::Parse {
                    line: line_no,
                    column: line.len() + 1,
                    message: format!("row has {count} entries, expected {n}"),
                });
            }
            rows += 1;
        }
        if rows < n {
            return Err(AlgebraError::Parse {
                line: last_line + 1,
                column: 1,
                message: format!("expected {n} rows, found {rows}"),
            });
        }
        FiniteMagma::new(name, labels, table)
    }

    /// Writes the text format read by [`FiniteMagma::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("elements: {}\n", self.labels.join(" "));
        let n = self.size();
        for row in self.table.chunks(n) {
            let cells: Vec<&str> = row.iter().map(|e| self.label(*e)).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

fn column_of(line: &str, suffix: &str) -> usize {
    line.len() - suffix.len() + 1
}

/// Whitespace-separated tokens with their 1-based byte columns.
fn tokens(line: &str) -> impl Iterator<Item = (&str, usize)> {
    line.split_whitespace().map(move |tok| {
        let offset = tok.as_ptr() as usize - line.as_ptr() as usize;
        (tok, offset + 1)
    })
}

impl Magma for FiniteMagma {
    type Value = Element;

    fn name(&self) -> &str {
        &self.name
    }

    fn op(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.eval(*a, *b)
    }

    fn medial_certificate(&self) -> MedialCertificate<Element> {
        match check_medial(self).witness {
            None => MedialCertificate::Verified,
            Some(w) => MedialCertificate::Refuted(Some(w)),
        }
    }
}

use std::fs;
use std::hash::Hash;
use std::path::Path;

use abstractdd::algebra::{
    builtin, AlgebraError, Builtin, FiniteMagma, IntOp, Magma, PairMatrix, Real, RealOp,
};
use abstractdd::gsf::{GsfError, TruthTable, MAX_VARS};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::args::{FunctionSource, MagmaSource};
use crate::report::CliError;

pub fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Value syntax and random sampling for one carrier.
pub trait Carrier: Magma<Value: Eq + Hash> + Clone + 'static {
    fn kind(&self) -> &'static str;
    fn parse_value(&self, s: &str) -> Result<Self::Value, String>;
    fn fmt_value(&self, v: &Self::Value) -> String;
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Value;
}

impl Carrier for FiniteMagma {
    fn kind(&self) -> &'static str {
        "finite"
    }

    fn parse_value(&self, s: &str) -> Result<Self::Value, String> {
        self.element(s)
            .ok_or_else(|| format!("`{s}` is not an element of {}", self.name()))
    }

    fn fmt_value(&self, v: &Self::Value) -> String {
        self.label(*v).to_string()
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Value {
        abstractdd::algebra::Element(rng.gen_range(0..self.size()))
    }
}

impl Carrier for IntOp {
    fn kind(&self) -> &'static str {
        "integer"
    }

    fn parse_value(&self, s: &str) -> Result<i64, String> {
        s.parse().map_err(|_| format!("`{s}` is not an integer"))
    }

    fn fmt_value(&self, v: &i64) -> String {
        v.to_string()
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> i64 {
        rng.gen_range(-1000..=1000)
    }
}

fn parse_real(s: &str) -> Result<Real, String> {
    let x: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    Real::new(x).map_err(|e| e.to_string())
}

/// Quarter steps keep sums and products of samples exact.
fn quarter(rng: &mut ChaCha8Rng, bound: i32) -> f64 {
    rng.gen_range(-4 * bound..=4 * bound) as f64 / 4.0
}

impl Carrier for RealOp {
    fn kind(&self) -> &'static str {
        "real"
    }

    fn parse_value(&self, s: &str) -> Result<Real, String> {
        let r = parse_real(s)?;
        if !self.contains(r.get()) {
            return Err(format!("{s} is outside the carrier of {}", self.name()));
        }
        Ok(r)
    }

    fn fmt_value(&self, v: &Real) -> String {
        v.to_string()
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Real {
        loop {
            let x = quarter(rng, 100);
            if self.contains(x) {
                return Real::new(x).expect("finite");
            }
        }
    }
}

impl Carrier for PairMatrix {
    fn kind(&self) -> &'static str {
        "real pair"
    }

    fn parse_value(&self, s: &str) -> Result<[Real; 2], String> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = inner
            .split_once(';')
            .ok_or_else(|| format!("`{s}` is not a pair `(x;y)`"))?;
        Ok([parse_real(a.trim())?, parse_real(b.trim())?])
    }

    fn fmt_value(&self, v: &[Real; 2]) -> String {
        format!("({};{})", v[0], v[1])
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> [Real; 2] {
        if rng.gen_bool(0.25) {
            return [Real::new(0.0).unwrap(), Real::new(0.0).unwrap()];
        }
        // continuous draws: grid values would make the degenerate `c+d = 0`
        // products common
        [0, 1].map(|_| Real::new(rng.gen_range(-10.0..10.0)).expect("finite"))
    }
}

pub struct LoadedMagma {
    pub magma: Builtin,
    /// `sha256` of the file bytes, or of the canonical table text for
    /// finite built-ins, or of the name otherwise.
    pub digest: String,
    pub origin: String,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("{}: {e}", path.display()))
}

pub fn load_magma(src: &MagmaSource) -> Result<LoadedMagma, CliError> {
    if let Some(name) = &src.builtin {
        let b = builtin(name).map_err(|e| CliError::Parse(e.to_string()))?;
        let digest = match &b {
            Builtin::Finite(m) => sha256(m.to_text().as_bytes()),
            other => sha256(other.name().as_bytes()),
        };
        return Ok(LoadedMagma {
            magma: b,
            digest,
            origin: format!("builtin {name}"),
        });
    }
    let path = src.magma.as_deref().expect("clap enforces one source");
    let text = read(path)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "magma".into());
    let m = FiniteMagma::parse(&name, &text).map_err(|e| located(path, e))?;
    Ok(LoadedMagma {
        magma: Builtin::Finite(m),
        digest: sha256(text.as_bytes()),
        origin: format!("file {}", path.display()),
    })
}

pub struct LoadedFunction<V> {
    pub table: TruthTable<V>,
    pub digest: String,
}

pub fn load_function<C: Carrier>(
    src: &FunctionSource,
    m: &C,
) -> Result<LoadedFunction<C::Value>, CliError> {
    if let Some(path) = &src.function {
        let text = read(path)?;
        let table = TruthTable::parse(&text, |s| m.parse_value(s)).map_err(|e| located(path, e))?;
        return Ok(LoadedFunction {
            table,
            digest: sha256(text.as_bytes()),
        });
    }
    let text = src.values.as_deref().expect("clap enforces one source");
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let n = parts.len().trailing_zeros() as usize;
    if parts.len() < 2 || !parts.len().is_power_of_two() || n > MAX_VARS {
        return Err(CliError::Parse(format!(
            "--values: expected 2^n values for 1 <= n <= {MAX_VARS}, got {}",
            parts.len()
        )));
    }
    let values = parts
        .iter()
        .enumerate()
        .map(|(i, s)| {
            m.parse_value(s)
                .map_err(|e| format!("--values item {}: {e}", i + 1))
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::Parse)?;
    let table = TruthTable::new(n, values).map_err(|e: GsfError| CliError::Parse(e.to_string()))?;
    Ok(LoadedFunction {
        table,
        digest: sha256(text.as_bytes()),
    })
}

/// Maps library errors raised while evaluating the operation.
pub fn eval_error(e: impl std::fmt::Display) -> CliError {
    CliError::Parse(e.to_string())
}

pub fn algebra_error(e: AlgebraError) -> CliError {
    match e {
        AlgebraError::EnumerationBudget { .. } => CliError::Budget(e.to_string()),
        other => CliError::Parse(other.to_string()),
    }
}

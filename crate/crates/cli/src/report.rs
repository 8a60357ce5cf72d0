use std::fmt::Display;
use std::process::ExitCode;

/// Plain `KEY: value` lines, printed to stdout in order.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.kv("COMMAND", command);
        r
    }

    pub fn kv(&mut self, key: &str, value: impl Display) {
        self.lines.push(format!("{key}: {value}"));
    }

    pub fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(String),
    Budget(String),
    /// Gated abstraction refused; the report explains why.
    Refused,
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Refused => 4,
        })
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            CliError::Io(m) | CliError::Parse(m) | CliError::Budget(m) => Some(m),
            CliError::Refused => None,
        }
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

use std::fmt;
use std::fs;
use std::path::Path;

use anyhow::Context;

/// What a subcommand produced: a human rendering, a JSON rendering, and
/// whether every check it ran passed.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub ok: bool,
}

impl Report {
    pub fn new(text: String, json: serde_json::Value) -> Self {
        Report { text, json, ok: true }
    }

    pub fn with_status(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn emit(&self, json: bool, out: Option<&Path>) -> anyhow::Result<()> {
        let doc = serde_json::to_string_pretty(&self.json)? + "\n";
        if json {
            print!("{doc}");
        } else {
            print!("{}", self.text);
            if !self.text.ends_with('\n') {
                println!();
            }
        }
        if let Some(path) = out {
            fs::write(path, &doc).with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }
}

/// Usage errors exit with 2, everything else with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
        }
    }
}

impl From<shiftedq::Error> for CliError {
    fn from(e: shiftedq::Error) -> Self {
        use shiftedq::Error::*;
        match e {
            InvalidShape(_) | CellOutside { .. } | Parse(_) | InvalidTableau(_) | InvalidArgument(_) => {
                CliError::Usage(e.to_string())
            }
            NotSymmetric(_) | NotInGamma(_) | Internal(_) => CliError::Failure(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

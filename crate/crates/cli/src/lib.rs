//! Library half of the command-line tool: canonical JSON rendering and
//! parsing for every exchanged structure, and the error-to-exit-code
//! mapping.

pub mod doc;

/// Error carrying the process exit code: 2 for usage, domain and parse
/// errors, 3 for breached enumeration guards.
#[derive(Debug)]
pub struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }

    pub fn message(&self) -> &str {
        &self.message
    }

    pub fn code(&self) -> u8 {
        self.code
    }
}

impl From<plackit::Error> for CliError {
    fn from(e: plackit::Error) -> Self {
        let code = match e {
            plackit::Error::Resource(_) => 3,
            _ => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

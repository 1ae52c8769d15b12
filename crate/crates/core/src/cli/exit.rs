//! Process exit codes.
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success                                   |
//! | 1    | a verification check failed               |
//! | 2    | invalid flags, config file or arguments   |
//! | 3    | fixture missing or malformed              |
//! | 4    | bound beyond the supported scale          |
//! | 5    | checkpoint unreadable or from another run |
//! | 6    | I/O error                                 |
//! | 130  | interrupted; resume with `--checkpoint`   |

use std::fmt;

use phi3::Error;

pub const VERIFY_FAILED: i32 = 1;
pub const CONFIG: i32 = 2;
pub const FIXTURE: i32 = 3;
pub const SCALE: i32 = 4;
pub const CHECKPOINT: i32 = 5;
pub const IO: i32 = 6;
pub const INTERRUPTED: i32 = 130;

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn config(message: impl Into<String>) -> Self {
        Self::new(CONFIG, message)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Scale { .. } => SCALE,
            Error::Fixture { .. } => FIXTURE,
            Error::Checkpoint { .. } => CHECKPOINT,
            Error::Io(_) => IO,
            Error::UnitIndex(_)
            | Error::ZeroInput
            | Error::Arity { .. }
            | Error::Invalid(_)
            | Error::NotASolution(_) => CONFIG,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(IO, e.to_string())
    }
}

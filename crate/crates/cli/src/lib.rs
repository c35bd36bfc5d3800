//! Script front end for `noether-core`: parse a batch script, run it, and
//! render the results as text or JSON.

pub mod error;
pub mod examples;
pub mod output;
pub mod runner;
pub mod script;

pub use error::{FailureKind, ScriptError};
pub use runner::{run, RunReport};
pub use script::{parse_script, Script};

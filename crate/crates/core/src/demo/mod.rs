//! A split compiler for a tiny C subset.
//!
//! `minircc` ([`compile`]) parses and checks a program and writes its trees
//! and interface calls as a pickle of the bundled `rcc` grammar; `pass2`
//! ([`pass2`]) reads the pickle back and emits stack-machine assembly.
//! [`monolithic`] runs both halves without the pickle in between and must
//! produce the same text.

pub mod back;
pub mod front;
pub mod ir;
pub mod lang;
pub mod lint;
pub mod metrics;
pub mod random;
pub mod tables;
pub mod uid;

use std::sync::OnceLock;

use crate::pickle::{self, PickleError};
use crate::sema::SchemaEnv;
use crate::value::Value;

pub use lint::uid_closure_violations;
pub use metrics::TargetMetrics;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DemoError {
    #[error("{line}:{col}: {message}")]
    Syntax { line: u32, col: u32, message: String },
    #[error("{line}:{col}: `{name}` is not declared")]
    Undeclared { line: u32, col: u32, name: String },
    #[error("{line}:{col}: `{name}` is already declared")]
    Redeclared { line: u32, col: u32, name: String },
    #[error("{line}:{col}: {message}")]
    Type { line: u32, col: u32, message: String },
    #[error(transparent)]
    Pickle(#[from] PickleError),
    #[error("uid {0} is referenced but never defined")]
    DanglingUid(i64),
    #[error("uid {0} is defined more than once")]
    DuplicateUid(i64),
    #[error("malformed program: {0}")]
    Malformed(String),
}

/// The checked `rcc` grammar.
pub fn rcc_env() -> &'static SchemaEnv {
    static ENV: OnceLock<SchemaEnv> = OnceLock::new();
    ENV.get_or_init(|| crate::fixtures::env(crate::fixtures::RCC))
}

/// The `program` value for `src`.
pub fn compile_value(src: &str, m: &TargetMetrics) -> Result<Value, DemoError> {
    Ok(uid::flatten(&front::lower(src, m)?))
}

/// First pass: source text to pickle bytes.
pub fn compile(src: &str, m: &TargetMetrics) -> Result<Vec<u8>, DemoError> {
    let v = compile_value(src, m)?;
    Ok(pickle::write_instance(rcc_env(), "program", &v)?)
}

/// Second pass: assembly for the first program in `bytes`. Instances
/// appended after it are not read.
pub fn pass2(bytes: &[u8]) -> Result<String, DemoError> {
    let program = pickle::read_first(rcc_env(), "program", bytes)?;
    Ok(back::emit(&uid::rebuild(&program)?))
}

/// Both passes in one process, with no pickle in between.
pub fn monolithic(src: &str, m: &TargetMetrics) -> Result<String, DemoError> {
    Ok(back::emit(&front::lower(src, m)?))
}

//! Checks generated codecs against the interpretive one.

use std::fmt;

use crate::pickle::{locate_offset, write_instance, PickleError};
use crate::sema::SchemaEnv;
use crate::value::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Position of the sample in the input.
    pub index: usize,
    /// First byte where the generated output departs from the oracle.
    pub offset: usize,
    /// Innermost value whose encoding covers `offset`, when it can be found.
    pub path: Option<String>,
    pub reason: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sample {} at byte {}", self.index, self.offset)?;
        if let Some(p) = &self.path {
            write!(f, " ({p})")?;
        }
        write!(f, ": {}", self.reason)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConformanceReport {
    pub checked: usize,
    pub oracle_bytes: usize,
    pub mismatches: Vec<Mismatch>,
}

impl ConformanceReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Feeds the oracle encoding of each sample through `roundtrip`, which
/// should decode with a generated reader and re-encode with the matching
/// generated writer, and compares the result with the oracle bytes.
///
/// Samples the oracle itself cannot encode are reported with offset 0.
pub fn conformance_harness<F>(env: &SchemaEnv, type_name: &str, samples: &[Value], roundtrip: F) -> ConformanceReport
where
    F: Fn(&[u8]) -> Result<Vec<u8>, PickleError>,
{
    let mut report = ConformanceReport::default();
    for (index, sample) in samples.iter().enumerate() {
        report.checked += 1;
        let expected = match write_instance(env, type_name, sample) {
            Ok(bytes) => bytes,
            Err(e) => {
                report.mismatches.push(Mismatch {
                    index,
                    offset: 0,
                    path: None,
                    reason: format!("oracle rejected the sample: {e}"),
                });
                continue;
            }
        };
        report.oracle_bytes += expected.len();
        let (offset, reason) = match roundtrip(&expected) {
            Ok(got) if got == expected => continue,
            Ok(got) => {
                let offset = expected
                    .iter()
                    .zip(&got)
                    .position(|(a, b)| a != b)
                    .unwrap_or(expected.len().min(got.len()));
                (
                    offset,
                    format!(
                        "generated writer produced {} bytes, oracle {}",
                        got.len(),
                        expected.len()
                    ),
                )
            }
            Err(e) => {
                let offset = match &e {
                    PickleError::TruncatedStream { offset }
                    | PickleError::MalformedVarint { offset }
                    | PickleError::InvalidUtf8 { offset }
                    | PickleError::BadTag { offset, .. } => *offset,
                    _ => 0,
                };
                (offset, format!("generated reader failed: {e}"))
            }
        };
        report.mismatches.push(Mismatch {
            index,
            offset,
            path: locate_offset(env, type_name, &expected, offset),
            reason,
        });
    }
    report
}

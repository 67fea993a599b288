//! Pickle files: instances written back to back.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use super::codec::{read_value, write_value};
use super::stream::{InStream, OutStream};
use super::PickleError;
use crate::sema::SchemaEnv;
use crate::value::Value;

pub fn write_instance(env: &SchemaEnv, type_name: &str, value: &Value) -> Result<Vec<u8>, PickleError> {
    let mut out = OutStream::new();
    write_value(env, type_name, value, &mut out)?;
    Ok(out.into_bytes())
}

/// Decodes exactly one instance; trailing bytes are an error.
pub fn read_instance(env: &SchemaEnv, type_name: &str, bytes: &[u8]) -> Result<Value, PickleError> {
    if bytes.is_empty() {
        return Err(PickleError::EmptyPickle);
    }
    let mut input = InStream::new(bytes);
    let value = read_value(env, type_name, &mut input)?;
    if !input.is_exhausted() {
        return Err(PickleError::TrailingBytes {
            offset: input.position(),
        });
    }
    Ok(value)
}

/// Decodes the first instance and ignores whatever follows it.
pub fn read_first(env: &SchemaEnv, type_name: &str, bytes: &[u8]) -> Result<Value, PickleError> {
    if bytes.is_empty() {
        return Err(PickleError::EmptyPickle);
    }
    read_value(env, type_name, &mut InStream::new(bytes))
}

/// Decodes instances of one type until the bytes run out.
pub fn read_all(env: &SchemaEnv, type_name: &str, bytes: &[u8]) -> Result<Vec<Value>, PickleError> {
    read_sequence(env, &[type_name], bytes)
}

/// Decodes instances whose types follow `types`; the last type repeats for
/// any further instances.
pub fn read_sequence(env: &SchemaEnv, types: &[&str], bytes: &[u8]) -> Result<Vec<Value>, PickleError> {
    let last = *types.last().ok_or_else(|| PickleError::UnknownType(String::new()))?;
    if bytes.is_empty() {
        return Err(PickleError::EmptyPickle);
    }
    let mut input = InStream::new(bytes);
    let mut values = Vec::new();
    while !input.is_exhausted() {
        let ty = types.get(values.len()).copied().unwrap_or(last);
        values.push(read_value(env, ty, &mut input)?);
    }
    Ok(values)
}

/// Appends one instance to an existing pickle file.
pub fn append_instance(env: &SchemaEnv, type_name: &str, value: &Value, path: &Path) -> Result<(), crate::Error> {
    let bytes = write_instance(env, type_name, value)?;
    let mut file = OpenOptions::new().append(true).open(path).map_err(crate::Error::Io)?;
    file.write_all(&bytes).map_err(crate::Error::Io)?;
    Ok(())
}

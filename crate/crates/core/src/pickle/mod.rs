//! Binary and XML pickles.
//!
//! A value is written in prefix order: a sum writes its 1-based constructor
//! tag, then its attributes, then its fields; a product writes its fields;
//! a list writes its length then its elements; `int` is a zigzag varint and
//! `string`/`identifier` are a byte length followed by UTF-8. A pickle file
//! is a bare concatenation of such instances, with no header.

mod codec;
mod file;
pub mod stream;
mod xml;

pub use codec::{locate_offset, read_value, write_value, MAX_NESTING};
pub use file::{append_instance, read_all, read_first, read_instance, read_sequence, write_instance};
pub use stream::{InStream, OutStream};
pub use xml::{
    pickle_to_xml, read_xml, read_xml_all, write_xml, write_xml_all, xml_to_pickle, SymbolTable, XmlError, XmlOptions,
    PICKLE_ROOT,
};

use crate::value::Violations;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PickleError {
    #[error("truncated stream at byte {offset}")]
    TruncatedStream { offset: usize },
    #[error("bad tag {tag} for type `{ty}` at byte {offset}")]
    BadTag { ty: String, tag: u64, offset: usize },
    #[error("malformed varint at byte {offset}")]
    MalformedVarint { offset: usize },
    #[error("invalid UTF-8 text at byte {offset}")]
    InvalidUtf8 { offset: usize },
    #[error("integer {value} at {path} does not fit the 64-bit wire range")]
    IntOutOfRange { value: String, path: String },
    #[error("value nesting exceeds {0} levels")]
    NestingTooDeep(usize),
    #[error("unexpected bytes after the instance at byte {offset}")]
    TrailingBytes { offset: usize },
    #[error("pickle is empty")]
    EmptyPickle,
    #[error("unknown type `{0}`")]
    UnknownType(String),
    #[error("value does not conform: {0}")]
    Nonconforming(Violations),
}

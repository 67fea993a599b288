//! Support library for generated readers and writers.

pub use crate::pickle::{InStream, OutStream, PickleError};
pub use crate::value::Atom as Identifier;

pub type Result<T> = std::result::Result<T, PickleError>;

pub fn read_tag(s: &mut InStream<'_>) -> Result<u64> {
    s.read_uint()
}

pub fn write_tag(tag: u32, s: &mut OutStream) {
    s.write_uint(u64::from(tag));
}

pub fn read_int(s: &mut InStream<'_>) -> Result<i64> {
    s.read_int()
}

pub fn write_int(x: &i64, s: &mut OutStream) {
    s.write_int(*x);
}

pub fn read_string(s: &mut InStream<'_>) -> Result<String> {
    s.read_str().map(str::to_string)
}

pub fn write_string(x: &str, s: &mut OutStream) {
    s.write_str(x);
}

pub fn read_identifier(s: &mut InStream<'_>) -> Result<Identifier> {
    s.read_str().map(Identifier::new)
}

pub fn write_identifier(x: &Identifier, s: &mut OutStream) {
    s.write_str(x.as_str());
}

pub fn read_list<T>(s: &mut InStream<'_>, mut read: impl FnMut(&mut InStream<'_>) -> Result<T>) -> Result<Vec<T>> {
    let count = s.read_uint()?;
    let mut items = Vec::with_capacity((count as usize).min(s.remaining()));
    for _ in 0..count {
        items.push(read(s)?);
    }
    Ok(items)
}

pub fn write_list<T>(xs: &[T], s: &mut OutStream, mut write: impl FnMut(&T, &mut OutStream)) {
    s.write_uint(xs.len() as u64);
    for x in xs {
        write(x, s);
    }
}

pub fn bad_tag(ty: &str, tag: u64, offset: usize) -> PickleError {
    PickleError::BadTag {
        ty: ty.to_string(),
        tag,
        offset,
    }
}

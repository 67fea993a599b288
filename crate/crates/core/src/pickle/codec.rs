use num_bigint::BigInt;

use super::stream::{InStream, OutStream};
use super::PickleError;
use crate::sema::{Builtin, FieldDef, SchemaEnv, TypeKind, TypeRef};
use crate::value::{validate, Atom, Value, Violations};

/// Deepest value nesting the reader accepts.
pub const MAX_NESTING: usize = 256;

pub(crate) fn type_ref(env: &SchemaEnv, type_name: &str) -> Result<TypeRef, PickleError> {
    if let Some(b) = Builtin::from_name(type_name) {
        return Ok(TypeRef::Builtin(b));
    }
    env.resolve_type_name(type_name)
        .map(|t| TypeRef::Defined(t.name.clone()))
        .ok_or_else(|| PickleError::UnknownType(type_name.to_string()))
}

/// Appends the encoding of `value`, a value of `type_name`, to `out`.
///
/// Nothing is written when the value does not conform.
pub fn write_value(env: &SchemaEnv, type_name: &str, value: &Value, out: &mut OutStream) -> Result<(), PickleError> {
    let ty = type_ref(env, type_name)?;
    let mut scratch = OutStream::new();
    let mut path = vec![type_name.to_string()];
    match write_type(env, &ty, value, &mut scratch, &mut path) {
        Ok(()) => {
            out.write_raw(scratch.bytes());
            Ok(())
        }
        Err(Mismatch::Range(value, path)) => Err(PickleError::IntOutOfRange { value, path }),
        Err(Mismatch::Shape) => Err(PickleError::Nonconforming(Violations(validate(env, type_name, value)))),
    }
}

enum Mismatch {
    Shape,
    Range(String, String),
}

fn write_int(n: &BigInt, out: &mut OutStream, path: &[String]) -> Result<(), Mismatch> {
    let n = i64::try_from(n).map_err(|_| Mismatch::Range(n.to_string(), path.join("/")))?;
    out.write_int(n);
    Ok(())
}

fn write_field(
    env: &SchemaEnv,
    field: &FieldDef,
    value: &Value,
    out: &mut OutStream,
    path: &mut Vec<String>,
) -> Result<(), Mismatch> {
    path.push(field.name.clone());
    let result = if field.sequence {
        match value {
            Value::List(items) => {
                out.write_uint(items.len() as u64);
                items
                    .iter()
                    .try_for_each(|item| write_type(env, &field.ty, item, out, path))
            }
            _ => Err(Mismatch::Shape),
        }
    } else {
        write_type(env, &field.ty, value, out, path)
    };
    path.pop();
    result
}

fn write_fields(
    env: &SchemaEnv,
    decls: &[FieldDef],
    values: &[Value],
    out: &mut OutStream,
    path: &mut Vec<String>,
) -> Result<(), Mismatch> {
    if decls.len() != values.len() {
        return Err(Mismatch::Shape);
    }
    decls
        .iter()
        .zip(values)
        .try_for_each(|(d, v)| write_field(env, d, v, out, path))
}

fn write_type(
    env: &SchemaEnv,
    ty: &TypeRef,
    value: &Value,
    out: &mut OutStream,
    path: &mut Vec<String>,
) -> Result<(), Mismatch> {
    match (ty, value) {
        (TypeRef::Builtin(Builtin::Int), Value::Int(n)) => write_int(n, out, path),
        (TypeRef::Builtin(Builtin::String), Value::String(s)) => {
            out.write_str(s);
            Ok(())
        }
        (TypeRef::Builtin(Builtin::Identifier), Value::Identifier(a)) => {
            out.write_str(a.as_str());
            Ok(())
        }
        (TypeRef::Defined(name), value) => {
            let def = env.get(name).ok_or(Mismatch::Shape)?;
            match (&def.kind, value) {
                (TypeKind::Product { fields: decls }, Value::Product { ty, fields }) if ty.as_str() == name => {
                    write_fields(env, decls, fields, out, path)
                }
                (
                    TypeKind::Sum { attributes, .. },
                    Value::Sum {
                        ty,
                        ctor,
                        attrs,
                        fields,
                    },
                ) if ty.as_str() == name => {
                    let cdef = def.constructor(ctor.as_str()).ok_or(Mismatch::Shape)?;
                    out.write_uint(u64::from(cdef.tag));
                    path.push(cdef.name.clone());
                    write_fields(env, attributes, attrs, out, path)?;
                    write_fields(env, &cdef.fields, fields, out, path)?;
                    path.pop();
                    Ok(())
                }
                _ => Err(Mismatch::Shape),
            }
        }
        _ => Err(Mismatch::Shape),
    }
}

/// Decodes one value of `type_name` from `input`, leaving the stream just
/// past its last byte.
pub fn read_value(env: &SchemaEnv, type_name: &str, input: &mut InStream<'_>) -> Result<Value, PickleError> {
    let ty = type_ref(env, type_name)?;
    let mut reader = Reader {
        env,
        depth: 0,
        trace: None,
    };
    reader.read_type(&ty, input)
}

/// Path of the innermost value whose encoding covers byte `offset` of
/// `bytes`, an encoding of a `type_name` value. Returns `None` when the bytes
/// do not decode or the offset lies outside the first instance.
pub fn locate_offset(env: &SchemaEnv, type_name: &str, bytes: &[u8], offset: usize) -> Option<String> {
    let ty = type_ref(env, type_name).ok()?;
    let mut reader = Reader {
        env,
        depth: 0,
        trace: Some(Trace {
            path: vec![type_name.to_string()],
            spans: Vec::new(),
        }),
    };
    let mut input = InStream::new(bytes);
    // A failed decode still leaves useful spans behind.
    let _ = reader.read_type(&ty, &mut input);
    let trace = reader.trace?;
    trace
        .spans
        .into_iter()
        .filter(|(_, start, end)| *start <= offset && offset < *end)
        .max_by_key(|(path, start, _)| (path.matches('/').count(), *start))
        .map(|(path, _, _)| path)
}

struct Trace {
    path: Vec<String>,
    spans: Vec<(String, usize, usize)>,
}

struct Reader<'e> {
    env: &'e SchemaEnv,
    depth: usize,
    trace: Option<Trace>,
}

impl Reader<'_> {
    fn enter(&mut self, segment: &str) {
        if let Some(t) = &mut self.trace {
            t.path.push(segment.to_string());
        }
    }

    fn leave(&mut self) {
        if let Some(t) = &mut self.trace {
            t.path.pop();
        }
    }

    fn record(&mut self, start: usize, end: usize) {
        if let Some(t) = &mut self.trace {
            t.spans.push((t.path.join("/"), start, end));
        }
    }

    fn read_field(&mut self, field: &FieldDef, input: &mut InStream<'_>) -> Result<Value, PickleError> {
        let start = input.position();
        self.enter(&field.name);
        let result = if field.sequence {
            let count = input.read_uint()?;
            // Every element takes at least one byte.
            let mut items = Vec::with_capacity((count as usize).min(input.remaining()));
            for i in 0..count {
                self.enter(&format!("[{i}]"));
                let item = self.read_type(&field.ty, input);
                self.leave();
                items.push(item?);
            }
            Ok(Value::List(items))
        } else {
            self.read_type(&field.ty, input)
        };
        if result.is_ok() {
            self.record(start, input.position());
        }
        self.leave();
        result
    }

    fn read_type(&mut self, ty: &TypeRef, input: &mut InStream<'_>) -> Result<Value, PickleError> {
        let start = input.position();
        let value = match ty {
            TypeRef::Builtin(Builtin::Int) => Value::Int(BigInt::from(input.read_int()?)),
            TypeRef::Builtin(Builtin::String) => Value::String(input.read_str()?.to_string()),
            TypeRef::Builtin(Builtin::Identifier) => Value::Identifier(Atom::new(input.read_str()?)),
            TypeRef::Defined(name) => {
                self.depth += 1;
                if self.depth > MAX_NESTING {
                    return Err(PickleError::NestingTooDeep(MAX_NESTING));
                }
                let env = self.env;
                let def = env.get(name).ok_or_else(|| PickleError::UnknownType(name.clone()))?;
                let value = match &def.kind {
                    TypeKind::Product { fields } => {
                        let mut values = Vec::with_capacity(fields.len());
                        for f in fields {
                            values.push(self.read_field(f, input)?);
                        }
                        Value::Product {
                            ty: Atom::new(name),
                            fields: values,
                        }
                    }
                    TypeKind::Sum { attributes, .. } => {
                        let tag = input.read_uint()?;
                        let cdef = def.constructor_by_tag(tag).ok_or(PickleError::BadTag {
                            ty: name.clone(),
                            tag,
                            offset: start,
                        })?;
                        self.enter(&cdef.name);
                        let mut attrs = Vec::with_capacity(attributes.len());
                        for a in attributes {
                            attrs.push(self.read_field(a, input)?);
                        }
                        let mut fields = Vec::with_capacity(cdef.fields.len());
                        for f in &cdef.fields {
                            fields.push(self.read_field(f, input)?);
                        }
                        self.leave();
                        Value::Sum {
                            ty: Atom::new(name),
                            ctor: Atom::new(&cdef.name),
                            attrs,
                            fields,
                        }
                    }
                };
                self.depth -= 1;
                value
            }
        };
        self.record(start, input.position());
        Ok(value)
    }
}

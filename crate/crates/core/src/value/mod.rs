//! A generic runtime representation of values of any checked schema.

mod atom;
mod gen;
mod text;

pub use atom::Atom;
pub use gen::{GenError, ValueGenerator, DEFAULT_MAX_DEPTH};
pub use text::{parse_text, parse_text_all, print_text, TextError};

use std::fmt;

use num_bigint::BigInt;

use crate::sema::{Builtin, FieldDef, SchemaEnv, TypeKind, TypeRef};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Int(BigInt),
    String(String),
    Identifier(Atom),
    List(Vec<Value>),
    Product {
        ty: Atom,
        fields: Vec<Value>,
    },
    Sum {
        ty: Atom,
        ctor: Atom,
        attrs: Vec<Value>,
        fields: Vec<Value>,
    },
}

impl Value {
    pub fn int(n: i64) -> Value {
        Value::Int(BigInt::from(n))
    }

    pub fn ident(name: &str) -> Value {
        Value::Identifier(Atom::new(name))
    }

    pub fn string(text: impl Into<String>) -> Value {
        Value::String(text.into())
    }

    /// Builds a sum value without consulting a schema; see [`mk_sum`] for the
    /// checked variant.
    pub fn sum(ty: &str, ctor: &str, attrs: Vec<Value>, fields: Vec<Value>) -> Value {
        Value::Sum {
            ty: Atom::new(ty),
            ctor: Atom::new(ctor),
            attrs,
            fields,
        }
    }

    pub fn product(ty: &str, fields: Vec<Value>) -> Value {
        Value::Product {
            ty: Atom::new(ty),
            fields,
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Value::Int(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_int().and_then(|n| i64::try_from(n).ok())
    }

    pub fn as_list(&self) -> Option<&[Value]> {
        match self {
            Value::List(items) => Some(items),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            Value::String(s) => Some(s),
            Value::Identifier(a) => Some(a.as_str()),
            _ => None,
        }
    }

    /// Constructor name of a sum value.
    pub fn ctor(&self) -> Option<&str> {
        match self {
            Value::Sum { ctor, .. } => Some(ctor.as_str()),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        match self {
            Value::Int(_) => "an integer".into(),
            Value::String(_) => "a string".into(),
            Value::Identifier(_) => "an identifier".into(),
            Value::List(_) => "a list".into(),
            Value::Product { ty, .. } => format!("a `{ty}` tuple"),
            Value::Sum { ctor, .. } => format!("constructor `{ctor}`"),
        }
    }
}

/// Deep structural equality. Identifiers compare by interned identity.
pub fn equal(a: &Value, b: &Value) -> bool {
    a == b
}

/// One reason a value does not conform to its schema type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Slash-separated trail of type, constructor and field names.
    pub path: String,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct Violations(pub Vec<Violation>);

/// Checks `value` against the type named `type_name` (a defined type or a
/// built-in). Returns every violation found; an empty list means it conforms.
pub fn validate(env: &SchemaEnv, type_name: &str, value: &Value) -> Vec<Violation> {
    let mut out = Vec::new();
    let ty = match Builtin::from_name(type_name) {
        Some(b) => TypeRef::Builtin(b),
        None if env.get(type_name).is_some() => TypeRef::Defined(type_name.to_string()),
        None => {
            out.push(Violation {
                path: type_name.to_string(),
                reason: format!("unknown type `{type_name}`"),
            });
            return out;
        }
    };
    let mut path = vec![type_name.to_string()];
    check_type(env, &ty, value, &mut path, &mut out);
    out
}

fn violation(path: &[String], reason: String, out: &mut Vec<Violation>) {
    out.push(Violation {
        path: path.join("/"),
        reason,
    });
}

fn check_field(env: &SchemaEnv, field: &FieldDef, value: &Value, path: &mut Vec<String>, out: &mut Vec<Violation>) {
    if field.sequence {
        match value {
            Value::List(items) => {
                for (i, item) in items.iter().enumerate() {
                    path.push(format!("{}[{i}]", field.name));
                    check_type(env, &field.ty, item, path, out);
                    path.pop();
                }
            }
            other => {
                path.push(field.name.clone());
                violation(
                    path,
                    format!("expected a list of {}, found {}", field.ty, other.describe()),
                    out,
                );
                path.pop();
            }
        }
    } else {
        path.push(field.name.clone());
        check_type(env, &field.ty, value, path, out);
        path.pop();
    }
}

fn check_fields(
    env: &SchemaEnv,
    decls: &[&FieldDef],
    values: &[Value],
    what: &str,
    path: &mut Vec<String>,
    out: &mut Vec<Violation>,
) {
    if decls.len() != values.len() {
        let names: Vec<&str> = decls.iter().map(|f| f.name.as_str()).collect();
        violation(
            path,
            format!(
                "expected {} {what} [{}], found {}",
                decls.len(),
                names.join(", "),
                values.len()
            ),
            out,
        );
        return;
    }
    for (decl, value) in decls.iter().zip(values) {
        check_field(env, decl, value, path, out);
    }
}

fn check_type(env: &SchemaEnv, ty: &TypeRef, value: &Value, path: &mut Vec<String>, out: &mut Vec<Violation>) {
    match (ty, value) {
        (TypeRef::Builtin(Builtin::Int), Value::Int(_))
        | (TypeRef::Builtin(Builtin::String), Value::String(_))
        | (TypeRef::Builtin(Builtin::Identifier), Value::Identifier(_)) => {}
        (TypeRef::Builtin(b), other) => {
            violation(path, format!("expected {}, found {}", b.name(), other.describe()), out)
        }
        (TypeRef::Defined(name), value) => {
            let Some(def) = env.get(name) else {
                violation(path, format!("unknown type `{name}`"), out);
                return;
            };
            match (&def.kind, value) {
                (TypeKind::Product { fields: decls }, Value::Product { ty, fields }) => {
                    if ty.as_str() != name {
                        violation(path, format!("expected `{name}`, found `{ty}` tuple"), out);
                        return;
                    }
                    let decls: Vec<&FieldDef> = decls.iter().collect();
                    check_fields(env, &decls, fields, "fields", path, out);
                }
                (
                    TypeKind::Sum { attributes, .. },
                    Value::Sum {
                        ty,
                        ctor,
                        attrs,
                        fields,
                    },
                ) => {
                    let Some(cdef) = def.constructor(ctor.as_str()) else {
                        violation(path, format!("`{ctor}` is not a constructor of `{name}`"), out);
                        return;
                    };
                    if ty.as_str() != name {
                        violation(path, format!("expected `{name}`, found a `{ty}` value"), out);
                        return;
                    }
                    path.push(ctor.to_string());
                    let attr_decls: Vec<&FieldDef> = attributes.iter().collect();
                    check_fields(env, &attr_decls, attrs, "attributes", path, out);
                    let field_decls: Vec<&FieldDef> = cdef.fields.iter().collect();
                    check_fields(env, &field_decls, fields, "fields", path, out);
                    path.pop();
                }
                (_, other) => violation(
                    path,
                    format!("expected a `{name}` value, found {}", other.describe()),
                    out,
                ),
            }
        }
    }
}

/// Builds a sum value and validates it against `env`.
pub fn mk_sum(
    env: &SchemaEnv,
    type_name: &str,
    ctor: &str,
    attrs: Vec<Value>,
    fields: Vec<Value>,
) -> Result<Value, Violations> {
    let value = Value::sum(type_name, ctor, attrs, fields);
    finish(env, type_name, value)
}

/// Builds a product value and validates it against `env`.
pub fn mk_product(env: &SchemaEnv, type_name: &str, fields: Vec<Value>) -> Result<Value, Violations> {
    let value = Value::product(type_name, fields);
    finish(env, type_name, value)
}

fn finish(env: &SchemaEnv, type_name: &str, value: Value) -> Result<Value, Violations> {
    let violations = validate(env, type_name, &value);
    if violations.is_empty() {
        Ok(value)
    } else {
        Err(Violations(violations))
    }
}

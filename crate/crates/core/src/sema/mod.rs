//! Name resolution and classification of a parsed specification.
//!
//! [`check`] turns a [`RawSpec`] into a [`SchemaEnv`]: every field type is
//! resolved against the module's definitions and the built-ins, constructor
//! tags are assigned 1..n in declaration order, unnamed fields receive
//! generated names and sums are classified as enum-like or general.

use std::collections::{HashMap, HashSet};
use std::fmt;

use indexmap::IndexMap;

use crate::syntax::{Qualifier, RawField, RawSpec, RawTypeBody, SourceSpan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    Int,
    String,
    Identifier,
}

impl Builtin {
    pub const ALL: [Builtin; 3] = [Builtin::Int, Builtin::String, Builtin::Identifier];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Int => "int",
            Builtin::String => "string",
            Builtin::Identifier => "identifier",
        }
    }

    pub fn from_name(name: &str) -> Option<Builtin> {
        Builtin::ALL.into_iter().find(|b| b.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TypeRef {
    Builtin(Builtin),
    /// A type defined in the module.
    Defined(String),
}

impl TypeRef {
    pub fn name(&self) -> &str {
        match self {
            TypeRef::Builtin(b) => b.name(),
            TypeRef::Defined(name) => name,
        }
    }
}

impl fmt::Display for TypeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDef {
    /// Effective name: the written one, or a generated `T1` / `T_list1`.
    pub name: String,
    pub explicit: bool,
    pub ty: TypeRef,
    pub sequence: bool,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructorDef {
    pub name: String,
    /// 1-based position within the sum.
    pub tag: u32,
    /// The constructor's own fields, without the type's attributes.
    pub fields: Vec<FieldDef>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Every constructor is nullary and the type has no attributes.
    EnumLike,
    General,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeKind {
    Sum {
        constructors: Vec<ConstructorDef>,
        attributes: Vec<FieldDef>,
    },
    Product {
        fields: Vec<FieldDef>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeDef {
    pub name: String,
    pub kind: TypeKind,
    pub classification: Classification,
    pub span: SourceSpan,
}

impl TypeDef {
    pub fn is_sum(&self) -> bool {
        matches!(self.kind, TypeKind::Sum { .. })
    }

    pub fn is_enum_like(&self) -> bool {
        self.classification == Classification::EnumLike
    }

    pub fn constructors(&self) -> &[ConstructorDef] {
        match &self.kind {
            TypeKind::Sum { constructors, .. } => constructors,
            TypeKind::Product { .. } => &[],
        }
    }

    pub fn attributes(&self) -> &[FieldDef] {
        match &self.kind {
            TypeKind::Sum { attributes, .. } => attributes,
            TypeKind::Product { .. } => &[],
        }
    }

    pub fn constructor(&self, name: &str) -> Option<&ConstructorDef> {
        self.constructors().iter().find(|c| c.name == name)
    }

    pub fn constructor_by_tag(&self, tag: u64) -> Option<&ConstructorDef> {
        let idx = usize::try_from(tag).ok()?.checked_sub(1)?;
        self.constructors().get(idx)
    }

    /// Attributes followed by the constructor's own fields.
    pub fn effective_fields<'a>(&'a self, ctor: &'a ConstructorDef) -> impl Iterator<Item = &'a FieldDef> + 'a {
        self.attributes().iter().chain(ctor.fields.iter())
    }
}

/// The checked schema every downstream stage consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaEnv {
    pub module: String,
    types: IndexMap<String, TypeDef>,
    ctor_owner: HashMap<String, String>,
}

impl SchemaEnv {
    pub fn get(&self, name: &str) -> Option<&TypeDef> {
        self.types.get(name)
    }

    /// Looks up a defined type by bare `type` or qualified `Module.type`.
    pub fn resolve_type_name(&self, name: &str) -> Option<&TypeDef> {
        match name.split_once('.') {
            Some((module, ty)) if module == self.module => self.types.get(ty),
            Some(_) => None,
            None => self.types.get(name),
        }
    }

    pub fn types(&self) -> impl Iterator<Item = &TypeDef> {
        self.types.values()
    }

    pub fn type_count(&self) -> usize {
        self.types.len()
    }

    pub fn constructor_count(&self) -> usize {
        self.types.values().map(|t| t.constructors().len()).sum()
    }

    /// Name of the sum type that owns `ctor`.
    pub fn owner_of(&self, ctor: &str) -> Option<&str> {
        self.ctor_owner.get(ctor).map(String::as_str)
    }

    pub fn classification(&self, type_name: &str) -> Option<Classification> {
        self.types.get(type_name).map(|t| t.classification)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemaError {
    #[error("undefined type `{name}`")]
    UndefinedType { name: String, span: SourceSpan },
    #[error("type `{name}` is defined more than once")]
    DuplicateTypeDef { name: String, span: SourceSpan },
    #[error("`{name}` is a built-in type and cannot be redefined")]
    RedefinedBuiltin { name: String, span: SourceSpan },
    #[error("constructor `{name}` is defined more than once in the module")]
    DuplicateConstructor { name: String, span: SourceSpan },
    #[error("field name `{name}` is used more than once in `{owner}`")]
    DuplicateFieldName {
        name: String,
        owner: String,
        span: SourceSpan,
    },
    #[error("product type `{name}` cannot have attributes")]
    AttributesOnProduct { name: String, span: SourceSpan },
    #[error("unknown type `{0}`")]
    UnknownType(String),
    #[error("type `{ty}` has no constructor `{ctor}`")]
    UnknownConstructor { ty: String, ctor: String },
}

impl SemaError {
    pub fn span(&self) -> Option<SourceSpan> {
        match self {
            SemaError::UndefinedType { span, .. }
            | SemaError::DuplicateTypeDef { span, .. }
            | SemaError::RedefinedBuiltin { span, .. }
            | SemaError::DuplicateConstructor { span, .. }
            | SemaError::DuplicateFieldName { span, .. }
            | SemaError::AttributesOnProduct { span, .. } => Some(*span),
            SemaError::UnknownType(_) | SemaError::UnknownConstructor { .. } => None,
        }
    }
}

pub fn check(spec: &RawSpec) -> Result<SchemaEnv, SemaError> {
    let mut defined: HashSet<&str> = HashSet::new();
    for def in &spec.definitions {
        if Builtin::from_name(&def.name).is_some() {
            return Err(SemaError::RedefinedBuiltin {
                name: def.name.clone(),
                span: def.span,
            });
        }
        if !defined.insert(&def.name) {
            return Err(SemaError::DuplicateTypeDef {
                name: def.name.clone(),
                span: def.span,
            });
        }
    }

    let resolve = |field: &RawField| -> Result<TypeRef, SemaError> {
        if let Some(b) = Builtin::from_name(&field.type_name) {
            Ok(TypeRef::Builtin(b))
        } else if defined.contains(field.type_name.as_str()) {
            Ok(TypeRef::Defined(field.type_name.clone()))
        } else {
            Err(SemaError::UndefinedType {
                name: field.type_name.clone(),
                span: field.span,
            })
        }
    };

    let mut types = IndexMap::new();
    let mut ctor_owner: HashMap<String, String> = HashMap::new();

    for def in &spec.definitions {
        let (kind, classification) = match &def.body {
            RawTypeBody::Product { fields, attributes } => {
                if let Some(first) = attributes.first() {
                    return Err(SemaError::AttributesOnProduct {
                        name: def.name.clone(),
                        span: first.span,
                    });
                }
                let resolved = fields.iter().map(&resolve).collect::<Result<Vec<_>, _>>()?;
                let fields = name_fields(fields, resolved, &[], &def.name)?;
                (TypeKind::Product { fields }, Classification::General)
            }
            RawTypeBody::Sum {
                constructors,
                attributes,
            } => {
                let attr_types = attributes.iter().map(&resolve).collect::<Result<Vec<_>, _>>()?;
                let attributes = name_fields(attributes, attr_types, &[], &def.name)?;
                let mut checked = Vec::with_capacity(constructors.len());
                for (i, ctor) in constructors.iter().enumerate() {
                    if ctor_owner.contains_key(&ctor.name) {
                        return Err(SemaError::DuplicateConstructor {
                            name: ctor.name.clone(),
                            span: ctor.span,
                        });
                    }
                    ctor_owner.insert(ctor.name.clone(), def.name.clone());
                    let resolved = ctor.fields.iter().map(&resolve).collect::<Result<Vec<_>, _>>()?;
                    let fields = name_fields(&ctor.fields, resolved, &attributes, &ctor.name)?;
                    checked.push(ConstructorDef {
                        name: ctor.name.clone(),
                        tag: (i + 1) as u32,
                        fields,
                        span: ctor.span,
                    });
                }
                let enum_like = attributes.is_empty() && checked.iter().all(|c| c.fields.is_empty());
                let classification = if enum_like {
                    Classification::EnumLike
                } else {
                    Classification::General
                };
                (
                    TypeKind::Sum {
                        constructors: checked,
                        attributes,
                    },
                    classification,
                )
            }
        };
        types.insert(
            def.name.clone(),
            TypeDef {
                name: def.name.clone(),
                kind,
                classification,
                span: def.span,
            },
        );
    }

    Ok(SchemaEnv {
        module: spec.module.clone(),
        types,
        ctor_owner,
    })
}

/// Assigns effective names to one field list. `prefix` holds the attribute
/// fields already named for the enclosing sum; they share the namespace.
fn name_fields(
    raw: &[RawField],
    types: Vec<TypeRef>,
    prefix: &[FieldDef],
    owner: &str,
) -> Result<Vec<FieldDef>, SemaError> {
    let mut taken: HashSet<String> = prefix.iter().map(|f| f.name.clone()).collect();
    for field in raw {
        if let Some(name) = &field.name {
            if !taken.insert(name.clone()) {
                return Err(SemaError::DuplicateFieldName {
                    name: name.clone(),
                    owner: owner.to_string(),
                    span: field.span,
                });
            }
        }
    }

    let mut counters: HashMap<(String, bool), u32> = HashMap::new();
    let mut out = Vec::with_capacity(raw.len());
    for (field, ty) in raw.iter().zip(types) {
        let sequence = field.qualifier == Qualifier::Sequence;
        let (name, explicit) = match &field.name {
            Some(name) => (name.clone(), true),
            None => {
                let counter = counters.entry((field.type_name.clone(), sequence)).or_insert(0);
                loop {
                    *counter += 1;
                    let candidate = if sequence {
                        format!("{}_list{}", field.type_name, counter)
                    } else {
                        format!("{}{}", field.type_name, counter)
                    };
                    if taken.insert(candidate.clone()) {
                        break (candidate, false);
                    }
                }
            }
        };
        out.push(FieldDef {
            name,
            explicit,
            ty,
            sequence,
            span: field.span,
        });
    }
    Ok(out)
}

/// Effective field names of `ctor` in wire order (attributes first).
pub fn effective_field_names(env: &SchemaEnv, type_name: &str, ctor: &str) -> Option<Vec<String>> {
    let ty = env.get(type_name)?;
    let ctor = ty.constructor(ctor)?;
    Some(ty.effective_fields(ctor).map(|f| f.name.clone()).collect())
}

pub fn tag_of(env: &SchemaEnv, type_name: &str, ctor: &str) -> Result<u32, SemaError> {
    let ty = env
        .get(type_name)
        .ok_or_else(|| SemaError::UnknownType(type_name.to_string()))?;
    ty.constructor(ctor)
        .map(|c| c.tag)
        .ok_or_else(|| SemaError::UnknownConstructor {
            ty: type_name.to_string(),
            ctor: ctor.to_string(),
        })
}

//! Source generation: type definitions, constructor functions, readers and
//! writers for a checked schema.
//!
//! A [`Backend`] supplies the target-language rendering; [`generate`] drives
//! it over the schema in declaration order and checks the public names it
//! would produce. [`RustBackend`] targets Rust and links against
//! [`crate::runtime`].

mod harness;
mod rust;

use std::collections::BTreeMap;
use std::fmt;

pub use harness::{conformance_harness, ConformanceReport, Mismatch};
pub use rust::RustBackend;

use crate::sema::{SchemaEnv, TypeDef, TypeKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {reason}")]
pub struct BackendError {
    pub path: String,
    pub reason: String,
}

/// Generated files keyed by path relative to the output directory.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratedUnit {
    pub files: BTreeMap<String, String>,
}

impl GeneratedUnit {
    pub fn file(&self, path: &str) -> Option<&str> {
        self.files.get(path).map(String::as_str)
    }

    /// Writes every file below `dir`, creating directories as needed.
    pub fn write_to(&self, dir: &std::path::Path) -> std::io::Result<()> {
        for (path, text) in &self.files {
            let target = dir.join(path);
            if let Some(parent) = target.parent() {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(target, text)?;
        }
        Ok(())
    }
}

/// The two halves every backend produces; how they map to files is up to
/// [`Backend::layout`].
#[derive(Debug, Clone, Default)]
pub struct Sections {
    pub definitions: String,
    pub implementation: String,
}

/// What a public name was generated for, for collision reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NameOrigin {
    Type(String),
    Constructor(String),
    Reader(String),
    Writer(String),
    Field { owner: String, field: String },
}

impl fmt::Display for NameOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NameOrigin::Type(t) => write!(f, "type `{t}`"),
            NameOrigin::Constructor(c) => write!(f, "constructor `{c}`"),
            NameOrigin::Reader(t) => write!(f, "reader of `{t}`"),
            NameOrigin::Writer(t) => write!(f, "writer of `{t}`"),
            NameOrigin::Field { owner, field } => write!(f, "field `{field}` of `{owner}`"),
        }
    }
}

pub trait Backend {
    fn name(&self) -> &'static str;

    /// `<Module>_<type>`; backends add their own suffixes.
    fn type_name(&self, env: &SchemaEnv, ty: &str) -> String {
        format!("{}_{}", env.module, ty)
    }

    /// `<Module>_<Constructor>`.
    fn constructor_name(&self, env: &SchemaEnv, ctor: &str) -> String {
        format!("{}_{}", env.module, ctor)
    }

    fn reader_name(&self, env: &SchemaEnv, ty: &str) -> String {
        format!("{}_read_{}", env.module, ty)
    }

    fn writer_name(&self, env: &SchemaEnv, ty: &str) -> String {
        format!("{}_write_{}", env.module, ty)
    }

    /// A field name as it appears in the target language.
    fn field_name(&self, name: &str) -> String {
        name.to_string()
    }

    /// Names a type definition introduces in the global namespace.
    fn type_items(&self, env: &SchemaEnv, def: &TypeDef) -> Vec<String>;

    /// Member names of a record that fields must not take.
    fn reserved_members(&self, _env: &SchemaEnv, _def: &TypeDef) -> Vec<String> {
        Vec::new()
    }

    fn prologue(&self, env: &SchemaEnv) -> String;
    fn render_enum(&self, env: &SchemaEnv, def: &TypeDef) -> String;
    fn render_sum(&self, env: &SchemaEnv, def: &TypeDef) -> String;
    fn render_product(&self, env: &SchemaEnv, def: &TypeDef) -> String;
    fn render_constructors(&self, env: &SchemaEnv, def: &TypeDef) -> String;
    fn render_reader(&self, env: &SchemaEnv, def: &TypeDef) -> String;
    fn render_writer(&self, env: &SchemaEnv, def: &TypeDef) -> String;

    /// Maps the rendered sections onto files.
    fn layout(&self, env: &SchemaEnv, sections: Sections) -> Vec<(String, String)>;
}

fn check_names(env: &SchemaEnv, backend: &dyn Backend, path: &str) -> Result<(), BackendError> {
    let mut seen: BTreeMap<String, NameOrigin> = BTreeMap::new();
    let claim = |seen: &mut BTreeMap<String, NameOrigin>, name: String, origin: NameOrigin| match seen.get(&name) {
        Some(prev) if *prev != origin => Err(BackendError {
            path: path.to_string(),
            reason: format!("generated name `{name}` is used by both {prev} and {origin}"),
        }),
        _ => {
            seen.insert(name, origin);
            Ok(())
        }
    };
    for def in env.types() {
        for item in backend.type_items(env, def) {
            claim(&mut seen, item, NameOrigin::Type(def.name.clone()))?;
        }
        for c in def.constructors() {
            claim(
                &mut seen,
                backend.constructor_name(env, &c.name),
                NameOrigin::Constructor(c.name.clone()),
            )?;
        }
        claim(
            &mut seen,
            backend.reader_name(env, &def.name),
            NameOrigin::Reader(def.name.clone()),
        )?;
        claim(
            &mut seen,
            backend.writer_name(env, &def.name),
            NameOrigin::Writer(def.name.clone()),
        )?;

        // Fields share a record with the attributes and the backend's members.
        let owners: Vec<(String, Vec<&str>)> = match &def.kind {
            TypeKind::Product { fields } => {
                vec![(def.name.clone(), fields.iter().map(|f| f.name.as_str()).collect())]
            }
            TypeKind::Sum { constructors, .. } => constructors
                .iter()
                .map(|c| {
                    (
                        c.name.clone(),
                        def.effective_fields(c).map(|f| f.name.as_str()).collect(),
                    )
                })
                .collect(),
        };
        let reserved = backend.reserved_members(env, def);
        for (owner, fields) in owners {
            let mut local: BTreeMap<String, NameOrigin> = reserved
                .iter()
                .map(|r| (r.clone(), NameOrigin::Type(def.name.clone())))
                .collect();
            for f in fields {
                let origin = NameOrigin::Field {
                    owner: owner.clone(),
                    field: f.to_string(),
                };
                claim(&mut local, backend.field_name(f), origin)?;
            }
        }
    }
    Ok(())
}

/// Renders `env` through `backend`. Output is a pure function of its inputs.
pub fn generate(env: &SchemaEnv, backend: &dyn Backend) -> Result<GeneratedUnit, BackendError> {
    let mut sections = Sections {
        definitions: backend.prologue(env),
        implementation: String::new(),
    };
    let paths: Vec<String> = backend
        .layout(env, Sections::default())
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    check_names(env, backend, paths.first().map_or("", String::as_str))?;
    for def in env.types() {
        let rendered = match &def.kind {
            TypeKind::Product { .. } => backend.render_product(env, def),
            _ if def.is_enum_like() => backend.render_enum(env, def),
            _ => backend.render_sum(env, def),
        };
        sections.definitions.push_str(&rendered);
        sections.implementation.push_str(&backend.render_constructors(env, def));
        sections.implementation.push_str(&backend.render_reader(env, def));
        sections.implementation.push_str(&backend.render_writer(env, def));
    }
    let mut unit = GeneratedUnit::default();
    for (path, text) in backend.layout(env, sections) {
        if unit.files.insert(path.clone(), text).is_some() {
            return Err(BackendError {
                path,
                reason: "backend laid out the same file twice".into(),
            });
        }
    }
    Ok(unit)
}

/// Looks a backend up by name.
pub fn backend_named(name: &str) -> Option<Box<dyn Backend>> {
    match name {
        "rust" => Some(Box::new(RustBackend)),
        _ => None,
    }
}

pub const BACKENDS: &[&str] = &["rust"];

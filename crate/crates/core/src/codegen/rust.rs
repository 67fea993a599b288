//! Rust backend.
//!
//! For a module `M` it emits one file, `m.rs`, meant to be included as a
//! module of a crate that depends on `asdl`:
//!
//! * a sum `t` becomes `M_t_ty = Box<M_t_s>`, a struct holding the attributes
//!   followed by `kind: M_t_kind`, an enum with one variant per constructor;
//! * an enumeration-like sum becomes a `#[repr(u32)]` enum `M_t_ty` whose
//!   discriminants are the wire tags;
//! * a product `t` becomes `M_t_ty = Box<M_t_s>` with a plain struct;
//! * `int` is `i64`, `string` is `String`, `identifier` is
//!   `runtime::Identifier` and `t*` is `Vec<_>`.
//!
//! Every constructor `C` gets a function `M_C` taking attributes then
//! fields, and every type gets `M_read_t` and `M_write_t`.

use std::fmt::Write as _;

use super::{Backend, Sections};
use crate::sema::{Builtin, FieldDef, SchemaEnv, TypeDef, TypeKind, TypeRef};

#[derive(Debug, Clone, Copy, Default)]
pub struct RustBackend;

const KEYWORDS: &[&str] = &[
    "abstract", "as", "async", "await", "become", "box", "break", "const", "continue", "do", "dyn", "else", "enum",
    "extern", "false", "final", "fn", "for", "gen", "if", "impl", "in", "let", "loop", "macro", "match", "mod", "move",
    "mut", "override", "priv", "pub", "ref", "return", "static", "struct", "trait", "true", "try", "type", "typeof",
    "unsafe", "unsized", "use", "virtual", "where", "while", "yield",
];

/// Keywords that cannot be written as raw identifiers.
const UNRAWABLE: &[&str] = &["crate", "self", "super"];

impl RustBackend {
    fn ty(&self, env: &SchemaEnv, def_name: &str) -> String {
        format!("{}_ty", self.type_name(env, def_name))
    }

    fn record(&self, env: &SchemaEnv, def_name: &str) -> String {
        format!("{}_s", self.type_name(env, def_name))
    }

    fn kind_enum(&self, env: &SchemaEnv, def_name: &str) -> String {
        format!("{}_kind", self.type_name(env, def_name))
    }

    /// Name of the discriminant member, clear of every attribute.
    fn kind_member(&self, def: &TypeDef) -> String {
        let mut name = String::from("kind");
        while def.attributes().iter().any(|a| self.field_name(&a.name) == name) {
            name.push('_');
        }
        name
    }

    fn element_type(&self, env: &SchemaEnv, ty: &TypeRef) -> String {
        match ty {
            TypeRef::Builtin(Builtin::Int) => "i64".into(),
            TypeRef::Builtin(Builtin::String) => "String".into(),
            TypeRef::Builtin(Builtin::Identifier) => "runtime::Identifier".into(),
            TypeRef::Defined(name) => self.ty(env, name),
        }
    }

    fn field_type(&self, env: &SchemaEnv, f: &FieldDef) -> String {
        let t = self.element_type(env, &f.ty);
        if f.sequence {
            format!("Vec<{t}>")
        } else {
            t
        }
    }

    fn element_reader(&self, env: &SchemaEnv, ty: &TypeRef) -> String {
        match ty {
            TypeRef::Builtin(b) => format!("runtime::read_{}", b.name()),
            TypeRef::Defined(name) => self.reader_name(env, name),
        }
    }

    fn read_expr(&self, env: &SchemaEnv, f: &FieldDef) -> String {
        let r = self.element_reader(env, &f.ty);
        if f.sequence {
            format!("runtime::read_list(_s, {r})?")
        } else {
            format!("{r}(_s)?")
        }
    }

    fn element_write(&self, env: &SchemaEnv, ty: &TypeRef, r: &str) -> String {
        match ty {
            TypeRef::Builtin(b) => format!("runtime::write_{}({r}, _s)", b.name()),
            TypeRef::Defined(name) => format!("{}({r}, _s)", self.writer_name(env, name)),
        }
    }

    /// Statement writing the value `r`, a reference to the field's value.
    fn write_stmt(&self, env: &SchemaEnv, f: &FieldDef, r: &str) -> String {
        if f.sequence {
            let inner = self.element_write(env, &f.ty, "_v");
            format!("runtime::write_list({r}, _s, |_v, _s| {inner});")
        } else {
            format!("{};", self.element_write(env, &f.ty, r))
        }
    }

    fn params(&self, env: &SchemaEnv, fields: &[&FieldDef]) -> String {
        fields
            .iter()
            .map(|f| format!("{}: {}", self.field_name(&f.name), self.field_type(env, f)))
            .collect::<Vec<_>>()
            .join(", ")
    }

    fn names(&self, fields: &[&FieldDef]) -> String {
        fields
            .iter()
            .map(|f| self.field_name(&f.name))
            .collect::<Vec<_>>()
            .join(", ")
    }

    fn variant(&self, env: &SchemaEnv, ctor: &str, fields: &[FieldDef], with_types: bool) -> String {
        let name = self.constructor_name(env, ctor);
        if fields.is_empty() {
            return name;
        }
        let inner: Vec<String> = fields
            .iter()
            .map(|f| {
                if with_types {
                    format!("{}: {}", self.field_name(&f.name), self.field_type(env, f))
                } else {
                    self.field_name(&f.name)
                }
            })
            .collect();
        format!("{name} {{ {} }}", inner.join(", "))
    }
}

impl Backend for RustBackend {
    fn name(&self) -> &'static str {
        "rust"
    }

    fn field_name(&self, name: &str) -> String {
        if UNRAWABLE.contains(&name) {
            format!("{name}_")
        } else if KEYWORDS.contains(&name) {
            format!("r#{name}")
        } else {
            name.to_string()
        }
    }

    fn type_items(&self, env: &SchemaEnv, def: &TypeDef) -> Vec<String> {
        match &def.kind {
            _ if def.is_enum_like() => vec![self.ty(env, &def.name)],
            TypeKind::Product { .. } => vec![self.ty(env, &def.name), self.record(env, &def.name)],
            TypeKind::Sum { .. } => vec![
                self.ty(env, &def.name),
                self.record(env, &def.name),
                self.kind_enum(env, &def.name),
            ],
        }
    }

    fn reserved_members(&self, _env: &SchemaEnv, def: &TypeDef) -> Vec<String> {
        if def.is_sum() && !def.is_enum_like() {
            vec![self.kind_member(def)]
        } else {
            Vec::new()
        }
    }

    fn prologue(&self, env: &SchemaEnv) -> String {
        format!(
            "// Generated from module {} by asdl. Do not edit.\n\
             #![allow(non_camel_case_types, non_snake_case, dead_code, clippy::all)]\n\
             \n\
             use asdl::runtime::{{self, InStream, OutStream}};\n",
            env.module
        )
    }

    fn render_enum(&self, env: &SchemaEnv, def: &TypeDef) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "\n#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]\n#[repr(u32)]"
        );
        let _ = writeln!(out, "pub enum {} {{", self.ty(env, &def.name));
        for c in def.constructors() {
            let _ = writeln!(out, "    {} = {},", self.constructor_name(env, &c.name), c.tag);
        }
        out.push_str("}\n");
        out
    }

    fn render_sum(&self, env: &SchemaEnv, def: &TypeDef) -> String {
        let mut out = String::new();
        let (ty, record, kind) = (
            self.ty(env, &def.name),
            self.record(env, &def.name),
            self.kind_enum(env, &def.name),
        );
        let _ = writeln!(out, "\npub type {ty} = Box<{record}>;");
        let _ = writeln!(out, "\n#[derive(Debug, Clone, PartialEq, Eq)]\npub struct {record} {{");
        for a in def.attributes() {
            let _ = writeln!(
                out,
                "    pub {}: {},",
                self.field_name(&a.name),
                self.field_type(env, a)
            );
        }
        let _ = writeln!(out, "    pub {}: {kind},\n}}", self.kind_member(def));
        let _ = writeln!(out, "\n#[derive(Debug, Clone, PartialEq, Eq)]\npub enum {kind} {{");
        for c in def.constructors() {
            let _ = writeln!(out, "    {},", self.variant(env, &c.name, &c.fields, true));
        }
        out.push_str("}\n");
        let _ = writeln!(
            out,
            "\nimpl {kind} {{\n    pub fn tag(&self) -> u32 {{\n        match self {{"
        );
        for c in def.constructors() {
            let pattern = if c.fields.is_empty() { "" } else { " { .. }" };
            let _ = writeln!(
                out,
                "            {kind}::{}{pattern} => {},",
                self.constructor_name(env, &c.name),
                c.tag
            );
        }
        out.push_str("        }\n    }\n}\n");
        out
    }

    fn render_product(&self, env: &SchemaEnv, def: &TypeDef) -> String {
        let TypeKind::Product { fields } = &def.kind else {
            unreachable!("product expected")
        };
        let mut out = String::new();
        let (ty, record) = (self.ty(env, &def.name), self.record(env, &def.name));
        let _ = writeln!(out, "\npub type {ty} = Box<{record}>;");
        let _ = writeln!(out, "\n#[derive(Debug, Clone, PartialEq, Eq)]\npub struct {record} {{");
        for f in fields {
            let _ = writeln!(
                out,
                "    pub {}: {},",
                self.field_name(&f.name),
                self.field_type(env, f)
            );
        }
        out.push_str("}\n");
        out
    }

    fn render_constructors(&self, env: &SchemaEnv, def: &TypeDef) -> String {
        let mut out = String::new();
        let ty = self.ty(env, &def.name);
        match &def.kind {
            TypeKind::Product { fields } => {
                let fields: Vec<&FieldDef> = fields.iter().collect();
                let _ = writeln!(
                    out,
                    "\npub fn {}({}) -> {ty} {{\n    Box::new({} {{ {} }})\n}}",
                    self.type_name(env, &def.name),
                    self.params(env, &fields),
                    self.record(env, &def.name),
                    self.names(&fields)
                );
            }
            _ if def.is_enum_like() => {
                for c in def.constructors() {
                    let name = self.constructor_name(env, &c.name);
                    let _ = writeln!(out, "\npub fn {name}() -> {ty} {{\n    {ty}::{name}\n}}");
                }
            }
            TypeKind::Sum { attributes, .. } => {
                let record = self.record(env, &def.name);
                let kind = self.kind_enum(env, &def.name);
                let attrs: Vec<&FieldDef> = attributes.iter().collect();
                for c in def.constructors() {
                    let all: Vec<&FieldDef> = def.effective_fields(c).collect();
                    let mut init: Vec<String> = attrs.iter().map(|a| self.field_name(&a.name)).collect();
                    init.push(format!(
                        "{}: {kind}::{}",
                        self.kind_member(def),
                        self.variant(env, &c.name, &c.fields, false)
                    ));
                    let _ = writeln!(
                        out,
                        "\npub fn {}({}) -> {ty} {{\n    Box::new({record} {{ {} }})\n}}",
                        self.constructor_name(env, &c.name),
                        self.params(env, &all),
                        init.join(", ")
                    );
                }
            }
        }
        out
    }

    fn render_reader(&self, env: &SchemaEnv, def: &TypeDef) -> String {
        let mut out = String::new();
        let ty = self.ty(env, &def.name);
        let _ = writeln!(
            out,
            "\npub fn {}(_s: &mut InStream<'_>) -> runtime::Result<{ty}> {{",
            self.reader_name(env, &def.name)
        );
        match &def.kind {
            TypeKind::Product { fields } => {
                for f in fields {
                    let _ = writeln!(
                        out,
                        "    let {} = {};",
                        self.field_name(&f.name),
                        self.read_expr(env, f)
                    );
                }
                let fields: Vec<&FieldDef> = fields.iter().collect();
                let _ = writeln!(
                    out,
                    "    Ok({}({}))",
                    self.type_name(env, &def.name),
                    self.names(&fields)
                );
            }
            TypeKind::Sum { attributes, .. } => {
                out.push_str("    let _offset = _s.position();\n");
                out.push_str("    let _tag = runtime::read_tag(_s)?;\n");
                for a in attributes {
                    let _ = writeln!(
                        out,
                        "    let {} = {};",
                        self.field_name(&a.name),
                        self.read_expr(env, a)
                    );
                }
                out.push_str("    Ok(match _tag {\n");
                for c in def.constructors() {
                    let name = self.constructor_name(env, &c.name);
                    if def.is_enum_like() {
                        let _ = writeln!(out, "        {} => {ty}::{name},", c.tag);
                        continue;
                    }
                    let _ = writeln!(out, "        {} => {{", c.tag);
                    for f in &c.fields {
                        let _ = writeln!(
                            out,
                            "            let {} = {};",
                            self.field_name(&f.name),
                            self.read_expr(env, f)
                        );
                    }
                    let all: Vec<&FieldDef> = def.effective_fields(c).collect();
                    let _ = writeln!(out, "            {name}({})\n        }}", self.names(&all));
                }
                let _ = writeln!(
                    out,
                    "        _ => return Err(runtime::bad_tag({:?}, _tag, _offset)),\n    }})",
                    def.name
                );
            }
        }
        out.push_str("}\n");
        out
    }

    fn render_writer(&self, env: &SchemaEnv, def: &TypeDef) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "\npub fn {}(_x: &{}, _s: &mut OutStream) {{",
            self.writer_name(env, &def.name),
            self.ty(env, &def.name)
        );
        match &def.kind {
            TypeKind::Product { fields } => {
                for f in fields {
                    let r = format!("&_x.{}", self.field_name(&f.name));
                    let _ = writeln!(out, "    {}", self.write_stmt(env, f, &r));
                }
            }
            _ if def.is_enum_like() => {
                out.push_str("    runtime::write_tag(*_x as u32, _s);\n");
            }
            TypeKind::Sum { attributes, .. } => {
                let member = self.kind_member(def);
                let kind = self.kind_enum(env, &def.name);
                let _ = writeln!(out, "    runtime::write_tag(_x.{member}.tag(), _s);");
                for a in attributes {
                    let r = format!("&_x.{}", self.field_name(&a.name));
                    let _ = writeln!(out, "    {}", self.write_stmt(env, a, &r));
                }
                let _ = writeln!(out, "    match &_x.{member} {{");
                for c in def.constructors() {
                    let pattern = self.variant(env, &c.name, &c.fields, false);
                    if c.fields.is_empty() {
                        let _ = writeln!(out, "        {kind}::{pattern} => {{}}");
                        continue;
                    }
                    let _ = writeln!(out, "        {kind}::{pattern} => {{");
                    for f in &c.fields {
                        let _ = writeln!(
                            out,
                            "            {}",
                            self.write_stmt(env, f, &self.field_name(&f.name))
                        );
                    }
                    out.push_str("        }\n");
                }
                out.push_str("    }\n");
            }
        }
        out.push_str("}\n");
        out
    }

    fn layout(&self, env: &SchemaEnv, sections: Sections) -> Vec<(String, String)> {
        let mut text = sections.definitions;
        text.push_str(&sections.implementation);
        vec![(format!("{}.rs", env.module.to_lowercase()), text)]
    }
}

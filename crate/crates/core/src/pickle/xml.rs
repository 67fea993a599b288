//! XML pickles.
//!
//! Each sum value is an element named after its constructor and each product
//! value an element named after its type. Attributes of scalar type (a single
//! `int`, `string` or `identifier`) become XML attributes; other attributes
//! come first among the child elements, followed by the fields in order.
//! Builtin values are `<int>`, `<string>` and `<identifier>` elements with
//! text content, and a sequence is a `<list>` element. A document holding
//! several instances wraps them in `<pickle>`.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use quick_xml::events::Event;
use quick_xml::XmlVersion;

use super::codec::type_ref;
use super::PickleError;
use crate::sema::{Builtin, FieldDef, SchemaEnv, TypeKind, TypeRef};
use crate::value::{validate, Atom, Value, Violations};

pub const PICKLE_ROOT: &str = "pickle";

type Fields<'a> = Vec<(&'a FieldDef, &'a Value)>;
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum XmlError {
    #[error("malformed XML at byte {offset}: {message}")]
    Malformed { offset: u64, message: String },
    #[error("{path}: expected {expected}, found {found}")]
    Unexpected {
        path: String,
        expected: String,
        found: String,
    },
    #[error("{path}: `{text}` is not an integer")]
    BadInt { path: String, text: String },
    #[error("{path}: character U+{:04X} cannot appear in XML", u32::from(*ch))]
    Unrepresentable { path: String, ch: char },
    #[error("unknown type `{0}`")]
    UnknownType(String),
    #[error("value does not conform: {0}")]
    Nonconforming(Violations),
    #[error(transparent)]
    Pickle(#[from] PickleError),
}

/// Symbolic names for integer fields.
///
/// Entries are keyed by owner and field name, where the owner is the sum type
/// for attributes, the constructor for constructor fields and the product
/// type for product fields.
#[derive(Debug, Clone, Default)]
pub struct SymbolTable {
    entries: HashMap<(String, String), Vec<(i64, String)>>,
}

impl SymbolTable {
    pub fn new() -> Self {
        SymbolTable::default()
    }

    pub fn insert<S: Into<String>>(&mut self, owner: &str, field: &str, names: impl IntoIterator<Item = (i64, S)>) {
        self.entries.insert(
            (owner.to_string(), field.to_string()),
            names.into_iter().map(|(n, s)| (n, s.into())).collect(),
        );
    }

    pub fn name_of(&self, owner: &str, field: &str, n: i64) -> Option<&str> {
        self.lookup(owner, field)?
            .iter()
            .find(|(v, _)| *v == n)
            .map(|(_, s)| s.as_str())
    }

    pub fn value_of(&self, owner: &str, field: &str, name: &str) -> Option<i64> {
        self.lookup(owner, field)?
            .iter()
            .find(|(_, s)| s == name)
            .map(|(v, _)| *v)
    }

    fn lookup(&self, owner: &str, field: &str) -> Option<&Vec<(i64, String)>> {
        // Avoids allocating a key per lookup in the common empty case.
        if self.entries.is_empty() {
            return None;
        }
        self.entries.get(&(owner.to_string(), field.to_string()))
    }
}

#[derive(Debug, Clone, Default)]
pub struct XmlOptions {
    pub symbols: SymbolTable,
}

fn is_scalar(field: &FieldDef) -> bool {
    !field.sequence && matches!(field.ty, TypeRef::Builtin(_))
}

fn xml_legal(ch: char) -> bool {
    matches!(ch, '\t' | '\n' | '\r' | '\u{20}'..='\u{D7FF}' | '\u{E000}'..='\u{FFFD}' | '\u{10000}'..)
}

struct Writer<'a> {
    env: &'a SchemaEnv,
    options: &'a XmlOptions,
    out: String,
    path: Vec<String>,
}

impl Writer<'_> {
    fn path(&self) -> String {
        self.path.join("/")
    }

    fn escape(&mut self, text: &str, in_attribute: bool) -> Result<(), XmlError> {
        for ch in text.chars() {
            match ch {
                '&' => self.out.push_str("&amp;"),
                '<' => self.out.push_str("&lt;"),
                '>' => self.out.push_str("&gt;"),
                '"' if in_attribute => self.out.push_str("&quot;"),
                '\'' if in_attribute => self.out.push_str("&apos;"),
                '\r' => self.out.push_str("&#13;"),
                '\t' | '\n' if in_attribute => {
                    let _ = write!(self.out, "&#{};", u32::from(ch));
                }
                c if xml_legal(c) => self.out.push(c),
                c => {
                    return Err(XmlError::Unrepresentable {
                        path: self.path(),
                        ch: c,
                    })
                }
            }
        }
        Ok(())
    }

    fn newline(&mut self, depth: usize) {
        self.out.push('\n');
        for _ in 0..depth {
            self.out.push_str("  ");
        }
    }

    fn int_text(&self, owner: &str, field: &str, n: &BigInt) -> String {
        i64::try_from(n)
            .ok()
            .and_then(|n| self.options.symbols.name_of(owner, field, n))
            .map_or_else(|| n.to_string(), str::to_string)
    }

    fn scalar_text(&self, owner: &str, field: &str, value: &Value) -> Option<String> {
        match value {
            Value::Int(n) => Some(self.int_text(owner, field, n)),
            Value::String(s) => Some(s.clone()),
            Value::Identifier(a) => Some(a.as_str().to_string()),
            _ => None,
        }
    }

    fn field(&mut self, owner: &str, field: &FieldDef, value: &Value, depth: usize) -> Result<(), XmlError> {
        self.path.push(field.name.clone());
        if field.sequence {
            let items = value.as_list().unwrap_or_default();
            if items.is_empty() {
                self.out.push_str("<list/>");
            } else {
                self.out.push_str("<list>");
                for item in items {
                    self.newline(depth + 1);
                    self.value(owner, &field.name, &field.ty, item, depth + 1)?;
                }
                self.newline(depth);
                self.out.push_str("</list>");
            }
        } else {
            self.value(owner, &field.name, &field.ty, value, depth)?;
        }
        self.path.pop();
        Ok(())
    }

    fn value(&mut self, owner: &str, field: &str, ty: &TypeRef, value: &Value, depth: usize) -> Result<(), XmlError> {
        match ty {
            TypeRef::Builtin(b) => {
                let text = self.scalar_text(owner, field, value).unwrap_or_default();
                let tag = b.name();
                if text.is_empty() {
                    let _ = write!(self.out, "<{tag}/>");
                } else {
                    let _ = write!(self.out, "<{tag}>");
                    self.escape(&text, false)?;
                    let _ = write!(self.out, "</{tag}>");
                }
                Ok(())
            }
            TypeRef::Defined(name) => self.defined(name, value, depth),
        }
    }

    fn defined(&mut self, type_name: &str, value: &Value, depth: usize) -> Result<(), XmlError> {
        let env = self.env;
        let def = env
            .get(type_name)
            .ok_or_else(|| XmlError::UnknownType(type_name.to_string()))?;
        let (tag, owner, scalar_attrs, children): (&str, &str, Fields<'_>, Fields<'_>) = match (&def.kind, value) {
            (TypeKind::Product { fields: decls }, Value::Product { fields, .. }) => {
                (&def.name, &def.name, Vec::new(), decls.iter().zip(fields).collect())
            }
            (
                TypeKind::Sum { attributes, .. },
                Value::Sum {
                    ctor, attrs, fields, ..
                },
            ) => {
                let cdef = def.constructor(ctor.as_str()).expect("validated value");
                let (scalar, other): (Vec<_>, Vec<_>) = attributes.iter().zip(attrs).partition(|(f, _)| is_scalar(f));
                self.path.push(cdef.name.clone());
                let mut children = other;
                children.extend(cdef.fields.iter().zip(fields));
                (&cdef.name, type_name, scalar, children)
            }
            _ => unreachable!("validated value"),
        };
        let _ = write!(self.out, "<{tag}");
        for (f, v) in scalar_attrs {
            let text = self.scalar_text(owner, &f.name, v).unwrap_or_default();
            let _ = write!(self.out, " {}=\"", f.name);
            self.path.push(f.name.clone());
            self.escape(&text, true)?;
            self.path.pop();
            self.out.push('"');
        }
        if children.is_empty() {
            self.out.push_str("/>");
        } else {
            self.out.push('>');
            let child_owner = if def.is_sum() { tag } else { owner };
            for (f, v) in children {
                self.newline(depth + 1);
                // Attributes are keyed by the type, fields by the constructor.
                let key = if def.attributes().iter().any(|a| std::ptr::eq(a, f)) {
                    owner
                } else {
                    child_owner
                };
                self.field(key, f, v, depth + 1)?;
            }
            self.newline(depth);
            let _ = write!(self.out, "</{tag}>");
        }
        if def.is_sum() {
            self.path.pop();
        }
        Ok(())
    }
}

fn check(env: &SchemaEnv, type_name: &str, value: &Value) -> Result<(), XmlError> {
    let violations = validate(env, type_name, value);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(XmlError::Nonconforming(Violations(violations)))
    }
}

fn render(
    env: &SchemaEnv,
    options: &XmlOptions,
    type_name: &str,
    value: &Value,
    depth: usize,
    out: String,
) -> Result<String, XmlError> {
    let ty = type_ref(env, type_name).map_err(|_| XmlError::UnknownType(type_name.to_string()))?;
    check(env, type_name, value)?;
    let mut w = Writer {
        env,
        options,
        out,
        path: vec![type_name.to_string()],
    };
    match &ty {
        TypeRef::Defined(name) => w.defined(name, value, depth)?,
        TypeRef::Builtin(_) => w.value("", "", &ty, value, depth)?,
    }
    Ok(w.out)
}

const DECLARATION: &str = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

/// Renders one instance as an XML document.
pub fn write_xml(env: &SchemaEnv, type_name: &str, value: &Value, options: &XmlOptions) -> Result<String, XmlError> {
    let mut out = render(env, options, type_name, value, 0, DECLARATION.to_string())?;
    out.push('\n');
    Ok(out)
}

/// Renders several instances. A single instance is written bare, more are
/// wrapped in a `<pickle>` root.
pub fn write_xml_all(env: &SchemaEnv, instances: &[(&str, &Value)], options: &XmlOptions) -> Result<String, XmlError> {
    if let [(ty, v)] = instances {
        return write_xml(env, ty, v, options);
    }
    let mut out = format!("{DECLARATION}<{PICKLE_ROOT}>");
    for (ty, v) in instances {
        out.push_str("\n  ");
        out = render(env, options, ty, v, 1, out)?;
    }
    out.push_str(&format!("\n</{PICKLE_ROOT}>\n"));
    Ok(out)
}

#[derive(Debug)]
enum Node {
    Element(Element),
    Text(String),
}

#[derive(Debug)]
struct Element {
    name: String,
    attributes: Vec<(String, String)>,
    children: Vec<Node>,
}

fn malformed(offset: u64, message: impl ToString) -> XmlError {
    XmlError::Malformed {
        offset,
        message: message.to_string(),
    }
}

fn parse_document(text: &str) -> Result<Element, XmlError> {
    let mut reader = quick_xml::Reader::from_str(text);
    reader.config_mut().trim_text(false);
    let mut stack: Vec<Element> = Vec::new();
    let mut root: Option<Element> = None;
    let open = |e: &quick_xml::events::BytesStart<'_>, offset: u64| -> Result<Element, XmlError> {
        let name = e.name().as_ref().to_string();
        let mut attributes = Vec::new();
        for attr in e.attributes() {
            let attr = attr.map_err(|err| malformed(offset, err))?;
            let key = attr.key.as_ref().to_string();
            let value = attr
                .normalized_value(XmlVersion::Implicit1_0)
                .map_err(|err| malformed(offset, err))?
                .into_owned();
            attributes.push((key, value));
        }
        Ok(Element {
            name,
            attributes,
            children: Vec::new(),
        })
    };
    loop {
        let offset = reader.buffer_position();
        let event = reader
            .read_event()
            .map_err(|err| malformed(reader.error_position(), err))?;
        let text = match &event {
            Event::Text(t) => Some(t.xml10_content().into_owned()),
            Event::CData(t) => Some(t.xml10_content().into_owned()),
            Event::GeneralRef(r) => Some(match r.resolve_char_ref().map_err(|err| malformed(offset, err))? {
                Some(ch) => ch.to_string(),
                None => match &**r {
                    "lt" => "<",
                    "gt" => ">",
                    "amp" => "&",
                    "quot" => "\"",
                    "apos" => "'",
                    other => return Err(malformed(offset, format!("unknown entity `&{other};`"))),
                }
                .to_string(),
            }),
            _ => None,
        };
        if let Some(text) = text {
            match stack.last_mut() {
                Some(top) => match top.children.last_mut() {
                    Some(Node::Text(prev)) => prev.push_str(&text),
                    _ => top.children.push(Node::Text(text)),
                },
                None if text.trim().is_empty() => {}
                None => return Err(malformed(offset, "text outside the root element")),
            }
            continue;
        }
        let finished = match event {
            Event::Start(e) => {
                if root.is_some() {
                    return Err(malformed(offset, "more than one root element"));
                }
                stack.push(open(&e, offset)?);
                None
            }
            Event::Empty(e) => {
                if root.is_some() {
                    return Err(malformed(offset, "more than one root element"));
                }
                Some(open(&e, offset)?)
            }
            Event::End(_) => stack.pop(),
            Event::Eof => {
                if !stack.is_empty() {
                    return Err(malformed(offset, "unexpected end of document"));
                }
                return root.ok_or_else(|| malformed(offset, "document has no root element"));
            }
            _ => None,
        };
        if let Some(done) = finished {
            match stack.last_mut() {
                Some(parent) => parent.children.push(Node::Element(done)),
                None => root = Some(done),
            }
        }
    }
}

struct Reader<'a> {
    env: &'a SchemaEnv,
    options: &'a XmlOptions,
    path: Vec<String>,
}

impl Reader<'_> {
    fn path(&self) -> String {
        self.path.join("/")
    }

    fn unexpected(&self, expected: impl Into<String>, found: impl Into<String>) -> XmlError {
        XmlError::Unexpected {
            path: self.path(),
            expected: expected.into(),
            found: found.into(),
        }
    }

    fn elements<'e>(&self, element: &'e Element) -> Result<Vec<&'e Element>, XmlError> {
        element
            .children
            .iter()
            .filter_map(|n| match n {
                Node::Element(e) => Some(Ok(e)),
                Node::Text(t) if t.trim().is_empty() => None,
                Node::Text(t) => Some(Err(
                    self.unexpected(format!("elements inside <{}>", element.name), format!("text {t:?}"))
                )),
            })
            .collect()
    }

    fn text(&self, element: &Element) -> Result<String, XmlError> {
        let mut out = String::new();
        for n in &element.children {
            match n {
                Node::Text(t) => out.push_str(t),
                Node::Element(e) => {
                    return Err(self.unexpected(
                        format!("text inside <{}>", element.name),
                        format!("element <{}>", e.name),
                    ))
                }
            }
        }
        Ok(out)
    }

    fn scalar(&self, owner: &str, field: &str, builtin: Builtin, text: String) -> Result<Value, XmlError> {
        Ok(match builtin {
            Builtin::Int => {
                let trimmed = text.trim();
                match trimmed.parse::<BigInt>() {
                    Ok(n) => Value::Int(n),
                    Err(_) => match self.options.symbols.value_of(owner, field, trimmed) {
                        Some(n) => Value::int(n),
                        None => {
                            return Err(XmlError::BadInt {
                                path: self.path(),
                                text,
                            })
                        }
                    },
                }
            }
            Builtin::String => Value::String(text),
            Builtin::Identifier => Value::Identifier(Atom::new(&text)),
        })
    }

    fn field(&mut self, owner: &str, field: &FieldDef, element: &Element) -> Result<Value, XmlError> {
        self.path.push(field.name.clone());
        let result = if field.sequence {
            if element.name != "list" {
                return Err(self.unexpected("<list>", format!("<{}>", element.name)));
            }
            let mut items = Vec::new();
            for (i, item) in self.elements(element)?.into_iter().enumerate() {
                self.path.push(format!("[{i}]"));
                items.push(self.value(owner, &field.name, &field.ty, item)?);
                self.path.pop();
            }
            Ok(Value::List(items))
        } else {
            self.value(owner, &field.name, &field.ty, element)
        };
        self.path.pop();
        result
    }

    fn value(&mut self, owner: &str, field: &str, ty: &TypeRef, element: &Element) -> Result<Value, XmlError> {
        match ty {
            TypeRef::Builtin(b) => {
                if element.name != b.name() {
                    return Err(self.unexpected(format!("<{}>", b.name()), format!("<{}>", element.name)));
                }
                let text = self.text(element)?;
                self.scalar(owner, field, *b, text)
            }
            TypeRef::Defined(name) => self.defined(name, element),
        }
    }

    fn defined(&mut self, type_name: &str, element: &Element) -> Result<Value, XmlError> {
        let env = self.env;
        let def = env
            .get(type_name)
            .ok_or_else(|| XmlError::UnknownType(type_name.to_string()))?;
        let children = self.elements(element)?;
        match &def.kind {
            TypeKind::Product { fields } => {
                if element.name != def.name {
                    return Err(self.unexpected(format!("<{}>", def.name), format!("<{}>", element.name)));
                }
                if let Some((k, _)) = element.attributes.first() {
                    return Err(self.unexpected("no XML attributes", format!("attribute `{k}`")));
                }
                if children.len() != fields.len() {
                    return Err(self.unexpected(format!("{} child elements", fields.len()), children.len().to_string()));
                }
                let values = fields
                    .iter()
                    .zip(children)
                    .map(|(f, e)| self.field(type_name, f, e))
                    .collect::<Result<_, _>>()?;
                Ok(Value::Product {
                    ty: Atom::new(type_name),
                    fields: values,
                })
            }
            TypeKind::Sum { attributes, .. } => {
                let cdef = def.constructor(&element.name).ok_or_else(|| {
                    let names: Vec<_> = def.constructors().iter().map(|c| format!("<{}>", c.name)).collect();
                    self.unexpected(names.join(" or "), format!("<{}>", element.name))
                })?;
                self.path.push(cdef.name.clone());
                for (k, _) in &element.attributes {
                    if !attributes.iter().any(|a| is_scalar(a) && a.name == *k) {
                        return Err(self.unexpected("a declared attribute", format!("attribute `{k}`")));
                    }
                }
                let wanted = attributes.iter().filter(|a| !is_scalar(a)).count() + cdef.fields.len();
                if children.len() != wanted {
                    return Err(self.unexpected(format!("{wanted} child elements"), children.len().to_string()));
                }
                let mut children = children.into_iter();
                let mut attrs = Vec::with_capacity(attributes.len());
                for a in attributes {
                    if is_scalar(a) {
                        let TypeRef::Builtin(b) = a.ty else { unreachable!() };
                        let text = element
                            .attributes
                            .iter()
                            .find(|(k, _)| *k == a.name)
                            .map(|(_, v)| v.clone())
                            .ok_or_else(|| self.unexpected(format!("attribute `{}`", a.name), "nothing"))?;
                        self.path.push(a.name.clone());
                        let v = self.scalar(type_name, &a.name, b, text);
                        self.path.pop();
                        attrs.push(v?);
                    } else {
                        let e = children.next().expect("counted");
                        attrs.push(self.field(type_name, a, e)?);
                    }
                }
                let fields = cdef
                    .fields
                    .iter()
                    .zip(children)
                    .map(|(f, e)| self.field(&cdef.name, f, e))
                    .collect::<Result<_, _>>()?;
                self.path.pop();
                Ok(Value::Sum {
                    ty: Atom::new(type_name),
                    ctor: Atom::new(&cdef.name),
                    attrs,
                    fields,
                })
            }
        }
    }

    fn instance(&mut self, type_name: &str, element: &Element) -> Result<Value, XmlError> {
        let ty = type_ref(self.env, type_name).map_err(|_| XmlError::UnknownType(type_name.to_string()))?;
        self.path = vec![type_name.to_string()];
        self.value("", "", &ty, element)
    }
}

/// Parses a document holding one instance.
pub fn read_xml(env: &SchemaEnv, type_name: &str, text: &str, options: &XmlOptions) -> Result<Value, XmlError> {
    let root = parse_document(text)?;
    Reader {
        env,
        options,
        path: Vec::new(),
    }
    .instance(type_name, &root)
}

/// Parses a document holding one or more instances. Types follow `types`,
/// with the last one repeating.
pub fn read_xml_all(env: &SchemaEnv, types: &[&str], text: &str, options: &XmlOptions) -> Result<Vec<Value>, XmlError> {
    let last = *types.last().ok_or_else(|| XmlError::UnknownType(String::new()))?;
    let root = parse_document(text)?;
    let mut reader = Reader {
        env,
        options,
        path: Vec::new(),
    };
    let wrapped = root.name == PICKLE_ROOT && env.get(types[0]).is_none_or(|d| d.is_sum());
    if !wrapped {
        return Ok(vec![reader.instance(types[0], &root)?]);
    }
    let children = reader.elements(&root)?;
    if children.is_empty() {
        return Err(PickleError::EmptyPickle.into());
    }
    children
        .into_iter()
        .enumerate()
        .map(|(i, e)| reader.instance(types.get(i).copied().unwrap_or(last), e))
        .collect()
}

/// Converts a binary pickle to XML.
pub fn pickle_to_xml(env: &SchemaEnv, types: &[&str], bytes: &[u8], options: &XmlOptions) -> Result<String, XmlError> {
    let values = super::read_sequence(env, types, bytes)?;
    let last = *types.last().expect("read_sequence checked");
    let typed: Vec<(&str, &Value)> = values
        .iter()
        .enumerate()
        .map(|(i, v)| (types.get(i).copied().unwrap_or(last), v))
        .collect();
    write_xml_all(env, &typed, options)
}

/// Converts an XML pickle to binary.
pub fn xml_to_pickle(env: &SchemaEnv, types: &[&str], text: &str, options: &XmlOptions) -> Result<Vec<u8>, XmlError> {
    let values = read_xml_all(env, types, text, options)?;
    let last = *types.last().expect("read_xml_all checked");
    let mut out = super::OutStream::new();
    for (i, v) in values.iter().enumerate() {
        super::write_value(env, types.get(i).copied().unwrap_or(last), v, &mut out)?;
    }
    Ok(out.into_bytes())
}

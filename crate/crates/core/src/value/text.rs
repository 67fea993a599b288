//! Human-readable text form of values.
//!
//! ```text
//! value ::= INT                          -- optional leading `-`
//!         | "string"                     -- \" \\ \n \t \r \u{hex} escapes
//!         | ident | `any text`           -- identifiers
//!         | "[" value* "]"               -- lists
//!         | "(" "tuple" value* ")"       -- products
//!         | "(" Ctor (":" attr value)* value* ")"   -- sums
//! ```
//!
//! Parsing is schema-directed: the expected type decides how each form is
//! read. Printing emits the canonical single-line form.

use std::fmt::Write;

use num_bigint::BigInt;

use super::{Atom, Value};
use crate::sema::{Builtin, FieldDef, SchemaEnv, TypeKind, TypeRef};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct TextError {
    pub line: u32,
    pub column: u32,
    pub message: String,
}

/// Prints `value` in canonical form. The schema supplies attribute names.
pub fn print_text(env: &SchemaEnv, value: &Value) -> String {
    let mut out = String::new();
    print_into(env, value, &mut out);
    out
}

fn print_into(env: &SchemaEnv, value: &Value, out: &mut String) {
    match value {
        Value::Int(n) => {
            let _ = write!(out, "{n}");
        }
        Value::String(s) => quote(s, '"', out),
        Value::Identifier(a) => {
            if is_bare_ident(a.as_str()) {
                out.push_str(a.as_str());
            } else {
                quote(a.as_str(), '`', out);
            }
        }
        Value::List(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                print_into(env, item, out);
            }
            out.push(']');
        }
        Value::Product { fields, .. } => {
            out.push_str("(tuple");
            for f in fields {
                out.push(' ');
                print_into(env, f, out);
            }
            out.push(')');
        }
        Value::Sum {
            ty,
            ctor,
            attrs,
            fields,
        } => {
            out.push('(');
            out.push_str(ctor.as_str());
            let decls = env.get(ty.as_str()).map(|t| t.attributes()).unwrap_or(&[]);
            for (i, a) in attrs.iter().enumerate() {
                let name = decls.get(i).map(|d| d.name.as_str()).unwrap_or("_");
                let _ = write!(out, " :{name} ");
                print_into(env, a, out);
            }
            for f in fields {
                out.push(' ');
                print_into(env, f, out);
            }
            out.push(')');
        }
    }
}

fn is_bare_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '$')
}

fn quote(s: &str, delim: char, out: &mut String) {
    out.push(delim);
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if c == delim => {
                out.push('\\');
                out.push(c);
            }
            c if c.is_control() => {
                let _ = write!(out, "\\u{{{:x}}}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push(delim);
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    Keyword(String),
    Int(BigInt),
    Str(String),
    QuotedIdent(String),
    Word(String),
    Eof,
}

#[derive(Debug, Clone)]
struct Lexed {
    tok: Tok,
    line: u32,
    column: u32,
}

fn lex(text: &str) -> Result<Vec<Lexed>, TextError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0usize, 1u32, 1u32);
    let err = |line, column, message: String| TextError { line, column, message };

    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        let advance = |n: usize, i: &mut usize, column: &mut u32| {
            *i += n;
            *column += n as u32;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => advance(1, &mut i, &mut column),
            '(' | ')' | '[' | ']' => {
                let tok = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    _ => Tok::RBracket,
                };
                out.push(Lexed {
                    tok,
                    line: l,
                    column: col,
                });
                advance(1, &mut i, &mut column);
            }
            '"' | '`' => {
                let delim = c;
                let mut s = String::new();
                advance(1, &mut i, &mut column);
                loop {
                    let Some(&ch) = chars.get(i) else {
                        return Err(err(l, col, "unterminated quoted text".into()));
                    };
                    advance(1, &mut i, &mut column);
                    if ch == delim {
                        break;
                    }
                    if ch == '\n' {
                        line += 1;
                        column = 1;
                    }
                    if ch != '\\' {
                        s.push(ch);
                        continue;
                    }
                    let Some(&esc) = chars.get(i) else {
                        return Err(err(l, col, "unterminated escape".into()));
                    };
                    advance(1, &mut i, &mut column);
                    match esc {
                        'n' => s.push('\n'),
                        't' => s.push('\t'),
                        'r' => s.push('\r'),
                        '\\' | '"' | '`' => s.push(esc),
                        'u' => {
                            if chars.get(i) != Some(&'{') {
                                return Err(err(line, column, "expected `{` after \\u".into()));
                            }
                            let close = chars[i..]
                                .iter()
                                .position(|&c| c == '}')
                                .ok_or_else(|| err(line, column, "unterminated \\u escape".into()))?;
                            let hex: String = chars[i + 1..i + close].iter().collect();
                            let ch = u32::from_str_radix(&hex, 16)
                                .ok()
                                .and_then(char::from_u32)
                                .ok_or_else(|| err(line, column, format!("bad escape \\u{{{hex}}}")))?;
                            s.push(ch);
                            advance(close + 1, &mut i, &mut column);
                        }
                        other => return Err(err(line, column - 1, format!("unknown escape `\\{other}`"))),
                    }
                }
                let tok = if delim == '"' { Tok::Str(s) } else { Tok::QuotedIdent(s) };
                out.push(Lexed {
                    tok,
                    line: l,
                    column: col,
                });
            }
            ':' => {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && (chars[end].is_ascii_alphanumeric() || chars[end] == '_') {
                    end += 1;
                }
                let name: String = chars[start..end].iter().collect();
                if name.is_empty() {
                    return Err(err(l, col, "expected an attribute name after `:`".into()));
                }
                out.push(Lexed {
                    tok: Tok::Keyword(name),
                    line: l,
                    column: col,
                });
                advance(end - i, &mut i, &mut column);
            }
            c if c == '-' || c.is_ascii_digit() => {
                let mut end = i + 1;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let digits: String = chars[i..end].iter().collect();
                let n: BigInt = digits
                    .parse()
                    .map_err(|_| err(l, col, format!("malformed integer `{digits}`")))?;
                out.push(Lexed {
                    tok: Tok::Int(n),
                    line: l,
                    column: col,
                });
                advance(end - i, &mut i, &mut column);
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = i + 1;
                while end < chars.len() && (chars[end].is_ascii_alphanumeric() || matches!(chars[end], '_' | '.' | '$'))
                {
                    end += 1;
                }
                let word: String = chars[i..end].iter().collect();
                out.push(Lexed {
                    tok: Tok::Word(word),
                    line: l,
                    column: col,
                });
                advance(end - i, &mut i, &mut column);
            }
            other => return Err(err(l, col, format!("unexpected character {other:?}"))),
        }
    }
    out.push(Lexed {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Reader<'a> {
    env: &'a SchemaEnv,
    toks: Vec<Lexed>,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn peek(&self) -> &Lexed {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Lexed {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, at: &Lexed, message: String) -> Result<T, TextError> {
        Err(TextError {
            line: at.line,
            column: at.column,
            message,
        })
    }

    fn field(&mut self, field: &FieldDef) -> Result<Value, TextError> {
        if !field.sequence {
            return self.value(&field.ty);
        }
        let open = self.next();
        if open.tok != Tok::LBracket {
            return self.fail(&open, format!("expected `[` to start a list of {}", field.ty));
        }
        let mut items = Vec::new();
        loop {
            if self.peek().tok == Tok::RBracket {
                self.next();
                return Ok(Value::List(items));
            }
            if self.peek().tok == Tok::Eof {
                let at = self.peek().clone();
                return self.fail(&at, "unterminated list".into());
            }
            items.push(self.value(&field.ty)?);
        }
    }

    fn value(&mut self, ty: &TypeRef) -> Result<Value, TextError> {
        let tok = self.next();
        match ty {
            TypeRef::Builtin(Builtin::Int) => match tok.tok {
                Tok::Int(n) => Ok(Value::Int(n)),
                _ => self.fail(&tok, "expected an integer".into()),
            },
            TypeRef::Builtin(Builtin::String) => match tok.tok {
                Tok::Str(s) => Ok(Value::String(s)),
                _ => self.fail(&tok, "expected a quoted string".into()),
            },
            TypeRef::Builtin(Builtin::Identifier) => match tok.tok {
                Tok::Word(s) | Tok::QuotedIdent(s) => Ok(Value::Identifier(Atom::new(&s))),
                _ => self.fail(&tok, "expected an identifier".into()),
            },
            TypeRef::Defined(name) => {
                if tok.tok != Tok::LParen {
                    return self.fail(&tok, format!("expected `(` to start a `{name}` value"));
                }
                let def = self.env.get(name).expect("checked schema");
                let head = self.next();
                let value = match (&def.kind, &head.tok) {
                    (TypeKind::Product { fields }, Tok::Word(w)) if w == "tuple" => {
                        let mut values = Vec::with_capacity(fields.len());
                        for f in fields {
                            values.push(self.field(f)?);
                        }
                        Value::Product {
                            ty: Atom::new(name),
                            fields: values,
                        }
                    }
                    (TypeKind::Product { .. }, _) => {
                        return self.fail(&head, format!("expected `tuple` for product `{name}`"))
                    }
                    (TypeKind::Sum { attributes, .. }, Tok::Word(ctor)) => {
                        let Some(cdef) = def.constructor(ctor) else {
                            return self.fail(&head, format!("`{ctor}` is not a constructor of `{name}`"));
                        };
                        let mut attrs = Vec::with_capacity(attributes.len());
                        for a in attributes {
                            let kw = self.next();
                            match &kw.tok {
                                Tok::Keyword(k) if *k == a.name => {}
                                _ => return self.fail(&kw, format!("expected attribute `:{}`", a.name)),
                            }
                            attrs.push(self.field(a)?);
                        }
                        let mut fields = Vec::with_capacity(cdef.fields.len());
                        for f in &cdef.fields {
                            if self.peek().tok == Tok::RParen {
                                let at = self.peek().clone();
                                return self.fail(&at, format!("`{ctor}` expects {} fields", cdef.fields.len()));
                            }
                            fields.push(self.field(f)?);
                        }
                        Value::Sum {
                            ty: Atom::new(name),
                            ctor: Atom::new(ctor),
                            attrs,
                            fields,
                        }
                    }
                    _ => return self.fail(&head, format!("expected a constructor of `{name}`")),
                };
                let close = self.next();
                if close.tok != Tok::RParen {
                    return self.fail(&close, "expected `)`".into());
                }
                Ok(value)
            }
        }
    }
}

fn type_ref(env: &SchemaEnv, type_name: &str) -> Result<TypeRef, TextError> {
    if let Some(b) = Builtin::from_name(type_name) {
        return Ok(TypeRef::Builtin(b));
    }
    env.resolve_type_name(type_name)
        .map(|t| TypeRef::Defined(t.name.clone()))
        .ok_or_else(|| TextError {
            line: 1,
            column: 1,
            message: format!("unknown type `{type_name}`"),
        })
}

/// Parses exactly one value of `type_name` from `text`.
pub fn parse_text(env: &SchemaEnv, type_name: &str, text: &str) -> Result<Value, TextError> {
    let mut values = parse_text_all(env, type_name, text)?;
    match values.len() {
        1 => Ok(values.remove(0)),
        n => Err(TextError {
            line: 1,
            column: 1,
            message: format!("expected exactly one value, found {n}"),
        }),
    }
}

/// Parses a whitespace-separated sequence of values of `type_name`.
pub fn parse_text_all(env: &SchemaEnv, type_name: &str, text: &str) -> Result<Vec<Value>, TextError> {
    let ty = type_ref(env, type_name)?;
    let mut reader = Reader {
        env,
        toks: lex(text)?,
        pos: 0,
    };
    let mut out = Vec::new();
    while reader.peek().tok != Tok::Eof {
        out.push(reader.value(&ty)?);
    }
    Ok(out)
}

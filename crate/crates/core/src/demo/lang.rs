//! Lexer and parser for the demo's source language, a tiny C subset:
//!
//! ```text
//! program := (decl | stmt)*
//! decl    := ("int" | "char") declarator ("," declarator)* ";"
//! declarator := "*"* ident
//! stmt    := "print" "(" expr ")" ";" | expr "=" expr ";" | expr ";"
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "*" unary | "-" unary | postfix
//! postfix := ident "++" | primary
//! primary := int | ident | "(" expr ")"
//! ```
//!
//! `//` starts a comment that runs to the end of the line.

use super::DemoError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    Int,
    Char,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decl {
    pub pos: Pos,
    pub base: Base,
    pub pointers: u32,
    pub name: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub pos: Pos,
    pub kind: ExprKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Int(i64),
    Var(String),
    PostInc(String),
    Deref(Box<Expr>),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Decl(Vec<Decl>),
    Print(Pos, Expr),
    Assign { pos: Pos, target: Expr, value: Expr },
    Expr(Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Punct(&'static str),
    Eof,
}

const PUNCT: [&str; 10] = ["++", "+", "-", "*", "/", "=", ";", ",", "(", ")"];

fn syntax(pos: Pos, message: impl Into<String>) -> DemoError {
    DemoError::Syntax {
        line: pos.line,
        col: pos.col,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Pos, Tok)>, DemoError> {
    let mut toks = Vec::new();
    for (n, line) in src.lines().enumerate() {
        let line = line.split_once("//").map_or(line, |(code, _)| code);
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let pos = Pos {
                line: n as u32 + 1,
                col: i as u32 + 1,
            };
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let v = text
                    .parse::<i32>()
                    .map_err(|_| syntax(pos, format!("integer `{text}` does not fit in an int")))?;
                toks.push((pos, Tok::Int(v.into())));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((pos, Tok::Ident(chars[start..i].iter().collect())));
            } else {
                let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
                let p = PUNCT
                    .iter()
                    .find(|p| rest.starts_with(**p))
                    .ok_or_else(|| syntax(pos, format!("unexpected character `{c}`")))?;
                toks.push((pos, Tok::Punct(p)));
                i += p.len();
            }
        }
    }
    let end = Pos {
        line: src.lines().count().max(1) as u32,
        col: src.lines().last().map_or(0, |l| l.chars().count()) as u32 + 1,
    };
    toks.push((end, Tok::Eof));
    Ok(toks)
}

const KEYWORDS: [&str; 3] = ["int", "char", "print"];

struct Parser {
    toks: Vec<(Pos, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (Pos, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn is(&self, p: &str) -> bool {
        matches!(self.peek(), Tok::Punct(q) if *q == p)
    }

    fn is_keyword(&self, k: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == k)
    }

    fn describe(&self) -> String {
        match self.peek() {
            Tok::Int(v) => format!("`{v}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Punct(p) => format!("`{p}`"),
            Tok::Eof => "end of input".into(),
        }
    }

    fn expect(&mut self, p: &str) -> Result<Pos, DemoError> {
        if self.is(p) {
            Ok(self.bump().0)
        } else {
            Err(syntax(self.pos(), format!("expected `{p}`, found {}", self.describe())))
        }
    }

    fn ident(&mut self) -> Result<(Pos, String), DemoError> {
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                let pos = self.bump().0;
                Ok((pos, s))
            }
            _ => Err(syntax(
                self.pos(),
                format!("expected a name, found {}", self.describe()),
            )),
        }
    }

    fn stmt(&mut self) -> Result<Stmt, DemoError> {
        let pos = self.pos();
        let base = if self.is_keyword("int") {
            Some(Base::Int)
        } else if self.is_keyword("char") {
            Some(Base::Char)
        } else {
            None
        };
        if let Some(base) = base {
            self.bump();
            let mut decls = Vec::new();
            loop {
                let mut pointers = 0;
                while self.is("*") {
                    self.bump();
                    pointers += 1;
                }
                let (pos, name) = self.ident()?;
                decls.push(Decl {
                    pos,
                    base,
                    pointers,
                    name,
                });
                if !self.is(",") {
                    break;
                }
                self.bump();
            }
            self.expect(";")?;
            return Ok(Stmt::Decl(decls));
        }
        if self.is_keyword("print") {
            self.bump();
            self.expect("(")?;
            let e = self.expr()?;
            self.expect(")")?;
            self.expect(";")?;
            return Ok(Stmt::Print(pos, e));
        }
        let target = self.expr()?;
        if self.is("=") {
            let pos = self.bump().0;
            let value = self.expr()?;
            self.expect(";")?;
            return Ok(Stmt::Assign { pos, target, value });
        }
        self.expect(";")?;
        Ok(Stmt::Expr(target))
    }

    fn expr(&mut self) -> Result<Expr, DemoError> {
        let mut left = self.term()?;
        while self.is("+") || self.is("-") {
            let (pos, tok) = self.bump();
            let op = if tok == Tok::Punct("+") { BinOp::Add } else { BinOp::Sub };
            let right = self.term()?;
            left = Expr {
                pos,
                kind: ExprKind::Binary(op, Box::new(left), Box::new(right)),
            };
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expr, DemoError> {
        let mut left = self.unary()?;
        while self.is("*") || self.is("/") {
            let (pos, tok) = self.bump();
            let op = if tok == Tok::Punct("*") { BinOp::Mul } else { BinOp::Div };
            let right = self.unary()?;
            left = Expr {
                pos,
                kind: ExprKind::Binary(op, Box::new(left), Box::new(right)),
            };
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr, DemoError> {
        let pos = self.pos();
        if self.is("*") {
            self.bump();
            let e = self.unary()?;
            return Ok(Expr {
                pos,
                kind: ExprKind::Deref(Box::new(e)),
            });
        }
        if self.is("-") {
            self.bump();
            let e = self.unary()?;
            return Ok(Expr {
                pos,
                kind: ExprKind::Neg(Box::new(e)),
            });
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, DemoError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr {
                    pos,
                    kind: ExprKind::Int(v),
                })
            }
            Tok::Punct("(") => {
                self.bump();
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            _ => {
                let (pos, name) = self.ident()?;
                if self.is("++") {
                    self.bump();
                    return Ok(Expr {
                        pos,
                        kind: ExprKind::PostInc(name),
                    });
                }
                Ok(Expr {
                    pos,
                    kind: ExprKind::Var(name),
                })
            }
        }
    }
}

pub fn parse(src: &str) -> Result<Vec<Stmt>, DemoError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let mut stmts = Vec::new();
    while *p.peek() != Tok::Eof {
        stmts.push(p.stmt()?);
    }
    Ok(stmts)
}

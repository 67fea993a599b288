//! Concrete syntax of ASDL specifications: tokens, the unresolved AST and
//! its canonical printer.
//!
//! ```text
//! spec   ::= "module" NAME "{" def* "}"
//! def    ::= lname "=" ( product | sum )
//! product::= "(" fields ")"
//! sum    ::= ctor ( "|" ctor )* [ "attributes" "(" fields ")" ]
//! ctor   ::= UNAME [ "(" fields ")" ]
//! fields ::= field ( "," field )*
//! field  ::= lname [ "*" ] [ lname ]
//! ```
//!
//! `--` starts a comment that runs to the end of the line.

mod ast;
mod lexer;
mod parser;
mod pretty;

pub use ast::{Qualifier, RawConstructor, RawField, RawSpec, RawTypeBody, RawTypeDef};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse_spec;
pub use pretty::pretty_print;

use std::fmt;

/// A position in the source text. Line and column are 1-based; the column
/// counts characters, not bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SourceSpan {
    pub line: u32,
    pub column: u32,
    pub offset: usize,
}

impl SourceSpan {
    pub fn new(line: u32, column: u32, offset: usize) -> Self {
        debug_assert!(line >= 1 && column >= 1);
        SourceSpan { line, column, offset }
    }

    pub fn start() -> Self {
        SourceSpan::new(1, 1, 0)
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("illegal character {ch:?}")]
    IllegalCharacter { ch: char, span: SourceSpan },

    #[error("expected {}, found {found}", expected.join(" or "))]
    Unexpected {
        expected: Vec<String>,
        found: String,
        span: SourceSpan,
    },

    #[error("the optional qualifier `?` is not supported; use `*` for lists")]
    OptionalQualifier { span: SourceSpan },

    #[error("only one module per file is allowed")]
    MultipleModules { span: SourceSpan },

    #[error("{what} `{name}` must start with {case} letter")]
    BadNameCase {
        what: &'static str,
        name: String,
        case: &'static str,
        span: SourceSpan,
    },
}

impl SyntaxError {
    pub fn span(&self) -> SourceSpan {
        match self {
            SyntaxError::IllegalCharacter { span, .. }
            | SyntaxError::Unexpected { span, .. }
            | SyntaxError::OptionalQualifier { span }
            | SyntaxError::MultipleModules { span }
            | SyntaxError::BadNameCase { span, .. } => *span,
        }
    }
}

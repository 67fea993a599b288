use super::ast::{Qualifier, RawConstructor, RawField, RawSpec, RawTypeBody, RawTypeDef};
use super::lexer::{tokenize, Token, TokenKind};
use super::{SourceSpan, SyntaxError};

/// Parses one `module` from `text`. The first error aborts the parse.
pub fn parse_spec(text: &str) -> Result<RawSpec, SyntaxError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    parser.spec()
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let tok = self.tokens[self.pos].clone();
        if tok.kind != TokenKind::Eof {
            self.pos += 1;
        }
        tok
    }

    fn unexpected(&self, expected: &[&str]) -> SyntaxError {
        let tok = self.peek();
        SyntaxError::Unexpected {
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.kind.describe(),
            span: tok.span,
        }
    }

    fn expect(&mut self, kind: TokenKind, label: &str) -> Result<Token, SyntaxError> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(self.unexpected(&[label]))
        }
    }

    fn spec(&mut self) -> Result<RawSpec, SyntaxError> {
        let start = self.expect(TokenKind::Module, "`module`")?;
        let module = match self.bump() {
            Token {
                kind: TokenKind::Id(name) | TokenKind::ConId(name),
                ..
            } => name,
            _ => {
                self.pos -= 1;
                return Err(self.unexpected(&["module name"]));
            }
        };
        self.expect(TokenKind::LBrace, "`{`")?;

        let mut definitions = Vec::new();
        loop {
            match &self.peek().kind {
                TokenKind::RBrace => {
                    self.bump();
                    break;
                }
                TokenKind::Id(_) => definitions.push(self.definition()?),
                TokenKind::ConId(name) => {
                    return Err(SyntaxError::BadNameCase {
                        what: "type name",
                        name: name.clone(),
                        case: "a lowercase",
                        span: self.peek().span,
                    })
                }
                _ => return Err(self.unexpected(&["type definition", "`}`"])),
            }
        }

        match self.peek().kind {
            TokenKind::Eof => Ok(RawSpec {
                module,
                definitions,
                span: start.span,
            }),
            TokenKind::Module => Err(SyntaxError::MultipleModules { span: self.peek().span }),
            _ => Err(self.unexpected(&["end of input"])),
        }
    }

    fn lower_name(&mut self, what: &'static str) -> Result<(String, SourceSpan), SyntaxError> {
        let tok = self.peek().clone();
        match tok.kind {
            TokenKind::Id(name) if name.starts_with(|c: char| c.is_ascii_lowercase()) => {
                self.bump();
                Ok((name, tok.span))
            }
            TokenKind::Id(name) | TokenKind::ConId(name) => Err(SyntaxError::BadNameCase {
                what,
                name,
                case: "a lowercase",
                span: tok.span,
            }),
            _ => Err(self.unexpected(&[what])),
        }
    }

    fn definition(&mut self) -> Result<RawTypeDef, SyntaxError> {
        let (name, span) = self.lower_name("type name")?;
        self.expect(TokenKind::Equals, "`=`")?;
        let body = match &self.peek().kind {
            TokenKind::LParen => {
                let fields = self.field_list()?;
                let attributes = self.attributes()?;
                RawTypeBody::Product { fields, attributes }
            }
            TokenKind::ConId(_) => {
                let mut constructors = vec![self.constructor()?];
                while self.peek().kind == TokenKind::Pipe {
                    self.bump();
                    constructors.push(self.constructor()?);
                }
                let attributes = self.attributes()?;
                RawTypeBody::Sum {
                    constructors,
                    attributes,
                }
            }
            TokenKind::Id(ctor) => {
                return Err(SyntaxError::BadNameCase {
                    what: "constructor name",
                    name: ctor.clone(),
                    case: "an uppercase",
                    span: self.peek().span,
                })
            }
            _ => return Err(self.unexpected(&["constructor", "`(`"])),
        };
        Ok(RawTypeDef { name, body, span })
    }

    fn attributes(&mut self) -> Result<Vec<RawField>, SyntaxError> {
        if self.peek().kind == TokenKind::Attributes {
            self.bump();
            self.field_list()
        } else {
            Ok(Vec::new())
        }
    }

    fn constructor(&mut self) -> Result<RawConstructor, SyntaxError> {
        let tok = self.peek().clone();
        let name = match tok.kind {
            TokenKind::ConId(name) => name,
            TokenKind::Id(name) => {
                return Err(SyntaxError::BadNameCase {
                    what: "constructor name",
                    name,
                    case: "an uppercase",
                    span: tok.span,
                })
            }
            _ => return Err(self.unexpected(&["constructor"])),
        };
        self.bump();
        let fields = if self.peek().kind == TokenKind::LParen {
            self.field_list()?
        } else {
            Vec::new()
        };
        Ok(RawConstructor {
            name,
            fields,
            span: tok.span,
        })
    }

    fn field_list(&mut self) -> Result<Vec<RawField>, SyntaxError> {
        self.expect(TokenKind::LParen, "`(`")?;
        let mut fields = vec![self.field()?];
        loop {
            match self.peek().kind {
                TokenKind::Comma => {
                    self.bump();
                    fields.push(self.field()?);
                }
                TokenKind::RParen => {
                    self.bump();
                    return Ok(fields);
                }
                _ => return Err(self.unexpected(&["`,`", "`)`"])),
            }
        }
    }

    fn field(&mut self) -> Result<RawField, SyntaxError> {
        let (type_name, span) = self.lower_name("type name")?;
        let qualifier = match self.peek().kind {
            TokenKind::Star => {
                self.bump();
                Qualifier::Sequence
            }
            TokenKind::Question => return Err(SyntaxError::OptionalQualifier { span: self.peek().span }),
            _ => Qualifier::Single,
        };
        let name = match self.peek().kind {
            TokenKind::Id(_) | TokenKind::ConId(_) => Some(self.lower_name("field name")?.0),
            _ => None,
        };
        Ok(RawField {
            type_name,
            qualifier,
            name,
            span,
        })
    }
}

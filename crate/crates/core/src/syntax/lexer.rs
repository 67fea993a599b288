use super::{SourceSpan, SyntaxError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    /// Identifier starting with a lowercase letter (or `_`).
    Id(String),
    /// Identifier starting with an uppercase letter.
    ConId(String),
    Module,
    Attributes,
    LBrace,
    RBrace,
    Equals,
    Pipe,
    LParen,
    RParen,
    Comma,
    Star,
    /// Lexed only so the parser can reject it with a dedicated message.
    Question,
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Id(s) => format!("identifier `{s}`"),
            TokenKind::ConId(s) => format!("constructor name `{s}`"),
            TokenKind::Module => "`module`".into(),
            TokenKind::Attributes => "`attributes`".into(),
            TokenKind::LBrace => "`{`".into(),
            TokenKind::RBrace => "`}`".into(),
            TokenKind::Equals => "`=`".into(),
            TokenKind::Pipe => "`|`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::Question => "`?`".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: SourceSpan,
}

/// Splits `text` into tokens. The returned list always ends with a single
/// [`TokenKind::Eof`] token.
pub fn tokenize(text: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    let mut line = 1u32;
    let mut column = 1u32;

    while let Some(&(offset, ch)) = chars.peek() {
        let span = SourceSpan::new(line, column, offset);
        let single = match ch {
            '{' => Some(TokenKind::LBrace),
            '}' => Some(TokenKind::RBrace),
            '=' => Some(TokenKind::Equals),
            '|' => Some(TokenKind::Pipe),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            ',' => Some(TokenKind::Comma),
            '*' => Some(TokenKind::Star),
            '?' => Some(TokenKind::Question),
            _ => None,
        };
        if let Some(kind) = single {
            chars.next();
            column += 1;
            tokens.push(Token { kind, span });
            continue;
        }
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if ch == '-' {
            let mut ahead = chars.clone();
            ahead.next();
            if matches!(ahead.peek(), Some((_, '-'))) {
                while let Some(&(_, c)) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                }
                continue;
            }
            return Err(SyntaxError::IllegalCharacter { ch, span });
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let kind = match word.as_str() {
                "module" => TokenKind::Module,
                "attributes" => TokenKind::Attributes,
                _ if word.starts_with(|c: char| c.is_ascii_uppercase()) => TokenKind::ConId(word),
                _ => TokenKind::Id(word),
            };
            tokens.push(Token { kind, span });
            continue;
        }
        return Err(SyntaxError::IllegalCharacter { ch, span });
    }

    tokens.push(Token {
        kind: TokenKind::Eof,
        span: SourceSpan::new(line, column, text.len()),
    });
    Ok(tokens)
}

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Ident(String),
    Str(String),
    Int(u64),
    Comma,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) => write!(f, "`{s}`"),
            TokenKind::Str(s) => write!(f, "\"{s}\""),
            TokenKind::Int(n) => write!(f, "{n}"),
            TokenKind::Comma => write!(f, "`,`"),
            TokenKind::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub column: usize,
}

/// Hand-rolled lexer. Newlines are ordinary whitespace; `#` comments run to
/// end of line; strings use double quotes with `\"` and `\\` escapes.
pub(crate) struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LexError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl<'a> Lexer<'a> {
    pub fn new(input: &'a str) -> Self {
        Lexer {
            chars: input.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let ch = self.chars.next()?;
        if ch == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(ch)
    }

    fn skip_trivia(&mut self) {
        while let Some(&ch) = self.chars.peek() {
            if ch == '#' {
                while let Some(&c) = self.chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else if ch.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    pub fn next_token(&mut self) -> Result<Token, LexError> {
        self.skip_trivia();
        let line = self.line;
        let column = self.column;
        let Some(&ch) = self.chars.peek() else {
            return Ok(Token { kind: TokenKind::Eof, line, column });
        };

        if ch == ',' {
            self.bump();
            return Ok(Token { kind: TokenKind::Comma, line, column });
        }

        if ch == '"' {
            self.bump();
            let mut value = String::new();
            loop {
                match self.bump() {
                    Some('"') => break,
                    Some('\\') => match self.bump() {
                        Some('"') => value.push('"'),
                        Some('\\') => value.push('\\'),
                        Some(other) => {
                            return Err(LexError {
                                line: self.line,
                                column: self.column,
                                message: format!("unknown escape `\\{other}` in string"),
                            })
                        }
                        None => {
                            return Err(LexError {
                                line: self.line,
                                column: self.column,
                                message: "unterminated string".to_string(),
                            })
                        }
                    },
                    Some('\n') | None => {
                        return Err(LexError {
                            line,
                            column,
                            message: "unterminated string".to_string(),
                        })
                    }
                    Some(other) => value.push(other),
                }
            }
            return Ok(Token { kind: TokenKind::Str(value), line, column });
        }

        if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = self.chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    self.bump();
                } else {
                    break;
                }
            }
            let value = digits.parse().map_err(|_| LexError {
                line,
                column,
                message: format!("integer `{digits}` out of range"),
            })?;
            return Ok(Token { kind: TokenKind::Int(value), line, column });
        }

        if ch.is_alphabetic() {
            let mut ident = String::new();
            while let Some(&c) = self.chars.peek() {
                if c.is_alphanumeric() || c == '-' || c == '_' {
                    ident.push(c);
                    self.bump();
                } else {
                    break;
                }
            }
            return Ok(Token { kind: TokenKind::Ident(ident), line, column });
        }

        Err(LexError {
            line,
            column,
            message: format!("unexpected character `{ch}`"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(input: &str) -> Vec<TokenKind> {
        let mut lexer = Lexer::new(input);
        let mut out = Vec::new();
        loop {
            let token = lexer.next_token().unwrap();
            let done = token.kind == TokenKind::Eof;
            out.push(token.kind);
            if done {
                return out;
            }
        }
    }

    #[test]
    fn basic_tokens() {
        assert_eq!(
            kinds("platont 1\nclass a-b # note\n\"x, y\","),
            vec![
                TokenKind::Ident("platont".into()),
                TokenKind::Int(1),
                TokenKind::Ident("class".into()),
                TokenKind::Ident("a-b".into()),
                TokenKind::Str("x, y".into()),
                TokenKind::Comma,
                TokenKind::Eof,
            ]
        );
    }

    #[test]
    fn string_escapes() {
        assert_eq!(kinds(r#""a\"b\\c""#), vec![TokenKind::Str("a\"b\\c".into()), TokenKind::Eof]);
    }

    #[test]
    fn positions_track_lines() {
        let mut lexer = Lexer::new("a\n  b");
        let a = lexer.next_token().unwrap();
        assert_eq!((a.line, a.column), (1, 1));
        let b = lexer.next_token().unwrap();
        assert_eq!((b.line, b.column), (2, 3));
    }

    #[test]
    fn unterminated_string_errors() {
        let mut lexer = Lexer::new("\"abc");
        assert!(lexer.next_token().is_err());
    }
}

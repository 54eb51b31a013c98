use thiserror::Error;

use crate::ontology::{
    Individual, Ontology, OntologyClass, RelationFamily, RelationKind, ValidationReport,
    PLON_VERSION,
};

use super::lexer::{LexError, Lexer, Token, TokenKind};

/// A positioned syntax error with what the parser expected at that point.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: expected {expected}, found {found}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

/// Errors out of [`parse_plon`]. Syntax problems carry a position; semantic
/// problems (dangling references, duplicate ids) carry the full validation
/// report. I/O never happens here — callers read the file.
#[derive(Debug, Error)]
pub enum PlonError {
    #[error("{0}")]
    Syntax(#[from] ParseError),
    #[error("invalid ontology:\n{0}")]
    Semantic(ValidationReport),
}

impl From<LexError> for ParseError {
    fn from(e: LexError) -> Self {
        ParseError {
            line: e.line,
            column: e.column,
            expected: "a token".to_string(),
            found: e.message,
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    lookahead: Option<Token>,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            lexer: Lexer::new(input),
            lookahead: None,
        }
    }

    fn peek(&mut self) -> Result<&Token, ParseError> {
        if self.lookahead.is_none() {
            self.lookahead = Some(self.lexer.next_token()?);
        }
        Ok(self.lookahead.as_ref().unwrap())
    }

    fn advance(&mut self) -> Result<Token, ParseError> {
        self.peek()?;
        Ok(self.lookahead.take().unwrap())
    }

    fn error(token: &Token, expected: &str) -> ParseError {
        ParseError {
            line: token.line,
            column: token.column,
            expected: expected.to_string(),
            found: token.kind.to_string(),
        }
    }

    fn expect_keyword(&mut self, keyword: &str) -> Result<(), ParseError> {
        let token = self.advance()?;
        match &token.kind {
            TokenKind::Ident(word) if word == keyword => Ok(()),
            _ => Err(Self::error(&token, &format!("`{keyword}`"))),
        }
    }

    /// Accepts the next token as an identifier. Keywords stay reserved so a
    /// serialized document always parses back unambiguously.
    fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        let token = self.advance()?;
        match &token.kind {
            TokenKind::Ident(word) => {
                if crate::ontology::RESERVED_WORDS.contains(&word.as_str()) {
                    Err(Self::error(&token, &format!("{what} (`{word}` is reserved)")))
                } else {
                    Ok(word.clone())
                }
            }
            _ => Err(Self::error(&token, what)),
        }
    }

    fn eat_comma(&mut self) -> Result<bool, ParseError> {
        if self.peek()?.kind == TokenKind::Comma {
            self.advance()?;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    fn at_keyword(&mut self, keyword: &str) -> Result<bool, ParseError> {
        Ok(matches!(&self.peek()?.kind, TokenKind::Ident(word) if word == keyword))
    }

    fn parse_document(&mut self) -> Result<Ontology, ParseError> {
        self.expect_keyword("platont")?;
        let version_token = self.advance()?;
        let version = match version_token.kind {
            TokenKind::Int(v) => v,
            _ => return Err(Self::error(&version_token, "format version integer")),
        };
        if version.to_string() != PLON_VERSION {
            return Err(ParseError {
                line: version_token.line,
                column: version_token.column,
                expected: format!("supported version {PLON_VERSION}"),
                found: version.to_string(),
            });
        }

        let mut ontology = Ontology::new("");
        loop {
            let token = self.peek()?;
            match &token.kind {
                TokenKind::Eof => break,
                TokenKind::Ident(word) => match word.as_str() {
                    "class" => {
                        let class = self.parse_class()?;
                        ontology.classes.push(class);
                    }
                    "relation" => {
                        let kind = self.parse_relation()?;
                        ontology.relation_kinds.push(kind);
                    }
                    "individual" => {
                        let individual = self.parse_individual()?;
                        ontology.individuals.push(individual);
                    }
                    _ => {
                        let token = token.clone();
                        return Err(Self::error(
                            &token,
                            "`class`, `relation`, or `individual`",
                        ));
                    }
                },
                _ => {
                    let token = token.clone();
                    return Err(Self::error(&token, "`class`, `relation`, or `individual`"));
                }
            }
        }
        Ok(ontology)
    }

    fn parse_class(&mut self) -> Result<OntologyClass, ParseError> {
        self.expect_keyword("class")?;
        let id = self.expect_ident("class identifier")?;
        let mut class = OntologyClass::new(id);
        if self.at_keyword("extends")? {
            self.advance()?;
            class.parents.push(self.expect_ident("parent class identifier")?);
            while self.eat_comma()? {
                class.parents.push(self.expect_ident("parent class identifier")?);
            }
        }
        Ok(class)
    }

    fn parse_relation(&mut self) -> Result<RelationKind, ParseError> {
        self.expect_keyword("relation")?;
        let id = self.expect_ident("relation identifier")?;
        self.expect_keyword("family")?;
        let family_token = self.advance()?;
        let family = match &family_token.kind {
            TokenKind::Ident(word) => RelationFamily::parse(word)
                .ok_or_else(|| Self::error(&family_token, "`control`, `sequential`, or `implementation`"))?,
            _ => {
                return Err(Self::error(
                    &family_token,
                    "`control`, `sequential`, or `implementation`",
                ))
            }
        };
        self.expect_keyword("subkind")?;
        let subkind = self.expect_ident("subkind identifier")?;
        let mut kind = RelationKind::new(id, family, subkind);
        if self.at_keyword("undirected")? {
            self.advance()?;
            kind.directed = false;
        }
        Ok(kind)
    }

    fn parse_individual(&mut self) -> Result<Individual, ParseError> {
        self.expect_keyword("individual")?;
        let id = self.expect_ident("individual identifier")?;
        self.expect_keyword("of")?;
        let class_id = self.expect_ident("class identifier")?;
        let mut individual = Individual::new(id, class_id);
        if self.at_keyword("alias")? {
            self.advance()?;
            individual.aliases.push(self.expect_string()?);
            while self.eat_comma()? {
                individual.aliases.push(self.expect_string()?);
            }
        }
        Ok(individual)
    }

    fn expect_string(&mut self) -> Result<String, ParseError> {
        let token = self.advance()?;
        match token.kind {
            TokenKind::Str(value) => Ok(value),
            _ => Err(Self::error(&token, "quoted alias string")),
        }
    }
}

/// Parses a PLON document into a validated ontology.
///
/// A UTF-8 byte-order mark is rejected; LF and CRLF both work. Syntax
/// errors carry line and column; semantic errors carry the validation
/// report of the parsed-but-broken ontology.
pub fn parse_plon(text: &str) -> Result<Ontology, PlonError> {
    if text.starts_with('\u{feff}') {
        return Err(PlonError::Syntax(ParseError {
            line: 1,
            column: 1,
            expected: "`platont` header".to_string(),
            found: "byte-order mark".to_string(),
        }));
    }
    let ontology = Parser::new(text).parse_document()?;
    let report = crate::ontology::validate_ontology(&ontology);
    if report.is_valid() {
        Ok(ontology)
    } else {
        Err(PlonError::Semantic(report))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only_is_empty_ontology() {
        let o = parse_plon("platont 1").unwrap();
        assert!(o.is_empty());
        assert_eq!(o.version, "1");
    }

    #[test]
    fn crlf_accepted() {
        let o = parse_plon("platont 1\r\nclass a\r\nclass b extends a\r\n").unwrap();
        assert_eq!(o.classes.len(), 2);
    }

    #[test]
    fn bom_rejected() {
        let err = parse_plon("\u{feff}platont 1").unwrap_err();
        assert!(matches!(err, PlonError::Syntax(e) if e.line == 1 && e.column == 1));
    }

    #[test]
    fn unknown_version_rejected() {
        let err = parse_plon("platont 2").unwrap_err();
        match err {
            PlonError::Syntax(e) => {
                assert_eq!((e.line, e.column), (1, 9));
                assert!(e.expected.contains("version 1"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dangling_reference_is_semantic() {
        let text = "platont 1\nclass system-software\nclass operating-system extends system-software\nindividual XEN of virtual-machine-monitor";
        let err = parse_plon(text).unwrap_err();
        match err {
            PlonError::Semantic(report) => {
                assert!(report.violations.iter().any(|v| v
                    .to_string()
                    .contains("virtual-machine-monitor")));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_position_and_expectation() {
        let err = parse_plon("platont 1\nclass 123").unwrap_err();
        match err {
            PlonError::Syntax(e) => {
                assert_eq!((e.line, e.column), (2, 7));
                assert!(e.expected.contains("class identifier"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reserved_word_not_an_ident() {
        let err = parse_plon("platont 1\nclass extends").unwrap_err();
        assert!(matches!(err, PlonError::Syntax(_)));
    }

    #[test]
    fn full_statement_mix() {
        let text = r#"
platont 1
# the smallest useful ontology
class system-software
class virtual-machine-monitor extends system-software
relation interpreting family sequential subkind interpreting
individual xen of virtual-machine-monitor alias "XEN", "Xen hypervisor"
"#;
        let o = parse_plon(text.trim_start()).unwrap();
        assert_eq!(o.classes.len(), 2);
        assert_eq!(o.relation_kinds.len(), 1);
        assert_eq!(o.individuals[0].aliases, vec!["XEN", "Xen hypervisor"]);
    }
}

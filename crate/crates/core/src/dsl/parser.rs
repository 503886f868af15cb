//! Recursive-descent parser producing a position-annotated syntax tree.
//!
//! ```text
//! file     := stmt*
//! stmt     := "system" IDENT
//!           | ("input" | "output") IDENT STRING "range" NUMBER NUMBER "{" set* "}"
//!           | "rule" IDENT ":" "if" IDENT "is" IDENT "then" IDENT "is" IDENT
//! set      := "set" IDENT ("tri" | "trap") "(" NUMBER ("," NUMBER)* ")"
//! ```
//!
//! Keywords are case-insensitive. After a syntax error the parser skips to
//! the next statement keyword (or the next `set` / `}` inside a block).

use super::diagnostic::{Code, Diagnostic, Pos};
use super::lexer::{Token, TokenKind};
use crate::engine::Role;

#[derive(Debug, Clone, PartialEq)]
pub struct Spanned<T> {
    pub value: T,
    pub pos: Pos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    Tri,
    Trap,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SetDecl {
    pub name: Spanned<String>,
    pub shape: Spanned<ShapeKind>,
    pub params: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VarDecl {
    pub role: Role,
    pub name: Spanned<String>,
    pub unit: Spanned<String>,
    pub range: Spanned<(f64, f64)>,
    pub sets: Vec<SetDecl>,
}

/// A rule as written: one antecedent clause, one consequent clause.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleAst {
    pub id: Spanned<String>,
    pub antecedent: (Spanned<String>, Spanned<String>),
    pub consequent: (Spanned<String>, Spanned<String>),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct FileAst {
    pub system: Option<Spanned<String>>,
    pub variables: Vec<VarDecl>,
    pub rules: Vec<RuleAst>,
}

const STATEMENT_KEYWORDS: [&str; 4] = ["system", "input", "output", "rule"];

struct Parser<'t> {
    tokens: &'t [Token],
    idx: usize,
    diags: Vec<Diagnostic>,
    saw_system: bool,
}

type PResult<T> = Result<T, ()>;

impl<'t> Parser<'t> {
    fn peek(&self) -> &'t Token {
        &self.tokens[self.idx]
    }

    fn bump(&mut self) -> &'t Token {
        let t = &self.tokens[self.idx];
        if self.idx + 1 < self.tokens.len() {
            self.idx += 1;
        }
        t
    }

    fn is_keyword(tok: &Token, kw: &str) -> bool {
        matches!(&tok.kind, TokenKind::Ident(s) if s.eq_ignore_ascii_case(kw))
    }

    fn at_keyword(&self, kw: &str) -> bool {
        Self::is_keyword(self.peek(), kw)
    }

    fn at_statement_start(&self) -> bool {
        STATEMENT_KEYWORDS.iter().any(|kw| self.at_keyword(kw))
    }

    fn error_here(&mut self, expected: &str) {
        let tok = self.peek();
        let (code, found) = match tok.kind {
            TokenKind::Eof => (Code::UnexpectedEof, "end of input".to_string()),
            ref k => (Code::UnexpectedToken, k.describe()),
        };
        self.diags.push(Diagnostic::error(
            tok.pos,
            code,
            format!("expected {expected}, found {found}"),
        ));
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<Pos> {
        if self.at_keyword(kw) {
            Ok(self.bump().pos)
        } else {
            self.error_here(&format!("`{kw}`"));
            Err(())
        }
    }

    fn expect_punct(&mut self, kind: TokenKind) -> PResult<Pos> {
        if self.peek().kind == kind {
            Ok(self.bump().pos)
        } else {
            self.error_here(&kind.describe());
            Err(())
        }
    }

    fn expect_ident(&mut self, what: &str) -> PResult<Spanned<String>> {
        let tok = self.peek();
        match &tok.kind {
            TokenKind::Ident(s) if !crate::engine::KEYWORDS.contains(&s.to_ascii_lowercase().as_str()) => {
                self.bump();
                Ok(Spanned {
                    value: s.clone(),
                    pos: tok.pos,
                })
            }
            _ => {
                self.error_here(what);
                Err(())
            }
        }
    }

    fn expect_number(&mut self) -> PResult<f64> {
        match self.peek().kind {
            TokenKind::Number(n) => {
                self.bump();
                Ok(n)
            }
            _ => {
                self.error_here("a number");
                Err(())
            }
        }
    }

    fn expect_string(&mut self) -> PResult<Spanned<String>> {
        let tok = self.peek();
        match &tok.kind {
            TokenKind::Str(s) => {
                self.bump();
                Ok(Spanned {
                    value: s.clone(),
                    pos: tok.pos,
                })
            }
            _ => {
                self.error_here("a quoted unit label");
                Err(())
            }
        }
    }

    fn recover_to_statement(&mut self) {
        while self.peek().kind != TokenKind::Eof && !self.at_statement_start() {
            self.bump();
        }
    }

    fn parse_file(&mut self) -> FileAst {
        let mut file = FileAst::default();
        loop {
            let tok = self.peek();
            if tok.kind == TokenKind::Eof {
                break;
            }
            let result = if self.at_keyword("system") {
                self.parse_system(&mut file)
            } else if self.at_keyword("input") || self.at_keyword("output") {
                self.parse_variable().map(|v| file.variables.push(v))
            } else if self.at_keyword("rule") {
                self.parse_rule().map(|r| file.rules.push(r))
            } else {
                self.error_here("`system`, `input`, `output` or `rule`");
                self.bump();
                Err(())
            };
            if result.is_err() {
                self.recover_to_statement();
            }
        }
        file
    }

    fn parse_system(&mut self, file: &mut FileAst) -> PResult<()> {
        let kw = self.bump().pos;
        self.saw_system = true;
        let name = self.expect_ident("a system name")?;
        if let Some(prev) = &file.system {
            self.diags.push(Diagnostic::error(
                kw,
                Code::DuplicateSystem,
                format!(
                    "system is already declared as `{}` at line {}",
                    prev.value, prev.pos.line
                ),
            ));
        } else {
            file.system = Some(name);
        }
        Ok(())
    }

    fn parse_variable(&mut self) -> PResult<VarDecl> {
        let role = if self.at_keyword("input") {
            Role::Input
        } else {
            Role::Output
        };
        self.bump();
        let name = self.expect_ident("a variable name")?;
        let unit = self.expect_string()?;
        let range_pos = self.expect_keyword("range")?;
        let lo = self.expect_number()?;
        let hi = self.expect_number()?;
        self.expect_punct(TokenKind::LBrace)?;
        let mut sets = Vec::new();
        loop {
            if self.peek().kind == TokenKind::RBrace {
                self.bump();
                break;
            }
            if self.at_keyword("set") {
                match self.parse_set() {
                    Ok(s) => sets.push(s),
                    Err(()) => self.recover_in_block(),
                }
                continue;
            }
            // Missing `}` or stray tokens; leave statement keywords to the caller.
            self.error_here("`set` or `}`");
            if self.peek().kind == TokenKind::Eof || self.at_statement_start() {
                break;
            }
            self.bump();
            self.recover_in_block();
        }
        Ok(VarDecl {
            role,
            name,
            unit,
            range: Spanned {
                value: (lo, hi),
                pos: range_pos,
            },
            sets,
        })
    }

    fn recover_in_block(&mut self) {
        while !matches!(self.peek().kind, TokenKind::Eof | TokenKind::RBrace)
            && !self.at_keyword("set")
            && !self.at_statement_start()
        {
            self.bump();
        }
    }

    fn parse_set(&mut self) -> PResult<SetDecl> {
        self.bump();
        let name = self.expect_ident("a set name")?;
        let shape_tok = self.peek();
        let shape = if Self::is_keyword(shape_tok, "tri") {
            ShapeKind::Tri
        } else if Self::is_keyword(shape_tok, "trap") {
            ShapeKind::Trap
        } else {
            self.error_here("`tri` or `trap`");
            return Err(());
        };
        self.bump();
        self.expect_punct(TokenKind::LParen)?;
        let mut params = vec![self.expect_number()?];
        while self.peek().kind == TokenKind::Comma {
            self.bump();
            params.push(self.expect_number()?);
        }
        self.expect_punct(TokenKind::RParen)?;
        let expected = match shape {
            ShapeKind::Tri => 3,
            ShapeKind::Trap => 4,
        };
        if params.len() != expected {
            self.diags.push(Diagnostic::error(
                shape_tok.pos,
                Code::WrongArity,
                format!(
                    "`{}` takes {expected} parameters, found {}",
                    if shape == ShapeKind::Tri { "tri" } else { "trap" },
                    params.len()
                ),
            ));
            return Err(());
        }
        Ok(SetDecl {
            name,
            shape: Spanned {
                value: shape,
                pos: shape_tok.pos,
            },
            params,
        })
    }

    fn parse_clause(&mut self) -> PResult<(Spanned<String>, Spanned<String>)> {
        let var = self.expect_ident("a variable name")?;
        self.expect_keyword("is")?;
        let set = self.expect_ident("a set name")?;
        Ok((var, set))
    }

    fn parse_rule(&mut self) -> PResult<RuleAst> {
        self.bump();
        let id = self.expect_ident("a rule id")?;
        self.expect_punct(TokenKind::Colon)?;
        self.expect_keyword("if")?;
        let antecedent = self.parse_clause()?;
        if self.at_keyword("and") || self.at_keyword("or") {
            self.diags.push(Diagnostic::error(
                self.peek().pos,
                Code::CompoundAntecedent,
                "rules take a single `<variable> IS <set>` antecedent",
            ));
            return Err(());
        }
        self.expect_keyword("then")?;
        let consequent = self.parse_clause()?;
        Ok(RuleAst {
            id,
            antecedent,
            consequent,
        })
    }
}

/// Parses a token stream. Returns the tree and any syntax diagnostics.
pub fn parse_tokens(tokens: &[Token]) -> (FileAst, Vec<Diagnostic>) {
    let mut p = Parser {
        tokens,
        idx: 0,
        diags: Vec::new(),
        saw_system: false,
    };
    let file = p.parse_file();
    if !p.saw_system {
        p.diags.push(Diagnostic::error(
            Pos::START,
            Code::MissingSystem,
            "missing `system <name>` declaration",
        ));
    }
    (file, p.diags)
}

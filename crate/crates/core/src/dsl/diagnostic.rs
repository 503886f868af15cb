use std::fmt;

use crate::engine::ViolationCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

/// 1-based line and column (columns count characters, not bytes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub const START: Pos = Pos { line: 1, column: 1 };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Code {
    // lexical
    InvalidCharacter,
    InvalidNumber,
    UnterminatedString,
    // syntax
    UnexpectedToken,
    UnexpectedEof,
    WrongArity,
    CompoundAntecedent,
    MissingSystem,
    DuplicateSystem,
    // semantic
    Semantic(ViolationCode),
    // warnings
    UnusedSet,
}

impl Code {
    pub fn as_str(&self) -> &'static str {
        match self {
            Code::InvalidCharacter => "invalid-character",
            Code::InvalidNumber => "invalid-number",
            Code::UnterminatedString => "unterminated-string",
            Code::UnexpectedToken => "unexpected-token",
            Code::UnexpectedEof => "unexpected-eof",
            Code::WrongArity => "wrong-arity",
            Code::CompoundAntecedent => "compound-antecedent",
            Code::MissingSystem => "missing-system",
            Code::DuplicateSystem => "duplicate-system",
            Code::Semantic(v) => v.as_str(),
            Code::UnusedSet => "unused-set",
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub pos: Pos,
    pub code: Code,
    pub message: String,
}

impl Diagnostic {
    pub fn error(pos: Pos, code: Code, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            pos,
            code,
            message: message.into(),
        }
    }

    pub fn warning(pos: Pos, code: Code, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            pos,
            code,
            message: message.into(),
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }

    /// `file:line:col: code: message`
    pub fn render(&self, file: &str) -> String {
        format!("{file}:{self}")
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.severity {
            Severity::Error => "",
            Severity::Warning => "warning: ",
        };
        write!(
            f,
            "{}:{}: {}: {}{}",
            self.pos.line, self.pos.column, self.code, prefix, self.message
        )
    }
}

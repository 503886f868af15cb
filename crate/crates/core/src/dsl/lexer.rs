use super::diagnostic::{Code, Diagnostic, Pos};

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Ident(String),
    Number(f64),
    Str(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Colon,
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("`{s}`"),
            TokenKind::Number(n) => format!("number {n}"),
            TokenKind::Str(s) => format!("string \"{s}\""),
            TokenKind::LBrace => "`{`".into(),
            TokenKind::RBrace => "`}`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Colon => "`:`".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Pos,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
    /// Position of the last character consumed, if any.
    last: Option<Pos>,
}

impl<'a> Cursor<'a> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        self.last = Some(self.pos);
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn eat_while(&mut self, out: &mut String, pred: impl Fn(char) -> bool) {
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            out.push(c);
            self.bump();
        }
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits `text` into tokens. Lexical problems are reported and the offending
/// characters skipped, so the token stream is always usable. The final token
/// is `Eof`, positioned on the last non-blank character (or 1:1 when there is
/// none) so that it always lies inside the source.
pub fn tokenize(text: &str) -> (Vec<Token>, Vec<Diagnostic>) {
    let mut cur = Cursor {
        chars: text.chars().peekable(),
        pos: Pos::START,
        last: None,
    };
    let mut tokens = Vec::new();
    let mut diags = Vec::new();
    let mut last_visible = None;

    while let Some(c) = cur.peek() {
        let start = cur.pos;
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c == '#' {
            while let Some(c) = cur.peek() {
                if c == '\n' {
                    break;
                }
                cur.bump();
            }
            continue;
        }
        let kind = match c {
            '{' | '}' | '(' | ')' | ',' | ':' => {
                cur.bump();
                Some(match c {
                    '{' => TokenKind::LBrace,
                    '}' => TokenKind::RBrace,
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    ',' => TokenKind::Comma,
                    _ => TokenKind::Colon,
                })
            }
            '"' => {
                cur.bump();
                let mut s = String::new();
                cur.eat_while(&mut s, |c| c != '"' && c != '\n');
                if cur.peek() == Some('"') {
                    cur.bump();
                    Some(TokenKind::Str(s))
                } else {
                    diags.push(Diagnostic::error(
                        start,
                        Code::UnterminatedString,
                        "string literal is not closed before the end of the line",
                    ));
                    None
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                cur.eat_while(&mut s, is_ident_char);
                Some(TokenKind::Ident(s))
            }
            c if c.is_ascii_digit() || c == '-' || c == '+' => lex_number(&mut cur, start, &mut diags),
            other => {
                cur.bump();
                diags.push(Diagnostic::error(
                    start,
                    Code::InvalidCharacter,
                    format!("unexpected character `{}`", other.escape_default()),
                ));
                None
            }
        };
        if let Some(kind) = kind {
            tokens.push(Token { kind, pos: start });
        }
        last_visible = cur.last;
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        pos: last_visible.unwrap_or(Pos::START),
    });
    (tokens, diags)
}

fn lex_number(cur: &mut Cursor<'_>, start: Pos, diags: &mut Vec<Diagnostic>) -> Option<TokenKind> {
    let mut s = String::new();
    if let Some(sign @ ('-' | '+')) = cur.peek() {
        s.push(sign);
        cur.bump();
    }
    let int_start = s.len();
    cur.eat_while(&mut s, |c| c.is_ascii_digit());
    let mut ok = s.len() > int_start;
    if ok && cur.peek() == Some('.') {
        s.push('.');
        cur.bump();
        let frac_start = s.len();
        cur.eat_while(&mut s, |c| c.is_ascii_digit());
        ok = s.len() > frac_start;
    }
    // Trailing junk glued to the literal (`12cm`, `1.2.3`) makes it invalid.
    let before = s.len();
    cur.eat_while(&mut s, |c| is_ident_char(c) || c == '.');
    if s.len() > before {
        ok = false;
    }
    match s.parse::<f64>() {
        Ok(v) if ok && v.is_finite() => Some(TokenKind::Number(v)),
        _ => {
            diags.push(Diagnostic::error(
                start,
                Code::InvalidNumber,
                format!("`{s}` is not a valid number"),
            ));
            None
        }
    }
}
